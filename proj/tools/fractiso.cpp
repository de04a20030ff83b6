// Command line surface for the fractional isomorphism toolkit. Exit codes
// for `fiso`: 0 = fractionally isomorphic, 1 = not, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fractiso/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fractiso::fail(fractiso::errc::parse_error, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fractiso::fail(fractiso::errc::parse_error, "cannot write " + out_path);
    out << text;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    using namespace fractiso;

    CLI::App app{"Exact fractional isomorphism of step graphons"};
    app.require_subcommand(1);

    std::string file_a, file_b, input, out_path, tree_text, skip_csv, plan_path, base_path, splits_csv, plan_out;
    int witness_bound = 8;
    int all_up_to = 0;
    std::uint64_t master_seed = 0;
    bool parallel = false;
    bool in_degrees = false;

    auto* convert = app.add_subcommand("convert", "Convert a graph edge list to its graphon kernel file");
    convert->add_option("input", input, "edge list file (header \"n <count>\", 0-based \"u v\" lines)")->required();
    convert->add_option("--out", out_path, "output path (stdout by default)");

    auto* fiso = app.add_subcommand("fiso", "Decide fractional isomorphism of two kernel files");
    fiso->add_option("a", file_a, "first kernel file")->required();
    fiso->add_option("b", file_b, "second kernel file")->required();
    fiso->add_option("--witness-bound", witness_bound, "max free-tree vertices for the witness search")
        ->default_val(8);
    fiso->add_option("--skip", skip_csv, "comma list of oracles to skip: quotient,intertwiner,witness");
    fiso->add_option("--out", out_path, "report path (stdout by default)");
    fiso->add_flag("--parallel", parallel, "run the cross-check oracles concurrently");

    auto* refine = app.add_subcommand("refine", "Emit the refinement trace of a kernel file");
    refine->add_option("input", input, "kernel file")->required();
    refine->add_option("--out", out_path, "output path (stdout by default)");
    refine->add_flag("--in-degrees", in_degrees, "augment keys with in-degrees (asymmetric kernels)");

    auto* quotient = app.add_subcommand("quotient", "Emit the fixpoint quotient of a kernel file");
    quotient->add_option("input", input, "kernel file")->required();
    quotient->add_option("--out", out_path, "output path (stdout by default)");

    auto* treedensity = app.add_subcommand("treedensity", "Print exact tree homomorphism densities");
    treedensity->add_option("input", input, "kernel file")->required();
    treedensity->add_option("--tree", tree_text, "tree in balanced parentheses, e.g. \"(())\"");
    treedensity->add_option("--all-up-to", all_up_to, "print densities for all free trees up to this size");
    treedensity->add_option("--out", out_path, "output path (stdout by default)");

    auto* blowup_cmd = app.add_subcommand("blowup", "Generate a biregular blowup of a base kernel");
    blowup_cmd->add_option("--plan", plan_path, "plan file {base, splits, seeds}");
    blowup_cmd->add_option("--base", base_path, "base kernel file (with --splits and --seed)");
    blowup_cmd->add_option("--splits", splits_csv, "per-class sub-class counts, e.g. 2,3,1");
    blowup_cmd->add_option("--seed", master_seed, "master seed for the derived block-seed table");
    blowup_cmd->add_option("--emit-plan", plan_out, "also write the resolved plan file");
    blowup_cmd->add_option("--out", out_path, "output kernel path (stdout by default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) {
            const FiniteGraph g = parse_edge_list(read_file(input));
            emit(kernel_to_json(graph_to_graphon(g)), out_path);
            return 0;
        }
        if (fiso->parsed()) {
            const StepKernel a = parse_kernel_json(read_file(file_a));
            const StepKernel b = parse_kernel_json(read_file(file_b));
            FisoOptions options;
            options.witness_bound = witness_bound;
            options.parallel = parallel;
            std::stringstream skip(skip_csv);
            std::string oracle;
            while (std::getline(skip, oracle, ',')) {
                if (oracle == "quotient") options.run_quotient = false;
                else if (oracle == "intertwiner") options.run_intertwiner = false;
                else if (oracle == "witness") options.run_witness = false;
                else if (!oracle.empty()) fail(errc::parse_error, "unknown oracle '" + oracle + "' in --skip");
            }
            const FisoReport report = run_fiso(a, b, options);
            emit(fiso_report_to_json(report), out_path);
            return report.verdict ? 0 : 1;
        }
        if (refine->parsed()) {
            const StepKernel w = parse_kernel_json(read_file(input));
            const RefineMode mode = in_degrees ? RefineMode::out_and_in_degree : RefineMode::out_degree;
            emit(trace_to_json(refinement_fixpoint(w, mode), w.symmetric()), out_path);
            return 0;
        }
        if (quotient->parsed()) {
            const StepKernel w = parse_kernel_json(read_file(input));
            emit(quotient_to_json(quotient_kernel(w, refinement_fixpoint(w).fixpoint())), out_path);
            return 0;
        }
        if (treedensity->parsed()) {
            const StepKernel w = parse_kernel_json(read_file(input));
            std::string lines;
            if (!tree_text.empty()) {
                lines = tree_density(w, RootedTree::parse(tree_text)).str() + "\n";
            } else if (all_up_to > 0) {
                for (const RootedTree& t : enumerate_free_trees(all_up_to))
                    lines += t.key() + " " + tree_density(w, t).str() + "\n";
            } else {
                fail(errc::parse_error, "treedensity needs --tree or --all-up-to");
            }
            emit(lines, out_path);
            return 0;
        }
        if (blowup_cmd->parsed()) {
            std::optional<BlowupPlan> plan;
            if (!plan_path.empty()) {
                plan = parse_plan_json(read_file(plan_path));
            } else if (!base_path.empty() && !splits_csv.empty()) {
                StepKernel base = parse_kernel_json(read_file(base_path));
                std::vector<int> splits = parse_int_list(splits_csv);
                auto seeds = derive_seed_table(master_seed, base.class_count());
                plan = make_plan(std::move(base), std::move(splits), std::move(seeds));
            } else {
                fail(errc::parse_error, "blowup needs --plan or --base with --splits");
            }
            if (!plan_out.empty()) emit(plan_to_json(*plan), plan_out);
            emit(kernel_to_json(blowup(*plan)), out_path);
            return 0;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
