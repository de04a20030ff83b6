#include "fractiso/io.hpp"

#include <cstdlib>
#include <future>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fractiso/markov.hpp"

namespace fractiso {

using ordered_json = nlohmann::ordered_json;

namespace {

Ratio scalar_from_json(const ordered_json& v) {
    if (v.is_number_integer()) return Ratio(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_unsigned()) return Ratio(mpq_class(mpz_class(std::to_string(v.get<std::uint64_t>()), 10)));
    if (v.is_string()) return Ratio::parse(v.get<std::string>());
    if (v.is_number_float())
        fail(errc::parse_error, "non-integer JSON numbers are inexact; write the scalar as a \"p/q\" or decimal string");
    fail(errc::parse_error, "expected a scalar, got " + std::string(v.type_name()));
}

ordered_json parse_document(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) fail(errc::parse_error, "malformed JSON");
    return doc;
}

void check_class_cap(std::size_t classes) {
    if (classes > static_cast<std::size_t>(max_classes_cap()))
        fail(errc::limit_exceeded, "input has " + std::to_string(classes) + " classes, cap is " +
                                       std::to_string(max_classes_cap()) + " (FRACTISO_MAX_CLASSES)");
}

ordered_json kernel_json(const StepKernel& w) {
    ordered_json doc;
    ordered_json masses = ordered_json::array();
    for (const Ratio& m : w.masses()) masses.push_back(m.str());
    ordered_json matrix = ordered_json::array();
    for (const RatioVec& row : w.values()) {
        ordered_json r = ordered_json::array();
        for (const Ratio& v : row) r.push_back(v.str());
        matrix.push_back(std::move(r));
    }
    doc["masses"] = std::move(masses);
    doc["matrix"] = std::move(matrix);
    doc["symmetric"] = w.symmetric();
    return doc;
}

StepKernel kernel_from_json(const ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("masses") || !doc.contains("matrix") || !doc.contains("symmetric"))
        fail(errc::parse_error, "kernel file needs masses, matrix and symmetric fields");
    if (!doc["masses"].is_array() || !doc["matrix"].is_array() || !doc["symmetric"].is_boolean())
        fail(errc::parse_error, "kernel file field types are wrong");
    check_class_cap(doc["masses"].size());
    RatioVec masses;
    for (const auto& v : doc["masses"]) masses.push_back(scalar_from_json(v));
    RatioMat values;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) fail(errc::parse_error, "matrix rows must be arrays");
        RatioVec r;
        for (const auto& v : row) r.push_back(scalar_from_json(v));
        values.push_back(std::move(r));
    }
    return StepKernel::create(std::move(masses), std::move(values), doc["symmetric"].get<bool>());
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json trace_json(const RefinementTrace& trace, bool symmetric) {
    ordered_json doc;
    ordered_json levels = ordered_json::array();
    for (const Coloring& c : trace.levels) levels.push_back(c.colors());
    doc["levels"] = std::move(levels);
    doc["stabilized_at"] = trace.stabilized_at;
    doc["colors"] = trace.fixpoint().color_count();
    doc["symmetric"] = symmetric;
    return doc;
}

ordered_json quotient_json(const QuotientResult& q) {
    ordered_json doc = kernel_json(q.quotient);
    doc["lift_map"] = q.lift_map;
    ordered_json labels = ordered_json::array();
    for (const IdmSignature& s : q.signature_labels) labels.push_back(s.key());
    doc["signature_labels"] = std::move(labels);
    return doc;
}

ordered_json didm_json(const Didm& d) {
    ordered_json atoms = ordered_json::array();
    for (const auto& [sig, mass] : d.atoms) {
        ordered_json atom;
        atom["signature"] = sig.key();
        atom["mass"] = mass.str();
        atoms.push_back(std::move(atom));
    }
    ordered_json doc;
    doc["level"] = d.level;
    doc["atoms"] = std::move(atoms);
    return doc;
}

} // namespace

int max_classes_cap() {
    if (const char* env = std::getenv("FRACTISO_MAX_CLASSES")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end && *end == '\0' && cap > 0) return static_cast<int>(cap);
    }
    return 512;
}

StepKernel parse_kernel_json(const std::string& text) { return kernel_from_json(parse_document(text)); }

std::string kernel_to_json(const StepKernel& w) { return dump(kernel_json(w)); }

FiniteGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string head;
    long n = 0;
    if (!(in >> head) || head != "n" || !(in >> n) || n < 1)
        fail(errc::parse_error, "edge list must start with a \"n <count>\" header");
    check_class_cap(static_cast<std::size_t>(n));
    std::vector<std::pair<int, int>> edges;
    long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) fail(errc::parse_error, "dangling edge endpoint");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) fail(errc::parse_error, "unreadable token in edge list");
    return FiniteGraph(static_cast<int>(n), std::move(edges));
}

std::string quotient_to_json(const QuotientResult& q) { return dump(quotient_json(q)); }

BlowupPlan parse_plan_json(const std::string& text) {
    const ordered_json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("base") || !doc.contains("splits") || !doc.contains("seeds"))
        fail(errc::parse_error, "plan file needs base, splits and seeds fields");
    StepKernel base = kernel_from_json(doc["base"]);
    if (!doc["splits"].is_array()) fail(errc::parse_error, "splits must be an array");
    std::vector<int> splits;
    long total = 0;
    for (const auto& v : doc["splits"]) {
        if (!v.is_number_integer() && !v.is_number_unsigned()) fail(errc::parse_error, "splits must be integers");
        splits.push_back(v.get<int>());
        total += splits.back();
    }
    check_class_cap(static_cast<std::size_t>(total < 0 ? 0 : total));
    if (!doc["seeds"].is_array()) fail(errc::parse_error, "seeds must be a table");
    std::vector<std::vector<std::uint64_t>> seeds;
    for (const auto& row : doc["seeds"]) {
        if (!row.is_array()) fail(errc::parse_error, "seeds must be a table");
        std::vector<std::uint64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer() && !v.is_number_unsigned()) fail(errc::parse_error, "seeds must be integers");
            r.push_back(v.get<std::uint64_t>());
        }
        seeds.push_back(std::move(r));
    }
    return make_plan(std::move(base), std::move(splits), std::move(seeds));
}

std::string plan_to_json(const BlowupPlan& plan) {
    ordered_json doc;
    doc["base"] = kernel_json(plan.base);
    doc["splits"] = plan.splits;
    doc["seeds"] = plan.block_seeds;
    return dump(doc);
}

std::string trace_to_json(const RefinementTrace& trace, bool symmetric) { return dump(trace_json(trace, symmetric)); }

FisoReport run_fiso(const StepKernel& a, const StepKernel& b, const FisoOptions& options) {
    if (!a.symmetric() || !b.symmetric())
        fail(errc::asymmetric_kernel, "fractional isomorphism is decided for graphons");

    FisoReport report;
    report.witness_bound = options.witness_bound;

    report.didm = didm_equal(a, b);
    report.verdict = report.didm.equal;
    report.trace_a = refinement_fixpoint(a);
    report.trace_b = refinement_fixpoint(b);
    report.didm_a = didm(a, report.trace_a->stabilized_at);
    report.didm_b = didm(b, report.trace_b->stabilized_at);
    report.quotient_a = quotient_kernel(a, report.trace_a->fixpoint());
    report.quotient_b = quotient_kernel(b, report.trace_b->fixpoint());

    auto quotient_task = [&]() { return quotients_isomorphic(a, b); };
    auto intertwiner_task = [&]() { return build_intertwiner(a, b); };
    auto witness_task = [&]() { return find_witness_tree(a, b, options.witness_bound); };

    std::optional<QuotientIso> iso;
    std::optional<std::optional<MarkovKernel>> built;
    std::optional<std::optional<RootedTree>> witness;
    if (options.parallel) {
        std::future<QuotientIso> fq;
        std::future<std::optional<MarkovKernel>> fi;
        std::future<std::optional<RootedTree>> fw;
        if (options.run_quotient) fq = std::async(std::launch::async, quotient_task);
        if (options.run_intertwiner) fi = std::async(std::launch::async, intertwiner_task);
        if (options.run_witness) fw = std::async(std::launch::async, witness_task);
        if (fq.valid()) iso = fq.get();
        if (fi.valid()) built = fi.get();
        if (fw.valid()) witness = fw.get();
    } else {
        if (options.run_quotient) iso = quotient_task();
        if (options.run_intertwiner) built = intertwiner_task();
        if (options.run_witness) witness = witness_task();
    }

    if (iso) {
        report.quotient = *iso;
        if (iso->isomorphic != report.verdict)
            throw std::logic_error("oracle disagreement: quotient isomorphism vs DIDM equality");
    }
    if (built) {
        report.intertwiner_built = built->has_value();
        if (built->has_value()) report.intertwiner_verified = verify_intertwiner(**built, a, b);
        if (report.intertwiner_built != report.verdict ||
            (report.intertwiner_verified && !*report.intertwiner_verified))
            throw std::logic_error("oracle disagreement: intertwiner construction vs DIDM equality");
    }
    if (witness) {
        report.witness_ran = true;
        report.witness = *witness;
        if (report.witness.has_value()) {
            if (report.verdict)
                throw std::logic_error("oracle disagreement: witness tree found for DIDM-equal kernels");
            report.witness_densities = {tree_density(a, *report.witness), tree_density(b, *report.witness)};
        }
        // an absent witness under the bound is an abstention, not a verdict
    }
    return report;
}

std::string fiso_report_to_json(const FisoReport& report) {
    ordered_json doc;
    doc["verdict"] = report.verdict;

    ordered_json oracles;
    ordered_json didm_doc;
    didm_doc["equal"] = report.didm.equal;
    if (report.didm.distinguishing_level) didm_doc["distinguishing_level"] = *report.didm.distinguishing_level;
    else didm_doc["distinguishing_level"] = nullptr;
    didm_doc["levels_compared"] = report.didm.levels_compared;
    didm_doc["a"] = didm_json(report.didm_a);
    didm_doc["b"] = didm_json(report.didm_b);
    oracles["didm"] = std::move(didm_doc);

    ordered_json qdoc;
    if (report.quotient) {
        qdoc["ran"] = true;
        qdoc["isomorphic"] = report.quotient->isomorphic;
        if (report.quotient->matching) {
            ordered_json pairs = ordered_json::array();
            for (auto [x, y] : *report.quotient->matching) pairs.push_back(ordered_json::array({x, y}));
            qdoc["matching"] = std::move(pairs);
        } else {
            qdoc["matching"] = nullptr;
        }
    } else {
        qdoc["ran"] = false;
    }
    oracles["quotient_isomorphism"] = std::move(qdoc);

    ordered_json idoc;
    if (report.intertwiner_built) {
        idoc["ran"] = true;
        idoc["built"] = *report.intertwiner_built;
        if (report.intertwiner_verified) idoc["verified"] = *report.intertwiner_verified;
        else idoc["verified"] = nullptr;
    } else {
        idoc["ran"] = false;
    }
    oracles["intertwiner"] = std::move(idoc);

    ordered_json wdoc;
    wdoc["ran"] = report.witness_ran;
    wdoc["bound"] = report.witness_bound;
    if (report.witness_ran) {
        if (report.witness) {
            wdoc["tree"] = report.witness->key();
            wdoc["density_a"] = report.witness_densities->first.str();
            wdoc["density_b"] = report.witness_densities->second.str();
        } else {
            wdoc["tree"] = nullptr;
        }
    }
    oracles["witness_tree"] = std::move(wdoc);
    doc["oracles"] = std::move(oracles);

    ordered_json refinement;
    refinement["a"] = trace_json(*report.trace_a, true);
    refinement["b"] = trace_json(*report.trace_b, true);
    doc["refinement"] = std::move(refinement);

    ordered_json quotients;
    quotients["a"] = quotient_json(*report.quotient_a);
    quotients["b"] = quotient_json(*report.quotient_b);
    doc["quotients"] = std::move(quotients);

    return dump(doc);
}

} // namespace fractiso
