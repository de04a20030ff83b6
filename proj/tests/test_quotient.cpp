#include <doctest.h>

#include "corpus.hpp"
#include "fractiso/quotient.hpp"
#include "fractiso/refinement.hpp"

using namespace fractiso;
using namespace fractiso::testing;

TEST_SUITE("quotient") {

TEST_CASE("conditional expectation examples") {
    const StepKernel k2 = graph_to_graphon(FiniteGraph(2, {{0, 1}}));
    SUBCASE("discrete coloring leaves the kernel unchanged") {
        CHECK(conditional_expectation(k2, Coloring::discrete(2)) == k2);
    }
    SUBCASE("trivial coloring of K2 averages to the constant 1/2") {
        const StepKernel avg = conditional_expectation(k2, Coloring::trivial(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(avg.value(i, j) == Ratio(1, 2));
    }
    SUBCASE("constant kernels are fixed") {
        const StepKernel q = constant_kernel(Ratio(2, 7));
        CHECK(conditional_expectation(q, Coloring::trivial(1)) == q);
    }
    SUBCASE("non-invariant colorings are refused") {
        const StepKernel star = graph_to_graphon(star_graph(3));
        CHECK_THROWS_AS(conditional_expectation(star, Coloring::trivial(4)), error);
        try {
            conditional_expectation(star, Coloring::trivial(4));
        } catch (const error& e) {
            CHECK(e.code() == errc::not_invariant);
        }
    }
}

TEST_CASE("fixpoint quotient of K1,3") {
    const StepKernel w = graph_to_graphon(star_graph(3));
    const QuotientResult q = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
    REQUIRE(q.quotient.class_count() == 2);
    // canonical order sorts the leaf signature first
    CHECK(q.quotient.masses() == RatioVec{Ratio(3, 4), Ratio(1, 4)});
    CHECK(q.quotient.value(0, 1) == Ratio(1));
    CHECK(q.quotient.value(1, 0) == Ratio(1));
    CHECK(q.quotient.value(0, 0) == Ratio(0));
    CHECK(q.quotient.value(1, 1) == Ratio(0));
    CHECK(q.lift_map == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("fixpoint quotient of 2xK3 is the constant 1/3 singleton") {
    const StepKernel w = graph_to_graphon(two_triangles());
    const QuotientResult q = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
    CHECK(q.quotient.class_count() == 1);
    CHECK(q.quotient.mass(0) == Ratio(1));
    CHECK(q.quotient.value(0, 0) == Ratio(1, 3));
}

TEST_CASE("discrete quotient reproduces the kernel up to canonical order") {
    const StepKernel w = three_class_base();
    const QuotientResult q = quotient_kernel(w, Coloring::discrete(3));
    REQUIRE(q.quotient.class_count() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(q.quotient.value(q.lift_map[static_cast<std::size_t>(i)],
                                   q.lift_map[static_cast<std::size_t>(j)]) == w.value(i, j));
}

TEST_CASE("kernel_from_didm") {
    SUBCASE("constant graphon: one atom with value q") {
        const StepKernel w = constant_kernel(Ratio(3, 7));
        const StepKernel u = kernel_from_didm(didm(w, 0), w);
        CHECK(u.class_count() == 1);
        CHECK(u.value(0, 0) == Ratio(3, 7));
    }
    SUBCASE("K1,3: degree into cell over cell mass gives 1") {
        const StepKernel w = graph_to_graphon(star_graph(3));
        const StepKernel u = kernel_from_didm(didm(w, 1), w);
        REQUIRE(u.class_count() == 2);
        CHECK(u.value(0, 1) == Ratio(1));
        CHECK(u.value(1, 1) == Ratio(0));
    }
    SUBCASE("C6: single 1/3 atom") {
        const StepKernel w = graph_to_graphon(cycle_graph(6));
        const StepKernel u = kernel_from_didm(didm(w, 0), w);
        CHECK(u.class_count() == 1);
        CHECK(u.value(0, 0) == Ratio(1, 3));
    }
    SUBCASE("wrong-level didm is rejected") {
        const StepKernel w = graph_to_graphon(star_graph(3));
        CHECK_THROWS_AS(kernel_from_didm(didm(w, 0), w), error);
        try {
            kernel_from_didm(didm(w, 0), w);
        } catch (const error& e) {
            CHECK(e.code() == errc::inconsistent_didm);
        }
    }
    SUBCASE("didm of a different kernel is rejected") {
        const StepKernel w = graph_to_graphon(star_graph(3));
        const StepKernel v = graph_to_graphon(cycle_graph(5));
        CHECK_THROWS_AS(kernel_from_didm(didm(v, 1), w), error);
    }
}

TEST_CASE("quotients_isomorphic") {
    const StepKernel c6 = graph_to_graphon(cycle_graph(6));
    const StepKernel tt = graph_to_graphon(two_triangles());
    const StepKernel c5 = graph_to_graphon(cycle_graph(5));

    const QuotientIso pos = quotients_isomorphic(c6, tt);
    CHECK(pos.isomorphic);
    REQUIRE(pos.matching.has_value());
    CHECK(pos.matching->size() == 1);

    CHECK_FALSE(quotients_isomorphic(c6, c5).isomorphic);

    // permuted class order of the same graph
    const StepKernel star = graph_to_graphon(star_graph(3));
    const StepKernel star_permuted = graph_to_graphon(FiniteGraph(4, {{3, 0}, {3, 1}, {3, 2}}));
    const QuotientIso relabeled = quotients_isomorphic(star, star_permuted);
    CHECK(relabeled.isomorphic);

    CHECK_THROWS_AS(quotients_isomorphic(make_kernel({"1/2", "1/2"}, {{"0", "1"}, {"1/2", "0"}}, false), c6),
                    error);
}

TEST_CASE("intertwining: averaging then quotient operator equals operator then averaging") {
    std::uint64_t state = 1234;
    auto next_vec = [&state](int k) {
        RatioVec f;
        for (int i = 0; i < k; ++i) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            f.push_back(Ratio(static_cast<long>((state >> 33) % 19) - 9, 1 + static_cast<long>((state >> 51) % 6)));
        }
        return f;
    };
    for (const CorpusEntry& entry : acceptance_corpus()) {
        if (!entry.kernel.symmetric() || entry.kernel.class_count() > 6) continue;
        const StepKernel& w = entry.kernel;
        const Coloring c = refinement_fixpoint(w).fixpoint();
        const QuotientResult q = quotient_kernel(w, c);
        const RatioVec f = next_vec(w.class_count());

        // average to colors through the lift map
        auto average = [&](const RatioVec& vec) {
            RatioVec avg(static_cast<std::size_t>(q.quotient.class_count()));
            for (int i = 0; i < w.class_count(); ++i)
                avg[static_cast<std::size_t>(q.lift_map[static_cast<std::size_t>(i)])] +=
                    w.mass(i) * vec[static_cast<std::size_t>(i)];
            for (int g = 0; g < q.quotient.class_count(); ++g)
                avg[static_cast<std::size_t>(g)] /= q.quotient.mass(g);
            return avg;
        };
        CHECK(q.quotient.apply(average(f)) == average(w.apply(f)));
    }
}

TEST_CASE("quotienting a fixpoint quotient is the identity") {
    for (const CorpusEntry& entry : acceptance_corpus()) {
        if (entry.kernel.class_count() > 6) continue;
        const StepKernel q = quotient_kernel(entry.kernel, refinement_fixpoint(entry.kernel).fixpoint()).quotient;
        const QuotientResult again = quotient_kernel(q, refinement_fixpoint(q).fixpoint());
        CAPTURE(entry.name);
        CHECK(again.quotient == q);
    }
}

TEST_CASE("per-color degrees survive quotienting") {
    for (const CorpusEntry& entry : acceptance_corpus()) {
        if (entry.kernel.class_count() > 6) continue;
        const StepKernel& w = entry.kernel;
        const QuotientResult q = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
        for (int i = 0; i < w.class_count(); ++i)
            CHECK(w.degree(i) == q.quotient.degree(q.lift_map[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("kernel_from_didm equals the fixpoint quotient on the whole corpus") {
    for (const CorpusEntry& entry : acceptance_corpus()) {
        const StepKernel& w = entry.kernel;
        const int level = refinement_fixpoint(w).stabilized_at;
        const StepKernel via_didm = kernel_from_didm(didm(w, level), w);
        const QuotientResult via_coloring = quotient_kernel(w, refinement_fixpoint(w).fixpoint());
        CAPTURE(entry.name);
        CHECK(via_didm == via_coloring.quotient);
    }
}

} // TEST_SUITE
