#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "flowroots/analyzer.hpp"
#include "flowroots/canonical.hpp"
#include "flowroots/corpus.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/flow.hpp"
#include "flowroots/rational.hpp"
#include "flowroots/structure.hpp"
#include "flowroots/theta.hpp"
#include "test_support.hpp"

using namespace flowroots;
using namespace testsupport;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

CorpusOptions capped(int vertices, int edges) {
    CorpusOptions options;
    options.max_vertices = vertices;
    options.max_edges = edges;
    return options;
}

} // namespace

TEST_CASE("corpus generation is exhaustive, deduplicated and ordered") {
    CHECK(default_corpus(capped(1, 11)).size() == 1);  // the single vertex
    CHECK(default_corpus(capped(2, 11)).size() == 3);  // plus Z_2 and Z_3
    // on three vertices: 10 triangle multiplicity multisets, 3 doubled
    // paths, Z_2, Z_3 and the single vertex
    CHECK(default_corpus(capped(3, 9)).size() == 16);

    auto corpus = default_corpus(capped(4, 9));
    std::set<std::string> codes;
    std::string previous;
    for (const auto& g : corpus) {
        auto summary = structural_summary(g);
        CHECK(summary.connected);
        CHECK(summary.bridges.empty());
        CHECK(g.vertex_count() <= 4);
        CHECK(g.edge_count() <= 9);
        CHECK(g.loop_count() == 0);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w = u + 1; w < g.vertex_count(); ++w) {
                int mult = 0;
                for (const auto& [a, b] : g.edges())
                    if (a == u && b == w) ++mult;
                CHECK(mult <= 3);
            }
        std::string code = canonical_code(g);
        CHECK(codes.insert(code).second);  // no isomorphic duplicates
        CHECK(previous < code);            // canonical-code order
        previous = code;
    }
    CHECK(codes.count(canonical_code(triangle())) == 1);
    CHECK(codes.count(canonical_code(z_graph(3))) == 1);
    CHECK(codes.count(canonical_code(dt())) == 1);
    CHECK(codes.count(canonical_code(k4())) == 1);
    CHECK(codes.count(canonical_code(fig5b())) == 1);
    CHECK(codes.count(canonical_code(loop_graph())) == 0);
    CHECK(codes.count(canonical_code(k2())) == 0);

    CHECK_THROWS_AS(default_corpus(capped(0, 5)), DomainError);
    CorpusOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(default_corpus(tiny), BudgetError);
}

TEST_CASE("random corpus samples are reproducible and bridgeless") {
    CorpusOptions options = capped(2, 11);
    options.random_samples = 6;
    options.seed = 7;
    options.random_vertices = 6;
    options.random_edges = 10;
    auto sampled = default_corpus(options);
    CHECK(sampled.size() > 3);   // the exhaustive part plus fresh samples
    CHECK(sampled.size() <= 9);  // at most six extras
    for (const auto& g : sampled) {
        auto summary = structural_summary(g);
        CHECK(summary.connected);
        CHECK(summary.bridges.empty());
    }
    auto again = default_corpus(options);
    REQUIRE(sampled.size() == again.size());
    for (std::size_t i = 0; i < sampled.size(); ++i)
        CHECK(canonical_code(sampled[i]) == canonical_code(again[i]));

    options.random_vertices = 2;  // samples need at least a triangle
    CHECK_THROWS_AS(default_corpus(options), DomainError);
}

TEST_CASE("root profiles of the named graphs") {
    FlowEngine engine;

    RootProfile k4p = roots_profile(engine, k4());
    CHECK(k4p.degree == 3);
    CHECK(k4p.all_real);
    CHECK(k4p.subset_123);
    CHECK(k4p.t == 0);
    CHECK(k4p.roots_in_open_12.empty());
    CHECK(k4p.omega_low == 0);
    CHECK(k4p.omega_high == 0);
    CHECK(k4p.mult_at_1 == 1);
    CHECK(k4p.mult_at_2 == 1);
    CHECK(k4p.mult_at_3 == 1);
    CHECK(k4p.real_root_count == 3);

    RootProfile dtp = roots_profile(engine, dt());
    CHECK(dtp.degree == 4);
    CHECK_FALSE(dtp.all_real);
    CHECK_FALSE(dtp.subset_123);
    CHECK(dtp.t == 1);
    REQUIRE(dtp.roots_in_open_12.size() == 1);
    CHECK(starts_with(dtp.roots_in_open_12[0].approx, "1.430159709"));
    // omega = 2 - 1.430159709... = 0.569840290...
    CHECK(dtp.omega_low > parse_rational("0.569840290"));
    CHECK(dtp.omega_high < parse_rational("0.569840291"));
    CHECK(dtp.omega_high - dtp.omega_low <= dtp.t * default_root_tolerance());
    CHECK(dtp.mult_at_1 == 1);
    CHECK(dtp.mult_at_2 == 0);
    CHECK(dtp.real_root_count == 2);  // 1 and the cubic's real root

    RootProfile z3p = roots_profile(engine, z_graph(3));
    CHECK(z3p.all_real);
    CHECK(z3p.subset_123);
    CHECK(z3p.t == 0);

    RootProfile f5p = roots_profile(engine, fig5b());
    CHECK_FALSE(f5p.all_real);
    CHECK_FALSE(f5p.subset_123);
    CHECK(f5p.t == 1);
    CHECK(f5p.mult_at_1 == 1);
    CHECK(f5p.mult_at_2 == 2);
    CHECK(f5p.degree == 6);

    // Petersen: reals 1,2,3,4 plus one complex pair, nothing in (1,2)
    RootProfile pet = roots_profile(engine, petersen());
    CHECK(pet.degree == 6);
    CHECK_FALSE(pet.all_real);
    CHECK_FALSE(pet.subset_123);
    CHECK(pet.t == 0);
    CHECK(pet.omega_high == 0);
    CHECK(pet.mult_at_1 == 1);
    CHECK(pet.mult_at_2 == 1);
    CHECK(pet.mult_at_3 == 1);
    CHECK(pet.reals_ge_2 == 3);
    CHECK(pet.real_root_count == 4);

    RootProfile lp = roots_profile(engine, loop_graph());
    CHECK(lp.degree == 1);
    CHECK(lp.all_real);
    CHECK(lp.subset_123);
    CHECK(lp.mult_at_1 == 1);

    RootProfile k1 = roots_profile(engine, Multigraph(1, {}));
    CHECK(k1.degree == 0);
    CHECK(k1.all_real);
    CHECK(k1.subset_123);

    CHECK_THROWS_AS(roots_profile(engine, k2()), DomainError);
}

TEST_CASE("root profile bookkeeping closes over a corpus sweep") {
    FlowEngine engine;
    const mpq_class tol = default_root_tolerance();
    for (const auto& g : default_corpus(capped(5, 8))) {
        CAPTURE(canonical_code(g));
        RootProfile p = roots_profile(engine, g, tol);
        CHECK(p.reals_below_1 == 0);
        // (1,2), {1} and [2,inf) partition the real roots
        CHECK(p.real_root_count == p.t + p.mult_at_1 + p.reals_ge_2);
        CHECK((p.degree - p.real_root_count) % 2 == 0);
        CHECK(p.all_real == (p.degree == p.real_root_count));
        if (p.subset_123) CHECK(p.all_real);
        CHECK((p.t == 0) == (p.omega_high == 0));
        CHECK(p.omega_low <= p.omega_high);
        CHECK(p.omega_high - p.omega_low <= p.t * tol);
        CHECK(p.t <= p.degree - p.mult_at_1 - p.mult_at_2);
    }
}

TEST_CASE("coefficient identities on named graphs") {
    FlowEngine engine;

    auto a = coefficient_audit(engine, k4());
    CHECK(a.applicable);
    CHECK(a.r == 3);
    CHECK(a.gamma == 4);  // the four vertex stars
    CHECK(a.passed());

    auto b = coefficient_audit(engine, dt());
    CHECK(b.applicable);
    CHECK(b.r == 4);
    CHECK(b.gamma == 0);
    CHECK(b.passed());

    auto c = coefficient_audit(engine, z_graph(3));
    CHECK(c.applicable);
    CHECK(c.r == 2);
    CHECK(c.gamma == 1);  // the three parallel edges
    CHECK(c.passed());

    auto d = coefficient_audit(engine, petersen());
    CHECK(d.applicable);
    CHECK(d.r == 6);
    CHECK(d.gamma == 10);  // ten vertex stars, cyclically 5-edge-connected
    CHECK(d.passed());

    auto e = coefficient_audit(engine, loop_graph());
    CHECK(e.applicable);
    CHECK(e.r == 1);
    CHECK(e.passed());

    auto f = coefficient_audit(engine, Multigraph(1, {}));
    CHECK(f.applicable);
    CHECK(f.r == 0);
    CHECK(f.passed());

    // a triangle loses two edges at a vertex: 2-edge-cut
    auto g = coefficient_audit(engine, triangle());
    CHECK_FALSE(g.applicable);
    CHECK(g.reason == "has a 2-edge-cut");

    auto h = coefficient_audit(engine, k2());
    CHECK_FALSE(h.applicable);
    CHECK(h.reason == "has a bridge");

    Multigraph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5},
                                 {4, 5}});
    auto i = coefficient_audit(engine, two_triangles);
    CHECK_FALSE(i.applicable);
    CHECK(i.reason == "disconnected");
}

TEST_CASE("coefficient identities across corpus and theta members") {
    FlowEngine engine;
    long audited = 0;
    for (const auto& g : default_corpus(capped(5, 9))) {
        auto audit = coefficient_audit(engine, g);
        if (!audit.applicable) continue;
        ++audited;
        CAPTURE(canonical_code(g));
        CHECK(audit.passed());
    }
    CHECK(audited > 100);

    // every enumerated family member has no 2-edge-cut, then passes
    for (int k = 2; k <= 5; ++k)
        for (const auto& rec : enumerate_theta(k)) {
            CAPTURE(rec.canonical);
            CHECK(edge_cuts(rec.graph, 2).empty());
            auto audit = coefficient_audit(engine, rec.graph);
            CHECK(audit.applicable);
            CHECK(audit.passed());
        }
}

TEST_CASE("gamma lower bound audit") {
    FlowEngine engine;

    auto a = gamma_bound_audit(engine, k4());
    CHECK(a.applicable);
    CHECK(a.gamma == 4);
    CHECK(a.bound == mpq_class(15, 4));
    CHECK(a.holds);
    CHECK(a.strict_required);  // r-1 = 2 does not divide |E|-1 = 5
    CHECK(a.strict_holds);
    CHECK(a.passed());

    auto b = gamma_bound_audit(engine, dt());
    CHECK_FALSE(b.applicable);
    CHECK(b.reason == "complex flow roots");

    auto c = gamma_bound_audit(engine, z_graph(3));
    CHECK_FALSE(c.applicable);
    CHECK(c.degenerate);
    CHECK(c.reason == "|V| <= 2 edge case");

    auto d = gamma_bound_audit(engine, loop_graph());
    CHECK_FALSE(d.applicable);
    CHECK(d.degenerate);
    CHECK(d.reason == "r <= 1: bound undefined");

    auto e = gamma_bound_audit(engine, petersen());
    CHECK_FALSE(e.applicable);
    CHECK(e.reason == "complex flow roots");

    auto f = gamma_bound_audit(engine, triangle());
    CHECK_FALSE(f.applicable);
    CHECK(f.reason == "has a 2-edge-cut");

    // zero failures across a corpus sweep
    long audited = 0;
    for (const auto& g : default_corpus(capped(5, 9))) {
        auto audit = gamma_bound_audit(engine, g);
        if (!audit.applicable) continue;
        ++audited;
        CAPTURE(canonical_code(g));
        CHECK(audit.holds);
        if (audit.strict_required) CHECK(audit.strict_holds);
    }
    CHECK(audited > 20);
}

TEST_CASE("structural profile of the named graphs") {
    auto k4p = structural_profile(k4());
    CHECK(k4p.r == 3);
    CHECK(k4p.alpha == 0);
    CHECK(k4p.gamma == 4);
    CHECK(k4p.k == 0);
    CHECK(k4p.v_counts.at(3) == 4);
    CHECK(k4p.hypothesis_ok);

    auto dtp = structural_profile(dt());
    CHECK(dtp.r == 4);
    CHECK(dtp.alpha == 3);  // three degree-4 vertices
    CHECK(dtp.gamma == 0);
    CHECK(dtp.k == 3);
    CHECK(dtp.hypothesis_ok);

    auto f5p = structural_profile(fig5b());
    CHECK_FALSE(f5p.hypothesis_ok);  // proper 3-edge-cut

    auto z3p = structural_profile(z_graph(3));
    CHECK_FALSE(z3p.hypothesis_ok);  // |V| = 2
    CHECK(z3p.k == 0);

    auto pet = structural_profile(petersen());
    CHECK(pet.r == 6);
    CHECK(pet.alpha == 0);
    CHECK(pet.gamma == 10);
    CHECK(pet.k == 0);
    CHECK(pet.hypothesis_ok);

    // alpha = 2|E| - 3|V| whenever the minimum degree is at least 3
    for (const auto& g : default_corpus(capped(5, 8))) {
        auto summary = structural_summary(g);
        if (summary.min_degree < 3) continue;
        auto profile = structural_profile(g);
        CHECK(profile.alpha ==
              2 * static_cast<long>(g.edge_count()) - 3 * g.vertex_count());
    }
}

TEST_CASE("structural bounds audit trichotomy") {
    FlowEngine engine;

    auto a = structural_bounds_audit(engine, k4());
    CHECK(a.applicable);
    CHECK(a.lemma_checked);
    CHECK(a.lemma_i);   // r = 3 >= max(3, -6), |V| = 4 >= 0
    CHECK(a.lemma_ii);  // alpha = 0 >= r + 2k - 3 = 0
    CHECK(a.theorem_case == 1);
    CHECK(a.passed());

    auto b = structural_bounds_audit(engine, z_graph(3));
    CHECK(b.applicable);
    CHECK_FALSE(b.lemma_checked);  // |V| = 2
    CHECK(b.theorem_case == 2);
    CHECK(b.passed());

    auto c = structural_bounds_audit(engine, loop_graph());
    CHECK(c.applicable);
    CHECK(c.theorem_case == 2);
    CHECK(c.passed());

    auto d = structural_bounds_audit(engine, Multigraph(1, {}));
    CHECK(d.applicable);
    CHECK(d.theorem_case == 2);
    CHECK(d.passed());

    auto e = structural_bounds_audit(engine, dt());
    CHECK_FALSE(e.applicable);
    CHECK(e.reason == "complex flow roots");

    // hypothesis holds for Petersen but its flow roots are not all real
    auto f = structural_bounds_audit(engine, petersen());
    CHECK_FALSE(f.applicable);
    CHECK(f.reason == "complex flow roots");

    auto g = structural_bounds_audit(engine, z_graph(2));
    CHECK_FALSE(g.applicable);
    CHECK(g.reason == "has a 2-edge-cut");

    Multigraph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    auto h = structural_bounds_audit(engine, bowtie);
    CHECK_FALSE(h.applicable);
    CHECK(h.reason == "separable");

    auto i = structural_bounds_audit(engine, k2());
    CHECK_FALSE(i.applicable);
    CHECK(i.reason == "has a bridge");

    // the omega inequality of case three is vacuous at this scale: no
    // hypothesis-ok graph with all roots real has three big vertices
    for (const auto& graph : default_corpus(capped(5, 9))) {
        auto profile = structural_profile(graph);
        auto audit = structural_bounds_audit(engine, graph);
        if (!audit.applicable) continue;
        CHECK(audit.passed());
        if (profile.hypothesis_ok && profile.k >= 3) {
            RootProfile roots = roots_profile(engine, graph);
            CHECK(roots.omega_low >= static_cast<long>(graph.edge_count()) -
                                         2 * graph.vertex_count() + 1);
        }
    }
}

TEST_CASE("screening the default corpus finds no counterexample") {
    auto corpus = default_corpus(capped(5, 9));
    ScreenOptions options;
    options.jobs = 1;
    ScreenReport report = screen_corpus(corpus, options);
    CHECK(report.graphs == static_cast<long>(corpus.size()));
    CHECK(report.counterexamples == 0);
    CHECK(report.coefficient_failed == 0);
    CHECK(report.gamma_failed == 0);
    CHECK(report.structural_failed == 0);
    CHECK(report.coefficient_checked > 100);
    CHECK(report.gamma_checked > 20);
    CHECK(report.structural_checked > 3);
    // at this scale every all-real graph is integral and vice versa
    CHECK(report.all_real_count == report.subset_123_count);
    CHECK(report.all_real_count > 200);
    REQUIRE(report.rows.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const ScreenRow& row = report.rows[i];
        CHECK(row.canonical == canonical_code(corpus[i]));
        CHECK(row.in_scope_52);
        CHECK_FALSE(row.counterexample);
        CHECK(row.all_real == row.subset_123);
        if (row.all_real) CHECK(row.t == 0);
    }
}

TEST_CASE("screening a named list matches the individual profiles") {
    std::vector<Multigraph> corpus{k4(), z_graph(3), z_graph(2), loop_graph(),
                                   dt(), fig5b()};
    ScreenReport report = screen_corpus(corpus, ScreenOptions{.jobs = 1});
    REQUIRE(report.rows.size() == 6);
    CHECK(report.graphs == 6);
    CHECK(report.all_real_count == 4);
    CHECK(report.subset_123_count == 4);
    CHECK(report.counterexamples == 0);
    CHECK(report.rows[0].all_real);
    CHECK(report.rows[0].theorem_case == 1);
    CHECK(report.rows[1].all_real);
    CHECK(report.rows[2].all_real);
    CHECK(report.rows[3].all_real);
    CHECK_FALSE(report.rows[4].all_real);
    CHECK_FALSE(report.rows[5].all_real);
    CHECK(report.rows[4].t == 1);
    CHECK(starts_with(report.rows[4].omega, "0.569840290997"));
    CHECK(report.rows[5].t == 1);

    ScreenReport empty = screen_corpus({}, ScreenOptions{.jobs = 1});
    CHECK(empty.graphs == 0);
    CHECK(empty.rows.empty());
    CHECK(empty.counterexamples == 0);
}

TEST_CASE("screen rows do not depend on the worker count") {
    auto corpus = default_corpus(capped(4, 9));
    ScreenReport one = screen_corpus(corpus, ScreenOptions{.jobs = 1});
    ScreenReport many = screen_corpus(corpus, ScreenOptions{.jobs = 4});
    REQUIRE(one.rows.size() == many.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].canonical == many.rows[i].canonical);
        CHECK(one.rows[i].omega == many.rows[i].omega);
        CHECK(one.rows[i].all_real == many.rows[i].all_real);
        CHECK(one.rows[i].subset_123 == many.rows[i].subset_123);
        CHECK(one.rows[i].t == many.rows[i].t);
        CHECK(one.rows[i].theorem_case == many.rows[i].theorem_case);
    }
    CHECK(one.all_real_count == many.all_real_count);
    CHECK(one.counterexamples == many.counterexamples);
}

TEST_CASE("nonseparable contractions follow from nonseparable deletions") {
    // for a low-degree vertex: if deleting any one of its edges keeps the
    // graph nonseparable, contracting any one of them does too
    long instances = 0;
    for (const auto& g : default_corpus(capped(5, 7))) {
        if (!structural_summary(g).nonseparable) continue;
        if (g.vertex_count() < 3) continue;
        auto degrees = structural_summary(g).degrees;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (degrees[x] > 3) continue;
            std::vector<int> at_x;
            for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
                auto [u, w] = g.edges()[e];
                if (u == x || w == x) at_x.push_back(e);
            }
            bool deletions_ok = true;
            for (int e : at_x)
                deletions_ok = deletions_ok &&
                               structural_summary(g.delete_edge(e)).nonseparable;
            if (!deletions_ok) continue;
            ++instances;
            for (int e : at_x) {
                if (g.is_loop(e)) continue;
                CAPTURE(canonical_code(g));
                CHECK(structural_summary(g.contract_edge(e)).nonseparable);
            }
        }
    }
    CHECK(instances > 100);
}
