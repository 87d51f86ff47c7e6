#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/flow.hpp"
#include "flowroots/polynomial.hpp"
#include "flowroots/rational.hpp"
#include "flowroots/roots.hpp"
#include "flowroots/structure.hpp"
#include "flowroots/theta.hpp"
#include "flowroots/xi.hpp"
#include "test_support.hpp"

using namespace flowroots;
using namespace testsupport;

namespace {

mpq_class rat(long n, long d) {
    mpq_class v(n, d);
    v.canonicalize();
    return v;
}

const IntPolynomial kCubic3({-7, 10, -5, 1});  // eta factor at level 3
const IntPolynomial kCubic4({-6, 8, -4, 1});   // level 4
const IntPolynomial kCubic5({-9, 13, -6, 1});  // level 5
const IntPolynomial kQuartic5({9, -16, 12, -5, 1});
const IntPolynomial kSextic5({41, -112, 132, -89, 37, -9, 1});

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

EtaResult exact_eta(long num, long den) {
    EtaResult r;
    r.is_two = false;
    IsolatedRoot root;
    root.low = root.high = rat(num, den);
    root.exact = true;
    root.factor = IntPolynomial({-num, den});
    r.root = root;
    return r;
}

} // namespace

TEST_CASE("eta of the named graphs") {
    // roots exactly {1, 2}: eta is 2, attained at 2
    EtaResult z3 = eta(z_graph(3));
    CHECK(z3.is_two);
    CHECK(z3.root_at_two);
    CHECK_FALSE(z3.root.has_value());

    // no root in (1,2] at all
    EtaResult tri = eta(triangle());
    CHECK(tri.is_two);
    CHECK_FALSE(tri.root_at_two);

    EtaResult empty = eta(Multigraph(0, {}));
    CHECK(empty.is_two);
    CHECK_FALSE(empty.root_at_two);

    // integer flow roots only
    CHECK(eta(k4()).is_two);
    CHECK(eta(k4()).root_at_two);
    CHECK(eta(petersen()).is_two);
    CHECK(eta(petersen()).root_at_two);

    // the two published cubic factors
    EtaResult d = eta(dt());
    REQUIRE_FALSE(d.is_two);
    REQUIRE(d.root.has_value());
    CHECK_FALSE(d.root->exact);
    CHECK(d.root->factor == kCubic3);
    CHECK(d.root->multiplicity == 1);
    CHECK(starts_with(d.root->approx, "1.430159709"));
    CHECK(d.root->high - d.root->low <= parse_rational("1e-12"));
    CHECK(d.root->low > 1);
    CHECK(d.root->high < 2);

    EtaResult f5 = eta(fig5b());
    REQUIRE_FALSE(f5.is_two);
    CHECK(f5.root->factor == kCubic4);
    // 1.3611030805... rounds to the familiar 1.361103081
    CHECK(starts_with(f5.root->approx, "1.3611030805"));

    CHECK_THROWS_AS(eta(k2()), DomainError);
    CHECK_THROWS_AS(eta(Multigraph(3, {{0, 1}, {1, 2}})), DomainError);
}

TEST_CASE("eta on the five-vertex level splits composite factors") {
    FlowEngine engine;
    auto level5 = enumerate_theta(5);
    REQUIRE(level5.size() == 2);
    bool saw_cubic = false, saw_sextic = false;
    for (const auto& rec : level5) {
        EtaResult e = eta(engine, rec.graph);
        REQUIRE_FALSE(e.is_two);
        if (e.root->factor == kCubic5) {
            saw_cubic = true;
            CHECK(starts_with(e.root->approx, "1.317672196"));
        }
        if (e.root->factor == kSextic5) {
            saw_sextic = true;
            CHECK(starts_with(e.root->approx, "1.335087886"));
        }
    }
    CHECK(saw_cubic);
    CHECK(saw_sextic);
}

TEST_CASE("minimal factor recovery by bounded divisor splitting") {
    // products of the published cubics: bracket selects the factor
    IntPolynomial p34 = kCubic3 * kCubic4;
    CHECK(minimal_factor_for_root(p34, rat(14, 10), rat(145, 100)) == kCubic3);
    CHECK(minimal_factor_for_root(p34, rat(135, 100), rat(140, 100)) == kCubic4);

    // the level-5 composite: cubic times a rootless quartic
    IntPolynomial p5 = kCubic5 * kQuartic5;
    CHECK(minimal_factor_for_root(p5, rat(13, 10), rat(133, 100)) == kCubic5);

    // an irreducible sextic survives unchanged
    CHECK(minimal_factor_for_root(kSextic5, rat(13, 10), rat(14, 10)) ==
          kSextic5);

    // quadratic surds
    IntPolynomial surds = IntPolynomial({-2, 0, 1}) * IntPolynomial({-3, 0, 1});
    CHECK(minimal_factor_for_root(surds, rat(14, 10), rat(145, 100)) ==
          IntPolynomial({-2, 0, 1}));
    CHECK(minimal_factor_for_root(surds, rat(17, 10), rat(18, 10)) ==
          IntPolynomial({-3, 0, 1}));

    // rational roots are deflated before splitting
    IntPolynomial with_linear = IntPolynomial({-1, 1}) * kCubic3;
    CHECK(minimal_factor_for_root(with_linear, rat(14, 10), rat(145, 100)) ==
          kCubic3);

    // a bracket holding two roots does not isolate
    CHECK_THROWS_AS(minimal_factor_for_root(surds, rat(14, 10), rat(18, 10)),
                    DomainError);
}

TEST_CASE("compare_eta orders certified values exactly") {
    EtaResult two_a = eta(z_graph(3));
    EtaResult two_b = eta(triangle());
    CHECK(compare_eta(two_a, two_b) == 0);

    EtaResult d_fine = eta(dt());
    EtaResult f_fine = eta(fig5b());
    CHECK(compare_eta(d_fine, two_a) == -1);
    CHECK(compare_eta(two_a, d_fine) == 1);
    CHECK(compare_eta(f_fine, d_fine) == -1);
    CHECK(compare_eta(d_fine, f_fine) == 1);
    CHECK(compare_eta(d_fine, d_fine) == 0);

    // crude tolerance: wide overlapping brackets must still separate
    EtaResult d_crude = eta(dt(), 1);
    EtaResult f_crude = eta(fig5b(), 1);
    CHECK(d_crude.root->factor == kCubic3);
    CHECK(compare_eta(f_crude, d_crude) == -1);
    // same algebraic number at different widths: equality through the gcd
    CHECK(compare_eta(d_crude, d_fine) == 0);

    // the same root reached from a different graph
    Multigraph dt_plus_triangle(6, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2},
                                    {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    EtaResult d_indirect = eta(dt_plus_triangle);
    CHECK(compare_eta(d_indirect, d_fine) == 0);

    // exact rational values against brackets
    CHECK(compare_eta(exact_eta(3, 2), d_fine) == 1);  // 1.5 > 1.4301...
    CHECK(compare_eta(d_fine, exact_eta(3, 2)) == -1);
    CHECK(compare_eta(exact_eta(10, 7), d_crude) == -1); // 1.42857 < 1.43015
    CHECK(compare_eta(d_crude, exact_eta(10, 7)) == 1);
    CHECK(compare_eta(exact_eta(3, 2), exact_eta(3, 2)) == 0);
    CHECK(compare_eta(exact_eta(10, 7), exact_eta(3, 2)) == -1);
}

TEST_CASE("eta_family minimises over a list") {
    FlowEngine engine;
    auto none = eta_family(engine, {});
    CHECK(none.value.is_two);
    CHECK_FALSE(none.attaining_index.has_value());

    auto only_two = eta_family(engine, {z_graph(3), triangle(), k4()});
    CHECK(only_two.value.is_two);
    CHECK(only_two.value.root_at_two);
    CHECK_FALSE(only_two.attaining_index.has_value());

    auto pair = eta_family(engine, {dt(), fig5b()});
    REQUIRE(pair.attaining_index.has_value());
    CHECK(*pair.attaining_index == 1);
    CHECK(pair.value.root->factor == kCubic4);

    auto swapped = eta_family(engine, {fig5b(), dt()});
    CHECK(*swapped.attaining_index == 0);

    auto tie = eta_family(engine, {dt(), dt()});
    CHECK(*tie.attaining_index == 0);

    auto mixed = eta_family(engine, {z_graph(3), k4(), dt()});
    CHECK(*mixed.attaining_index == 2);
    CHECK(mixed.value.root->factor == kCubic3);
}

TEST_CASE("xi certificates match the published constants") {
    for (int k = 0; k <= 2; ++k) {
        XiCertificate c = xi(k);
        CHECK(c.k == k);
        CHECK(c.is_two);
        CHECK(c.value_approx == "2");
        CHECK_FALSE(c.root.has_value());
        CHECK_FALSE(c.attaining_graph.has_value());
        CHECK(c.level_values.size() == static_cast<std::size_t>(std::max(0, k - 1)));
    }

    XiCertificate c3 = xi(3);
    REQUIRE_FALSE(c3.is_two);
    CHECK(*c3.minimal_factor == kCubic3);
    CHECK(starts_with(c3.value_approx, "1.430159709"));
    CHECK(*c3.attaining_graph == canonical_code(dt()));
    CHECK(c3.level_values.size() == 2);
    CHECK(c3.level_values[0].is_two);
    CHECK(count_real_roots(*c3.minimal_factor, Bound::open(c3.root->low),
                           Bound::open(c3.root->high)) == 1);

    XiCertificate c4 = xi(4);
    CHECK(*c4.minimal_factor == kCubic4);
    CHECK(starts_with(c4.value_approx, "1.3611030805"));
    CHECK(*c4.attaining_graph == canonical_code(fig5b()));

    XiCertificate c5 = xi(5);
    CHECK(*c5.minimal_factor == kCubic5);
    CHECK(starts_with(c5.value_approx, "1.317672196"));
    CHECK(c5.level_values.size() == 4);
    // the attaining graph really has the cubic as a flow factor
    FlowEngine engine;
    Multigraph attained = from_canonical_code(*c5.attaining_graph);
    IntPolynomial f = engine.flow_polynomial(attained).polynomial;
    CHECK_NOTHROW((void)exact_divide(f, kCubic5));
    // and its level sequence decreases exactly as published
    CHECK(compare_eta(c5.level_values[1], eta(dt())) == 0);
    CHECK(compare_eta(c5.level_values[2], eta(fig5b())) == 0);
    for (std::size_t i = 0; i + 1 < c5.level_values.size(); ++i)
        CHECK(compare_eta(c5.level_values[i + 1], c5.level_values[i]) <= 0);

    // a coarse tolerance shortens the reported decimal
    XiCertificate coarse = xi(3, XiOptions{.tolerance = rat(1, 1000)});
    CHECK(coarse.value_approx == "1.430");

    CHECK_THROWS_AS(xi(-1), DomainError);
    CHECK_THROWS_AS(xi(5, XiOptions{.theta_budget = 5}), BudgetError);
}

TEST_CASE("certified intervals really are zero free") {
    FlowEngine engine;
    for (int k = 3; k <= 5; ++k) {
        XiCertificate cert = xi(k);
        REQUIRE(cert.root.has_value());
        const mpq_class& low = cert.root->low;
        for (int i = 2; i <= k; ++i)
            for (const auto& rec : enumerate_theta(i)) {
                IntPolynomial f = engine.flow_polynomial(rec.graph).polynomial;
                CAPTURE(k);
                CAPTURE(rec.canonical);
                CHECK(count_real_roots(f, Bound::open(1),
                                       Bound::closed_at(low)) == 0);
            }
    }
}

TEST_CASE("small graphs with few big vertices respect the certified bounds") {
    FlowEngine engine;
    XiCertificate c3 = xi(3);
    XiCertificate c4 = xi(4);
    long audited = 0;
    for (int n = 1; n <= 4; ++n)
        for (const auto& g : all_labelled_multigraphs(n, 6, 6, true)) {
            auto summary = structural_summary(g);
            if (!summary.connected || !summary.bridges.empty()) continue;
            const int big = static_cast<int>(summary.big_vertices.size());
            if (big > 4) continue;
            IntPolynomial f = engine.flow_polynomial(g).polynomial;
            ++audited;
            CAPTURE(g.to_text());
            CHECK(count_real_roots(f, Bound::open(1),
                                   Bound::closed_at(c4.root->low)) == 0);
            if (big <= 3)
                CHECK(count_real_roots(f, Bound::open(1),
                                       Bound::closed_at(c3.root->low)) == 0);
        }
    CHECK(audited > 400);
}
