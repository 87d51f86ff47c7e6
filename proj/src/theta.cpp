#include "flowroots/theta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"

namespace flowroots {

namespace {

// (a'): deleting any single edge must leave a nonseparable graph.
std::optional<int> witness_against_a(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (!structural_summary(g.delete_edge(e)).nonseparable) return e;
    return std::nullopt;
}

// (b'): contracting any single edge must leave an even block count.
std::optional<int> witness_against_b(const Multigraph& g) {
    for (int e = 0; e < g.edge_count(); ++e)
        if (structural_summary(g.contract_edge(e)).nontrivial_block_count % 2 != 0)
            return e;
    return std::nullopt;
}

int block_count(const Multigraph& g) {
    return structural_summary(g).nontrivial_block_count;
}

// (c'): for every split with >= 2 edges on both sides, the integers
// b(G1/u1u2), b(G1)-1 and b(G2) share one parity.  The split pair
// (G1, G2) is unordered in our enumeration, so both orientations of
// the asymmetric condition are checked.
std::optional<VertexSplit> witness_against_c(const Multigraph& g) {
    for (const auto& split : vertex_splits(g)) {
        if (split.side1.size() < 2 || split.side2.size() < 2) continue;
        SplitSide s1 = split_side(g, split, 1);
        SplitSide s2 = split_side(g, split, 2);
        const int b1 = block_count(s1.graph);
        const int b2 = block_count(s2.graph);
        const int b1m = block_count(s1.graph.identify_vertices(s1.u1, s1.u2));
        const int b2m = block_count(s2.graph.identify_vertices(s2.u1, s2.u2));
        const bool first = (b1m % 2 == (b1 - 1) % 2) && ((b1 - 1) % 2 == b2 % 2);
        const bool second = (b2m % 2 == (b2 - 1) % 2) && ((b2 - 1) % 2 == b1 % 2);
        if (!first || !second) return split;
    }
    return std::nullopt;
}

// Short-circuit form used by the exhaustive cross-validation filter.
bool in_phi_fast(const Multigraph& g) {
    if (witness_against_a(g)) return false;
    if (witness_against_b(g)) return false;
    return !witness_against_c(g);
}

} // namespace

Multigraph z_graph(int j) {
    if (j < 1) throw DomainError("z_graph needs at least one edge");
    std::vector<std::pair<int, int>> edges(j, {0, 1});
    return Multigraph(2, std::move(edges));
}

Multigraph expand(const Multigraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw DomainError("expand: no such edge");
    if (g.is_loop(e)) throw DomainError("expand: cannot expand a loop");
    const auto& [u1, u2] = g.edge(e);
    const int w = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count() + 3);
    for (int id = 0; id < g.edge_count(); ++id)
        if (id != e) edges.push_back(g.edge(id));
    edges.push_back({u1, w});
    edges.push_back({u1, w});
    edges.push_back({u2, w});
    edges.push_back({u2, w});
    return Multigraph(g.vertex_count() + 1, std::move(edges));
}

PhiRecord phi_membership(const Multigraph& g) {
    if (g.vertex_count() < 2)
        throw DomainError("phi membership needs at least two vertices");
    if (!structural_summary(g).nonseparable)
        throw DomainError("phi membership needs a nonseparable graph");
    PhiRecord record;
    record.graph = g;
    record.canonical = canonical_code(g);
    record.vertex_count = g.vertex_count();
    record.witness_a = witness_against_a(g);
    record.witness_b = witness_against_b(g);
    record.witness_c = witness_against_c(g);
    record.condition_a = !record.witness_a.has_value();
    record.condition_b = !record.witness_b.has_value();
    record.condition_c = !record.witness_c.has_value();
    return record;
}

std::vector<PhiRecord> enumerate_theta(int k, const ThetaOptions& options) {
    if (k < 2) throw DomainError("enumerate_theta needs k >= 2");
    std::vector<PhiRecord> level = {phi_membership(z_graph(3))};
    long expansions = 0;
    for (int size = 2; size < k; ++size) {
        // deterministic task order: parents by canonical code, edges ascending
        std::vector<std::pair<int, int>> tasks; // (parent index, edge)
        for (int p = 0; p < static_cast<int>(level.size()); ++p)
            for (int e = 0; e < level[p].graph.edge_count(); ++e)
                tasks.push_back({p, e});
        expansions += static_cast<long>(tasks.size());
        if (expansions > options.budget)
            throw BudgetError("theta enumeration budget exceeded");

        std::vector<PhiRecord> produced(tasks.size());
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < static_cast<int>(tasks.size()); ++t) {
            const auto& [p, e] = tasks[t];
            produced[t] = phi_membership(expand(level[p].graph, e));
        }

        // first constructor wins, in task order
        std::vector<PhiRecord> next;
        std::set<std::string> seen;
        for (int t = 0; t < static_cast<int>(tasks.size()); ++t) {
            if (!seen.insert(produced[t].canonical).second) continue;
            const auto& [p, e] = tasks[t];
            produced[t].construction = level[p].construction;
            produced[t].construction.push_back({level[p].canonical, e});
            next.push_back(std::move(produced[t]));
        }
        std::sort(next.begin(), next.end(),
                  [](const PhiRecord& a, const PhiRecord& b) {
                      return a.canonical < b.canonical;
                  });
        level = std::move(next);
    }
    return level;
}

CrossValidationReport cross_validate_phi_theta(int max_vertices, long budget,
                                               int max_multiplicity) {
    if (max_vertices < 2)
        throw DomainError("cross validation needs max_vertices >= 2");
    if (max_multiplicity < 1)
        throw DomainError("cross validation needs max_multiplicity >= 1");
    CrossValidationReport report;
    report.max_vertices = max_vertices;
    report.all_match = true;
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        long total = 1;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (total > budget / (max_multiplicity + 1) + 1) {
                total = budget + 1;
                break;
            }
            total *= max_multiplicity + 1;
        }
        if (total > budget || report.generated + total > budget)
            throw BudgetError("cross validation budget exceeded");
        report.generated += total;

        std::set<std::string> phi_codes;
#pragma omp parallel
        {
            std::vector<std::string> local;
#pragma omp for schedule(dynamic, 1024)
            for (long index = 0; index < total; ++index) {
                long rest = index;
                std::vector<std::pair<int, int>> edges;
                for (const auto& [u, v] : pairs) {
                    int mult = static_cast<int>(rest % (max_multiplicity + 1));
                    rest /= max_multiplicity + 1;
                    for (int c = 0; c < mult; ++c) edges.push_back({u, v});
                }
                Multigraph g(n, std::move(edges));
                if (!structural_summary(g).nonseparable) continue;
                if (!in_phi_fast(g)) continue;
                local.push_back(canonical_code(g));
            }
#pragma omp critical
            phi_codes.insert(local.begin(), local.end());
        }

        CrossValidationLevel lvl;
        lvl.vertex_count = n;
        lvl.phi_codes.assign(phi_codes.begin(), phi_codes.end());
        for (const auto& rec : enumerate_theta(n))
            lvl.theta_codes.push_back(rec.canonical);
        lvl.matched = lvl.phi_codes == lvl.theta_codes;
        report.all_match = report.all_match && lvl.matched;
        report.levels.push_back(std::move(lvl));
    }
    return report;
}

} // namespace flowroots
