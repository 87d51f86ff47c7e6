#include "flowroots/flow.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"

namespace flowroots {

namespace {

const IntPolynomial kLambdaMinus1({-1, 1});
const IntPolynomial kLambdaMinus2({-2, 1});

int parity_sign(long e) {
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

// Edge ids of g that live inside the given vertex set.
std::vector<int> edges_within(const Multigraph& g, const std::vector<bool>& in) {
    std::vector<int> ids;
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& [u, w] = g.edge(id);
        if (in[u] && in[w]) ids.push_back(id);
    }
    return ids;
}

} // namespace

FlowEngine::FlowEngine(EngineOptions options) : options_(options) {}

const IntPolynomial* FlowEngine::cache_find(const std::string& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return nullptr;
    lru_.splice(lru_.begin(), lru_, it->second);
    return &it->second->second;
}

void FlowEngine::cache_store(const std::string& key, const IntPolynomial& value) {
    lru_.emplace_front(key, value);
    index_[key] = lru_.begin();
    if (lru_.size() > options_.cache_limit) {
        index_.erase(lru_.back().first);
        lru_.pop_back();
    }
}

IntPolynomial FlowEngine::compute(const Multigraph& g) {
    if (options_.cache_limit == 0) return reduce(g);
    const std::string key = canonical_code(g);
    if (const IntPolynomial* hit = cache_find(key)) {
        ++cache_hits_;
        return *hit;
    }
    IntPolynomial value = reduce(g);
    cache_store(key, value);
    return value;
}

IntPolynomial FlowEngine::reduce(const Multigraph& g) {
    if (g.edge_count() == 0) return IntPolynomial::one();

    const StructuralSummary summary = structural_summary(g);

    if (!summary.bridges.empty()) {
        ++counters_.bridge;
        return IntPolynomial::zero();
    }

    if (!summary.connected) {
        IntPolynomial product = IntPolynomial::one();
        for (const auto& comp : components(g)) {
            std::vector<bool> in(g.vertex_count(), false);
            for (int v : comp) in[v] = true;
            auto ids = edges_within(g, in);
            if (ids.empty()) continue; // isolated vertex, factor 1
            product = product * compute(g.subgraph(ids, comp));
        }
        return product;
    }

    if (int loops = g.loop_count(); loops > 0) {
        counters_.loop += loops;
        std::vector<int> keep;
        for (int id = 0; id < g.edge_count(); ++id)
            if (!g.is_loop(id)) keep.push_back(id);
        std::vector<int> all_vertices(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) all_vertices[v] = v;
        IntPolynomial rest = compute(g.subgraph(keep, all_vertices));
        return pow(kLambdaMinus1, loops) * rest;
    }

    // G is now connected, loopless and bridgeless.
    if (options_.use_factorizations) {
        if (!summary.nonseparable) {
            ++counters_.block_factor;
            IntPolynomial product = IntPolynomial::one();
            for (const auto& block : summary.blocks)
                product = product * compute(g.subgraph(block, {}));
            return product;
        }

        // 2-edge-cut with at least one edge on each side
        for (const auto& cut : edge_cuts(g, 2)) {
            auto rest = g.delete_edges(cut.edges);
            auto comps = components(rest);
            std::vector<bool> in_first(g.vertex_count(), false);
            for (int v : comps.front()) in_first[v] = true;
            std::vector<int> side1, side2;
            for (int id = 0; id < g.edge_count(); ++id) {
                if (id == cut.edges[0] || id == cut.edges[1]) continue;
                const auto& [u, w] = g.edge(id);
                (in_first[u] ? side1 : side2).push_back(id);
            }
            if (side1.empty() || side2.empty()) continue;
            ++counters_.two_cut;
            IntPolynomial f1 = compute(g.contract_edges(side2));
            IntPolynomial f2 = compute(g.contract_edges(side1));
            return exact_divide(f1 * f2, kLambdaMinus1);
        }

        // an edge whose deletion leaves a separable graph
        for (int e = 0; e < g.edge_count(); ++e) {
            Multigraph h = g.delete_edge(e);
            StructuralSummary hs = structural_summary(h);
            if (hs.cut_vertices.empty()) continue;
            const int v = hs.cut_vertices.front();
            const auto& [u1, u2] = g.edge(e);
            if (v == u1 || v == u2) continue; // cannot happen for nonseparable g
            // group the components of (G-e)-v into the side holding u1
            // and everything else; v belongs to both sides
            Multigraph cut_open = h.delete_vertex(v);
            std::vector<bool> with_u1(g.vertex_count(), false);
            for (const auto& comp : components(cut_open)) {
                std::vector<int> old_labels;
                for (int w : comp) old_labels.push_back(w < v ? w : w + 1);
                if (std::find(old_labels.begin(), old_labels.end(), u1) !=
                    old_labels.end())
                    for (int w : old_labels) with_u1[w] = true;
            }
            with_u1[v] = true;
            std::vector<int> ids1 = edges_within(h, with_u1);
            std::vector<int> ids2;
            for (int id = 0; id < h.edge_count(); ++id)
                if (std::find(ids1.begin(), ids1.end(), id) == ids1.end())
                    ids2.push_back(id);
            ++counters_.separable_minus_e;
            auto build = [&](const std::vector<int>& ids, int attach) {
                std::vector<int> old_of;
                Multigraph side = h.subgraph(ids, {v, attach}, &old_of);
                int nv = -1, na = -1;
                for (std::size_t i = 0; i < old_of.size(); ++i) {
                    if (old_of[i] == v) nv = static_cast<int>(i);
                    if (old_of[i] == attach) na = static_cast<int>(i);
                }
                return side.add_edge(nv, na);
            };
            IntPolynomial f1 = compute(build(ids1, u1));
            IntPolynomial f2 = compute(build(ids2, u2));
            return exact_divide(f1 * f2, kLambdaMinus1);
        }

        // proper 3-edge-cut
        for (const auto& cut : edge_cuts(g, 3)) {
            if (!cut.proper) continue;
            auto rest = g.delete_edges(cut.edges);
            auto comps = components(rest);
            std::vector<bool> in_first(g.vertex_count(), false);
            for (int v : comps.front()) in_first[v] = true;
            std::vector<int> side1, side2;
            for (int id = 0; id < g.edge_count(); ++id) {
                if (std::find(cut.edges.begin(), cut.edges.end(), id) !=
                    cut.edges.end())
                    continue;
                const auto& [u, w] = g.edge(id);
                (in_first[u] ? side1 : side2).push_back(id);
            }
            if (side1.empty() || side2.empty()) continue;
            ++counters_.three_cut;
            IntPolynomial f1 = compute(g.contract_edges(side2));
            IntPolynomial f2 = compute(g.contract_edges(side1));
            return exact_divide(f1 * f2, kLambdaMinus1 * kLambdaMinus2);
        }
    }

    // delete-contract on an edge from a largest parallel class,
    // tie-broken by smallest edge id
    std::map<std::pair<int, int>, int> class_size;
    for (const auto& e : g.edges()) ++class_size[e];
    int best = 0, best_size = 0;
    for (int id = 0; id < g.edge_count(); ++id)
        if (int s = class_size[g.edge(id)]; s > best_size) {
            best = id;
            best_size = s;
        }
    ++counters_.delete_contract;
    IntPolynomial contracted = compute(g.contract_edge(best));
    IntPolynomial deleted = compute(g.delete_edge(best));
    return contracted - deleted;
}

FlowResult FlowEngine::flow_polynomial(const Multigraph& g) {
    counters_ = {};
    cache_hits_ = 0;
    FlowResult result;
    result.polynomial = compute(g);
    const StructuralSummary summary = structural_summary(g);
    result.p_exponent = g.edge_count() - g.vertex_count() +
                        summary.nontrivial_block_count - 1;
    result.reductions_used = counters_;
    result.cache_hits = cache_hits_;
    return result;
}

long flow_count(const Multigraph& g, int k, long budget) {
    if (k < 2) throw DomainError("flow_count: k must be at least 2");
    const int n = g.vertex_count();
    const int m = g.edge_count();

    // spanning forest by breadth-first search (loops are never tree edges)
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (other, edge id)
    for (int id = 0; id < m; ++id) {
        const auto& [u, w] = g.edge(id);
        if (u == w) continue;
        adj[u].emplace_back(w, id);
        adj[w].emplace_back(u, id);
    }
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<bool> seen(n, false), tree_edge(m, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (const auto& [w, id] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent[w] = v;
                parent_edge[w] = id;
                depth[w] = depth[v] + 1;
                tree_edge[id] = true;
                queue.push(w);
            }
        }
    }

    // fundamental cycle of each chord, as (edge id, +-1) pairs
    std::vector<std::vector<std::pair<int, int>>> cycles;
    for (int id = 0; id < m; ++id) {
        if (tree_edge[id]) continue;
        std::vector<std::pair<int, int>> cycle{{id, 1}};
        auto [u, w] = g.edge(id);
        if (u != w) {
            // tree path from w back to u; an edge traversed child->parent
            // in stored (min,max) orientation contributes +1 on the
            // w-side, -1 on the u-side
            int a = u, b = w;
            auto step = [&](int& v, int direction) {
                int id2 = parent_edge[v];
                bool stored_up = g.edge(id2).first == v;
                cycle.emplace_back(id2, stored_up == (direction > 0) ? 1 : -1);
                v = parent[v];
            };
            while (depth[b] > depth[a]) step(b, 1);
            while (depth[a] > depth[b]) step(a, -1);
            while (a != b) {
                step(b, 1);
                step(a, -1);
            }
        }
        cycles.push_back(std::move(cycle));
    }

    const int dim = static_cast<int>(cycles.size());
    mpz_class total = 1;
    for (int i = 0; i < dim; ++i) total *= k;
    if (total > budget)
        throw BudgetError("flow_count: " + total.get_str() +
                          " assignments exceed budget " + std::to_string(budget));

    // odometer over the chord values; every digit change is +1 mod k
    // (a wrap from k-1 to 0 is also +1 mod k), so each step only touches
    // the cycles of the digits that moved
    std::vector<int> digit(dim, 0), value(m, 0);
    int zeros = m;
    auto bump = [&](int d) {
        for (const auto& [e, s] : cycles[d]) {
            int& val = value[e];
            if (val == 0) --zeros;
            val += s > 0 ? 1 : k - 1;
            if (val >= k) val -= k;
            if (val == 0) ++zeros;
        }
    };
    long count = zeros == 0 ? 1 : 0;
    while (true) {
        int d = 0;
        while (d < dim) {
            bump(d);
            if (++digit[d] == k) {
                digit[d] = 0;
                ++d;
            } else {
                break;
            }
        }
        if (d == dim) break;
        if (zeros == 0) ++count;
    }
    return count;
}

QValue q_value(FlowEngine& engine, const Multigraph& g, const mpq_class& lambda) {
    FlowResult f = engine.flow_polynomial(g);
    QValue q;
    q.p_exponent = f.p_exponent;
    q.value = evaluate(f.polynomial, lambda);
    if (parity_sign(q.p_exponent) < 0) q.value = -q.value;
    q.sign = sgn(q.value);
    return q;
}

QValue q_value(const Multigraph& g, const mpq_class& lambda) {
    FlowEngine engine;
    return q_value(engine, g, lambda);
}

WakelinReport wakelin_audit(FlowEngine& engine, const Multigraph& g) {
    const StructuralSummary summary = structural_summary(g);
    if (!summary.connected || !summary.bridges.empty())
        throw DomainError("wakelin_audit: graph must be connected and bridgeless");

    const IntPolynomial f = engine.flow_polynomial(g).polynomial;
    const int m = g.edge_count(), n = g.vertex_count();
    const int b = summary.nontrivial_block_count;

    WakelinReport report;
    report.block_count = b;

    const int below_sign = parity_sign(m - n + 1);
    report.sign_below_one = true;
    for (const mpq_class& x :
         {mpq_class(-2), mpq_class(-1), mpq_class(0), mpq_class(1, 2)})
        if (sign_at(f, x) != below_sign) report.sign_below_one = false;

    report.multiplicity_found = strip_integer_roots(f, {1}).multiplicity.at(1);
    report.multiplicity_at_one = report.multiplicity_found == b;

    const int above_sign = parity_sign(m - n + b - 1);
    report.sign_above_one = true;
    for (const mpq_class& x : {mpq_class(129, 128), mpq_class(33, 32),
                               mpq_class(9, 8), mpq_class(32, 27)})
        if (sign_at(f, x) != above_sign) report.sign_above_one = false;

    return report;
}

WakelinReport wakelin_audit(const Multigraph& g) {
    FlowEngine engine;
    return wakelin_audit(engine, g);
}

bool verify_two_block_identity(FlowEngine& engine, const Multigraph& g,
                               const VertexSplit& split) {
    if (!structural_summary(g).nonseparable)
        throw DomainError("verify_two_block_identity: graph must be nonseparable");
    SplitSide s1 = split_side(g, split, 1);
    SplitSide s2 = split_side(g, split, 2);
    IntPolynomial whole = engine.flow_polynomial(g).polynomial;
    IntPolynomial g1 = engine.flow_polynomial(s1.graph).polynomial;
    IntPolynomial g2 = engine.flow_polynomial(s2.graph).polynomial;
    IntPolynomial g1e =
        engine.flow_polynomial(s1.graph.add_edge(s1.u1, s1.u2)).polynomial;
    IntPolynomial g2e =
        engine.flow_polynomial(s2.graph.add_edge(s2.u1, s2.u2)).polynomial;
    return kLambdaMinus1 * whole == g1e * g2e + kLambdaMinus1 * g1 * g2;
}

bool verify_two_block_identity(const Multigraph& g, const VertexSplit& split) {
    FlowEngine engine;
    return verify_two_block_identity(engine, g, split);
}

} // namespace flowroots
