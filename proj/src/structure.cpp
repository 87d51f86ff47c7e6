#include "flowroots/structure.hpp"

#include <algorithm>
#include <functional>

#include "flowroots/errors.hpp"

namespace flowroots {

namespace {

// Adjacency as (edge id, other endpoint) lists; loops are excluded here
// and handled separately where they matter.
std::vector<std::vector<std::pair<int, int>>> incidence(const Multigraph& g) {
    std::vector<std::vector<std::pair<int, int>>> inc(g.vertex_count());
    for (int id = 0; id < g.edge_count(); ++id) {
        const auto& [u, w] = g.edge(id);
        if (u == w) continue;
        inc[u].emplace_back(id, w);
        inc[w].emplace_back(id, u);
    }
    return inc;
}

std::vector<int> component_labels(const Multigraph& g) {
    auto inc = incidence(g);
    std::vector<int> label(g.vertex_count(), -1);
    int comp = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (label[s] >= 0) continue;
        std::vector<int> stack{s};
        label[s] = comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [id, w] : inc[v]) {
                (void)id;
                if (label[w] < 0) {
                    label[w] = comp;
                    stack.push_back(w);
                }
            }
        }
        ++comp;
    }
    return label;
}

} // namespace

int component_count(const Multigraph& g) {
    auto label = component_labels(g);
    return label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
}

bool is_connected(const Multigraph& g) {
    return component_count(g) <= 1;
}

std::vector<std::vector<int>> components(const Multigraph& g) {
    auto label = component_labels(g);
    int count = label.empty() ? 0 : 1 + *std::max_element(label.begin(), label.end());
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < g.vertex_count(); ++v)
        out[label[v]].push_back(v);
    return out;
}

StructuralSummary structural_summary(const Multigraph& g) {
    StructuralSummary s;
    const int n = g.vertex_count();
    s.degrees = g.degrees();
    s.min_degree = n == 0 ? 0 : *std::min_element(s.degrees.begin(), s.degrees.end());
    for (int v = 0; v < n; ++v) {
        if (s.degrees[v] > 3) s.big_vertices.push_back(v);
        if (s.degrees[v] == 4 && g.neighbours(v).size() == 2)
            s.gamma_vertices.push_back(v);
    }
    s.component_count = component_count(g);
    s.connected = s.component_count <= 1;

    // Hopcroft-Tarjan blocks on the loopless part, iterative DFS with
    // explicit edge stack.  Each parallel copy is its own edge id, so a
    // doubled edge correctly forms a 2-edge block rather than a bridge.
    auto inc = incidence(g);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<char> edge_seen(g.edge_count(), 0);
    int timer = 0;
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < inc[f.v].size()) {
                auto [id, w] = inc[f.v][f.next++];
                if (id == f.parent_edge) continue;
                if (!edge_seen[id]) {
                    edge_seen[id] = 1;
                    edge_stack.push_back(id);
                }
                if (disc[w] < 0) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, id, 0});
                } else if (disc[w] < disc[f.v]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int child = f.v;
                int entry = f.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[child]);
                    if (low[child] >= disc[parent]) {
                        // pop one block: everything above (and including)
                        // the entry edge of `child`
                        std::vector<int> block;
                        while (true) {
                            int id = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(id);
                            if (id == entry) break;
                        }
                        std::sort(block.begin(), block.end());
                        s.blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    // Every loop is a block of its own.
    for (int id = 0; id < g.edge_count(); ++id)
        if (g.is_loop(id))
            s.blocks.push_back({id});
    std::sort(s.blocks.begin(), s.blocks.end());
    s.nontrivial_block_count = static_cast<int>(s.blocks.size());

    // A bridge is an edge whose block is a single non-loop edge; a vertex
    // is a cut-vertex exactly when it meets >= 2 non-loop-carrying blocks.
    std::vector<int> nonloop_blocks_at(n, 0);
    for (const auto& block : s.blocks) {
        if (block.size() == 1 && g.is_loop(block[0]))
            continue;
        if (block.size() == 1)
            s.bridges.push_back(block[0]);
        std::vector<char> seen_vertex(n, 0);
        for (int id : block) {
            const auto& [u, w] = g.edge(id);
            for (int v : {u, w}) {
                if (!seen_vertex[v]) {
                    seen_vertex[v] = 1;
                    ++nonloop_blocks_at[v];
                }
            }
        }
    }
    std::sort(s.bridges.begin(), s.bridges.end());
    for (int v = 0; v < n; ++v)
        if (nonloop_blocks_at[v] >= 2)
            s.cut_vertices.push_back(v);

    const bool has_loop = g.loop_count() > 0;
    s.nonseparable = s.connected && s.cut_vertices.empty() &&
                     (!has_loop || (n == 1 && g.edge_count() == 1));
    return s;
}

std::vector<EdgeCut> edge_cuts(const Multigraph& g, int k) {
    if (k < 1)
        throw DomainError("edge_cuts: k must be positive");
    const int m = g.edge_count();
    std::vector<EdgeCut> cuts;
    if (k > m) return cuts;
    const int base = component_count(g);
    auto disconnects = [&](const std::vector<int>& ids) {
        return component_count(g.delete_edges(ids)) > base;
    };
    // Degree-3 stars, for the 'proper' flag.
    std::vector<std::vector<int>> stars;
    if (k == 3) {
        auto deg = g.degrees();
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (deg[v] != 3) continue;
            std::vector<int> star;
            for (int id = 0; id < m; ++id) {
                const auto& [u, w] = g.edge(id);
                if (u == v || w == v) star.push_back(id);
            }
            stars.push_back(std::move(star));
        }
    }
    std::vector<int> pick(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            if (!disconnects(pick)) return;
            // minimal: no (k-1)-subset may disconnect
            for (int skip = 0; skip < k; ++skip) {
                std::vector<int> sub;
                for (int i = 0; i < k; ++i)
                    if (i != skip) sub.push_back(pick[i]);
                if (!sub.empty() && disconnects(sub)) return;
            }
            EdgeCut cut{pick, true};
            if (k == 3)
                for (const auto& star : stars)
                    if (star == pick) { cut.proper = false; break; }
            cuts.push_back(std::move(cut));
            return;
        }
        for (int id = start; id < m; ++id) {
            pick[depth] = id;
            rec(id + 1, depth + 1);
        }
    };
    rec(0, 0);
    return cuts;
}

std::vector<VertexSplit> vertex_splits(const Multigraph& g) {
    if (g.vertex_count() < 2)
        throw DomainError("vertex_splits: need at least two vertices");
    if (!is_connected(g))
        throw DomainError("vertex_splits: graph must be connected");
    const int n = g.vertex_count();
    std::vector<VertexSplit> splits;
    for (int u1 = 0; u1 < n; ++u1) {
        for (int u2 = u1 + 1; u2 < n; ++u2) {
            // pieces[i] = edge ids; a component piece carries all edges
            // with an endpoint inside the component, a direct u1-u2 edge
            // or a loop at u1/u2 is a piece by itself.
            std::vector<std::vector<int>> pieces;
            Multigraph reduced = g.delete_vertex(std::max(u1, u2)).delete_vertex(std::min(u1, u2));
            auto comp_sets = components(reduced);
            // map reduced labels back to original ones
            auto unreduce = [&](int v) {
                int shift1 = std::min(u1, u2), shift2 = std::max(u1, u2);
                if (v >= shift1) ++v;
                if (v >= shift2) ++v;
                return v;
            };
            for (const auto& comp : comp_sets) {
                std::vector<char> inside(n, 0);
                for (int v : comp)
                    inside[unreduce(v)] = 1;
                std::vector<int> piece;
                for (int id = 0; id < g.edge_count(); ++id) {
                    const auto& [a, b] = g.edge(id);
                    if (inside[a] || inside[b]) piece.push_back(id);
                }
                if (!piece.empty())
                    pieces.push_back(std::move(piece));
            }
            for (int id = 0; id < g.edge_count(); ++id) {
                const auto& [a, b] = g.edge(id);
                bool direct = (a == u1 && b == u2) || (a == u2 && b == u1);
                bool split_loop = (a == b) && (a == u1 || a == u2);
                if (direct || split_loop)
                    pieces.push_back({id});
            }
            if (pieces.size() < 2) continue;
            if (pieces.size() > 20)
                throw BudgetError("vertex_splits: too many pieces to enumerate");
            // bipartitions up to swap: piece 0 stays on side 1
            const std::size_t p = pieces.size();
            for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << (p - 1)); ++mask) {
                VertexSplit s;
                s.u1 = u1;
                s.u2 = u2;
                s.side1 = pieces[0];
                for (std::size_t i = 1; i < p; ++i) {
                    auto& side = (mask >> (i - 1)) & 1 ? s.side1 : s.side2;
                    side.insert(side.end(), pieces[i].begin(), pieces[i].end());
                }
                if (s.side2.empty()) continue;
                std::sort(s.side1.begin(), s.side1.end());
                std::sort(s.side2.begin(), s.side2.end());
                splits.push_back(std::move(s));
            }
        }
    }
    return splits;
}

SplitSide split_side(const Multigraph& g, const VertexSplit& split, int which) {
    if (which != 1 && which != 2)
        throw DomainError("split_side: side must be 1 or 2");
    const auto& ids = which == 1 ? split.side1 : split.side2;
    std::vector<int> old_of;
    SplitSide side;
    side.graph = g.subgraph(ids, {split.u1, split.u2}, &old_of);
    for (std::size_t i = 0; i < old_of.size(); ++i) {
        if (old_of[i] == split.u1) side.u1 = static_cast<int>(i);
        if (old_of[i] == split.u2) side.u2 = static_cast<int>(i);
    }
    return side;
}

} // namespace flowroots
