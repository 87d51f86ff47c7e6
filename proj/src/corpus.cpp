#include "flowroots/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/structure.hpp"

namespace flowroots {

namespace {

// Connectivity of the pair-set skeleton, over vertices 0..n-1.
bool skeleton_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, w] : edges) {
        adj[u].push_back(w);
        adj[w].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

struct Skeleton {
    std::vector<std::pair<int, int>> edges;
    std::vector<char> edge_on_bridge;  // multiplicity 1 here would be a bridge
};

// Nonisomorphic connected simple graphs on exactly n vertices with at most
// max_edges edges.
std::vector<Skeleton> skeleton_classes(int n, int max_edges, long& examined,
                                       long budget) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            pairs.emplace_back(u, w);
    const int slots = static_cast<int>(pairs.size());
    if (slots >= 63) throw DomainError("corpus: vertex cap too large");
    std::map<std::string, Skeleton> classes;
    for (long long mask = 0; mask < (1LL << slots); ++mask) {
        if (++examined > budget)
            throw BudgetError("corpus: labelled enumeration budget exceeded");
        if (__builtin_popcountll(mask) > max_edges) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < slots; ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        if (!skeleton_connected(n, edges)) continue;
        Multigraph g(n, edges);
        std::string code = canonical_code(g);
        if (classes.count(code)) continue;
        Skeleton sk;
        sk.edges = edges;
        auto summary = structural_summary(g);
        sk.edge_on_bridge.assign(edges.size(), 0);
        for (int b : summary.bridges) sk.edge_on_bridge[b] = 1;
        classes.emplace(std::move(code), std::move(sk));
    }
    std::vector<Skeleton> out;
    out.reserve(classes.size());
    for (auto& [code, sk] : classes) out.push_back(std::move(sk));
    return out;
}

void expand_skeleton(const Skeleton& sk, const int n, const CorpusOptions& opt,
                     long& examined, std::map<std::string, Multigraph>& found) {
    const int s = static_cast<int>(sk.edges.size());
    std::vector<int> mult(s);
    // minimum multiplicity per slot: 2 on skeleton bridges, else 1
    std::vector<int> low(s);
    int low_sum = 0;
    for (int i = 0; i < s; ++i) {
        low[i] = sk.edge_on_bridge[i] ? 2 : 1;
        low_sum += low[i];
    }
    if (low_sum > opt.max_edges) return;
    mult = low;
    while (true) {
        if (++examined > opt.budget)
            throw BudgetError("corpus: labelled enumeration budget exceeded");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < s; ++i)
            for (int c = 0; c < mult[i]; ++c) edges.push_back(sk.edges[i]);
        Multigraph g(n, edges);
        found.emplace(canonical_code(g), std::move(g));
        // next multiplicity vector with sum <= max_edges (odometer with
        // carry; resetting position i to low[i] frees up budget)
        int total = std::accumulate(mult.begin(), mult.end(), 0);
        int i = 0;
        for (; i < s; ++i) {
            if (mult[i] < opt.max_multiplicity && total + 1 <= opt.max_edges) {
                ++mult[i];
                break;
            }
            total -= mult[i] - low[i];
            mult[i] = low[i];
        }
        if (i == s) break;
    }
}

void add_random_samples(const CorpusOptions& opt,
                        std::map<std::string, Multigraph>& found) {
    std::mt19937 rng(opt.seed);
    for (int sample = 0; sample < opt.random_samples; ++sample) {
        std::uniform_int_distribution<int> pick_n(3, opt.random_vertices);
        const int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_m(n, opt.random_edges);
        const int m = pick_m(rng);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(order[i], order[(i + 1) % n]);
        std::uniform_int_distribution<int> pick_v(0, n - 1);
        while (static_cast<int>(edges.size()) < m) {
            int u = pick_v(rng), w = pick_v(rng);
            if (u == w) continue;
            edges.emplace_back(u, w);
        }
        Multigraph g(n, edges);
        found.emplace(canonical_code(g), std::move(g));
    }
}

} // namespace

std::vector<Multigraph> default_corpus(const CorpusOptions& options) {
    if (options.max_vertices < 1 || options.max_edges < 0 ||
        options.max_multiplicity < 1)
        throw DomainError("corpus: caps must be positive");
    if (options.random_samples < 0 ||
        (options.random_samples > 0 &&
         (options.random_vertices < 3 ||
          options.random_edges < options.random_vertices)))
        throw DomainError("corpus: bad random sample options");
    long examined = 0;
    std::map<std::string, Multigraph> found;
    for (int n = 1; n <= options.max_vertices; ++n)
        for (const Skeleton& sk :
             skeleton_classes(n, options.max_edges, examined, options.budget))
            expand_skeleton(sk, n, options, examined, found);
    add_random_samples(options, found);
    std::vector<Multigraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

} // namespace flowroots
