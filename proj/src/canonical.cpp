#include "flowroots/canonical.hpp"

#include <algorithm>
#include <sstream>

#include "flowroots/errors.hpp"

namespace flowroots {

namespace {

struct CollapsedGraph {
    int n = 0;
    std::vector<int> loops;               // loop multiplicity per vertex
    std::vector<std::vector<int>> mult;   // symmetric multiplicity matrix
};

CollapsedGraph collapse(const Multigraph& g) {
    CollapsedGraph c;
    c.n = g.vertex_count();
    c.loops.assign(c.n, 0);
    c.mult.assign(c.n, std::vector<int>(c.n, 0));
    for (const auto& [u, w] : g.edges()) {
        if (u == w) {
            ++c.loops[u];
        } else {
            ++c.mult[u][w];
            ++c.mult[w][u];
        }
    }
    return c;
}

// Split colour classes until stable.  Colours are dense ranks; refinement
// only ever splits cells, keeping the relative cell order.
void refine(const CollapsedGraph& g, std::vector<int>& colour) {
    const int n = g.n;
    while (true) {
        // signature: old colour, loops, sorted (neighbour colour, multiplicity)
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> adj;
            for (int w = 0; w < n; ++w)
                if (g.mult[v][w] > 0)
                    adj.emplace_back(colour[w], g.mult[v][w]);
            std::sort(adj.begin(), adj.end());
            std::vector<int> key{colour[v], g.loops[v]};
            for (const auto& [cw, m] : adj) {
                key.push_back(cw);
                key.push_back(m);
            }
            keyed[v] = {std::move(key), v};
        }
        auto sorted = keyed;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second] = rank;
        }
        if (next == colour) return;
        colour = std::move(next);
    }
}

std::string encode(const CollapsedGraph& g, const std::vector<int>& perm) {
    const int n = g.n;
    std::vector<int> old_of(n);
    for (int v = 0; v < n; ++v)
        old_of[perm[v]] = v;
    std::ostringstream out;
    out << n << ';';
    for (int i = 0; i < n; ++i) {
        if (i) out << ',';
        out << g.loops[old_of[i]];
    }
    out << ';';
    bool first = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!first) out << ',';
            first = false;
            out << g.mult[old_of[i]][old_of[j]];
        }
    }
    return out.str();
}

struct Search {
    const CollapsedGraph& g;
    std::string best;
    std::vector<int> best_perm;
    bool have_best = false;

    void leaf(const std::vector<int>& colour) {
        // discrete colouring: colour is the permutation old->new
        std::string code = encode(g, colour);
        if (!have_best || code < best) {
            best = std::move(code);
            best_perm = colour;
            have_best = true;
        }
    }

    void descend(std::vector<int> colour) {
        refine(g, colour);
        // find the first smallest non-singleton cell
        const int n = g.n;
        std::vector<int> size(n, 0);
        for (int v = 0; v < n; ++v)
            ++size[colour[v]];
        int target = -1, target_size = n + 1;
        for (int c = 0; c < n; ++c)
            if (size[c] > 1 && size[c] < target_size) {
                target = c;
                target_size = size[c];
            }
        if (target < 0) {
            leaf(colour);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (colour[v] != target) continue;
            auto branched = colour;
            for (int w = 0; w < n; ++w)
                branched[w] *= 2;
            branched[v] += 1;
            descend(std::move(branched));
        }
    }

};

} // namespace

std::vector<int> canonical_labeling(const Multigraph& g) {
    CollapsedGraph c = collapse(g);
    if (c.n == 0) return {};
    Search search{c, {}, {}};
    search.descend(std::vector<int>(c.n, 0));
    return search.best_perm;
}

std::string canonical_code(const Multigraph& g) {
    CollapsedGraph c = collapse(g);
    if (c.n == 0) return "0;;";
    Search search{c, {}, {}};
    search.descend(std::vector<int>(c.n, 0));
    return search.best;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    return canonical_code(a) == canonical_code(b);
}

Multigraph from_canonical_code(const std::string& code) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : code) {
        if (ch == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw ParseError("canonical code: expected three ';' fields");
    auto number = [](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw ParseError("canonical code: bad number '" + s + "'");
        }
        if (used != s.size() || value < 0)
            throw ParseError("canonical code: bad number '" + s + "'");
        return value;
    };
    auto ints = [&number](const std::string& s) {
        std::vector<int> out;
        std::string item;
        std::istringstream in(s);
        while (std::getline(in, item, ','))
            if (!item.empty()) out.push_back(number(item));
        return out;
    };
    int n = number(parts[0]);
    auto loops = ints(parts[1]);
    auto mult = ints(parts[2]);
    if (static_cast<int>(loops.size()) != n && !(n == 0 && loops.empty()))
        throw ParseError("canonical code: loop list has wrong length");
    if (static_cast<int>(mult.size()) != n * (n - 1) / 2 && n >= 2)
        throw ParseError("canonical code: multiplicity list has wrong length");
    std::vector<std::pair<int, int>> edge_list;
    for (int v = 0; v < n; ++v)
        for (int l = 0; l < loops[v]; ++l)
            edge_list.emplace_back(v, v);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
            for (int l = 0; l < mult[idx]; ++l)
                edge_list.emplace_back(i, j);
    return Multigraph(n, std::move(edge_list));
}

} // namespace flowroots
