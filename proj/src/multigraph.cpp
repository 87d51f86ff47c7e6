#include "flowroots/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "flowroots/errors.hpp"

namespace flowroots {

namespace {

std::pair<int, int> normalize(int u, int w) {
    return u <= w ? std::make_pair(u, w) : std::make_pair(w, u);
}

} // namespace

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n_(vertex_count), edges_(std::move(edge_list)) {
    if (n_ < 0)
        throw DomainError("multigraph: negative vertex count");
    for (auto& e : edges_) {
        e = normalize(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw DomainError("multigraph: edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
}

const std::pair<int, int>& Multigraph::edge(int id) const {
    if (id < 0 || id >= edge_count())
        throw DomainError("multigraph: edge id out of range");
    return edges_[id];
}

bool Multigraph::is_loop(int id) const {
    const auto& e = edge(id);
    return e.first == e.second;
}

int Multigraph::loop_count() const {
    int k = 0;
    for (const auto& e : edges_)
        if (e.first == e.second) ++k;
    return k;
}

int Multigraph::degree(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("multigraph: vertex out of range");
    int d = 0;
    for (const auto& e : edges_) {
        if (e.first == v) ++d;
        if (e.second == v) ++d; // a loop counts twice
    }
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& e : edges_) {
        ++d[e.first];
        ++d[e.second];
    }
    return d;
}

std::vector<int> Multigraph::neighbours(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("multigraph: vertex out of range");
    std::set<int> nb;
    for (const auto& e : edges_) {
        if (e.first == v && e.second != v) nb.insert(e.second);
        if (e.second == v && e.first != v) nb.insert(e.first);
    }
    return {nb.begin(), nb.end()};
}

Multigraph Multigraph::delete_edge(int id) const {
    return delete_edges({id});
}

Multigraph Multigraph::delete_edges(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids)
        edge(id); // range check
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edges_.size() - ids.size());
    std::size_t next = 0;
    for (int id = 0; id < edge_count(); ++id) {
        if (next < ids.size() && ids[next] == id) {
            ++next;
            continue;
        }
        kept.push_back(edges_[id]);
    }
    return Multigraph(n_, std::move(kept));
}

Multigraph Multigraph::contract_edge(int id) const {
    const auto [u, w] = edge(id);
    Multigraph without = delete_edge(id);
    if (u == w)
        return without; // contracting a loop is just deleting it
    return without.identify_vertices(u, w);
}

Multigraph Multigraph::contract_edges(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    // Union-find over the endpoints of the contracted edges.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (int id : ids) {
        const auto [u, w] = edge(id);
        parent[find(u)] = find(w);
    }
    // Keep one vertex per class, renumbered by smallest old label.
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (find(v) == v) label[v] = next++;
    std::vector<std::pair<int, int>> kept;
    std::size_t skip = 0;
    for (int id = 0; id < edge_count(); ++id) {
        if (skip < ids.size() && ids[skip] == id) {
            ++skip;
            continue;
        }
        kept.emplace_back(label[find(edges_[id].first)], label[find(edges_[id].second)]);
    }
    return Multigraph(next, std::move(kept));
}

Multigraph Multigraph::identify_vertices(int u, int v) const {
    if (u == v)
        throw DomainError("identify_vertices: endpoints must differ");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
        throw DomainError("identify_vertices: vertex out of range");
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size());
    auto remap = [&](int x) {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    for (const auto& e : edges_)
        mapped.emplace_back(remap(e.first), remap(e.second));
    return Multigraph(n_ - 1, std::move(mapped));
}

Multigraph Multigraph::delete_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("delete_vertex: vertex out of range");
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : edges_) {
        if (e.first == v || e.second == v) continue;
        kept.emplace_back(e.first > v ? e.first - 1 : e.first,
                          e.second > v ? e.second - 1 : e.second);
    }
    return Multigraph(n_ - 1, std::move(kept));
}

Multigraph Multigraph::add_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("add_edge: vertex out of range");
    auto list = edges_;
    list.push_back(normalize(u, v));
    return Multigraph(n_, std::move(list));
}

Multigraph Multigraph::relabel(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw DomainError("relabel: permutation has wrong length");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[p])
            throw DomainError("relabel: not a permutation");
        seen[p] = true;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size());
    for (const auto& e : edges_)
        mapped.emplace_back(perm[e.first], perm[e.second]);
    return Multigraph(n_, std::move(mapped));
}

Multigraph Multigraph::subgraph(const std::vector<int>& edge_ids,
                                const std::vector<int>& extra_vertices,
                                std::vector<int>* old_of) const {
    std::set<int> verts(extra_vertices.begin(), extra_vertices.end());
    for (int v : verts)
        if (v < 0 || v >= n_)
            throw DomainError("subgraph: vertex out of range");
    for (int id : edge_ids) {
        const auto& e = edge(id);
        verts.insert(e.first);
        verts.insert(e.second);
    }
    std::vector<int> old_labels(verts.begin(), verts.end());
    std::vector<int> new_of(n_, -1);
    for (std::size_t i = 0; i < old_labels.size(); ++i)
        new_of[old_labels[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> kept;
    kept.reserve(edge_ids.size());
    for (int id : edge_ids)
        kept.emplace_back(new_of[edges_[id].first], new_of[edges_[id].second]);
    if (old_of)
        *old_of = old_labels;
    return Multigraph(static_cast<int>(old_labels.size()), std::move(kept));
}

std::string Multigraph::to_text() const {
    std::ostringstream out;
    out << "v " << n_ << "\n";
    for (const auto& e : edges_)
        out << "e " << e.first << " " << e.second << "\n";
    return out.str();
}

Multigraph parse_multigraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edge_list;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue; // blank or comment-only line
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "v") {
            if (n >= 0) fail("duplicate 'v' directive");
            long count;
            if (!(ls >> count)) fail("expected vertex count after 'v'");
            if (count < 0) fail("negative vertex count");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after 'v' directive");
            n = count;
        } else if (tok == "e") {
            if (n < 0) fail("'e' before 'v' directive");
            long u, w;
            if (!(ls >> u >> w)) fail("expected two endpoints after 'e'");
            std::string rest;
            if (ls >> rest) fail("trailing tokens after edge");
            if (u < 0 || w < 0 || u >= n || w >= n)
                fail("vertex id out of range");
            edge_list.emplace_back(static_cast<int>(u), static_cast<int>(w));
        } else {
            fail("unknown directive '" + tok + "'");
        }
    }
    if (n < 0)
        throw ParseError("missing 'v' directive");
    return Multigraph(static_cast<int>(n), std::move(edge_list));
}

} // namespace flowroots
