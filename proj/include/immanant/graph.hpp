#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "immanant/errors.hpp"
#include "immanant/matrix.hpp"

namespace immanant {

/// Vertex pair, 0-based. For Graph edges first < second always holds.
using VertexPair = std::pair<std::size_t, std::size_t>;

namespace detail {
inline std::string pair_text(std::size_t u, std::size_t v) {
    return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}
}  // namespace detail

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws ValidationError on loops, duplicates or out-of-range endpoints.
    /// Pairs are 0-based and may be given in either orientation.
    Graph(std::size_t n, const std::vector<VertexPair>& edges) : n_(n) {
        std::set<VertexPair> seen;
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw ValidationError("edge endpoint out of range " + detail::pair_text(u, v));
            if (u == v)
                throw ValidationError("loop " + detail::pair_text(u, v));
            VertexPair e{std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second)
                throw ValidationError("duplicate edge " + detail::pair_text(e.first, e.second));
        }
        edges_.assign(seen.begin(), seen.end());
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<VertexPair>& edges() const noexcept { return edges_; }

    bool has_edge(std::size_t u, std::size_t v) const {
        return std::binary_search(edges_.begin(), edges_.end(), VertexPair{std::min(u, v), std::max(u, v)});
    }

    /// G - e, same vertex set.
    Graph without_edge(const VertexPair& e) const {
        std::vector<VertexPair> rest;
        rest.reserve(edges_.size());
        const VertexPair key{std::min(e.first, e.second), std::max(e.first, e.second)};
        for (const auto& f : edges_)
            if (f != key)
                rest.push_back(f);
        return Graph(n_, rest);
    }

    /// G - u - v; remaining vertices keep their relative order.
    Graph without_vertices(std::size_t u, std::size_t v) const {
        if (u >= n_ || v >= n_ || u == v)
            throw ContractError("without_vertices needs two distinct vertices");
        auto relabel = [u, v](std::size_t w) { return w - (w > u ? 1 : 0) - (w > v ? 1 : 0); };
        std::vector<VertexPair> rest;
        for (const auto& [a, b] : edges_)
            if (a != u && a != v && b != u && b != v)
                rest.emplace_back(relabel(a), relabel(b));
        return Graph(n_ - 2, rest);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexPair> edges_;
};

/// Simple digraph on vertices 0..n-1; antiparallel arcs are distinct.
class Digraph {
public:
    Digraph() = default;

    Digraph(std::size_t n, const std::vector<VertexPair>& arcs) : n_(n) {
        std::set<VertexPair> seen;
        for (auto a : arcs) {
            if (a.first >= n || a.second >= n)
                throw ValidationError("arc endpoint out of range " + detail::pair_text(a.first, a.second));
            if (a.first == a.second)
                throw ValidationError("loop " + detail::pair_text(a.first, a.second));
            if (!seen.insert(a).second)
                throw ValidationError("duplicate arc " + detail::pair_text(a.first, a.second));
        }
        arcs_.assign(seen.begin(), seen.end());
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return arcs_.size(); }
    const std::vector<VertexPair>& arcs() const noexcept { return arcs_; }

    bool has_arc(std::size_t u, std::size_t v) const {
        return std::binary_search(arcs_.begin(), arcs_.end(), VertexPair{u, v});
    }

    /// d^-(v) for every vertex.
    std::vector<std::size_t> in_degrees() const {
        std::vector<std::size_t> d(n_, 0);
        for (const auto& a : arcs_)
            ++d[a.second];
        return d;
    }

    Digraph without_arc(const VertexPair& a) const {
        std::vector<VertexPair> rest;
        rest.reserve(arcs_.size());
        for (const auto& b : arcs_)
            if (b != a)
                rest.push_back(b);
        return Digraph(n_, rest);
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexPair> arcs_;
};

inline IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(g.order());
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

inline IntMatrix adjacency_matrix(const Digraph& d) {
    IntMatrix a(d.order());
    for (const auto& [u, v] : d.arcs())
        a(u, v) = 1;
    return a;
}

/// diag(d^-(v_1), ..., d^-(v_n))
inline IntMatrix in_degree_matrix(const Digraph& d) {
    IntMatrix m(d.order());
    const auto deg = d.in_degrees();
    for (std::size_t i = 0; i < deg.size(); ++i)
        m(i, i) = static_cast<unsigned long>(deg[i]);
    return m;
}

struct EdgeDeckEntry {
    VertexPair edge;
    Graph minus_edge;      // G - e
    Graph minus_endpoints; // G - u - v
};

struct ArcDeckEntry {
    VertexPair arc;
    Digraph minus_arc;
};

inline std::vector<EdgeDeckEntry> edge_deck(const Graph& g) {
    std::vector<EdgeDeckEntry> deck;
    deck.reserve(g.size());
    for (const auto& e : g.edges())
        deck.push_back({e, g.without_edge(e), g.without_vertices(e.first, e.second)});
    return deck;
}

inline std::vector<ArcDeckEntry> arc_deck(const Digraph& d) {
    std::vector<ArcDeckEntry> deck;
    deck.reserve(d.size());
    for (const auto& a : d.arcs())
        deck.push_back({a, d.without_arc(a)});
    return deck;
}

}  // namespace immanant
