#pragma once

// Seeded instance generators. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; bounded draws use rejection sampling on
// the raw output so instances are identical on every platform.
//
// Pair order: undirected pairs (i, j), i < j, row-major; directed arcs
// (i, j), i != j, row-major. Each pair is kept independently with
// probability p_num / p_den. Matrix entries are uniform in [lo, hi],
// row-major (upper triangle including the diagonal for symmetric matrices).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "immanant/errors.hpp"
#include "immanant/graph.hpp"
#include "immanant/matrix.hpp"

namespace immanant {

struct RandomSpec {
    std::size_t n = 0;
    std::uint64_t p_num = 1;
    std::uint64_t p_den = 2;
    bool directed = false;
    long entry_lo = -5;
    long entry_hi = 5;
    std::uint64_t seed = 0;

    void validate() const {
        if (p_den == 0 || p_num > p_den)
            throw ContractError("invalid probability " + std::to_string(p_num) + "/" + std::to_string(p_den));
        if (entry_lo > entry_hi)
            throw ContractError("invalid entry range");
    }
};

/// Parses "a/b", an integer, or a decimal such as "0.25" into num/den.
inline void parse_probability(std::string_view text, std::uint64_t& num, std::uint64_t& den) {
    const std::string s(text);
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            num = std::stoull(s.substr(0, slash));
            den = std::stoull(s.substr(slash + 1));
        } else if (auto dot = s.find('.'); dot != std::string::npos) {
            const std::string frac = s.substr(dot + 1);
            if (frac.size() > 18)
                throw ContractError("too many decimals in probability");
            den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            num = std::stoull(s.substr(0, dot).empty() ? "0" : s.substr(0, dot)) * den +
                  (frac.empty() ? 0 : std::stoull(frac));
        } else {
            num = std::stoull(s);
            den = 1;
        }
    } catch (const std::logic_error&) {
        throw ContractError("invalid probability '" + s + "'");
    }
    if (den == 0 || num > den)
        throw ContractError("invalid probability '" + s + "'");
}

namespace detail {
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

inline bool bernoulli(std::mt19937_64& rng, const RandomSpec& s) {
    if (s.p_num == 0)
        return false;
    if (s.p_num == s.p_den)
        return true;
    return uniform_below(rng, s.p_den) < s.p_num;
}

inline long uniform_entry(std::mt19937_64& rng, const RandomSpec& s) {
    const auto span = static_cast<std::uint64_t>(s.entry_hi - s.entry_lo) + 1;
    return s.entry_lo + static_cast<long>(uniform_below(rng, span));
}
}  // namespace detail

inline Graph random_graph(const RandomSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = i + 1; j < spec.n; ++j)
            if (detail::bernoulli(rng, spec))
                edges.emplace_back(i, j);
    return Graph(spec.n, edges);
}

inline Digraph random_digraph(const RandomSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    std::vector<VertexPair> arcs;
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            if (i != j && detail::bernoulli(rng, spec))
                arcs.emplace_back(i, j);
    return Digraph(spec.n, arcs);
}

inline IntMatrix random_symmetric_matrix(const RandomSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    IntMatrix m(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = i; j < spec.n; ++j) {
            m(i, j) = detail::uniform_entry(rng, spec);
            m(j, i) = m(i, j);
        }
    return m;
}

inline IntMatrix random_matrix(const RandomSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    IntMatrix m(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
        for (std::size_t j = 0; j < spec.n; ++j)
            m(i, j) = detail::uniform_entry(rng, spec);
    return m;
}

}  // namespace immanant
