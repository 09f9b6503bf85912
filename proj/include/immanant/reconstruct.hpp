#pragma once

// Reconstruction of tau / g from an edge deck. On the monomial basis the map
// f -> (m - n) f + x f' is diagonal with eigenvalue (m - n + j) on x^j, so
// (m - n + j) a_j = r_j where r is the summed deck. For m < n the equation at
// j* = n - m reads 0 * a_j* = r_j* and leaves a_j* free.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "immanant/bigint.hpp"
#include "immanant/errors.hpp"
#include "immanant/graph.hpp"
#include "immanant/json_io.hpp"
#include "immanant/polynomial.hpp"
#include "immanant/second_immanant.hpp"

namespace immanant {

struct UndirectedDeck {
    std::size_t n = 0;
    std::size_t m = 0;
    /// (tau(G - e), tau(G - u - v)) per edge e = uv.
    std::vector<std::pair<IntPolynomial, IntPolynomial>> entries;

    void validate() const {
        if (entries.size() != m)
            throw MalformedDeck("deck declares m = " + std::to_string(m) + " but has " +
                                std::to_string(entries.size()) + " entries");
        if (m > 0 && n < 2)
            throw MalformedDeck("a graph with edges needs n >= 2");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& [minus_edge, minus_ends] = entries[i];
            if (minus_edge.degree() > static_cast<long>(n))
                throw MalformedDeck("entry " + std::to_string(i) + ": tau(G-e) has degree above n");
            if (minus_ends.degree() > static_cast<long>(n) - 2 && minus_ends.degree() > 0)
                throw MalformedDeck("entry " + std::to_string(i) + ": tau(G-u-v) has degree above n-2");
        }
    }
};

struct DirectedDeck {
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<ImmanantKind> kind;
    std::vector<IntPolynomial> entries;

    void validate() const {
        if (entries.size() != m)
            throw MalformedDeck("deck declares m = " + std::to_string(m) + " but has " +
                                std::to_string(entries.size()) + " entries");
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (entries[i].degree() > static_cast<long>(n))
                throw MalformedDeck("entry " + std::to_string(i) + ": g(G-e) has degree above n");
    }
};

enum class ReconstructionStatus { Complete, Underdetermined, Inconsistent, Unsupported };

inline std::string to_string(ReconstructionStatus s) {
    switch (s) {
    case ReconstructionStatus::Complete:
        return "complete";
    case ReconstructionStatus::Underdetermined:
        return "underdetermined";
    case ReconstructionStatus::Inconsistent:
        return "inconsistent";
    case ReconstructionStatus::Unsupported:
        return "unsupported";
    }
    return "unknown";
}

enum class CoefficientOutcome { Solved, Free, FreeFilled, NotDivisible, NonzeroAtFree };

inline std::string to_string(CoefficientOutcome o) {
    switch (o) {
    case CoefficientOutcome::Solved:
        return "solved";
    case CoefficientOutcome::Free:
        return "free";
    case CoefficientOutcome::FreeFilled:
        return "free-filled";
    case CoefficientOutcome::NotDivisible:
        return "not-divisible";
    case CoefficientOutcome::NonzeroAtFree:
        return "nonzero-at-free-index";
    }
    return "unknown";
}

struct CoefficientDiagnostic {
    std::size_t index = 0;
    long factor = 0;  // m - n + index
    BigInt rhs;
    CoefficientOutcome outcome = CoefficientOutcome::Solved;
};

struct ReconstructionReport {
    IntPolynomial polynomial;
    ReconstructionStatus status = ReconstructionStatus::Unsupported;
    std::optional<std::size_t> underdetermined_index;
    std::vector<CoefficientDiagnostic> diagnostics;
    /// How the free coefficient was filled, if it was.
    std::optional<std::string> fill_source;
};

inline IntPolynomial rhs_undirected(const UndirectedDeck& deck) {
    deck.validate();
    IntPolynomial r;
    for (const auto& [a, b] : deck.entries) {
        r += a;
        r += b;
    }
    return r;
}

inline IntPolynomial rhs_directed(const DirectedDeck& deck) {
    deck.validate();
    IntPolynomial r;
    for (const auto& p : deck.entries)
        r += p;
    return r;
}

/// Solves (m - n + j) a_j = r_j for j = 0..n. `free_value`, when given, is
/// used for a_{n-m} if that coefficient is left free.
inline ReconstructionReport solve_ode(const IntPolynomial& r, std::size_t n, std::size_t m,
                                      std::optional<BigInt> free_value = std::nullopt) {
    ReconstructionReport rep;
    if (n == m) {
        rep.status = ReconstructionStatus::Unsupported;
        return rep;
    }
    if (r.degree() > static_cast<long>(n))
        throw ContractError("solve_ode: right-hand side has degree above n");

    bool inconsistent = false;
    std::vector<BigInt> a(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        CoefficientDiagnostic d;
        d.index = j;
        d.factor = static_cast<long>(m) - static_cast<long>(n) + static_cast<long>(j);
        d.rhs = r.coefficient(j);
        if (d.factor == 0) {
            rep.underdetermined_index = j;
            if (d.rhs != 0) {
                d.outcome = CoefficientOutcome::NonzeroAtFree;
                inconsistent = true;
            } else {
                d.outcome = CoefficientOutcome::Free;
            }
        } else {
            const BigInt f(d.factor);
            if (mpz_divisible_p(d.rhs.get_mpz_t(), f.get_mpz_t())) {
                mpz_divexact(a[j].get_mpz_t(), d.rhs.get_mpz_t(), f.get_mpz_t());
                d.outcome = CoefficientOutcome::Solved;
            } else {
                d.outcome = CoefficientOutcome::NotDivisible;
                inconsistent = true;
            }
        }
        rep.diagnostics.push_back(std::move(d));
    }

    if (inconsistent) {
        rep.status = ReconstructionStatus::Inconsistent;
    } else if (rep.underdetermined_index) {
        if (free_value) {
            a[*rep.underdetermined_index] = *free_value;
            rep.diagnostics[*rep.underdetermined_index].outcome = CoefficientOutcome::FreeFilled;
            rep.fill_source = "caller";
            rep.status = ReconstructionStatus::Complete;
        } else {
            rep.status = ReconstructionStatus::Underdetermined;
        }
    } else {
        rep.status = ReconstructionStatus::Complete;
    }
    rep.polynomial = IntPolynomial(std::move(a));
    return rep;
}

namespace detail {
/// Leading coefficient of d2(xI - M) is n - 1, which pins a free a_n (m = 0).
inline void fill_leading(ReconstructionReport& rep, std::size_t n) {
    if (rep.status != ReconstructionStatus::Underdetermined || rep.underdetermined_index != n)
        return;
    std::vector<BigInt> a = rep.polynomial.coeffs();
    a.resize(n + 1);
    a[n] = static_cast<long>(n) - 1;
    rep.polynomial = IntPolynomial(std::move(a));
    rep.diagnostics[n].outcome = CoefficientOutcome::FreeFilled;
    rep.fill_source = "leading-coefficient";
    rep.status = ReconstructionStatus::Complete;
}
}  // namespace detail

inline ReconstructionReport reconstruct_tau(const UndirectedDeck& deck, std::optional<BigInt> free_value = std::nullopt) {
    auto rep = solve_ode(rhs_undirected(deck), deck.n, deck.m, free_value);
    detail::fill_leading(rep, deck.n);
    return rep;
}

inline ReconstructionReport reconstruct_g(const DirectedDeck& deck, std::optional<BigInt> free_value = std::nullopt) {
    auto rep = solve_ode(rhs_directed(deck), deck.n, deck.m, free_value);
    detail::fill_leading(rep, deck.n);
    return rep;
}

inline UndirectedDeck make_deck(const Graph& g, const LinalgOptions& opt = {}) {
    UndirectedDeck deck{g.order(), g.size(), {}};
    for (const auto& e : edge_deck(g))
        deck.entries.emplace_back(tau(e.minus_edge, CharPolyStrategy::Auto, opt),
                                  tau(e.minus_endpoints, CharPolyStrategy::Auto, opt));
    return deck;
}

inline DirectedDeck make_deck(const Digraph& d, ImmanantKind kind, const LinalgOptions& opt = {}) {
    DirectedDeck deck{d.order(), d.size(), kind, {}};
    for (const auto& e : arc_deck(d))
        deck.entries.push_back(g_poly(e.minus_arc, kind, CharPolyStrategy::Auto, opt));
    return deck;
}

// ---- JSON ----------------------------------------------------------------

inline std::optional<ImmanantKind> kind_from_name(const std::string& name) {
    if (name == "g1")
        return ImmanantKind::g1();
    if (name == "g2")
        return ImmanantKind::g2();
    if (name == "g3")
        return ImmanantKind::g3();
    return std::nullopt;
}

inline nlohmann::json to_json(const UndirectedDeck& deck) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [a, b] : deck.entries)
        entries.push_back({coeffs_json(a), coeffs_json(b)});
    return {{"n", deck.n}, {"m", deck.m}, {"kind", "tau"}, {"entries", entries}};
}

inline nlohmann::json to_json(const DirectedDeck& deck) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& p : deck.entries)
        entries.push_back(coeffs_json(p));
    nlohmann::json j = {{"n", deck.n}, {"m", deck.m}};
    if (deck.kind) {
        const std::string name = deck.kind->name();
        if (!kind_from_name(name))
            throw ContractError("deck kind " + name + " has no JSON name");
        j["kind"] = name;
    }
    j["entries"] = entries;
    return j;
}

using AnyDeck = std::variant<UndirectedDeck, DirectedDeck>;

/// Reads {"n", "m", "kind": "tau"|"g1"|"g2"|"g3", "entries"}. Without "kind"
/// the entry shape decides: pairs of polynomials mean an undirected deck.
inline AnyDeck deck_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object())
            throw MalformedDeck("deck must be a JSON object");
        for (const char* key : {"n", "m", "entries"})
            if (!j.contains(key))
                throw MalformedDeck(std::string("deck lacks \"") + key + "\"");
        if (!j["n"].is_number_integer() || !j["m"].is_number_integer() || j["n"].get<long long>() < 0 ||
            j["m"].get<long long>() < 0)
            throw MalformedDeck("\"n\" and \"m\" must be non-negative integers");
        const auto n = static_cast<std::size_t>(j["n"].get<long long>());
        const auto m = static_cast<std::size_t>(j["m"].get<long long>());
        const auto& entries = j["entries"];
        if (!entries.is_array())
            throw MalformedDeck("\"entries\" must be an array");

        std::optional<std::string> kind_name;
        if (j.contains("kind")) {
            if (!j["kind"].is_string())
                throw MalformedDeck("\"kind\" must be a string");
            kind_name = j["kind"].get<std::string>();
            if (*kind_name != "tau" && !kind_from_name(*kind_name))
                throw MalformedDeck("unknown deck kind '" + *kind_name + "'");
        }
        auto is_pair = [](const nlohmann::json& e) {
            return e.is_array() && e.size() == 2 && (e[0].is_array() || e[0].is_object());
        };
        const bool undirected =
            kind_name ? *kind_name == "tau" : (!entries.empty() && is_pair(entries[0]));

        if (undirected) {
            UndirectedDeck deck{n, m, {}};
            for (const auto& e : entries) {
                if (!is_pair(e))
                    throw MalformedDeck("undirected deck entries must be polynomial pairs");
                deck.entries.emplace_back(polynomial_from_json(e[0]), polynomial_from_json(e[1]));
            }
            deck.validate();
            return deck;
        }
        DirectedDeck deck{n, m, kind_name ? kind_from_name(*kind_name) : std::nullopt, {}};
        for (const auto& e : entries)
            deck.entries.push_back(polynomial_from_json(e));
        deck.validate();
        return deck;
    } catch (const ValidationError& e) {
        throw MalformedDeck(e.what());
    } catch (const ParseError& e) {
        throw MalformedDeck(e.what());
    }
}

inline nlohmann::json to_json(const ReconstructionReport& r) {
    nlohmann::json diag = nlohmann::json::array();
    for (const auto& d : r.diagnostics)
        diag.push_back({{"index", d.index},
                        {"factor", d.factor},
                        {"rhs", to_decimal(d.rhs)},
                        {"outcome", to_string(d.outcome)}});
    nlohmann::json j = {{"status", to_string(r.status)}, {"poly", to_json(r.polynomial)}};
    j["underdetermined_index"] = r.underdetermined_index ? nlohmann::json(*r.underdetermined_index) : nlohmann::json(nullptr);
    j["fill_source"] = r.fill_source ? nlohmann::json(*r.fill_source) : nlohmann::json(nullptr);
    j["diagnostics"] = diag;
    return j;
}

}  // namespace immanant
