#pragma once

// Executable checks of the masked-matrix summation identities and of the
// first-order differential identities satisfied by tau and g. Every check
// compares exact values; a report with holds == false is a kernel bug.

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "immanant/bigint.hpp"
#include "immanant/determinant.hpp"
#include "immanant/formats.hpp"
#include "immanant/graph.hpp"
#include "immanant/json_io.hpp"
#include "immanant/matrix.hpp"
#include "immanant/polynomial.hpp"
#include "immanant/second_immanant.hpp"

namespace immanant {

/// A scalar, a polynomial, or a list of scalars (entrywise identities).
using IdentityValue = std::variant<BigInt, IntPolynomial, std::vector<BigInt>>;

struct IdentityReport {
    std::string identity;
    std::string instance;
    std::optional<std::uint64_t> seed;
    IdentityValue lhs;
    IdentityValue rhs;
    bool holds = false;
};

inline nlohmann::json to_json(const IdentityValue& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, BigInt>) {
                return to_decimal(x);
            } else if constexpr (std::is_same_v<T, IntPolynomial>) {
                return immanant::to_json(x);
            } else {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& e : x)
                    a.push_back(to_decimal(e));
                return a;
            }
        },
        v);
}

inline nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json j = {{"identity", r.identity}, {"instance", r.instance}, {"holds", r.holds}};
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    return j;
}

/// Stable descriptor "matrix:k=<k>:fnv1a=<hex>" of the entries.
inline std::string describe(const IntMatrix& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const auto& v : m.row(i)) {
            for (char c : to_decimal(v) + ",") {
                h ^= static_cast<unsigned char>(c);
                h *= 1099511628211ull;
            }
        }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return "matrix:k=" + std::to_string(m.size()) + ":fnv1a=" + buf;
}
inline std::string describe(const Graph& g) { return "graph6:" + to_graph6(g); }
inline std::string describe(const Digraph& d) { return "digraph6:" + to_digraph6(d); }

namespace detail {

template <typename T>
IdentityReport make_report(std::string name, std::string instance, T lhs, T rhs) {
    const bool holds = lhs == rhs;
    return {std::move(name), std::move(instance), std::nullopt, std::move(lhs), std::move(rhs), holds};
}

inline void require_symmetric(const IntMatrix& b) {
    if (!b.is_symmetric())
        throw ContractError("identity requires a symmetric matrix");
}

inline void require_order_two(const IntMatrix& b) {
    if (b.size() < 2)
        throw ContractError("identity requires k >= 2");
}

inline BigInt signed_cofactor_term(std::size_t i, std::size_t j, const BigInt& entry, const BigInt& minor_det) {
    return ((i + j) % 2 == 0) ? BigInt(entry * minor_det) : BigInt(-entry * minor_det);
}

/// Shared shape of the symmetric-mask lemmas: f is det or d2.
template <typename F>
IdentityReport symmetric_mask_sum(const std::string& name, const IntMatrix& b, F f, bool nonzero_only) {
    require_symmetric(b);
    const std::size_t k = b.size();
    BigInt rhs = 0;
    std::size_t nonzero_offdiag = 0;
    std::size_t zero_diag = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (b(i, i) == 0)
            ++zero_diag;
        for (std::size_t j = i; j < k; ++j) {
            if (nonzero_only && b(i, j) == 0)
                continue;
            rhs += f(mask_symmetric(b, i, j));
            if (i < j) {
                if (b(i, j) != 0)
                    nonzero_offdiag += 2;
                rhs += b(i, j) * b(i, j) * f(b.principal_minor(i, j));
            }
        }
    }
    BigInt factor;
    if (nonzero_only) {
        factor = BigInt(static_cast<long>(nonzero_offdiag / 2)) - BigInt(static_cast<long>(zero_diag));
    } else {
        factor = BigInt(static_cast<unsigned long>(k * k - k));
        factor /= 2;
    }
    return make_report(name, describe(b), BigInt(factor * f(b)), rhs);
}

}  // namespace detail

/// (k^2-k)/2 det(B) = sum_{i<=j} det(B_[ij]) + sum_{i<j} b_ij^2 det(B with rows/cols i,j removed)
inline IdentityReport verify_lemma_2_2(const IntMatrix& b, const LinalgOptions& opt = {}) {
    detail::require_order_two(b);
    return detail::symmetric_mask_sum(
        "lemma-2.2", b, [&](const IntMatrix& x) { return det(x, DetStrategy::Auto, opt); }, false);
}

/// Same shape as lemma 2.2 with d2 in place of det.
inline IdentityReport verify_lemma_2_3(const IntMatrix& b, const LinalgOptions& opt = {}) {
    detail::require_order_two(b);
    return detail::symmetric_mask_sum("lemma-2.3", b, [&](const IntMatrix& x) { return d2(x, opt); }, false);
}

/// (m - c) d2(B) over nonzero positions only; 2m nonzero off-diagonal
/// entries, c zero diagonal entries.
inline IdentityReport verify_lemma_2_4(const IntMatrix& b, const LinalgOptions& opt = {}) {
    return detail::symmetric_mask_sum("lemma-2.4", b, [&](const IntMatrix& x) { return d2(x, opt); }, true);
}

/// det(B_[ss]) = det(B) - b_ss det(B(s)) for every s.
inline IdentityReport verify_eq3(const IntMatrix& b, const LinalgOptions& opt = {}) {
    detail::require_symmetric(b);
    const BigInt d = det(b, DetStrategy::Auto, opt);
    std::vector<BigInt> lhs, rhs;
    for (std::size_t s = 0; s < b.size(); ++s) {
        lhs.push_back(det(mask_symmetric(b, s, s), DetStrategy::Auto, opt));
        rhs.push_back(d - b(s, s) * det(b.principal_minor(s), DetStrategy::Auto, opt));
    }
    return detail::make_report("eq-3", describe(b), lhs, rhs);
}

/// det(B_[ij]) = det B - (-1)^{i+j} b_ij det(B^i_j) - (-1)^{i+j} b_ji det(B^j_i)
///               - b_ij^2 det(B^{ij}_{ij}) for every i != j (ordered pairs, row-major).
inline IdentityReport verify_eq4(const IntMatrix& b, const LinalgOptions& opt = {}) {
    detail::require_symmetric(b);
    const BigInt d = det(b, DetStrategy::Auto, opt);
    std::vector<BigInt> lhs, rhs;
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i == j)
                continue;
            lhs.push_back(det(mask_symmetric(b, i, j), DetStrategy::Auto, opt));
            BigInt r = d;
            r -= detail::signed_cofactor_term(i, j, b(i, j), det(b.without(i, j), DetStrategy::Auto, opt));
            r -= detail::signed_cofactor_term(i, j, b(j, i), det(b.without(j, i), DetStrategy::Auto, opt));
            r -= b(i, j) * b(i, j) * det(b.principal_minor(i, j), DetStrategy::Auto, opt);
            rhs.push_back(r);
        }
    return detail::make_report("eq-4", describe(b), lhs, rhs);
}

/// det(R_ij) = det(R) - (-1)^{i+j} r_ij det(R^i_j) for every (i, j), row-major.
inline IdentityReport verify_eq13(const IntMatrix& r, const LinalgOptions& opt = {}) {
    const BigInt d = det(r, DetStrategy::Auto, opt);
    std::vector<BigInt> lhs, rhs;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) {
            lhs.push_back(det(mask_directed(r, i, j), DetStrategy::Auto, opt));
            rhs.push_back(d - detail::signed_cofactor_term(i, j, r(i, j), det(r.without(i, j), DetStrategy::Auto, opt)));
        }
    return detail::make_report("eq-13", describe(r), lhs, rhs);
}

namespace detail {
template <typename F>
IdentityReport directed_mask_sum(const std::string& name, const IntMatrix& r, F f, bool nonzero_only) {
    require_order_two(r);
    const std::size_t k = r.size();
    BigInt rhs = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!nonzero_only || r(i, j) != 0)
                rhs += f(mask_directed(r, i, j));
    const long factor = nonzero_only ? static_cast<long>(r.count_nonzero()) - static_cast<long>(k)
                                     : static_cast<long>(k * k - k);
    return make_report(name, describe(r), BigInt(factor * f(r)), rhs);
}
}  // namespace detail

/// (k^2-k) det(R) = sum over all (i, j) of det(R_ij)
inline IdentityReport verify_lemma_3_2(const IntMatrix& r, const LinalgOptions& opt = {}) {
    return detail::directed_mask_sum(
        "lemma-3.2", r, [&](const IntMatrix& x) { return det(x, DetStrategy::Auto, opt); }, false);
}

/// (k^2-k) d2(R) = sum over all (i, j) of d2(R_ij)
inline IdentityReport verify_lemma_3_3(const IntMatrix& r, const LinalgOptions& opt = {}) {
    return detail::directed_mask_sum("lemma-3.3", r, [&](const IntMatrix& x) { return d2(x, opt); }, false);
}

/// (l - k) d2(R) = sum over nonzero positions of d2(R_ij), l = #nonzero entries.
inline IdentityReport verify_cor_3_4(const IntMatrix& r, const LinalgOptions& opt = {}) {
    return detail::directed_mask_sum("cor-3.4", r, [&](const IntMatrix& x) { return d2(x, opt); }, true);
}

/// (m - n) f + x f' for a polynomial f.
inline IntPolynomial ode_operator(const IntPolynomial& f, long n, long m) {
    return BigInt(m - n) * f + f.derivative().shift_mul_x();
}

/// (m-n) tau(G) + x tau'(G) = sum over edges uv of [tau(G - uv) + tau(G - u - v)]
inline IdentityReport verify_lemma_2_5(const Graph& g, const LinalgOptions& opt = {}) {
    const IntPolynomial lhs = ode_operator(tau(g, CharPolyStrategy::Auto, opt), static_cast<long>(g.order()),
                                           static_cast<long>(g.size()));
    IntPolynomial rhs;
    for (const auto& e : edge_deck(g)) {
        rhs += tau(e.minus_edge, CharPolyStrategy::Auto, opt);
        rhs += tau(e.minus_endpoints, CharPolyStrategy::Auto, opt);
    }
    return detail::make_report("lemma-2.5", describe(g), lhs, rhs);
}

/// Lemma 2.5 with the right-hand side assembled from masked adjacency
/// matrices A_[uv] and principal submatrices instead of graph deletion.
inline IdentityReport verify_lemma_2_5_masked(const Graph& g, const LinalgOptions& opt = {}) {
    const IntMatrix a = adjacency_matrix(g);
    const IntPolynomial lhs = ode_operator(second_immanantal_poly(a, CharPolyStrategy::Auto, opt),
                                           static_cast<long>(g.order()), static_cast<long>(g.size()));
    IntPolynomial rhs;
    for (const auto& [u, v] : g.edges()) {
        rhs += second_immanantal_poly(mask_symmetric(a, u, v), CharPolyStrategy::Auto, opt);
        rhs += second_immanantal_poly(a.principal_minor(u, v), CharPolyStrategy::Auto, opt);
    }
    return detail::make_report("lemma-2.5-masked", describe(g), lhs, rhs);
}

/// d/dx d2(xI - M) = sum_u det(xI - M(u)) + sum_u d2(xI - M(u)); for
/// M = A(G) this is the expansion of tau'.
inline IdentityReport verify_derivative_expansion(const IntMatrix& m, const LinalgOptions& opt = {}) {
    const IntPolynomial lhs = second_immanantal_poly(m, CharPolyStrategy::Auto, opt).derivative();
    IntPolynomial rhs;
    for (std::size_t u = 0; u < m.size(); ++u) {
        const IntMatrix mu = m.principal_minor(u);
        rhs += char_poly(mu, CharPolyStrategy::Auto, opt);
        rhs += second_immanantal_poly(mu, CharPolyStrategy::Auto, opt);
    }
    return detail::make_report("eq-8", describe(m), lhs, rhs);
}

/// (m-n) g(D) + x g'(D) = sum over arcs e of g(D - e), each deck member using
/// its own in-degree matrix.
inline IdentityReport verify_lemma_3_5(const Digraph& d, ImmanantKind kind, const LinalgOptions& opt = {}) {
    const IntPolynomial lhs = ode_operator(g_poly(d, kind, CharPolyStrategy::Auto, opt), static_cast<long>(d.order()),
                                           static_cast<long>(d.size()));
    IntPolynomial rhs;
    for (const auto& e : arc_deck(d))
        rhs += g_poly(e.minus_arc, kind, CharPolyStrategy::Auto, opt);
    return detail::make_report("lemma-3.5:" + kind.name(), describe(d), lhs, rhs);
}

/// Lemma 3.5 with deck matrices built as R_uv of eta*D + alpha*A with the
/// (v, v) entry lowered by eta.
inline IdentityReport verify_lemma_3_5_masked(const Digraph& d, ImmanantKind kind, const LinalgOptions& opt = {}) {
    const IntMatrix r = kind_matrix(d, kind);
    const IntPolynomial lhs = ode_operator(second_immanantal_poly(r, CharPolyStrategy::Auto, opt),
                                           static_cast<long>(d.order()), static_cast<long>(d.size()));
    IntPolynomial rhs;
    for (const auto& [u, v] : d.arcs()) {
        IntMatrix member = mask_directed(r, u, v);
        member(v, v) -= kind.eta;
        rhs += second_immanantal_poly(member, CharPolyStrategy::Auto, opt);
    }
    return detail::make_report("lemma-3.5-masked:" + kind.name(), describe(d), lhs, rhs);
}

/// m g = n g - x g' + sum over arcs e of g(D - e)
inline IdentityReport verify_eq22(const Digraph& d, ImmanantKind kind, const LinalgOptions& opt = {}) {
    const IntPolynomial g = g_poly(d, kind, CharPolyStrategy::Auto, opt);
    const IntPolynomial lhs = BigInt(static_cast<unsigned long>(d.size())) * g;
    IntPolynomial rhs = BigInt(static_cast<unsigned long>(d.order())) * g - g.derivative().shift_mul_x();
    for (const auto& e : arc_deck(d))
        rhs += g_poly(e.minus_arc, kind, CharPolyStrategy::Auto, opt);
    return detail::make_report("eq-22:" + kind.name(), describe(d), lhs, rhs);
}

}  // namespace immanant
