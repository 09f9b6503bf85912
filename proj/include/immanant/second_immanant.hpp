#pragma once

// The second immanant d2, i.e. the immanant of the character of S_k
// attached to the partition (2, 1^(k-2)), and the polynomials d2(xI - M).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "immanant/bigint.hpp"
#include "immanant/charpoly.hpp"
#include "immanant/determinant.hpp"
#include "immanant/errors.hpp"
#include "immanant/graph.hpp"
#include "immanant/matrix.hpp"
#include "immanant/polynomial.hpp"

namespace immanant {

/// Selects g(D; x) = d2(xI - eta*D(D) - alpha*A(D)), D the in-degree matrix.
struct ImmanantKind {
    int eta = 0;    // 0 or 1
    int alpha = 1;  // -1 or 1

    /// d2(xI - A)
    static constexpr ImmanantKind g1() { return {0, 1}; }
    /// d2(xI - (D - A)), Laplacian
    static constexpr ImmanantKind g2() { return {1, -1}; }
    /// d2(xI - (D + A)), signless Laplacian
    static constexpr ImmanantKind g3() { return {1, 1}; }

    void validate() const {
        if ((eta != 0 && eta != 1) || (alpha != -1 && alpha != 1))
            throw ContractError("ImmanantKind needs eta in {0,1} and alpha in {-1,1}");
    }

    std::string name() const {
        if (*this == g1())
            return "g1";
        if (*this == g2())
            return "g2";
        if (*this == g3())
            return "g3";
        return "eta=" + std::to_string(eta) + ",alpha=" + std::to_string(alpha);
    }

    friend constexpr bool operator==(const ImmanantKind&, const ImmanantKind&) = default;
};

/// d2(M) = sum_i m_ii det(M(i)) - det(M). Gives -1 for k = 0 and 0 for k = 1.
inline BigInt d2(const IntMatrix& m, const LinalgOptions& opt = {}) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m(i, i) != 0)
            s += m(i, i) * det(m.principal_minor(i), DetStrategy::Auto, opt);
    return s - det(m, DetStrategy::Auto, opt);
}

/// Character value of the (2, 1^(k-2)) irreducible: sgn(sigma) (fix(sigma) - 1).
inline long second_character(const std::vector<std::size_t>& perm) {
    const std::size_t k = perm.size();
    std::vector<bool> seen(k, false);
    long fixed = 0;
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (seen[i])
            continue;
        ++cycles;
        if (perm[i] == i)
            ++fixed;
        for (std::size_t j = i; !seen[j]; j = perm[j])
            seen[j] = true;
    }
    const long sign = ((k - cycles) % 2 == 0) ? 1 : -1;
    return sign * (fixed - 1);
}

/// Brute-force sum over S_k of chi(sigma) prod_s m_{s,sigma(s)}.
inline BigInt d2_oracle(const IntMatrix& m, std::size_t limit = 9) {
    const std::size_t k = m.size();
    if (k < 2 || k > limit)
        throw UnsupportedSize("d2_oracle supports 2 <= k <= " + std::to_string(limit) + ", got " + std::to_string(k));
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    BigInt total = 0;
    BigInt prod;
    do {
        prod = 1;
        for (std::size_t s = 0; s < k && prod != 0; ++s)
            prod *= m(s, perm[s]);
        if (prod != 0)
            total += second_character(perm) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// d2(xI - M) = sum_i (x - m_ii) det(xI - M(i)) - det(xI - M).
/// Degree k with leading coefficient k - 1; the constant -1 for k = 0.
inline IntPolynomial second_immanantal_poly(const IntMatrix& m, CharPolyStrategy strategy = CharPolyStrategy::Auto,
                                            const LinalgOptions& opt = {}) {
    const std::size_t k = m.size();
    if (k == 0)
        return IntPolynomial::constant(-1);
    const auto minors = principal_minor_char_polys(m, strategy, opt);
    IntPolynomial total = -char_poly(m, strategy, opt);
    for (std::size_t i = 0; i < k; ++i)
        total += IntPolynomial::linear(m(i, i)) * minors[i];
    return total;
}

/// tau(G; x) = d2(xI - A(G))
inline IntPolynomial tau(const Graph& g, CharPolyStrategy strategy = CharPolyStrategy::Auto,
                         const LinalgOptions& opt = {}) {
    return second_immanantal_poly(adjacency_matrix(g), strategy, opt);
}

/// eta*D + alpha*A, the matrix whose second immanantal polynomial is g.
inline IntMatrix kind_matrix(const Digraph& d, ImmanantKind kind) {
    kind.validate();
    IntMatrix m = BigInt(kind.alpha) * adjacency_matrix(d);
    if (kind.eta != 0)
        m = m + in_degree_matrix(d);
    return m;
}

inline IntPolynomial g_poly(const Digraph& d, ImmanantKind kind, CharPolyStrategy strategy = CharPolyStrategy::Auto,
                            const LinalgOptions& opt = {}) {
    return second_immanantal_poly(kind_matrix(d, kind), strategy, opt);
}

/// B_[ij]: entries (i,j) and (j,i) set to zero. B must be symmetric.
inline IntMatrix mask_symmetric(IntMatrix b, std::size_t i, std::size_t j) {
    if (i >= b.size() || j >= b.size())
        throw ContractError("mask_symmetric index out of range");
    if (!b.is_symmetric())
        throw ContractError("mask_symmetric requires a symmetric matrix");
    b(i, j) = 0;
    b(j, i) = 0;
    return b;
}

/// R_ij: entry (i,j) set to zero.
inline IntMatrix mask_directed(IntMatrix r, std::size_t i, std::size_t j) {
    if (i >= r.size() || j >= r.size())
        throw ContractError("mask_directed index out of range");
    r(i, j) = 0;
    return r;
}

}  // namespace immanant
