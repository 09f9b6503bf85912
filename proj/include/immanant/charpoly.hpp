#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "immanant/bigint.hpp"
#include "immanant/determinant.hpp"
#include "immanant/matrix.hpp"
#include "immanant/modular.hpp"
#include "immanant/parallel.hpp"
#include "immanant/polynomial.hpp"

namespace immanant {

enum class CharPolyStrategy { Auto, Interpolation, FaddeevLeVerrier, Modular };

namespace detail {

inline IntMatrix shifted(const IntMatrix& m, long t) {
    IntMatrix s(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            s(i, j) = -m(i, j);
    for (std::size_t i = 0; i < m.size(); ++i)
        s(i, i) += t;
    return s;
}

/// Polynomial of degree <= k through (t, values[t]), t = 0..k, via Newton
/// forward differences. Every division is exact for integer polynomials.
inline IntPolynomial interpolate_consecutive(std::vector<BigInt> values) {
    const std::size_t k1 = values.size();
    if (k1 == 0)
        return {};
    std::vector<BigInt> newton(k1);
    BigInt fact = 1;
    for (std::size_t j = 0; j < k1; ++j) {
        if (j > 0)
            fact *= static_cast<unsigned long>(j);
        if (!mpz_divisible_p(values[0].get_mpz_t(), fact.get_mpz_t()))
            throw std::logic_error("interpolation: forward difference not divisible by j!");
        mpz_divexact(newton[j].get_mpz_t(), values[0].get_mpz_t(), fact.get_mpz_t());
        for (std::size_t t = 0; t + 1 < k1 - j; ++t)
            values[t] = values[t + 1] - values[t];
    }
    IntPolynomial p = IntPolynomial::constant(newton[k1 - 1]);
    for (std::size_t j = k1 - 1; j-- > 0;) {
        p = p * IntPolynomial::linear(BigInt(static_cast<unsigned long>(j)));
        p += IntPolynomial::constant(newton[j]);
    }
    return p;
}

/// Bound on every coefficient of det(xI - M): prod_i (1 + ceil ||row_i||_2).
/// Coefficient k is a signed sum of k-by-k principal minors, each bounded by
/// the product of its row norms, so |c_k| <= e_k(r) <= prod (1 + r_i).
inline BigInt char_poly_coefficient_bound(const IntMatrix& m) {
    BigInt h = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        BigInt s = 0;
        for (const auto& v : m.row(i))
            s += v * v;
        h *= ceil_sqrt(s) + 1;
    }
    return h;
}

/// Characteristic polynomials of several matrices (all bounded by `bound`)
/// as a (prime x matrix) grid of independent Hessenberg reductions.
inline std::vector<IntPolynomial> modular_char_polys(const std::vector<IntMatrix>& ms, const BigInt& bound,
                                                     std::size_t threads) {
    const std::size_t primes = modular::primes_needed(bound);
    const std::size_t count = ms.size();
    std::vector<std::vector<modular::u64>> residues(primes * count);
    parallel_for(primes * count, threads, [&](std::size_t job) {
        const std::size_t pi = job / count;
        const std::size_t mi = job % count;
        const modular::Montgomery mg(modular::prime_at(pi));
        auto coeffs = modular::char_poly(modular::ModMatrix::reduce(ms[mi], mg), mg);
        for (auto& c : coeffs)
            c = mg.from_mont(c);
        residues[job] = std::move(coeffs);
    });
    std::vector<IntPolynomial> out(count);
    for (std::size_t mi = 0; mi < count; ++mi) {
        const std::size_t len = ms[mi].size() + 1;
        std::vector<BigInt> coeffs(len);
        for (std::size_t d = 0; d < len; ++d) {
            modular::CrtAccumulator crt;
            for (std::size_t pi = 0; pi < primes; ++pi)
                crt.add(residues[pi * count + mi][d], modular::prime_at(pi));
            coeffs[d] = crt.symmetric();
        }
        out[mi] = IntPolynomial(std::move(coeffs));
    }
    return out;
}

}  // namespace detail

/// det(tI - M) at k+1 consecutive points, then exact interpolation.
inline IntPolynomial char_poly_interpolation(const IntMatrix& m, const LinalgOptions& opt = {}) {
    const std::size_t k = m.size();
    std::vector<BigInt> values(k + 1);
    LinalgOptions inner = opt;
    inner.threads = 1;
    parallel_for(k + 1, opt.threads, [&](std::size_t t) {
        values[t] = det(detail::shifted(m, static_cast<long>(t)), DetStrategy::Auto, inner);
    });
    return detail::interpolate_consecutive(std::move(values));
}

/// Faddeev-LeVerrier recurrence with exact integer division by i.
inline IntPolynomial char_poly_faddeev_leverrier(const IntMatrix& m) {
    const std::size_t k = m.size();
    std::vector<BigInt> c(k + 1);
    c[k] = 1;
    IntMatrix n = IntMatrix::identity(k);
    for (std::size_t i = 1; i <= k; ++i) {
        IntMatrix am = m * n;
        BigInt tr = am.trace();
        if (!mpz_divisible_ui_p(tr.get_mpz_t(), static_cast<unsigned long>(i)))
            throw std::logic_error("Faddeev-LeVerrier: trace not divisible");
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(i));
        c[k - i] = -tr;
        n = std::move(am);
        for (std::size_t d = 0; d < k; ++d)
            n(d, d) += c[k - i];
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial char_poly_modular(const IntMatrix& m, const LinalgOptions& opt = {}) {
    if (m.size() == 0)
        return IntPolynomial::constant(1);
    return detail::modular_char_polys({m}, detail::char_poly_coefficient_bound(m), opt.threads).front();
}

/// det(xI - M); the 0x0 matrix gives the constant 1.
inline IntPolynomial char_poly(const IntMatrix& m, CharPolyStrategy strategy = CharPolyStrategy::Auto,
                               const LinalgOptions& opt = {}) {
    switch (strategy) {
    case CharPolyStrategy::Interpolation:
        return char_poly_interpolation(m, opt);
    case CharPolyStrategy::FaddeevLeVerrier:
        return char_poly_faddeev_leverrier(m);
    case CharPolyStrategy::Modular:
        return char_poly_modular(m, opt);
    case CharPolyStrategy::Auto:
        break;
    }
    return m.size() <= opt.modular_charpoly_threshold ? char_poly_interpolation(m, opt) : char_poly_modular(m, opt);
}

/// Entry i is char_poly(M(i)). Empty for the 0x0 matrix.
inline std::vector<IntPolynomial> principal_minor_char_polys(const IntMatrix& m,
                                                             CharPolyStrategy strategy = CharPolyStrategy::Auto,
                                                             const LinalgOptions& opt = {}) {
    const std::size_t k = m.size();
    std::vector<IntMatrix> minors(k);
    for (std::size_t i = 0; i < k; ++i)
        minors[i] = m.principal_minor(i);

    const bool modular = strategy == CharPolyStrategy::Modular ||
                         (strategy == CharPolyStrategy::Auto && k > 1 && k - 1 > opt.modular_charpoly_threshold);
    if (modular && k > 1)
        return detail::modular_char_polys(minors, detail::char_poly_coefficient_bound(m), opt.threads);

    std::vector<IntPolynomial> out(k);
    LinalgOptions inner = opt;
    inner.threads = 1;
    parallel_for(k, opt.threads, [&](std::size_t i) { out[i] = char_poly(minors[i], strategy, inner); });
    return out;
}

}  // namespace immanant
