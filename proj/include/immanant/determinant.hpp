#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "immanant/bigint.hpp"
#include "immanant/matrix.hpp"
#include "immanant/modular.hpp"
#include "immanant/parallel.hpp"

namespace immanant {

/// Tuning knobs shared by the exact linear-algebra kernels.
struct LinalgOptions {
    /// det() uses Bareiss for k <= crt_threshold and CRT above.
    std::size_t crt_threshold = 64;
    /// char_poly() interpolates for k <= this size and uses the modular
    /// Hessenberg path above.
    std::size_t modular_charpoly_threshold = 24;
    /// 0 selects default_thread_count().
    std::size_t threads = 0;
};

enum class DetStrategy { Auto, Bareiss, Crt };

/// Fraction-free Gaussian elimination. The empty matrix has determinant 1.
inline BigInt det_bareiss(IntMatrix m) {
    const std::size_t k = m.size();
    if (k == 0)
        return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t c = 0; c + 1 < k; ++c) {
        if (m(c, c) == 0) {
            std::size_t piv = c + 1;
            while (piv < k && m(piv, c) == 0)
                ++piv;
            if (piv == k)
                return 0;
            for (std::size_t j = c; j < k; ++j)
                std::swap(m(c, j), m(piv, j));
            sign = -sign;
        }
        const BigInt& p = m(c, c);
        for (std::size_t r = c + 1; r < k; ++r) {
            for (std::size_t j = c + 1; j < k; ++j) {
                BigInt& e = m(r, j);
                e *= p;
                e -= m(r, c) * m(c, j);
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            m(r, c) = 0;
        }
        prev = p;
    }
    BigInt d = m(k - 1, k - 1);
    return sign < 0 ? BigInt(-d) : d;
}

/// Hadamard bound prod_i ceil(||row_i||_2), always >= |det M|.
inline BigInt hadamard_bound(const IntMatrix& m) {
    BigInt h = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        BigInt s = 0;
        for (const auto& v : m.row(i))
            s += v * v;
        h *= ceil_sqrt(s);
    }
    return h;
}

/// Determinant from residues modulo enough 62-bit primes to exceed twice the
/// Hadamard bound, recombined by CRT with symmetric lift.
inline BigInt det_crt(const IntMatrix& m, std::size_t threads = 1) {
    if (m.size() == 0)
        return 1;
    const BigInt bound = hadamard_bound(m);
    if (bound == 0)
        return 0;
    const std::size_t count = modular::primes_needed(bound);
    std::vector<modular::u64> residues(count);
    parallel_for(count, threads, [&](std::size_t i) {
        const modular::Montgomery mg(modular::prime_at(i));
        residues[i] = mg.from_mont(modular::det(modular::ModMatrix::reduce(m, mg), mg));
    });
    modular::CrtAccumulator crt;
    for (std::size_t i = 0; i < count; ++i)
        crt.add(residues[i], modular::prime_at(i));
    return crt.symmetric();
}

inline BigInt det(const IntMatrix& m, DetStrategy strategy = DetStrategy::Auto, const LinalgOptions& opt = {}) {
    switch (strategy) {
    case DetStrategy::Bareiss:
        return det_bareiss(m);
    case DetStrategy::Crt:
        return det_crt(m, opt.threads);
    case DetStrategy::Auto:
        break;
    }
    return m.size() <= opt.crt_threshold ? det_bareiss(m) : det_crt(m, opt.threads);
}

}  // namespace immanant
