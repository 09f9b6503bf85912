#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "immanant/bigint.hpp"
#include "immanant/matrix.hpp"

namespace immanant::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic for an odd modulus p < 2^62, R = 2^64.
class Montgomery {
public:
    explicit Montgomery(u64 p) : p_(p) {
        u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
        for (int i = 0; i < 6; ++i)
            inv *= 2 - p * inv;
        neg_inv_ = ~inv + 1;
        r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
        r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % p);
    }

    u64 modulus() const noexcept { return p_; }

    u64 mul(u64 a, u64 b) const noexcept {
        u128 t = static_cast<u128>(a) * b;
        u64 m = static_cast<u64>(t) * neg_inv_;
        u64 u = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
        return u >= p_ ? u - p_ : u;
    }
    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

    u64 to_mont(u64 a) const noexcept { return mul(a % p_, r2_); }
    u64 from_mont(u64 a) const noexcept { return mul(a, 1); }
    u64 one() const noexcept { return to_mont(1); }

    u64 to_mont(const BigInt& v) const {
        u64 r = mpz_fdiv_ui(v.get_mpz_t(), p_);
        return to_mont(r);
    }

    u64 pow(u64 base, u64 e) const noexcept {
        u64 acc = one();
        while (e) {
            if (e & 1)
                acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
    /// Inverse of a nonzero Montgomery-form value.
    u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

private:
    u64 p_;
    u64 neg_inv_;
    u64 r2_;
};

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// Every pool prime is at least 2^61.
inline constexpr std::size_t kMinPrimeBits = 61;

/// i-th prime below 2^62 in descending order, generated on demand.
inline u64 prime_at(std::size_t i) {
    static std::mutex mutex;
    static std::vector<u64> pool;
    std::lock_guard lock(mutex);
    u64 candidate = pool.empty() ? (u64{1} << 62) - 1 : pool.back() - 2;
    while (pool.size() <= i) {
        while (!is_prime(candidate))
            candidate -= 2;
        pool.push_back(candidate);
        candidate -= 2;
    }
    return pool[i];
}

/// Number of pool primes whose product exceeds 2 * bound + 1, enough to
/// recover any integer with |v| <= bound by symmetric lift.
inline std::size_t primes_needed(const BigInt& bound) {
    std::size_t bits = bit_length(2 * bound + 1);
    return bits / kMinPrimeBits + 1;
}

/// Incremental CRT with symmetric lift into (-M/2, M/2].
class CrtAccumulator {
public:
    void add(u64 residue, u64 p) {
        if (modulus_ == 0) {
            value_ = residue;
            modulus_ = p;
            return;
        }
        u64 cur = mpz_fdiv_ui(value_.get_mpz_t(), p);
        u64 mi = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
        u64 diff = residue >= cur ? residue - cur : residue + p - cur;
        u64 t = mulmod(diff, powmod(mi, p - 2, p), p);
        value_ += modulus_ * BigInt(static_cast<unsigned long>(t));
        modulus_ *= BigInt(static_cast<unsigned long>(p));
    }

    BigInt symmetric() const {
        BigInt half = modulus_ / 2;
        return value_ > half ? BigInt(value_ - modulus_) : value_;
    }

private:
    BigInt value_ = 0;
    BigInt modulus_ = 0;
};

/// Dense matrix over Z/p in Montgomery form.
struct ModMatrix {
    std::size_t k = 0;
    std::vector<u64> a;

    u64& operator()(std::size_t i, std::size_t j) { return a[i * k + j]; }
    u64 operator()(std::size_t i, std::size_t j) const { return a[i * k + j]; }

    static ModMatrix reduce(const IntMatrix& m, const Montgomery& mg) {
        ModMatrix r{m.size(), std::vector<u64>(m.size() * m.size())};
        for (std::size_t i = 0; i < r.k; ++i)
            for (std::size_t j = 0; j < r.k; ++j)
                r(i, j) = mg.to_mont(m(i, j));
        return r;
    }
};

/// det mod p by Gaussian elimination; input and result in Montgomery form.
inline u64 det(ModMatrix m, const Montgomery& mg) {
    const std::size_t k = m.k;
    u64 d = mg.one();
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && m(piv, c) == 0)
            ++piv;
        if (piv == k)
            return 0;
        if (piv != c) {
            for (std::size_t j = c; j < k; ++j)
                std::swap(m(piv, j), m(c, j));
            d = mg.neg(d);
        }
        d = mg.mul(d, m(c, c));
        const u64 inv = mg.inv(m(c, c));
        for (std::size_t r = c + 1; r < k; ++r) {
            if (m(r, c) == 0)
                continue;
            const u64 f = mg.mul(m(r, c), inv);
            u64* dst = &m.a[r * k];
            const u64* src = &m.a[c * k];
            for (std::size_t j = c + 1; j < k; ++j)
                dst[j] = mg.sub(dst[j], mg.mul(f, src[j]));
            dst[c] = 0;
        }
    }
    return d;
}

/// Coefficients (ascending, Montgomery form, length k+1) of det(xI - M) mod p,
/// via similarity reduction to upper Hessenberg form and the Hessenberg
/// characteristic-polynomial recurrence.
inline std::vector<u64> char_poly(ModMatrix h, const Montgomery& mg) {
    const std::size_t k = h.k;
    for (std::size_t j = 0; j + 2 < k; ++j) {
        std::size_t piv = j + 1;
        while (piv < k && h(piv, j) == 0)
            ++piv;
        if (piv == k)
            continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < k; ++c)
                std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < k; ++r)
                std::swap(h(r, piv), h(r, j + 1));
        }
        const u64 inv = mg.inv(h(j + 1, j));
        for (std::size_t r = j + 2; r < k; ++r) {
            if (h(r, j) == 0)
                continue;
            const u64 u = mg.mul(h(r, j), inv);
            // row_r -= u * row_{j+1}
            u64* dst = &h.a[r * k];
            const u64* src = &h.a[(j + 1) * k];
            for (std::size_t c = j; c < k; ++c)
                dst[c] = mg.sub(dst[c], mg.mul(u, src[c]));
            // col_{j+1} += u * col_r
            for (std::size_t s = 0; s < k; ++s)
                h(s, j + 1) = mg.add(h(s, j + 1), mg.mul(u, h(s, r)));
        }
    }

    // p_m(x) = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{l=i+1..m} h_{l,l-1}) p_{i-1}
    std::vector<std::vector<u64>> p(k + 1);
    p[0] = {mg.one()};
    for (std::size_t m = 1; m <= k; ++m) {
        const std::size_t mm = m - 1;  // 0-based row/col of h_mm
        std::vector<u64> cur(m + 1, 0);
        const auto& prev = p[m - 1];
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = mg.add(cur[d + 1], prev[d]);
            cur[d] = mg.sub(cur[d], mg.mul(h(mm, mm), prev[d]));
        }
        u64 t = mg.one();
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = mg.mul(t, h(i, i - 1));
            if (t == 0)
                break;
            const u64 f = mg.mul(h(i - 1, mm), t);
            if (f == 0)
                continue;
            const auto& q = p[i - 1];
            for (std::size_t d = 0; d < q.size(); ++d)
                cur[d] = mg.sub(cur[d], mg.mul(f, q[d]));
        }
        p[m] = std::move(cur);
    }
    return std::move(p[k]);
}

}  // namespace immanant::modular
