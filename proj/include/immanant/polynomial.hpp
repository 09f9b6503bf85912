#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "immanant/bigint.hpp"

namespace immanant {

/// Dense integer polynomial; coeffs()[j] is the coefficient of x^j.
/// Always normalized: no trailing zeros, the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs)
            c_.emplace_back(v);
        normalize();
    }

    static IntPolynomial constant(const BigInt& v) { return IntPolynomial(std::vector<BigInt>{v}); }
    static IntPolynomial monomial(const BigInt& v, std::size_t power) {
        std::vector<BigInt> c(power + 1);
        c[power] = v;
        return IntPolynomial(std::move(c));
    }
    /// x - a
    static IntPolynomial linear(const BigInt& a) { return IntPolynomial(std::vector<BigInt>{-a, BigInt(1)}); }

    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    BigInt coefficient(std::size_t j) const { return j < c_.size() ? c_[j] : BigInt(0); }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1)
            return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j)
            d[j - 1] = c_[j] * static_cast<unsigned long>(j);
        return IntPolynomial(std::move(d));
    }

    /// x * p
    IntPolynomial shift_mul_x() const {
        if (c_.empty())
            return {};
        std::vector<BigInt> d(c_.size() + 1);
        for (std::size_t j = 0; j < c_.size(); ++j)
            d[j + 1] = c_[j];
        return IntPolynomial(std::move(d));
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] += o.c_[j];
        normalize();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c_[j] -= o.c_[j];
        normalize();
        return *this;
    }
    IntPolynomial& operator*=(const BigInt& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator-(IntPolynomial a) {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human-readable form, highest power first, e.g. "2x^3 - x + 1".
    std::string to_string() const {
        if (c_.empty())
            return "0";
        std::string out;
        for (std::size_t jj = c_.size(); jj-- > 0;) {
            const BigInt& a = c_[jj];
            if (a == 0)
                continue;
            BigInt mag = abs(a);
            if (out.empty())
                out += a < 0 ? "-" : "";
            else
                out += a < 0 ? " - " : " + ";
            if (mag != 1 || jj == 0)
                out += to_decimal(mag);
            if (jj >= 1)
                out += "x";
            if (jj >= 2)
                out += "^" + std::to_string(jj);
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Coefficients in the immanantal-polynomial convention
/// p(x) = sum_k (-1)^k c_k x^(d-k), with d the formal order (matrix dimension).
/// Entry k of the result is c_k.
inline std::vector<BigInt> signed_descending_coefficients(const IntPolynomial& p, std::size_t order) {
    std::vector<BigInt> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        BigInt a = p.coefficient(order - k);
        c[k] = (k % 2 == 0) ? a : BigInt(-a);
    }
    return c;
}

}  // namespace immanant
