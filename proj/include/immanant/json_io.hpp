#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "immanant/bigint.hpp"
#include "immanant/errors.hpp"
#include "immanant/polynomial.hpp"

namespace immanant {

/// Coefficients as decimal strings, index = power of x.
inline nlohmann::json coeffs_json(const IntPolynomial& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        a.push_back(to_decimal(c));
    return a;
}

/// {"coeffs": ["a0", "a1", ...]}
inline nlohmann::json to_json(const IntPolynomial& p) { return {{"coeffs", coeffs_json(p)}}; }

/// Accepts {"coeffs": [...]} or a bare array; elements may be decimal
/// strings or JSON integers.
inline IntPolynomial polynomial_from_json(const nlohmann::json& j) {
    const nlohmann::json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs"))
            throw ValidationError("polynomial object lacks \"coeffs\"");
        arr = &j.at("coeffs");
    }
    if (!arr->is_array())
        throw ValidationError("polynomial must be an array of coefficients");
    std::vector<BigInt> c;
    c.reserve(arr->size());
    for (const auto& e : *arr) {
        if (e.is_string())
            c.push_back(from_decimal(e.get<std::string>()));
        else if (e.is_number_integer())
            c.emplace_back(std::to_string(e.get<long long>()));
        else
            throw ValidationError("coefficient must be a decimal string or integer: " + e.dump());
    }
    return IntPolynomial(std::move(c));
}

}  // namespace immanant
