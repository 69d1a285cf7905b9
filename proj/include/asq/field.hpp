#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asq/error.hpp"

namespace asq {

// q = p^f with p prime. Desk-scale cap: q <= 2^20 so that exhaustive
// searches (irreducible modulus, primitive element, discrete logs) stay trivial.
struct PrimePower {
    std::int64_t p = 0;
    int f = 0;
    std::int64_t q = 0;
};

// Residue polynomial modulo the field's irreducible modulus.
// coeffs[i] multiplies x^i; length is exactly f, entries reduced mod p.
// For f = 1 the element is a plain residue mod p.
struct FieldElement {
    std::vector<int> coeffs;
};

// GF(p^f) with all choices pinned deterministically so downstream relation
// matrices are reproducible bit-for-bit:
//   - modulus = the monic irreducible of degree f whose non-leading coefficient
//     vector has the smallest base-p integer encoding (constant term least
//     significant); for f = 1 the modulus is x.
//   - gamma = the element of smallest integer encoding whose multiplicative
//     order is q-1, certified by enumerating its full power sequence.
//
// Elements are handled through their integer encoding
//   idx = sum_i coeffs[i] * p^i  in [0, q).
// Multiplication goes through exp/log tables built from gamma.
class FieldCtx {
public:
    static FieldCtx make(std::int64_t p, int f);

    const PrimePower& prime_power() const { return pp_; }
    std::int64_t size() const { return pp_.q; }

    // Full monic modulus polynomial, coefficients c_0..c_f with c_f = 1.
    const std::vector<int>& modulus_poly() const { return modulus_; }

    FieldElement primitive_element() const { return decode(gamma_); }
    std::int64_t primitive_index() const { return gamma_; }

    std::int64_t encode(const FieldElement& e) const;
    FieldElement decode(std::int64_t idx) const;

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t pow(std::int64_t base, std::int64_t e) const;

    // Discrete log base gamma; a must be nonzero.
    std::int64_t discrete_log(std::int64_t a) const;

    // Index i in {0..d-1} with x in C_i = gamma^i <gamma^d>, or nullopt iff x = 0.
    // Requires d > 1 and d | (q-1); otherwise BadDivisor.
    std::optional<int> cyclotomic_class(int d, std::int64_t x) const;
    std::optional<int> cyclotomic_class(int d, const FieldElement& x) const;

private:
    FieldCtx() = default;

    PrimePower pp_;
    std::vector<int> modulus_;       // size f+1, monic
    std::int64_t gamma_ = 0;
    std::vector<std::int32_t> log_;  // log_[idx] = k with gamma^k = idx; log_[0] = -1
    std::vector<std::int32_t> exp_;  // exp_[k] = index of gamma^k, k in [0, q-1)
};

bool is_prime(std::int64_t n);

}  // namespace asq
