#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicard/core.hpp"

namespace bicard {

/// A symbolic cardinal: a polynomial in one infinite scale w with
/// non-negative integer coefficients, ordered lexicographically from the
/// highest degree. Finite numbers are degree-0 polynomials.
class SymCard {
public:
    SymCard() = default;
    SymCard(long long finite);  // implicit on purpose: 3 + w etc.
    static SymCard omega();
    static SymCard from_coeffs(std::vector<long long> coeffs);  // coeffs[i] * w^i

    const std::vector<long long>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_finite() const { return coeffs_.size() <= 1; }

    SymCard operator+(const SymCard& o) const;
    SymCard operator*(const SymCard& o) const;
    SymCard scale(long long k) const;  // k copies

    std::strong_ordering operator<=>(const SymCard& o) const;
    bool operator==(const SymCard& o) const = default;

    std::string str() const;

private:
    std::vector<long long> coeffs_;  // normalized: no trailing zeros
    void normalize();
};

SymCard card_add(const SymCard& a, const SymCard& b);
SymCard card_mul(const SymCard& a, const SymCard& b);
bool card_le(const SymCard& a, const SymCard& b);

/// Covering order: some finite multiple of b reaches a.
bool tri_le(const SymCard& a, const SymCard& b);
/// Strict covering: tri_le(a,b) holds but not conversely.
bool tri_lt(const SymCard& a, const SymCard& b);

struct LawResult {
    std::string name;
    long long checked = 0;   // samples where the hypothesis applied
    long long failures = 0;
    std::string counterexample;  // first failure, if any
};

struct LawSuiteReport {
    std::vector<LawResult> laws;
    long long samples = 0;
    bool pass = false;
};

/// Property-checks the covering-order laws (totality, additivity,
/// cancellation, transitivity, splittings, expansions, substitutions, and
/// the strict/cofinal biconditional) over random symbolic cardinals.
LawSuiteReport law_suite(long long samples, std::uint64_t seed);

}  // namespace bicard
