#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qmatch {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Leading coefficient of a series to be inverted is not +1/-1, so the
// reciprocal would not have integer coefficients.
class NonUnitLeadingError : public Error {
public:
    explicit NonUnitLeadingError(const std::string& what) : Error(what) {}
};

// A coefficient beyond the truncation order was requested. Such
// coefficients are unknown, never implicitly zero.
class OrderExceededError : public Error {
public:
    explicit OrderExceededError(const std::string& what) : Error(what) {}
};

// The truncation window admits fewer index checks than required.
class InsufficientOrderError : public Error {
public:
    explicit InsufficientOrderError(const std::string& what) : Error(what) {}
};

using Int = mpz_class;

// Outcome of an exact coefficient-by-coefficient check.
struct VerificationReport {
    bool passed = false;
    std::int64_t checked_count = 0;
    std::optional<std::int64_t> first_failure_n;
    std::int64_t order_used = 0;
};

// Selects the arithmetic progression a*n + b, i.e. the operator
// U_{an+b}(sum A(n) q^n) = sum A(an+b) q^n.
struct ExtractionSpec {
    std::int64_t modulus = 1;   // a >= 1
    std::int64_t residue = 0;   // b >= 0

    ExtractionSpec(std::int64_t a, std::int64_t b);
};

// Exact integer Laurent series at q = 0, truncated at an exclusive order.
//
// coeffs_[i] is the coefficient of q^(valuation_ + i); coefficients at
// exponents >= order_ are unknown. The zero series has empty coeffs_
// and valuation_ == order_. A nonzero series always has coeffs_[0] != 0.
class TruncatedSeries {
public:
    // Zero series known to order 0.
    TruncatedSeries() = default;

    static TruncatedSeries make(std::int64_t valuation, std::vector<Int> coeffs,
                                std::int64_t order);
    static TruncatedSeries zero(std::int64_t order);
    static TruncatedSeries one(std::int64_t order);
    static TruncatedSeries monomial(const Int& c, std::int64_t exponent,
                                    std::int64_t order);
    static TruncatedSeries constant(const Int& c, std::int64_t order);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t valuation() const { return valuation_; }
    std::int64_t order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    // Exact coefficient of q^n; 0 below the valuation, OrderExceededError
    // at or beyond the order.
    const Int& coefficient(std::int64_t n) const;

    TruncatedSeries add(const TruncatedSeries& other) const;
    TruncatedSeries sub(const TruncatedSeries& other) const;
    TruncatedSeries scalar_mul(const Int& c) const;
    TruncatedSeries mul(const TruncatedSeries& other) const;

    // Reciprocal; requires leading coefficient +1 or -1.
    TruncatedSeries invert() const;

    // Integer power; negative exponents go through invert().
    TruncatedSeries pow(std::int64_t e) const;

    // q -> q^m. Exponent n maps to m*n, the order becomes m*order.
    TruncatedSeries substitute_power(std::int64_t m) const;

    // q -> -q: coefficient of q^n picks up (-1)^n.
    TruncatedSeries alternate_sign() const;

    // U_{an+b}: coefficient of q^n in the result is the coefficient of
    // q^(an+b) here. Indices below the valuation read as zero.
    TruncatedSeries extract(const ExtractionSpec& spec) const;

    // Restrict the window to a smaller order.
    TruncatedSeries truncate(std::int64_t new_order) const;

    // Exponents of the nonzero coefficients, ascending.
    std::vector<std::int64_t> support() const;

    friend VerificationReport equal_to_order(const TruncatedSeries& a,
                                             const TruncatedSeries& b);

private:
    TruncatedSeries(std::int64_t valuation, std::vector<Int> coeffs,
                    std::int64_t order)
        : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {}

    void normalize();

    std::int64_t valuation_ = 0;
    std::vector<Int> coeffs_;
    std::int64_t order_ = 0;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scalar_mul(const Int& c, const TruncatedSeries& a);
TruncatedSeries invert(const TruncatedSeries& a);
TruncatedSeries pow(const TruncatedSeries& a, std::int64_t e);
TruncatedSeries substitute_power(const TruncatedSeries& a, std::int64_t m);
TruncatedSeries alternate_sign(const TruncatedSeries& a);
TruncatedSeries extract(const TruncatedSeries& a, const ExtractionSpec& spec);

// Compares coefficients on all exponents below min(order_a, order_b) and
// reports the first mismatching exponent, if any.
VerificationReport equal_to_order(const TruncatedSeries& a,
                                  const TruncatedSeries& b);

// Order value used for series whose coefficients are known everywhere
// (polynomials entered as literals/monomials). Large enough never to be
// the binding truncation in practice; arithmetic saturates at it.
inline constexpr std::int64_t kUnboundedOrder = INT64_C(1) << 60;

std::int64_t saturating_add(std::int64_t a, std::int64_t b);

}  // namespace qmatch
