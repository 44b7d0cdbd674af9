#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmatch/expr.hpp"
#include "qmatch/series.hpp"

namespace qmatch {

// One matching-coefficient statement:
//   for all n >= 0:  cA * A(aA*n + rA) = cB * B(aB*n + rB).
// Residues may exceed their modulus and are kept literal.
struct MatchRelation {
    Int cA = 1;                 // positive
    std::int64_t aA = 1;        // positive
    std::int64_t rA = 0;        // >= 0
    Int cB = 1;                 // nonzero, sign folded in
    std::int64_t aB = 1;        // positive
    std::int64_t rB = 0;        // >= 0

    bool operator==(const MatchRelation& o) const {
        return cA == o.cA && aA == o.aA && rA == o.rA && cB == o.cB &&
               aB == o.aB && rB == o.rB;
    }

    std::string to_json() const;
    static MatchRelation from_json(const std::string& text);
    std::string describe() const;
};

// Evaluates expr and its reciprocal: (A, A') with A * A' = 1 to order N.
std::pair<TruncatedSeries, TruncatedSeries> reciprocal_pair(const ExprPtr& expr,
                                                            std::int64_t N);

// Checks rel over every n >= 0 with both indices inside both truncation
// windows. Throws InsufficientOrderError if fewer than min_checks indices
// fit (distinct from a mismatch, which is a failed report).
VerificationReport verify_relation(const TruncatedSeries& A,
                                   const TruncatedSeries& B,
                                   const MatchRelation& rel,
                                   std::int64_t min_checks);

// Searches for matching-coefficient relations between A and B.
//
// Candidate shapes: aA in [1, max_modulus], rA in [0, 3*aA), and
// (aB, rB) with aB = aA, aB = 1, or aB = aA/2 (aA even). The multiplier
// ratio is inferred from the first jointly nonzero index pair, accepted
// only when constant across the window and integral in one direction,
// and each accepted relation is verified with at least min_checks checks.
// Relations implied by an already accepted smaller-modulus relation are
// pruned. Deterministic canonical order: (aA, rA, aB, rB).
std::vector<MatchRelation> scan(const TruncatedSeries& A,
                                const TruncatedSeries& B,
                                std::int64_t max_modulus,
                                std::int64_t min_checks);

}  // namespace qmatch
