#include "qmatch/matching.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace qmatch {

namespace {

nlohmann::json int_to_json(const Int& v) {
    // Relation multipliers are small; the JSON schema stores them as numbers.
    if (!v.fits_slong_p()) throw Error("relation multiplier too large for JSON");
    return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
}

}  // namespace

std::string MatchRelation::to_json() const {
    nlohmann::json j;
    j["cA"] = int_to_json(cA);
    j["aA"] = aA;
    j["rA"] = rA;
    j["cB"] = int_to_json(cB);
    j["aB"] = aB;
    j["rB"] = rB;
    return j.dump();
}

MatchRelation MatchRelation::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    MatchRelation r;
    r.cA = Int(j.at("cA").get<std::int64_t>());
    r.aA = j.at("aA").get<std::int64_t>();
    r.rA = j.at("rA").get<std::int64_t>();
    r.cB = Int(j.at("cB").get<std::int64_t>());
    r.aB = j.at("aB").get<std::int64_t>();
    r.rB = j.at("rB").get<std::int64_t>();
    return r;
}

std::string MatchRelation::describe() const {
    std::string s;
    if (cA != 1) s += cA.get_str() + "*";
    s += "A(" + std::to_string(aA) + "n+" + std::to_string(rA) + ") = ";
    if (cB != 1) s += cB.get_str() + "*";
    s += "B(" + std::to_string(aB) + "n+" + std::to_string(rB) + ")";
    return s;
}

std::pair<TruncatedSeries, TruncatedSeries> reciprocal_pair(const ExprPtr& expr,
                                                            std::int64_t N) {
    TruncatedSeries a = evaluate(expr, N);
    return {a, a.invert()};
}

VerificationReport verify_relation(const TruncatedSeries& A,
                                   const TruncatedSeries& B,
                                   const MatchRelation& rel,
                                   std::int64_t min_checks) {
    if (min_checks < 1) throw Error("min_checks must be >= 1");
    if (rel.aA < 1 || rel.aB < 1 || rel.rA < 0 || rel.rB < 0 || rel.cB == 0 ||
        rel.cA <= 0)
        throw Error("malformed relation: " + rel.describe());
    VerificationReport r;
    r.order_used = std::min(A.order(), B.order());
    std::int64_t n = 0;
    for (;; ++n) {
        std::int64_t ia = rel.aA * n + rel.rA;
        std::int64_t ib = rel.aB * n + rel.rB;
        if (ia >= A.order() || ib >= B.order()) break;
        Int lhs = rel.cA * A.coefficient(ia);
        Int rhs = rel.cB * B.coefficient(ib);
        if (lhs != rhs) {
            r.checked_count = n + 1;
            r.first_failure_n = n;
            r.passed = false;
            return r;
        }
    }
    r.checked_count = n;
    if (n < min_checks)
        throw InsufficientOrderError(
            "only " + std::to_string(n) + " of " + std::to_string(min_checks) +
            " required checks fit the truncation window for " + rel.describe());
    r.passed = true;
    return r;
}

namespace {

// Does an accepted relation `base` imply `cand` by restricting to a
// sub-progression? That happens when cand's lhs progression sits inside
// base's and the rhs indices track along.
bool implied_by(const MatchRelation& cand, const MatchRelation& base) {
    if (cand.aA % base.aA != 0) return false;
    std::int64_t m = cand.aA / base.aA;
    if (cand.rA < base.rA || (cand.rA - base.rA) % base.aA != 0) return false;
    std::int64_t t = (cand.rA - base.rA) / base.aA;  // offset in base steps
    if (cand.aB != base.aB * m) return false;
    if (cand.rB != base.rB + t * base.aB) return false;
    // same ratio up to a common factor
    return cand.cA * base.cB == cand.cB * base.cA;
}

struct Candidate {
    std::int64_t aA, rA, aB, rB;
};

}  // namespace

std::vector<MatchRelation> scan(const TruncatedSeries& A,
                                const TruncatedSeries& B,
                                std::int64_t max_modulus,
                                std::int64_t min_checks) {
    if (max_modulus < 1) throw Error("max_modulus must be >= 1");
    std::vector<MatchRelation> found;
    std::vector<Candidate> cands;
    for (std::int64_t aA = 1; aA <= max_modulus; ++aA) {
        for (std::int64_t rA = 0; rA < 3 * aA; ++rA) {
            for (std::int64_t rB = 0; rB < 3 * aA; ++rB)
                cands.push_back({aA, rA, aA, rB});
            for (std::int64_t rB = 0; rB < aA; ++rB)
                if (aA != 1) cands.push_back({aA, rA, 1, rB});
            if (aA % 2 == 0)
                for (std::int64_t rB = 0; rB < 3 * aA / 2; ++rB)
                    cands.push_back({aA, rA, aA / 2, rB});
        }
    }
    for (const auto& c : cands) {
        // Find the first jointly nonzero index pair and infer the ratio.
        std::int64_t n = 0;
        Int va = 0, vb = 0;
        bool both = false, one_sided = false;
        for (;; ++n) {
            std::int64_t ia = c.aA * n + c.rA;
            std::int64_t ib = c.aB * n + c.rB;
            if (ia >= A.order() || ib >= B.order()) break;
            const Int& x = A.coefficient(ia);
            const Int& y = B.coefficient(ib);
            if (x != 0 && y != 0) {
                va = x; vb = y;
                both = true;
                break;
            }
            if (x != 0 || y != 0) { one_sided = true; break; }
        }
        if (!both || one_sided) continue;  // identically zero or one-sided
        // Require the ratio integral in one direction.
        MatchRelation rel;
        rel.aA = c.aA; rel.rA = c.rA; rel.aB = c.aB; rel.rB = c.rB;
        if (va % vb == 0) {
            rel.cA = 1;              // A = (va/vb) * B
            rel.cB = va / vb;
        } else if (vb % va == 0) {
            rel.cA = vb / va;        // (vb/va) * A = B
            rel.cB = 1;
        } else {
            continue;
        }
        if (rel.cA < 0) { rel.cA = -rel.cA; rel.cB = -rel.cB; }
        try {
            VerificationReport rep = verify_relation(A, B, rel, min_checks);
            if (!rep.passed) continue;
        } catch (const InsufficientOrderError&) {
            continue;
        }
        bool implied = false;
        for (const auto& f : found)
            if (implied_by(rel, f)) { implied = true; break; }
        if (!implied) found.push_back(rel);
    }
    std::sort(found.begin(), found.end(), [](const MatchRelation& x, const MatchRelation& y) {
        return std::tie(x.aA, x.rA, x.aB, x.rB) < std::tie(y.aA, y.rA, y.aB, y.rB);
    });
    return found;
}

}  // namespace qmatch
