#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qmatch/matching.hpp"

namespace qmatch {

class UnknownIdError : public Error {
public:
    explicit UnknownIdError(const std::string& id)
        : Error("unknown catalog id: " + id) {}
};

enum class EntryKind { RelationSet, SeriesIdentity, Parametric, Conjecture };

const char* entry_kind_name(EntryKind k);

// One named statement from the catalog: a theorem item, a lemma identity,
// an intro example, a proof-internal identity, or a conjecture.
struct RegistryEntry {
    std::string id;
    EntryKind kind = EntryKind::SeriesIdentity;
    std::string source;  // citation text

    // relation-set / conjecture payload; expr_b empty means "reciprocal
    // of expr_a".
    std::string expr_a;
    std::string expr_b;
    std::vector<MatchRelation> relations;

    // series-identity payload
    std::string lhs;
    std::string rhs;

    // parametric payload
    std::function<VerificationReport(std::int64_t N)> check;
    std::string param_desc;

    // Smallest order at which min_checks = 50 is satisfied (relation
    // sets) or the check is considered meaningful.
    std::int64_t recommended_order = 400;
};

class Registry {
public:
    static const Registry& instance();

    const std::vector<RegistryEntry>& entries() const { return entries_; }

    // Exact id; failing that, a unique suffix match on the label part
    // ("I.newGH2" finds "L2.6.newGH2"). Throws UnknownIdError.
    const RegistryEntry& get(const std::string& id) const;

    std::vector<const RegistryEntry*> match_prefix(const std::string& prefix) const;

private:
    Registry();
    std::vector<RegistryEntry> entries_;
};

struct EntryResult {
    enum class Status { Passed, Failed, InsufficientOrder };
    std::string id;
    EntryKind kind = EntryKind::SeriesIdentity;
    Status status = Status::Failed;
    std::int64_t checked_count = 0;
    std::int64_t order_used = 0;
    std::string detail;  // failing relation / first mismatch exponent

    bool passed() const { return status == Status::Passed; }
};

// Verifies one entry at order max(N, recommended order) unless
// auto_raise is off. min_checks applies to relation-set entries.
EntryResult verify_entry(const std::string& id, std::int64_t N,
                         std::int64_t min_checks = 50, bool auto_raise = true);

// Runs every entry whose id starts with `prefix` ("" or "all" = whole
// catalog), optionally on several threads; results sorted by id.
std::vector<EntryResult> verify_all(const std::string& prefix, std::int64_t N,
                                    std::int64_t min_checks = 50, int jobs = 1,
                                    bool auto_raise = true);

// Lemma 2.1 checks: `which` is one of "2.2", "2.3", "2.4", "2.5" (or the
// Berndt entry aliases "2.1.29a", "2.1.29b", "2.1.30a", "2.1.30b"). Every
// monomial specialization a = s1*q^r, b = s2*q^s with r < s <= max_exponent
// (and compatible c, d where the identity needs them) is checked to order N.
VerificationReport verify_theta_lemma(const std::string& which,
                                      std::int64_t max_exponent, std::int64_t N);

// p-dissection reconstructions: `which` is "f1" (p > 3), "psi" (odd p)
// or "phi" (any prime p). Also asserts the congruence side conditions
// on the sum indices.
VerificationReport verify_p_dissection(const std::string& which, std::int64_t p,
                                       std::int64_t N);

// Machine-readable catalog (JSON array).
std::string export_catalog_json();

}  // namespace qmatch
