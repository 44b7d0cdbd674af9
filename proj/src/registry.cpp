#include "qmatch/registry.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "qmatch/expr.hpp"
#include "qmatch/qfactory.hpp"

namespace qmatch {

std::vector<RegistryEntry> build_catalog();  // catalog.cpp

const char* entry_kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::RelationSet: return "relation-set";
        case EntryKind::SeriesIdentity: return "identity";
        case EntryKind::Parametric: return "parametric";
        case EntryKind::Conjecture: return "conjecture";
    }
    return "?";
}

Registry::Registry() : entries_(build_catalog()) {
    std::sort(entries_.begin(), entries_.end(),
              [](const RegistryEntry& a, const RegistryEntry& b) { return a.id < b.id; });
}

const Registry& Registry::instance() {
    static Registry reg;
    return reg;
}

const RegistryEntry& Registry::get(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    // unique suffix match: "I.newGH2" or "newGH2" finds "L2.6.newGH2"
    std::string label = id;
    if (auto dot = label.rfind('.'); dot != std::string::npos) label = label.substr(dot + 1);
    const RegistryEntry* hit = nullptr;
    for (const auto& e : entries_) {
        if (e.id.size() > label.size() && e.id.compare(e.id.size() - label.size(), label.size(), label) == 0 &&
            e.id[e.id.size() - label.size() - 1] == '.') {
            if (hit) throw UnknownIdError(id + " (ambiguous suffix)");
            hit = &e;
        }
    }
    if (!hit) throw UnknownIdError(id);
    return *hit;
}

std::vector<const RegistryEntry*> Registry::match_prefix(const std::string& prefix) const {
    std::vector<const RegistryEntry*> out;
    for (const auto& e : entries_)
        if (prefix.empty() || prefix == "all" || e.id.compare(0, prefix.size(), prefix) == 0)
            out.push_back(&e);
    return out;
}

namespace {

EntryResult run_entry(const RegistryEntry& e, std::int64_t N, std::int64_t min_checks,
                      bool auto_raise) {
    EntryResult r;
    r.id = e.id;
    r.kind = e.kind;
    std::int64_t order = auto_raise ? std::max(N, e.recommended_order) : N;
    r.order_used = order;
    try {
        if (e.kind == EntryKind::Parametric) {
            VerificationReport rep = e.check(order);
            r.checked_count = rep.checked_count;
            if (rep.passed) {
                r.status = EntryResult::Status::Passed;
            } else {
                r.status = EntryResult::Status::Failed;
                if (rep.first_failure_n)
                    r.detail = "first mismatch at n=" + std::to_string(*rep.first_failure_n);
            }
            return r;
        }
        if (e.kind == EntryKind::SeriesIdentity) {
            TruncatedSeries L = evaluate(parse(e.lhs), order);
            TruncatedSeries R = evaluate(parse(e.rhs), order);
            if (std::min(L.order(), R.order()) <= 0)
                throw InsufficientOrderError("no common window for " + e.id);
            VerificationReport rep = equal_to_order(L, R);
            r.checked_count = rep.checked_count;
            if (rep.passed) {
                r.status = EntryResult::Status::Passed;
            } else {
                r.status = EntryResult::Status::Failed;
                std::int64_t n = *rep.first_failure_n;
                r.detail = "first mismatch at n=" + std::to_string(n) + ": " +
                           L.coefficient(n).get_str() + " vs " + R.coefficient(n).get_str();
            }
            return r;
        }
        // relation-set / conjecture
        TruncatedSeries A = evaluate(parse(e.expr_a), order);
        TruncatedSeries B = e.expr_b.empty() ? A.invert() : evaluate(parse(e.expr_b), order);
        r.status = EntryResult::Status::Passed;
        for (const auto& rel : e.relations) {
            VerificationReport rep = verify_relation(A, B, rel, min_checks);
            r.checked_count += rep.checked_count;
            if (!rep.passed) {
                r.status = EntryResult::Status::Failed;
                r.detail = rel.describe() + " fails at n=" +
                           (rep.first_failure_n ? std::to_string(*rep.first_failure_n) : "?");
                if (e.kind == EntryKind::Conjecture) r.detail = "potential counterexample: " + r.detail;
                break;
            }
        }
        return r;
    } catch (const InsufficientOrderError& ex) {
        r.status = EntryResult::Status::InsufficientOrder;
        r.detail = ex.what();
        return r;
    } catch (const Error& ex) {
        r.status = EntryResult::Status::Failed;
        r.detail = std::string("error: ") + ex.what();
        return r;
    }
}

}  // namespace

EntryResult verify_entry(const std::string& id, std::int64_t N, std::int64_t min_checks,
                         bool auto_raise) {
    return run_entry(Registry::instance().get(id), N, min_checks, auto_raise);
}

std::vector<EntryResult> verify_all(const std::string& prefix, std::int64_t N,
                                    std::int64_t min_checks, int jobs, bool auto_raise) {
    auto targets = Registry::instance().match_prefix(prefix);
    if (targets.empty()) throw UnknownIdError(prefix + " (no entries match)");
    std::vector<EntryResult> results(targets.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < targets.size(); ++i)
            results[i] = run_entry(*targets[i], N, min_checks, auto_raise);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= targets.size()) return;
                results[i] = run_entry(*targets[i], N, min_checks, auto_raise);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // targets are already id-sorted; results inherit that order
    return results;
}

// ---------------------------------------------------------------------------
// Theta-function lemma grid
// ---------------------------------------------------------------------------

namespace {

// a monomial argument s*q^e with s = +/-1
struct Mono {
    int s;
    std::int64_t e;
};

Mono operator*(Mono x, Mono y) { return {x.s * y.s, x.e + y.e}; }
Mono operator/(Mono x, Mono y) { return {x.s * y.s, x.e - y.e}; }
Mono neg(Mono x) { return {-x.s, x.e}; }
Mono pw(Mono x, int k) { return {(k % 2 == 0) ? 1 : x.s, x.e * k}; }

TruncatedSeries th(Mono a, Mono b, std::int64_t N) { return theta_f(a.s, a.e, b.s, b.e, N); }

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// phi(x) / psi(x) for a monomial argument
TruncatedSeries phi_of(Mono x, std::int64_t N) {
    TruncatedSeries p = phi(ceil_div(N, x.e));
    if (x.s < 0) p = p.alternate_sign();
    return p.substitute_power(x.e).truncate(N);
}
TruncatedSeries psi_of(Mono x, std::int64_t N) {
    TruncatedSeries p = psi(ceil_div(N, x.e));
    if (x.s < 0) p = p.alternate_sign();
    return p.substitute_power(x.e).truncate(N);
}
TruncatedSeries mono_term(Mono x, std::int64_t N) {
    return TruncatedSeries::monomial(Int(x.s), x.e, N);
}

bool record(const TruncatedSeries& lhs, const TruncatedSeries& rhs, std::int64_t tag,
            VerificationReport& rep) {
    bool ok = equal_to_order(lhs, rhs).passed;
    ++rep.checked_count;
    if (!ok && rep.passed) {
        rep.passed = false;
        rep.first_failure_n = tag;
    }
    return ok;
}

}  // namespace

VerificationReport verify_theta_lemma(const std::string& which, std::int64_t max_exponent,
                                      std::int64_t N) {
    std::string eq = which;
    if (eq == "2.1.29a") eq = "2.2";
    if (eq == "2.1.29b") eq = "2.3";
    if (eq == "2.1.30a") eq = "2.4";
    if (eq == "2.1.30b") eq = "2.5";
    VerificationReport rep;
    rep.passed = true;
    rep.checked_count = 0;
    rep.order_used = N;
    std::int64_t tag = 0;

    for (std::int64_t r = 1; r <= max_exponent; ++r)
        for (std::int64_t s = r + 1; s <= max_exponent; ++s)
            for (int sa : {1, -1})
                for (int sb : {1, -1}) {
                    Mono a{sa, r}, b{sb, s};
                    ++tag;
                    if (eq == "2.2") {
                        TruncatedSeries lhs = th(a, b, N);
                        TruncatedSeries rhs =
                            th(pw(a, 3) * b, a * pw(b, 3), N)
                                .add(mono_term(a, N).mul(th(b / a, pw(a, 5) * pw(b, 3), N)));
                        record(lhs, rhs, tag, rep);
                    } else if (eq == "2.3") {
                        TruncatedSeries lhs = th(neg(a), neg(b), N).pow(2);
                        TruncatedSeries rhs =
                            th(pw(a, 2), pw(b, 2), N).mul(phi_of(a * b, N)).sub(
                                mono_term(a, N).scalar_mul(2)
                                    .mul(th(b / a, pw(a, 3) * b, N))
                                    .mul(psi_of(pw(a * b, 2), N)));
                        record(lhs, rhs, tag, rep);
                    } else if (eq == "2.4" || eq == "2.5") {
                        for (std::int64_t t = 1; t <= r + s - t; ++t) {
                            std::int64_t u = r + s - t;
                            for (int sc : {1, -1}) {
                                int sd = sa * sb * sc;  // ab = cd
                                Mono c{sc, t}, d{sd, u};
                                ++tag;
                                if (eq == "2.4") {
                                    // f(a,b) f(c,d) + f(-a,-b) f(-c,-d)
                                    //   = 2 f(ac, bd) f(ad, bc)
                                    TruncatedSeries lhs =
                                        th(a, b, N).mul(th(c, d, N)).add(
                                            th(neg(a), neg(b), N).mul(th(neg(c), neg(d), N)));
                                    TruncatedSeries rhs = th(a * c, b * d, N)
                                                              .mul(th(a * d, b * c, N))
                                                              .scalar_mul(2);
                                    record(lhs, rhs, tag, rep);
                                } else {
                                    // f(a,b) f(c,d) - f(-a,-b) f(-c,-d)
                                    //   = 2a f(b/c, a c^2 d) f(b/d, a c d^2)
                                    if (s - t < 1 || s - u < 1) continue;
                                    TruncatedSeries lhs =
                                        th(a, b, N).mul(th(c, d, N)).sub(
                                            th(neg(a), neg(b), N).mul(th(neg(c), neg(d), N)));
                                    TruncatedSeries rhs =
                                        mono_term(a, N).scalar_mul(2).mul(
                                            th(b / c, a * pw(c, 2) * d, N)
                                                .mul(th(b / d, a * c * pw(d, 2), N)));
                                    record(lhs, rhs, tag, rep);
                                }
                            }
                        }
                    } else {
                        throw Error("unknown theta lemma id: " + which);
                    }
                }
    return rep;
}

// ---------------------------------------------------------------------------
// p-dissection reconstructions
// ---------------------------------------------------------------------------

VerificationReport verify_p_dissection(const std::string& which, std::int64_t p,
                                       std::int64_t N) {
    if (!is_prime(p)) throw Error("p must be prime, got " + std::to_string(p));
    VerificationReport rep;
    rep.passed = true;
    rep.checked_count = N;
    rep.order_used = N;

    TruncatedSeries lhs = TruncatedSeries::one(N), rhs = TruncatedSeries::zero(N);

    if (which == "f1") {
        if (p <= 3) throw Error("f1 dissection needs p > 3");
        // k0 with (3 k0^2 + k0)/2 = (p^2-1)/24 mod selection: k0 = (+/-p - 1)/6
        std::int64_t k0 = (p % 6 == 1) ? (p - 1) / 6 : -(p + 1) / 6;
        std::int64_t c0 = (p * p - 1) / 24;
        lhs = euler_f(1, N);
        Int sign0 = (((k0 % 2) + 2) % 2 == 0) ? 1 : -1;
        rhs = TruncatedSeries::monomial(sign0, c0, N).mul(euler_f(p * p, N));
        for (std::int64_t k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
            if (k == k0) continue;
            std::int64_t g = (3 * k * k + k) / 2;
            // side condition: g != (p^2-1)/24 (mod p)
            if (((g - c0) % p + p) % p == 0) {
                rep.passed = false;
                rep.first_failure_n = k;
                return rep;
            }
            std::int64_t e1 = (3 * p * p + (6 * k + 1) * p) / 2;
            std::int64_t e2 = (3 * p * p - (6 * k + 1) * p) / 2;
            TruncatedSeries term = theta_f(-1, e1, -1, e2, N);
            Int sg = (((k % 2) + 2) % 2 == 0) ? 1 : -1;
            rhs = rhs.add(TruncatedSeries::monomial(sg, g, N).mul(term));
        }
    } else if (which == "psi") {
        if (p == 2) throw Error("psi dissection needs odd p");
        lhs = psi(N);
        std::int64_t c0 = (p * p - 1) / 8;
        rhs = TruncatedSeries::monomial(1, c0, N)
                  .mul(psi(ceil_div(N, p * p)).substitute_power(p * p).truncate(N));
        for (std::int64_t k = 0; k <= (p - 3) / 2; ++k) {
            std::int64_t g = (k * k + k) / 2;
            if (((g - c0) % p + p) % p == 0) {
                rep.passed = false;
                rep.first_failure_n = k;
                return rep;
            }
            std::int64_t e1 = (p * p + (2 * k + 1) * p) / 2;
            std::int64_t e2 = (p * p - (2 * k + 1) * p) / 2;
            rhs = rhs.add(TruncatedSeries::monomial(1, g, N).mul(theta_f(1, e1, 1, e2, N)));
        }
    } else if (which == "phi") {
        lhs = phi(N);
        rhs = phi(ceil_div(N, p * p)).substitute_power(p * p).truncate(N);
        for (std::int64_t k = 1; k <= p - 1; ++k) {
            std::int64_t g = k * k;
            if (g % p == 0) {
                rep.passed = false;
                rep.first_failure_n = k;
                return rep;
            }
            rhs = rhs.add(TruncatedSeries::monomial(1, g, N)
                              .mul(theta_f(1, p * (p - 2 * k), 1, p * (p + 2 * k), N)));
        }
    } else {
        throw Error("unknown dissection target: " + which);
    }

    VerificationReport cmp = equal_to_order(lhs, rhs);
    rep.passed = cmp.passed;
    rep.checked_count = cmp.checked_count;
    rep.first_failure_n = cmp.first_failure_n;
    return rep;
}

std::string export_catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : Registry::instance().entries()) {
        nlohmann::json j;
        j["id"] = e.id;
        j["kind"] = entry_kind_name(e.kind);
        j["source"] = e.source;
        j["recommendedOrder"] = e.recommended_order;
        if (e.kind == EntryKind::SeriesIdentity) {
            j["lhs"] = e.lhs;
            j["rhs"] = e.rhs;
        } else if (e.kind == EntryKind::Parametric) {
            j["params"] = e.param_desc;
        } else {
            j["expr"] = e.expr_a;
            if (!e.expr_b.empty()) j["exprB"] = e.expr_b;
            nlohmann::json rels = nlohmann::json::array();
            for (const auto& r : e.relations) rels.push_back(nlohmann::json::parse(r.to_json()));
            j["relations"] = rels;
        }
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace qmatch
