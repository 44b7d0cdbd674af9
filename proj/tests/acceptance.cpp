// Acceptance suite: ten criteria, one PASS/FAIL line each, exit 0 only if
// all pass. Every comparison is exact integer equality; there are no
// tolerances anywhere.

#include <qmatch/matching.hpp>
#include <qmatch/qfactory.hpp>
#include <qmatch/registry.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qmatch;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Int> partition_numbers(std::int64_t N) {
    std::vector<Int> p(static_cast<std::size_t>(N));
    p[0] = 1;
    for (std::int64_t n = 1; n < N; ++n) {
        Int acc = 0;
        for (std::int64_t k = 1;; ++k) {
            std::int64_t g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            Int t = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) t += p[static_cast<std::size_t>(n - g2)];
            if (k % 2 == 1) acc += t; else acc -= t;
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------- 1
bool crit_intro(std::string& detail) {
    auto t0 = Clock::now();
    const std::int64_t N = 400;
    auto [A8, B8] = reciprocal_pair(parse("ph(1,2)^8"), N);
    auto r1 = verify_relation(A8, B8, MatchRelation{1, 2, 1, -8, 1, 0}, 150);
    auto [A24, B24] = reciprocal_pair(parse("ph(1,2)^24"), N);
    auto r2 = verify_relation(A24, B24, MatchRelation{1, 2, 3, -2048, 1, 0}, 150);
    double dt = seconds_since(t0);
    detail = "alpha " + std::to_string(r1.checked_count) + " checks, beta " +
             std::to_string(r2.checked_count) + " checks, " +
             std::to_string(dt) + " s";
    return r1.passed && r2.passed && r1.checked_count >= 150 &&
           r2.checked_count >= 150 && dt < 5.0;
}

// ---------------------------------------------------------------- 2
bool crit_gamma(std::string& detail) {
    int passed = 0, total = 0;
    std::int64_t min_checked = 1 << 30;
    auto run = [&](const std::string& id) {
        ++total;
        auto r = verify_entry(id, 700, 50, true);
        if (r.passed()) ++passed;
        min_checked = std::min(min_checked, r.checked_count);
    };
    for (int p : {5, 7, 11, 13}) run("T1.1.i.p" + std::to_string(p));
    for (int p : {3, 5, 7, 11, 13}) {
        run("T1.1.ii.p" + std::to_string(p));
        run("T1.1.iii.p" + std::to_string(p));
    }
    detail = std::to_string(passed) + "/" + std::to_string(total) +
             " cases, min checks " + std::to_string(min_checked);
    return passed == total && min_checked >= 50;
}

// ---------------------------------------------------------------- 3
bool crit_families(std::string& detail) {
    auto t0 = Clock::now();
    int passed = 0, total = 0;
    for (const char* prefix : {"T1.2", "T1.3", "T1.4", "T1.5", "T1.6"}) {
        for (const auto& r : verify_all(prefix, 600, 1, 1, false)) {
            ++total;
            if (r.passed()) ++passed;
        }
    }
    // the modulus-36 items need the wider window
    for (const char* id : {"T1.6.xvi", "T1.6.xxii"}) {
        ++total;
        if (verify_entry(id, 900, 1, false).passed()) ++passed;
    }
    double dt = seconds_since(t0);
    detail = std::to_string(passed) + "/" + std::to_string(total) +
             " relations at N=600 (36-modulus at 900), " +
             std::to_string(dt) + " s single-threaded";
    return passed == total && dt < 120.0;
}

// ---------------------------------------------------------------- 4
bool crit_identities(std::string& detail) {
    int passed = 0, total = 0;
    for (const auto& e : Registry::instance().entries()) {
        if (e.kind != EntryKind::SeriesIdentity) continue;
        ++total;
        if (verify_entry(e.id, 400, 1, false).passed()) ++passed;
    }
    int grid_passed = 0;
    std::int64_t grid_checks = 0;
    for (const char* which : {"2.2", "2.3", "2.4", "2.5"}) {
        auto rep = verify_theta_lemma(which, 8, 150);
        if (rep.passed) ++grid_passed;
        grid_checks += rep.checked_count;
    }
    detail = std::to_string(passed) + "/" + std::to_string(total) +
             " identities at order 400; theta grid " +
             std::to_string(grid_passed) + "/4 (" +
             std::to_string(grid_checks) + " specializations at order 150)";
    return passed == total && grid_passed == 4;
}

// ---------------------------------------------------------------- 5
bool crit_dissections(std::string& detail) {
    int passed = 0, total = 0;
    auto run = [&](const char* which, int p) {
        ++total;
        if (verify_p_dissection(which, p, 300).passed) ++passed;
    };
    for (int p : {5, 7, 11, 13}) run("f1", p);
    for (int p : {3, 5, 7}) run("psi", p);
    for (int p : {3, 5, 7}) run("phi", p);
    detail = std::to_string(passed) + "/" + std::to_string(total) +
             " reconstructions at order 300 (side conditions asserted)";
    return passed == total;
}

// ---------------------------------------------------------------- 6
bool crit_conjectures(std::string& detail) {
    auto t0 = Clock::now();
    int passed = 0, total = 0;
    std::int64_t min_checked = 1 << 30, max_order = 0;
    for (const auto& r : verify_all("C8", 600, 50, 1, true)) {
        ++total;
        if (r.passed()) ++passed;
        min_checked = std::min(min_checked, r.checked_count);
        max_order = std::max(max_order, r.order_used);
    }
    double dt = seconds_since(t0);
    detail = std::to_string(passed) + "/" + std::to_string(total) +
             " conjectured relation sets verified to order " +
             std::to_string(max_order) + ", min checks " +
             std::to_string(min_checked) + ", " + std::to_string(dt) + " s";
    return passed == total && min_checked >= 50 && dt < 600.0;
}

// ---------------------------------------------------------------- 7
bool crit_oracles(std::string& detail) {
    bool ok = true;
    for (std::int64_t k = 1; k <= 6; ++k)
        ok = ok && equal_to_order(euler_f(k, 300), pochhammer(k, k, 300)).passed;

    auto inv = euler_f(1, 501).invert();
    auto p = partition_numbers(501);
    for (std::int64_t n = 0; n <= 500 && ok; ++n)
        ok = ok && inv.coefficient(n) == p[static_cast<std::size_t>(n)];

    int products = 0;
    for (const auto& e : Registry::instance().entries()) {
        if (e.expr_a.empty() || products >= 20) continue;
        auto [A, B] = reciprocal_pair(parse(e.expr_a), 300);
        auto prod = A.mul(B);
        ok = ok && equal_to_order(prod, TruncatedSeries::one(prod.order())).passed;
        ++products;
    }
    detail = "pentagonal == product for k<=6 at N=300; 1/f1 == recurrence to "
             "n=500; " + std::to_string(products) + " catalog reciprocals";
    return ok && products == 20;
}

// ---------------------------------------------------------------- 8
bool crit_scan(std::string& detail) {
    bool ok = true;
    int rediscovered = 0;
    auto ground = [&](const std::string& expr_text, const MatchRelation& want,
                      std::int64_t N, std::int64_t max_mod) {
        auto [A, B] = reciprocal_pair(parse(expr_text), N);
        auto found = scan(A, B, max_mod, 40);
        for (const auto& r : found)
            ok = ok && verify_relation(A, B, r, 40).passed;
        if (std::find(found.begin(), found.end(), want) != found.end())
            ++rediscovered;
        else
            ok = false;
    };
    const auto& reg = Registry::instance();
    for (const char* id : {"T1.2.iii", "T1.2.iv", "T1.2.vii"}) {
        const auto& e = reg.get(id);
        ground(e.expr_a, e.relations.at(0), 600, 8);
    }
    ground("ph(1,2)^8", MatchRelation{1, 2, 1, -8, 1, 0}, 600, 8);
    detail = std::to_string(rediscovered) +
             "/4 ground-truth relations re-discovered; every scan hit "
             "re-verified";
    return ok && rediscovered == 4;
}

// ---------------------------------------------------------------- 9
bool crit_properties(std::string& detail) {
    const std::int64_t N = 200;
    bool ok = true;
    std::vector<TruncatedSeries> corpus = {
        euler_f(1, N), phi(N), psi(N), chi(N), rr_G(N),
        rr_R(N), rgg_S(N), slater_X(N), residue_product(7, N),
        euler_f(2, N).invert(),
    };
    int checks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& A = corpus[i];
        const auto& B = corpus[(i + 1) % corpus.size()];
        const auto& C = corpus[(i + 3) % corpus.size()];
        // ring axioms
        ok = ok && equal_to_order(A.mul(B), B.mul(A)).passed;
        ok = ok && equal_to_order(A.mul(B).mul(C), A.mul(B.mul(C))).passed;
        ok = ok && equal_to_order(A.add(B).mul(C), A.mul(C).add(B.mul(C))).passed;
        // dissection completeness mod 3
        TruncatedSeries sum = TruncatedSeries::zero(N);
        for (std::int64_t b = 0; b < 3; ++b) {
            auto part = A.extract(ExtractionSpec(3, b)).substitute_power(3);
            sum = sum.add(TruncatedSeries::monomial(1, b, part.order() + b).mul(part));
        }
        ok = ok && equal_to_order(sum, A).passed;
        // adjunction
        auto up = A.substitute_power(5);
        auto lifted = TruncatedSeries::monomial(1, 2, up.order() + 2).mul(up);
        ok = ok && equal_to_order(lifted.extract(ExtractionSpec(5, 2)), A).passed;
        // alternate-sign involution
        ok = ok && equal_to_order(A.alternate_sign().alternate_sign(), A).passed;
        checks += 6;
    }
    detail = std::to_string(checks) + " structural checks over " +
             std::to_string(corpus.size()) + " catalog series at order 200";
    return ok;
}

// ---------------------------------------------------------------- 10
bool crit_performance(std::string& detail) {
    auto t0 = Clock::now();
    const std::int64_t N = 100000;
    auto inv = euler_f(1, N).invert();
    double dt = seconds_since(t0);
    auto p = partition_numbers(2001);
    bool ok = true;
    for (std::int64_t n = 0; n <= 2000; ++n)
        ok = ok && inv.coefficient(n) == p[static_cast<std::size_t>(n)];
    detail = "1/f1 to N=100000 in " + std::to_string(dt) +
             " s; first 2001 coefficients match the recurrence";
    return ok && dt < 30.0;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "introductory examples", crit_intro},
        {2, "gamma relation sets, p in {3,5,7,11,13}", crit_gamma},
        {3, "full relation-set families at stated orders", crit_families},
        {4, "identity registry and theta specialization grid", crit_identities},
        {5, "p-dissection reconstructions", crit_dissections},
        {6, "conjectured relation sets", crit_conjectures},
        {7, "oracle equivalences", crit_oracles},
        {8, "scanner ground truth", crit_scan},
        {9, "structural property suite", crit_properties},
        {10, "performance", crit_performance},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %2d (%s): %s\n", ok ? "PASS" : "FAIL",
                    c.number, c.name, detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0)
        std::printf("all 10 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
