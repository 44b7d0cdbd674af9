// qseries: command-line front end for the series engine.
//
//   qseries expand "ph(1,2)^8" -N 32
//   qseries verify T1.2.iii -N 600
//   qseries verify all --jobs 4
//   qseries scan "f(1)^2/f(3)^2" --max-mod 12
//   qseries list
//
// Exit codes: 0 success, 1 verification failure (or counterexample),
// 2 usage/parse error or unknown id, 3 insufficient order (including
// non-invertible leading coefficient).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qmatch/expr.hpp"
#include "qmatch/matching.hpp"
#include "qmatch/registry.hpp"

using namespace qmatch;
using nlohmann::json;

namespace {

int cmd_expand(const std::string& text, std::int64_t N, const std::string& fmt) {
    TruncatedSeries s = evaluate(parse(text), N);
    if (s.order() > N) s = s.truncate(N);
    std::int64_t lo = std::min<std::int64_t>(0, s.valuation());
    if (fmt == "json") {
        json j;
        j["expr"] = render(parse(text));
        j["valuation"] = s.is_zero() ? 0 : s.valuation();
        j["order"] = s.order();
        json coeffs = json::array();
        for (std::int64_t n = lo; n < s.order(); ++n)
            coeffs.push_back(s.coefficient(n).get_str());
        j["start"] = lo;
        j["coeffs"] = coeffs;
        std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "n,coefficient\n";
        for (std::int64_t n = lo; n < s.order(); ++n)
            std::cout << n << "," << s.coefficient(n).get_str() << "\n";
    } else {
        if (lo < 0) std::cout << "# starting at q^" << lo << "\n";
        for (std::int64_t n = lo; n < s.order(); ++n)
            std::cout << (n > lo ? "," : "") << s.coefficient(n).get_str();
        std::cout << "\n";
    }
    return 0;
}

const char* status_name(EntryResult::Status s) {
    switch (s) {
        case EntryResult::Status::Passed: return "PASS";
        case EntryResult::Status::Failed: return "FAIL";
        case EntryResult::Status::InsufficientOrder: return "INSUFFICIENT-ORDER";
    }
    return "?";
}

int cmd_verify(const std::string& target, std::int64_t N, std::int64_t min_checks,
               int jobs, bool exact, const std::string& fmt) {
    std::vector<EntryResult> results = verify_all(target, N, min_checks, jobs, !exact);
    bool failed = false, insufficient = false;
    json arr = json::array();
    if (fmt == "csv") std::cout << "id,kind,status,checked,order,detail\n";
    for (const auto& r : results) {
        if (r.status == EntryResult::Status::Failed) failed = true;
        if (r.status == EntryResult::Status::InsufficientOrder) insufficient = true;
        if (!exact && r.order_used > N)
            std::cerr << "note: " << r.id << " verified at raised order "
                      << r.order_used << "\n";
        if (fmt == "json") {
            arr.push_back({{"id", r.id},
                           {"kind", entry_kind_name(r.kind)},
                           {"status", status_name(r.status)},
                           {"checked", r.checked_count},
                           {"order", r.order_used},
                           {"detail", r.detail}});
        } else if (fmt == "csv") {
            std::cout << r.id << "," << entry_kind_name(r.kind) << ","
                      << status_name(r.status) << "," << r.checked_count << ","
                      << r.order_used << ",\"" << r.detail << "\"\n";
        } else {
            std::cout << status_name(r.status) << " " << r.id << " ("
                      << entry_kind_name(r.kind) << ") checked=" << r.checked_count
                      << " order=" << r.order_used;
            if (!r.detail.empty()) std::cout << " : " << r.detail;
            std::cout << "\n";
        }
    }
    if (fmt == "json") std::cout << arr.dump(2) << "\n";
    if (fmt == "text") {
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.passed();
        std::cout << passed << "/" << results.size() << " entries passed\n";
    }
    if (failed) return 1;
    if (insufficient) return 3;
    return 0;
}

int cmd_scan(const std::string& text, std::int64_t N, std::int64_t max_mod,
             std::int64_t min_checks, const std::string& fmt) {
    auto [A, B] = reciprocal_pair(parse(text), N);
    std::vector<MatchRelation> rels = scan(A, B, max_mod, min_checks);
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& r : rels) arr.push_back(json::parse(r.to_json()));
        std::cout << arr.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << "cA,aA,rA,cB,aB,rB\n";
        for (const auto& r : rels)
            std::cout << r.cA.get_str() << "," << r.aA << "," << r.rA << ","
                      << r.cB.get_str() << "," << r.aB << "," << r.rB << "\n";
    } else {
        for (const auto& r : rels) std::cout << r.describe() << "\n";
        std::cout << "# " << rels.size() << " relation(s)\n";
    }
    return 0;
}

int cmd_list(const std::string& fmt) {
    if (fmt == "json") {
        std::cout << export_catalog_json() << "\n";
        return 0;
    }
    if (fmt == "csv") std::cout << "id,kind,source\n";
    for (const auto& e : Registry::instance().entries()) {
        if (fmt == "csv")
            std::cout << e.id << "," << entry_kind_name(e.kind) << ",\"" << e.source
                      << "\"\n";
        else
            std::cout << e.id << "  [" << entry_kind_name(e.kind) << "]  " << e.source
                      << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series expansion and matching-coefficient verification"};
    app.require_subcommand(1);

    std::string expr_text, target = "all", fmt = "text";
    std::int64_t N = 600, min_checks = 50, max_mod = 24;
    int jobs = 1;
    bool exact = false;

    auto add_fmt = [&fmt](CLI::App* c) {
        c->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "expand an expression");
    expand->add_option("expr", expr_text, "expression")->required();
    expand->add_option("-N,--order", N, "truncation order");
    add_fmt(expand);

    CLI::App* verify = app.add_subcommand("verify", "verify catalog entries");
    verify->add_option("target", target, "entry id, prefix, or 'all'");
    verify->add_option("-N,--order", N, "truncation order");
    verify->add_option("--min-checks", min_checks, "minimum matches per relation");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--exact", exact, "do not raise the order to each entry's recommendation");
    add_fmt(verify);

    CLI::App* scan_cmd = app.add_subcommand("scan", "search for matching-coefficient relations");
    scan_cmd->add_option("expr", expr_text, "expression")->required();
    scan_cmd->add_option("-N,--order", N, "truncation order");
    scan_cmd->add_option("--max-mod", max_mod, "largest left-side modulus");
    scan_cmd->add_option("--min-checks", min_checks, "minimum matches per relation");
    add_fmt(scan_cmd);

    CLI::App* list_cmd = app.add_subcommand("list", "list the catalog");
    add_fmt(list_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (expand->parsed()) return cmd_expand(expr_text, N, fmt);
        if (verify->parsed()) return cmd_verify(target, N, min_checks, jobs, exact, fmt);
        if (scan_cmd->parsed()) return cmd_scan(expr_text, N, max_mod, min_checks, fmt);
        return cmd_list(fmt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownIdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonUnitLeadingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OrderExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
