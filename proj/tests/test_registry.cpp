#include <doctest.h>

#include <qmatch/registry.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

using namespace qmatch;

TEST_CASE("catalog manifest: size, ordering, kinds") {
    const auto& entries = Registry::instance().entries();
    CHECK(entries.size() == 238);
    CHECK(std::is_sorted(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.id < b.id; }));

    std::map<EntryKind, int> kinds;
    for (const auto& e : entries) ++kinds[e.kind];
    CHECK(kinds[EntryKind::RelationSet] == 133);
    CHECK(kinds[EntryKind::SeriesIdentity] == 79);
    CHECK(kinds[EntryKind::Parametric] == 15);
    CHECK(kinds[EntryKind::Conjecture] == 11);
}

TEST_CASE("id lookup: exact, suffix, unknown") {
    const auto& reg = Registry::instance();
    CHECK(reg.get("I.alpha").id == "I.alpha");
    // unique suffix after a dot
    CHECK(reg.get("alpha").id == "I.alpha");
    CHECK(reg.get("omega28").id == "C8.3.omega28");
    CHECK_THROWS_AS(reg.get("definitely-not-there"), UnknownIdError);
    // ambiguous suffixes are rejected rather than guessed
    CHECK_THROWS_AS(reg.get("i"), UnknownIdError);

    auto pre = reg.match_prefix("T1.4");
    CHECK(pre.size() == 11);
}

TEST_CASE("verify_entry passes on a relation set and honors auto_raise") {
    auto r = verify_entry("I.alpha", 400, 150, false);
    CHECK(r.passed());
    CHECK(r.checked_count >= 150);
    CHECK(r.order_used == 400);

    // too small a window without auto-raise: insufficient order, not failure
    auto low = verify_entry("I.alpha", 10, 50, false);
    CHECK(low.status == EntryResult::Status::InsufficientOrder);

    // with auto-raise the recommended order kicks in
    auto raised = verify_entry("I.alpha", 10, 50, true);
    CHECK(raised.passed());
    CHECK(raised.order_used >= 200);
}

TEST_CASE("verify_all on a prefix, serial vs threaded") {
    auto serial = verify_all("T1.4", 300, 1, 1, false);
    auto threaded = verify_all("T1.4", 300, 1, 4, false);
    REQUIRE(serial.size() == threaded.size());
    CHECK(serial.size() == 11);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].id == threaded[i].id);
        CHECK(serial[i].passed());
        CHECK(threaded[i].passed());
    }
}

TEST_CASE("theta lemma grid at a reduced size") {
    for (const char* which : {"2.2", "2.3", "2.4", "2.5"}) {
        auto rep = verify_theta_lemma(which, 4, 80);
        CHECK_MESSAGE(rep.passed, which);
        CHECK(rep.checked_count > 0);
    }
    // aliases resolve to the same checks
    CHECK(verify_theta_lemma("2.1.29a", 3, 60).passed);
    CHECK_THROWS_AS(verify_theta_lemma("9.9", 3, 60), Error);
}

TEST_CASE("p-dissection reconstructions") {
    CHECK(verify_p_dissection("f1", 5, 200).passed);
    CHECK(verify_p_dissection("psi", 3, 200).passed);
    CHECK(verify_p_dissection("phi", 2, 200).passed);
    CHECK(verify_p_dissection("phi", 3, 200).passed);
    CHECK_THROWS_AS(verify_p_dissection("f1", 3, 100), Error);    // needs p > 3
    CHECK_THROWS_AS(verify_p_dissection("psi", 2, 100), Error);   // needs odd p
    CHECK_THROWS_AS(verify_p_dissection("phi", 6, 100), Error);   // not prime
}

TEST_CASE("catalog JSON export is well-formed and complete") {
    auto j = nlohmann::json::parse(export_catalog_json());
    REQUIRE(j.is_array());
    CHECK(j.size() == 238);
    for (const auto& e : j) {
        CHECK(e.contains("id"));
        CHECK(e.contains("kind"));
        if (e["kind"] == "relation-set" || e["kind"] == "conjecture") {
            CHECK(e.contains("relations"));
            CHECK(!e["relations"].empty());
        }
    }
}
