#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "catalog.hpp"
#include "datapath.hpp"
#include "verify.hpp"

using namespace gfv;

namespace {

const Catalog& cat() {
    static Catalog c = load_catalog(data_file("catalog.txt"));
    return c;
}

const std::vector<Report>& desk() {
    static std::vector<Report> r = verify_desk(cat());
    return r;
}

const Report& by_id(const std::string& id) {
    for (const Report& r : desk())
        if (r.instance == id) return r;
    REQUIRE(false);
    throw std::runtime_error("unreachable");
}

}  // namespace

TEST_CASE("desk instances all pass") {
    const auto& reports = desk();
    CHECK(reports.size() == 29);
    std::set<std::string> ids;
    for (const Report& r : reports) {
        CAPTURE(r.line());
        CHECK(ids.insert(r.instance).second);
        CHECK((r.verdict == "verified" || r.verdict == "screened-consistent"));
    }
    // sorted by instance id
    for (std::size_t i = 1; i < reports.size(); ++i)
        CHECK(reports[i - 1].instance < reports[i].instance);
    // 19 fully verified, 10 screened
    int verified = 0;
    for (const Report& r : reports)
        if (r.verdict == "verified") verified++;
    CHECK(verified == 19);
}

TEST_CASE("anchored exact intersections") {
    CHECK(by_id("T1.01(a=1,b=1,f=2,l=1)").meet == 60);
    CHECK(by_id("T1.01(a=1,b=1,f=2,l=1)").orbit == 120);
    CHECK(by_id("T1.01(a=1,b=2,f=1,l=2)").strategy == "chain");
    CHECK(by_id("T1.01(a=1,b=2,f=1,l=2)").meet == 60);
    CHECK(by_id("T1.02(f=1,l=1)").meet == 145152);
    CHECK(by_id("T1.02(f=1,l=1)").orbit == 2016);
    CHECK(by_id("T1.04(l=2)").meet == 3600);
    CHECK(by_id("T1.04(l=2)").orbit == 32640);
    CHECK(by_id("T1.05(l=1)").meet == 120);
    CHECK(by_id("T1.06(f=3)").meet == 14);
    CHECK(by_id("T1.06(f=3)").strategy == "oracle");
    CHECK(by_id("T1.07(f=2)").meet == 3600);
    CHECK(by_id("T1.07(f=2)").orbit == 69888);
    CHECK(by_id("T2.01(f=2,l=1)").meet == 60);
    CHECK(by_id("T2.03(f=3)").meet == 14);
    CHECK(by_id("T2.04(f=2)").meet == 3600);
    CHECK(by_id("T2.07").meet == 120);
    CHECK(by_id("T2.07").orbit == 120);
    CHECK(by_id("T2.08").meet == 8160);
    CHECK(by_id("T2.08").orbit == 16320);
    CHECK(by_id("T5.01(l=2,q=4)").meet == 3600);
    CHECK(by_id("T5.01(l=2,q=4)").orbit == 16320);
    CHECK(by_id("T5.02(l=1)").meet == 120);
    CHECK(by_id("T5.03(c=2,l=1)").meet == 8160);
    CHECK(by_id("A.a.1(n=10)").meet == 181440);
    CHECK(by_id("A.a.2").meet == 12);
    CHECK(by_id("A.a.2").orbit == 126);
    CHECK(by_id("A.a.3").meet == 60);
    CHECK(by_id("A.a.3").strategy == "oracle");
    CHECK(by_id("A.a.4").strategy == "chain");
    CHECK(by_id("A.a.4").meet == 2880);
    CHECK(by_id("A.a.4").orbit == 42504);
}

TEST_CASE("screened instances") {
    CHECK(by_id("T1.03(l=2)").verdict == "screened-consistent");
    CHECK(by_id("T1.08").strategy == "screen");
    CHECK(by_id("T2.05(l=3,q=4)").verdict == "screened-consistent");
    CHECK(by_id("T5.05").verdict == "screened-consistent");
    // larger tuples screen too
    const Catalog& c = cat();
    Report larger = verify_instance(find_row(c, "T1", "6"),
                                    parse_params("f=5"));
    CHECK(larger.strategy == "screen");
    CHECK(larger.verdict == "screened-consistent");
}

TEST_CASE("report rendering is deterministic and fixed-field") {
    const Report& r = by_id("T2.07");
    CHECK(r.line() ==
          "instance=T2.07 strategy=orbit G=174182400 H=14400 K=1451520 "
          "meet=120 orbit=120 verdict=verified seed=0x5EED "
          "note=h-chain-certified");
    std::string all = render_reports(desk());
    CHECK(all == render_reports(desk()));
    CHECK(all.find("elapsed") == std::string::npos);
}

TEST_CASE("strategy forcing") {
    const Catalog& c = cat();
    const CatalogRow& row = find_row(c, "T2", "1");
    ParamMap p = parse_params("f=2,l=1");
    Report orb = verify_instance(row, p, Strategy::orbit);
    Report orc = verify_instance(row, p, Strategy::oracle);
    CHECK(orb.verdict == "verified");
    CHECK(orc.verdict == "verified");
    CHECK(orb.meet == orc.meet);
    Report scr = verify_instance(row, p, Strategy::screen);
    CHECK(scr.verdict == "screened-consistent");
    CHECK_THROWS_AS(verify_instance(row, p, Strategy::chain), CatalogError);
    CHECK(parse_strategy("orbit") == Strategy::orbit);
    CHECK_THROWS_AS(parse_strategy("bogus"), CatalogError);
}

TEST_CASE("mutated claims are refuted") {
    Report a = mutated_wrong_sign();
    CHECK(a.verdict == "refuted");
    Report b = mutated_dropped_decoration();
    CHECK(b.verdict == "refuted");
    CHECK(b.meet == 30);  // the honest intersection, not the implied 15
    Report c = mutated_wrong_subgroup();
    CHECK(c.verdict == "refuted");
    CHECK(c.K == 7920);
}

TEST_CASE("property suite") {
    for (const PropertyResult& p : property_suite()) {
        CAPTURE(p.name);
        CAPTURE(p.note);
        CHECK(p.pass);
    }
}

TEST_CASE("screening sweep") {
    const Catalog& c = cat();
    auto sw = screen_row(find_row(c, "T1", "6"), 9, 64);
    // f in {3, 5} within 2^f <= 64... f bounded by max_param here
    CHECK(sw.size() == 4);  // f = 3, 5, 7, 9
    for (const Report& r : sw) CHECK(r.verdict == "screened-consistent");
    auto sw2 = screen_row(find_row(c, "T2", "5"), 4, 9);
    for (const Report& r : sw2) {
        CHECK(r.verdict == "screened-consistent");
        CHECK(r.strategy == "screen");
    }
    CHECK(!sw2.empty());
}

TEST_CASE("verify rejects bad parameters") {
    const Catalog& c = cat();
    CHECK_THROWS_AS(
        verify_instance(find_row(c, "T1", "6"), parse_params("f=4")),
        CatalogError);
}
