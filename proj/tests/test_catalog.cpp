#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "catalog.hpp"
#include "datapath.hpp"
#include "orders.hpp"

using namespace gfv;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const Catalog& cat() {
    static Catalog c = load_catalog(data_file("catalog.txt"));
    return c;
}

}  // namespace

TEST_CASE("catalog round trip and shape") {
    const Catalog& c = cat();
    CHECK(c.version == 1);
    CHECK(serialize_catalog(c) == slurp(data_file("catalog.txt")));

    std::map<std::string, int> counts;
    for (const auto& r : c.rows) counts[r.table]++;
    CHECK(counts["T1"] == 10);
    CHECK(counts["T2"] == 8);
    CHECK(counts["T5"] == 6);
    CHECK(counts["A"] == 4);
    CHECK(c.rows.size() == 28);

    std::set<std::string> ids;
    for (const auto& r : c.rows) CHECK(ids.insert(r.id()).second);

    CHECK_THROWS_AS(find_row(c, "T9", "1"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("not a catalog\n"), CatalogError);
    CHECK_THROWS_AS(parse_catalog("gfverify-catalog 1\na|b\n"), CatalogError);
}

TEST_CASE("row content spot checks") {
    const Catalog& c = cat();
    const CatalogRow& sz = find_row(c, "T1", "6");
    CHECK(sz.k_desc == "Sz(2^f)");
    CHECK(sz.recipe_k == "sz(2^f)");
    CHECK(sz.feasibility == "full-verify");

    const CatalogRow& t51 = find_row(c, "T5", "1");
    CHECK(t51.socle == "POm^+_{4l}(q)");
    CHECK(t51.smallest == "l=2,q=4");

    const CatalogRow& a3 = find_row(c, "A", "a.3");
    CHECK(a3.k_desc == "M_12");
    CHECK(a3.recipe_k == "m12");

    for (const auto& r : c.rows) {
        CHECK(recipe_known(r.recipe_g));
        CHECK(recipe_known(r.recipe_h));
        CHECK(recipe_known(r.recipe_k));
        CHECK((r.feasibility == "full-verify" || r.feasibility == "screen-only"));
    }
    CHECK_FALSE(recipe_known("no_such_recipe(3)"));
}

TEST_CASE("parameter parsing and constraints") {
    ParamMap p = parse_params("f=2,l=1,a=1,b=1");
    CHECK(p.size() == 4);
    CHECK(p["f"] == 2);
    CHECK(format_params(p) == "a=1,b=1,f=2,l=1");
    CHECK(parse_params("") == ParamMap{});
    CHECK_THROWS_AS(parse_params("f2"), CatalogError);

    const Catalog& c = cat();
    // every smallest and larger tuple satisfies its row's constraints
    for (const auto& r : c.rows) {
        CHECK_FALSE(check_constraints(r, parse_params(r.smallest)).has_value());
        if (!r.larger.empty())
            CHECK_FALSE(
                check_constraints(r, parse_params(r.larger)).has_value());
    }
    // violations are reported
    CHECK(check_constraints(find_row(c, "T1", "6"), parse_params("f=4"))
              .has_value());
    CHECK(check_constraints(find_row(c, "T1", "1"),
                            parse_params("f=1,l=3,a=1,b=2"))
              .has_value());
    CHECK(check_constraints(find_row(c, "T2", "5"), parse_params("l=2,q=4"))
              .has_value());
    CHECK(check_constraints(find_row(c, "T5", "3"), parse_params("l=1,c=3"))
              .has_value());
    CHECK(check_constraints(find_row(c, "A", "a.1"), parse_params("n=9"))
              .has_value());
    CHECK(check_constraints(find_row(c, "T1", "6"), parse_params(""))
              .has_value());  // missing parameter
}

TEST_CASE("closed-form orders at anchored tuples") {
    const Catalog& c = cat();

    // wreath pair against the minus-form stabilizer in Sp_4(4)
    RowOrders t11 = row_orders(find_row(c, "T1", "1"),
                               parse_params("f=2,l=1,a=1,b=1"), true);
    CHECK(t11.G == 979200);
    CHECK(t11.H == 7200);
    CHECK(t11.K == 8160);
    CHECK(t11.expected_meet == 60);
    RowOrders t11min = row_orders(find_row(c, "T1", "1"),
                                  parse_params("f=2,l=1,a=1,b=1"), false);
    CHECK(t11min.H == 7200);
    CHECK(t11min.K == 4080);
    CHECK(t11min.expected_meet == 30);

    // the chain tuple: Sp_8(2) with an extension-field wreath pair
    RowOrders chain = row_orders(find_row(c, "T1", "1"),
                                 parse_params("f=1,l=2,a=1,b=2"), true);
    CHECK(chain.G == group_order("Sp", 4, 2));
    CHECK(chain.H == mpz_class(60) * 60 * 4 * 2);
    CHECK(chain.K == 2 * group_order("Omminus", 4, 2));
    CHECK(chain.expected_meet == 60 * 4);

    RowOrders t12 = row_orders(find_row(c, "T1", "2"), parse_params("f=1,l=1"),
                               true);
    CHECK(t12.G == group_order("Sp", 6, 2));
    CHECK(t12.H == mpz_class(12096) * 12096 * 2);
    CHECK(t12.expected_meet == 145152);

    RowOrders t14 = row_orders(find_row(c, "T1", "4"), parse_params("l=2"),
                               true);
    CHECK(t14.G == 2 * group_order("Sp", 4, 4));
    CHECK(t14.H == mpz_class(2) * 60 * 979200);
    CHECK(t14.K == 4 * group_order("Omminus", 4, 4));
    CHECK(t14.HL == t14.H / 2);
    CHECK(t14.expected_meet == 3600);

    RowOrders t15 = row_orders(find_row(c, "T1", "5"), parse_params("l=1"),
                               false);
    CHECK(t15.G == group_order("Sp", 4, 2));
    CHECK(t15.H == 7200);
    CHECK(t15.expected_meet == 30);

    RowOrders t16 = row_orders(find_row(c, "T1", "6"), parse_params("f=3"),
                               true);
    CHECK(t16.G == 1056706560);
    CHECK(t16.K == 29120);
    CHECK(t16.expected_meet == 14);

    RowOrders t17 = row_orders(find_row(c, "T1", "7"), parse_params("f=2"),
                               true);
    CHECK(t17.K == 251596800);
    CHECK(t17.expected_meet == 3600);

    RowOrders t21 = row_orders(find_row(c, "T2", "1"), parse_params("f=1,l=2"),
                               true);
    CHECK(t21.expected_meet == 8640);

    RowOrders t27 = row_orders(find_row(c, "T2", "7"), ParamMap{}, true);
    CHECK(t27.G == 174182400);
    CHECK(t27.H == 14400);
    CHECK(t27.K == 1451520);
    CHECK(t27.expected_meet == 120);

    RowOrders t28 = row_orders(find_row(c, "T2", "8"), ParamMap{}, true);
    CHECK(t28.GmodL == 2);
    CHECK(t28.H == mpz_class(4080) * 4080 * 8);
    CHECK(t28.K == 2 * group_order("Sp", 3, 4));
    CHECK(t28.expected_meet == 8160);

    RowOrders t51 = row_orders(find_row(c, "T5", "1"),
                               parse_params("l=2,q=4"), true);
    CHECK(t51.G == group_order("Omplus", 4, 4));
    CHECK(t51.H == mpz_class(60) * 979200);
    CHECK(t51.expected_meet == 3600);

    RowOrders t52max = row_orders(find_row(c, "T5", "2"), parse_params("l=1"),
                                  true);
    RowOrders t52min = row_orders(find_row(c, "T5", "2"), parse_params("l=1"),
                                  false);
    CHECK(t52max.expected_meet == 120);
    CHECK(t52min.expected_meet == 60);

    RowOrders t53 = row_orders(find_row(c, "T5", "3"),
                               parse_params("l=1,c=2"), true);
    CHECK(t53.GmodL == 2);
    CHECK(t53.G == 2 * group_order("Omplus", 4, 4));
    CHECK(t53.H == mpz_class(4080) * 4080 * 8);
    CHECK(t53.expected_meet == 8160);
    RowOrders t53c1 = row_orders(find_row(c, "T5", "3"),
                                 parse_params("l=2,c=1"), true);
    CHECK(t53c1.GmodL == 4);
    CHECK(t53c1.H == mpz_class(60) * group_order("Sp", 2, 16) * 4);
    CHECK(t53c1.KL == group_order("Sp", 7, 4));

    RowOrders a1 = row_orders(find_row(c, "A", "a.1"), parse_params("n=10"),
                              true);
    CHECK(a1.expected_meet == 181440);

    RowOrders a2max = row_orders(find_row(c, "A", "a.2"), ParamMap{}, true);
    RowOrders a2min = row_orders(find_row(c, "A", "a.2"), ParamMap{}, false);
    CHECK(a2max.H == 14400);
    CHECK(a2max.K == 1512);
    CHECK(a2max.expected_meet == 12);
    CHECK(a2min.K == 504);

    RowOrders a3 = row_orders(find_row(c, "A", "a.3"), ParamMap{}, false);
    CHECK(a3.H == 151200);
    CHECK(a3.K == 95040);
    CHECK(a3.expected_meet == 60);

    RowOrders a4 = row_orders(find_row(c, "A", "a.4"), ParamMap{}, true);
    CHECK(a4.H == factorial(19) * 60);
    CHECK(a4.K == 244823040);
    CHECK(a4.expected_meet == 5760);
    RowOrders a4min = row_orders(find_row(c, "A", "a.4"), ParamMap{}, false);
    CHECK(a4min.expected_meet == 2880);

    CHECK_THROWS_AS(
        row_orders(find_row(c, "T2", "5"), parse_params("l=1,q=4"), true),
        CatalogError);
}

TEST_CASE("divisibility filter passes every cataloged claim") {
    const Catalog& c = cat();
    for (const auto& r : c.rows) {
        std::vector<std::string> tuples = {r.smallest};
        if (r.larger != r.smallest) tuples.push_back(r.larger);
        for (const std::string& tuple : tuples) {
            ParamMap p = parse_params(tuple);
            for (bool maximal : {false, true}) {
                RowOrders o = row_orders(r, p, maximal);
                CAPTURE(r.id());
                CAPTURE(maximal);
                DivisibilityReport rep = divisibility_filter(
                    o.G, o.H, o.K, o.L, o.HL, o.KL, o.GmodL);
                CHECK(rep.all());
                CHECK(o.expected_meet > 0);
            }
        }
    }
}

TEST_CASE("divisibility filter refutes mutated claims") {
    // wrong form sign: plus-type stabilizer inside Sp_4(4)
    mpz_class G = group_order("Sp", 2, 4);
    DivisibilityReport wrong_sign = divisibility_filter(
        G, 7200, group_order("GOplus", 2, 4), G, 7200,
        group_order("GOplus", 2, 4), 1);
    CHECK_FALSE(wrong_sign.all());

    // wrong form sign again in Sp_12(2): the plus-type stabilizer order
    // does not satisfy |G| | |H||K| against the squared G2 pair
    mpz_class G12 = group_order("Sp", 6, 2);
    mpz_class H12 = mpz_class(12096) * 12096 * 2;
    mpz_class Kplus = 2 * group_order("Omplus", 6, 2);
    DivisibilityReport wrong_sign2 =
        divisibility_filter(G12, H12, Kplus, G12, H12, Kplus, 1);
    CHECK_FALSE(wrong_sign2.all());

    // a subtler mutation the filter cannot catch: M_11 in place of M_12
    // gives the integral ratio 5, so refutation needs the order oracle
    mpz_class A12 = group_order("Alt", 12, 0);
    DivisibilityReport too_weak =
        divisibility_filter(A12, 151200, 7920, A12, 151200, 7920, 1);
    CHECK(too_weak.all());
}

TEST_CASE("desk instances") {
    const Catalog& c = cat();
    auto desk = desk_instances(c);
    CHECK(desk.size() == 29);  // 28 smallest tuples + the chain tuple

    std::set<std::string> ids;
    int full = 0;
    for (const auto& inst : desk) {
        CHECK(ids.insert(inst.id()).second);
        if (inst.full_verify) full++;
        CHECK_FALSE(check_constraints(*inst.row, inst.params).has_value());
    }
    // 18 full-verify rows at their smallest tuples, plus the chain tuple
    CHECK(full == 19);

    // zero-padded numeric rows sort in table order
    CHECK(instantiate(find_row(c, "T1", "1"), parse_params("f=2,l=1,a=1,b=1"))
              .id() == "T1.01(a=1,b=1,f=2,l=1)");

    // the chain tuple is flagged for full verification, larger tuples not
    CatalogInstance chain = instantiate(find_row(c, "T1", "1"),
                                        parse_params("f=1,l=2,a=1,b=2"));
    CHECK(chain.full_verify);
    CatalogInstance larger = instantiate(find_row(c, "T1", "6"),
                                         parse_params("f=5"));
    CHECK_FALSE(larger.full_verify);
    CatalogInstance screen_row = instantiate(find_row(c, "T1", "3"),
                                             parse_params("l=2"));
    CHECK_FALSE(screen_row.full_verify);
}
