#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actions.hpp"
#include "bsgs.hpp"
#include "datapath.hpp"
#include "perm.hpp"

using namespace gfv;

namespace {

BsgsChain<Perm> perm_chain(const std::vector<Perm>& gens, unsigned degree,
                           std::optional<mpz_class> known = std::nullopt,
                           std::vector<Key> base_hint = {}) {
    return schreier_sims(gens, perm_ops(degree), natural_action(), known,
                         std::move(base_hint));
}

}  // namespace

TEST_CASE("A5 on 5 points") {
    std::vector<Perm> gens = {Perm::from_cycles("(1,2,3)", 5),
                              Perm::from_cycles("(3,4,5)", 5)};
    auto c = perm_chain(gens, 5);
    CHECK(c.order() == 60);
    CHECK(c.member(Perm::from_cycles("(1,2)(3,4)", 5)));
    CHECK(!c.member(Perm::from_cycles("(1,2)", 5)));

    // stabilizer of a point is A4
    mpz_class so;
    auto stab = point_stabilizer(c, Key(0), &so);
    CHECK(so == 12);
    auto cs = perm_chain(stab, 5);
    CHECK(cs.order() == 12);

    // base reordering leaves the order invariant
    auto c2 = perm_chain(gens, 5, std::nullopt, {Key(4), Key(1)});
    CHECK(c2.order() == 60);
}

TEST_CASE("index-2 kernel: S5 -> A5 by sign") {
    std::vector<Perm> gens = {Perm::from_cycles("(1,2)", 5),
                              Perm::from_cycles("(1,2,3,4,5)", 5)};
    std::vector<int> par;
    for (auto& g : gens) par.push_back(g.sign() < 0 ? 1 : 0);
    auto ker = index2_kernel(gens, par, perm_ops(5));
    auto c = perm_chain(ker, 5);
    CHECK(c.order() == 60);
    for (auto& g : ker) CHECK(g.sign() == 1);
}

TEST_CASE("Mathieu and projective data files") {
    auto m12 = load_perm_data(data_file("m12.txt"));
    auto c12 = perm_chain(m12.gens, 12, m12.order);
    CHECK(c12.order() == 95040);

    auto pgl = load_perm_data(data_file("pgammal_2_8.txt"));
    auto cp = perm_chain(pgl.gens, 9, pgl.order);
    CHECK(cp.order() == 1512);

    auto m24 = load_perm_data(data_file("m24.txt"));
    auto c24 = perm_chain(m24.gens, 24, m24.order);
    CHECK(c24.order() == 244823040);
    for (auto& g : m24.gens) CHECK(g.sign() == 1);  // M24 inside A24
}

TEST_CASE("M12 on 5-subsets: transitivity and stabilizer") {
    auto m12 = load_perm_data(data_file("m12.txt"));
    auto act = subset_action(12);
    Key start = subset_mask({0, 1, 2, 3, 4});
    auto orb = orbit(m12.gens, act, start);
    CHECK(orb.points.size() == 792);  // C(12,5)
    auto chain = schreier_sims(m12.gens, perm_ops_subsets(12, 5), act, m12.order,
                               {start});
    mpz_class so;
    auto stab = point_stabilizer(chain, start, &so);
    CHECK(so == 120);  // 95040 / 792
    for (auto& g : stab) CHECK(act(g, start) == start);
}

TEST_CASE("intersection oracle: A4 meet V4-ish subgroups of A5") {
    std::vector<Perm> a4 = {Perm::from_cycles("(1,2,3)", 5),
                            Perm::from_cycles("(2,3,4)", 5)};
    std::vector<Perm> d10 = {Perm::from_cycles("(1,2,3,4,5)", 5),
                             Perm::from_cycles("(2,5)(3,4)", 5)};
    auto ca = perm_chain(a4, 5);
    auto cd = perm_chain(d10, 5);
    CHECK(ca.order() == 12);
    CHECK(cd.order() == 10);
    mpz_class i1 = tiny_intersection_order(ca, cd);
    mpz_class i2 = tiny_intersection_order(cd, ca);
    CHECK(i1 == i2);
    CHECK(i1 == 2);  // A4 ∩ D10 in A5: |A4||D10|/|A5| = 2 (A5 = A4 * D10)
}

TEST_CASE("orbit sizes divide the group order (Lagrange spot checks)") {
    auto m12 = load_perm_data(data_file("m12.txt"));
    auto c = perm_chain(m12.gens, 12, m12.order);
    for (auto& lv : c.levels) CHECK(c.order() % (unsigned long)lv.orb.points.size() == 0);
}

TEST_CASE("transitivity check against a named universe") {
    auto m12 = load_perm_data(data_file("m12.txt"));
    auto act = subset_action(12);
    auto universe = orbit(m12.gens, act, subset_mask({0, 1, 2, 3, 4}));
    CHECK(is_transitive_on(m12.gens, act, universe));
    // a point stabilizer is not transitive on 5-subsets
    auto cnat = perm_chain(m12.gens, 12, m12.order);
    mpz_class so;
    auto stab = point_stabilizer(cnat, Key(0), &so);
    CHECK(so == 7920);  // M11
    CHECK(!is_transitive_on(stab, act, universe));
}

TEST_CASE("known-order mismatch fails loudly") {
    std::vector<Perm> gens = {Perm::from_cycles("(1,2,3)", 5),
                              Perm::from_cycles("(3,4,5)", 5)};
    CHECK_THROWS_AS(perm_chain(gens, 5, mpz_class(120)), EngineError);
}
