#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actions.hpp"
#include "atlas.hpp"

using namespace gfv;

TEST_CASE("symplectic groups from transvections") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);

    auto s1 = sp_group(1, F4);
    CHECK(s1.order == 60);
    CHECK(group_chain(s1).order() == 60);

    auto s2 = sp_group(2, F2);
    CHECK(group_chain(s2).order() == 720);

    auto s24 = sp_group(2, F4);
    CHECK(group_chain(s24).order() == 979200);

    auto s3 = sp_group(3, F2);
    CHECK(group_chain(s3).order() == 1451520);

    // a chain proves the claimed order exactly; membership works
    auto c = group_chain(s24);
    CHECK(c.member(s24.gens[0].mul(s24.gens[1])));
}

TEST_CASE("orthogonal groups and their Dickson kernels") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);

    auto o4p2 = o_group(2, F2, FormType::plus);  // the transvection-deficient case
    CHECK(o4p2.full.order == 72);
    CHECK(group_chain(o4p2.full).order() == 72);
    CHECK(group_chain(o4p2.omega).order() == 36);

    auto o4m2 = o_group(2, F2, FormType::minus);
    CHECK(group_chain(o4m2.full).order() == 120);
    CHECK(group_chain(o4m2.omega).order() == 60);

    auto o4m4 = o_group(2, F4, FormType::minus);
    CHECK(o4m4.full.order == 8160);
    CHECK(group_chain(o4m4.full).order() == 8160);
    CHECK(group_chain(o4m4.omega).order() == 4080);
    for (const Matrix& g : o4m4.omega.gens)
        CHECK(dickson_invariant(g, *o4m4.omega.quad) == 0);

    auto o8p2 = o_group(4, F2, FormType::plus);
    CHECK(o8p2.full.order == 348364800);
    CHECK(group_chain(o8p2.full).order() == 348364800);
    CHECK(group_chain(o8p2.omega).order() == 174182400);
}

TEST_CASE("direct products and wreath squares inside Sp") {
    const Field& F4 = Field::get(2, 2);
    auto pair = sp_pair_stabilizer(3, 1, F4);
    CHECK(pair.order == mpz_class(60) * 979200);
    CHECK(group_chain(pair).order() == pair.order);

    auto wr = sp_wreath2(1, F4);
    CHECK(wr.order == 7200);
    CHECK(group_chain(wr).order() == 7200);
    for (const Matrix& g : wr.gens) CHECK(in_sp(g));
}

TEST_CASE("blow-up: embeddings, coordinates, functoriality") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Field& F16 = Field::get(2, 4);

    Blowup bl(F4, F16);
    CHECK(bl.b() == 2);
    for (unsigned a = 0; a < 4; ++a) {
        Elt e = bl.embed(static_cast<Elt>(a));
        CHECK(bl.project(e) == a);
        // embedding is a homomorphism
        for (unsigned b = 0; b < 4; ++b) {
            CHECK(bl.embed(F4.mul(a, b)) == F16.mul(bl.embed(a), bl.embed(b)));
            CHECK(bl.embed(F4.add(a, b)) == F16.add(bl.embed(a), bl.embed(b)));
        }
    }
    // coords reconstruct the element
    Elt g = F16.generator();
    for (unsigned y = 0; y < 16; ++y) {
        const auto& c = bl.coords(static_cast<Elt>(y));
        Elt acc = 0, pw = 1;
        for (unsigned j = 0; j < 2; ++j) {
            acc = F16.add(acc, F16.mul(bl.embed(c[j]), pw));
            pw = F16.mul(pw, g);
        }
        CHECK(acc == y);
    }
    // blow is multiplicative
    auto sp = sp_group(1, F16);
    Matrix a = sp.gens.at(0), b = sp.gens.at(1);
    CHECK(bl.blow(a.mul(b)) == bl.blow(a).mul(bl.blow(b)));
    // Frobenius squares to the identity for a quadratic extension
    Matrix fr = bl.frobenius_matrix(2);
    CHECK(fr.mul(fr).is_identity());
    CHECK(!fr.is_identity());

    Blowup bl2(F2, F16);
    CHECK(bl2.b() == 4);
    Matrix fr4 = bl2.frobenius_matrix(1);
    CHECK(!fr4.mul(fr4).is_identity());
    CHECK(fr4.mul(fr4).mul(fr4).mul(fr4).is_identity());
}

TEST_CASE("extension-field subgroups of Sp") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Field& F16 = Field::get(2, 4);

    auto e1 = sp_field_ext(1, F2, F4);  // Sp2(4).2 inside Sp4(2)
    CHECK(e1.linear.order == 60);
    CHECK(group_chain(e1.linear).order() == 60);
    CHECK(e1.full.order == 120);
    CHECK(group_chain(e1.full).order() == 120);

    auto e2 = sp_field_ext(1, F4, F16);  // Sp2(16).2 inside Sp4(4)
    CHECK(e2.linear.order == 4080);
    CHECK(group_chain(e2.linear).order() == 4080);
    CHECK(group_chain(e2.full).order() == 8160);

    // the blown subgroup sits inside the ambient symplectic group
    auto amb = sp_group(2, F4);
    auto chain = group_chain(amb);
    for (const Matrix& g : e2.full.gens) CHECK(chain.member(g));
}

TEST_CASE("norm form: SL2(q^2) as the minus-type orthogonal group") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    const Field& F16 = Field::get(2, 4);

    auto n2 = norm_minus_group(F2, F4);
    CHECK(n2.omega.order == 60);
    CHECK(group_chain(n2.omega).order() == 60);
    CHECK(group_chain(n2.full).order() == 120);

    auto n4 = norm_minus_group(F4, F16);
    CHECK(n4.omega.order == 4080);
    CHECK(group_chain(n4.omega).order() == 4080);
    CHECK(group_chain(n4.full).order() == 8160);
    CHECK(n4.full.order == group_order("GOminus", 2, 4));

    // agrees with the transvection-generated orthogonal group setwise
    auto o = o_group(2, F4, FormType::minus);
    auto ochain = group_chain(o.omega);
    for (const Matrix& g : n4.omega.gens) CHECK(ochain.member(g));
}

TEST_CASE("norm-form pair inside the plus-type group in dimension 8") {
    const Field& F4 = Field::get(2, 2);
    const Field& F16 = Field::get(2, 4);
    auto H = norm_pair_in_omega_plus(F4, F16);
    CHECK(H.order == mpz_class(4080) * 4080 * 4);
    mpz_class amb = group_order("Omplus", 4, 4);
    CHECK(amb % H.order == 0);
    CHECK(factor_string(amb / H.order) == "2^14*3^3*5^2*7*13");
    for (const Matrix& g : H.gens) CHECK(in_omega(g, *H.quad));
    CHECK(group_chain(H).order() == H.order);
}

TEST_CASE("tensor-product subgroups of plus-type groups") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);

    auto t1 = tensor_subgroup(1, F4);  // fills all of Omega4+(4)
    CHECK(t1.group.order == group_order("Omplus", 2, 4));
    CHECK(group_chain(t1.group).order() == t1.group.order);
    CHECK(group_chain(t1.left).order() == 60);
    CHECK(group_chain(t1.right).order() == 60);
    CHECK(t1.predicted.gens.empty());
    // the factor swap extends Omega4+ to the full orthogonal group
    REQUIRE(t1.factor_swap.has_value());
    auto go = t1.group;
    go.gens.push_back(*t1.factor_swap);
    go.order *= 2;
    CHECK(group_chain(go).order() == group_order("GOplus", 2, 4));

    auto t2 = tensor_subgroup(2, F2);  // Sp2(2) x Sp4(2) inside Omega8+(2)
    CHECK(t2.group.order == mpz_class(6) * 720);
    CHECK(group_chain(t2.group).order() == t2.group.order);
    for (const Matrix& g : t2.group.gens) CHECK(in_omega(g, *t2.group.quad));
    // the predicted intersection subgroup: 1 x Sp2(2) fixing the special
    // vector, whose Q-value is 1
    CHECK(group_chain(t2.predicted).order() == 6);
    CHECK(t2.group.quad->eval(t2.special) == 1);
    auto rc = group_chain(t2.right);
    for (const Matrix& g : t2.predicted.gens) {
        CHECK(rc.member(g));
        CHECK(vec_mat(F2, t2.special, g) == t2.special);
    }
}

TEST_CASE("symplectic reduction: consistent coordinates for blown subgroups") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    SymplecticReduction red(2, F2, F4);

    // blown Sp4(4) with Frobenius, as in the plain extension-field subgroup
    auto amb = sp_group(4, F2);
    auto ambc = group_chain(amb);
    MatrixGroup M;
    M.F = &F2;
    M.dim = 8;
    M.order = mpz_class(979200) * 2;
    M.label = "GammaSp4(4) blown";
    for (const Matrix& g : sp_group(2, F4).gens) M.gens.push_back(red.embed(g));
    M.gens.push_back(red.frobenius());
    for (const Matrix& g : M.gens) CHECK(ambc.member(g));
    CHECK(group_chain(M).order() == M.order);

    // the trace-reduced minus form: still minus over the subfield, and its
    // blown orthogonal group embeds through the same coordinates
    QuadraticForm Qm = red.reduce(standard_quadratic(F4, 2, FormType::minus));
    auto cls = classify_quadratic(Qm);
    CHECK(cls.type == FormType::minus);
    auto o = o_group(2, F4, FormType::minus);
    auto fact = form_action(F2, 8);
    Key qk = form_key(Qm);
    for (const Matrix& g : o.full.gens) {
        Matrix h = red.embed(g);
        CHECK(fact(h, qk) == qk);  // preserves the reduced form
    }
    // Frobenius does not fix this form (its big-field coefficients are not
    // subfield-rational), but a symplectic transporter corrects it
    Matrix fr = red.frobenius();
    Key moved = fact(fr, qk);
    CHECK(moved != qk);
    QuadraticForm Qmoved = key_form(F2, 8, moved);
    Matrix corr = form_transporter(Qmoved, Qm);
    CHECK(in_sp(corr));
    CHECK(fact(fr.mul(corr), qk) == qk);
}

TEST_CASE("orthogonal reduction: plus type over the subfield") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    OrthogonalReduction red(2, F2, F4, FormType::plus);
    CHECK(red.type == FormType::plus);

    // blown Omega4+(4) sits inside Omega8+(2), and the blown Frobenius is
    // an isometry of Dickson invariant zero
    auto amb = o_group(4, F2, FormType::plus);
    auto ambc = group_chain(amb.omega);
    auto small = o_group(2, F4, FormType::plus);
    for (const Matrix& g : small.omega.gens) {
        Matrix h = red.embed(g);
        CHECK(in_omega(h, red.quad));
        CHECK(ambc.member(h));
    }
    Matrix fr = red.frobenius();
    CHECK(dickson_invariant(fr, red.quad) == 0);
    CHECK(ambc.member(fr));
}

TEST_CASE("G2 inside Sp6") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);

    auto g2 = g2_group(F2);  // order asserted during construction
    CHECK(g2.group.order == 12096);
    CHECK(g2.inner.order == 36);

    auto g4 = g2_group(F4);
    CHECK(g4.group.order == 251596800);
    CHECK(g4.inner.order == 3600);
    for (const Matrix& g : g4.group.gens) CHECK(in_sp(g));

    // the inner subgroup stabilizes both pieces of the decomposition
    auto act2 = subspace_action(F4, 6, 2);
    auto act4 = subspace_action(F4, 6, 4);
    Key k2 = subspace_key(g4.split2);
    Key k4 = subspace_key(g4.split4);
    for (const Matrix& g : g4.inner.gens) {
        CHECK(act2(g, k2) == k2);
        CHECK(act4(g, k4) == k4);
    }
    // ... and G2 itself does not stabilize the 2-subspace
    bool moves = false;
    for (const Matrix& g : g4.group.gens)
        if (act2(g, k2) != k2) moves = true;
    CHECK(moves);
    // the 2-subspace is nondegenerate: its orbit under G2(4) has the size
    // forced by the order identity |G2| / |Omega4+|
    auto orb = orbit(g4.group.gens, act2, k2);
    CHECK(orb.points.size() == 251596800 / 3600);
}

TEST_CASE("Suzuki group inside Sp4") {
    const Field& F8 = Field::get(2, 3);
    auto sz = sz_group(F8);  // order asserted during construction
    CHECK(sz.order == 29120);
    for (const Matrix& g : sz.gens) CHECK(in_sp(g));

    // contains the simultaneous swap of both hyperbolic pairs
    auto chain = group_chain(sz);
    Matrix g(F8, 4, 4);
    g.at(0, 1) = 1; g.at(1, 0) = 1; g.at(2, 3) = 1; g.at(3, 2) = 1;
    CHECK(chain.member(g));
}

TEST_CASE("permutation atlas") {
    auto a7 = alt_group(7);
    CHECK(perm_group_chain(a7).order() == 2520);
    auto a8 = alt_group(8);
    CHECK(perm_group_chain(a8).order() == 20160);
    auto s6 = sym_group(6);
    CHECK(perm_group_chain(s6).order() == 720);
    auto a24 = alt_group(24);
    CHECK(perm_group_chain(a24).order() == group_order("Alt", 24, 0));
    for (const Perm& p : a24.gens) CHECK(p.sign() == 1);

    auto m12 = mathieu12();
    CHECK(perm_group_chain(m12).order() == 95040);
    auto m24 = mathieu24();
    CHECK(perm_group_chain(m24).order() == 244823040);
    auto pg = pgammal_2_8(10);  // padded by a fixed point
    CHECK(pg.degree == 10);
    CHECK(perm_group_chain(pg).order() == 1512);
    for (const Perm& p : pg.gens) CHECK(p.apply(9) == 9);
}

TEST_CASE("split octonions and triality partners") {
    const Field& F2 = Field::get(2, 1);
    Octonions oct(F2);

    // unital, norm-multiplicative algebra with a plus-type norm
    CHECK(classify_quadratic(oct.norm).type == FormType::plus);
    std::vector<Vec> pts;
    for (unsigned m = 1; m < 256; m += 37) {
        Vec v(8, 0);
        for (unsigned i = 0; i < 8; ++i) v[i] = (m >> i) & 1;
        pts.push_back(v);
    }
    for (const Vec& x : pts) {
        CHECK(oct.mul(x, oct.unit) == x);
        CHECK(oct.mul(oct.unit, x) == x);
        for (const Vec& y : pts)
            CHECK(oct.norm.eval(oct.mul(x, y)) ==
                  F2.mul(oct.norm.eval(x), oct.norm.eval(y)));
    }

    // for g in the Dickson kernel of the norm there are companions g2, g3
    // with g(xy) = g2(x) g3(y); the partner is again in the kernel
    FormClassification cls = classify_quadratic(oct.norm);
    Matrix S = cls.standardizing_basis, Sinv = S.inverse();
    OrthogonalPair op = o_group(4, F2, FormType::plus);
    for (std::size_t i = 0; i < 3 && i < op.omega.gens.size(); ++i) {
        Matrix g = conjugate_into(op.omega.gens[i], Sinv);
        Matrix g2 = oct.triality_partner(g);
        CHECK(is_orthogonal_isometry(g2, oct.norm));
        CHECK(dickson_invariant(g2, oct.norm) == 0);
        // recover g3 from the images of the unit and check the identity
        Matrix g3 = g.mul(oct.lmul(vec_mat(F2, oct.unit, g2)).inverse());
        for (const Vec& x : pts)
            for (const Vec& y : pts)
                CHECK(vec_mat(F2, oct.mul(x, y), g) ==
                      oct.mul(vec_mat(F2, x, g2), vec_mat(F2, y, g3)));
    }

    // elements outside the kernel have no partner
    bool found = false;
    for (const Matrix& g : op.full.gens)
        if (dickson_invariant(g, standard_quadratic(F2, 4, FormType::plus)) ==
            1) {
            CHECK_THROWS_AS(
                oct.triality_partner(conjugate_into(g, Sinv)), EngineError);
            found = true;
            break;
        }
    CHECK(found);
}
