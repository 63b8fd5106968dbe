#include "atlas.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "actions.hpp"
#include "datapath.hpp"

namespace gfv {

namespace {

std::string q_str(const Field& F) { return std::to_string(F.q()); }

// x -> x + lambda * B(x,v) * v  (symplectic transvection)
Matrix sp_transvection(const BilinearForm& B, const Vec& v, Elt lambda) {
    const Field& F = B.field();
    unsigned n = B.dim();
    Matrix t = Matrix::identity(F, n);
    for (unsigned i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        Elt c = F.mul(lambda, B.eval(e, v));
        for (unsigned j = 0; j < n; ++j)
            t.at(i, j) = F.add(t.at(i, j), F.mul(c, v[j]));
    }
    return t;
}

// x -> x + Q(v)^{-1} B(x,v) v  (orthogonal transvection, v nonsingular)
Matrix o_transvection(const QuadraticForm& Q, const BilinearForm& B, const Vec& v) {
    return sp_transvection(B, v, Q.field().inv(Q.eval(v)));
}

// deterministic direction candidates of Hamming weight <= w, first nonzero
// coordinate equal to 1, nonzero coordinates drawn from `scalars`
std::vector<Vec> directions(const Field& F, unsigned n, unsigned w,
                            const std::vector<Elt>& scalars) {
    std::vector<Vec> out;
    std::vector<unsigned> idx;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned left) {
        if (!idx.empty()) {
            // fill nonleading positions with every scalar combination
            std::vector<Elt> fill(idx.size() - 1, 0);
            std::function<void(unsigned)> emit = [&](unsigned k) {
                if (k + 1 == idx.size()) {
                    Vec v(n, 0);
                    v[idx[0]] = 1;
                    for (unsigned t = 1; t < idx.size(); ++t) v[idx[t]] = fill[t - 1];
                    out.push_back(std::move(v));
                    return;
                }
                for (Elt s : scalars) {
                    fill[k] = s;
                    emit(k + 1);
                }
            };
            emit(0);
        }
        if (left == 0) return;
        for (unsigned i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1, left - 1);
            idx.pop_back();
        }
    };
    rec(0, w);
    return out;
}

std::vector<Elt> star_subset(const Field& F, bool all) {
    std::vector<Elt> s;
    if (all) {
        for (unsigned a = 1; a < F.q(); ++a) s.push_back(static_cast<Elt>(a));
    } else {
        s.push_back(1);
        if (F.generator() != 1) s.push_back(F.generator());
    }
    return s;
}

// additive spanning set of the field over its prime field (packed powers of p)
std::vector<Elt> additive_basis(const Field& F) {
    std::vector<Elt> b;
    Elt v = 1;
    for (unsigned i = 0; i < F.f(); ++i) {
        b.push_back(v);
        v = static_cast<Elt>(v * F.p());
    }
    return b;
}

void push_unique(std::vector<Matrix>& gens, std::set<std::string>& seen,
                 const Matrix& g) {
    if (g.is_identity()) return;
    std::string s = g.to_string();
    if (seen.insert(s).second) gens.push_back(g);
}

bool is_order_mismatch(const EngineError& e) {
    return std::string(e.what()).rfind("order-mismatch", 0) == 0;
}

Matrix embed_block(const Field& F, unsigned dim, const Matrix& a, unsigned offset) {
    Matrix g = Matrix::identity(F, dim);
    for (unsigned i = 0; i < a.rows(); ++i)
        for (unsigned j = 0; j < a.cols(); ++j)
            g.at(offset + i, offset + j) = a.at(i, j);
    return g;
}

Matrix permutation_matrix(const Field& F, const std::vector<unsigned>& image) {
    Matrix g(F, static_cast<unsigned>(image.size()), static_cast<unsigned>(image.size()));
    for (unsigned i = 0; i < image.size(); ++i) g.at(i, image[i]) = 1;
    return g;
}

}  // namespace

BsgsChain<Matrix> group_chain(const MatrixGroup& G, std::vector<Key> base_hint) {
    return schreier_sims(G.gens, matrix_ops(G.field(), G.dim),
                         vector_action(G.field(), G.dim), G.order,
                         std::move(base_hint));
}

BsgsChain<Perm> perm_group_chain(const PermGroup& G, std::vector<Key> base_hint) {
    return schreier_sims(G.gens, perm_ops(G.degree), natural_action(), G.order,
                         std::move(base_hint));
}

bool in_sp(const Matrix& g) {
    return is_symplectic_isometry(g, standard_symplectic(g.field(), g.rows() / 2));
}

bool in_go(const Matrix& g, const QuadraticForm& Q) {
    return is_orthogonal_isometry(g, Q);
}

bool in_omega(const Matrix& g, const QuadraticForm& Q) {
    return is_orthogonal_isometry(g, Q) && dickson_invariant(g, Q) == 0;
}

MatrixGroup sp_group(unsigned m, const Field& F) {
    unsigned n = 2 * m;
    BilinearForm B = standard_symplectic(F, m);
    MatrixGroup G;
    G.F = &F;
    G.dim = n;
    G.order = group_order("Sp", m, F.q());
    G.label = "Sp" + std::to_string(n) + "(" + q_str(F) + ")";

    // candidate tiers: wider direction/scalar sets on order shortfall
    for (int tier = 0; tier < 3; ++tier) {
        std::vector<Elt> scal = star_subset(F, tier >= 1);
        unsigned w = (tier >= 2) ? 3 : 2;
        std::vector<Matrix> gens;
        std::set<std::string> seen;
        for (const Vec& v : directions(F, n, w, scal))
            for (Elt lam : scal)
                push_unique(gens, seen, sp_transvection(B, v, lam));
        try {
            (void)schreier_sims(gens, matrix_ops(F, n), vector_action(F, n),
                                G.order);
            G.gens = std::move(gens);
            break;
        } catch (const EngineError& e) {
            if (!is_order_mismatch(e) || tier == 2) throw;
        }
    }
    for (const Matrix& g : G.gens)
        if (!is_symplectic_isometry(g, B))
            throw EngineError("generator-not-symplectic");
    return G;
}

OrthogonalPair o_group(unsigned m, const Field& F, FormType type) {
    unsigned n = 2 * m;
    QuadraticForm Q = standard_quadratic(F, m, type);
    BilinearForm B = Q.polarize();

    MatrixGroup full;
    full.F = &F;
    full.dim = n;
    full.order = group_order(type == FormType::plus ? "GOplus" : "GOminus", m,
                             F.q());
    full.label = std::string("GO") + std::to_string(n) +
                 (type == FormType::plus ? "+" : "-") + "(" + q_str(F) + ")";
    full.quad = Q;

    unsigned hyperbolic_blocks = (type == FormType::plus) ? m : m - 1;
    for (int tier = 0; tier < 3; ++tier) {
        unsigned w = (tier >= 1) ? 3 : 2;
        std::vector<Elt> scal = star_subset(F, true);
        std::vector<Matrix> gens;
        std::set<std::string> seen;
        for (const Vec& v : directions(F, n, w, scal))
            if (Q.eval(v) != 0)
                push_unique(gens, seen, o_transvection(Q, B, v));
        if (hyperbolic_blocks >= 2) {
            // swap of the first two hyperbolic planes (needed over GF(2)
            // in dimension 4, where transvections generate a proper subgroup)
            std::vector<unsigned> img(n);
            for (unsigned i = 0; i < n; ++i) img[i] = i;
            img[0] = 2; img[1] = 3; img[2] = 0; img[3] = 1;
            push_unique(gens, seen, permutation_matrix(F, img));
        }
        if (tier == 2) {
            // exhaustive nonsingular directions (small spaces only)
            std::uint64_t total = 1;
            for (unsigned i = 0; i < n; ++i) {
                total *= F.q();
                if (total > (1u << 22)) throw EngineError("budget-exceeded");
            }
            for (std::uint64_t code = 1; code < total; ++code) {
                Vec v = key_vec(F, n, Key(code));
                unsigned lead = 0;
                while (v[lead] == 0) ++lead;
                if (v[lead] != 1) continue;
                if (Q.eval(v) != 0)
                    push_unique(gens, seen, o_transvection(Q, B, v));
            }
        }
        try {
            (void)schreier_sims(gens, matrix_ops(F, n), vector_action(F, n),
                                full.order);
            full.gens = std::move(gens);
            break;
        } catch (const EngineError& e) {
            if (!is_order_mismatch(e) || tier == 2) throw;
        }
    }

    std::vector<int> parity;
    for (const Matrix& g : full.gens) {
        if (!is_orthogonal_isometry(g, Q)) throw EngineError("generator-not-orthogonal");
        parity.push_back(static_cast<int>(dickson_invariant(g, Q)));
    }
    if (std::find(parity.begin(), parity.end(), 1) == parity.end())
        throw EngineError("dickson-map-trivial");

    MatrixGroup omega;
    omega.F = &F;
    omega.dim = n;
    omega.order = full.order / 2;
    omega.label = std::string("Omega") + std::to_string(n) +
                  (type == FormType::plus ? "+" : "-") + "(" + q_str(F) + ")";
    omega.quad = Q;
    omega.gens = index2_kernel(full.gens, parity, matrix_ops(F, n));
    for (const Matrix& g : omega.gens)
        if (!in_omega(g, Q)) throw EngineError("kernel-generator-outside-omega");
    return {std::move(full), std::move(omega)};
}

MatrixGroup sp_pair_stabilizer(unsigned m, unsigned k, const Field& F) {
    if (k == 0 || k >= m) throw EngineError("bad-split");
    MatrixGroup a = sp_group(k, F);
    MatrixGroup b = sp_group(m - k, F);
    MatrixGroup G;
    G.F = &F;
    G.dim = 2 * m;
    G.order = a.order * b.order;
    G.label = a.label + " x " + b.label;
    for (const Matrix& g : a.gens) G.gens.push_back(embed_block(F, G.dim, g, 0));
    for (const Matrix& g : b.gens) G.gens.push_back(embed_block(F, G.dim, g, 2 * k));
    for (const Matrix& g : G.gens)
        if (!in_sp(g)) throw EngineError("generator-not-symplectic");
    return G;
}

Matrix block_swap(const Field& F, unsigned h) {
    std::vector<unsigned> img(2 * h);
    for (unsigned i = 0; i < h; ++i) {
        img[i] = h + i;
        img[h + i] = i;
    }
    return permutation_matrix(F, img);
}

MatrixGroup wreath2(const MatrixGroup& A) {
    const Field& F = A.field();
    MatrixGroup G;
    G.F = &F;
    G.dim = 2 * A.dim;
    G.order = A.order * A.order * 2;
    G.label = A.label + " wr 2";
    for (const Matrix& g : A.gens) G.gens.push_back(embed_block(F, G.dim, g, 0));
    for (const Matrix& g : A.gens) G.gens.push_back(embed_block(F, G.dim, g, A.dim));
    G.gens.push_back(block_swap(F, A.dim));
    return G;
}

MatrixGroup sp_wreath2(unsigned k, const Field& F) {
    MatrixGroup G = wreath2(sp_group(k, F));
    for (const Matrix& g : G.gens)
        if (!in_sp(g)) throw EngineError("generator-not-symplectic");
    return G;
}

// ---- blow-up ------------------------------------------------------------

Blowup::Blowup(const Field& small, const Field& big)
    : small_(&small), big_(&big) {
    if (small.p() != big.p() || big.f() % small.f() != 0 || big.f() == small.f())
        throw EngineError("not-an-extension");
    b_ = big.f() / small.f();

    // embedding: send the small field's polynomial root to the smallest root
    // of the same modulus inside the big field
    Elt root = 0;
    bool found = false;
    for (unsigned y = 0; y < big.q() && !found; ++y) {
        Elt acc = 0, pw = 1;
        for (unsigned i = 0; i < small.modulus().size(); ++i) {
            Elt c = static_cast<Elt>(small.modulus()[i]);  // prime-field digit
            acc = big.add(acc, big.mul(c, pw));
            pw = big.mul(pw, static_cast<Elt>(y));
        }
        if (acc == 0) {
            root = static_cast<Elt>(y);
            found = true;
        }
    }
    if (!found) throw EngineError("no-subfield-root");

    phi_.assign(small.q(), 0);
    unphi_.assign(big.q(), 0xFFFF);
    for (unsigned a = 0; a < small.q(); ++a) {
        auto digits = small.coeffs(static_cast<Elt>(a));
        Elt acc = 0, pw = 1;
        for (unsigned i = 0; i < digits.size(); ++i) {
            acc = big.add(acc, big.mul(static_cast<Elt>(digits[i]), pw));
            pw = big.mul(pw, root);
        }
        phi_[a] = acc;
        if (unphi_[acc] != 0xFFFF) throw EngineError("embedding-not-injective");
        unphi_[acc] = static_cast<Elt>(a);
    }

    // coordinates with respect to 1, g, ..., g^{b-1}
    Elt g = big.generator();
    coords_.assign(big.q(), {});
    std::vector<Elt> tuple(b_, 0);
    std::vector<Elt> gp(b_);
    gp[0] = 1;
    for (unsigned j = 1; j < b_; ++j) gp[j] = big.mul(gp[j - 1], g);
    std::function<void(unsigned, Elt)> rec = [&](unsigned k, Elt acc) {
        if (k == b_) {
            if (!coords_[acc].empty()) throw EngineError("basis-not-free");
            coords_[acc] = tuple;
            return;
        }
        for (unsigned a = 0; a < small.q(); ++a) {
            tuple[k] = static_cast<Elt>(a);
            rec(k + 1, big.add(acc, big.mul(phi_[a], gp[k])));
        }
    };
    rec(0, 0);
    for (unsigned y = 0; y < big.q(); ++y)
        if (coords_[y].empty() && y != 0) throw EngineError("basis-not-spanning");
    if (coords_[0].empty()) coords_[0].assign(b_, 0);
}

Elt Blowup::embed(Elt a) const { return phi_.at(a); }

Elt Blowup::project(Elt y) const {
    Elt a = unphi_.at(y);
    if (a == 0xFFFF) throw EngineError("not-in-subfield");
    return a;
}

Matrix Blowup::blow(const Matrix& M) const {
    unsigned n = M.rows();
    Matrix out(*small_, n * b_, n * b_);
    Elt g = big_->generator();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < b_; ++j) {
            Elt gj = big_->pow(g, j);
            for (unsigned k = 0; k < n; ++k) {
                Elt y = big_->mul(gj, M.at(i, k));
                const std::vector<Elt>& c = coords_[y];
                for (unsigned l = 0; l < b_; ++l)
                    out.at(i * b_ + j, k * b_ + l) = c[l];
            }
        }
    return out;
}

Matrix Blowup::frobenius_matrix(unsigned n) const {
    Matrix out(*small_, n * b_, n * b_);
    Elt g = big_->generator();
    for (unsigned j = 0; j < b_; ++j) {
        Elt y = big_->pow(g, static_cast<long long>(j) * small_->q());
        const std::vector<Elt>& c = coords_[y];
        for (unsigned i = 0; i < n; ++i)
            for (unsigned l = 0; l < b_; ++l) out.at(i * b_ + j, i * b_ + l) = c[l];
    }
    return out;
}

BilinearForm Blowup::blown_trace_symplectic(unsigned l) const {
    BilinearForm B = standard_symplectic(*big_, l);
    unsigned n = 2 * l;
    Matrix gram(*small_, n * b_, n * b_);
    Elt g = big_->generator();
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < b_; ++j)
            for (unsigned k = 0; k < n; ++k)
                for (unsigned l2 = 0; l2 < b_; ++l2) {
                    Elt y = big_->mul(big_->pow(g, j + l2), B.gram.at(i, k));
                    gram.at(i * b_ + j, k * b_ + l2) =
                        project(big_->trace_to_subfield(y, small_->q()));
                }
    BilinearForm out{gram};
    if (!out.is_alternating() || !out.is_nondegenerate())
        throw EngineError("blown-form-degenerate");
    return out;
}

QuadraticForm Blowup::blow_quadratic(const QuadraticForm& Q) const {
    unsigned n = Q.dim();
    BilinearForm Bp = Q.polarize();
    Matrix coeffs(*small_, n * b_, n * b_);
    Elt g = big_->generator();
    auto tr = [&](Elt y) {
        return project(big_->trace_to_subfield(y, small_->q()));
    };
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < b_; ++j) {
            // Q((sum of scaled basis vectors)) expands as squared diagonal
            // terms plus polarization cross terms; squaring is additive in
            // characteristic two, so same-i cross terms vanish
            coeffs.at(i * b_ + j, i * b_ + j) =
                tr(big_->mul(Q.coeffs.at(i, i), big_->pow(g, 2 * j)));
            for (unsigned k = i + 1; k < n; ++k)
                for (unsigned l2 = 0; l2 < b_; ++l2)
                    coeffs.at(i * b_ + j, k * b_ + l2) =
                        tr(big_->mul(Bp.gram.at(i, k), big_->pow(g, j + l2)));
        }
    return QuadraticForm{coeffs};
}

ExtensionFieldSubgroup sp_field_ext(unsigned l, const Field& small,
                                    const Field& big) {
    Blowup bl(small, big);
    MatrixGroup top = sp_group(l, big);
    BilinearForm Bf = bl.blown_trace_symplectic(l);
    Matrix C = symplectic_standard_basis(Bf);

    ExtensionFieldSubgroup out;
    out.linear.F = &small;
    out.linear.dim = 2 * l * bl.b();
    out.linear.order = top.order;
    out.linear.label = top.label + " in Sp" + std::to_string(out.linear.dim) +
                       "(" + q_str(small) + ")";
    for (const Matrix& g : top.gens)
        out.linear.gens.push_back(conjugate_into(bl.blow(g), C));

    out.full = out.linear;
    out.full.order = top.order * bl.b();
    out.full.label += " . " + std::to_string(bl.b());
    out.full.gens.push_back(conjugate_into(bl.frobenius_matrix(2 * l), C));
    for (const Matrix& g : out.full.gens)
        if (!in_sp(g)) throw EngineError("generator-not-symplectic");
    return out;
}

SymplecticReduction::SymplecticReduction(unsigned l_, const Field& small,
                                         const Field& big)
    : bl(small, big), l(l_) {
    basis = symplectic_standard_basis(bl.blown_trace_symplectic(l));
}

Matrix SymplecticReduction::embed(const Matrix& M) const {
    Matrix out = conjugate_into(bl.blow(M), basis);
    if (!in_sp(out)) throw EngineError("embedded-element-not-symplectic");
    return out;
}

Matrix SymplecticReduction::frobenius() const {
    Matrix out = conjugate_into(bl.frobenius_matrix(2 * l), basis);
    if (!in_sp(out)) throw EngineError("frobenius-not-symplectic");
    return out;
}

QuadraticForm SymplecticReduction::reduce(const QuadraticForm& Qbig) const {
    return transport(bl.blow_quadratic(Qbig), basis);
}

OrthogonalReduction::OrthogonalReduction(unsigned l_, const Field& small,
                                         const Field& big, FormType big_type)
    : bl(small, big), l(l_) {
    QuadraticForm Qb = standard_quadratic(big, l, big_type);
    QuadraticForm Qs = bl.blow_quadratic(Qb);
    FormClassification cls = classify_quadratic(Qs);
    type = cls.type;
    quad = standard_quadratic(small, l * bl.b(), type);
    basis = cls.standardizing_basis;
}

Matrix OrthogonalReduction::embed(const Matrix& M) const {
    Matrix out = conjugate_into(bl.blow(M), basis);
    if (!in_go(out, quad)) throw EngineError("embedded-element-not-orthogonal");
    return out;
}

Matrix OrthogonalReduction::frobenius() const {
    Matrix out = conjugate_into(bl.frobenius_matrix(2 * l), basis);
    if (!in_go(out, quad)) throw EngineError("frobenius-not-orthogonal");
    return out;
}

NormFormSubgroup norm_minus_group(const Field& small, const Field& big) {
    Blowup bl(small, big);
    if (bl.b() != 2) throw EngineError("quadratic-extension-required");
    unsigned q = small.q();
    Elt g = big.generator();

    // SL2(q^2) acts on the twisted tensor square V2 (x) V2^(sigma) by
    // m |-> m (x) m^sigma.  The fixed space of the semilinear flip
    // c_ij |-> sigma(c_ji) is a 4-dimensional small-field space with basis
    //   b0 = e0(x)e0,  b1 = e1(x)e1,
    //   b2 = e0(x)e1 + e1(x)e0,  b3 = g e0(x)e1 + g^q e1(x)e0,
    // and the invariant tensor quadratic form restricts to
    //   x0 x1 + Norm(x2 + x3 g)  =  x0 x1 + x2^2 + Tr(g) x2 x3 + N(g) x3^2,
    // a hyperbolic plane plus the anisotropic field norm: the minus form.
    auto frob = [&](Elt x) { return big.frobenius(x, q); };

    // coordinates of a flip-fixed tensor (given by its big-field matrix c)
    auto extract = [&](const Matrix& c) {
        if (c.at(1, 0) != frob(c.at(0, 1))) throw EngineError("tensor-not-fixed");
        Vec x(4);
        x[0] = bl.project(c.at(0, 0));
        x[1] = bl.project(c.at(1, 1));
        const std::vector<Elt>& co = bl.coords(c.at(0, 1));
        x[2] = co[0];
        x[3] = co[1];
        return x;
    };
    auto basis_tensor = [&](unsigned t) {
        Matrix c(big, 2, 2);
        if (t == 0) c.at(0, 0) = 1;
        if (t == 1) c.at(1, 1) = 1;
        if (t == 2) { c.at(0, 1) = 1; c.at(1, 0) = 1; }
        if (t == 3) { c.at(0, 1) = g; c.at(1, 0) = frob(g); }
        return c;
    };
    // c' = (m (x) m^sigma) applied to c: c'_kl = sum c_ij m_ik sigma(m)_jl
    auto act = [&](const Matrix& c, const Matrix& m) {
        Matrix out(big, 2, 2);
        for (unsigned k = 0; k < 2; ++k)
            for (unsigned l = 0; l < 2; ++l) {
                Elt s = 0;
                for (unsigned i = 0; i < 2; ++i)
                    for (unsigned j = 0; j < 2; ++j)
                        s = big.add(s, big.mul(big.mul(c.at(i, j), m.at(i, k)),
                                               frob(m.at(j, l))));
                out.at(k, l) = s;
            }
        return out;
    };

    Matrix coeffs(small, 4, 4);
    coeffs.at(0, 1) = 1;
    coeffs.at(2, 2) = 1;
    coeffs.at(2, 3) = bl.project(big.add(g, frob(g)));       // Tr(g)
    coeffs.at(3, 3) = bl.project(big.mul(g, frob(g)));       // N(g)
    QuadraticForm Q{coeffs};
    FormClassification cls = classify_quadratic(Q);
    if (cls.type != FormType::minus || cls.witt_index != 1)
        throw EngineError("norm-form-not-minus");
    QuadraticForm std_minus = standard_quadratic(small, 2, FormType::minus);

    MatrixGroup top = sp_group(1, big);
    NormFormSubgroup out;
    out.omega.F = &small;
    out.omega.dim = 4;
    out.omega.order = top.order;  // the twisted tensor action is faithful
    if (out.omega.order != group_order("Omminus", 2, q))
        throw EngineError("norm-order-mismatch");
    out.omega.label = "Omega4-(" + q_str(small) + ") [SL2(" + q_str(big) + ")]";
    out.omega.quad = std_minus;
    for (const Matrix& m : top.gens) {
        Matrix rep(small, 4, 4);
        for (unsigned t = 0; t < 4; ++t) {
            Vec row = extract(act(basis_tensor(t), m));
            for (unsigned j = 0; j < 4; ++j) rep.at(t, j) = row[j];
        }
        out.omega.gens.push_back(conjugate_into(rep, cls.standardizing_basis));
    }
    for (const Matrix& m : out.omega.gens)
        if (!in_omega(m, std_minus)) throw EngineError("generator-outside-omega");

    out.full = out.omega;
    out.full.order = top.order * 2;
    out.full.label = "GO4-(" + q_str(small) + ") [SL2(" + q_str(big) + ").2]";
    // the tensor swap c_ij -> c_ji induces the field automorphism on
    // SL2(q^2) and has Dickson invariant 1
    Matrix tau = Matrix::identity(small, 4);
    tau.at(3, 2) = bl.project(big.add(g, frob(g)));
    Matrix sigma = conjugate_into(tau, cls.standardizing_basis);
    if (!in_go(sigma, std_minus) || dickson_invariant(sigma, std_minus) != 1)
        throw EngineError("sigma-not-reflection-type");
    out.full.gens.push_back(sigma);
    return out;
}

MatrixGroup norm_pair_in_omega_plus(const Field& small, const Field& big) {
    NormFormSubgroup N = norm_minus_group(small, big);
    const Field& F = small;
    unsigned n = 8;
    // two orthogonal copies of the minus form
    Matrix coeffs(F, n, n);
    const Matrix& m4 = N.omega.quad->coeffs;
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; j < 4; ++j) {
            coeffs.at(i, j) = m4.at(i, j);
            coeffs.at(4 + i, 4 + j) = m4.at(i, j);
        }
    QuadraticForm Q{coeffs};
    FormClassification cls = classify_quadratic(Q);
    if (cls.type != FormType::plus) throw EngineError("pair-form-not-plus");
    QuadraticForm std_plus = standard_quadratic(F, 4, FormType::plus);

    Matrix sigma = N.full.gens.back();
    MatrixGroup G;
    G.F = &F;
    G.dim = n;
    G.order = N.omega.order * N.omega.order * 4;
    G.label = "(" + N.omega.label + " x same).2^2";
    G.quad = std_plus;
    std::vector<Matrix> raw;
    for (const Matrix& g : N.omega.gens) raw.push_back(embed_block(F, n, g, 0));
    for (const Matrix& g : N.omega.gens) raw.push_back(embed_block(F, n, g, 4));
    {
        Matrix both = embed_block(F, n, sigma, 0);
        Matrix s2 = embed_block(F, n, sigma, 4);
        raw.push_back(both.mul(s2));  // simultaneous sigma: Dickson 1 + 1 = 0
    }
    raw.push_back(block_swap(F, 4));
    for (const Matrix& g : raw) {
        Matrix h = conjugate_into(g, cls.standardizing_basis);
        if (!in_omega(h, std_plus)) throw EngineError("generator-outside-omega");
        G.gens.push_back(std::move(h));
    }
    return G;
}

namespace {

Matrix zorn_norm_coeffs(const Field& F) {
    Matrix coeffs(F, 8, 8);
    coeffs.at(0, 7) = 1;
    for (unsigned i = 0; i < 3; ++i) coeffs.at(1 + i, 4 + i) = 1;
    return coeffs;
}

}  // namespace

Octonions::Octonions(const Field& Fd)
    : F(&Fd), norm{zorn_norm_coeffs(Fd)}, unit(8, 0) {
    if (Fd.p() != 2) throw EngineError("octonions-require-characteristic-2");
    unit[0] = 1;
    unit[7] = 1;
}

Vec Octonions::mul(const Vec& x, const Vec& y) const {
    const Field& f = *F;
    auto dot = [&](const Vec& u, unsigned uo, const Vec& w, unsigned wo) {
        Elt s = 0;
        for (unsigned i = 0; i < 3; ++i)
            s = f.add(s, f.mul(u[uo + i], w[wo + i]));
        return s;
    };
    Vec z(8, 0);
    z[0] = f.add(f.mul(x[0], y[0]), dot(x, 1, y, 4));
    z[7] = f.add(f.mul(x[7], y[7]), dot(x, 4, y, 1));
    for (unsigned i = 0; i < 3; ++i) {
        unsigned j = (i + 1) % 3, k = (i + 2) % 3;
        z[1 + i] = f.add(
            f.add(f.mul(x[0], y[1 + i]), f.mul(y[7], x[1 + i])),
            f.add(f.mul(x[4 + j], y[4 + k]), f.mul(x[4 + k], y[4 + j])));
        z[4 + i] = f.add(
            f.add(f.mul(y[0], x[4 + i]), f.mul(x[7], y[4 + i])),
            f.add(f.mul(x[1 + j], y[1 + k]), f.mul(x[1 + k], y[1 + j])));
    }
    return z;
}

Matrix Octonions::rmul(const Vec& c) const {
    Matrix M(*F, 8, 8);
    for (unsigned i = 0; i < 8; ++i) {
        Vec e(8, 0);
        e[i] = 1;
        Vec r = mul(e, c);
        for (unsigned j = 0; j < 8; ++j) M.at(i, j) = r[j];
    }
    return M;
}

Matrix Octonions::lmul(const Vec& c) const {
    Matrix M(*F, 8, 8);
    for (unsigned i = 0; i < 8; ++i) {
        Vec e(8, 0);
        e[i] = 1;
        Vec r = mul(c, e);
        for (unsigned j = 0; j < 8; ++j) M.at(i, j) = r[j];
    }
    return M;
}

Matrix Octonions::triality_partner(const Matrix& g) const {
    const Field& f = *F;
    unsigned q = f.q();
    // basis products e_i e_j and their g-images, fixed once
    std::vector<Vec> basis(8, Vec(8, 0));
    for (unsigned i = 0; i < 8; ++i) basis[i][i] = 1;
    std::vector<std::vector<Vec>> prod_img(8, std::vector<Vec>(8));
    for (unsigned i = 0; i < 8; ++i)
        for (unsigned j = 0; j < 8; ++j)
            prod_img[i][j] = vec_mat(f, mul(basis[i], basis[j]), g);

    Vec c(8, 0);
    for (;;) {
        // advance the odometer over all octonions c
        std::size_t pos = 0;
        while (pos < 8 && static_cast<unsigned>(++c[pos]) == q) c[pos++] = 0;
        if (pos == 8) break;
        if (norm.eval(c) == 0) continue;
        // if a partner pair exists with g3(1) = c, it must be
        // g2 = g rmul(c)^{-1} and g3 = g lmul(g2(1))^{-1}
        Matrix g2 = g.mul(rmul(c).inverse());
        Vec d = vec_mat(f, unit, g2);
        if (norm.eval(d) == 0) continue;
        Matrix g3 = g.mul(lmul(d).inverse());
        std::vector<Vec> rows2(8), rows3(8);
        for (unsigned i = 0; i < 8; ++i) {
            rows2[i] = vec_mat(f, basis[i], g2);
            rows3[i] = vec_mat(f, basis[i], g3);
        }
        bool ok = true;
        for (unsigned i = 0; i < 8 && ok; ++i)
            for (unsigned j = 0; j < 8 && ok; ++j)
                if (mul(rows2[i], rows3[j]) != prod_img[i][j]) ok = false;
        // partner pairs are only unique up to (s g2, s^{-1} g3); insist on
        // the representative that preserves the norm on the nose
        if (ok && in_go(g2, norm)) return g2;
    }
    throw EngineError("no-triality-partner");
}

TensorSubgroup tensor_subgroup(unsigned m, const Field& F) {
    MatrixGroup a = sp_group(1, F);
    MatrixGroup b = sp_group(m, F);
    unsigned n1 = 2, n2 = 2 * m, n = n1 * n2;

    auto kron = [&](const Matrix& A, const Matrix& B) {
        Matrix out(F, n, n);
        for (unsigned i = 0; i < n1; ++i)
            for (unsigned j = 0; j < n2; ++j)
                for (unsigned k = 0; k < n1; ++k)
                    for (unsigned l = 0; l < n2; ++l)
                        out.at(i * n2 + j, k * n2 + l) =
                            F.mul(A.at(i, k), B.at(j, l));
        return out;
    };

    // the quadratic form vanishing on pure tensors whose polarization is the
    // product of the two symplectic forms
    BilinearForm B1 = standard_symplectic(F, 1);
    BilinearForm B2 = standard_symplectic(F, m);
    Matrix coeffs(F, n, n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r + 1; c < n; ++c)
            coeffs.at(r, c) = F.mul(B1.gram.at(r / n2, c / n2),
                                    B2.gram.at(r % n2, c % n2));
    QuadraticForm Q{coeffs};
    FormClassification cls = classify_quadratic(Q);
    if (cls.type != FormType::plus) throw EngineError("tensor-form-not-plus");
    QuadraticForm std_plus = standard_quadratic(F, n / 2, FormType::plus);
    Matrix Cinv = cls.standardizing_basis.inverse();

    Matrix I1 = Matrix::identity(F, n1), I2 = Matrix::identity(F, n2);
    TensorSubgroup T;
    T.basis = cls.standardizing_basis;
    auto part = [&](const std::string& label, const mpz_class& order) {
        MatrixGroup g;
        g.F = &F;
        g.dim = n;
        g.order = order;
        g.label = label;
        g.quad = std_plus;
        return g;
    };
    T.group = part(a.label + " x " + b.label + " tensor", a.order * b.order);
    T.left = part(a.label + " x 1 tensor", a.order);
    T.right = part("1 x " + b.label + " tensor", b.order);
    auto push = [&](MatrixGroup& dst, const Matrix& raw) {
        Matrix h = conjugate_into(raw, cls.standardizing_basis);
        if (!in_omega(h, std_plus)) throw EngineError("generator-outside-omega");
        dst.gens.push_back(std::move(h));
    };
    for (const Matrix& g : a.gens) {
        push(T.left, kron(g, I2));
        T.group.gens.push_back(T.left.gens.back());
    }
    for (const Matrix& g : b.gens) {
        push(T.right, kron(I1, g));
        T.group.gens.push_back(T.right.gens.back());
    }

    // 1 (x) Sp_{2m-2}, fixing the first hyperbolic pair of the right factor
    if (m >= 2) {
        MatrixGroup c = sp_group(m - 1, F);
        T.predicted = part("1 x " + c.label + " tensor", c.order);
        for (const Matrix& g : c.gens)
            push(T.predicted, kron(I1, embed_block(F, n2, g, 2)));
    } else {
        T.predicted = part("trivial", 1);
    }

    // w_1 (x) u_1 + w_2 (x) v_1 : tensor indices (0,0) and (1,1)
    Vec special_old(n, 0);
    special_old[0] = 1;
    special_old[n2 + 1] = 1;
    T.special = vec_mat(F, special_old, Cinv);
    if (std_plus.eval(T.special) != 1)
        throw EngineError("special-vector-singular");
    for (const Matrix& g : T.predicted.gens)
        if (vec_mat(F, T.special, g) != T.special)
            throw EngineError("predicted-does-not-fix-special");

    if (m == 1) {
        // swap of the tensor factors: (i,j) -> (j,i)
        Matrix sw = conjugate_into(permutation_matrix(F, {0, 2, 1, 3}),
                                   cls.standardizing_basis);
        if (!in_go(sw, std_plus) || dickson_invariant(sw, std_plus) != 1)
            throw EngineError("tensor-swap-not-reflection-type");
        T.factor_swap = sw;
    }
    return T;
}

// ---- G2 -----------------------------------------------------------------

G2Subgroup g2_group(const Field& F) {
    if (F.p() != 2) throw EngineError("characteristic-two-required");
    unsigned n = 6;
    Elt g = F.generator();

    Matrix gram(F, n, n);
    for (unsigned i = 0; i < n; ++i) gram.at(i, n - 1 - i) = 1;
    BilinearForm B{gram};

    Matrix r = permutation_matrix(F, {0, 2, 1, 4, 3, 5});
    Matrix s = permutation_matrix(F, {1, 0, 3, 2, 5, 4});
    auto torus = [&](Elt lam, Elt mu) {
        Matrix t(F, n, n);
        t.at(0, 0) = lam;
        t.at(1, 1) = mu;
        t.at(2, 2) = F.mul(lam, F.inv(mu));
        t.at(3, 3) = F.mul(F.inv(lam), mu);
        t.at(4, 4) = F.inv(mu);
        t.at(5, 5) = F.inv(lam);
        return t;
    };
    auto shear_a = [&](Elt al) {
        Matrix t = Matrix::identity(F, n);
        t.at(4, 0) = al;  // x7 -> x7 + a x1
        t.at(5, 1) = al;  // x8 -> x8 + a x2
        return t;
    };
    auto shear_f = [&](Elt al) {
        Matrix t = Matrix::identity(F, n);
        t.at(1, 0) = al;             // x2 -> x2 + a x1
        t.at(3, 2) = F.mul(al, al);  // x6 -> x6 + a^2 x3
        t.at(5, 4) = al;             // x8 -> x8 + a x7
        return t;
    };

    std::vector<Matrix> gens = {r, s};
    if (g != 1) {
        gens.push_back(torus(g, 1));
        gens.push_back(torus(1, g));
    }
    for (Elt al : additive_basis(F)) {
        gens.push_back(shear_a(al));
        gens.push_back(shear_f(al));
    }
    for (const Matrix& x : gens)
        if (!is_symplectic_isometry(x, B)) throw EngineError("generator-not-symplectic");

    mpz_class order = group_order("G2", 0, F.q());
    (void)schreier_sims(gens, matrix_ops(F, n), vector_action(F, n), order);

    // the Omega4+ subgroup fixing the decomposition <x3,x6> + <x1,x2,x7,x8>
    Matrix rs3 = r.mul(s);
    rs3 = rs3.mul(rs3).mul(rs3);
    std::vector<Matrix> inner_gens = {s, rs3};
    if (g != 1) {
        inner_gens.push_back(torus(g, 1));
        inner_gens.push_back(torus(1, g));
    }
    for (Elt al : additive_basis(F)) {
        inner_gens.push_back(shear_a(al));
        inner_gens.push_back(shear_f(al));
    }
    mpz_class inner_order = group_order("Omplus", 2, F.q());
    (void)schreier_sims(inner_gens, matrix_ops(F, n), vector_action(F, n),
                        inner_order);

    Matrix C = symplectic_standard_basis(B);
    Matrix Ci = C.inverse();

    G2Subgroup out;
    out.group.F = &F;
    out.group.dim = n;
    out.group.order = order;
    out.group.label = "G2(" + q_str(F) + ")";
    for (const Matrix& x : gens) out.group.gens.push_back(conjugate_into(x, C));
    out.inner.F = &F;
    out.inner.dim = n;
    out.inner.order = inner_order;
    out.inner.label = "Omega4+(" + q_str(F) + ") split stabilizer";
    for (const Matrix& x : inner_gens)
        out.inner.gens.push_back(conjugate_into(x, C));
    for (const Matrix& x : out.group.gens)
        if (!in_sp(x)) throw EngineError("generator-not-symplectic");

    // stabilized subspaces, moved into the standard coordinates.
    // a vector with old coordinates v has new coordinates v * C^{-1}
    Matrix split2(F, 2, n), split4(F, 4, n);
    unsigned two_idx[2] = {2, 3}, four_idx[4] = {0, 1, 4, 5};
    for (unsigned t = 0; t < 2; ++t)
        for (unsigned j = 0; j < n; ++j) split2.at(t, j) = Ci.at(two_idx[t], j);
    for (unsigned t = 0; t < 4; ++t)
        for (unsigned j = 0; j < n; ++j) split4.at(t, j) = Ci.at(four_idx[t], j);
    out.split2 = split2.rref();
    out.split4 = split4.rref();
    return out;
}

// ---- Suzuki -------------------------------------------------------------

MatrixGroup sz_group(const Field& F) {
    if (F.p() != 2 || F.f() % 2 == 0 || F.f() < 3)
        throw EngineError("odd-power-of-two-required");
    unsigned n = 4;
    long long t = 1ll << ((F.f() + 1) / 2);   // twisting exponent: x -> x^t
    long long h = 1ll << ((F.f() - 1) / 2);   // torus weight
    Elt g = F.generator();

    Matrix gram(F, n, n);
    for (unsigned i = 0; i < n; ++i) gram.at(i, n - 1 - i) = 1;
    BilinearForm B{gram};

    auto unipotent = [&](Elt a, Elt b) {
        Matrix m = Matrix::identity(F, n);
        m.at(1, 0) = a;
        m.at(2, 0) = F.add(F.pow(a, 1 + t), b);
        m.at(2, 1) = F.pow(a, t);
        m.at(3, 0) = F.add(F.add(F.pow(a, 2 + t), F.mul(a, b)), F.pow(b, t));
        m.at(3, 1) = b;
        m.at(3, 2) = a;
        return m;
    };
    auto torus = [&](Elt k) {
        Matrix m(F, n, n);
        m.at(0, 0) = F.pow(k, 1 + h);
        m.at(1, 1) = F.pow(k, h);
        m.at(2, 2) = F.pow(k, -h);
        m.at(3, 3) = F.pow(k, -1 - h);
        return m;
    };
    Matrix w = permutation_matrix(F, {3, 2, 1, 0});

    std::vector<Matrix> gens;
    for (Elt a : additive_basis(F)) {
        gens.push_back(unipotent(a, 0));
        gens.push_back(unipotent(0, a));
    }
    gens.push_back(torus(g));
    gens.push_back(w);
    for (const Matrix& x : gens)
        if (!is_symplectic_isometry(x, B)) throw EngineError("generator-not-symplectic");

    mpz_class order = group_order("Sz", 0, F.q());
    (void)schreier_sims(gens, matrix_ops(F, n), vector_action(F, n), order);

    Matrix C = symplectic_standard_basis(B);
    MatrixGroup out;
    out.F = &F;
    out.dim = n;
    out.order = order;
    out.label = "Sz(" + q_str(F) + ")";
    for (const Matrix& x : gens) out.gens.push_back(conjugate_into(x, C));
    for (const Matrix& x : out.gens)
        if (!in_sp(x)) throw EngineError("generator-not-symplectic");
    return out;
}

// ---- permutation groups -------------------------------------------------

PermGroup alt_group(unsigned n) {
    if (n < 3) throw EngineError("degree-too-small");
    PermGroup G;
    G.degree = n;
    G.order = group_order("Alt", n, 0);
    G.label = "A" + std::to_string(n);
    G.gens.push_back(Perm::from_cycles("(1,2,3)", n));
    std::string cyc = "(";
    for (unsigned i = (n % 2 == 1) ? 1 : 2; i <= n; ++i) {
        if (cyc.size() > 1) cyc += ",";
        cyc += std::to_string(i);
    }
    cyc += ")";
    if (n > 3) G.gens.push_back(Perm::from_cycles(cyc, n));
    return G;
}

PermGroup sym_group(unsigned n) {
    if (n < 2) throw EngineError("degree-too-small");
    PermGroup G;
    G.degree = n;
    G.order = group_order("Sym", n, 0);
    G.label = "S" + std::to_string(n);
    G.gens.push_back(Perm::from_cycles("(1,2)", n));
    if (n > 2) {
        std::string cyc = "(1";
        for (unsigned i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
        cyc += ")";
        G.gens.push_back(Perm::from_cycles(cyc, n));
    }
    return G;
}

namespace {
PermGroup from_data(const std::string& file, const std::string& label,
                    const mpz_class& expect, unsigned pad_degree = 0) {
    PermDataFile d = load_perm_data(data_file(file));
    if (d.order != expect) throw EngineError("data-file-order-mismatch");
    PermGroup G;
    G.degree = std::max(d.degree, pad_degree);
    G.order = d.order;
    G.label = label;
    for (const Perm& p : d.gens) {
        Perm q = p;
        while (q.img.size() < G.degree)
            q.img.push_back(static_cast<std::uint16_t>(q.img.size()));
        G.gens.push_back(std::move(q));
    }
    return G;
}
}  // namespace

PermGroup mathieu12() {
    return from_data("m12.txt", "M12", group_order("M12", 0, 0));
}

PermGroup mathieu24() {
    return from_data("m24.txt", "M24", group_order("M24", 0, 0));
}

PermGroup pgammal_2_8(unsigned degree) {
    return from_data("pgammal_2_8.txt", "PGammaL2(8)",
                     group_order("PGammaL28", 0, 0), degree);
}

}  // namespace gfv
