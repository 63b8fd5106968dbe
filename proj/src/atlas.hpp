#pragma once

// Constructors for the classical and exceptional matrix groups used by the
// verifier, each from explicit generators, plus the permutation groups.
//
// Every matrix group lives in standard coordinates: it preserves the
// standard symplectic form on its space, and orthogonal-type groups also
// carry the standard quadratic form they preserve.  Claimed orders are
// closed-form values; group_chain() enforces them exactly when a stabilizer
// chain is built (construction throws EngineError("order-mismatch: ...") if
// the generators do not produce a group of exactly the claimed order).

#include <optional>

#include "bsgs.hpp"
#include "forms.hpp"
#include "orders.hpp"
#include "perm.hpp"

namespace gfv {

struct MatrixGroup {
    const Field* F = nullptr;
    unsigned dim = 0;
    std::vector<Matrix> gens;
    mpz_class order;  // claimed exact order
    std::string label;
    // quadratic form preserved by the group (standard pattern), if any
    std::optional<QuadraticForm> quad;

    const Field& field() const { return *F; }
};

// stabilizer chain over the natural (row-)vector action; the claimed order
// is enforced exactly
BsgsChain<Matrix> group_chain(const MatrixGroup& G,
                              std::vector<Key> base_hint = {});

// ambient membership predicates (standard forms)
bool in_sp(const Matrix& g);                              // standard symplectic
bool in_go(const Matrix& g, const QuadraticForm& Q);      // isometry of Q
bool in_omega(const Matrix& g, const QuadraticForm& Q);   // ... with Dickson 0

// Sp_{2m}(q), q even, from symplectic transvections
MatrixGroup sp_group(unsigned m, const Field& F);

// full orthogonal group of the standard quadratic form and the kernel of
// the Dickson homomorphism
struct OrthogonalPair {
    MatrixGroup full;   // O^eps_{2m}(q)
    MatrixGroup omega;  // Omega^eps_{2m}(q)
};
OrthogonalPair o_group(unsigned m, const Field& F, FormType type);

// block-diagonal Sp_{2k}(q) x Sp_{2(m-k)}(q) inside Sp_{2m}(q)
MatrixGroup sp_pair_stabilizer(unsigned m, unsigned k, const Field& F);

// the swap of the two halves of a 2h + 2h dimensional space
Matrix block_swap(const Field& F, unsigned h);

// A x A . 2 acting block-diagonally on the doubled space, with the swap
MatrixGroup wreath2(const MatrixGroup& A);

// (Sp_{2k}(q) x Sp_{2k}(q)).2 inside Sp_{4k}(q)
MatrixGroup sp_wreath2(unsigned k, const Field& F);

// ---- field extension (blow-up) machinery --------------------------------

// Writes the extension field GF(q^b) as a b-dimensional space over GF(q)
// with basis 1, g, ..., g^{b-1} (g the extension field's generator), and
// turns GF(q^b)-linear maps into GF(q)-linear ones.
class Blowup {
public:
    Blowup(const Field& small, const Field& big);

    const Field& small() const { return *small_; }
    const Field& big() const { return *big_; }
    unsigned b() const { return b_; }

    Elt embed(Elt a) const;    // field embedding GF(q) -> GF(q^b)
    Elt project(Elt y) const;  // inverse on the subfield copy (throws else)
    // y = sum_j embed(coords[j]) * g^j
    const std::vector<Elt>& coords(Elt y) const { return coords_[y]; }

    Matrix blow(const Matrix& M) const;         // n x n big -> nb x nb small
    Matrix frobenius_matrix(unsigned n) const;  // v -> v^(q) componentwise, blown
    // Tr_{big/small} of the standard symplectic form on big^{2l}
    BilinearForm blown_trace_symplectic(unsigned l) const;
    // Tr_{big/small} composed with a quadratic form on big^n, written on the
    // blown basis (its polarization is the blown trace of Q's polarization)
    QuadraticForm blow_quadratic(const QuadraticForm& Q) const;

private:
    const Field* small_;
    const Field* big_;
    unsigned b_;
    std::vector<Elt> phi_;                 // embed table, size q
    std::vector<Elt> unphi_;               // project table, size q^b (0xFFFF = none)
    std::vector<std::vector<Elt>> coords_; // size q^b, each length b
};

// Sp_{2l}(q^b) blown up into Sp_{2lb}(q) (standard coordinates); `full`
// additionally contains the Frobenius x -> x^q of GF(q^b), which is
// GF(q)-linear and extends the group by a cyclic factor of order b
struct ExtensionFieldSubgroup {
    MatrixGroup linear;  // ~ Sp_{2l}(q^b)
    MatrixGroup full;    // ~ Sp_{2l}(q^b).b
};
ExtensionFieldSubgroup sp_field_ext(unsigned l, const Field& small,
                                    const Field& big);

// Fixed coordinate choice for pushing arbitrary subgroups of Sp_{2l}(q^b)
// down to Sp_{2lb}(q): the blown trace form is standardized once and every
// embedded element is conjugated into those coordinates.
struct SymplecticReduction {
    SymplecticReduction(unsigned l, const Field& small, const Field& big);

    Blowup bl;
    unsigned l;
    Matrix basis;  // standardizing basis of the blown trace symplectic form

    Matrix embed(const Matrix& M) const;  // asserts the result is symplectic
    Matrix frobenius() const;             // blown x -> x^q, same coordinates
    // trace-composed quadratic form on the same coordinates
    QuadraticForm reduce(const QuadraticForm& Qbig) const;
};

// Same for orthogonal ambient spaces: the standard 2l-dimensional big-field
// quadratic form of the given type is trace-reduced and restandardized; all
// embedded elements preserve `quad` (and so does frobenius() whenever the
// big form has subfield coefficients, e.g. the standard plus form).
struct OrthogonalReduction {
    OrthogonalReduction(unsigned l, const Field& small, const Field& big,
                        FormType big_type);

    Blowup bl;
    unsigned l;
    FormType type;       // type of the reduced small-field form
    QuadraticForm quad;  // standard small-field form of that type
    Matrix basis;

    Matrix embed(const Matrix& M) const;  // asserts isometry of quad
    Matrix frobenius() const;             // asserts isometry of quad
};

// SL_2(q^2) acting on GF(q^2)^2 read as a 4-dimensional GF(q)-space with
// the quadratic form Q(v) = beta(v, v^sigma), which is the minus form; so
// omega ~ Omega_4^-(q) and full (adding sigma) ~ O_4^-(q).  Standard
// minus-form coordinates.
struct NormFormSubgroup {
    MatrixGroup omega;
    MatrixGroup full;
};
NormFormSubgroup norm_minus_group(const Field& small, const Field& big);

// (Omega_4^-(q) x Omega_4^-(q)).2^2 inside Omega_8^+(q): two orthogonal
// norm-form blocks, extended by the simultaneous sigma and the block swap;
// standard plus-form coordinates
MatrixGroup norm_pair_in_omega_plus(const Field& small, const Field& big);

// Split octonions over GF(q), q even, as Zorn vector matrices (a, v; w, b)
// with scalars a, b and v, w in F^3, in coordinates
// (a, v1, v2, v3, w1, w2, w3, b).  The norm N = ab + v.w is multiplicative
// and of plus type, so its isometry group is O_8^+(q).  For g in
// Omega_8^+(q) there are unique g2, g3 in Omega with g(xy) = g2(x) g3(y)
// for all x, y (no sign ambiguity in even characteristic), and g -> g2 is
// an order-3 outer automorphism of Omega_8^+(q) (triality).
struct Octonions {
    explicit Octonions(const Field& F);

    const Field* F;
    QuadraticForm norm;
    Vec unit;

    Vec mul(const Vec& x, const Vec& y) const;
    Matrix rmul(const Vec& c) const;  // x -> x c on row vectors
    Matrix lmul(const Vec& c) const;  // x -> c x on row vectors
    // the partner g2 above; found by exhausting c = g3(1); throws if g is
    // outside Omega (no partner exists)
    Matrix triality_partner(const Matrix& g) const;
};

// Sp_2(q) x Sp_{2m}(q) acting on the tensor product W (x) V, inside
// Omega_{4m}^+(q); standard plus-form coordinates.  The struct also exposes
// the two tensor factors, the subgroup 1 (x) Sp_{2m-2}(q) fixing the first
// hyperbolic pair u_1, v_1 of V, and the nonsingular vector
// w_1 (x) u_1 + w_2 (x) v_1 whose stabilizer meets 1 (x) Sp_{2m}(q) in
// exactly that subgroup.
struct TensorSubgroup {
    MatrixGroup group;      // Sp_2 (x) Sp_{2m}
    MatrixGroup left;       // Sp_2 (x) 1
    MatrixGroup right;      // 1 (x) Sp_{2m}
    MatrixGroup predicted;  // 1 (x) Sp_{2m-2}; trivial when m == 1
    Vec special;            // w_1 (x) u_1 + w_2 (x) v_1, Q-value 1
    // for m == 1 only: the swap of the two tensor factors (Dickson 1)
    std::optional<Matrix> factor_swap;
    // standardizing basis: group elements are basis * raw * basis^{-1}
    Matrix basis;
};
TensorSubgroup tensor_subgroup(unsigned m, const Field& F);

// G_2(q) inside Sp_6(q), q even, in standard symplectic coordinates.
// `inner` is its Omega_4^+(q) subgroup stabilizing a nondegenerate
// 2-subspace and its perpendicular 4-subspace (returned as RREF row bases).
struct G2Subgroup {
    MatrixGroup group;   // G_2(q)
    MatrixGroup inner;   // Omega_4^+(q), stabilizes split2 and split4
    Matrix split2;       // 2 x 6, rows span the stabilized 2-subspace
    Matrix split4;       // 4 x 6, rows span the perpendicular 4-subspace
};
G2Subgroup g2_group(const Field& F);

// Sz(q) inside Sp_4(q), q = 2^f with f >= 3 odd, standard coordinates
MatrixGroup sz_group(const Field& F);

// ---- permutation groups -------------------------------------------------

struct PermGroup {
    unsigned degree = 0;
    std::vector<Perm> gens;
    mpz_class order;  // claimed exact order
    std::string label;
};

BsgsChain<Perm> perm_group_chain(const PermGroup& G,
                                 std::vector<Key> base_hint = {});

PermGroup alt_group(unsigned n);
PermGroup sym_group(unsigned n);
PermGroup mathieu12();
PermGroup mathieu24();
// on 9 points naturally; padded with fixed points up to `degree`
PermGroup pgammal_2_8(unsigned degree = 9);

}  // namespace gfv
