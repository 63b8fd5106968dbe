#pragma once

#include <cstdint>
#include <optional>

#include "linalg.hpp"

namespace gfv {

// Nondegenerate bilinear form given by its Gram matrix: B(x,y) = x G y^T.
struct BilinearForm {
    Matrix gram;

    const Field& field() const { return gram.field(); }
    unsigned dim() const { return gram.rows(); }
    Elt eval(const Vec& x, const Vec& y) const;
    bool is_alternating() const;   // zero diagonal and symmetric (char 2)
    bool is_nondegenerate() const;
};

// Quadratic form stored as an upper-triangular coefficient matrix:
// Q(x) = sum_{i<=j} coeffs[i][j] x_i x_j.  Canonical in char 2, where the
// Gram matrix of the polarization does not determine Q.
struct QuadraticForm {
    Matrix coeffs;  // upper triangular

    const Field& field() const { return coeffs.field(); }
    unsigned dim() const { return coeffs.rows(); }
    Elt eval(const Vec& x) const;
    BilinearForm polarize() const;  // B(x,y) = Q(x+y) - Q(x) - Q(y)

    // normalize entries below the diagonal into the upper triangle
    static QuadraticForm from_matrix(const Matrix& any);
};

enum class FormType { plus, minus };

struct FormClassification {
    FormType type;
    unsigned witt_index;
    Matrix standardizing_basis;  // rows = new basis vectors in old coordinates
};

// standard symplectic Gram: m diagonal blocks [[0,1],[1,0]] (char 2)
BilinearForm standard_symplectic(const Field& F, unsigned m);

// standard quadratic forms polarizing to standard_symplectic(F, m):
// plus:  sum x_{2i-1} x_{2i}
// minus: hyperbolic part plus x^2_{2m-1} + x_{2m-1} x_{2m} + d x^2_{2m}
QuadraticForm standard_quadratic(const Field& F, unsigned m, FormType type);

bool is_symplectic_isometry(const Matrix& g, const BilinearForm& B);
bool is_orthogonal_isometry(const Matrix& g, const QuadraticForm& Q);

// rank(g + I) mod 2; requires g an isometry of Q in char 2
unsigned dickson_invariant(const Matrix& g, const QuadraticForm& Q);

// Witt decomposition by iterated hyperbolic splitting; the returned basis B
// satisfies: Q expressed on the rows of B is the standard form of the
// reported type (exact coefficient pattern).  Deterministic pivoting.
FormClassification classify_quadratic(const QuadraticForm& Q);

// number of nonzero singular vectors, by enumeration (budget q^dim <= 2^24)
unsigned long long count_singular(const QuadraticForm& Q);

// Symplectic Gram-Schmidt: rows of the result are u_1, v_1, ..., u_m, v_m
// with B(u_i, v_i) = 1 and all other pairings zero.
Matrix symplectic_standard_basis(const BilinearForm& B);

// Q transported along a change of basis: rows of basis are new basis
// vectors in old coordinates; result satisfies Q'(x) = Q(x * basis).
QuadraticForm transport(const QuadraticForm& Q, const Matrix& basis);
BilinearForm transport(const BilinearForm& B, const Matrix& basis);

// conjugate the matrix g (acting on row vectors in old coordinates) into
// new coordinates: g' = basis * g * basis^{-1}
Matrix conjugate_into(const Matrix& g, const Matrix& basis);

// a matrix g with transport(from, g) == to, i.e. from(x g) = to(x); both
// forms must classify to the same type (throws otherwise); g is symplectic
// whenever both polarizations are the standard symplectic form
Matrix form_transporter(const QuadraticForm& from, const QuadraticForm& to);

}  // namespace gfv
