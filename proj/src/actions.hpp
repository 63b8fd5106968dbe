#pragma once

// Canonical point encodings and ready-made GroupOps / Action instances for
// matrix groups (acting on vectors, subspaces and quadratic forms) and
// permutation groups (natural points, k-subsets, 2-block partitions).
//
// Vector keys: base-q digits, coordinate 0 least significant.
// Subspace keys: concatenated rows of the reduced row echelon basis.
// Form keys: upper-triangular coefficients in row order.
// Subset keys: bitmask over points; partition keys: min(mask, ~mask).

#include "bsgs.hpp"
#include "forms.hpp"
#include "linalg.hpp"
#include "perm.hpp"

namespace gfv {

Key vec_key(const Field& F, const Vec& v);
Vec key_vec(const Field& F, unsigned dim, Key k);

Key form_key(const QuadraticForm& Q);
QuadraticForm key_form(const Field& F, unsigned dim, Key k);

// canonical key of the row space of M (full row rank expected)
Key subspace_key(const Matrix& M);

GroupOps<Matrix> matrix_ops(const Field& F, unsigned dim);
GroupOps<Perm> perm_ops(unsigned degree);

// x -> x * g on row vectors
Action<Matrix> vector_action(const Field& F, unsigned dim);
// Q -> Q(. * g^{-1}) on quadratic forms
Action<Matrix> form_action(const Field& F, unsigned dim);
// row spaces of k x dim matrices
Action<Matrix> subspace_action(const Field& F, unsigned dim, unsigned k);

// Forms whose polarization is the standard symplectic form are determined
// by their diagonal Q(e_i), so orbits of such forms under symplectic groups
// can be keyed by the diagonal alone (fits dims whose full coefficient
// vector would overflow the 128-bit key).
Key polarized_form_key(const QuadraticForm& Q);
QuadraticForm key_polarized_form(const Field& F, unsigned dim, Key k);
Action<Matrix> polarized_form_action(const Field& F, unsigned dim);

Action<Perm> natural_action();
Action<Perm> subset_action(unsigned degree);
Action<Perm> partition2_action(unsigned degree);

// ops variant whose moved_point lives in the k-subset point space (for
// stabilizer chains built over the subset action)
GroupOps<Perm> perm_ops_subsets(unsigned degree, unsigned k);

Key subset_mask(const std::vector<unsigned>& pts);  // 0-based point list

}  // namespace gfv
