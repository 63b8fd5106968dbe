#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace gfv {

using Vec = std::vector<Elt>;

// Dense row-major matrix over a fixed field.  Vectors are row vectors and
// act on the right: y = x * M.  All arithmetic is exact.
class Matrix {
public:
    Matrix() : field_(nullptr), rows_(0), cols_(0) {}
    Matrix(const Field& F, unsigned rows, unsigned cols)
        : field_(&F), rows_(rows), cols_(cols), e_(std::size_t(rows) * cols, 0) {}

    static Matrix identity(const Field& F, unsigned n);

    const Field& field() const { return *field_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    Elt at(unsigned r, unsigned c) const { return e_[std::size_t(r) * cols_ + c]; }
    Elt& at(unsigned r, unsigned c) { return e_[std::size_t(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix transpose() const;
    Matrix inverse() const;          // throws LinalgError("singular-matrix")
    unsigned rank() const;
    Elt det() const;
    std::vector<Vec> kernel_basis() const;
    bool is_identity() const;

    // reduced row echelon form (deterministic lowest-index pivoting)
    Matrix rref() const;

    std::string to_string() const;   // stable row-major text format

private:
    const Field* field_;
    unsigned rows_, cols_;
    std::vector<Elt> e_;
};

class LinalgError : public std::runtime_error {
public:
    explicit LinalgError(const std::string& what) : std::runtime_error(what) {}
};

Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, Elt c, const Vec& a);
Vec vec_mat(const Field& F, const Vec& x, const Matrix& M);  // row vector times matrix
Elt dot(const Field& F, const Vec& a, const Vec& b);

}  // namespace gfv
