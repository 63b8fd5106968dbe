#include "linalg.hpp"

#include <sstream>

namespace gfv {

Matrix Matrix::identity(const Field& F, unsigned n) {
    Matrix m(F, n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols_ != o.rows_) throw LinalgError("shape-mismatch");
    const Field& F = *field_;
    Matrix r(F, rows_, o.cols_);
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned k = 0; k < cols_; ++k) {
            Elt a = at(i, k);
            if (a == 0) continue;
            for (unsigned j = 0; j < o.cols_; ++j) {
                Elt b = o.at(k, j);
                if (b == 0) continue;
                r.at(i, j) = F.add(r.at(i, j), F.mul(a, b));
            }
        }
    }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("shape-mismatch");
    Matrix r(*field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_->add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*field_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Gaussian elimination into [reduced] echelon form of an augmented copy.
// Returns pivot column list.  Operates in place.
std::vector<unsigned> eliminate(Matrix& m, bool reduced) {
    const Field& F = m.field();
    std::vector<unsigned> pivots;
    unsigned row = 0;
    for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
        unsigned pr = row;
        while (pr < m.rows() && m.at(pr, col) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        Elt inv = F.inv(m.at(row, col));
        for (unsigned j = 0; j < m.cols(); ++j) m.at(row, j) = F.mul(inv, m.at(row, j));
        unsigned start = reduced ? 0 : row + 1;
        for (unsigned i = start; i < m.rows(); ++i) {
            if (i == row) continue;
            Elt c = m.at(i, col);
            if (c == 0) continue;
            for (unsigned j = 0; j < m.cols(); ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::rref() const {
    Matrix m = *this;
    eliminate(m, true);
    return m;
}

unsigned Matrix::rank() const {
    Matrix m = *this;
    return static_cast<unsigned>(eliminate(m, false).size());
}

Elt Matrix::det() const {
    if (rows_ != cols_) throw LinalgError("shape-mismatch");
    const Field& F = *field_;
    Matrix m = *this;
    Elt d = 1;
    unsigned n = rows_;
    for (unsigned col = 0; col < n; ++col) {
        unsigned pr = col;
        while (pr < n && m.at(pr, col) == 0) ++pr;
        if (pr == n) return 0;
        if (pr != col) {
            for (unsigned j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col, j));
            d = F.neg(d);
        }
        d = F.mul(d, m.at(col, col));
        Elt inv = F.inv(m.at(col, col));
        for (unsigned i = col + 1; i < n; ++i) {
            Elt c = F.mul(inv, m.at(i, col));
            if (c == 0) continue;
            for (unsigned j = col; j < n; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(col, j)));
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw LinalgError("shape-mismatch");
    const Field& F = *field_;
    unsigned n = rows_;
    Matrix aug(F, n, 2 * n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = eliminate(aug, true);
    if (pivots.size() != n || pivots.back() != n - 1) throw LinalgError("singular-matrix");
    for (unsigned i = 0; i < n; ++i)
        if (pivots[i] != i) throw LinalgError("singular-matrix");
    Matrix r(F, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

std::vector<Vec> Matrix::kernel_basis() const {
    // right kernel of the row-vector action x -> x*M is the left kernel of M;
    // here we return the kernel of x -> x*M, i.e. rows x with x*M = 0
    const Field& F = *field_;
    Matrix t = transpose();  // kernel of t acting on column vectors
    auto m = t;
    auto pivots = eliminate(m, true);
    std::vector<char> is_pivot(m.cols(), 0);
    for (unsigned c : pivots) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (unsigned freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vec v(m.cols(), 0);
        v[freec] = 1;
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            // pivot row pi has leading 1 at pivots[pi]
            v[pivots[pi]] = F.neg(m.at(static_cast<unsigned>(pi), freec));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (unsigned i = 0; i < rows_; ++i) {
        for (unsigned j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << static_cast<unsigned>(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

Vec vec_add(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& F, Elt c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

Vec vec_mat(const Field& F, const Vec& x, const Matrix& M) {
    if (x.size() != M.rows()) throw LinalgError("shape-mismatch");
    Vec r(M.cols(), 0);
    for (unsigned i = 0; i < M.rows(); ++i) {
        Elt c = x[i];
        if (c == 0) continue;
        for (unsigned j = 0; j < M.cols(); ++j) {
            Elt b = M.at(i, j);
            if (b) r[j] = F.add(r[j], F.mul(c, b));
        }
    }
    return r;
}

Elt dot(const Field& F, const Vec& a, const Vec& b) {
    Elt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
    return s;
}

}  // namespace gfv
