#include "forms.hpp"

#include <stdexcept>

namespace gfv {

Elt BilinearForm::eval(const Vec& x, const Vec& y) const {
    const Field& F = field();
    return dot(F, vec_mat(F, x, gram), y);
}

bool BilinearForm::is_alternating() const {
    const Matrix& G = gram;
    for (unsigned i = 0; i < G.rows(); ++i) {
        if (G.at(i, i) != 0) return false;
        for (unsigned j = 0; j < i; ++j)
            if (G.at(i, j) != G.field().neg(G.at(j, i))) return false;
    }
    return true;
}

bool BilinearForm::is_nondegenerate() const { return gram.rank() == gram.rows(); }

Elt QuadraticForm::eval(const Vec& x) const {
    const Field& F = field();
    Elt s = 0;
    for (unsigned i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = i; j < dim(); ++j) {
            Elt c = coeffs.at(i, j);
            if (c == 0 || x[j] == 0) continue;
            s = F.add(s, F.mul(c, F.mul(x[i], x[j])));
        }
    }
    return s;
}

BilinearForm QuadraticForm::polarize() const {
    const Field& F = field();
    unsigned n = dim();
    Matrix G(F, n, n);
    // B(e_i, e_j) = coeffs[i][j] for i != j (upper entry), symmetrized;
    // diagonal: B(e_i, e_i) = 2 Q(e_i)
    for (unsigned i = 0; i < n; ++i) {
        G.at(i, i) = F.add(coeffs.at(i, i), coeffs.at(i, i));
        for (unsigned j = i + 1; j < n; ++j) {
            G.at(i, j) = coeffs.at(i, j);
            G.at(j, i) = coeffs.at(i, j);
        }
    }
    return BilinearForm{G};
}

QuadraticForm QuadraticForm::from_matrix(const Matrix& any) {
    const Field& F = any.field();
    unsigned n = any.rows();
    Matrix U(F, n, n);
    for (unsigned i = 0; i < n; ++i) {
        U.at(i, i) = any.at(i, i);
        for (unsigned j = i + 1; j < n; ++j) U.at(i, j) = F.add(any.at(i, j), any.at(j, i));
    }
    return QuadraticForm{U};
}

BilinearForm standard_symplectic(const Field& F, unsigned m) {
    Matrix G(F, 2 * m, 2 * m);
    for (unsigned i = 0; i < m; ++i) {
        G.at(2 * i, 2 * i + 1) = 1;
        G.at(2 * i + 1, 2 * i) = F.neg(Elt(1));
    }
    return BilinearForm{G};
}

QuadraticForm standard_quadratic(const Field& F, unsigned m, FormType type) {
    Matrix U(F, 2 * m, 2 * m);
    for (unsigned i = 0; i < m; ++i) U.at(2 * i, 2 * i + 1) = 1;
    if (type == FormType::minus) {
        Elt d = F.irreducible_quadratic_d();
        U.at(2 * m - 2, 2 * m - 2) = 1;
        U.at(2 * m - 1, 2 * m - 1) = d;
    }
    return QuadraticForm{U};
}

bool is_symplectic_isometry(const Matrix& g, const BilinearForm& B) {
    if (g.rows() != B.dim() || g.cols() != B.dim()) throw LinalgError("shape-mismatch");
    return g.mul(B.gram).mul(g.transpose()) == B.gram;
}

BilinearForm transport(const BilinearForm& B, const Matrix& basis) {
    return BilinearForm{basis.mul(B.gram).mul(basis.transpose())};
}

QuadraticForm transport(const QuadraticForm& Q, const Matrix& basis) {
    return QuadraticForm::from_matrix(basis.mul(Q.coeffs).mul(basis.transpose()));
}

Matrix conjugate_into(const Matrix& g, const Matrix& basis) {
    return basis.mul(g).mul(basis.inverse());
}

bool is_orthogonal_isometry(const Matrix& g, const QuadraticForm& Q) {
    // Q(xg) = Q(x) for all x iff the transported coefficient matrix matches
    return transport(Q, g).coeffs == Q.coeffs;
}

unsigned dickson_invariant(const Matrix& g, const QuadraticForm& Q) {
    if (!is_orthogonal_isometry(g, Q)) throw LinalgError("not-an-isometry");
    Matrix d = g.add(Matrix::identity(g.field(), g.rows()));
    return d.rank() % 2;
}

unsigned long long count_singular(const QuadraticForm& Q) {
    const Field& F = Q.field();
    unsigned n = Q.dim();
    unsigned q = F.q();
    unsigned long long total = 1;
    for (unsigned i = 0; i < n; ++i) {
        total *= q;
        if (total > (1ull << 24)) throw LinalgError("budget-exceeded");
    }
    unsigned long long cnt = 0;
    Vec x(n, 0);
    for (unsigned long long code = 1; code < total; ++code) {
        unsigned long long c = code;
        for (unsigned i = 0; i < n; ++i) {
            x[i] = static_cast<Elt>(c % q);
            c /= q;
        }
        if (Q.eval(x) == 0) ++cnt;
    }
    return cnt;
}

namespace {

// deterministic search for a nonzero singular vector in the span of rows;
// returns empty vector when the restricted form is anisotropic
Vec find_singular(const QuadraticForm& Q, const std::vector<Vec>& rows) {
    const Field& F = Q.field();
    unsigned k = static_cast<unsigned>(rows.size());
    unsigned q = F.q();
    unsigned long long total = 1;
    for (unsigned i = 0; i < k; ++i) {
        total *= q;
        if (total > (1ull << 22)) throw LinalgError("budget-exceeded");
    }
    for (unsigned long long code = 1; code < total; ++code) {
        unsigned long long c = code;
        Vec v(Q.dim(), 0);
        for (unsigned i = 0; i < k; ++i) {
            Elt coef = static_cast<Elt>(c % q);
            c /= q;
            if (coef) v = vec_add(F, v, vec_scale(F, coef, rows[i]));
        }
        if (Q.eval(v) == 0) return v;
    }
    return {};
}

}  // namespace

FormClassification classify_quadratic(const QuadraticForm& Q) {
    const Field& F = Q.field();
    if (F.p() != 2) throw LinalgError("odd-characteristic-unsupported");
    unsigned n = Q.dim();
    if (n % 2 != 0) throw LinalgError("odd-dimension");
    BilinearForm B = Q.polarize();
    if (!B.is_nondegenerate()) throw LinalgError("degenerate-form");

    std::vector<Vec> rem;
    for (unsigned i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        rem.push_back(e);
    }
    std::vector<std::pair<Vec, Vec>> hyper;
    std::optional<std::pair<Vec, Vec>> minus_block;

    while (!rem.empty()) {
        Vec u = find_singular(Q, rem);
        if (u.empty()) {
            if (rem.size() != 2) throw LinalgError("anisotropic-dim>2");
            // normalize the anisotropic plane to x^2 + xy + d y^2
            Vec a1 = rem[0], a2 = rem[1];
            Elt t = B.eval(a1, a2);
            if (t == 0) throw LinalgError("degenerate-form");
            a2 = vec_scale(F, F.inv(t), a2);
            Elt qa = Q.eval(a1);
            // e = a1 * s with s^2 * qa = 1
            Elt s = F.pow(F.inv(qa), (F.q() / 2));  // sqrt(1/qa): x -> x^{q/2} is inverse of squaring
            Vec e = vec_scale(F, s, a1);
            Vec f0 = vec_scale(F, F.inv(s), a2);
            Elt d = F.irreducible_quadratic_d();
            Elt target = F.add(d, Q.eval(f0));
            Elt mu = 0;
            bool found = false;
            for (unsigned c = 0; c < F.q(); ++c) {
                Elt m = static_cast<Elt>(c);
                if (F.add(F.mul(m, m), m) == target) { mu = m; found = true; break; }
            }
            if (!found) throw LinalgError("minus-normalization-failed");
            Vec f = vec_add(F, f0, vec_scale(F, mu, e));
            minus_block = std::make_pair(e, f);
            rem.clear();
            break;
        }
        // partner with nonzero pairing
        Vec v;
        for (const Vec& w : rem) {
            Elt t = B.eval(u, w);
            if (t != 0) {
                v = vec_scale(F, F.inv(t), w);
                break;
            }
        }
        if (v.empty()) throw LinalgError("degenerate-form");
        // make v singular: v' = v + Q(v) u  (char 2, Q(u)=0, B(u,v)=1)
        v = vec_add(F, v, vec_scale(F, Q.eval(v), u));
        hyper.emplace_back(u, v);
        // project remaining onto the orthogonal complement of <u, v>
        std::vector<Vec> kept;
        for (const Vec& w : rem) {
            Vec w2 = vec_add(F, w, vec_add(F, vec_scale(F, B.eval(w, v), u),
                                           vec_scale(F, B.eval(w, u), v)));
            bool zero = true;
            for (Elt c : w2)
                if (c) { zero = false; break; }
            if (zero) continue;
            // keep only if independent of what we already kept
            Matrix test(F, static_cast<unsigned>(kept.size()) + 1, n);
            for (unsigned r = 0; r < kept.size(); ++r)
                for (unsigned c = 0; c < n; ++c) test.at(r, c) = kept[r][c];
            for (unsigned c = 0; c < n; ++c) test.at(static_cast<unsigned>(kept.size()), c) = w2[c];
            if (test.rank() == kept.size() + 1) kept.push_back(w2);
        }
        rem = std::move(kept);
    }

    FormClassification out;
    out.witt_index = static_cast<unsigned>(hyper.size());
    out.type = minus_block ? FormType::minus : FormType::plus;
    Matrix basis(F, n, n);
    unsigned r = 0;
    for (auto& [u, v] : hyper) {
        for (unsigned c = 0; c < n; ++c) basis.at(r, c) = u[c];
        ++r;
        for (unsigned c = 0; c < n; ++c) basis.at(r, c) = v[c];
        ++r;
    }
    if (minus_block) {
        for (unsigned c = 0; c < n; ++c) basis.at(r, c) = minus_block->first[c];
        ++r;
        for (unsigned c = 0; c < n; ++c) basis.at(r, c) = minus_block->second[c];
        ++r;
    }
    if (r != n) throw LinalgError("classification-incomplete");
    out.standardizing_basis = basis;
    // hard check: transported form has the exact standard coefficient pattern
    QuadraticForm std_form = standard_quadratic(F, n / 2, out.type);
    if (transport(Q, basis).coeffs != std_form.coeffs)
        throw LinalgError("standardization-mismatch");
    return out;
}

Matrix symplectic_standard_basis(const BilinearForm& B) {
    const Field& F = B.field();
    unsigned n = B.dim();
    if (n % 2 != 0 || !B.is_alternating() || !B.is_nondegenerate())
        throw LinalgError("degenerate-form");
    std::vector<Vec> rem;
    for (unsigned i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        rem.push_back(e);
    }
    Matrix basis(F, n, n);
    unsigned row = 0;
    while (!rem.empty()) {
        Vec u = rem.front();
        Vec v;
        for (std::size_t j = 1; j < rem.size(); ++j) {
            Elt t = B.eval(u, rem[j]);
            if (t != 0) {
                v = vec_scale(F, F.inv(t), rem[j]);
                break;
            }
        }
        if (v.empty()) throw LinalgError("degenerate-form");
        for (unsigned c = 0; c < n; ++c) basis.at(row, c) = u[c];
        ++row;
        for (unsigned c = 0; c < n; ++c) basis.at(row, c) = v[c];
        ++row;
        std::vector<Vec> kept;
        for (const Vec& w : rem) {
            Elt cv = F.mul(B.eval(w, v), F.inv(B.eval(u, v)));
            Vec w1(w);
            // w - B(w,v)/B(u,v) u, then subtract the v-component
            w1 = vec_add(F, w1, vec_scale(F, F.neg(cv), u));
            Elt cu = F.mul(B.eval(w1, u), F.inv(B.eval(v, u)));
            w1 = vec_add(F, w1, vec_scale(F, F.neg(cu), v));
            bool zero = true;
            for (Elt c : w1)
                if (c) { zero = false; break; }
            if (zero) continue;
            Matrix test(F, static_cast<unsigned>(kept.size()) + 1, n);
            for (unsigned r2 = 0; r2 < kept.size(); ++r2)
                for (unsigned c = 0; c < n; ++c) test.at(r2, c) = kept[r2][c];
            for (unsigned c = 0; c < n; ++c) test.at(static_cast<unsigned>(kept.size()), c) = w1[c];
            if (test.rank() == kept.size() + 1) kept.push_back(w1);
        }
        rem = std::move(kept);
    }
    // hard check: transported Gram is the standard pattern
    if (transport(B, basis).gram != standard_symplectic(F, n / 2).gram)
        throw LinalgError("standardization-mismatch");
    return basis;
}

Matrix form_transporter(const QuadraticForm& from, const QuadraticForm& to) {
    FormClassification cf = classify_quadratic(from);
    FormClassification ct = classify_quadratic(to);
    if (cf.type != ct.type) throw LinalgError("forms-not-equivalent");
    // transport(from, Cf) == standard == transport(to, Ct), hence
    // to(x) = from(x Ct^{-1} Cf)
    Matrix g = ct.standardizing_basis.inverse().mul(cf.standardizing_basis);
    if (transport(from, g).coeffs != to.coeffs)
        throw LinalgError("transporter-mismatch");
    return g;
}

}  // namespace gfv
