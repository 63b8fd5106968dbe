#include "actions.hpp"

namespace gfv {

Key vec_key(const Field& F, const Vec& v) {
    Key k = 0;
    unsigned q = F.q();
    for (std::size_t i = v.size(); i-- > 0;) k = k * q + v[i];
    return k;
}

Vec key_vec(const Field& F, unsigned dim, Key k) {
    Vec v(dim);
    unsigned q = F.q();
    for (unsigned i = 0; i < dim; ++i) {
        v[i] = static_cast<Elt>(k % q);
        k /= q;
    }
    return v;
}

Key form_key(const QuadraticForm& Q) {
    const Field& F = Q.field();
    unsigned n = Q.dim(), q = F.q();
    Key k = 0;
    for (unsigned i = n; i-- > 0;)
        for (unsigned j = n; j-- > i;) k = k * q + Q.coeffs.at(i, j);
    return k;
}

QuadraticForm key_form(const Field& F, unsigned dim, Key k) {
    Matrix U(F, dim, dim);
    unsigned q = F.q();
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = i; j < dim; ++j) {
            U.at(i, j) = static_cast<Elt>(k % q);
            k /= q;
        }
    return QuadraticForm{U};
}

Key subspace_key(const Matrix& M) {
    Matrix r = M.rref();
    const Field& F = M.field();
    unsigned q = F.q();
    Key k = 0;
    for (unsigned i = M.rows(); i-- > 0;)
        for (unsigned j = M.cols(); j-- > 0;) k = k * q + r.at(i, j);
    return k;
}

GroupOps<Matrix> matrix_ops(const Field& F, unsigned dim) {
    GroupOps<Matrix> ops;
    ops.id = Matrix::identity(F, dim);
    ops.mul = [](const Matrix& a, const Matrix& b) { return a.mul(b); };
    ops.inv = [](const Matrix& a) { return a.inverse(); };
    ops.is_id = [](const Matrix& a) { return a.is_identity(); };
    const Field* Fp = &F;
    ops.moved_point = [Fp, dim](const Matrix& g) -> Key {
        for (unsigned i = 0; i < dim; ++i) {
            Vec e(dim, 0);
            e[i] = 1;
            Vec img = vec_mat(*Fp, e, g);
            if (img != e) return vec_key(*Fp, e);
        }
        throw EngineError("moved_point: identity matrix");
    };
    return ops;
}

GroupOps<Perm> perm_ops(unsigned degree) {
    GroupOps<Perm> ops;
    ops.id = Perm::identity(degree);
    ops.mul = [](const Perm& a, const Perm& b) { return a.mul(b); };
    ops.inv = [](const Perm& a) { return a.inverse(); };
    ops.is_id = [](const Perm& a) { return a.is_identity(); };
    ops.moved_point = [](const Perm& g) -> Key {
        for (std::size_t i = 0; i < g.img.size(); ++i)
            if (g.img[i] != i) return static_cast<Key>(i);
        throw EngineError("moved_point: identity permutation");
    };
    return ops;
}

Action<Matrix> vector_action(const Field& F, unsigned dim) {
    const Field* Fp = &F;
    return [Fp, dim](const Matrix& g, Key k) -> Key {
        return vec_key(*Fp, vec_mat(*Fp, key_vec(*Fp, dim, k), g));
    };
}

Action<Matrix> form_action(const Field& F, unsigned dim) {
    const Field* Fp = &F;
    // cache the most recent matrix inverse: orbit loops apply one generator
    // to many points in a row
    auto cache = std::make_shared<std::pair<Matrix, Matrix>>();
    return [Fp, dim, cache](const Matrix& g, Key k) -> Key {
        if (cache->first != g) {
            cache->first = g;
            cache->second = g.inverse();
        }
        QuadraticForm Q = key_form(*Fp, dim, k);
        return form_key(transport(Q, cache->second));
    };
}

Action<Matrix> subspace_action(const Field& F, unsigned dim, unsigned k) {
    const Field* Fp = &F;
    unsigned q = F.q();
    return [Fp, dim, k, q](const Matrix& g, Key key) -> Key {
        Matrix M(*Fp, k, dim);
        Key t = key;
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < dim; ++j) {
                M.at(i, j) = static_cast<Elt>(t % q);
                t /= q;
            }
        return subspace_key(M.mul(g));
    };
}

Key polarized_form_key(const QuadraticForm& Q) {
    const Field& F = Q.field();
    unsigned n = Q.dim(), q = F.q();
    Key k = 0;
    for (unsigned i = n; i-- > 0;) k = k * q + Q.coeffs.at(i, i);
    return k;
}

QuadraticForm key_polarized_form(const Field& F, unsigned dim, Key k) {
    Matrix U(F, dim, dim);
    unsigned q = F.q();
    for (unsigned i = 0; i < dim; ++i) {
        U.at(i, i) = static_cast<Elt>(k % q);
        k /= q;
    }
    for (unsigned t = 0; 2 * t + 1 < dim; ++t) U.at(2 * t, 2 * t + 1) = 1;
    return QuadraticForm{U};
}

Action<Matrix> polarized_form_action(const Field& F, unsigned dim) {
    const Field* Fp = &F;
    auto cache = std::make_shared<std::pair<Matrix, Matrix>>();
    return [Fp, dim, cache](const Matrix& g, Key k) -> Key {
        if (cache->first != g) {
            cache->first = g;
            cache->second = g.inverse();
        }
        QuadraticForm Q = key_polarized_form(*Fp, dim, k);
        return polarized_form_key(transport(Q, cache->second));
    };
}

Action<Perm> natural_action() {
    return [](const Perm& g, Key k) -> Key {
        return static_cast<Key>(g.img[static_cast<std::size_t>(k)]);
    };
}

Action<Perm> subset_action(unsigned) {
    return [](const Perm& g, Key k) -> Key {
        std::uint64_t mask = static_cast<std::uint64_t>(k);
        std::uint64_t out = 0;
        while (mask) {
            unsigned i = static_cast<unsigned>(__builtin_ctzll(mask));
            mask &= mask - 1;
            out |= 1ull << g.img[i];
        }
        return static_cast<Key>(out);
    };
}

Action<Perm> partition2_action(unsigned degree) {
    std::uint64_t full = (degree == 64) ? ~0ull : ((1ull << degree) - 1);
    return [full](const Perm& g, Key k) -> Key {
        std::uint64_t mask = static_cast<std::uint64_t>(k);
        std::uint64_t out = 0;
        while (mask) {
            unsigned i = static_cast<unsigned>(__builtin_ctzll(mask));
            mask &= mask - 1;
            out |= 1ull << g.img[i];
        }
        std::uint64_t comp = full & ~out;
        return static_cast<Key>(out < comp ? out : comp);
    };
}

GroupOps<Perm> perm_ops_subsets(unsigned degree, unsigned k) {
    GroupOps<Perm> ops = perm_ops(degree);
    ops.moved_point = [degree, k](const Perm& g) -> Key {
        for (unsigned p = 0; p < degree; ++p) {
            if (g.img[p] == p) continue;
            // subset containing p but not g(p): moved by g
            std::uint64_t mask = 1ull << p;
            unsigned need = k - 1;
            for (unsigned o = 0; o < degree && need; ++o) {
                if (o == p || o == g.img[p]) continue;
                mask |= 1ull << o;
                --need;
            }
            return static_cast<Key>(mask);
        }
        throw EngineError("moved_point: identity permutation");
    };
    return ops;
}

Key subset_mask(const std::vector<unsigned>& pts) {
    std::uint64_t m = 0;
    for (unsigned p : pts) m |= 1ull << p;
    return static_cast<Key>(m);
}

}  // namespace gfv
