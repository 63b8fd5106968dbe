#include "orders.hpp"

#include <stdexcept>

namespace gfv {

namespace {

mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

mpz_class sp_order(unsigned long m, const mpz_class& q) {
    mpz_class n = zpow(q, m * m);
    for (unsigned long i = 1; i <= m; ++i) n *= zpow(q, 2 * i) - 1;
    return n;
}

// full orthogonal group O^eps_{2m}(q), q even
mpz_class go_order_even(unsigned long m, const mpz_class& q, int eps) {
    mpz_class n = 2 * zpow(q, m * (m - 1));
    n *= zpow(q, m) - eps;
    for (unsigned long i = 1; i < m; ++i) n *= zpow(q, 2 * i) - 1;
    return n;
}

// Omega^eps_{2m}(q), any q: q^{m(m-1)} (q^m - eps) prod (q^{2i}-1) / gcd(2, q-1)...
// here we only need q even (= half of the full group) and the projective
// version for odd q
mpz_class om_order(unsigned long m, const mpz_class& q, int eps) {
    if (q % 2 != 0) throw std::runtime_error("Omega even-dim odd-q unsupported; use POm");
    mpz_class n = zpow(q, m * (m - 1));
    n *= zpow(q, m) - eps;
    for (unsigned long i = 1; i < m; ++i) n *= zpow(q, 2 * i) - 1;
    return n;  // = |O|/2 for q even
}

mpz_class pom_order(unsigned long m, const mpz_class& q, int eps) {
    mpz_class n = zpow(q, m * (m - 1));
    n *= zpow(q, m) - eps;
    for (unsigned long i = 1; i < m; ++i) n *= zpow(q, 2 * i) - 1;
    return n / gcd(mpz_class(4), zpow(q, m) - eps);
}

mpz_class om_odd_dim(unsigned long k, const mpz_class& q) {
    // Omega_{2k+1}(q)
    mpz_class n = zpow(q, k * k);
    for (unsigned long i = 1; i <= k; ++i) n *= zpow(q, 2 * i) - 1;
    return n / gcd(mpz_class(2), q - 1);
}

mpz_class gl_order(unsigned long n, const mpz_class& q) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= zpow(q, n) - zpow(q, i);
    return r;
}

}  // namespace

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class group_order(const std::string& family, long a, long b) {
    mpz_class q(b);
    if (family == "Sp") return sp_order(a, q);
    if (family == "PSp") return sp_order(a, q) / gcd(mpz_class(2), q - 1);
    if (family == "GOplus") return go_order_even(a, q, +1);
    if (family == "GOminus") return go_order_even(a, q, -1);
    if (family == "Omplus") return om_order(a, q, +1);
    if (family == "Omminus") return om_order(a, q, -1);
    if (family == "POmplus") return pom_order(a, q, +1);
    if (family == "POmminus") return pom_order(a, q, -1);
    if (family == "OmOdd") return om_odd_dim(a, q);
    if (family == "GL") return gl_order(a, q);
    if (family == "SL") return gl_order(a, q) / (q - 1);
    if (family == "SU") {
        mpz_class r = zpow(q, (a * (a - 1)) / 2);
        for (long i = 2; i <= a; ++i) r *= zpow(q, i) - ((i % 2 == 0) ? 1 : -1);
        return r;
    }
    if (family == "G2") return zpow(q, 6) * (zpow(q, 6) - 1) * (zpow(q, 2) - 1);
    if (family == "Sz") return zpow(q, 2) * (zpow(q, 2) + 1) * (q - 1);
    if (family == "Alt") return factorial(a) / 2;
    if (family == "Sym") return factorial(a);
    if (family == "M12") return mpz_class(95040);
    if (family == "M24") return mpz_class(244823040);
    if (family == "PGammaL28") return mpz_class(1512);
    if (family == "dihedral") return mpz_class(2 * a);
    if (family == "cyclic") return mpz_class(a);
    throw std::runtime_error("unsupported-family: " + family);
}

// --- factoring ------------------------------------------------------------

namespace {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rnd(gmp_randinit_default);
    rnd.seed(0x5EEDul);
    for (;;) {
        mpz_class x = rnd.get_z_range(n - 2) + 2;
        mpz_class y = x, c = rnd.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul,
                            29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        while (n % p == 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factorize(mpz_class n) {
    std::map<mpz_class, unsigned> out;
    if (n < 0) n = -n;
    factor_into(n, out);
    return out;
}

std::string factor_string(const mpz_class& n) {
    auto f = factorize(n);
    std::string s;
    for (const auto& [p, e] : f) {
        if (!s.empty()) s += "*";
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    if (s.empty()) s = "1";
    return s;
}

std::set<mpz_class> ppd(unsigned long a, unsigned n) {
    if (a == 2 && n == 6) return {mpz_class(7)};  // conventional exception
    mpz_class an = zpow(mpz_class(a), n) - 1;
    std::set<mpz_class> out;
    for (const auto& [p, e] : factorize(an)) {
        bool primitive = true;
        for (unsigned i = 1; i < n; ++i) {
            mpz_class ai = zpow(mpz_class(a), i) - 1;
            if (ai % p == 0) {
                primitive = false;
                break;
            }
        }
        if (primitive) out.insert(p);
    }
    return out;
}

bool ppd_lemma_check(unsigned long a, unsigned n) {
    for (const mpz_class& r : ppd(a, n))
        if ((r - 1) % n != 0) return false;
    return true;
}

DivisibilityReport divisibility_filter(const mpz_class& G, const mpz_class& H,
                                       const mpz_class& K, const mpz_class& L,
                                       const mpz_class& HL, const mpz_class& KL,
                                       const mpz_class& GmodL) {
    DivisibilityReport r;
    r.a = (H * K) % G == 0;
    r.b = (HL * K * GmodL) % G == 0;
    r.c = (HL * K) % L == 0;
    r.d = (HL * KL * GmodL) % L == 0;
    return r;
}

}  // namespace gfv
