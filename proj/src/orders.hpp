#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gfv {

// Closed-form group orders.  Families:
//   Sp(m, q)        symplectic Sp_{2m}(q)
//   GOplus/GOminus(m, q)   full orthogonal O^±_{2m}(q), q even
//   Omplus/Omminus(m, q)   Ω^±_{2m}(q), q even
//   POmplus/POmminus(m, q) projective Ω^±_{2m}(q), any q
//   PSp(m, q)       PSp_{2m}(q)
//   OmOdd(k, q)     Ω_{2k+1}(q)
//   SL(n, q), SU(n, q), GL(n, q)
//   G2(q), Sz(q)
//   Alt(n), Sym(n), M12, M24, PGammaL28, dihedral(n) (order 2n), cyclic(n)
mpz_class group_order(const std::string& family, long a, long b);

mpz_class factorial(unsigned n);

// primitive prime divisors of a^n - 1 (primes r | a^n-1 with r not dividing
// a^i-1 for i < n); the (2,6) exception returns {7} by convention
std::set<mpz_class> ppd(unsigned long a, unsigned n);

// every r in ppd(a,n) satisfies n | r-1 (hence r > n)
bool ppd_lemma_check(unsigned long a, unsigned n);

struct DivisibilityReport {
    bool a, b, c, d;
    bool all() const { return a && b && c && d; }
};

// necessary divisibility conditions for G = HK with socle L:
// (a) |G| | |H||K|   (b) |G| | |H∩L||K||G/L|
// (c) |L| | |H∩L||K| (d) |L| | |H∩L||K∩L||G/L|
DivisibilityReport divisibility_filter(const mpz_class& G, const mpz_class& H,
                                       const mpz_class& K, const mpz_class& L,
                                       const mpz_class& HL, const mpz_class& KL,
                                       const mpz_class& GmodL);

// exact factorization of n into prime powers (Pollard rho + Miller-Rabin)
std::map<mpz_class, unsigned> factorize(mpz_class n);

std::string factor_string(const mpz_class& n);  // e.g. "2^17*3^3*5^2*7*13*17"

}  // namespace gfv
