#include "field.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "datapath.hpp"

namespace gfv {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense polynomial over GF(p), coefficient vector low-degree first
using Poly = std::vector<unsigned>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    poly_trim(a);
    while (a.size() >= m.size()) {
        unsigned lead = a.back();
        if (lead != 0) {
            // m is monic
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                unsigned sub = (lead * m[i]) % p;
                a[i + shift] = (a[i + shift] + p - sub) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, unsigned long long e, const Poly& m, unsigned p) {
    Poly r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic for poly_mod
        unsigned lead = b.back();
        if (lead != 1) {
            // lead^-1 mod p
            unsigned inv = 1;
            for (unsigned k = 1; k < p; ++k)
                if ((lead * k) % p == 1) { inv = k; break; }
            for (auto& c : b) c = (c * inv) % p;
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// irreducibility over GF(p) by the standard gcd criterion:
// x^{p^f} == x (mod m) and gcd(x^{p^{f/r}} - x, m) = 1 for prime r | f
bool poly_irreducible(const Poly& m, unsigned p) {
    unsigned f = static_cast<unsigned>(m.size()) - 1;
    if (f == 0) return false;
    if (f == 1) return true;
    Poly x{0, 1};
    auto ppow = [&](unsigned e) {
        unsigned long long r = 1;
        for (unsigned i = 0; i < e; ++i) r *= p;
        return r;
    };
    Poly xq = poly_powmod(x, ppow(f), m, p);
    Poly diff = xq;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(diff);
    if (!diff.empty()) return false;
    for (unsigned r = 2; r <= f; ++r) {
        if (f % r != 0 || !is_prime_u(r)) continue;
        Poly xe = poly_powmod(x, ppow(f / r), m, p);
        Poly d = xe;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        poly_trim(d);
        Poly g = poly_gcd(m, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(unsigned p, unsigned f, std::vector<Elt> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {
    if (!is_prime_u(p_)) throw FieldError("not-prime");
    unsigned long long q = 1;
    for (unsigned i = 0; i < f_; ++i) {
        q *= p_;
        if (q > 65536ull) throw FieldError("field-too-large");
    }
    q_ = static_cast<unsigned>(q);
    if (modulus_.size() != f_ + 1 || modulus_.back() != 1)
        throw FieldError("bad-modulus");
    Poly m(modulus_.begin(), modulus_.end());
    if (!poly_irreducible(m, p_)) throw FieldError("reducible-modulus");

    // exp/log tables from the smallest multiplicative generator
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    for (Elt g = (p_ == 2 && f_ == 1) ? Elt(1) : Elt(2); g < q_; ++g) {
        if (g == 0) continue;
        std::vector<char> seen(q_, 0);
        Elt x = 1;
        unsigned ord = 0;
        bool full = true;
        do {
            if (seen[x]) { full = false; break; }
            seen[x] = 1;
            exp_[ord] = x;
            ++ord;
            x = mul_slow(x, g);
        } while (x != 1);
        if (full && ord == q_ - 1) {
            generator_ = g;
            break;
        }
        if (g == 1 && q_ == 2) { generator_ = 1; exp_[0] = 1; break; }
    }
    if (generator_ == 0) {
        if (q_ == 2) { generator_ = 1; exp_[0] = 1; }
        else throw FieldError("no-generator");
    }
    for (unsigned i = 0; i < q_ - 1; ++i) {
        exp_[i + (q_ - 1)] = exp_[i];
        log_[exp_[i]] = i;
    }
}

std::vector<unsigned> Field::coeffs(Elt a) const {
    std::vector<unsigned> c(f_, 0);
    for (unsigned i = 0; i < f_; ++i) {
        c[i] = a % p_;
        a = static_cast<Elt>(a / p_);
    }
    return c;
}

Elt Field::from_coeffs(const std::vector<unsigned>& c) const {
    if (c.size() > f_) throw FieldError("coeff-overflow");
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw FieldError("coeff-out-of-range");
        v = v * p_ + c[i];
    }
    return static_cast<Elt>(v);
}

Elt Field::add(Elt a, Elt b) const {
    if (p_ == 2) return a ^ b;
    unsigned v = 0, mul = 1;
    for (unsigned i = 0; i < f_; ++i) {
        v += mul * ((a % p_ + b % p_) % p_);
        a = static_cast<Elt>(a / p_);
        b = static_cast<Elt>(b / p_);
        mul *= p_;
    }
    return static_cast<Elt>(v);
}

Elt Field::neg(Elt a) const {
    if (p_ == 2) return a;
    unsigned v = 0, mul = 1;
    for (unsigned i = 0; i < f_; ++i) {
        v += mul * ((p_ - a % p_) % p_);
        a = static_cast<Elt>(a / p_);
        mul *= p_;
    }
    return static_cast<Elt>(v);
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul_slow(Elt a, Elt b) const {
    Poly pa, pb;
    for (unsigned x = a; x; x /= p_) pa.push_back(x % p_);
    for (unsigned x = b; x; x /= p_) pb.push_back(x % p_);
    if (pa.empty() || pb.empty()) return 0;
    Poly m(modulus_.begin(), modulus_.end());
    Poly c = poly_mulmod(pa, pb, m, p_);
    unsigned v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + c[i];
    return static_cast<Elt>(v);
}

Elt Field::mul(Elt a, Elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Elt Field::inv(Elt a) const {
    if (a == 0) throw FieldError("zero-inverse");
    return exp_[(q_ - 1) - log_[a]];
}

Elt Field::pow(Elt a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw FieldError("zero-inverse");
        return 0;
    }
    long long m = q_ - 1;
    long long r = ((e % m) + m) % m;
    return exp_[(log_[a] * static_cast<unsigned long long>(r)) % m];
}

Elt Field::frobenius(Elt x, unsigned q0) const {
    // check q0 = p^e with e | f
    unsigned long long t = q0;
    unsigned e = 0;
    while (t > 1) {
        if (t % p_ != 0) throw FieldError("not-a-subfield");
        t /= p_;
        ++e;
    }
    if (e == 0 || f_ % e != 0) throw FieldError("not-a-subfield");
    return pow(x, q0);
}

Elt Field::trace_to_subfield(Elt x, unsigned q0) const {
    unsigned long long t = q0;
    unsigned e = 0;
    while (t > 1) {
        if (t % p_ != 0) throw FieldError("not-a-subfield");
        t /= p_;
        ++e;
    }
    if (e == 0 || f_ % e != 0) throw FieldError("not-a-subfield");
    unsigned k = f_ / e;
    Elt acc = 0, cur = x;
    for (unsigned i = 0; i < k; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, q0);
    }
    return acc;
}

Elt Field::irreducible_quadratic_d() const {
    if (p_ != 2) throw FieldError("wrong-characteristic");
    for (Elt d = 0; d < q_; ++d)
        if (trace_to_subfield(d, 2) == 1) return d;
    throw FieldError("no-trace-one-element");
}

std::string Field::to_string(Elt a) const {
    std::ostringstream os;
    os << static_cast<unsigned>(a);
    return os.str();
}

// ---------------------------------------------------------------------------

struct FieldRegistry {
    std::map<std::pair<unsigned, unsigned>, std::vector<Elt>> table;
    std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> cache;
    std::mutex mu;

    FieldRegistry() {
        std::ifstream in(data_file("moduli.txt"));
        std::string line;
        bool versioned = false;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string first;
            ls >> first;
            if (first == "version") {
                versioned = true;
                continue;
            }
            unsigned p = static_cast<unsigned>(std::stoul(first));
            unsigned f;
            ls >> f;
            std::vector<Elt> mod;
            unsigned c;
            while (ls >> c) mod.push_back(static_cast<Elt>(c));
            if (mod.size() != f + 1) throw FieldError("bad-modulus-line");
            table[{p, f}] = std::move(mod);
        }
        if (!versioned || table.empty()) throw FieldError("bad-modulus-table");
    }

    const Field& get(unsigned p, unsigned f) {
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_pair(p, f);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
        auto tt = table.find(key);
        if (tt == table.end()) throw FieldError("unknown-modulus");
        auto fld = std::unique_ptr<Field>(new Field(p, f, tt->second));
        auto& ref = *fld;
        cache[key] = std::move(fld);
        return ref;
    }
};

const Field& Field::get(unsigned p, unsigned f) {
    static FieldRegistry reg;
    return reg.get(p, f);
}

}  // namespace gfv
