#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gfv {

// Permutation on {0, ..., n-1}, stored as the image vector.
struct Perm {
    std::vector<std::uint16_t> img;

    static Perm identity(unsigned n);
    unsigned degree() const { return static_cast<unsigned>(img.size()); }
    std::uint16_t apply(std::uint16_t x) const { return img[x]; }

    // left-to-right: (a*b)(x) = b(a(x))
    Perm mul(const Perm& o) const;
    Perm inverse() const;
    bool operator==(const Perm& o) const { return img == o.img; }
    bool is_identity() const;
    int sign() const;                       // +1 or -1
    int sign_on(const std::vector<char>& mask) const;  // sign of the restriction

    // parse/print 1-based disjoint cycle notation, e.g. "(1,2,3)(4,5)"
    static Perm from_cycles(const std::string& s, unsigned degree);
    std::string to_cycles() const;
};

struct PermDataFile {
    std::string title;
    unsigned degree = 0;
    mpz_class order;
    std::vector<Perm> gens;
};

// load a generator data file: '#' comment lines, then "degree N", "order M",
// then one generator per line in cycle notation
PermDataFile load_perm_data(const std::string& path);

}  // namespace gfv
