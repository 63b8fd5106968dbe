#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfv {

// Exact arithmetic in GF(p^f), p^f <= 2^16.
//
// Elements are stored as packed values: a polynomial c_0 + c_1 x + ... over
// GF(p) is encoded as the integer c_0 + c_1 p + c_2 p^2 + ...  The modulus
// polynomial comes from the versioned table shipped in data/moduli.txt, so
// two fields with the same (p, f) are always byte-identical.
//
// Element ordering (for every deterministic "smallest" choice) is the
// numeric order of packed values, i.e. lexicographic on coefficient vectors
// read from the constant coefficient up.

class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

using Elt = std::uint16_t;  // packed field element value

class Field {
public:
    unsigned p() const { return p_; }
    unsigned f() const { return f_; }
    unsigned q() const { return q_; }
    const std::vector<Elt>& modulus() const { return modulus_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt pow(Elt a, long long e) const;

    // smallest generator of the multiplicative group
    Elt generator() const { return generator_; }

    // x -> x^q0 where q0 = p^e, e | f; a field automorphism fixing GF(q0)
    Elt frobenius(Elt x, unsigned q0) const;

    // relative trace x + x^q0 + ... + x^{q0^{k-1}} into GF(q0), returned as
    // an element of *this* field (it lies in the subfield fixed by x -> x^q0)
    Elt trace_to_subfield(Elt x, unsigned q0) const;

    // smallest d such that x^2 + x + d is irreducible (char 2 only);
    // equivalently the smallest d of absolute trace 1
    Elt irreducible_quadratic_d() const;

    // digit view of a packed value
    std::vector<unsigned> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<unsigned>& c) const;

    std::string to_string(Elt a) const;

    // Canonical field registry keyed on (p, f); loads the modulus table on
    // first use.  Throws FieldError("unknown-modulus") / ("not-prime").
    static const Field& get(unsigned p, unsigned f);

private:
    Field(unsigned p, unsigned f, std::vector<Elt> modulus);

    unsigned p_, f_, q_;
    std::vector<Elt> modulus_;  // length f+1, monic
    Elt generator_ = 0;
    std::vector<Elt> exp_;      // exp_[i] = g^i, i in [0, 2(q-1))
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0

    Elt mul_slow(Elt a, Elt b) const;  // polynomial mult + reduction
    friend struct FieldRegistry;
};

}  // namespace gfv
