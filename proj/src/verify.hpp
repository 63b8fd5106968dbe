#pragma once

// Exact verification of the cataloged factorization claims G = HK.
//
// Strategies, chosen per instance (or forced by the caller):
//   orbit  - K is realized as the stabilizer of a point; the G-orbit of the
//            point is computed and must have size |G|/|K|, and the H-orbit
//            of the same point must cover it (G = HK iff H is transitive on
//            G/K).  All sizes are exact.
//   oracle - |H meet K| is computed exactly by traversing the smaller group
//            element-by-element and sifting into the other group's
//            stabilizer chain; the claim holds iff |H||K| = |H meet K||G|.
//   chain  - the claim is composed from two verified links through an
//            intermediate subgroup (used where neither factor alone fits
//            the orbit or oracle budgets).
//   screen - arithmetic necessary conditions only (divisibility filter at
//            both the minimal and the maximal decoration), for instances
//            whose realization is out of budget.
//
// Default selection: orbit when the stabilizer realization exists and the
// orbit fits 10^6 points; otherwise oracle when min(|H|,|K|) <= 10^7;
// otherwise the row's chain recipe; otherwise screen.  All computation is
// exact integer arithmetic; the stabilizer-chain seed is fixed (0x5EED) and
// every reported line is byte-for-byte deterministic.

#include <string>
#include <vector>

#include "catalog.hpp"

namespace gfv {

enum class Strategy { automatic, orbit, oracle, chain, screen };

Strategy parse_strategy(const std::string& name);  // throws CatalogError
std::string strategy_name(Strategy s);

struct Report {
    std::string instance;  // catalog instance id
    std::string strategy;  // strategy actually used
    mpz_class G, H, K;     // orders entering the claim
    mpz_class meet;        // |H meet K| (exact or implied; 0 if not computed)
    unsigned long orbit = 0;  // orbit size used by the strategy (0 if none)
    std::string verdict;      // verified | screened-consistent | refuted
    std::string note;         // no spaces; never part of the fixed fields

    // fixed field order, decimal integers, trailing newline not included
    std::string line() const;
};

// Verify one catalog row at the given parameters.  With Strategy::automatic
// the default selection above applies; forcing a strategy that is not
// implemented for the row throws CatalogError.
Report verify_instance(const CatalogRow& row, const ParamMap& params,
                       Strategy s = Strategy::automatic);

// Every desk instance (each row at its smallest parameters, plus the chain
// tuple), reports sorted by instance id.
std::vector<Report> verify_desk(const Catalog& c);

// Screening sweep: all parameter tuples of the row with every parameter in
// [1, max_param] (q-like parameters capped at max_q) that satisfy the row's
// constraints, screened at minimal and maximal decorations.
std::vector<Report> screen_row(const CatalogRow& row, long max_param,
                               long max_q);

std::string render_reports(const std::vector<Report>& reports);

// ---- refutation and property suites (exercised by the acceptance gate) ---

// Mutated claims must be refuted:
//   wrong form sign:    plus-type stabilizer order against the Sp_4(4) pair
//   dropped decoration: bare tensor against Omega_4^-(4) in Sp_4(4)
//   wrong subgroup:     M_11 in place of M_12 against A_7 x A_5 in A_12
Report mutated_wrong_sign();
Report mutated_dropped_decoration();
Report mutated_wrong_subgroup();

struct PropertyResult {
    std::string name;
    bool pass;
    std::string note;
};

// strategy agreement, conjugation invariance, H/K symmetry, product-order
// identity through an intermediate overgroup, exact atlas orders
std::vector<PropertyResult> property_suite();

}  // namespace gfv
