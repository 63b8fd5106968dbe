#pragma once

// Machine-readable catalog of the claimed exact factorizations G = HK:
// ten rows for symplectic socles (T1), eight maximal-factorization rows
// (T2), six rows for plus-type orthogonal socles (T5) and four alternating
// cases (A).  The row data ships as a versioned text file (one record per
// line, fixed column order) that round-trips through parse/serialize
// byte-for-byte; order formulas, parameter constraints and desk instances
// are implemented here against that data.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gfv {

struct CatalogRow {
    std::string table;  // T1, T2, T5, A
    std::string row;    // "1".."10" or "a.1".."a.4"
    std::string socle;
    std::string constraints;
    std::string h_desc;
    std::string k_desc;
    std::string decorations;  // explicit minimal/maximal witness notes
    std::string recipe_g;
    std::string recipe_h;
    std::string recipe_k;
    std::string predicted;  // closed form for |H∩K| at the desk witness
    std::string params;     // comma-separated parameter names ("" if fixed)
    std::string smallest;   // smallest parameter tuple, e.g. "f=2,l=1"
    std::string larger;     // one larger tuple for screening coverage
    std::string feasibility;  // full-verify | screen-only (at `smallest`)
    std::string anchor;       // strategy note for the desk instance

    std::string id() const { return table + "." + row; }
};

struct Catalog {
    unsigned version = 0;
    std::vector<CatalogRow> rows;
};

class CatalogError : public std::runtime_error {
public:
    explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& text);
std::string serialize_catalog(const Catalog& c);

const CatalogRow& find_row(const Catalog& c, const std::string& table,
                           const std::string& row);

// parameter tuples are name -> value maps, e.g. {f:2, l:1, a:1, b:1}
using ParamMap = std::map<std::string, long>;
ParamMap parse_params(const std::string& text);  // "f=2,l=1" -> map
std::string format_params(const ParamMap& p);

// nullopt when satisfied, else the violated constraint
std::optional<std::string> check_constraints(const CatalogRow& row,
                                             const ParamMap& p);

// closed-form orders for the factorization claim at the given parameters;
// decorations enter as explicit multipliers per the row's witness list
struct RowOrders {
    mpz_class G, H, K;        // the almost simple group and the two factors
    mpz_class L, HL, KL;      // socle and intersections with it
    mpz_class GmodL;          // |G/L|
    mpz_class expected_meet;  // |H||K|/|G| when that is integral, else 0
};
RowOrders row_orders(const CatalogRow& row, const ParamMap& p,
                     bool maximal_decorations);

struct CatalogInstance {
    const CatalogRow* row;
    ParamMap params;
    bool full_verify;       // within the engine's budgets at these parameters
    unsigned long degree;   // ambient vector/point count of the realization
    std::string note;
    std::string id() const;
};

CatalogInstance instantiate(const CatalogRow& row, const ParamMap& p);

// the fixed acceptance set: every row at its smallest parameters plus the
// extra tuples exercised by the acceptance criteria
std::vector<CatalogInstance> desk_instances(const Catalog& c);

// every recipe name must resolve to a known constructor
bool recipe_known(const std::string& recipe);

}  // namespace gfv
