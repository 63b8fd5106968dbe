// C interface over the catalog and verification engine: opaque handles,
// integer error codes, and a thread-local last-error message.  All report
// text is owned by the gfv_reports handle.

#include "gfverify.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "bsgs.hpp"
#include "catalog.hpp"
#include "datapath.hpp"
#include "orders.hpp"
#include "verify.hpp"

struct gfv_catalog {
    gfv::Catalog cat;
};

struct gfv_reports {
    std::vector<gfv::Report> reports;
    // materialized strings handed out as const char*
    std::vector<std::string> lines, instances, verdicts, meets;
};

namespace {

thread_local std::string g_error;

int fail(int code, const std::string& what) {
    g_error = what;
    return code;
}

gfv_reports* wrap(std::vector<gfv::Report> rs) {
    auto* out = new gfv_reports;
    out->reports = std::move(rs);
    for (const gfv::Report& r : out->reports) {
        out->lines.push_back(r.line());
        out->instances.push_back(r.instance);
        out->verdicts.push_back(r.verdict);
        out->meets.push_back(r.meet.get_str());
    }
    return out;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const gfv::CatalogError& e) {
        return fail(GFV_ERR_USAGE, e.what());
    } catch (const gfv::EngineError& e) {
        return fail(GFV_ERR_ENGINE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GFV_ERR_USAGE, e.what());
    } catch (const std::out_of_range& e) {
        return fail(GFV_ERR_USAGE, e.what());
    } catch (const std::exception& e) {
        return fail(GFV_ERR_ENGINE, e.what());
    }
}

}  // namespace

extern "C" {

const char* gfv_last_error(void) { return g_error.c_str(); }

int gfv_catalog_open(const char* path, gfv_catalog** out) {
    if (out == nullptr) return fail(GFV_ERR_USAGE, "null output handle");
    *out = nullptr;
    return guarded([&]() {
        std::string p =
            path != nullptr ? std::string(path) : gfv::data_file("catalog.txt");
        try {
            *out = new gfv_catalog{gfv::load_catalog(p)};
        } catch (const gfv::CatalogError& e) {
            return fail(GFV_ERR_IO, e.what());
        }
        return static_cast<int>(GFV_OK);
    });
}

void gfv_catalog_close(gfv_catalog* c) { delete c; }

unsigned gfv_catalog_version(const gfv_catalog* c) {
    return c != nullptr ? c->cat.version : 0u;
}

size_t gfv_catalog_rows(const gfv_catalog* c) {
    return c != nullptr ? c->cat.rows.size() : 0u;
}

int gfv_verify(const gfv_catalog* c, const char* table, const char* row,
               const char* params, const char* strategy, gfv_reports** out) {
    if (c == nullptr || table == nullptr || row == nullptr || out == nullptr)
        return fail(GFV_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() {
        const gfv::CatalogRow& r = gfv::find_row(c->cat, table, row);
        gfv::ParamMap p;
        if (params != nullptr && params[0] != '\0')
            p = gfv::parse_params(params);
        else if (params == nullptr && !r.params.empty())
            p = gfv::parse_params(r.smallest);
        gfv::Strategy s = gfv::Strategy::automatic;
        if (strategy != nullptr && std::strcmp(strategy, "auto") != 0)
            s = gfv::parse_strategy(strategy);
        std::vector<gfv::Report> rs;
        rs.push_back(gfv::verify_instance(r, p, s));
        *out = wrap(std::move(rs));
        return static_cast<int>(GFV_OK);
    });
}

int gfv_selftest(const gfv_catalog* c, gfv_reports** out) {
    if (c == nullptr || out == nullptr)
        return fail(GFV_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() {
        *out = wrap(gfv::verify_desk(c->cat));
        return static_cast<int>(GFV_OK);
    });
}

int gfv_screen(const gfv_catalog* c, const char* table, const char* row,
               long max_param, long max_q, gfv_reports** out) {
    if (c == nullptr || table == nullptr || row == nullptr || out == nullptr)
        return fail(GFV_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() {
        const gfv::CatalogRow& r = gfv::find_row(c->cat, table, row);
        *out = wrap(gfv::screen_row(r, max_param, max_q));
        return static_cast<int>(GFV_OK);
    });
}

size_t gfv_reports_count(const gfv_reports* r) {
    return r != nullptr ? r->reports.size() : 0u;
}

const char* gfv_reports_line(const gfv_reports* r, size_t i) {
    return (r != nullptr && i < r->lines.size()) ? r->lines[i].c_str()
                                                 : nullptr;
}

const char* gfv_reports_instance(const gfv_reports* r, size_t i) {
    return (r != nullptr && i < r->instances.size()) ? r->instances[i].c_str()
                                                     : nullptr;
}

const char* gfv_reports_verdict(const gfv_reports* r, size_t i) {
    return (r != nullptr && i < r->verdicts.size()) ? r->verdicts[i].c_str()
                                                    : nullptr;
}

const char* gfv_reports_meet(const gfv_reports* r, size_t i) {
    return (r != nullptr && i < r->meets.size()) ? r->meets[i].c_str()
                                                 : nullptr;
}

void gfv_reports_free(gfv_reports* r) { delete r; }

int gfv_group_order(const char* family, long a, long b, char** out) {
    if (family == nullptr || out == nullptr)
        return fail(GFV_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() {
        *out = dup_string(gfv::group_order(family, a, b).get_str());
        return static_cast<int>(GFV_OK);
    });
}

int gfv_ppd(unsigned long a, unsigned n, char** out) {
    if (out == nullptr) return fail(GFV_ERR_USAGE, "null argument");
    *out = nullptr;
    return guarded([&]() {
        std::ostringstream os;
        bool first = true;
        for (const mpz_class& r : gfv::ppd(a, n)) {
            if (!first) os << ",";
            os << r.get_str();
            first = false;
        }
        *out = dup_string(os.str());
        return static_cast<int>(GFV_OK);
    });
}

void gfv_string_free(char* s) { std::free(s); }

}  // extern "C"
