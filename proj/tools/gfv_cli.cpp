// Command-line front end over the C API (gfverify.h only; no engine
// internals).  Verbs:
//   verify --table T --row R [--params k=v,...] [--strategy S]
//   screen --table T --row R [--max-param N] [--max-q Q]
//   ppd A N
//   order FAMILY A B
//   selftest
// Exit code: 0 when every requested verdict is verified or
// screened-consistent, 1 when any claim is refuted (or the engine fails),
// 2 on usage errors.  Output is deterministic, one record per line.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "gfverify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

int api_exit(int code) {
    std::fprintf(stderr, "error: %s\n", gfv_last_error());
    return (code == GFV_ERR_USAGE || code == GFV_ERR_IO) ? kExitUsage
                                                         : kExitRefuted;
}

int emit(gfv_reports* reports) {
    int exit_code = kExitOk;
    for (size_t i = 0; i < gfv_reports_count(reports); ++i) {
        std::printf("%s\n", gfv_reports_line(reports, i));
        std::string verdict = gfv_reports_verdict(reports, i);
        if (verdict != "verified" && verdict != "screened-consistent")
            exit_code = kExitRefuted;
    }
    gfv_reports_free(reports);
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of cataloged group factorizations"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path,
                   "catalog file (default: the shipped data file)");

    std::string table, row, params, strategy = "auto";
    long max_param = 9, max_q = 64;
    unsigned long ppd_a = 0;
    unsigned ppd_n = 0;
    std::string family;
    long order_a = 0, order_b = 0;

    CLI::App* verify = app.add_subcommand("verify", "verify one catalog row");
    verify->add_option("--table", table, "catalog table (T1, T2, T5, A)")
        ->required();
    verify->add_option("--row", row, "row id within the table")->required();
    verify->add_option("--params", params,
                       "parameter tuple k=v,... (default: smallest)");
    verify->add_option("--strategy", strategy,
                       "auto | orbit | oracle | chain | screen");

    CLI::App* screen = app.add_subcommand(
        "screen", "divisibility screening sweep over a row's parameters");
    screen->add_option("--table", table, "catalog table")->required();
    screen->add_option("--row", row, "row id within the table")->required();
    screen->add_option("--max-param", max_param, "parameter bound (default 9)");
    screen->add_option("--max-q", max_q, "field size bound (default 64)");

    CLI::App* ppd =
        app.add_subcommand("ppd", "primitive prime divisors of a^n - 1");
    ppd->add_option("a", ppd_a, "base")->required();
    ppd->add_option("n", ppd_n, "exponent")->required();

    CLI::App* order = app.add_subcommand("order", "exact group order");
    order->add_option("family", family, "family name (e.g. Sp, Omplus, G2)")
        ->required();
    order->add_option("a", order_a, "rank-like parameter")->required();
    order->add_option("b", order_b, "field-size-like parameter")->required();

    CLI::App* selftest =
        app.add_subcommand("selftest", "verify every desk instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (ppd->parsed()) {
        char* s = nullptr;
        int rc = gfv_ppd(ppd_a, ppd_n, &s);
        if (rc != GFV_OK) return api_exit(rc);
        std::printf("ppd(%lu,%u)={%s}\n", ppd_a, ppd_n, s);
        gfv_string_free(s);
        return kExitOk;
    }
    if (order->parsed()) {
        char* s = nullptr;
        int rc = gfv_group_order(family.c_str(), order_a, order_b, &s);
        if (rc != GFV_OK) return api_exit(rc);
        std::printf("%s\n", s);
        gfv_string_free(s);
        return kExitOk;
    }

    gfv_catalog* cat = nullptr;
    int rc = gfv_catalog_open(
        catalog_path.empty() ? nullptr : catalog_path.c_str(), &cat);
    if (rc != GFV_OK) return api_exit(rc);

    gfv_reports* reports = nullptr;
    if (verify->parsed()) {
        rc = gfv_verify(cat, table.c_str(), row.c_str(),
                        params.empty() ? nullptr : params.c_str(),
                        strategy.c_str(), &reports);
    } else if (screen->parsed()) {
        rc = gfv_screen(cat, table.c_str(), row.c_str(), max_param, max_q,
                        &reports);
    } else if (selftest->parsed()) {
        rc = gfv_selftest(cat, &reports);
    }
    gfv_catalog_close(cat);
    if (rc != GFV_OK) return api_exit(rc);
    return emit(reports);
}
