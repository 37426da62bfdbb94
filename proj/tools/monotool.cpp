// Command-line front end over the C API: exact analyses, simulations,
// and self-verifying reproduction of the shipped golden files.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monopoly.h"

namespace {

struct ParamFlags {
    int model = 2;
    std::string e = "1", f = "1";
    std::string a = "18/5", b = "12/5", c = "3/5", d = "1/20", K = "2";
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
    cmd->add_option("--model", p.model, "model id (1 or 2)")->check(CLI::IsMember({1, 2}));
    cmd->add_option("--e", p.e, "model 1 parameter e (rational or decimal)");
    cmd->add_option("--f", p.f, "model 1 parameter f");
    cmd->add_option("--a", p.a, "model 2 parameter a");
    cmd->add_option("--b", p.b, "model 2 parameter b");
    cmd->add_option("--c", p.c, "model 2 parameter c");
    cmd->add_option("--d", p.d, "model 2 parameter d");
    cmd->add_option("--K", p.K, "model 2 parameter K");
}

[[noreturn]] void die(const std::string& msg, int code = 1) {
    std::cerr << "monotool: " << msg << "\n";
    std::exit(code);
}

mono_map* make_map(const ParamFlags& p) {
    mono_map* map = nullptr;
    mono_status st =
        p.model == 1 ? mono_map_model1(p.e.c_str(), p.f.c_str(), &map)
                     : mono_map_model2(p.a.c_str(), p.b.c_str(), p.c.c_str(), p.d.c_str(),
                                       p.K.c_str(), &map);
    if (st != MONO_OK) die(mono_last_error());
    return map;
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    mono_string_free(s);
    return out;
}

// Exact-string to double, for the float-only simulation paths.
double to_double_str(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return std::strtod(s.c_str(), nullptr);
    return std::strtod(s.substr(0, slash).c_str(), nullptr) /
           std::strtod(s.substr(slash + 1).c_str(), nullptr);
}

void fill_float_params(const ParamFlags& p, double out[5]) {
    if (p.model == 1) {
        out[0] = to_double_str(p.e);
        out[1] = to_double_str(p.f);
    } else {
        out[0] = to_double_str(p.a);
        out[1] = to_double_str(p.b);
        out[2] = to_double_str(p.c);
        out[3] = to_double_str(p.d);
        out[4] = to_double_str(p.K);
    }
}

bool parse_range(const std::string& text, double& lo, double& hi) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) return false;
    lo = to_double_str(text.substr(0, colon));
    hi = to_double_str(text.substr(colon + 1));
    return lo < hi;
}

std::string default_out_dir() {
    const char* env = std::getenv("MONOTOOL_OUT");
    return env ? env : ".";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die("cannot write " + out_path);
    out << text;
}

// ---- reproduce targets --------------------------------------------------

std::string std_k_map_report(const std::string& k, unsigned n, bool magnitudes) {
    mono_map* map = nullptr;
    if (mono_map_model2("18/5", "12/5", "3/5", "1/20", k.c_str(), &map) != MONO_OK)
        die(mono_last_error());
    std::ostringstream os;
    os << "K=" << k << "\n";
    long orbits = 0, stable = 0;
    char* rep = nullptr;
    mono_status st = mono_cycles_report(map, n, 9, &orbits, &stable, &rep);
    if (st != MONO_OK) {
        os << "error: " << mono_last_error() << "\n";
    } else {
        os << "orbits=" << orbits << " stable=" << stable << "\n" << take_string(rep);
        if (magnitudes) {
            char* mag = nullptr;
            if (mono_magnitudes_report(map, n, "1/1000000", 9, &mag) != MONO_OK)
                die(mono_last_error());
            os << take_string(mag);
        }
    }
    mono_map_free(map);
    return os.str();
}

std::string counts_lines(const std::vector<std::string>& ks, unsigned n) {
    std::ostringstream os;
    for (const auto& k : ks) {
        mono_map* map = nullptr;
        if (mono_map_model2("18/5", "12/5", "3/5", "1/20", k.c_str(), &map) != MONO_OK)
            die(mono_last_error());
        long orbits = 0, stable = 0;
        char* rep = nullptr;
        mono_status st = mono_cycles_report(map, n, 9, &orbits, &stable, &rep);
        if (st == MONO_OK) {
            take_string(rep);
            os << "K=" << k << " orbits=" << orbits << " stable=" << stable << "\n";
        } else {
            os << "K=" << k << " error=" << mono_last_error() << "\n";
        }
        mono_map_free(map);
    }
    return os.str();
}

std::string gen_table1() {
    struct Row {
        const char *a, *b, *c, *d, *k;
    };
    static const Row rows[] = {
        {"1", "1", "1/4", "1/64", "1/2"},    {"1", "1", "1/4", "1/64", "1"},
        {"1", "1", "1/4", "1/64", "2"},      {"1", "1", "1/4", "19/1024", "1"},
        {"1", "1", "1/4", "19/1024", "2"},   {"1", "1", "1/4", "19/1024", "3"},
        {"1", "1", "1/4", "1/16", "1"},      {"1", "1", "1/4", "1/16", "2"},
        {"1", "1", "1/4", "1", "1/2"},       {"1", "1", "1/4", "1", "1"},
        {"1", "1", "3/8", "1/64", "1/8"},    {"1", "1", "3/8", "1/64", "1"},
        {"1", "1", "3/8", "1/32", "1/4"},    {"1", "1", "3/8", "1/32", "1"},
        {"1", "1", "3/8", "1/32", "17"},     {"1", "1", "3/8", "49/1024", "1"},
        {"1", "1", "3/8", "49/1024", "4"},   {"1", "1", "3/8", "49/1024", "8"},
        {"1", "1", "3/8", "1/16", "1"},      {"1", "1", "3/8", "1/16", "3"},
        {"1", "1", "3/8", "1", "1/2"},       {"1", "1", "3/8", "1", "1"},
        {"1", "1", "15/32", "1/16", "1/2"},  {"1", "1", "15/32", "1/16", "1"},
        {"1", "1", "15/32", "3/32", "1"},    {"1", "1", "15/32", "3/32", "8"},
        {"1", "1", "15/32", "1", "1/2"},     {"1", "1", "15/32", "1", "1"},
        {"1", "1", "1", "1", "1/2"},         {"1", "1", "1", "1", "1"},
    };
    std::ostringstream os;
    for (const Row& r : rows) {
        mono_map* map = nullptr;
        if (mono_map_model2(r.a, r.b, r.c, r.d, r.k, &map) != MONO_OK) die(mono_last_error());
        char* rep = nullptr;
        if (mono_stability_report(map, 9, &rep) != MONO_OK) die(mono_last_error());
        os << "probe a=" << r.a << " b=" << r.b << " c=" << r.c << " d=" << r.d
           << " K=" << r.k << "\n"
           << take_string(rep);
        mono_map_free(map);
    }
    return os.str();
}

std::string gen_fig2() {
    std::ostringstream os;
    for (int i = 0; i <= 10; ++i) {
        for (int j = 1; j <= 12; ++j) {
            char a[16], k[16];
            std::snprintf(a, sizeof a, "%d/4", 10 + i);  // a = 2.5 .. 5.0
            std::snprintf(k, sizeof k, "%d/4", j);       // K = 0.25 .. 3.0
            mono_map* map = nullptr;
            if (mono_map_model2(a, "12/5", "3/5", "1/20", k, &map) != MONO_OK)
                die(mono_last_error());
            long orbits = 0, stable = 0;
            char* rep = nullptr;
            mono_status st = mono_cycles_report(map, 1, 9, &orbits, &stable, &rep);
            if (st == MONO_OK) {
                take_string(rep);
                os << "a=" << a << " K=" << k << " equilibria=" << orbits
                   << " stable=" << stable << "\n";
            } else {
                os << "a=" << a << " K=" << k << " nonhyperbolic\n";
            }
            mono_map_free(map);
        }
    }
    return os.str();
}

std::string gen_fig4() {
    std::ostringstream os;
    for (int i = 1; i <= 10; ++i) {
        for (int j = 1; j <= 10; ++j) {
            char e[16], f[16];
            std::snprintf(e, sizeof e, "%d/5", i);  // e = 0.2 .. 2.0
            std::snprintf(f, sizeof f, "%d/5", j);
            os << "e=" << e << " f=" << f;
            mono_map* map = nullptr;
            if (mono_map_model1(e, f, &map) != MONO_OK) die(mono_last_error());
            for (unsigned n : {1u, 2u, 4u}) {
                long orbits = 0, stable = 0;
                char* rep = nullptr;
                mono_status st = mono_cycles_report(map, n, 9, &orbits, &stable, &rep);
                if (st == MONO_OK) {
                    take_string(rep);
                    os << " stable" << n << "=" << stable;
                } else {
                    os << " stable" << n << "=x";
                }
            }
            os << "\n";
            mono_map_free(map);
        }
    }
    return os.str();
}

std::string gen_fig8() {
    std::ostringstream os;
    for (int i = 49; i <= 66; ++i) {  // K = 2.45 .. 3.30 step 0.05
        char k[16];
        std::snprintf(k, sizeof k, "%d/20", i);
        mono_map* map = nullptr;
        if (mono_map_model2("18/5", "12/5", "3/5", "1/20", k, &map) != MONO_OK)
            die(mono_last_error());
        char* mag = nullptr;
        mono_status st = mono_magnitudes_report(map, 3, "1/1000000", 9, &mag);
        os << "K=" << k << "\n";
        if (st == MONO_OK)
            os << take_string(mag);
        else
            os << "error: " << mono_last_error() << "\n";
        mono_map_free(map);
    }
    return os.str();
}

std::string gen_ppm(int model, const double* params, char sx, double xlo, double xhi, char sy,
                    double ylo, double yhi, double x0) {
    std::string tmp = default_out_dir() + "/.monotool_tmp.ppm";
    if (mono_bif2d_ppm(model, params, sx, xlo, xhi, sy, ylo, yhi, 128, 128, x0,
                       tmp.c_str()) != MONO_OK)
        die(mono_last_error());
    std::ifstream in(tmp, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    std::remove(tmp.c_str());
    return os.str();
}

std::string generate_target(const std::string& target) {
    if (target == "table1") return gen_table1();
    if (target == "table3")
        return counts_lines({"2", "2.42", "2.5", "3.303", "3.35"}, 3);
    if (target == "table4")
        return counts_lines({"2", "2.1", "2.3", "2.5803", "2.8", "3.065", "3.2", "3.27924",
                             "3.3", "3.319885", "3.33"},
                            4);
    if (target == "table5")
        return counts_lines({"2",        "2.325",    "2.4",      "2.5101",  "2.6",
                             "2.633",    "2.8",      "2.9977",   "3.05",    "3.11305",
                             "3.15",     "3.19734",  "3.21",     "3.21943", "3.25",
                             "3.269615", "3.28",     "3.288061", "3.3",     "3.314978",
                             "3.32",     "3.3240085", "3.33",    "3.33296184", "3.34"},
                            5);
    if (target == "fig2") return gen_fig2();
    if (target == "fig3") {
        mono_map* map = nullptr;
        if (mono_map_model1("0.6", "1.2", &map) != MONO_OK) die(mono_last_error());
        char *rep = nullptr, *mag = nullptr;
        if (mono_cycles_report(map, 4, 9, nullptr, nullptr, &rep) != MONO_OK)
            die(mono_last_error());
        if (mono_magnitudes_report(map, 4, "1/1000000", 9, &mag) != MONO_OK)
            die(mono_last_error());
        std::string out = take_string(rep) + take_string(mag);
        mono_map_free(map);
        return out;
    }
    if (target == "fig4") return gen_fig4();
    if (target == "fig5") {
        double p[2] = {1.0, 1.0};
        return gen_ppm(1, p, 'e', 0.6, 1.6, 'f', 0.6, 1.6, 1.0);
    }
    if (target == "fig6") {
        double p[2] = {1.0, 1.0};
        char* csv = nullptr;
        if (mono_bif1d_csv(1, p, 'f', 0.6, 1.6, 201, 1.1, &csv) != MONO_OK)
            die(mono_last_error());
        return take_string(csv);
    }
    if (target == "fig7") return std_k_map_report("3.303", 3, true);
    if (target == "fig8") return gen_fig8();
    if (target == "fig9") return std_k_map_report("3.319885", 4, true);
    if (target == "fig10") return std_k_map_report("3.33296183", 5, false);
    if (target == "fig11") {
        double p[5] = {3.6, 2.4, 0.6, 0.05, 1.0};
        return gen_ppm(2, p, 'a', 2.5, 5.0, 'K', 0.0, 3.0, 1.0);
    }
    die("unknown reproduce target: " + target);
}

bool target_is_binary(const std::string& target) {
    return target == "fig5" || target == "fig11";
}

int run_reproduce(const std::string& target, const std::string& data_dir, bool update) {
    std::string path =
        data_dir + "/" + target + (target_is_binary(target) ? ".ppm" : ".txt");
    std::string generated = generate_target(target);
    if (update) {
        std::ofstream out(path, std::ios::binary);
        if (!out) die("cannot write " + path);
        out << generated;
        std::cout << target << ": golden updated (" << generated.size() << " bytes)\n";
        return 0;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) die("missing golden file " + path + " (run with --update to create)");
    std::ostringstream os;
    os << in.rdbuf();
    std::string golden = os.str();
    if (golden == generated) {
        std::cout << target << ": OK (" << generated.size() << " bytes match)\n";
        return 0;
    }
    if (target_is_binary(target)) {
        std::size_t i = 0;
        while (i < golden.size() && i < generated.size() && golden[i] == generated[i]) ++i;
        std::cerr << target << ": MISMATCH at byte " << i << "\n";
        return 2;
    }
    std::istringstream got(generated), want(golden);
    std::string gline, wline;
    std::size_t line = 0;
    while (true) {
        ++line;
        bool g = static_cast<bool>(std::getline(got, gline));
        bool w = static_cast<bool>(std::getline(want, wline));
        if (!g && !w) break;
        if (gline != wline || g != w) {
            std::cerr << target << ": MISMATCH at line " << line << "\n";
            std::cerr << "  expected: " << (w ? wline : "<eof>") << "\n";
            std::cerr << "  got:      " << (g ? gline : "<eof>") << "\n";
            return 2;
        }
    }
    std::cerr << target << ": MISMATCH (content differs)\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numerical analysis of monopoly iteration maps"};
    app.require_subcommand(1);
    app.fallthrough();

    bool float_only = false;
    app.add_flag("--float-only", float_only,
                 "restrict to floating-point subcommands (bif1d, bif2d)");

    unsigned decimals = 9;
    app.add_option("--decimals", decimals, "decimal digits in reports");
    std::string out_path;
    app.add_option("--out", out_path, "output file (default stdout / MONOTOOL_OUT)");
    int threads = 1;
    app.add_option("--threads", threads, "worker thread hint (accepted, single-threaded)");

    ParamFlags params;

    auto* c_stab = app.add_subcommand("stability", "equilibrium count, condition signs");
    add_param_flags(c_stab, params);

    auto* c_cycles = app.add_subcommand("cycles", "enumerate and classify n-cycles");
    add_param_flags(c_cycles, params);
    unsigned n = 2;
    c_cycles->add_option("--n", n, "cycle order (1..6)");
    bool with_magnitudes = false;
    c_cycles->add_flag("--magnitudes", with_magnitudes, "append magnitude enclosures");

    auto* c_thr = app.add_subcommand("thresholds", "K thresholds at the standard parameters");
    unsigned thr_n = 2;
    std::string thr_range = "1:4", thr_tol = "1/1000000", thr_min_split = "0";
    c_thr->add_option("--n", thr_n, "cycle order");
    c_thr->add_option("--range", thr_range, "K search range lo:hi");
    c_thr->add_option("--tol", thr_tol, "bracket width (rational)");
    c_thr->add_option("--min-split", thr_min_split, "minimum split width (rational)");

    auto* c_chaos = app.add_subcommand("chaos", "chaos certificates");
    add_param_flags(c_chaos, params);
    std::string method;
    c_chaos->add_option("--method", method, "period3 | snapback (default per model)");

    auto* c_b1 = app.add_subcommand("bif1d", "one-parameter bifurcation scan (CSV)");
    add_param_flags(c_b1, params);
    std::string scan = "f", range = "0.6:1.6";
    unsigned res = 1000;
    double x0 = 1.0;
    c_b1->add_option("--scan", scan, "scanned parameter letter");
    c_b1->add_option("--range", range, "scan range lo:hi");
    c_b1->add_option("--res", res, "number of samples");
    c_b1->add_option("--x0", x0, "initial state");

    auto* c_b2 = app.add_subcommand("bif2d", "two-parameter bifurcation grid (PPM)");
    add_param_flags(c_b2, params);
    std::string scan_x = "e", range_x = "0.6:1.6", scan_y = "f", range_y = "0.6:1.6";
    unsigned res_x = 400, res_y = 400;
    c_b2->add_option("--scan-x", scan_x, "x-axis parameter letter");
    c_b2->add_option("--range-x", range_x, "x-axis range lo:hi");
    c_b2->add_option("--scan-y", scan_y, "y-axis parameter letter");
    c_b2->add_option("--range-y", range_y, "y-axis range lo:hi");
    c_b2->add_option("--res", res_x, "grid width in cells");
    c_b2->add_option("--res-y", res_y, "grid height in cells");
    c_b2->add_option("--x0", x0, "initial state");

    auto* c_bas = app.add_subcommand("basins", "basin-of-attraction scan (JSON)");
    add_param_flags(c_bas, params);
    std::string bas_range = "0.01:8";
    unsigned bas_res = 4000;
    c_bas->add_option("--range", bas_range, "initial-state range lo:hi");
    c_bas->add_option("--res", bas_res, "number of scan points");

    auto* c_rep = app.add_subcommand("reproduce", "regenerate a table/figure and diff goldens");
    std::string target, data_dir;
    bool update = false;
    c_rep->add_option("target", target, "table1|table3|table4|table5|fig2..fig11")->required();
    c_rep->add_option("--data", data_dir, "golden directory (default data/golden)");
    c_rep->add_flag("--update", update, "rewrite the golden file instead of diffing");

    CLI11_PARSE(app, argc, argv);

    if (float_only && !(c_b1->parsed() || c_b2->parsed()))
        die("--float-only permits only bif1d and bif2d");

    if (c_stab->parsed()) {
        mono_map* map = make_map(params);
        char* rep = nullptr;
        if (mono_stability_report(map, decimals, &rep) != MONO_OK) die(mono_last_error());
        emit(take_string(rep), out_path);
        mono_map_free(map);
        return 0;
    }
    if (c_cycles->parsed()) {
        mono_map* map = make_map(params);
        long orbits = 0, stable = 0;
        char* rep = nullptr;
        if (mono_cycles_report(map, n, decimals, &orbits, &stable, &rep) != MONO_OK)
            die(mono_last_error());
        std::ostringstream os;
        os << "orbits=" << orbits << " stable=" << stable << "\n" << take_string(rep);
        if (with_magnitudes) {
            char* mag = nullptr;
            if (mono_magnitudes_report(map, n, "1/1000000", decimals, &mag) != MONO_OK)
                die(mono_last_error());
            os << take_string(mag);
        }
        emit(os.str(), out_path);
        mono_map_free(map);
        return 0;
    }
    if (c_thr->parsed()) {
        std::size_t colon = thr_range.find(':');
        if (colon == std::string::npos) die("--range must be lo:hi");
        char* rep = nullptr;
        if (mono_thresholds_report(thr_n, thr_range.substr(0, colon).c_str(),
                                   thr_range.substr(colon + 1).c_str(), thr_tol.c_str(),
                                   thr_min_split.c_str(), decimals, &rep) != MONO_OK)
            die(mono_last_error());
        emit(take_string(rep), out_path);
        return 0;
    }
    if (c_chaos->parsed()) {
        if (method.empty()) method = params.model == 1 ? "snapback" : "period3";
        mono_map* map = make_map(params);
        char* rep = nullptr;
        if (mono_chaos_report(map, method.c_str(), decimals, &rep) != MONO_OK)
            die(mono_last_error());
        emit(take_string(rep), out_path);
        mono_map_free(map);
        return 0;
    }
    if (c_b1->parsed()) {
        double lo, hi, p[5];
        if (!parse_range(range, lo, hi)) die("--range must be lo:hi with lo < hi");
        fill_float_params(params, p);
        char* csv = nullptr;
        if (mono_bif1d_csv(params.model, p, scan[0], lo, hi, res, x0, &csv) != MONO_OK)
            die(mono_last_error());
        emit(take_string(csv), out_path);
        return 0;
    }
    if (c_b2->parsed()) {
        double xlo, xhi, ylo, yhi, p[5];
        if (!parse_range(range_x, xlo, xhi) || !parse_range(range_y, ylo, yhi))
            die("--range-x/--range-y must be lo:hi with lo < hi");
        fill_float_params(params, p);
        std::string path = out_path.empty() ? default_out_dir() + "/bif2d.ppm" : out_path;
        if (mono_bif2d_ppm(params.model, p, scan_x[0], xlo, xhi, scan_y[0], ylo, yhi, res_x,
                           res_y, x0, path.c_str()) != MONO_OK)
            die(mono_last_error());
        std::cout << "wrote " << path << "\n";
        return 0;
    }
    if (c_bas->parsed()) {
        double lo, hi;
        if (!parse_range(bas_range, lo, hi)) die("--range must be lo:hi with lo < hi");
        mono_map* map = make_map(params);
        char* json = nullptr;
        if (mono_basins_json(map, lo, hi, bas_res, &json) != MONO_OK) die(mono_last_error());
        emit(take_string(json), out_path);
        mono_map_free(map);
        return 0;
    }
    if (c_rep->parsed()) {
        if (data_dir.empty()) {
            const char* env = std::getenv("MONOTOOL_DATA");
            data_dir = env ? env : "data/golden";
        }
        return run_reproduce(target, data_dir, update);
    }
    return 0;
}
