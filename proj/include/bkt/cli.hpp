/*
   Copyright 2026 The bkt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BKT_CLI_HPP
#define BKT_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkt/bounds.hpp"
#include "bkt/gauss.hpp"
#include "bkt/harness.hpp"
#include "bkt/ideal.hpp"
#include "bkt/newton.hpp"
#include "bkt/witt.hpp"

namespace bkt::cli {

inline constexpr const char* version = "0.1.0";

enum Exit : int { ok = 0, verification_failed = 1, usage = 2 };

class UsageError : public Error {
   public:
    using Error::Error;
};

// "3", "1..6", "2,3,5" or any comma list of those.
inline std::vector<unsigned> parse_range(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    auto num = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad range item '" + s + "' in '" + text + "'");
        return static_cast<unsigned>(std::stoul(s));
    };
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(num(item));
            continue;
        }
        const unsigned lo = num(item.substr(0, dots)), hi = num(item.substr(dots + 2));
        if (lo > hi) throw UsageError("empty range '" + item + "'");
        for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty range");
    return out;
}

inline void require_primes(const std::vector<unsigned>& ps) {
    for (unsigned p : ps)
        if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

inline void require_positive(const std::vector<unsigned>& xs, const char* what) {
    for (unsigned x : xs)
        if (x == 0) throw UsageError(std::string(what) + " must be at least 1");
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline nlohmann::ordered_json cell_value(const std::string& s) {
    if (!s.empty() && s.size() < 19 && s.find_first_not_of("0123456789") == std::string::npos)
        return std::stoull(s);
    return s;
}

inline void emit(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
        out << '\n';
        for (const auto& r : t.rows) {
            for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
            out << '\n';
        }
    } else if (format == "jsonl") {
        for (const auto& r : t.rows) {
            nlohmann::ordered_json o;
            for (std::size_t i = 0; i < r.size(); ++i) o[t.header[i]] = cell_value(r[i]);
            out << o.dump() << '\n';
        }
    } else {
        std::vector<std::size_t> w(t.header.size());
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i) s += "  ";
                s += r[i] + std::string(w[i] - r[i].size(), ' ');
            }
            s.erase(s.find_last_not_of(' ') + 1);
            out << s << '\n';
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
    }
}

// key: value lines; arrays joined with "; ", booleans as yes/no.
inline void emit_record(const nlohmann::ordered_json& o, const std::string& format, std::ostream& out) {
    if (format == "jsonl") {
        out << o.dump() << '\n';
        return;
    }
    for (const auto& [k, v] : o.items()) {
        out << k << ": ";
        if (v.is_string()) {
            out << v.get<std::string>();
        } else if (v.is_boolean()) {
            out << (v.get<bool>() ? "yes" : "no");
        } else if (v.is_array()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                out << (i ? "; " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
        } else {
            out << v.dump();
        }
        out << '\n';
    }
}

struct IdealFile {
    unsigned p = 0, N = 0, M = 0, e = 0;
    std::vector<BigInt> E;
    std::vector<std::string> generators;
};

/*
 * Header "p N M e E=<poly>", then one generator per line. Blank lines and
 * lines starting with '#' are skipped.
 */
inline IdealFile parse_ideal_file(std::istream& in) {
    IdealFile f;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        line = line.substr(start);
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (header) {
            f.generators.push_back(line);
            continue;
        }
        std::istringstream hs(line);
        std::string rest;
        if (!(hs >> f.p >> f.N >> f.M >> f.e)) throw ParseError("header must read 'p N M e E=<poly>'");
        std::getline(hs, rest);
        rest.erase(0, rest.find_first_not_of(" \t"));
        if (rest.rfind("E=", 0) != 0) throw ParseError("header must end with E=<poly>");
        f.E = detail::coeffs_of(rest.substr(2));
        if (f.E.size() != f.e + 1) throw ParseError("E must have degree e = " + std::to_string(f.e));
        header = true;
    }
    if (!header) throw ParseError("missing header line");
    if (f.generators.empty()) throw ParseError("no generators");
    if (!is_prime(f.p)) throw ParseError(std::to_string(f.p) + " is not prime");
    return f;
}

inline IdealFile read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return parse_ideal_file(in);
}

template <class Int>
CofiniteIdeal<Int> build_ideal(const IdealFile& f) {
    const auto params = make_eisenstein<Int>(f.p, f.N, f.M, f.E);
    std::vector<PrecSeries<Int>> gens;
    for (const auto& g : f.generators) gens.push_back(parse_series(g, params));
    return CofiniteIdeal<Int>(std::move(gens));
}

template <class Int>
int analyze_with(const IdealFile& f, unsigned j, unsigned ell, const std::string& format, std::ostream& out) {
    const auto J = build_ideal<Int>(f);
    const auto sit = situation_check(J, j, ell);
    if (!sit.cond_A) {
        const auto inv = invariants(J);
        nlohmann::ordered_json o;
        o["p"] = f.p;
        o["N"] = f.N;
        o["M"] = f.M;
        o["e"] = f.e;
        o["E"] = to_string(PrecSeries<Int>::eisenstein(J.params()));
        std::vector<std::string> gens;
        for (const auto& g : J.generators()) gens.push_back(to_string(g));
        o["generators"] = gens;
        o["j"] = j;
        o["ell"] = ell;
        o["sigma"] = inv.sigma;
        o["rho"] = inv.rho;
        o["length"] = inv.length;
        o["cond_A"] = false;
        o["cond_B"] = *sit.cond_B;
        o["verdict"] = "not a situation instance, bounds not asserted";
        emit_record(o, format, out);
        return ok;
    }
    InstanceConfig cfg;
    cfg.p = f.p, cfg.e = f.e, cfg.j = j, cfg.ell = ell;
    const auto row = verify_instance(J, cfg);
    if (row.inconclusive) throw InsufficientPrecision(*row.inconclusive);
    auto flat = to_json(row);
    flat["cond_A"] = true;
    if (row.prop218) flat["p_power_exponent"] = row.prop218->exponent;
    nlohmann::ordered_json o;
    for (const char* k : {"p", "N", "M", "e", "E", "generators", "j", "ell", "sigma", "rho", "length", "cond_A",
                          "cond_B", "sigma_bound", "sigma_ok", "d", "rho_ok", "j1_bound", "j1_ok", "prop218",
                          "p_power_exponent", "p_power_in_J", "length_bound", "length_ok", "diagonal_in_J",
                          "f_matches_hull", "concave", "frobenius_subadditive", "f_below_h", "stabilized",
                          "frobenius_rescaling"})
        if (flat.contains(k)) o[k] = flat[k];
    o["verdict"] = row.failed() ? "FAIL" : "pass";
    emit_record(o, format, out);
    return row.failed() ? verification_failed : ok;
}

template <class Int>
int gauss_with(const IdealFile& f, unsigned j, Rational from, Rational to, Rational step, const std::string& format,
               std::ostream& out) {
    const auto J = build_ideal<Int>(f);
    const auto inv = invariants(J);
    const auto fJ = f_of_ideal(J);
    const auto h = h_function(f.p, inv.sigma, j, h_pieces_for(inv.rho, j));
    std::vector<Rational> rs;
    for (Rational r = from; r <= to; r += step) rs.push_back(r);
    for (const auto& b : fJ.breakpoints()) rs.push_back(b);
    for (const auto& b : h.breakpoints()) rs.push_back(b);
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    Table t{{"r", "f", "h"}, {}};
    for (const auto& r : rs) t.rows.push_back({to_string(r), to_string(fJ.eval(r)), to_string(h.eval(r))});
    emit(t, format, out);
    return ok;
}

struct Options {
    std::uint64_t seed = 1;
    std::optional<unsigned> N, M;
    std::optional<std::string> format;

    std::string format_or(const std::string& dflt) const { return format.value_or(dflt); }
};

inline IdealFile with_overrides(IdealFile f, const Options& o) {
    if (o.N) f.N = *o.N;
    if (o.M) f.M = *o.M;
    return f;
}

inline Table bounds_table(const std::vector<unsigned>& ps, const std::vector<unsigned>& es,
                          const std::vector<unsigned>& js) {
    Table t{{"p", "e", "j", "n", "arg1", "arg2", "d", "crys_constant"}, {}};
    for (unsigned p : ps)
        for (unsigned e : es)
            for (unsigned j : js)
                t.rows.push_back({std::to_string(p), std::to_string(e), std::to_string(j),
                                  std::to_string(BoundInputs(p, e, j).n),
                                  std::to_string(rho_bound_argument_one(p, e, j)),
                                  to_string(rho_bound_argument_two(p, e, j)), std::to_string(d_bound(p, e, j)),
                                  std::to_string(crys_constant(p, e, j + 1))});
    return t;
}

inline Table mu_table(unsigned p, unsigned j, unsigned levels, std::optional<Rational> budget) {
    const auto mu = mu_expansion(p, j, levels, budget);
    Table t{{"index", "valuation", "known_below"}, {}};
    for (unsigned n = 0; n < levels; ++n) {
        const auto& x = mu.coord(n);
        std::string v;
        if (x.is_exact_zero())
            v = "inf";
        else if (auto val = x.valuation())
            v = to_string(*val);
        else
            v = ">=" + to_string(*x.cutoff());
        t.rows.push_back({std::to_string(n), v, x.cutoff() ? to_string(*x.cutoff()) : "exact"});
    }
    return t;
}

inline int newton_report(unsigned p, unsigned j, unsigned lmax, const std::string& format, std::ostream& out) {
    const auto rep = verify_mu_lemma(p, j, lmax);
    Table t{{"index", "computed", "expected"}, {}};
    for (const auto& r : rep.rows)
        t.rows.push_back({std::to_string(r.index), r.computed ? to_string(*r.computed) : "?", to_string(r.expected)});
    const std::string indexing = rep.statement_indexing ? (rep.shifted_indexing ? "both" : "statement")
                                                        : (rep.shifted_indexing ? "shifted" : "neither");
    if (format == "csv") {
        emit(t, format, out);
    } else if (format == "jsonl") {
        for (const auto& r : rep.rows) {
            nlohmann::ordered_json o;
            o["ell"] = r.ell;
            o["index"] = r.index;
            o["computed"] = r.computed ? to_string(*r.computed) : "?";
            o["expected"] = to_string(r.expected);
            o["known_below"] = to_string(r.known_below);
            o["pass"] = r.pass;
            out << o.dump() << '\n';
        }
        nlohmann::ordered_json s;
        s["p"] = p;
        s["j"] = j;
        s["ell_max"] = lmax;
        s["levels"] = rep.levels;
        s["budget"] = to_string(rep.budget);
        s["scaling_ok"] = rep.scaling_ok;
        s["indexing"] = indexing;
        s["pass"] = rep.pass();
        out << s.dump() << '\n';
    } else {
        out << "p: " << p << "\nj: " << j << "\nell_max: " << lmax << "\nlevels: " << rep.levels
            << "\nbudget: " << to_string(rep.budget) << "\n\n";
        Table full{{"ell", "index", "computed", "expected", "known_below", "pass"}, {}};
        for (const auto& r : rep.rows)
            full.rows.push_back({std::to_string(r.ell), std::to_string(r.index),
                                 r.computed ? to_string(*r.computed) : "?", to_string(r.expected),
                                 to_string(r.known_below), r.pass ? "yes" : "NO"});
        emit(full, "text", out);
        out << "\nscaling: " << (rep.scaling_ok ? "pass" : "FAIL") << "\nindexing: " << indexing
            << "\nverdict: " << (rep.pass() ? "pass" : "FAIL") << '\n';
    }
    return rep.pass() ? ok : verification_failed;
}

inline Table suite_table(const SuiteResult& r) {
    Table t{{"p", "e", "j", "ell", "N", "M", "instances", "passed", "failed", "inconclusive", "cond_B", "max_sigma",
             "max_rho", "d"},
            {}};
    for (const auto& c : r.cells) {
        const auto& s = c.summary;
        t.rows.push_back({std::to_string(s.p), std::to_string(s.e), std::to_string(s.j), std::to_string(s.ell),
                          std::to_string(s.N), std::to_string(s.M), std::to_string(s.instances),
                          std::to_string(s.passed), std::to_string(s.failed), std::to_string(s.inconclusive),
                          std::to_string(s.cond_B), std::to_string(s.max_sigma), std::to_string(s.max_rho),
                          std::to_string(s.d)});
    }
    return t;
}

inline void check_format(const std::string& f, std::initializer_list<const char*> allowed, const char* cmd) {
    for (const char* a : allowed)
        if (f == a) return;
    throw UsageError(std::string(cmd) + " does not support --format " + f);
}

/*
 * Parses args (without the program name), runs one subcommand, and returns
 * 0 on success, 1 when a verification fails, 2 on usage errors.
 */
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the Breuil-Kisin ring, its ideals, and Witt vectors over F_p((t^{1/p^oo}))",
                 "bkt"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    bool show_version = false;
    app.add_option("--seed", opt.seed, "RNG seed for search")->capture_default_str();
    app.add_option("--precision-N", opt.N, "p-adic precision N (overrides defaults and file headers)")
        ->check(CLI::PositiveNumber);
    app.add_option("--precision-M", opt.M, "u-adic precision M (overrides defaults and file headers)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "Output format; each subcommand documents its default")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    app.add_flag("--version", show_version, "Print the version on stderr and exit");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Bound tables (CSV by default)");
    bounds->require_subcommand(1);
    std::string bp = "2,3,5", be = "1..6", bj = "1..3";
    auto* btable = bounds->add_subcommand(
        "table", "Columns p,e,j,n,arg1,arg2,d,crys_constant; crys_constant uses i = j + 1. Ranges: 3, 1..6, 2,3,5");
    btable->add_option("--p", bp, "primes")->capture_default_str();
    btable->add_option("--e", be, "ramification degrees")->capture_default_str();
    btable->add_option("--j", bj, "exponents j")->capture_default_str();
    unsigned op = 0, oe = 0, oj = 0;
    auto* bone = bounds->add_subcommand("one", "One row of the bounds table");
    bone->add_option("--p", op)->required();
    bone->add_option("--e", oe)->required()->check(CLI::PositiveNumber);
    bone->add_option("--j", oj)->required()->check(CLI::PositiveNumber);

    // ideal
    auto* ideal = app.add_subcommand("ideal", "Ideal files");
    ideal->require_subcommand(1);
    std::string file;
    unsigned ij = 1;
    std::optional<unsigned> iell;
    auto* analyze = ideal->add_subcommand(
        "analyze", "Invariants, situation conditions and bound checks (text by default; jsonl also works)");
    analyze->add_option("--file", file, "ideal file: header 'p N M e E=<poly>', then one generator per line")
        ->required();
    analyze->add_option("--j", ij)->required()->check(CLI::PositiveNumber);
    analyze->add_option("--ell", iell, "defaults to j + 1")->check(CLI::PositiveNumber);

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Characteristic functions");
    gauss->require_subcommand(1);
    std::string gfrom = "0", gto, gstep = "1/4";
    auto* plot = gauss->add_subcommand(
        "plot", "CSV of r, f_J(r), h(r) on a grid plus every breakpoint; rationals printed exactly");
    plot->add_option("--file", file)->required();
    plot->add_option("--j", ij)->required()->check(CLI::PositiveNumber);
    plot->add_option("--from", gfrom, "grid start")->capture_default_str();
    plot->add_option("--to", gto, "grid end, default 2pj/(p-1)");
    plot->add_option("--step", gstep, "grid step")->capture_default_str();

    // witt
    auto* witt = app.add_subcommand("witt", "Witt vectors");
    witt->require_subcommand(1);
    unsigned wp = 3, wj = 1, wl = 3;
    std::string wbudget;
    auto* mu = witt->add_subcommand("mu", "Coordinates of mu^j: index, valuation, known_below (text by default)");
    mu->add_option("--p", wp, "odd prime")->required();
    mu->add_option("--j", wj)->capture_default_str()->check(CLI::PositiveNumber);
    mu->add_option("--levels", wl, "number of coordinates")->required()->check(CLI::PositiveNumber);
    mu->add_option("--budget", wbudget, "valuation budget at level 0 (default derived from j and levels)");

    // newton
    auto* newton = app.add_subcommand("newton", "Newton polygons");
    newton->require_subcommand(1);
    unsigned np = 3, nj = 1, nl = 2;
    auto* nverify = newton->add_subcommand(
        "verify", "Valuations of mu^j at indices j l against j p / (p^l (p - 1)); csv gives index,computed,expected");
    nverify->add_option("--p", np, "odd prime")->required();
    nverify->add_option("--j", nj)->required()->check(CLI::PositiveNumber);
    nverify->add_option("--lmax", nl)->required();

    // search
    auto* search = app.add_subcommand("search", "Randomized situation instances, JSON lines (text/csv: per-cell summary)");
    std::string sp = "2,3,5", se = "1..6", sj = "1..3", replay_file;
    std::optional<unsigned> sell;
    unsigned scount = 200;
    search->add_option("--p", sp, "primes")->capture_default_str();
    search->add_option("--e", se)->capture_default_str();
    search->add_option("--j", sj)->capture_default_str();
    search->add_option("--ell", sell, "defaults to j + 1");
    search->add_option("--count", scount, "instances per cell")->capture_default_str();
    search->add_option("--replay", replay_file, "re-verify the rows of a JSON-lines file");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (std::find(args.begin(), args.end(), "--version") != args.end()) {
            err << "bkt " << version << '\n';
            return ok;
        }
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        app.exit(e, sink, err);
        return usage;
    }

    try {
        if (btable->parsed()) {
            const auto ps = parse_range(bp), es = parse_range(be), js = parse_range(bj);
            require_primes(ps);
            require_positive(es, "e");
            require_positive(js, "j");
            emit(bounds_table(ps, es, js), opt.format_or("csv"), out);
            return ok;
        }
        if (bone->parsed()) {
            require_primes({op});
            emit(bounds_table({op}, {oe}, {oj}), opt.format_or("csv"), out);
            return ok;
        }
        if (analyze->parsed()) {
            const auto fmt = opt.format_or("text");
            check_format(fmt, {"text", "jsonl"}, "ideal analyze");
            const auto f = with_overrides(read_ideal_file(file), opt);
            const unsigned ell = iell.value_or(ij + 1);
            return fits_word(f.p, f.N) ? analyze_with<std::uint64_t>(f, ij, ell, fmt, out)
                                       : analyze_with<BigInt>(f, ij, ell, fmt, out);
        }
        if (plot->parsed()) {
            const auto f = with_overrides(read_ideal_file(file), opt);
            const Rational from = parse_rational(gfrom), step = parse_rational(gstep);
            const Rational to = gto.empty() ? Rational(2 * f.p * ij, f.p - 1) : parse_rational(gto);
            if (step <= Rational(0) || from < Rational(0)) throw UsageError("need --from >= 0 and --step > 0");
            const auto fmt = opt.format_or("csv");
            return fits_word(f.p, f.N) ? gauss_with<std::uint64_t>(f, ij, from, to, step, fmt, out)
                                       : gauss_with<BigInt>(f, ij, from, to, step, fmt, out);
        }
        if (mu->parsed()) {
            if (!is_prime(wp) || wp == 2) throw UsageError("--p must be an odd prime");
            std::optional<Rational> b;
            if (!wbudget.empty()) b = parse_rational(wbudget);
            emit(mu_table(wp, wj, wl, b), opt.format_or("text"), out);
            return ok;
        }
        if (nverify->parsed()) {
            if (!is_prime(np) || np == 2) throw UsageError("--p must be an odd prime");
            return newton_report(np, nj, nl, opt.format_or("text"), out);
        }
        if (search->parsed()) {
            const auto fmt = opt.format_or("jsonl");
            if (!replay_file.empty()) {
                check_format(fmt, {"jsonl"}, "search --replay");
                std::ifstream in(replay_file);
                if (!in) throw UsageError("cannot open " + replay_file);
                bool failed = false;
                for (const auto& r : replay(in)) {
                    out << to_json(r).dump() << '\n';
                    failed = failed || r.failed();
                }
                return failed ? verification_failed : ok;
            }
            SuiteGrid g;
            g.ps = parse_range(sp);
            g.es = parse_range(se);
            g.js = parse_range(sj);
            require_primes(g.ps);
            require_positive(g.es, "e");
            require_positive(g.js, "j");
            g.ell = sell;
            g.count = scount;
            g.seed = opt.seed;
            g.N = opt.N;
            g.M = opt.M;
            const auto res = run_suite(g);
            if (fmt == "jsonl")
                write_jsonl(out, res);
            else
                emit(suite_table(res), fmt, out);
            if (res.inconclusive())
                err << "warning: " << res.inconclusive() << " inconclusive rows; raise precision\n";
            return res.ok() ? ok : verification_failed;
        }
    } catch (const UsageError& e) {
        err << "bkt: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        err << "bkt: " << e.what() << '\n';
        return usage;
    } catch (const NotEisenstein& e) {
        err << "bkt: " << e.what() << '\n';
        return usage;
    } catch (const InsufficientPrecision& e) {
        err << "bkt: " << e.what() << " (try --precision-N / --precision-M)\n";
        return usage;
    } catch (const NotCofiniteAtPrecision& e) {
        err << "bkt: " << e.what() << " (try --precision-N / --precision-M)\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "bkt: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "bkt: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace bkt::cli

#endif
