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

#ifndef BKT_HARNESS_HPP
#define BKT_HARNESS_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bkt/bounds.hpp"
#include "bkt/gauss.hpp"
#include "bkt/ideal.hpp"

namespace bkt {

struct Precision {
    unsigned N, M;
};

/*
 * M has room for phi of anything with u^{sigma_max + 1} in it and for E^ell;
 * N sits above every rho the bound allows.
 */
inline Precision default_precision(unsigned p, unsigned e, unsigned j, unsigned ell) {
    const unsigned top = std::max(j, ell);
    const unsigned sigma_max = static_cast<unsigned>(1ULL * e * j / (p - 1));
    const unsigned M = std::max(p * (sigma_max + 2) + 1, e * top + 1);
    const unsigned N = static_cast<unsigned>(d_bound(p, e, j)) + top + 2;
    return {N, M};
}

struct InstanceConfig {
    unsigned p = 3, e = 1, j = 1, ell = 2;
    unsigned count = 200;
    std::uint64_t seed = 1;
    std::optional<unsigned> N, M;  // overrides

    Precision precision() const {
        auto d = default_precision(p, e, j, ell);
        return {N.value_or(d.N), M.value_or(d.M)};
    }
};

struct GaussChecks {
    bool f_matches_hull = true;   // f_J sampled against v_r over the generators
    bool concave = true;          // slopes decrease, from sigma r to the constant rho
    bool frobenius_subadditive = true;
    bool f_below_h = true;
    bool stabilized = true;       // f_J(pj/(p-1)) = rho
    bool frobenius_rescaling = true;

    bool all() const {
        return f_matches_hull && concave && frobenius_subadditive && f_below_h && stabilized && frobenius_rescaling;
    }
};

struct VerdictRow {
    unsigned index = 0;
    std::uint64_t sample_seed = 0;
    unsigned p = 0, e = 0, j = 0, ell = 0, N = 0, M = 0;
    std::string E;
    std::string family;
    std::vector<std::string> generators;
    std::optional<std::string> inconclusive;

    unsigned sigma = 0, rho = 0;
    unsigned long long length = 0;
    unsigned long long sigma_bound = 0, d = 0;
    std::optional<unsigned> j1_bound;
    bool sigma_ok = true, rho_ok = true;
    std::optional<bool> j1_ok;
    bool cond_B = false;
    std::optional<BoundednessReport> prop218;  // only when cond_B holds
    GaussChecks gauss;

    bool failed() const {
        if (inconclusive) return false;
        return !(sigma_ok && rho_ok && j1_ok.value_or(true) && (!prop218 || prop218->all()) && gauss.all());
    }
};

inline nlohmann::ordered_json to_json(const VerdictRow& r) {
    nlohmann::ordered_json o;
    o["index"] = r.index;
    o["sample_seed"] = r.sample_seed;
    o["p"] = r.p;
    o["e"] = r.e;
    o["j"] = r.j;
    o["ell"] = r.ell;
    o["N"] = r.N;
    o["M"] = r.M;
    o["E"] = r.E;
    o["family"] = r.family;
    o["generators"] = r.generators;
    if (r.inconclusive) {
        o["inconclusive"] = *r.inconclusive;
        return o;
    }
    o["sigma"] = r.sigma;
    o["rho"] = r.rho;
    o["length"] = r.length;
    o["sigma_bound"] = r.sigma_bound;
    o["d"] = r.d;
    o["sigma_ok"] = r.sigma_ok;
    o["rho_ok"] = r.rho_ok;
    if (r.j1_bound) {
        o["j1_bound"] = *r.j1_bound;
        o["j1_ok"] = *r.j1_ok;
    }
    o["cond_B"] = r.cond_B;
    if (r.prop218) {
        o["p_power_in_J"] = r.prop218->p_power_in_J;
        o["length_bound"] = r.prop218->length_bound;
        o["length_ok"] = r.prop218->length_ok;
        o["diagonal_in_J"] = r.prop218->diagonal_in_J;
    } else {
        o["prop218"] = "n/a";
    }
    o["f_matches_hull"] = r.gauss.f_matches_hull;
    o["concave"] = r.gauss.concave;
    o["frobenius_subadditive"] = r.gauss.frobenius_subadditive;
    o["f_below_h"] = r.gauss.f_below_h;
    o["stabilized"] = r.gauss.stabilized;
    o["frobenius_rescaling"] = r.gauss.frobenius_rescaling;
    o["pass"] = !r.failed();
    return o;
}

namespace detail {

template <class Int>
Rational f_from_generators(const CofiniteIdeal<Int>& J, const Rational& r) {
    const auto& rp = *J.params();
    Rational v = std::min(Rational(rp.N()), Rational(rp.M) * r);
    for (const auto& g : J.generators())
        if (!g.is_zero()) v = std::min(v, v_r_element(g, r));
    return v;
}

template <class Int>
GaussChecks gauss_checks(const CofiniteIdeal<Int>& J, unsigned j, const IdealInvariants& inv, std::mt19937_64& rng) {
    GaussChecks c;
    const unsigned p = J.params()->p();
    const auto f = f_of_ideal(J);

    const std::int64_t span = 4 * static_cast<std::int64_t>(p) * j;
    for (int s = 0; s < 20; ++s) {
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
        const Rational r(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span * den + 1)), den);
        c.f_matches_hull = c.f_matches_hull && f.eval(r) == f_from_generators(J, r);
    }

    const auto& pc = f.pieces();
    for (std::size_t i = 1; i < pc.size(); ++i)
        c.concave = c.concave && pc[i].line.slope < pc[i - 1].line.slope && pc[i].line.slope >= Rational(0);
    c.concave = c.concave && pc.front().line == Line{Rational(inv.sigma), Rational(0)} &&
                f.final_line() == Line{Rational(0), Rational(inv.rho)};

    const auto g = g_function(J.params()->e, j);
    std::vector<Rational> pts{Rational(0)};
    for (const auto& b : f.breakpoints()) {
        pts.push_back(b);
        pts.push_back(b / Rational(p));
    }
    for (const auto& b : g.breakpoints()) pts.push_back(b);
    pts.push_back(pts.back() + Rational(1));
    for (const auto& r : pts)
        c.frobenius_subadditive = c.frobenius_subadditive && f.eval(Rational(p) * r) <= f.eval(r) + g.eval(r);

    c.f_below_h = pl_leq(f, h_function(p, inv.sigma, j, h_pieces_for(inv.rho, j)));

    try {
        rho_from_f(J, j);
    } catch (const StabilizationFailure&) {
        c.stabilized = false;
    }

    const auto lhs = f_of_ideal(frobenius_ideal(J));
    const auto rhs = pl_frobenius_rescale(f, p);
    c.frobenius_rescaling = lhs.pieces().size() == rhs.pieces().size();
    for (std::size_t i = 0; c.frobenius_rescaling && i < lhs.pieces().size(); ++i)
        c.frobenius_rescaling = lhs.pieces()[i].from == rhs.pieces()[i].from && lhs.pieces()[i].line == rhs.pieces()[i].line;
    return c;
}

}  // namespace detail

/*
 * All checks for one instance that already satisfies the first Situation
 * condition. Precision trouble marks the row inconclusive instead.
 */
template <class Int>
VerdictRow verify_instance(const CofiniteIdeal<Int>& J, const InstanceConfig& cfg, std::uint64_t sample_seed = 0) {
    const auto& rp = *J.params();
    VerdictRow row;
    row.sample_seed = sample_seed;
    row.p = rp.p();
    row.e = rp.e;
    row.j = cfg.j;
    row.ell = cfg.ell;
    row.N = rp.N();
    row.M = rp.M;
    row.E = to_string(PrecSeries<Int>::eisenstein(J.params()));
    for (const auto& g : J.generators()) row.generators.push_back(to_string(g));
    try {
        const auto inv = invariants(J);
        row.sigma = inv.sigma;
        row.rho = inv.rho;
        row.length = inv.length;
        row.sigma_bound = 1ULL * rp.e * cfg.j / (rp.p() - 1);
        row.d = d_bound(rp.p(), rp.e, cfg.j);
        row.sigma_ok = inv.sigma <= row.sigma_bound;
        row.rho_ok = inv.rho <= row.d;
        if (cfg.j == 1) {
            row.j1_bound = j1_special(rp.p(), rp.e);
            row.j1_ok = inv.rho <= *row.j1_bound;
        }
        row.cond_B = situation_check(J, cfg.j, cfg.ell).cond_B.value_or(false);
        if (row.cond_B) row.prop218 = verify_boundedness(J, cfg.j, cfg.ell);
        std::mt19937_64 rng(sample_seed);
        row.gauss = detail::gauss_checks(J, cfg.j, inv, rng);
    } catch (const InsufficientPrecision& ex) {
        row.inconclusive = std::string("inconclusive, raise precision: ") + ex.what();
    } catch (const NotCofiniteAtPrecision& ex) {
        row.inconclusive = std::string("inconclusive, raise precision: ") + ex.what();
    }
    return row;
}

struct Candidate {
    std::string family;
    std::vector<std::string> generators;
};

/*
 * Heuristic proposals; situation_check decides. Families: (p^a, u^b),
 * staircases, and one generator of either perturbed by u h or p h.
 */
inline Candidate propose(std::mt19937_64& rng, unsigned p, unsigned e, unsigned j, const Precision& prec) {
    const unsigned sigma_max = static_cast<unsigned>(1ULL * e * j / (p - 1));
    const unsigned a_max = std::min<unsigned>(static_cast<unsigned>(d_bound(p, e, j)) + 1, prec.N - 1);
    const unsigned b_max = std::min(sigma_max + 1, (prec.M - 1) / p);
    auto draw = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
    std::vector<std::pair<unsigned, unsigned>> corners;
    std::string family;
    const unsigned kind = static_cast<unsigned>(rng() % 3);
    if (kind == 0 || b_max < 2 || a_max < 2) {
        family = "monomial";
        // bias toward e (j - (a - 1)) >= (p - 1) b
        unsigned a = draw(1, std::min(a_max, j + 1));
        unsigned b = draw(1, b_max);
        if (rng() % 2 && a <= j) b = std::max(1u, std::min(b, e * (j - (a - 1)) / (p - 1)));
        corners = {{a, 0}, {0, b}};
    } else {
        family = "staircase";
        const unsigned k = draw(2, std::min({4u, a_max, b_max}));
        std::set<unsigned> as{0}, bs{0};
        const unsigned top = draw(k - 1, a_max), right = draw(k - 1, b_max);
        as.insert(top);
        bs.insert(right);
        while (as.size() < k) as.insert(draw(1, top));
        while (bs.size() < k) bs.insert(draw(1, right));
        std::vector<unsigned> av(as.rbegin(), as.rend()), bv(bs.begin(), bs.end());
        for (unsigned i = 0; i < k; ++i) corners.emplace_back(av[i], bv[i]);
    }
    Candidate c;
    for (auto [a, b] : corners) {
        std::ostringstream os;
        BigInt pa = boost::multiprecision::pow(BigInt(p), a);
        os << pa;
        if (b) os << "*u^" << b;
        c.generators.push_back(os.str());
    }
    if (kind == 2) {
        family = "perturbed";
        // g + u h or g + p h, h a short sum of p^k (unit) u^i
        const BigInt mod = boost::multiprecision::pow(BigInt(p), prec.N);
        const unsigned hits = draw(1, static_cast<unsigned>(c.generators.size()));
        for (unsigned hit = 0; hit < hits; ++hit) {
            auto& g = c.generators[rng() % c.generators.size()];
            const bool by_u = rng() % 2;
            const unsigned terms = draw(1, 3);
            for (unsigned t = 0; t < terms; ++t) {
                BigInt coeff = boost::multiprecision::pow(BigInt(p), draw(0, prec.N - 1)) * (1 + rng() % (p * p));
                if (!by_u) coeff *= p;
                if (rng() % 2) coeff = mod - coeff % mod;
                const unsigned deg = draw(0, b_max) + (by_u ? 1 : 0);
                std::ostringstream os;
                os << coeff % mod << "*u^" << deg;
                g += "+" + os.str();
            }
        }
    }
    c.family = family;
    return c;
}

/*
 * Perturb an accepted instance: add a small term p^k u^i (times p or u) to one
 * generator, or adjoin a monomial. Accepted instances cluster, so walking
 * from them finds new ones far more often than fresh draws.
 */
inline Candidate mutate(std::mt19937_64& rng, const Candidate& base, unsigned p, unsigned e, unsigned j,
                        const Precision& prec) {
    const unsigned sigma_max = static_cast<unsigned>(1ULL * e * j / (p - 1));
    const unsigned a_max = std::min<unsigned>(static_cast<unsigned>(d_bound(p, e, j)) + 1, prec.N - 1);
    auto draw = [&](unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(rng() % (hi - lo + 1)); };
    Candidate c = base;
    c.family = "walk";
    const unsigned moves = draw(1, 2);
    for (unsigned m = 0; m < moves; ++m) {
        const unsigned k = draw(0, a_max), i = draw(0, sigma_max + 1);
        if (rng() % 3 == 0) {
            std::ostringstream os;
            os << boost::multiprecision::pow(BigInt(p), k) << "*u^" << i;
            c.generators.push_back(os.str());
            continue;
        }
        const bool by_u = rng() % 2;
        BigInt coeff = boost::multiprecision::pow(BigInt(p), k + (by_u ? 0 : 1)) * (1 + rng() % (p - 1));
        if (rng() % 2) coeff = boost::multiprecision::pow(BigInt(p), prec.N) - coeff;
        std::ostringstream os;
        os << "+" << coeff << "*u^" << i + (by_u ? 1 : 0);
        c.generators[rng() % c.generators.size()] += os.str();
    }
    return c;
}

struct CellSummary {
    unsigned p, e, j, ell, N, M;
    unsigned attempts = 0, last_new_attempt = 0, instances = 0, passed = 0, failed = 0, inconclusive = 0;
    bool exhausted = false;  // fewer than count rows and nothing new for a long stretch
    unsigned cond_B = 0;
    unsigned max_rho = 0, max_sigma = 0;
    unsigned long long d = 0;
    std::optional<unsigned> j1_bound;
};

inline nlohmann::ordered_json to_json(const CellSummary& s) {
    nlohmann::ordered_json o;
    o["p"] = s.p;
    o["e"] = s.e;
    o["j"] = s.j;
    o["ell"] = s.ell;
    o["N"] = s.N;
    o["M"] = s.M;
    o["attempts"] = s.attempts;
    o["last_new_attempt"] = s.last_new_attempt;
    o["exhausted"] = s.exhausted;
    o["instances"] = s.instances;
    o["passed"] = s.passed;
    o["failed"] = s.failed;
    o["inconclusive"] = s.inconclusive;
    o["cond_B"] = s.cond_B;
    o["max_rho"] = s.max_rho;
    o["d"] = s.d;
    if (s.j1_bound) o["j1_bound"] = *s.j1_bound;
    o["max_sigma"] = s.max_sigma;
    return o;
}

struct CellResult {
    CellSummary summary;
    std::vector<VerdictRow> rows;
};

namespace detail {

template <class Int>
CellResult run_cell_with(const InstanceConfig& cfg, const Precision& prec) {
    CellResult res;
    auto& S = res.summary;
    S = CellSummary{cfg.p, cfg.e, cfg.j, cfg.ell, prec.N, prec.M};
    S.d = d_bound(cfg.p, cfg.e, cfg.j);
    if (cfg.j == 1) S.j1_bound = j1_special(cfg.p, cfg.e);
    const auto params = make_eisenstein<Int>(cfg.p, prec.N, prec.M, cfg.e);

    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), cfg.p, cfg.e,
                      cfg.j, cfg.ell};
    std::mt19937_64 rng(seq);
    std::set<std::vector<std::vector<Int>>> seen;
    std::map<unsigned, ParamsPtr<Int>> wider;
    std::vector<Candidate> pool;  // accepted candidates; pool[0] is the unit ideal
    // Stop at count rows, after `patience` attempts without a new instance
    // (the cell counts as exhausted), or at the hard cap.
    const unsigned patience = 100 * cfg.count + 100;
    const unsigned max_attempts = 10 * patience;

    auto consider = [&](const Candidate& c) {
        std::vector<PrecSeries<Int>> gens;
        for (const auto& s : c.generators) gens.push_back(parse_series(s, params));
        std::optional<CofiniteIdeal<Int>> J;
        try {
            J.emplace(gens);
        } catch (const NotCofiniteAtPrecision&) {
            return;  // not an instance at this precision
        }
        if (!seen.insert(J->basis().rows()).second) return;
        VerdictRow row;
        try {
            // phi(J) needs p b < M for the certified u^b in J; give this
            // candidate a larger M when the cell's is too small.
            const unsigned need = cfg.p * J->u_exponent() + 1;
            if (need > prec.M) {
                auto& lifted = wider[need];
                if (!lifted) lifted = make_eisenstein<Int>(cfg.p, prec.N, need, cfg.e);
                std::vector<PrecSeries<Int>> wide;
                for (const auto& s : c.generators) wide.push_back(parse_series(s, lifted));
                J.emplace(wide);
            }
            if (!situation_check(*J, cfg.j).cond_A) return;
            row = verify_instance(*J, cfg, rng());
        } catch (const InsufficientPrecision& ex) {
            row = VerdictRow{};
            row.p = cfg.p, row.e = cfg.e, row.j = cfg.j, row.ell = cfg.ell;
            row.N = J->params()->N(), row.M = J->params()->M;
            row.E = to_string(PrecSeries<Int>::eisenstein(J->params()));
            for (const auto& g : J->generators()) row.generators.push_back(to_string(g));
            row.inconclusive = std::string("inconclusive, raise precision: ") + ex.what();
        }
        row.index = static_cast<unsigned>(res.rows.size());
        row.family = c.family;
        res.rows.push_back(std::move(row));
        pool.push_back(c);
        S.last_new_attempt = S.attempts;
    };

    consider(Candidate{"unit", {"1"}});
    while (res.rows.size() < cfg.count && S.attempts < max_attempts && S.attempts - S.last_new_attempt < patience) {
        ++S.attempts;
        if (pool.size() > 1 && rng() % 4)
            consider(mutate(rng, pool[1 + rng() % (pool.size() - 1)], cfg.p, cfg.e, cfg.j, prec));
        else
            consider(propose(rng, cfg.p, cfg.e, cfg.j, prec));
    }
    S.exhausted = res.rows.size() < cfg.count && S.attempts - S.last_new_attempt >= patience;
    for (const auto& r : res.rows) {
        ++S.instances;
        if (r.inconclusive) {
            ++S.inconclusive;
            continue;
        }
        r.failed() ? ++S.failed : ++S.passed;
        S.cond_B += r.cond_B;
        S.max_rho = std::max(S.max_rho, r.rho);
        S.max_sigma = std::max(S.max_sigma, r.sigma);
    }
    return res;
}

}  // namespace detail

inline CellResult run_cell(const InstanceConfig& cfg) {
    const auto prec = cfg.precision();
    if (fits_word(cfg.p, prec.N)) return detail::run_cell_with<std::uint64_t>(cfg, prec);
    return detail::run_cell_with<BigInt>(cfg, prec);
}

struct SuiteGrid {
    std::vector<unsigned> ps, es, js;
    std::optional<unsigned> ell;  // default j + 1
    unsigned count = 200;
    std::uint64_t seed = 1;
    std::optional<unsigned> N, M;
};

struct SuiteResult {
    std::vector<CellResult> cells;

    unsigned failures() const {
        unsigned f = 0;
        for (const auto& c : cells) f += c.summary.failed;
        return f;
    }
    unsigned inconclusive() const {
        unsigned f = 0;
        for (const auto& c : cells) f += c.summary.inconclusive;
        return f;
    }
    bool ok() const { return failures() == 0; }
};

inline SuiteResult run_suite(const SuiteGrid& grid) {
    SuiteResult out;
    for (unsigned p : grid.ps)
        for (unsigned e : grid.es)
            for (unsigned j : grid.js) {
                InstanceConfig cfg{p, e, j, grid.ell.value_or(j + 1), grid.count, grid.seed, grid.N, grid.M};
                out.cells.push_back(run_cell(cfg));
            }
    return out;
}

// One JSON line per row, then one per cell summary, then the totals.
inline void write_jsonl(std::ostream& os, const SuiteResult& res) {
    for (const auto& c : res.cells)
        for (const auto& r : c.rows) os << to_json(r).dump() << '\n';
    for (const auto& c : res.cells) {
        nlohmann::ordered_json o;
        o["summary"] = to_json(c.summary);
        os << o.dump() << '\n';
    }
    nlohmann::ordered_json t;
    t["total_failures"] = res.failures();
    t["total_inconclusive"] = res.inconclusive();
    t["ok"] = res.ok();
    os << t.dump() << '\n';
}

namespace detail {

inline std::vector<BigInt> coeffs_of(const std::string& poly) {
    std::vector<BigInt> c;
    for (const auto& [deg, v] : parse_terms(poly)) {
        if (c.size() <= deg) c.resize(deg + 1, BigInt(0));
        c[deg] += v;
    }
    return c;
}

template <class Int>
VerdictRow replay_with(const nlohmann::json& j) {
    const unsigned p = j.at("p"), N = j.at("N"), M = j.at("M");
    const auto params = make_eisenstein<Int>(p, N, M, coeffs_of(j.at("E").get<std::string>()));
    std::vector<PrecSeries<Int>> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse_series(s.get<std::string>(), params));
    InstanceConfig cfg;
    cfg.p = p;
    cfg.e = params->e;
    cfg.j = j.at("j");
    cfg.ell = j.at("ell");
    VerdictRow row;
    try {
        row = verify_instance(CofiniteIdeal<Int>(gens), cfg, j.value("sample_seed", std::uint64_t{0}));
    } catch (const NotCofiniteAtPrecision& ex) {
        row.inconclusive = std::string("inconclusive, raise precision: ") + ex.what();
    }
    row.index = j.value("index", 0u);
    row.family = j.value("family", std::string("replay"));
    return row;
}

}  // namespace detail

// Re-verify every serialized row of a JSON-lines stream; summary lines are skipped.
inline std::vector<VerdictRow> replay(std::istream& in) {
    std::vector<VerdictRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto j = nlohmann::json::parse(line);
        if (!j.contains("generators")) continue;
        const unsigned p = j.at("p"), N = j.at("N");
        rows.push_back(fits_word(p, N) ? detail::replay_with<std::uint64_t>(j) : detail::replay_with<BigInt>(j));
    }
    return rows;
}

}  // namespace bkt

#endif
