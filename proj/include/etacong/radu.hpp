#pragma once

// Radu's finite check for congruences c_r(mn + t') == 0 (mod u), where
// sum c_r(n) q^n = prod over delta | M of (q^delta; q^delta)^{r_delta}.
//
// verify_claim runs the whole pipeline: membership of (m, M, N, r, t) in
// Delta*, double coset representatives of Gamma_0(N)\SL2(Z)/Gamma_inf, the
// nonnegativity of p_{m,r}(gamma) + p*_{r'}(gamma) at every representative,
// the residue set P_{m,r}(t), the bound nu, and finally the congruence for
// 0 <= n <= floor(nu) on a modular c_r series.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "etacong/arith.hpp"
#include "etacong/etaq.hpp"
#include "etacong/series.hpp"

namespace etacong::radu {

using exponent_map = std::map<std::int64_t, std::int64_t>;

struct radu_tuple {
    std::int64_t m;
    std::int64_t M;
    std::int64_t N;
    exponent_map r; // delta | M -> r_delta; absent means 0
    std::int64_t t;

    void validate() const
    {
        if (m < 1 || M < 1 || N < 1) {
            throw invalid_input("m, M and N must be positive");
        }
        if (t < 0 || t >= m) {
            throw invalid_input("t must lie in [0, m)");
        }
        for (auto [d, e] : r) {
            if (d < 1 || M % d != 0) {
                throw invalid_input("r is indexed by divisors of M; " + std::to_string(d) + " does not divide " +
                                    std::to_string(M));
            }
        }
    }

    /// k = gcd(m^2 - 1, 24).
    std::int64_t kappa() const { return std::gcd((m % 24) * (m % 24) - 1 + 24, std::int64_t{24}); }

    std::int64_t sum_r() const
    {
        std::int64_t s = 0;
        for (auto [d, e] : r) {
            s += e;
        }
        return s;
    }

    std::int64_t sum_delta_r() const
    {
        std::int64_t s = 0;
        for (auto [d, e] : r) {
            s += d * e;
        }
        return s;
    }

    /// (s, j) with prod delta^{|r_delta|} = 2^s j and j odd.
    std::pair<std::int64_t, bigint> two_adic_split() const
    {
        std::int64_t s = 0;
        bigint j = 1;
        for (auto [d, e] : r) {
            const std::int64_t a = e < 0 ? -e : e;
            std::int64_t odd = d;
            std::int64_t v = 0;
            while (odd % 2 == 0) {
                odd /= 2;
                ++v;
            }
            s += v * a;
            j *= ipow(bigint(odd), static_cast<unsigned>(a));
        }
        return {s, j};
    }
};

struct delta_star_result {
    std::array<bool, 6> conditions{};

    bool passed() const { return std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; }); }

    std::vector<int> failed() const
    {
        std::vector<int> out;
        for (int i = 0; i < 6; ++i) {
            if (!conditions[static_cast<std::size_t>(i)]) {
                out.push_back(i + 1);
            }
        }
        return out;
    }
};

/// Evaluates the six Delta* conditions independently. Condition (3) is read
/// as k N sum r_delta (m N / delta) == 0 (mod 24).
inline delta_star_result delta_star_check(const radu_tuple& tp)
{
    tp.validate();
    const std::int64_t k = tp.kappa();
    const std::int64_t mN = tp.m * tp.N;
    delta_star_result out;

    out.conditions[0] = true;
    for (auto p : prime_divisors(tp.m)) {
        if (tp.N % p != 0) {
            out.conditions[0] = false;
        }
    }

    out.conditions[1] = true;
    for (auto [d, e] : tp.r) {
        if (e != 0 && mN % d != 0) {
            out.conditions[1] = false;
        }
    }

    if (out.conditions[1]) {
        bigint sum = 0;
        for (auto [d, e] : tp.r) {
            sum += bigint(e) * (mN / d);
        }
        out.conditions[2] = (bigint(k) * tp.N * sum) % 24 == 0;
    } else {
        out.conditions[2] = false; // m N / delta is not an integer
    }

    out.conditions[3] = mod_floor(k * tp.N * tp.sum_r(), 8) == 0;

    const std::int64_t g = std::gcd(-24 * k * tp.t - k * tp.sum_delta_r(), 24 * tp.m);
    out.conditions[4] = tp.N % (24 * tp.m / g) == 0;

    if (tp.m % 2 == 0) {
        const auto [s, j] = tp.two_adic_split();
        const bool first = (k * tp.N) % 4 == 0 && (s * tp.N) % 8 == 0;
        const bool second = s % 2 == 0 && ((1 - j) * tp.N) % 8 == 0;
        out.conditions[5] = first || second;
    } else {
        out.conditions[5] = true;
    }
    return out;
}

/// Squares of units modulo n, as canonical representatives in [0, n).
inline std::vector<std::int64_t> unit_squares(std::int64_t n)
{
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) {
            hit[static_cast<std::size_t>(u * u % n)] = true;
        }
    }
    std::vector<std::int64_t> out;
    for (std::int64_t s = 0; s < n; ++s) {
        if (hit[static_cast<std::size_t>(s)]) {
            out.push_back(s);
        }
    }
    if (n == 1) {
        out.push_back(0);
    }
    return out;
}

/// P_{m,r}(t) = { t s + ((s - 1)/24) sum delta r_delta mod m : s a square unit mod 24m }.
inline std::vector<std::int64_t> compute_P(const radu_tuple& tp)
{
    tp.validate();
    const std::int64_t m = tp.m;
    const std::int64_t sdr = mod_floor(tp.sum_delta_r(), m);
    std::vector<std::int64_t> out;
    for (auto s : unit_squares(24 * m)) {
        if ((s - 1) % 24 != 0) {
            throw error("internal: square unit " + std::to_string(s) + " is not 1 mod 24");
        }
        const std::int64_t step = mod_floor((s - 1) / 24, m);
        out.push_back(mod_floor(tp.t * (s % m) + step * sdr, m));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The matrix [[1, 0], [c, 1]].
struct coset_rep {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c;
    std::int64_t d = 1;
};

/// { [[1,0],[delta,1]] : delta | N }, valid when N or N/2 is squarefree.
inline std::vector<coset_rep> coset_reps(std::int64_t N)
{
    if (N < 1) {
        throw invalid_input("level must be positive");
    }
    if (!is_squarefree(N) && !(N % 2 == 0 && is_squarefree(N / 2))) {
        throw unsupported_level("unsupported level " + std::to_string(N) +
                                ": double coset representatives need N or N/2 squarefree");
    }
    std::vector<coset_rep> out;
    for (auto delta : divisors(N)) {
        out.push_back({1, 0, delta, 1});
    }
    return out;
}

/// p_{m,r}(gamma) = min over lambda in [0, m) of
/// (1/24) sum r_delta gcd(delta a + delta k lambda c, m c)^2 / (delta m).
inline rational lower_bound_pmr(const coset_rep& gamma, const radu_tuple& tp)
{
    const std::int64_t k = tp.kappa();
    std::optional<rational> best;
    for (std::int64_t lambda = 0; lambda < tp.m; ++lambda) {
        rational sum = 0;
        for (auto [d, e] : tp.r) {
            const std::int64_t g = std::gcd(d * gamma.a + d * k * lambda * gamma.c, tp.m * gamma.c);
            sum += rational(bigint(e) * g * g, d * tp.m);
        }
        sum /= 24;
        if (!best || sum < *best) {
            best = sum;
        }
    }
    return *best;
}

/// p*_{r'}(gamma) = (1/24) sum over delta | N of r'_delta gcd(delta, c)^2 / delta.
inline rational p_star(const coset_rep& gamma, const exponent_map& rprime)
{
    rational sum = 0;
    for (auto [d, e] : rprime) {
        const std::int64_t g = std::gcd(d, gamma.c);
        sum += rational(bigint(e) * g * g, d);
    }
    return sum / 24;
}

/// nu = (1/24)((sum r + sum r') [SL2(Z):Gamma_0(N)] - sum delta r'_delta)
///      - (1/(24m)) sum delta r_delta - t_min / m.
inline rational nu_bound(const radu_tuple& tp, const exponent_map& rprime, std::int64_t t_min)
{
    std::int64_t sum_rp = 0;
    std::int64_t sum_delta_rp = 0;
    for (auto [d, e] : rprime) {
        sum_rp += e;
        sum_delta_rp += d * e;
    }
    const rational head(bigint(tp.sum_r() + sum_rp) * etaq::index_gamma0(tp.N) - sum_delta_rp, 24);
    return head - rational(tp.sum_delta_r(), 24 * tp.m) - rational(t_min, tp.m);
}

inline rational nu_bound(const radu_tuple& tp, const exponent_map& rprime)
{
    const auto P = compute_P(tp);
    return nu_bound(tp, rprime, P.front());
}

struct congruence_claim {
    radu_tuple tuple;
    exponent_map rprime; // indexed by divisors of N; all zero by default
    std::int64_t u = 2;
};

enum class verdict_kind { verified, counterexample, precondition_failed };

inline std::string_view name_of(verdict_kind v)
{
    switch (v) {
    case verdict_kind::verified: return "verified-for-all-n";
    case verdict_kind::counterexample: return "counterexample";
    case verdict_kind::precondition_failed: return "precondition-failed";
    }
    return "?";
}

struct witness {
    std::int64_t n;
    std::int64_t t_prime;
    std::int64_t index;      // m n + t'
    std::uint32_t residue;   // c_r(index) mod u
};

struct rep_bound {
    std::int64_t delta;
    rational pmr;
    rational pstar;

    rational total() const { return pmr + pstar; }
};

struct verification_report {
    verdict_kind verdict = verdict_kind::precondition_failed;
    std::string failed_stage; // empty unless a precondition failed
    delta_star_result delta_star;
    std::vector<std::int64_t> P;
    rational nu;
    std::int64_t n_max = -1; // floor(nu), or -1 when negative
    std::vector<rep_bound> bounds;
    std::vector<std::int64_t> checked;
    std::optional<witness> counterexample;
};

namespace detail {

inline std::optional<witness> scan(const congruence_claim& claim, const std::vector<std::int64_t>& P, std::int64_t n_max,
                                   std::vector<std::int64_t>* checked, unsigned jobs)
{
    if (n_max < 0) {
        return std::nullopt;
    }
    const std::int64_t m = claim.tuple.m;
    const std::int64_t top = m * n_max + P.back();
    if (claim.u == 1) {
        if (checked != nullptr) {
            for (std::int64_t n = 0; n <= n_max; ++n) {
                for (auto tp : P) {
                    checked->push_back(m * n + tp);
                }
            }
        }
        return std::nullopt;
    }
    std::vector<eta_factor> factors;
    for (auto [d, e] : claim.tuple.r) {
        factors.push_back({d, e});
    }
    const mod_ring ring(static_cast<std::uint64_t>(claim.u));
    const auto c = factors.empty() ? mod_series::one(ring, static_cast<std::size_t>(top))
                                   : build_eta_product(std::span<const eta_factor>(factors),
                                                       static_cast<std::size_t>(top), ring, jobs);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        for (auto tp : P) {
            const std::int64_t index = m * n + tp;
            if (checked != nullptr) {
                checked->push_back(index);
            }
            const auto v = c[static_cast<std::size_t>(index)];
            if (v != 0) {
                return witness{n, tp, index, v};
            }
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Runs the full criterion. A counterexample found among the initial cases
/// takes precedence over a failed precondition (it disproves the claim
/// outright); otherwise any failed precondition blocks the verified verdict.
/// `max_terms` caps the length of the c_r series.
inline verification_report verify_claim(const congruence_claim& claim, std::size_t max_terms = 10'000'000,
                                        unsigned jobs = 1)
{
    const auto& tp = claim.tuple;
    tp.validate();
    if (claim.u < 1) {
        throw invalid_input("modulus u must be positive");
    }
    for (auto [d, e] : claim.rprime) {
        if (d < 1 || tp.N % d != 0) {
            throw invalid_input("r' is indexed by divisors of N; " + std::to_string(d) + " does not divide " +
                                std::to_string(tp.N));
        }
    }

    verification_report rep;
    std::vector<std::string> failures;

    rep.delta_star = delta_star_check(tp);
    if (!rep.delta_star.passed()) {
        std::string which;
        for (int c : rep.delta_star.failed()) {
            which += (which.empty() ? "" : ", ") + std::to_string(c);
        }
        failures.push_back("delta-star (condition " + which + ")");
    }

    try {
        for (const auto& gamma : coset_reps(tp.N)) {
            rep_bound b{gamma.c, lower_bound_pmr(gamma, tp), p_star(gamma, claim.rprime)};
            if (b.total() < 0) {
                failures.push_back("nonnegativity at delta = " + std::to_string(gamma.c));
            }
            rep.bounds.push_back(std::move(b));
        }
    } catch (const unsupported_level& e) {
        failures.push_back(e.what());
    }

    rep.P = compute_P(tp);
    rep.nu = nu_bound(tp, claim.rprime, rep.P.front());
    const bigint fl = floor(rep.nu);
    rep.n_max = fl < 0 ? -1 : fl.convert_to<std::int64_t>();

    const bigint top = bigint(tp.m) * std::max<std::int64_t>(rep.n_max, 0) + rep.P.back();
    if (top >= max_terms) {
        failures.push_back("series horizon " + top.str() + " exceeds the coefficient ceiling");
    } else {
        rep.counterexample = detail::scan(claim, rep.P, rep.n_max, &rep.checked, jobs);
    }

    if (rep.counterexample) {
        rep.verdict = verdict_kind::counterexample;
    } else if (!failures.empty()) {
        rep.verdict = verdict_kind::precondition_failed;
    } else {
        rep.verdict = verdict_kind::verified;
    }
    for (const auto& f : failures) {
        rep.failed_stage += (rep.failed_stage.empty() ? "" : "; ") + f;
    }
    return rep;
}

/// Independent probe of c_r(m n + t') mod u for every t' in P and
/// 0 <= n <= horizon; returns the first nonzero case.
inline std::optional<witness> spot_check(const congruence_claim& claim, std::int64_t horizon, unsigned jobs = 1)
{
    return detail::scan(claim, compute_P(claim.tuple), horizon, nullptr, jobs);
}

inline nlohmann::json to_json(const verification_report& rep)
{
    using nlohmann::json;
    json P = json::array();
    for (auto v : rep.P) {
        P.push_back(std::to_string(v));
    }
    json checked = json::array();
    for (auto v : rep.checked) {
        checked.push_back(std::to_string(v));
    }
    json conditions = json::array();
    for (bool c : rep.delta_star.conditions) {
        conditions.push_back(c);
    }
    json bounds = json::array();
    for (const auto& b : rep.bounds) {
        bounds.push_back({{"delta", std::to_string(b.delta)},
                          {"p_mr", to_string(b.pmr)},
                          {"p_star", to_string(b.pstar)},
                          {"total", to_string(b.total())}});
    }
    json out{{"verdict", std::string(name_of(rep.verdict))},
             {"nu", to_string(rep.nu)},
             {"floor_nu", std::to_string(rep.n_max)},
             {"P", std::move(P)},
             {"checked", std::move(checked)},
             {"delta_star", std::move(conditions)},
             {"bounds", std::move(bounds)}};
    if (!rep.failed_stage.empty()) {
        out["failed_stage"] = rep.failed_stage;
    }
    if (rep.counterexample) {
        const auto& w = *rep.counterexample;
        out["witness"] = {{"n", std::to_string(w.n)},
                          {"t_prime", std::to_string(w.t_prime)},
                          {"index", std::to_string(w.index)},
                          {"residue", std::to_string(w.residue)}};
    }
    return out;
}

} // namespace etacong::radu
