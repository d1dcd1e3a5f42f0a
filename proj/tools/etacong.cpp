// etacong command-line driver. Every invocation exits with 0 (verified / ok),
// 1 (counterexample or disagreement found) or 2 (bad input, failed
// precondition, or inconclusive).

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etacong/etacong.hpp"

namespace {

using namespace etacong;
using nlohmann::json;

struct common_options {
    std::size_t terms = 20;
    std::uint64_t modulus = 0; // 0 means exact
    std::string out = "json";
    bool cross_check = false;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, common_options& o, bool with_terms = true)
{
    if (with_terms) {
        cmd->add_option("-T,--terms", o.terms, "truncation order");
    }
    cmd->add_option("--mod", o.modulus, "coefficient modulus (omit for exact)");
    cmd->add_option("--out", o.out, "output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--cross-check", o.cross_check, "compare against the brute-force oracle");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

radu::exponent_map parse_exponents(const std::string& text)
{
    radu::exponent_map out;
    if (text.empty()) {
        return out;
    }
    // Reuse the eta-quotient grammar with a dummy level that every delta divides.
    std::int64_t level = 1;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw invalid_input("exponents must be written delta:exponent, got '" + item + "'");
        }
        const auto d = std::stoll(item.substr(0, colon));
        if (d < 1) {
            throw invalid_input("delta must be positive");
        }
        level = std::lcm(level, d);
    }
    const auto eq = etaq::parse_eta_quotient(std::to_string(level) + ";" + text);
    for (auto [d, e] : eq.exponents()) {
        out[d] = e;
    }
    return out;
}

// Oracle count for the partition argument n of a named function, when one exists.
std::optional<bigint> oracle_count(named_function f, std::int64_t n)
{
    switch (f) {
    case named_function::eo: return oracle::count_EO(n);
    case named_function::eobar: return oracle::count_EObar(n);
    case named_function::eou: return oracle::count_EOu(n);
    case named_function::eobar_even: return oracle::count_EObar(2 * n);
    case named_function::eou_even: return oracle::count_EOu(2 * n);
    default: return std::nullopt;
    }
}

std::int64_t oracle_reach(named_function f, std::int64_t T)
{
    const bool doubled = f == named_function::eobar_even || f == named_function::eou_even;
    return std::min<std::int64_t>(T, doubled ? 20 : 40);
}

template <class Ring>
int cross_check(named_function f, const series<Ring>& s)
{
    const auto reach = oracle_reach(f, static_cast<std::int64_t>(s.truncation()));
    for (std::int64_t n = 0; n <= reach; ++n) {
        const auto want = oracle_count(f, n);
        if (!want) {
            std::cerr << "cross-check: no oracle for " << name_of(f) << '\n';
            return 2;
        }
        bigint have = s.ring().to_bigint(s[static_cast<std::size_t>(n)]);
        bigint expect = *want;
        if (s.domain().kind == domain_kind::modular) {
            expect %= s.domain().modulus;
        }
        if (have != expect) {
            std::cerr << "cross-check failed at n = " << n << ": series " << have << ", oracle " << expect << '\n';
            return 1;
        }
    }
    std::cerr << "cross-check: series and oracle agree for n <= " << reach << '\n';
    return 0;
}

int run_expand(const std::string& function, const std::string& eta, const common_options& o)
{
    scan::require_within_ceiling(o.terms, scan::memory_ceiling());
    std::optional<named_function> named;
    std::optional<etaq::eta_quotient> eq;
    if (!eta.empty()) {
        eq = etaq::parse_eta_quotient(eta);
    } else {
        named = parse_named_function(function);
    }
    auto emit = [&](const auto& s) {
        if (o.out == "csv") {
            std::cout << to_csv(s);
        } else {
            print_json(to_json(s));
        }
        if (o.cross_check) {
            if (!named) {
                std::cerr << "cross-check needs a named partition function\n";
                return 2;
            }
            return cross_check(*named, s);
        }
        return 0;
    };
    if (o.modulus == 0) {
        const exact_ring ring;
        return emit(eq ? etaq::expand(*eq, o.terms, ring, o.jobs) : named_series(*named, o.terms, ring, o.jobs));
    }
    const mod_ring ring(o.modulus);
    return emit(eq ? etaq::expand(*eq, o.terms, ring, o.jobs) : named_series(*named, o.terms, ring, o.jobs));
}

int run_oracle(const std::string& function, std::int64_t n, bool range, std::int64_t cap, const common_options& o)
{
    std::vector<std::pair<std::int64_t, bigint>> rows;
    const std::int64_t from = range ? 0 : n;
    for (std::int64_t k = from; k <= n; ++k) {
        bigint c;
        if (function == "p") {
            c = oracle::count_partitions(k, cap);
        } else if (function == "eo") {
            c = oracle::count_EO(k, cap);
        } else if (function == "eobar") {
            c = oracle::count_EObar(k, cap);
        } else if (function == "eou") {
            c = oracle::count_EOu(k, cap);
        } else {
            throw invalid_input("oracle knows p, eo, eobar, eou; got '" + function + "'");
        }
        rows.emplace_back(k, c);
    }
    if (o.out == "csv") {
        std::cout << "n,count\n";
        for (const auto& [k, c] : rows) {
            std::cout << k << ',' << c << '\n';
        }
    } else {
        json counts = json::array();
        for (const auto& [k, c] : rows) {
            counts.push_back({{"n", std::to_string(k)}, {"count", c.str()}});
        }
        print_json({{"function", function}, {"counts", counts}});
    }
    if (o.cross_check) {
        if (function == "p") {
            const auto s = build_eta_product({{1, -1}}, static_cast<std::size_t>(n), exact_ring{});
            for (const auto& [k, c] : rows) {
                if (s[static_cast<std::size_t>(k)] != c) {
                    std::cerr << "cross-check failed at n = " << k << '\n';
                    return 1;
                }
            }
            return 0;
        }
        const auto s = named_series(function, static_cast<std::size_t>(n), exact_ring{});
        for (const auto& [k, c] : rows) {
            if (s[static_cast<std::size_t>(k)] != c) {
                std::cerr << "cross-check failed at n = " << k << ": series " << s[static_cast<std::size_t>(k)]
                          << ", oracle " << c << '\n';
                return 1;
            }
        }
        std::cerr << "cross-check: oracle and series agree\n";
    }
    return 0;
}

json fj_to_json(const hecke::fj_report& r)
{
    auto checks = [](const std::vector<hecke::prime_check>& v) {
        json a = json::array();
        for (const auto& c : v) {
            json e{{"p", std::to_string(c.p)}, {"ok", c.ok}};
            if (c.first_bad) {
                e["first_bad"] = std::to_string(*c.first_bad);
            }
            a.push_back(e);
        }
        return a;
    };
    json forms = json::array();
    for (const auto& f : r.forms) {
        forms.push_back({{"j", std::to_string(f.j)},
                         {"support_ok", f.support_ok},
                         {"annihilation", checks(f.annihilation)},
                         {"class_mapping", checks(f.class_mapping)}});
    }
    return {{"truncation", std::to_string(r.truncation)}, {"ok", r.ok()}, {"forms", forms}};
}

json classification_json(const etaq::eta_quotient& eq)
{
    const auto c = etaq::classify(eq);
    json orders = json::array();
    for (const auto& [d, count] : etaq::cusp_census(eq.level())) {
        orders.push_back({{"d", std::to_string(d)},
                          {"cusps", std::to_string(count)},
                          {"order", to_short_string(etaq::cusp_order(eq, d))}});
    }
    json out{{"eta_quotient", etaq::format(eq)},
             {"weight", to_short_string(c.weight)},
             {"integral_weight", c.integral_weight},
             {"level_conditions", c.satisfies_24_conditions},
             {"cusp_orders", orders},
             {"min_cusp_order", to_short_string(c.min_cusp_order)},
             {"valence_sum", to_short_string(etaq::valence_sum(eq))},
             {"index", std::to_string(etaq::index_gamma0(eq.level()))},
             {"class", std::string(etaq::name_of(c.cls))},
             {"certified", c.certified}};
    if (c.integral_weight) {
        out["character_kernel"] = std::to_string(etaq::character_kernel(eq));
    }
    return out;
}

int dispatch(int argc, char** argv)
{
    CLI::App app{"EO / EO-bar / EO_u partition q-series and congruence verification"};
    app.require_subcommand(1);
    common_options o;

    auto* expand = app.add_subcommand("expand", "expand a generating function or eta-quotient");
    std::string function;
    std::string eta;
    expand->add_option("function", function, "eobar, eo, eou, eobar_even, eou_even, eta8_3z, thm2_form");
    expand->add_option("--eta", eta, "eta-quotient 'N; d:r, ...' (expanded at infinity)");
    add_common(expand, o);

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force partition counts");
    std::string ofunction;
    std::int64_t on = 0;
    bool orange = false;
    std::int64_t ocap = oracle::default_cap;
    oracle_cmd->add_option("function", ofunction, "p, eo, eobar, eou")->required();
    oracle_cmd->add_option("n", on, "argument")->required()->check(CLI::NonNegativeNumber);
    oracle_cmd->add_flag("--range", orange, "report every k <= n");
    oracle_cmd->add_option("--cap", ocap, "enumeration cap");
    add_common(oracle_cmd, o, false);

    auto* verify = app.add_subcommand("verify", "verify a claim file");
    std::string claim_path;
    verify->add_option("claim", claim_path, "claim JSON")->required();
    add_common(verify, o, false);

    auto* radu_cmd = app.add_subcommand("radu", "run the Radu criterion on a tuple");
    std::int64_t rm = 0, rM = 0, rN = 0, rt = 0, ru = 2;
    std::string rr, rprime;
    radu_cmd->add_option("--m", rm)->required();
    radu_cmd->add_option("--M", rM)->required();
    radu_cmd->add_option("--N", rN)->required();
    radu_cmd->add_option("--r", rr, "exponents 'delta:e,...'")->required();
    radu_cmd->add_option("--t", rt)->required();
    radu_cmd->add_option("--u", ru, "modulus of the congruence");
    radu_cmd->add_option("--rprime", rprime, "exponents 'delta:e,...' on divisors of N");
    add_common(radu_cmd, o, false);

    auto* hecke_cmd = app.add_subcommand("hecke", "Hecke operator checks");
    hecke_cmd->require_subcommand(1);
    auto* eigen = hecke_cmd->add_subcommand("eigen", "eigenform residual f | T_p - lambda(p) f");
    std::string hform = "eta8_3z";
    std::string heta;
    std::vector<std::int64_t> hprimes{5, 7, 11, 13};
    eigen->add_option("--form", hform, "eta8_3z or thm2_form");
    eigen->add_option("--eta", heta, "eta-quotient 'N; d:r, ...' instead of a named form");
    eigen->add_option("-p,--primes", hprimes)->delimiter(',');
    add_common(eigen, o);
    auto* eligible = hecke_cmd->add_subcommand("eligible", "primes p == 1 (mod 24) with EObar((19p-1)/3) == 0 (mod 8)");
    std::int64_t hlimit = 1009;
    eligible->add_option("--limit", hlimit)->check(CLI::Range(std::int64_t{2}, std::int64_t{1'000'000}));
    add_common(eligible, o, false);
    auto* fj = hecke_cmd->add_subcommand("fj", "support classes and T_p action on F_1, F_7, F_13, F_19");
    add_common(fj, o);

    auto* classify = app.add_subcommand("classify", "weight, character and cusp orders of an eta-quotient");
    std::string ceta;
    classify->add_option("eta", ceta, "'N; d:r, ...'")->required();

    auto* density = app.add_subcommand("density", "fraction of a progression divisible by a modulus");
    std::string dfunction = "eobar";
    unsigned dk = 1;
    std::size_t dX = 1000;
    std::vector<std::size_t> dcheck;
    density->add_option("function", dfunction, "eobar (EObar(8n+6) mod 8) or eou (EO_u(2n) mod 2^k)")
        ->check(CLI::IsMember({"eobar", "eou"}));
    density->add_option("-k", dk, "exponent for eou")->check(CLI::Range(1U, 31U));
    density->add_option("-X", dX, "horizon");
    density->add_option("--checkpoints", dcheck)->delimiter(',');
    add_common(density, o, false);

    auto* parity = app.add_subcommand("parity-scan", "parity of EObar(2N) along N == r (mod t)");
    std::int64_t pr = 0, pt = 1, plimit = 1'000'000;
    parity->add_option("--r", pr)->required();
    parity->add_option("--t", pt)->required();
    parity->add_option("--limit", plimit);
    add_common(parity, o, false);

    auto* bound = app.add_subcommand("bound", "upper bound for the first odd EObar(2M), M == r (mod t)");
    std::int64_t br = 0, bt = 1;
    bound->add_option("--r", br)->required();
    bound->add_option("--t", bt)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    // density accepts u = 1 (every coefficient divisible); elsewhere 1 is meaningless
    if ((o.modulus == 1 && !*density) || o.modulus > coefficient_domain::max_modulus) {
        throw invalid_input("--mod must lie in [2, 2^31]");
    }

    if (*expand) {
        if (function.empty() == eta.empty()) {
            throw invalid_input("expand needs exactly one of a function name or --eta");
        }
        return run_expand(function, eta, o);
    }
    if (*oracle_cmd) {
        return run_oracle(ofunction, on, orange, ocap, o);
    }
    if (*verify) {
        const auto outcome = claim::run_verify(claim_path, scan::memory_ceiling(), o.jobs);
        print_json(outcome.report);
        return outcome.exit_code;
    }
    if (*radu_cmd) {
        radu::congruence_claim c{{rm, rM, rN, parse_exponents(rr), rt}, parse_exponents(rprime), ru};
        const auto outcome = claim::run_claim(c, scan::memory_ceiling(), o.jobs);
        print_json(outcome.report);
        return outcome.exit_code;
    }
    if (*eigen) {
        scan::require_within_ceiling(o.terms, scan::memory_ceiling());
        const auto eq = !heta.empty()        ? etaq::parse_eta_quotient(heta)
                        : hform == "eta8_3z"  ? etaq::eta_quotient(9, {{3, 8}})
                        : hform == "thm2_form" ? etaq::eta_quotient(2304, {{96, 5}, {24, -1}})
                                               : throw invalid_input("unknown form '" + hform + "'");
        const auto f = etaq::expand(eq, o.terms, exact_ring{}, o.jobs);
        json reports = json::array();
        int code = 0;
        for (auto p : hprimes) {
            const auto r = hecke::eigen_residual(f, hecke::hecke_context::for_form(eq, p));
            if (r.status != hecke::eigen_status::exact_match) {
                code = 1;
            }
            reports.push_back(hecke::to_json(r));
        }
        print_json({{"form", etaq::format(eq)}, {"truncation", std::to_string(o.terms)}, {"reports", reports}});
        return code;
    }
    if (*eligible) {
        scan::require_within_ceiling(static_cast<std::size_t>(hecke::eligibility_index(hlimit)),
                                     scan::memory_ceiling());
        json primes = json::array();
        for (auto p : hecke::eligible_prime_search_thm2(hlimit, o.jobs)) {
            primes.push_back(std::to_string(p));
        }
        print_json({{"limit", std::to_string(hlimit)}, {"eligible", primes}});
        return 0;
    }
    if (*fj) {
        const auto r = hecke::fj_structure_check(o.terms);
        print_json(fj_to_json(r));
        return r.ok() ? 0 : 1;
    }
    if (*classify) {
        print_json(classification_json(etaq::parse_eta_quotient(ceta)));
        return 0;
    }
    if (*density) {
        auto config =
            dfunction == "eobar" ? scan::eobar_density_config(dX, dcheck) : scan::eou_density_config(dk, dX, dcheck);
        if (o.modulus != 0) {
            config.u = static_cast<std::uint32_t>(o.modulus);
        }
        const auto r = scan::run_density(config, scan::memory_ceiling(), o.jobs);
        if (o.out == "csv") {
            std::cout << scan::to_csv(r);
        } else {
            print_json(scan::to_json(r));
        }
        return 0;
    }
    if (*parity) {
        print_json(scan::to_json(scan::run_parity_scan(pr, pt, plimit)));
        return 0;
    }
    if (*bound) {
        const scan::bound_query q{br, bt};
        const auto b = scan::thm14_bound(q);
        print_json({{"r", std::to_string(br)},
                    {"t", std::to_string(bt)},
                    {"d", std::to_string(q.d())},
                    {"j", std::to_string(q.j())},
                    {"bound", to_short_string(b)}});
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return dispatch(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return 2;
    }
}
