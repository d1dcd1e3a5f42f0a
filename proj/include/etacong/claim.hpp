#pragma once

// Claim files and the verify driver. A claim file is JSON with a "kind":
//
//   radu:         {m, M, N, r: {delta: e}, t, rprime: {delta: e}, u}
//   thm1-family:  {primes: [...], j: int | [...], n: int | n_max: int}
//   thm2-family:  same fields; every prime must pass the mod-8 eligibility gate
//
// Integers may be written as JSON numbers or decimal strings.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "etacong/arith.hpp"
#include "etacong/generating_functions.hpp"
#include "etacong/hecke.hpp"
#include "etacong/radu.hpp"
#include "etacong/scan.hpp"

namespace etacong::claim {

enum class family_kind { thm1, thm2 };

struct family_claim {
    family_kind kind;
    std::vector<std::int64_t> primes;
    std::vector<std::int64_t> js;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
};

using claim_file = std::variant<radu::congruence_claim, family_claim>;

namespace detail {

inline std::int64_t as_int(const nlohmann::json& v, const std::string& what)
{
    if (v.is_number_integer()) {
        return v.get<std::int64_t>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        std::size_t used = 0;
        try {
            const long long x = std::stoll(s, &used);
            if (used == s.size()) {
                return x;
            }
        } catch (const std::exception&) {
        }
    }
    throw invalid_input("claim: field '" + what + "' must be an integer");
}

inline radu::exponent_map as_exponents(const nlohmann::json& v, const std::string& what)
{
    if (!v.is_object()) {
        throw invalid_input("claim: field '" + what + "' must be an object {delta: exponent}");
    }
    radu::exponent_map out;
    for (const auto& [key, val] : v.items()) {
        const auto d = as_int(nlohmann::json(key), what + " key");
        const auto e = as_int(val, what + "[" + key + "]");
        if (e != 0) {
            out[d] = e;
        }
    }
    return out;
}

inline std::vector<std::int64_t> as_int_list(const nlohmann::json& v, const std::string& what)
{
    std::vector<std::int64_t> out;
    if (v.is_array()) {
        for (const auto& x : v) {
            out.push_back(as_int(x, what));
        }
    } else {
        out.push_back(as_int(v, what));
    }
    if (out.empty()) {
        throw invalid_input("claim: field '" + what + "' is empty");
    }
    return out;
}

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& name)
{
    if (!j.contains(name)) {
        throw invalid_input("claim: missing field '" + name + "'");
    }
    return j.at(name);
}

} // namespace detail

inline claim_file parse_claim(const nlohmann::json& j)
{
    using detail::as_int;
    using detail::field;
    if (!j.is_object()) {
        throw invalid_input("claim: top level must be an object");
    }
    const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "radu";
    if (kind == "radu") {
        radu::congruence_claim c;
        c.tuple.m = as_int(field(j, "m"), "m");
        c.tuple.M = as_int(field(j, "M"), "M");
        c.tuple.N = as_int(field(j, "N"), "N");
        c.tuple.r = detail::as_exponents(field(j, "r"), "r");
        c.tuple.t = as_int(field(j, "t"), "t");
        if (j.contains("rprime")) {
            c.rprime = detail::as_exponents(j.at("rprime"), "rprime");
        }
        c.u = as_int(field(j, "u"), "u");
        c.tuple.validate();
        return c;
    }
    if (kind == "thm1-family" || kind == "thm2-family") {
        family_claim c;
        c.kind = kind == "thm1-family" ? family_kind::thm1 : family_kind::thm2;
        c.primes = detail::as_int_list(field(j, "primes"), "primes");
        c.js = detail::as_int_list(field(j, "j"), "j");
        if (j.contains("n_max")) {
            c.n_min = j.contains("n_min") ? as_int(j.at("n_min"), "n_min") : 0;
            c.n_max = as_int(j.at("n_max"), "n_max");
        } else {
            c.n_min = c.n_max = as_int(field(j, "n"), "n");
        }
        if (c.n_min < 0 || c.n_max < c.n_min) {
            throw invalid_input("claim: need 0 <= n_min <= n_max");
        }
        return c;
    }
    throw invalid_input("claim: unknown kind '" + kind + "'");
}

inline claim_file load_claim(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw invalid_input("cannot open claim file " + path);
    }
    try {
        return parse_claim(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input("claim file " + path + ": " + e.what());
    }
}

struct verify_outcome {
    int exit_code; // 0 verified, 1 counterexample, 2 precondition failed or inconclusive
    nlohmann::json report;
};

inline verify_outcome run_family(const family_claim& c, std::size_t ceiling, unsigned jobs)
{
    const bool thm1 = c.kind == family_kind::thm1;
    const std::uint32_t target = thm1 ? 2 : 8;

    std::vector<bigint> indices;
    for (auto j : c.js) {
        for (std::int64_t n = c.n_min; n <= c.n_max; ++n) {
            indices.push_back(thm1 ? hecke::family_index_thm1(c.primes, j, n)
                                   : hecke::family_index_thm2(c.primes, j, n));
        }
    }
    bigint top = *std::max_element(indices.begin(), indices.end());
    if (!thm1) {
        for (auto p : c.primes) {
            top = std::max(top, bigint(hecke::eligibility_index(p)));
        }
    }
    nlohmann::json report{{"kind", thm1 ? "thm1-family" : "thm2-family"}, {"modulus", std::to_string(target)}};
    if (top > ceiling) {
        report["verdict"] = "precondition-failed";
        report["failed_stage"] = "largest index " + top.str() + " exceeds the coefficient ceiling";
        return {2, report};
    }
    const auto eobar = named_series(named_function::eobar, top.convert_to<std::size_t>(), mod_ring(target), jobs);

    if (!thm1) {
        nlohmann::json gate = nlohmann::json::array();
        for (auto p : c.primes) {
            const auto g = hecke::check_index(eobar, hecke::eligibility_index(p), 8);
            gate.push_back({{"p", std::to_string(p)},
                            {"index", g.index.str()},
                            {"residue", std::to_string(*g.residue)}});
            if (g.verdict != hecke::family_verdict::holds) {
                report["eligibility"] = gate;
                report["verdict"] = "precondition-failed";
                report["failed_stage"] = "prime " + std::to_string(p) + " is not eligible";
                return {2, report};
            }
        }
        report["eligibility"] = gate;
    }

    nlohmann::json checked = nlohmann::json::array();
    for (const auto& index : indices) {
        const auto r = hecke::check_index(eobar, index, target);
        checked.push_back(index.str());
        if (r.verdict == hecke::family_verdict::fails) {
            report["checked"] = checked;
            report["verdict"] = "counterexample";
            report["witness"] = {{"index", index.str()}, {"residue", std::to_string(*r.residue)}};
            return {1, report};
        }
    }
    report["checked"] = checked;
    report["verdict"] = "verified";
    return {0, report};
}

/// Verifies a parsed claim. Errors raised by the library become exit 2.
inline verify_outcome run_claim(const claim_file& c, std::size_t ceiling = scan::memory_ceiling(), unsigned jobs = 1)
{
    try {
        if (const auto* rc = std::get_if<radu::congruence_claim>(&c)) {
            const auto rep = radu::verify_claim(*rc, ceiling, jobs);
            const int code = rep.verdict == radu::verdict_kind::verified         ? 0
                             : rep.verdict == radu::verdict_kind::counterexample ? 1
                                                                                 : 2;
            auto json = radu::to_json(rep);
            json["kind"] = "radu";
            return {code, json};
        }
        return run_family(std::get<family_claim>(c), ceiling, jobs);
    } catch (const error& e) {
        return {2, {{"verdict", "precondition-failed"}, {"error", e.what()}}};
    }
}

inline verify_outcome run_verify(const std::string& path, std::size_t ceiling = scan::memory_ceiling(),
                                 unsigned jobs = 1)
{
    try {
        return run_claim(load_claim(path), ceiling, jobs);
    } catch (const error& e) {
        return {2, {{"verdict", "precondition-failed"}, {"error", e.what()}}};
    }
}

} // namespace etacong::claim
