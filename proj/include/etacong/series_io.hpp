#pragma once

// JSON and CSV forms of a series. Coefficients are written as decimal
// strings so exact coefficients never pass through a 64-bit number.
//
//   {"domain": {"kind": "exact"} | {"kind": "modular", "modulus": u},
//    "truncation": T, "coeffs": ["1", "0", "2", ...]}

#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "etacong/series.hpp"

namespace etacong {

using any_series = std::variant<exact_series, mod_series>;

inline nlohmann::json domain_to_json(const coefficient_domain& d)
{
    if (d.kind == domain_kind::exact) {
        return {{"kind", "exact"}};
    }
    return {{"kind", "modular"}, {"modulus", d.modulus}};
}

template <class Ring>
std::string coefficient_text(const Ring& ring, const typename Ring::value_type& c)
{
    return ring.to_bigint(c).str();
}

template <class Ring>
nlohmann::json to_json(const series<Ring>& a)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : a.coefficients()) {
        coeffs.push_back(coefficient_text(a.ring(), c));
    }
    return {{"domain", domain_to_json(a.domain())}, {"truncation", a.truncation()}, {"coeffs", std::move(coeffs)}};
}

template <class Ring>
std::string to_csv(const series<Ring>& a)
{
    std::ostringstream out;
    out << "index,coefficient\n";
    for (std::size_t n = 0; n <= a.truncation(); ++n) {
        out << n << ',' << coefficient_text(a.ring(), a[n]) << '\n';
    }
    return out.str();
}

inline any_series series_from_json(const nlohmann::json& j)
{
    try {
        const auto& dom = j.at("domain");
        const auto& coeffs = j.at("coeffs");
        const auto truncation = j.at("truncation").get<std::size_t>();
        if (coeffs.size() != truncation + 1) {
            throw invalid_input("series JSON: coeffs length must be truncation + 1");
        }
        const auto kind = dom.at("kind").get<std::string>();
        if (kind == "exact") {
            exact_series out(exact_ring{}, truncation);
            for (std::size_t n = 0; n <= truncation; ++n) {
                out[n] = bigint(coeffs[n].get<std::string>());
            }
            return out;
        }
        if (kind == "modular") {
            const mod_ring ring(dom.at("modulus").get<std::uint64_t>());
            mod_series out(ring, truncation);
            for (std::size_t n = 0; n <= truncation; ++n) {
                const bigint v(coeffs[n].get<std::string>());
                if (v < 0 || v >= ring.modulus()) {
                    throw invalid_input("series JSON: coefficient out of range for modulus");
                }
                out[n] = v.convert_to<std::uint32_t>();
            }
            return out;
        }
        throw invalid_input("series JSON: unknown domain kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("series JSON: ") + e.what());
    } catch (const std::runtime_error& e) {
        // bigint parse failures surface as std::runtime_error
        if (dynamic_cast<const error*>(&e) != nullptr) {
            throw;
        }
        throw invalid_input(std::string("series JSON: ") + e.what());
    }
}

} // namespace etacong
