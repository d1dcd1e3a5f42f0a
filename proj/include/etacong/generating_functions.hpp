#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "etacong/series.hpp"

namespace etacong {

enum class named_function {
    eobar,      // (q^4;q^4)^3 / (q^2;q^2)^2
    eo,         // 1 / ((1 - q)(q^2;q^2))
    eou,        // 1 / (q^2;q^4)^2 = (q^4;q^4)^2 / (q^2;q^2)^2
    eobar_even, // sum EObar(2n) q^n = (q^2;q^2)^3 / (q;q)^2
    eou_even,   // sum EOu(2n) q^n = (q^2;q^2)^2 / (q;q)^2
    eta8_3z,    // q (q^3;q^3)^8
    thm2_form,  // q^19 (q^96;q^96)^5 / (q^24;q^24)
};

inline constexpr std::array<std::pair<std::string_view, named_function>, 7> named_function_table{{
    {"eobar", named_function::eobar},
    {"eo", named_function::eo},
    {"eou", named_function::eou},
    {"eobar_even", named_function::eobar_even},
    {"eou_even", named_function::eou_even},
    {"eta8_3z", named_function::eta8_3z},
    {"thm2_form", named_function::thm2_form},
}};

inline named_function parse_named_function(std::string_view name)
{
    for (const auto& [key, value] : named_function_table) {
        if (key == name) {
            return value;
        }
    }
    throw invalid_input("unknown generating function '" + std::string(name) + "'");
}

inline std::string_view name_of(named_function f)
{
    for (const auto& [key, value] : named_function_table) {
        if (value == f) {
            return key;
        }
    }
    return "?";
}

template <class Ring>
series<Ring> named_series(named_function which, std::size_t truncation, const Ring& ring, unsigned jobs = 1)
{
    switch (which) {
    case named_function::eobar:
        return build_eta_product({{4, 3}, {2, -2}}, truncation, ring, jobs);
    case named_function::eo: {
        // Andrews' generating function; cross-checked against the oracle.
        auto out = build_eta_product({{2, -1}}, truncation, ring, jobs);
        for (std::size_t n = 1; n <= truncation; ++n) {
            out[n] = ring.add(out[n], out[n - 1]);
        }
        return out;
    }
    case named_function::eou:
        return build_eta_product({{4, 2}, {2, -2}}, truncation, ring, jobs);
    case named_function::eobar_even:
        return build_eta_product({{2, 3}, {1, -2}}, truncation, ring, jobs);
    case named_function::eou_even:
        return build_eta_product({{2, 2}, {1, -2}}, truncation, ring, jobs);
    case named_function::eta8_3z:
        return shift(build_eta_product({{3, 8}}, truncation, ring, jobs), 1);
    case named_function::thm2_form:
        return shift(build_eta_product({{96, 5}, {24, -1}}, truncation, ring, jobs), 19);
    }
    throw invalid_input("unhandled generating function");
}

template <class Ring>
series<Ring> named_series(std::string_view name, std::size_t truncation, const Ring& ring, unsigned jobs = 1)
{
    return named_series(parse_named_function(name), truncation, ring, jobs);
}

/// First index where 1/(q;q)^2 differs from the 2-dissection
///   (q^8;q^8)^5 / ((q^2;q^2)^5 (q^16;q^16)^2)
///     + c q (q^4;q^4)^2 (q^16;q^16)^2 / ((q^2;q^2)^5 (q^8;q^8)),
/// in exact arithmetic; c = 2 is the true identity.
inline std::optional<std::size_t> dissection_mismatch(std::size_t truncation, std::int64_t c = 2)
{
    const exact_ring zz;
    const auto lhs = build_eta_product({{1, -2}}, truncation, zz);
    const auto even = build_eta_product({{8, 5}, {2, -5}, {16, -2}}, truncation, zz);
    const auto odd = shift(build_eta_product({{4, 2}, {16, 2}, {2, -5}, {8, -1}}, truncation, zz), 1);
    const auto rhs = add(even, scale(odd, bigint(c)));
    for (std::size_t n = 0; n <= truncation; ++n) {
        if (lhs[n] != rhs[n]) {
            return n;
        }
    }
    return std::nullopt;
}

inline bool dissection_check(std::size_t truncation)
{
    if (truncation < 2) {
        throw invalid_input("dissection check needs T >= 2");
    }
    return !dissection_mismatch(truncation).has_value();
}

} // namespace etacong
