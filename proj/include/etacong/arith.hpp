#pragma once

// Integer and rational helpers shared by every module: divisors, prime
// factorisation, squarefree tests, the Kronecker symbol and exact rationals.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace etacong {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class domain_mismatch : public error {
public:
    using error::error;
};

class not_invertible : public error {
public:
    using error::error;
};

class cap_exceeded : public error {
public:
    using error::error;
};

class unsupported_level : public error {
public:
    using error::error;
};

class invalid_input : public error {
public:
    using error::error;
};

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1) {
        throw invalid_input("factorize: argument must be positive");
    }
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (auto [p, e] : factorize(n)) {
        out.push_back(p);
    }
    return out;
}

/// Positive divisors of n in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

/// Sieve of Eratosthenes.
inline std::vector<std::int64_t> primes_up_to(std::int64_t limit)
{
    std::vector<std::int64_t> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) {
            continue;
        }
        out.push_back(p);
        for (std::int64_t q = p * p; q <= limit; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return out;
}

inline bool is_squarefree(std::int64_t n)
{
    for (auto [p, e] : factorize(n)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

inline std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t out = n;
    for (auto [p, e] : factorize(n)) {
        out = out / p * (p - 1);
    }
    return out;
}

/// Residue of a modulo m in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Jacobi symbol (a/n) for odd positive n.
inline int jacobi(std::int64_t a, std::int64_t n)
{
    if (n <= 0 || n % 2 == 0) {
        throw invalid_input("jacobi: modulus must be odd and positive");
    }
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) {
                result = -result;
            }
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Kronecker symbol (a/n) for arbitrary integers, with the usual conventions
/// (a/0) = [|a| = 1], (a/-1) = sign(a), (a/2) = 0 for even a and otherwise
/// +1 or -1 according to a mod 8.
inline int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            result = -result;
        }
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) {
            return 0;
        }
        const std::int64_t r = mod_floor(a, 8);
        if (r == 3 || r == 5) {
            result = -result;
        }
    }
    if (n == 1) {
        return result;
    }
    return result * jacobi(a, n);
}

inline bigint ipow(bigint base, unsigned exponent)
{
    bigint out = 1;
    while (exponent != 0) {
        if (exponent & 1U) {
            out *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return out;
}

/// Largest integer not exceeding x.
inline bigint floor(const rational& x)
{
    const bigint& num = boost::multiprecision::numerator(x);
    const bigint& den = boost::multiprecision::denominator(x);
    bigint q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

/// Canonical "p/q" text with a positive denominator (always two fields).
inline std::string to_string(const rational& x)
{
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

/// Integer text when x is integral, "p/q" otherwise.
inline std::string to_short_string(const rational& x)
{
    if (boost::multiprecision::denominator(x) == 1) {
        return boost::multiprecision::numerator(x).str();
    }
    return to_string(x);
}

inline rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return rational(bigint(text));
    }
    return rational(bigint(text.substr(0, slash)), bigint(text.substr(slash + 1)));
}

} // namespace etacong
