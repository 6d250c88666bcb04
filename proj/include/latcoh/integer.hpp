#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latcoh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Caller passed arguments that violate an operation's documented domain.
class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition relating several inputs does not hold (e.g. X*Y != 0).
class contract_violation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A configured resource bound (word length, cochain size) was exceeded.
class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a convention bug.
class internal_error : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Floor division (rounds toward negative infinity), unlike operator/.
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Residue in [0, |m|).
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += abs(m);
    return r;
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& q) {
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::optional<std::int64_t> to_int64(const Integer& x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return static_cast<std::int64_t>(x);
}

inline Integer ipow(Integer base, unsigned exp) {
    Integer r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

} // namespace latcoh
