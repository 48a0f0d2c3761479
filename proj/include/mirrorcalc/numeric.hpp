#pragma once

// Exact arithmetic backbone: arbitrary-precision integers and rationals.
// No floating point is used anywhere in the math layers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mirrorcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Quotient rounded toward -inf (cpp_int's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Extended gcd: returns g >= 0 with x*a + y*b = g.
struct ExtGcd {
    Int g, x, y;
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denom(r) == 1; }

// Canonical text form: lowest terms, sign on the numerator, "p" when q == 1.
inline std::string rat_to_string(const Rat& r) {
    Int n = numer(r), d = denom(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        return Rat(n, d);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    }
}

// FNV-1a, used for input digests in run reports.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace mirrorcalc
