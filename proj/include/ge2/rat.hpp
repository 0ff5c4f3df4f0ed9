#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ge2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Errors map to CLI exit codes: parse -> 1, domain -> 2, invariant -> 3.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int num(Rat const &r) { return boost::multiprecision::numerator(r); }
inline Int den(Rat const &r) { return boost::multiprecision::denominator(r); }

// floor(a/b) for b > 0
inline Int floor_div(Int const &a, Int const &b)
{
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

inline Int rat_floor(Rat const &r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(Rat const &r) { return -floor_div(-num(r), den(r)); }

// nearest integer, ties rounded up (deterministic)
inline Int rat_round(Rat const &r) { return rat_floor(r + Rat(1, 2)); }

std::string rat_str(Rat const &r);
Rat rat_parse(std::string const &s);

} // namespace ge2
