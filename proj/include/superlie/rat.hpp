// Exact rational scalars. Everything in this library is computed over these;
// "equals zero" always means exact rational zero.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace superlie {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // canonical: lowest terms, den > 0

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "p" or "p/q" (q != 0). Throws superlie::error on malformed input.
Rat parse_rat(std::string_view s);

/// Serialize as "p" or "p/q" with q > 0.
std::string rat_str(const Rat& r);

inline int sign_pow(unsigned long e) { return (e & 1u) ? -1 : 1; }

}  // namespace superlie
