#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace conductor {

using Rational = boost::rational<std::int64_t>;

// Canonical "p/q" form with q > 0; integers keep the "/1".
std::string format_rational(const Rational& r);
// Accepts "p/q" or "p".
Rational parse_rational(const std::string& s);

}  // namespace conductor
