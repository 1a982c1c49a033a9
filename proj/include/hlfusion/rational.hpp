#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hlfusion {

using Rational = boost::multiprecision::cpp_rational;
using RationalVec = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVec>;

// Accepts "p", "p/q" and plain decimals such as "-0.35" or "2.5e-1".
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

std::string to_string(const Rational& q);

// Exact inverse by Gauss-Jordan; throws std::domain_error if singular.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace hlfusion
