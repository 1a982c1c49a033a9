#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace hlfusion {

// 50 significant digits; used where long operator chains cancel down to
// quantities of size t^length (deep alcove walks at the nodes).
using RealMP = boost::multiprecision::cpp_bin_float_50;
using ComplexMP = boost::multiprecision::cpp_complex_50;

}  // namespace hlfusion
