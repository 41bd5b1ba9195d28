#pragma once
// Arbitrary-precision integer/rational aliases used at exactness boundaries
// (validated factorizations, big witnesses, phase-2 confirmations).

#include <boost/multiprecision/cpp_int.hpp>

namespace ubv {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

}  // namespace ubv
