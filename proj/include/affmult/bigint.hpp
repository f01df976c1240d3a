#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace affmult {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace affmult
