#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mhd {

// Exact integer type for quantities that overflow 64 bits (shifted-product
// differences, polynomial values on large boxes).
using BigInt = boost::multiprecision::cpp_int;

} // namespace mhd
