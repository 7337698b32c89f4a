#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zetaspan {

// Exact integer coefficient type. Convolution values are small at desk
// scale but unbounded in principle, so everything arithmetical in the
// incidence layer runs on arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Int& v) { return v.str(); }

}  // namespace zetaspan
