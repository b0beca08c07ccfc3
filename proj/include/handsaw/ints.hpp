#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace handsaw {

// Exact integer used for all polynomial/series coefficients. Counts of fixed
// points and KL coefficients stay tiny at desk scale, but nothing here should
// ever silently wrap.
using Int = boost::multiprecision::cpp_int;

}  // namespace handsaw
