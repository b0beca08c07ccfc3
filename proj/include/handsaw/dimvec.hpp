#pragma once

#include <string>
#include <vector>

namespace handsaw {

// Dimension vector over the interior index set I = {1,...,n-1}; entry j-1
// holds v_j. Framing vectors run over the full tier set {1,...,n}.
using DimensionVector = std::vector<int>;
using FramingVector = std::vector<int>;

bool componentwise_le(const DimensionVector& a, const DimensionVector& b);
DimensionVector add(const DimensionVector& a, const DimensionVector& b);
// Requires b <= a componentwise.
DimensionVector subtract(const DimensionVector& a, const DimensionVector& b);
long long total(const DimensionVector& v);
bool is_zero(const DimensionVector& v);

// "(1,2,0)"; the empty vector prints "()".
std::string format_vector(const DimensionVector& v);

}  // namespace handsaw
