#include "handsaw/dimvec.hpp"

#include <sstream>
#include <stdexcept>

namespace handsaw {

bool componentwise_le(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DimensionVector add(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension vector size mismatch");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DimensionVector subtract(const DimensionVector& a, const DimensionVector& b) {
  if (!componentwise_le(b, a)) throw std::invalid_argument("subtract: not componentwise <=");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

long long total(const DimensionVector& v) {
  long long t = 0;
  for (int x : v) t += x;
  return t;
}

bool is_zero(const DimensionVector& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

std::string format_vector(const DimensionVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace handsaw
