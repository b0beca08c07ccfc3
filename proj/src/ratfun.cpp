#include "handsaw/ratfun.hpp"

#include <sstream>

namespace handsaw {

IntRootedRational IntRootedRational::factor(long long root, long long exponent) {
  IntRootedRational f;
  f.multiply_factor(root, exponent);
  return f;
}

void IntRootedRational::multiply_factor(long long root, long long exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = exponents_.emplace(root, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) exponents_.erase(it);
  }
}

IntRootedRational IntRootedRational::inverse() const {
  IntRootedRational out;
  for (const auto& [r, e] : exponents_) out.exponents_[r] = -e;
  return out;
}

long long IntRootedRational::degree() const {
  long long d = 0;
  for (const auto& [r, e] : exponents_) d += e;
  return d;
}

bool IntRootedRational::is_polynomial() const {
  for (const auto& [r, e] : exponents_)
    if (e < 0) return false;
  return true;
}

long long IntRootedRational::exponent(long long root) const {
  auto it = exponents_.find(root);
  return it == exponents_.end() ? 0 : it->second;
}

std::string IntRootedRational::str() const {
  if (exponents_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, e] : exponents_) {
    if (!first) os << " ";
    first = false;
    os << "(u";
    if (r > 0)
      os << "-" << r;
    else if (r < 0)
      os << "+" << -r;
    os << ")^" << e;
  }
  return os.str();
}

}  // namespace handsaw
