#pragma once

#include <map>
#include <string>

namespace handsaw {

// Rational function of the form prod_m (u - m)^{e(m)} with integer roots m and
// integer exponents e(m). Invariant: no zero exponents are stored, so the map
// is a canonical form.
class IntRootedRational {
 public:
  IntRootedRational() = default;

  static IntRootedRational one() { return {}; }
  static IntRootedRational factor(long long root, long long exponent = 1);

  void multiply_factor(long long root, long long exponent);
  IntRootedRational inverse() const;

  // Sum of exponents (degree as a rational function).
  long long degree() const;
  bool is_polynomial() const;
  bool is_one() const { return exponents_.empty(); }
  // Exponent of (u - root); zero when absent.
  long long exponent(long long root) const;
  const std::map<long long, long long>& exponents() const { return exponents_; }

  friend IntRootedRational operator*(IntRootedRational a, const IntRootedRational& b) {
    for (const auto& [r, e] : b.exponents_) a.multiply_factor(r, e);
    return a;
  }
  friend bool operator==(const IntRootedRational& a, const IntRootedRational& b) {
    return a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const IntRootedRational& a, const IntRootedRational& b) {
    return !(a == b);
  }
  friend bool operator<(const IntRootedRational& a, const IntRootedRational& b) {
    return a.exponents_ < b.exponents_;
  }

  // Factors ascending by root, exponent always written: "(u)^-1 (u-2)^1".
  // The identity prints "1".
  std::string str() const;

 private:
  std::map<long long, long long> exponents_;
};

}  // namespace handsaw
