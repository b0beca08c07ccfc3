#pragma once

#include <map>
#include <string>
#include <string_view>

#include "handsaw/ints.hpp"

namespace handsaw {

// Laurent polynomial in one variable with exact integer coefficients.
// Invariant: the coefficient map never stores zeros, so equality of maps is
// equality of polynomials.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial constant(Int c);
  // c * t^power
  static LaurentPolynomial monomial(Int c, int power);
  static LaurentPolynomial one() { return constant(1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Zero when the power is absent.
  Int coefficient(int power) const;
  // Smallest/largest stored power; call only on nonzero polynomials.
  int min_power() const;
  int max_power() const;
  Int evaluate_at_one() const;
  bool nonnegative_coefficients() const;
  // Substitute t -> 1/t.
  LaurentPolynomial reciprocal() const;

  const std::map<int, Int>& terms() const { return coeffs_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
    a += b;
    return a;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
    a -= b;
    return a;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.coeffs_ < b.coeffs_;
  }

  // "0", "1 + 2*t + t^2", "t^-1 + t"; minus signs fold into the separator.
  std::string str(std::string_view var = "t") const;

 private:
  void add_term(int power, const Int& c);

  std::map<int, Int> coeffs_;
};

}  // namespace handsaw
