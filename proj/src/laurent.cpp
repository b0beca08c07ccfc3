#include "handsaw/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace handsaw {

LaurentPolynomial LaurentPolynomial::constant(Int c) { return monomial(std::move(c), 0); }

LaurentPolynomial LaurentPolynomial::monomial(Int c, int power) {
  LaurentPolynomial p;
  if (c != 0) p.coeffs_[power] = std::move(c);
  return p;
}

Int LaurentPolynomial::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentPolynomial::min_power() const {
  if (coeffs_.empty()) throw std::logic_error("min_power of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPolynomial::max_power() const {
  if (coeffs_.empty()) throw std::logic_error("max_power of zero polynomial");
  return coeffs_.rbegin()->first;
}

Int LaurentPolynomial::evaluate_at_one() const {
  Int total = 0;
  for (const auto& [p, c] : coeffs_) total += c;
  return total;
}

bool LaurentPolynomial::nonnegative_coefficients() const {
  for (const auto& [p, c] : coeffs_)
    if (c < 0) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial out;
  for (const auto& [p, c] : coeffs_) out.coeffs_[-p] = c;
  return out;
}

void LaurentPolynomial::add_term(int power, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [p, c] : other.coeffs_) add_term(p, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [p, c] : other.coeffs_) add_term(p, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [pa, ca] : a.coeffs_)
    for (const auto& [pb, cb] : b.coeffs_) out.add_term(pa + pb, ca * cb);
  return out;
}

std::string LaurentPolynomial::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, coeff] : coeffs_) {
    Int c = coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (power == 0) {
      os << c.str();
    } else {
      if (c != 1) os << c.str() << "*";
      os << var;
      if (power != 1) os << "^" << power;
    }
  }
  return os.str();
}

}  // namespace handsaw
