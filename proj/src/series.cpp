#include "handsaw/series.hpp"

#include <stdexcept>

namespace handsaw {

TruncatedSeries::TruncatedSeries(DimensionVector cutoff) : cutoff_(std::move(cutoff)) {
  for (int c : cutoff_)
    if (c < 0) throw std::invalid_argument("negative cutoff");
}

TruncatedSeries TruncatedSeries::one(DimensionVector cutoff) {
  TruncatedSeries s(std::move(cutoff));
  s.add_term(DimensionVector(s.cutoff_.size(), 0), LaurentPolynomial::one());
  return s;
}

TruncatedSeries TruncatedSeries::geometric(DimensionVector cutoff, const DimensionVector& step,
                                           int tpower) {
  TruncatedSeries s(std::move(cutoff));
  if (step.size() != s.cutoff_.size()) throw std::invalid_argument("geometric: step size mismatch");
  if (is_zero(step)) throw std::invalid_argument("geometric: zero step");
  for (int x : step)
    if (x < 0) throw std::invalid_argument("geometric: negative step");
  DimensionVector v(s.cutoff_.size(), 0);
  int k = 0;
  while (componentwise_le(v, s.cutoff_)) {
    s.add_term(v, LaurentPolynomial::monomial(1, k * tpower));
    v = add(v, step);
    ++k;
  }
  return s;
}

LaurentPolynomial TruncatedSeries::coefficient(const DimensionVector& v) const {
  if (v.size() != cutoff_.size()) throw std::invalid_argument("coefficient: size mismatch");
  auto it = terms_.find(v);
  return it == terms_.end() ? LaurentPolynomial() : it->second;
}

void TruncatedSeries::add_term(const DimensionVector& v, const LaurentPolynomial& p) {
  if (v.size() != cutoff_.size()) throw std::invalid_argument("add_term: size mismatch");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("add_term: negative exponent");
  if (!componentwise_le(v, cutoff_)) return;
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(v, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  if (cutoff_ != other.cutoff_) throw std::invalid_argument("series cutoff mismatch");
  for (const auto& [v, p] : other.terms_) add_term(v, p);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.cutoff_ != b.cutoff_) throw std::invalid_argument("series cutoff mismatch");
  TruncatedSeries out(a.cutoff_);
  for (const auto& [va, pa] : a.terms_)
    for (const auto& [vb, pb] : b.terms_) {
      DimensionVector v = add(va, vb);
      if (componentwise_le(v, a.cutoff_)) out.add_term(v, pa * pb);
    }
  return out;
}

}  // namespace handsaw
