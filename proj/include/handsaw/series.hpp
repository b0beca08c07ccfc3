#pragma once

#include <map>
#include <string>

#include "handsaw/dimvec.hpp"
#include "handsaw/laurent.hpp"

namespace handsaw {

// Formal power series in the group-like variables e^{v} (v a dimension vector
// with nonnegative entries) whose coefficients are Laurent polynomials in t.
// Truncated componentwise: any term with v !<= cutoff is dropped, which makes
// multiplication exact on the retained range because supports are >= 0.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(DimensionVector cutoff);

  static TruncatedSeries one(DimensionVector cutoff);
  // Expansion of 1/(1 - t^tpower * e^step) to the cutoff. step must be
  // nonnegative and nonzero.
  static TruncatedSeries geometric(DimensionVector cutoff, const DimensionVector& step,
                                   int tpower);

  const DimensionVector& cutoff() const { return cutoff_; }
  const std::map<DimensionVector, LaurentPolynomial>& terms() const { return terms_; }
  // Zero polynomial when absent; v must have the right length.
  LaurentPolynomial coefficient(const DimensionVector& v) const;

  void add_term(const DimensionVector& v, const LaurentPolynomial& p);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

 private:
  DimensionVector cutoff_;
  std::map<DimensionVector, LaurentPolynomial> terms_;
};

}  // namespace handsaw
