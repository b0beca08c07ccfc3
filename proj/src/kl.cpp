#include "handsaw/kl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace handsaw {

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  std::vector<bool> seen(line_.size(), false);
  for (int v : line_) {
    if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
      throw std::invalid_argument("permutation: not a rearrangement of 1..N");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  return Permutation(std::move(line));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(line_.size());
  for (int a = 1; a <= size(); ++a) inv[line_[a - 1] - 1] = a;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> line(a.size());
  for (int x = 1; x <= a.size(); ++x) line[x - 1] = a(b(x));
  return Permutation(std::move(line));
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("times_s: index out of range");
  std::vector<int> line = line_;
  std::swap(line[i - 1], line[i]);
  return Permutation(std::move(line));
}

Permutation Permutation::s_times(int i) const {
  if (i < 1 || i >= size()) throw std::invalid_argument("s_times: index out of range");
  std::vector<int> line = line_;
  for (int& v : line) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(line));
}

long long Permutation::length() const {
  long long inv = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (line_[a] > line_[b]) ++inv;
  return inv;
}

int Permutation::first_right_descent() const {
  for (int i = 1; i < size(); ++i)
    if (line_[i - 1] > line_[i]) return i;
  return 0;
}

std::string Permutation::str() const {
  std::ostringstream os;
  if (size() <= 9) {
    for (int v : line_) os << v;
  } else {
    for (int a = 0; a < size(); ++a) {
      if (a) os << ",";
      os << line_[a];
    }
  }
  return os.str();
}

Permutation parse_permutation(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("permutation: empty input");
  std::vector<int> line;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) throw std::invalid_argument("permutation: empty entry");
      std::size_t pos = 0;
      line.push_back(std::stoi(part, &pos));
      if (pos != part.size()) throw std::invalid_argument("permutation: bad entry '" + part + "'");
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("permutation: expected digits 1-9");
      line.push_back(c - '0');
    }
  }
  return Permutation(std::move(line));
}

bool bruhat_le(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw std::invalid_argument("bruhat_le: size mismatch");
  const int n = x.size();
  std::vector<int> xs, ws;
  xs.reserve(n);
  ws.reserve(n);
  for (int k = 1; k <= n - 1; ++k) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x(k), std::greater<>()), x(k));
    ws.insert(std::upper_bound(ws.begin(), ws.end(), w(k), std::greater<>()), w(k));
    for (int a = 0; a < k; ++a)
      if (xs[a] > ws[a]) return false;
  }
  return true;
}

const std::vector<Permutation>& symmetric_group(int n) {
  static std::map<int, std::vector<Permutation>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Permutation> group;
  do {
    group.push_back(Permutation(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return cache.emplace(n, std::move(group)).first->second;
}

LaurentPolynomial KLTable::polynomial(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw std::invalid_argument("kl: size mismatch");
  if (x == w) return LaurentPolynomial::one();
  if (!bruhat_le(x, w)) return LaurentPolynomial();
  auto key = std::make_pair(x.one_line(), w.one_line());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const int s = w.first_right_descent();
  const Permutation ws = w.times_s(s);
  const Permutation xs = x.times_s(s);
  const int c = xs.length() < x.length() ? 1 : 0;

  LaurentPolynomial p = LaurentPolynomial::monomial(1, 1 - c) * polynomial(xs, ws) +
                        LaurentPolynomial::monomial(1, c) * polynomial(x, ws);
  const long long lw = w.length(), lws = lw - 1;
  for (const Permutation& z : symmetric_group(w.size())) {
    if (z.times_s(s).length() > z.length()) continue;
    const long long lz = z.length();
    if ((lws - lz) % 2 == 0) continue;  // mu lives in degree (lws-lz-1)/2, an integer
    if (!bruhat_le(x, z) || !bruhat_le(z, ws)) continue;
    Int mu = polynomial(z, ws).coefficient(static_cast<int>((lws - lz - 1) / 2));
    if (mu == 0) continue;
    p -= LaurentPolynomial::monomial(mu, static_cast<int>((lw - lz) / 2)) * polynomial(x, z);
  }
  memo_.emplace(std::move(key), p);
  return p;
}

namespace {

std::vector<int> block_generators(const std::vector<long long>& weight) {
  std::vector<int> gens;
  for (std::size_t i = 1; i < weight.size(); ++i)
    if (weight[i - 1] == weight[i]) gens.push_back(static_cast<int>(i));
  return gens;
}

}  // namespace

Permutation longest_double_coset_rep(const Permutation& w, const std::vector<long long>& lambda,
                                     const std::vector<long long>& mu) {
  if (static_cast<int>(lambda.size()) != w.size() || static_cast<int>(mu.size()) != w.size())
    throw std::invalid_argument("double coset: weight size mismatch");
  const auto left = block_generators(lambda);
  const auto right = block_generators(mu);
  Permutation current = w;
  long long len = current.length();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : left) {
      Permutation candidate = current.s_times(i);
      if (candidate.length() > len) {
        current = std::move(candidate);
        ++len;
        changed = true;
      }
    }
    for (int i : right) {
      Permutation candidate = current.times_s(i);
      if (candidate.length() > len) {
        current = std::move(candidate);
        ++len;
        changed = true;
      }
    }
  }
  return current;
}

std::pair<IntegerWeight, IntegerWeight> weights_from_drinfeld(const SpectralData& s) {
  IntegerWeight lambda, mu_prime;
  for (int i = s.n; i >= 1; --i)
    for (long long m : s.zeros[i - 1]) {
      lambda.push_back(i);
      mu_prime.push_back(-m);
    }
  return {lambda, mu_prime};
}

Permutation match_permutation(const IntegerWeight& base, const IntegerWeight& target) {
  if (base.size() != target.size()) throw std::invalid_argument("match: size mismatch");
  const int n = static_cast<int>(base.size());
  std::vector<int> line(n);
  std::vector<bool> used(n, false);
  for (int b = 0; b < n; ++b) {
    int slot = -1;
    for (int a = 0; a < n; ++a)
      if (!used[a] && target[a] == base[b]) {
        slot = a;
        break;
      }
    if (slot < 0) throw std::invalid_argument("match: target is not a rearrangement of base");
    used[slot] = true;
    line[b] = slot + 1;  // w(b) = slot
  }
  return Permutation(std::move(line));
}

Int composition_multiplicity(const SpectralData& s, const EllWeight& q, KLTable& table) {
  if (static_cast<int>(q.tiers.size()) != s.n)
    throw std::invalid_argument("composition_multiplicity: tier count mismatch");
  if (!is_ell_dominant(q))
    throw std::invalid_argument("composition_multiplicity: weight is not l-dominant");
  FramingVector w = s.framing();
  for (int i = 1; i <= s.n; ++i)
    if (q.tiers[i - 1].degree() != w[i - 1])
      throw std::invalid_argument("composition_multiplicity: tier degree mismatch");

  auto [lambda, mu_prime] = weights_from_drinfeld(s);
  IntegerWeight nu_prime;
  for (int i = s.n; i >= 1; --i)
    for (const auto& [root, exp] : q.tiers[i - 1].exponents())
      for (long long r = 0; r < exp; ++r) nu_prime.push_back(-root);

  IntegerWeight mu = mu_prime;
  std::sort(mu.begin(), mu.end(), std::greater<>());
  IntegerWeight nu_sorted = nu_prime;
  std::sort(nu_sorted.begin(), nu_sorted.end(), std::greater<>());
  if (nu_sorted != mu) return 0;

  Permutation wp = match_permutation(mu, mu_prime);
  Permutation xp = match_permutation(mu, nu_prime);
  Permutation w_lr = longest_double_coset_rep(wp, lambda, mu);
  Permutation x_lr = longest_double_coset_rep(xp, lambda, mu);
  return table.polynomial(w_lr, x_lr).evaluate_at_one();
}

std::vector<DecompositionRow> decomposition_matrix(const SpectralData& s,
                                                   const DimensionVector& vmax, KLTable& table,
                                                   int workers) {
  std::vector<DecompositionRow> rows;
  for (const Stratum& stratum : strata(s, vmax, workers))
    rows.push_back({stratum, composition_multiplicity(s, stratum.weight, table)});
  return rows;
}

Multisegment multisegments(const GradedDimVector& g) {
  Multisegment out;
  for (const auto& [key, c] : g.w) {
    auto [i, m] = key;
    for (int r = 0; r < c; ++r) out.insert({-m + 1, i});
  }
  return out;
}

}  // namespace handsaw
