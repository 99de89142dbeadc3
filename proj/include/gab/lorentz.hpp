#pragma once

// Finitely supported coefficient vectors, the non-increasing rearrangement,
// and the discrete weighted Lorentz / Marcinkiewicz norms, together with
// the embedding and duality certifications built on them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gab/weights.hpp"

namespace gab {

using Scalar = std::complex<double>;

/// Finitely supported map index(>=1) -> scalar. No explicit zeros stored.
class CoefVec {
  std::map<int, Scalar> e_;

 public:
  CoefVec() = default;

  void set(int n, Scalar v) {
    if (n < 1) throw std::invalid_argument("CoefVec: index must be >= 1");
    if (v == Scalar{0.0, 0.0}) e_.erase(n);
    else e_[n] = v;
  }
  void set(int n, double v) { set(n, Scalar{v, 0.0}); }
  void add(int n, Scalar v) { set(n, at(n) + v); }
  void add(int n, double v) { add(n, Scalar{v, 0.0}); }

  Scalar at(int n) const {
    auto it = e_.find(n);
    return it == e_.end() ? Scalar{0.0, 0.0} : it->second;
  }

  const std::map<int, Scalar>& entries() const { return e_; }
  int support_size() const { return static_cast<int>(e_.size()); }
  int max_index() const { return e_.empty() ? 0 : e_.rbegin()->first; }

  std::set<int> support() const {
    std::set<int> s;
    for (auto& [n, v] : e_) s.insert(n);
    return s;
  }

  bool is_real() const {
    for (auto& [n, v] : e_)
      if (v.imag() != 0.0) return false;
    return true;
  }

  CoefVec restricted(const std::set<int>& A) const {
    CoefVec r;
    for (auto& [n, v] : e_)
      if (A.count(n)) r.set(n, v);
    return r;
  }

  friend CoefVec operator-(const CoefVec& a, const CoefVec& b) {
    CoefVec r = a;
    for (auto& [n, v] : b.e_) r.add(n, -v);
    return r;
  }
  friend CoefVec operator+(const CoefVec& a, const CoefVec& b) {
    CoefVec r = a;
    for (auto& [n, v] : b.e_) r.add(n, v);
    return r;
  }

  static CoefVec indicator(const std::set<int>& A) {
    CoefVec r;
    for (int n : A) r.set(n, 1.0);
    return r;
  }
};

/// Non-increasing rearrangement of the moduli. Equal moduli keep the
/// ascending-index order (determinism; the norms do not depend on it).
inline std::vector<double> rearrange(const CoefVec& s) {
  std::vector<std::pair<double, int>> m;
  m.reserve(static_cast<std::size_t>(s.support_size()));
  for (auto& [n, v] : s.entries()) m.emplace_back(std::abs(v), n);
  std::sort(m.begin(), m.end(), [](auto& a, auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<double> out;
  out.reserve(m.size());
  for (auto& [mod, n] : m) out.push_back(mod);
  return out;
}

inline void check_truncation(const CoefVec& s, const WeightSeq& eta) {
  if (s.support_size() > eta.length())
    throw std::invalid_argument("coefficient support exceeds weight truncation");
}

/// l^1_eta norm: sum_j s*_j eta(j)/j.
inline double norm_l1(const CoefVec& s, const WeightSeq& eta) {
  check_truncation(s, eta);
  auto r = rearrange(s);
  KahanSum acc;
  for (std::size_t j = 0; j < r.size(); ++j)
    acc.add(r[j] * eta.at(static_cast<int>(j) + 1) / (double(j) + 1.0));
  return acc.value();
}

/// l^1_{hat eta} norm: sum_j s*_j Delta eta(j). Requires eta non-decreasing.
inline double norm_l1_hat(const CoefVec& s, const WeightSeq& eta) {
  check_truncation(s, eta);
  if (!eta.nondecreasing())
    throw std::invalid_argument("norm_l1_hat: weight must be non-decreasing");
  auto r = rearrange(s);
  KahanSum acc;
  for (std::size_t j = 0; j < r.size(); ++j) {
    int jj = static_cast<int>(j) + 1;
    acc.add(r[j] * (eta.at(jj) - eta.at(jj - 1)));
  }
  return acc.value();
}

/// l^r_eta norm: (sum_j [s*_j eta(j)]^r / j)^{1/r}; r = infinity gives
/// sup_j s*_j eta(j).
inline double norm_lr(const CoefVec& s, const WeightSeq& eta, double r) {
  check_truncation(s, eta);
  if (r < 1.0) throw std::invalid_argument("norm_lr: r must be >= 1");
  auto m = rearrange(s);
  if (std::isinf(r)) {
    double sup = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
      sup = std::max(sup, m[j] * eta.at(static_cast<int>(j) + 1));
    return sup;
  }
  KahanSum acc;
  for (std::size_t j = 0; j < m.size(); ++j)
    acc.add(std::pow(m[j] * eta.at(static_cast<int>(j) + 1), r) / (double(j) + 1.0));
  return std::pow(acc.value(), 1.0 / r);
}

/// Marcinkiewicz m(eta) norm: max_k (eta(k)/k) sum_{j<=k} s*_j.
inline double norm_m(const CoefVec& s, const WeightSeq& eta) {
  check_truncation(s, eta);
  auto r = rearrange(s);
  double best = 0.0;
  KahanSum prefix;
  for (std::size_t j = 0; j < r.size(); ++j) {
    prefix.add(r[j]);
    int k = static_cast<int>(j) + 1;
    best = std::max(best, eta.at(k) / k * prefix.value());
  }
  return best;
}

// ---- embedding certification (Lemma: summing comparison <=> norm-1 embedding)

struct EmbedReport {
  bool claimed = false;     // summing(nu) <= summing(xi) entrywise
  double worst_ratio = 0;   // max over probes of ||s||_{l1_nu} / ||s||_{l1_xi}
  CoefVec witness;          // flat indicator violating the embedding, if any
};

/// Certifies (or refutes) l^1_xi -> l^1_nu with norm 1. Probes are the flat
/// indicators 1_{1..k} (the extremal tests) plus random decreasing vectors.
inline EmbedReport embed_const(const WeightSeq& nu, const WeightSeq& xi, int trials,
                               std::uint64_t seed = 1) {
  if (!nu.positive() || !xi.positive())
    throw std::invalid_argument("embed_const: weights must be positive");
  if (nu.length() != xi.length())
    throw std::invalid_argument("embed_const: truncations differ");
  const int M = nu.length();

  EmbedReport rep;
  WeightSeq tn = summing(nu), tx = summing(xi);
  rep.claimed = true;
  for (int j = 1; j <= M; ++j)
    if (tn.at(j) > tx.at(j) * (1.0 + 1e-12)) rep.claimed = false;

  auto ratio = [&](const CoefVec& s) { return norm_l1(s, nu) / norm_l1(s, xi); };

  bool have_witness = false;
  std::set<int> flat;
  for (int k = 1; k <= M; ++k) {
    flat.insert(k);
    CoefVec s = CoefVec::indicator(flat);
    double q = ratio(s);
    if (q > rep.worst_ratio) rep.worst_ratio = q;
    if (!rep.claimed && !have_witness && q > 1.0 + 1e-12) {
      rep.witness = s;
      have_witness = true;
    }
  }
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    CoefVec s;
    double cur = rng.uniform(0.5, 2.0);
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(M)));
    for (int j = 1; j <= len; ++j) {
      s.set(j, cur);
      cur *= rng.uniform(0.3, 1.0);
    }
    rep.worst_ratio = std::max(rep.worst_ratio, ratio(s));
  }
  return rep;
}

// ---- duality certification ((l^1_{hat eta})* = m(eta')) ---------------------

struct DualNormCheck {
  double m_norm = 0;              // ||b||_{m(eta')}
  double functional_norm_lb = 0;  // sup over sign-matched indicators of |<b,1>|/eta(|A|)
  bool holder_ub_ok = false;      // sum|a_j b_j| <= m_norm * ||a||_{l1_hat} on random a
};

inline DualNormCheck dual_norm_check(const CoefVec& b, const WeightSeq& eta, int M_trunc,
                                     int trials = 1000, std::uint64_t seed = 7) {
  if (b.max_index() > M_trunc || M_trunc > eta.length())
    throw std::invalid_argument("dual_norm_check: support outside truncation");
  DualNormCheck out;
  out.m_norm = norm_m(b, dual(eta));

  // Sign-matched indicators on the top-k support sets of b: the functional
  // b applied to 1_{conj(eps) A} has value sum_{j<=k} b*_j, and the l1_hat
  // norm of the indicator is eta(k).
  std::vector<std::pair<double, int>> m;
  for (auto& [n, v] : b.entries()) m.emplace_back(std::abs(v), n);
  std::sort(m.begin(), m.end(), [](auto& a, auto& c) {
    if (a.first != c.first) return a.first > c.first;
    return a.second < c.second;
  });
  KahanSum prefix;
  for (std::size_t k = 0; k < m.size(); ++k) {
    prefix.add(m[k].first);
    out.functional_norm_lb =
        std::max(out.functional_norm_lb, prefix.value() / eta.at(static_cast<int>(k) + 1));
  }

  Rng rng(seed);
  out.holder_ub_ok = true;
  for (int t = 0; t < trials; ++t) {
    CoefVec a;
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(M_trunc)));
    for (int j = 1; j <= len; ++j)
      if (rng.uniform() < 0.7) a.set(j, rng.uniform(-1.0, 1.0));
    if (a.support_size() == 0) continue;
    KahanSum pairing;
    for (auto& [n, v] : a.entries()) pairing.add(std::abs(v) * std::abs(b.at(n)));
    double rhs = out.m_norm * norm_l1_hat(a, eta);
    if (pairing.value() > rhs * (1.0 + 1e-9) + 1e-12) out.holder_ub_ok = false;
  }
  return out;
}

}  // namespace gab
