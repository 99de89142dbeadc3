#pragma once

// Weight sequences and their calculus: the transforms delta/summing/
// difference/dual, class membership (positive, non-decreasing, doubling,
// quasi-concave, concave), truncated dilation-index estimates, and the
// combined quantities S_N, T_N, OT_N, U_N that drive the greedy bounds.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gab/rng.hpp"

namespace gab {

/// Kahan compensated accumulator; long weight sums must not drift
/// above the 1e-12 identity tolerances.
class KahanSum {
  double s_ = 0.0, c_ = 0.0;

 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }
};

/// Finite truncation eta(1..M) of a non-negative weight with eta(1)>0.
/// The convention eta(0)=0 is applied by every transform.
class WeightSeq {
  std::vector<double> v_;  // v_[j-1] = eta(j)
  std::string label_;

 public:
  explicit WeightSeq(std::vector<double> values, std::string label = "")
      : v_(std::move(values)), label_(std::move(label)) {
    if (v_.empty()) throw std::invalid_argument("WeightSeq: empty");
    if (!(v_[0] > 0.0)) throw std::invalid_argument("WeightSeq: eta(1) must be > 0");
    for (double x : v_) {
      if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("WeightSeq: entries must be finite and >= 0");
    }
  }

  int length() const { return static_cast<int>(v_.size()); }

  /// eta(j) for 1 <= j <= M; eta(0) = 0.
  double at(int j) const {
    if (j == 0) return 0.0;
    if (j < 0 || j > length()) throw std::out_of_range("WeightSeq::at");
    return v_[static_cast<std::size_t>(j - 1)];
  }

  const std::vector<double>& values() const { return v_; }
  const std::string& label() const { return label_; }

  bool positive() const {
    for (double x : v_)
      if (!(x > 0.0)) return false;
    return true;
  }

  bool nondecreasing(double rtol = 1e-12) const {
    for (int j = 2; j <= length(); ++j)
      if (at(j) < at(j - 1) * (1.0 - rtol) - rtol) return false;
    return true;
  }
};

// ---- named generators (the config-file weight literals) -------------------

inline WeightSeq pow_weight(double alpha, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  for (int j = 1; j <= M; ++j) v[j - 1] = std::pow(double(j), alpha);
  return WeightSeq(std::move(v), "pow:" + std::to_string(alpha));
}

inline WeightSeq log_weight(double gamma, double c, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  for (int j = 1; j <= M; ++j) v[j - 1] = std::pow(std::log(j + c), gamma);
  return WeightSeq(std::move(v), "log:" + std::to_string(gamma));
}

inline WeightSeq powlog_weight(double alpha, double gamma, double c, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  for (int j = 1; j <= M; ++j)
    v[j - 1] = std::pow(double(j), alpha) * std::pow(std::log(j + c), gamma);
  return WeightSeq(std::move(v), "powlog");
}

inline WeightSeq const_weight(int M, double value = 1.0) {
  return WeightSeq(std::vector<double>(static_cast<std::size_t>(M), value), "const");
}

// ---- transforms ------------------------------------------------------------

/// Delta eta(j) = eta(j) - eta(j-1), with eta(0)=0.
inline WeightSeq delta(const WeightSeq& eta) {
  std::vector<double> v(static_cast<std::size_t>(eta.length()));
  for (int j = 1; j <= eta.length(); ++j) v[j - 1] = eta.at(j) - eta.at(j - 1);
  return WeightSeq(std::move(v), eta.label() + ":delta");
}

/// Summing weight: tilde eta(N) = sum_{j<=N} eta(j)/j.
inline WeightSeq summing(const WeightSeq& eta) {
  std::vector<double> v(static_cast<std::size_t>(eta.length()));
  KahanSum s;
  for (int j = 1; j <= eta.length(); ++j) {
    s.add(eta.at(j) / j);
    v[j - 1] = s.value();
  }
  return WeightSeq(std::move(v), eta.label() + ":summing");
}

/// Difference weight: hat eta(j) = j * Delta eta(j). Requires eta non-decreasing.
inline WeightSeq difference(const WeightSeq& eta) {
  if (!eta.nondecreasing())
    throw std::invalid_argument("difference: weight must be non-decreasing");
  std::vector<double> v(static_cast<std::size_t>(eta.length()));
  for (int j = 1; j <= eta.length(); ++j)
    v[j - 1] = std::max(0.0, j * (eta.at(j) - eta.at(j - 1)));
  return WeightSeq(std::move(v), eta.label() + ":difference");
}

/// Dual weight: eta'(j) = j / eta(j). Requires eta positive; involutive.
inline WeightSeq dual(const WeightSeq& eta) {
  if (!eta.positive()) throw std::invalid_argument("dual: weight must be positive");
  std::vector<double> v(static_cast<std::size_t>(eta.length()));
  for (int j = 1; j <= eta.length(); ++j) v[j - 1] = j / eta.at(j);
  return WeightSeq(std::move(v), eta.label() + ":dual");
}

// ---- classification --------------------------------------------------------

struct WeightClassReport {
  bool is_positive = false;
  bool is_nondecreasing = false;
  std::optional<double> doubling_constant;  // smallest c with eta(2j) <= c eta(j)
  bool is_quasiconcave = false;
  bool is_concave = false;
  std::optional<std::pair<double, double>> regularity;  // (c1,c2): c1 eta <= tilde eta <= c2 eta
  std::vector<double> concave_majorant;                 // eta#(j), j=1..M
};

/// Least concave majorant through (0,0),(1,eta(1)),...,(M,eta(M)),
/// by upper convex hull; collinear interior points are dropped, which
/// breaks ties toward the earlier hull vertex.
inline std::vector<double> concave_majorant(const WeightSeq& eta) {
  const int M = eta.length();
  std::vector<std::pair<double, double>> hull;  // (x, y)
  hull.emplace_back(0.0, 0.0);
  for (int j = 1; j <= M; ++j) {
    std::pair<double, double> p{double(j), eta.at(j)};
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      double cross = (b.first - a.first) * (p.second - a.second) -
                     (p.first - a.first) * (b.second - a.second);
      if (cross >= 0) hull.pop_back();  // b is on or below chord a-p
      else break;
    }
    hull.push_back(p);
  }
  std::vector<double> out(static_cast<std::size_t>(M));
  std::size_t seg = 0;
  for (int j = 1; j <= M; ++j) {
    while (seg + 1 < hull.size() && hull[seg + 1].first < j) ++seg;
    const auto& a = hull[seg];
    const auto& b = hull[seg + 1 < hull.size() ? seg + 1 : seg];
    double y = (b.first == a.first)
                   ? a.second
                   : a.second + (b.second - a.second) * (j - a.first) / (b.first - a.first);
    out[j - 1] = std::max(y, eta.at(j));  // guard against fp dips below the data
  }
  return out;
}

inline WeightClassReport classify(const WeightSeq& eta) {
  constexpr double kTol = 1e-12;
  const int M = eta.length();
  WeightClassReport r;
  r.is_positive = eta.positive();
  r.is_nondecreasing = eta.nondecreasing();

  if (r.is_positive && M >= 2) {
    double c = 0.0;
    bool any = false;
    for (int j = 1; 2 * j <= M; ++j) {
      c = std::max(c, eta.at(2 * j) / eta.at(j));
      any = true;
    }
    if (any) r.doubling_constant = c;
  }

  if (r.is_nondecreasing) {
    r.is_quasiconcave = true;
    for (int j = 1; j < M; ++j) {
      if (eta.at(j + 1) / (j + 1) > eta.at(j) / j * (1.0 + kTol)) {
        r.is_quasiconcave = false;
        break;
      }
    }
    r.is_concave = true;
    double scale = eta.at(M);
    for (int j = 2; j <= M; ++j) {
      double dd = (eta.at(j) - eta.at(j - 1)) - (eta.at(j - 1) - eta.at(j - 2));
      if (dd > kTol * std::max(1.0, scale)) {
        r.is_concave = false;
        break;
      }
    }
    if (!r.is_quasiconcave) r.is_concave = false;
  }

  if (r.is_positive) {
    WeightSeq te = summing(eta);
    double c1 = std::numeric_limits<double>::infinity(), c2 = 0.0;
    for (int j = 1; j <= M; ++j) {
      double q = te.at(j) / eta.at(j);
      c1 = std::min(c1, q);
      c2 = std::max(c2, q);
    }
    r.regularity = std::make_pair(c1, c2);
  }

  r.concave_majorant = concave_majorant(eta);
  return r;
}

// ---- dilation --------------------------------------------------------------

struct DilationReport {
  std::vector<double> phi;  // phi(M'), M'=1..M_cap
  std::vector<double> Phi;
  std::optional<double> i_lower_est;
  std::optional<double> I_upper_est;
  bool truncated = true;
};

/// Truncated dilation sequences phi(M') = min_{M'k<=M} eta(M'k)/eta(k)
/// (Phi with max) and the index estimates derived from them.
inline DilationReport dilation(const WeightSeq& eta, int M_cap) {
  if (!eta.positive()) throw std::invalid_argument("dilation: weight must be positive");
  if (M_cap < 1 || M_cap > eta.length())
    throw std::invalid_argument("dilation: need 1 <= M_cap <= M");
  const int M = eta.length();
  DilationReport r;
  r.phi.resize(static_cast<std::size_t>(M_cap));
  r.Phi.resize(static_cast<std::size_t>(M_cap));
  for (int m = 1; m <= M_cap; ++m) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int k = 1; m * k <= M; ++k) {
      double q = eta.at(m * k) / eta.at(k);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    r.phi[m - 1] = lo;
    r.Phi[m - 1] = hi;
  }
  if (M_cap >= 2) {
    double ilo = -std::numeric_limits<double>::infinity();
    double ihi = std::numeric_limits<double>::infinity();
    for (int m = 2; m <= M_cap; ++m) {
      ilo = std::max(ilo, std::log(r.phi[m - 1]) / std::log(double(m)));
      ihi = std::min(ihi, std::log(r.Phi[m - 1]) / std::log(double(m)));
    }
    r.i_lower_est = ilo;
    r.I_upper_est = ihi;
  }
  return r;
}

// ---- combined quantities ---------------------------------------------------

struct CombosResult {
  double S = 0;    // S_N(eta1,eta2)
  double T12 = 0;  // T_N(eta1,eta2)
  double T21 = 0;  // T_N(eta2,eta1)
  double OT = 0;   // min(T12,T21)
  double U = 0;    // U_N(eta1,eta2)
};

/// S_N, T_N both ways, OT_N and U_N of a pair of non-decreasing weights.
inline CombosResult combos(const WeightSeq& eta1, const WeightSeq& eta2, int N) {
  if (N < 1 || N > eta1.length() || N > eta2.length())
    throw std::invalid_argument("combos: N exceeds weight truncation");
  if (!eta1.nondecreasing() || !eta2.nondecreasing())
    throw std::invalid_argument("combos: weights must be non-decreasing");
  KahanSum s, t12, t21, u;
  for (int j = 1; j <= N; ++j) {
    double d1 = eta1.at(j) - eta1.at(j - 1);
    double d2 = eta2.at(j) - eta2.at(j - 1);
    s.add(d1 * d2);
    t12.add(eta1.at(j) / j * d2);
    t21.add(eta2.at(j) / j * d1);
    u.add(eta1.at(j) * eta2.at(j) / (double(j) * j));
  }
  CombosResult r;
  r.S = s.value();
  r.T12 = t12.value();
  r.T21 = t21.value();
  r.OT = std::min(r.T12, r.T21);
  r.U = u.value();
  return r;
}

// ---- random generators for property suites ----------------------------------

/// Random positive weight, entries in (0.1, 10).
inline WeightSeq random_positive_weight(Rng& rng, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  for (auto& x : v) x = rng.uniform(0.1, 10.0);
  return WeightSeq(std::move(v), "random-positive");
}

/// Random non-decreasing weight.
inline WeightSeq random_nondecreasing_weight(Rng& rng, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  double cur = rng.uniform(0.1, 2.0);
  for (auto& x : v) {
    x = cur;
    cur += rng.uniform(0.0, 1.0);
  }
  return WeightSeq(std::move(v), "random-nondecreasing");
}

/// Random quasi-concave weight: eta non-decreasing with eta(j)/j non-increasing.
inline WeightSeq random_quasiconcave_weight(Rng& rng, int M) {
  std::vector<double> v(static_cast<std::size_t>(M));
  double cur = rng.uniform(0.5, 2.0);
  v[0] = cur;
  for (int j = 1; j < M; ++j) {
    double hi = cur * (j + 1.0) / j;  // quasi-concavity cap
    cur = rng.uniform(cur, hi);
    v[static_cast<std::size_t>(j)] = cur;
  }
  return WeightSeq(std::move(v), "random-quasiconcave");
}

}  // namespace gab
