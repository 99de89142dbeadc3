#pragma once

// Greedy orderings, greedy sets and operators, signed projections, the
// exact expansional error sigma~_N by enumeration, and certified upper
// bounds for sigma_N.

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gab/spaces.hpp"

namespace gab {

enum class TiePolicy { kLowestIndex, kEnumerateAll };

/// Greedy bijection: indices of the support ordered by modulus descending,
/// ties broken toward the lower index.
inline std::vector<int> greedy_order(const CoefVec& x) {
  std::vector<std::pair<double, int>> m;
  for (auto& [n, v] : x.entries()) m.emplace_back(std::abs(v), n);
  std::sort(m.begin(), m.end(), [](auto& a, auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> out;
  out.reserve(m.size());
  for (auto& [mod, n] : m) out.push_back(n);
  return out;
}

inline bool is_greedy_set(const CoefVec& x, const std::set<int>& A) {
  double min_in = std::numeric_limits<double>::infinity();
  for (int n : A) min_in = std::min(min_in, std::abs(x.at(n)));
  double max_out = 0.0;
  for (auto& [n, v] : x.entries())
    if (!A.count(n)) max_out = std::max(max_out, std::abs(v));
  return min_in >= max_out;
}

/// All greedy sets of order N (or just the deterministic lowest-index one).
/// When |support| < N the set is padded with the smallest unused indices;
/// the padded coefficients are zero so G_N x is unchanged.
inline std::vector<std::set<int>> greedy_sets(const CoefVec& x, int N,
                                              TiePolicy tie = TiePolicy::kLowestIndex,
                                              std::size_t max_sets = 10000) {
  if (N < 0) throw std::invalid_argument("greedy_sets: N < 0");
  auto order = greedy_order(x);
  const int s = static_cast<int>(order.size());

  std::set<int> base;
  if (s <= N) {
    for (int n : order) base.insert(n);
    int next = 1;
    while (static_cast<int>(base.size()) < N) {
      while (base.count(next)) ++next;
      base.insert(next++);
    }
    return {base};
  }

  if (N == 0) return {std::set<int>{}};
  const double thr = std::abs(x.at(order[static_cast<std::size_t>(N - 1)]));
  std::vector<int> must, ties;
  for (auto& [n, v] : x.entries()) {
    double mod = std::abs(v);
    if (mod > thr) must.push_back(n);
    else if (mod == thr) ties.push_back(n);
  }
  const int need = N - static_cast<int>(must.size());
  if (tie == TiePolicy::kLowestIndex) {
    std::sort(ties.begin(), ties.end());
    std::set<int> A(must.begin(), must.end());
    for (int i = 0; i < need; ++i) A.insert(ties[static_cast<std::size_t>(i)]);
    return {A};
  }

  // enumerate-all: every choice of `need` indices out of the tie group
  std::sort(ties.begin(), ties.end());
  std::vector<std::set<int>> out;
  std::vector<int> comb(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) comb[static_cast<std::size_t>(i)] = i;
  const int t = static_cast<int>(ties.size());
  while (true) {
    std::set<int> A(must.begin(), must.end());
    for (int i : comb) A.insert(ties[static_cast<std::size_t>(i)]);
    out.push_back(std::move(A));
    if (out.size() > max_sets)
      throw std::runtime_error("greedy_sets: tie enumeration exceeds budget");
    // next combination
    int i = need - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == t - need + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

struct Projection {
  CoefVec vector;
  double norm = 0.0;
};

/// P_A x (optionally sign-twisted: P_{eps A} x = sum eps_n e*_n(x) e_n).
inline Projection project(const SpaceModel& space, const CoefVec& x, const std::set<int>& A,
                          const std::map<int, Scalar>* eps = nullptr) {
  Projection out;
  for (int n : A) {
    Scalar v = x.at(n);
    if (eps) {
      auto it = eps->find(n);
      if (it != eps->end()) v *= it->second;
    }
    if (v != Scalar{0.0, 0.0}) out.vector.set(n, v);
  }
  out.norm = space.norm(out.vector);
  return out;
}

struct GreedyOutcome {
  std::vector<int> ordering;
  std::set<int> set;
  std::size_t all_sets_count = 1;
  CoefVec approximant;
  CoefVec residual;
  double residual_norm = 0.0;
};

/// Residual x - G_N x. Under enumerate-all the reported set/norm is the one
/// maximizing the residual norm (matching the quantification over all greedy
/// operators).
inline GreedyOutcome greedy_residual(const SpaceModel& space, const CoefVec& x, int N,
                                     TiePolicy tie = TiePolicy::kLowestIndex) {
  GreedyOutcome out;
  out.ordering = greedy_order(x);
  auto sets = greedy_sets(x, N, tie);
  out.all_sets_count = sets.size();
  bool first = true;
  for (auto& A : sets) {
    CoefVec approx = x.restricted(A);
    CoefVec res = x - approx;
    double rn = space.norm(res);
    if (first || rn > out.residual_norm) {
      out.set = A;
      out.approximant = std::move(approx);
      out.residual = std::move(res);
      out.residual_norm = rn;
      first = false;
    }
  }
  return out;
}

struct SigmaTilde {
  double value = 0.0;
  std::set<int> best_set;
};

/// Exact expansional N-term error: min over |A| <= N of ||x - P_A x||, by
/// full enumeration over subsets of the support (or a registered exact
/// oracle when the space provides one).
inline SigmaTilde sigma_tilde(const SpaceModel& space, const CoefVec& x, int N,
                              std::size_t budget = 2000000) {
  SigmaTilde out;
  if (N >= x.support_size()) {
    out.value = 0.0;
    out.best_set = x.support();
    return out;
  }
  if (space.sigma_tilde_exact) {
    out.value = space.sigma_tilde_exact(x, N);
    return out;  // best_set not tracked by the specialized oracles
  }

  const std::set<int> support_set = x.support();
  std::vector<int> supp(support_set.begin(), support_set.end());
  const int s = static_cast<int>(supp.size());
  // sum_{k<=N} C(s,k) must fit the budget
  double count = 0.0, binom = 1.0;
  for (int k = 0; k <= N; ++k) {
    count += binom;
    binom = binom * (s - k) / (k + 1);
    if (count > double(budget))
      throw std::runtime_error(
          "sigma_tilde: enumeration budget exceeded; use sigma_upper with competitors");
  }

  out.value = space.norm(x);  // A = empty set
  for (int k = 1; k <= N; ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::set<int> A;
      for (int i : comb) A.insert(supp[static_cast<std::size_t>(i)]);
      double v = space.norm(x - x.restricted(A));
      if (v < out.value) {
        out.value = v;
        out.best_set = A;
      }
      int i = k - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == s - k + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

/// Certified upper bound for sigma_N(x): min over the competitor vectors z
/// (each supported on <= N indices) of ||x - z||, capped by sigma_tilde when
/// the enumeration is affordable.
inline double sigma_upper(const SpaceModel& space, const CoefVec& x, int N,
                          const std::vector<CoefVec>& competitors,
                          std::size_t budget = 2000000) {
  double best = std::numeric_limits<double>::infinity();
  for (auto& z : competitors) {
    if (z.support_size() > N)
      throw std::invalid_argument("sigma_upper: competitor support exceeds N");
    best = std::min(best, space.norm(x - z));
  }
  try {
    best = std::min(best, sigma_tilde(space, x, N, budget).value);
  } catch (const std::runtime_error&) {
    if (competitors.empty()) throw;
  }
  return best;
}

}  // namespace gab
