#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gab/weights.hpp"

using namespace gab;

TEST_CASE("generators") {
  auto w = pow_weight(0.5, 4);
  CHECK(w.length() == 4);
  CHECK(w.at(0) == 0.0);
  CHECK(w.at(4) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(const_weight(3).at(2) == 1.0);
  CHECK(log_weight(1.0, 1.0, 3).at(1) == doctest::Approx(std::log(2.0)));
  CHECK_THROWS_AS(WeightSeq({}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightSeq({1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("transforms on a hand example") {
  WeightSeq eta({1.0, 3.0, 6.0});
  auto d = delta(eta);
  CHECK(d.at(1) == 1.0);
  CHECK(d.at(2) == 2.0);
  CHECK(d.at(3) == 3.0);
  auto t = summing(eta);  // 1, 1+3/2, 1+3/2+2
  CHECK(t.at(2) == doctest::Approx(2.5));
  CHECK(t.at(3) == doctest::Approx(4.5));
  auto h = difference(eta);  // j*delta
  CHECK(h.at(2) == 4.0);
  CHECK(h.at(3) == 9.0);
  auto p = dual(eta);
  CHECK(p.at(2) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(difference(WeightSeq({2.0, 1.0})), std::invalid_argument);
}

TEST_CASE("transform identities on random weights") {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto eta = random_nondecreasing_weight(rng, 40);
    auto a = difference(summing(eta));
    auto b = summing(difference(eta));
    auto c = dual(dual(eta));
    for (int j = 1; j <= 40; ++j) {
      CHECK(a.at(j) == doctest::Approx(eta.at(j)).epsilon(1e-12));
      CHECK(b.at(j) == doctest::Approx(eta.at(j)).epsilon(1e-12));
      CHECK(c.at(j) == doctest::Approx(eta.at(j)).epsilon(1e-12));
    }
  }
}

TEST_CASE("classification") {
  auto r1 = classify(pow_weight(0.5, 64));
  CHECK(r1.is_quasiconcave);
  CHECK(r1.is_concave);
  auto r2 = classify(pow_weight(2.0, 64));
  CHECK(r2.is_nondecreasing);
  CHECK_FALSE(r2.is_quasiconcave);
  auto r3 = classify(pow_weight(1.0, 64));
  REQUIRE(r3.doubling_constant.has_value());
  CHECK(*r3.doubling_constant == doctest::Approx(2.0));
  REQUIRE(r1.regularity.has_value());
  CHECK(r1.regularity->first >= 1.0);   // summing weight dominates eta when qc
  CHECK(r1.regularity->second <= 2.0);  // and is at most 2x for pow:0.5
}

TEST_CASE("concave majorant") {
  WeightSeq eta({1.0, 1.0, 3.0});
  auto m = concave_majorant(eta);
  CHECK(m[0] == doctest::Approx(1.0));
  CHECK(m[1] == doctest::Approx(2.0));
  CHECK(m[2] == doctest::Approx(3.0));
  // majorant of a quasi-concave weight stays within factor 2
  Rng rng(9);
  for (int t = 0; t < 50; ++t) {
    auto w = random_quasiconcave_weight(rng, 32);
    auto mm = concave_majorant(w);
    for (int j = 1; j <= 32; ++j) {
      CHECK(mm[static_cast<std::size_t>(j - 1)] >= w.at(j) * (1 - 1e-12));
      CHECK(mm[static_cast<std::size_t>(j - 1)] <= 2.0 * w.at(j) * (1 + 1e-12));
    }
  }
}

TEST_CASE("dilation indices") {
  auto rep = dilation(pow_weight(0.5, 1024), 32);
  REQUIRE(rep.i_lower_est.has_value());
  REQUIRE(rep.I_upper_est.has_value());
  CHECK(*rep.i_lower_est == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(*rep.I_upper_est == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(rep.truncated);
  auto flat = dilation(const_weight(256), 16);
  CHECK(*flat.i_lower_est == doctest::Approx(0.0));
  CHECK(*flat.I_upper_est == doctest::Approx(0.0));
}

TEST_CASE("combined quantities") {
  // D(j) = 2j against D*(j) = j: every combined quantity equals 2N
  auto d1 = pow_weight(1.0, 32);
  std::vector<double> v;
  for (int j = 1; j <= 32; ++j) v.push_back(2.0 * j);
  WeightSeq D(v);
  for (int N : {1, 4, 16, 32}) {
    auto c = combos(D, d1, N);
    CHECK(c.S == doctest::Approx(2.0 * N).epsilon(1e-12));
    CHECK(c.T12 == doctest::Approx(2.0 * N).epsilon(1e-12));
    CHECK(c.T21 == doctest::Approx(2.0 * N).epsilon(1e-12));
    CHECK(c.OT == doctest::Approx(2.0 * N).epsilon(1e-12));
    CHECK(c.U == doctest::Approx(2.0 * N).epsilon(1e-12));
  }
  CHECK_THROWS_AS(combos(D, d1, 33), std::invalid_argument);
}

TEST_CASE("combined quantity chain on random quasi-concave pairs") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    auto e1 = random_quasiconcave_weight(rng, 48);
    auto e2 = random_quasiconcave_weight(rng, 48);
    auto c = combos(e1, e2, 48);
    double tol = 1e-9 * std::max(1.0, c.U);
    CHECK(c.S <= c.OT + tol);
    CHECK(c.OT <= std::max(c.T12, c.T21) + tol);
    CHECK(std::max(c.T12, c.T21) <= c.U + tol);
  }
}

TEST_CASE("random weight generators have the advertised shape") {
  Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    CHECK(random_positive_weight(rng, 24).positive());
    CHECK(random_nondecreasing_weight(rng, 24).nondecreasing());
    CHECK(classify(random_quasiconcave_weight(rng, 24)).is_quasiconcave);
  }
}
