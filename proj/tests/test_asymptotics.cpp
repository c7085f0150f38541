#include <cmath>
#include <numbers>

#include <doctest.h>

#include "jcx/asymptotics.hpp"
#include "jcx/errors.hpp"
#include "jcx/measures.hpp"
#include "oracles.hpp"

using namespace jcx;
using std::numbers::e;
using std::numbers::ln2;
using std::numbers::pi;

TEST_CASE("degree regime: Cramer-Rao coefficients") {
  CHECK(ccr_degree(0.0, 0.0).coefficient == 2.0);
  CHECK(ccr_degree(0.0, 0.0).law == GrowthLaw::NCubed);
  CHECK(ccr_degree(3.0, 3.0).coefficient == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(ccr_degree(0.0, 2.0).coefficient == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(ccr_degree(2.0, 0.0).coefficient == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  // exact C_CR at n = 200 is within a few percent of the leading term
  const double exact = cramer_rao(PolyParams(200, 3.0, 3.0)).value();
  CHECK(exact / ccr_degree(3.0, 3.0).evaluate(200.0) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("degree regime: Fisher-class errors") {
  for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{0.0, 1.0}, std::pair{1.0, 3.0}, std::pair{-0.5, 0.0}}) {
    CHECK_THROWS_AS(ccr_degree(a, b), UnsupportedClassError);
    CHECK_THROWS_AS(fisher_degree(a, b), UnsupportedClassError);
    CHECK_THROWS_AS(cfs_degree(a, b), UnsupportedClassError);
  }
  try {
    fisher_degree(0.5, 0.5);
  } catch (const UnsupportedClassError& err) {
    CHECK(err.predicate().find("alpha>1, beta>1") != std::string::npos);
  }
}

TEST_CASE("degree regime: constant limits") {
  CHECK(ls_degree().coefficient == doctest::Approx(pi / e).epsilon(1e-15));
  CHECK(ls_degree().law == GrowthLaw::Constant);
  CHECK(variance_degree().coefficient == 0.5);
  CHECK(e_degree(2.0, 3.0).coefficient == doctest::Approx(std::log(pi) - 1.0 - 5.0 * ln2).epsilon(1e-15));
  CHECK(i_degree(2.0, 3.0).coefficient == doctest::Approx(5.0 * ln2).epsilon(1e-15));
  CHECK(s_degree().coefficient == doctest::Approx(std::log(pi) - 1.0).epsilon(1e-15));
  CHECK(cfs_degree(0.0, 0.0).coefficient == doctest::Approx(2.0 * pi / (e * e * e)).epsilon(1e-14));
}

TEST_CASE("degree regime: W2 and LMC classes") {
  CHECK(w2_degree(2.0, 2.0).coefficient == doctest::Approx(2.0 / (pi * pi)).epsilon(1e-14));
  CHECK(w2_degree(2.0, 2.0).law == GrowthLaw::Constant);
  CHECK(clmc_degree(1.0, 1.0).coefficient == doctest::Approx(3.0 / (pi * e)).epsilon(1e-14));
  CHECK(clmc_degree(0.0, 0.0).law == GrowthLaw::LogN);
  CHECK(clmc_degree(0.0, 0.0).coefficient == doctest::Approx(pi / e).epsilon(1e-15));
  CHECK(clmc_degree(0.0, 0.0).evaluate(100.0) == doctest::Approx(pi / e * std::log(100.0)).epsilon(1e-15));
  const AsymptoticPrediction neg = w2_degree(0.5, -0.25);
  CHECK(neg.law == GrowthLaw::NPowMinus2Beta);
  CHECK(neg.exponent == 0.5);
  CHECK(neg.evaluate(16.0) == doctest::Approx(4.0));
  CHECK(w2_degree(0.0, 1.0).law == GrowthLaw::LogN);
  CHECK(clmc_degree(3.0, 0.0).law == GrowthLaw::LogN);
  CHECK(w2_degree(-0.25, 0.5).law == GrowthLaw::NPowMinus2Beta);
  CHECK(w2_degree(-0.25, 0.5).exponent == 0.5);
  CHECK(w2_degree(1.5, 2.25).coefficient == doctest::Approx(w2_degree(2.25, 1.5).coefficient).epsilon(1e-15));
  CHECK_THROWS_AS(w2_degree(-1.0, 2.0), UnsupportedClassError);
  // 3 2^(a+b-2) Gamma(a) Gamma(b) / (pi^2 Gamma(a+b)) at a general point
  const double a = 1.5, b = 2.25;
  const double want = 3.0 * std::pow(2.0, a + b - 2.0) *
                      std::exp(oracle::lgamma(a) + oracle::lgamma(b) - oracle::lgamma(a + b)) / (pi * pi);
  CHECK(w2_degree(a, b).coefficient == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("degree regime: product identities") {
  for (auto [a, b] : {std::pair{0.0, 0.0}, std::pair{0.0, 2.0}, std::pair{4.0, 0.0}, std::pair{1.5, 3.0},
                      std::pair{7.0, 1.25}}) {
    const double f = fisher_degree(a, b).coefficient;
    CHECK(ccr_degree(a, b).coefficient / f == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cfs_degree(a, b).coefficient == doctest::Approx(f * (pi / e) * (pi / e) / (2.0 * pi * e)).epsilon(1e-15));
  }
  for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}, std::pair{0.25, 3.0}}) {
    CHECK(clmc_degree(a, b).coefficient == doctest::Approx(w2_degree(a, b).coefficient * pi / e).epsilon(1e-15));
  }
}

TEST_CASE("alpha regime: Cramer-Rao limit") {
  CHECK(ccr_param(0, 2.0).coefficient == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(ccr_param(1, 2.0).coefficient == doctest::Approx(77.0 / 3.0).epsilon(1e-15));
  CHECK(ccr_param(0, 3.0).coefficient == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(cramer_rao(PolyParams(0, 1e4, 3.0)).value() / 2.0 == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(ccr_param(1, 1.0), UnsupportedClassError);
  CHECK_THROWS_AS(ccr_param(1, 0.5), UnsupportedClassError);
}

TEST_CASE("alpha regime: C_CR = F coefficient times lim V alpha^2") {
  for (int n : {0, 1, 2, 5, 20}) {
    for (double b : {1.5, 2.0, 3.0, 10.0}) {
      const double product = f_param(n, b).coefficient * variance_param(n, b).coefficient;
      CHECK(ccr_param(n, b).coefficient == doctest::Approx(product).epsilon(1e-14));
    }
  }
}

TEST_CASE("alpha regime: Fisher and Fisher-Shannon") {
  const AsymptoticPrediction f = f_param(0, 2.0);
  CHECK(f.law == GrowthLaw::AlphaSquared);
  CHECK(f.coefficient == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(fisher_info(PolyParams(0, 1e4, 2.0)).value() / f.evaluate(1e4) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(cfs_param(1, 2.0).coefficient == doctest::Approx(7.0 / (24.0 * pi * e)).epsilon(1e-14));
  CHECK_THROWS_AS(f_param(0, 0.5), UnsupportedClassError);
  CHECK_THROWS_AS(cfs_param(2, 1.0), UnsupportedClassError);
}

TEST_CASE("alpha regime: norm predictor") {
  // n = 0 is the Beta integral itself
  for (double a : {0.5, 3.0, 40.0, 1e3}) {
    for (double b : {-0.5, 0.0, 2.0}) {
      const double log_n0 = static_cast<double>(oracle::log_moment0(oracle::Mp(a), oracle::Mp(b)));
      CHECK(np_param(0, b, 3.0).log_evaluate(a) == doctest::Approx(log_n0).epsilon(1e-13));
    }
  }
  // Gamma(a+n+1)/n! Gamma(1+np+b)/Gamma(2+a+np+b) 2^(1+a+b)
  for (auto [n, b, q, a] : {std::tuple{1, 0.0, 2.0, 500.0}, std::tuple{2, 1.5, 4.0, 200.0}, std::tuple{4, -0.5, 1.0, 30.0}}) {
    const double want = oracle::lgamma_difference(a + n + 1.0, 2.0 + a + n * q + b) - oracle::lgamma(n + 1.0) +
                        oracle::lgamma(1.0 + n * q + b) + (1.0 + a + b) * ln2;
    CHECK(np_param(n, b, q).log_evaluate(a) == doctest::Approx(want).epsilon(1e-13));
  }
  CHECK(np_param(1, 0.0, 2.0).law == GrowthLaw::Composite);
  CHECK_THROWS_AS(np_param(1, 0.0, 0.0), DomainError);
}

TEST_CASE("alpha regime: entropic terms") {
  CHECK(e_param(0, 2.0).law == GrowthLaw::Alpha);
  CHECK(e_param(0, 2.0).coefficient == doctest::Approx(ln2));
  CHECK(i_param(3, 2.0).coefficient == doctest::Approx(-ln2));
  // n = 0: E = ln kappa_0 exactly; the expansion misses only the Gamma asymptotics
  const double a = 1e3;
  const double log_k0 = static_cast<double>(oracle::log_moment0(oracle::Mp(a), oracle::Mp(2.0)));
  CHECK(std::fabs(e_param(0, 2.0).evaluate(a) - log_k0) <= 1e-2);
  CHECK(s_param().law == GrowthLaw::LogAlpha);
  CHECK(s_param().coefficient == -1.0);
  CHECK(ls_param().law == GrowthLaw::InverseAlpha);
  // C(n, beta) at beta = 0 reduces to ln 2 + 1 + 2n
  CHECK(s_param_constant(3, 0.0) == doctest::Approx(ln2 + 7.0).epsilon(1e-15));
  const double c = s_param_constant(1, 2.0);
  const double want = ln2 + oracle::lgamma(4.0) + 1.0 + 2.0 + 2.0 - 2.0 * oracle::digamma(4.0);
  CHECK(c == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("alpha regime: W2 and LMC variants") {
  CHECK(clmc_param(0, 2.0).coefficient == doctest::Approx(3.0 / 16.0).epsilon(1e-14));
  CHECK(clmc_param(0, 2.0, W2Variant::DerivedCorrection).coefficient == doctest::Approx(3.0 / 32.0).epsilon(1e-14));
  CHECK(w2_param(0, 2.0).law == GrowthLaw::Alpha);
  for (int n : {0, 1, 3}) {
    for (double b : {0.0, 2.0, 4.5}) {
      const double ratio = w2_param(n, b).coefficient / w2_param(n, b, W2Variant::DerivedCorrection).coefficient;
      CHECK(ratio == doctest::Approx(std::exp(oracle::lgamma(1.0 + n + b))).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(w2_param(0, -0.75), UnsupportedClassError);
  CHECK_THROWS_AS(clmc_param(0, -1.5), UnsupportedClassError);
}

TEST_CASE("prediction_for dispatch") {
  PredictionQuery q;
  q.measure = "ccr";
  CHECK(prediction_for(q).coefficient == 2.0);
  q.regime = Regime::Alpha;
  q.n = 1;
  q.beta = 2.0;
  CHECK(prediction_for(q).coefficient == doctest::Approx(77.0 / 3.0));
  q.measure = "clmc";
  q.n = 0;
  q.variant = W2Variant::DerivedCorrection;
  CHECK(prediction_for(q).coefficient == doctest::Approx(3.0 / 32.0));
  q.measure = "bogus";
  CHECK_THROWS_AS(prediction_for(q), DomainError);
  q.regime = Regime::Degree;
  q.measure = "np";
  CHECK_THROWS_AS(prediction_for(q), DomainError);
  CHECK(std::string(to_string(GrowthLaw::NCubed)) == "n^3");
  CHECK(std::string(to_string(Regime::Alpha)) == "alpha");
}

TEST_CASE("composite laws need an evaluator") {
  AsymptoticPrediction p;
  p.law = GrowthLaw::Composite;
  CHECK_THROWS_AS(p.evaluate(2.0), DomainError);
}
