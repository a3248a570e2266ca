#include <doctest.h>

#include <cmath>
#include <numbers>

#include "braidlab/braidexp.hpp"
#include "braidlab/defaults.hpp"
#include "oracles.hpp"

using namespace braidlab;

TEST_CASE("tau coefficients") {
  const CoeffSeq t = tau(5);
  CHECK(t.radius() == 5);
  CHECK(t[1] == Complex(1.0));
  CHECK(t[2] == Complex(-0.5));
  CHECK(t[3] == Complex(1.0 / 3.0));
  CHECK(t[-1] == Complex(-1.0));
  CHECK(t[-2] == Complex(0.5));
  CHECK(t[0] == Complex(0.0));
  CHECK(t[6] == Complex(0.0));
  CHECK_THROWS_AS(tau(0), std::invalid_argument);

  const CoeffSeq big = tau(777);
  for (Index n = 0; n <= 777; ++n) CHECK(big[-n] == -big[n]);
}

TEST_CASE("log trick reproduces tau exactly") {
  const RationalLaurent one = log_candidate_exact(1);
  REQUIRE(one.size() == 2);
  CHECK(one.at(1) == mpq_class(1));
  CHECK(one.at(-1) == mpq_class(-1));

  for (Index N = 1; N <= 60; ++N) {
    CHECK(log_candidate_exact(N) == tau_exact(N));
  }
  const RationalLaurent three = log_candidate_exact(3);
  CHECK(three.at(3) == mpq_class(1, 3));
  CHECK(three.at(-2) == mpq_class(1, 2));
  CHECK(three.count(0) == 0);

  for (Index N : {1, 3, 100, 1000}) {
    const CoeffSeq fromLog = log_candidate(N);
    const CoeffSeq direct = tau(N);
    REQUIRE(fromLog.radius() == direct.radius());
    for (Index n = -N; n <= N; ++n) CHECK(fromLog[n] == direct[n]);
  }
  CHECK_THROWS_AS(log_candidate_exact(0), std::invalid_argument);
}

TEST_CASE("exponential series") {
  SUBCASE("exp(0) = 1") {
    for (int M : {0, 1, 10}) {
      const ExpResult r = exp_seq(CoeffSeq::zero(3), M, 3);
      CHECK(approx_equal(r.value, delta(0), 0.0));
      CHECK(r.tail_bound == 0.0);
    }
  }
  SUBCASE("scalar case converges to e^s") {
    for (Complex s : {Complex(1.0), Complex(-0.7, 0.4), Complex(0.0, std::numbers::pi)}) {
      const ExpResult r = exp_seq(scale(delta(0), s), 30, 0);
      CHECK(std::abs(r.value[0] - std::exp(s)) <= 1e-14);
      CHECK(std::abs(r.value[0] - std::exp(s)) <= r.tail_bound + 1e-15);
    }
    const ExpResult few = exp_seq(scale(delta(0), 1.0), 3, 0);
    CHECK(std::abs(few.value[0] - (1.0 + 1.0 + 0.5 + 1.0 / 6.0)) <= 1e-15);
  }
  SUBCASE("tail bound formula") {
    CHECK(exp_tail_bound(2.0, 3) == doctest::Approx(std::exp(2.0) * 16.0 / 24.0));
    CHECK(exp_tail_bound(0.0, 3) == 0.0);
    CHECK(auto_terms(1.0) == 3 + defaults::kExtraTerms);
  }
  SUBCASE("rejects a cap below the radius") {
    CHECK_THROWS_AS(exp_seq(tau(10), 5, 9), std::invalid_argument);
    CHECK_THROWS_AS(exp_seq(tau(10), -1, 10), std::invalid_argument);
  }
  SUBCASE("homomorphism on finitely supported inputs") {
    const CoeffSeq a = add(scale(delta(1), 0.3), scale(delta(-2), Complex(0.0, -0.2)));
    const CoeffSeq b = add(scale(delta(0), 0.1), scale(delta(3), -0.25));
    const int M = 25;
    const Index cap = 200;
    const ExpResult ea = exp_seq(a, M, cap);
    const ExpResult eb = exp_seq(b, M, cap);
    const ExpResult eab = exp_seq(add(a, b), M, cap);
    REQUIRE(ea.loss_bound == 0.0);
    REQUIRE(eab.loss_bound == 0.0);
    const CoeffSeq prod = convolve_fast(ea.value, eb.value);
    // |E_a E_b - e^a e^b| <= R_a e^{|b|} + e^{|a|} R_b + R_a R_b, plus R_{a+b}.
    const double budget = eab.tail_bound + ea.tail_bound * std::exp(l1_norm(b)) +
                          eb.tail_bound * std::exp(l1_norm(a)) +
                          ea.tail_bound * eb.tail_bound + 1e-13;
    CHECK(max_abs_diff(eab.value, prod) <= budget);
    CHECK(max_abs_diff(eab.value, prod) <= 1e-13);
  }
}

TEST_CASE("exp(tau_N) matches the function-side oracle when nothing is clamped") {
  const Index N = 48;
  const CoeffSeq t = tau(N);
  const int M = auto_terms(l1_norm(t));
  const ExpResult r = exp_seq(t, M, static_cast<Index>(M) * N);
  REQUIRE(r.loss_bound == 0.0);
  for (Index n : {-4, 0, 1, 2, 7}) {
    const Complex want = oracle::exp_tau_coefficient(N, n, 1.0, 8 * N);
    CHECK(std::abs(r.value[n] - want) <= 1e-12);
  }
}

TEST_CASE("probe errors") {
  const CoeffSeq s(2, {0.1, 0.0, 0.0, 0.8, Complex(0.0, 0.2)});
  const ProbeErrors e = probe_errors(s, 1, {-2, -1, 0, 1, 2});
  CHECK(e.err_target == doctest::Approx(0.2));
  CHECK(e.err_off == doctest::Approx(0.2));
  CHECK(e.l2_err == doctest::Approx(std::sqrt(0.01 + 0.04 + 0.04)));
  // Target outside the probe set still gets measured.
  CHECK(probe_errors(s, 1, {0}).err_target == doctest::Approx(0.2));
}

TEST_CASE("verify_exp_tau report shape") {
  const ConvergenceReport rep = verify_exp_tau({64, 16}, {std::nullopt, 0, 5},
                                               defaults::probes(), 2.0);
  REQUIRE(rep.rows.size() == 6);
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    const auto& a = rep.rows[i];
    const auto& b = rep.rows[i + 1];
    CHECK(std::tie(a.N, a.M) <= std::tie(b.N, b.M));
  }
  for (const auto& r : rep.rows) {
    CHECK(std::isfinite(r.err_c1));
    CHECK(r.err_c1 >= 0.0);
    CHECK(r.err_off >= 0.0);
    CHECK(r.l2_err >= 0.0);
    CHECK(r.discarded_mass >= 0.0);
    if (r.M == 0) CHECK(r.l2_err == doctest::Approx(std::sqrt(2.0)));
  }
  CHECK(rep.rows.front().N == 16);
  CHECK_THROWS_AS(verify_exp_tau({8}, {std::nullopt}, {17}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_exp_tau({8}, {std::nullopt}, {0}, 0.5), std::invalid_argument);
}

TEST_CASE("trend checks") {
  ConvergenceReport good = verify_exp_tau({64, 256}, {std::nullopt}, defaults::probes(), 2.0);
  CHECK(check_trends(good).empty());

  ConvergenceReport bad = good;
  bad.rows[1].err_off = bad.rows[0].err_off * 2.0;
  const auto v = check_trends(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].field == "err_off");
  CHECK(v[0].describe().find("N=256") != std::string::npos);

  // Small M rows are exempt from the N trend.
  const ConvergenceReport zero = verify_exp_tau({64, 256}, {0}, defaults::probes(), 2.0);
  CHECK(check_trends(zero).empty());
}

TEST_CASE("Vassiliev values of q^k") {
  CHECK(vassiliev_Z({1}, 0).coeff == 1.0);
  for (int n = 1; n <= 10; ++n) {
    CHECK(vassiliev_Z({1}, n).coeff == doctest::Approx(1.0 / std::tgamma(n + 1.0)));
    CHECK(vassiliev_Z({0}, n).coeff == 0.0);
    CHECK(vassiliev_Z({1}, n).degree == n);
  }
  CHECK(vassiliev_Z({0}, 0).coeff == 1.0);
  CHECK(vassiliev_Z({2}, 2).coeff == doctest::Approx(2.0));
  CHECK(vassiliev_Z({-3}, 3).coeff == doctest::Approx(-4.5));
  CHECK((BraidPower{3} * BraidPower{-5}) == BraidPower{-2});
  CHECK_THROWS_AS(vassiliev_Z({1}, -1), std::invalid_argument);

  // Z_i is multiplicative across the group: Z(q^a q^b) = Z(q^a) Z(q^b) degreewise.
  for (int i = 0; i <= 6; ++i) {
    double conv = 0.0;
    for (int j = 0; j <= i; ++j) conv += vassiliev_Z({2}, j).coeff * vassiliev_Z({-5}, i - j).coeff;
    CHECK(conv == doctest::Approx(vassiliev_Z(BraidPower{2} * BraidPower{-5}, i).coeff));
  }
}

TEST_CASE("psi") {
  const Index N = 50;
  CHECK(approx_equal(psi(0, {0, 1.0}, N, N), delta(0), 0.0));
  CHECK(approx_equal(psi(1, vassiliev_Z({1}, 1), N, N), tau(N), 0.0));
  const CoeffSeq half_square = scale(power(tau(N), 2, 2 * N).value, 0.5);
  CHECK(approx_equal(psi(2, vassiliev_Z({1}, 2), N, 2 * N), half_square, 1e-15));
  CHECK_THROWS_AS(psi(2, {1, 1.0}, N, N), std::invalid_argument);
}

TEST_CASE("psi multiplicativity") {
  const auto probes = defaults::probes();
  const Index N = 100;
  for (int j = 0; j <= 4; ++j) {
    const auto r = check_psi_multiplicative(0, j, N, 2 * N, probes);
    CHECK(r.discrepancy <= 1e-13);
  }
  const auto one_one = check_psi_multiplicative(1, 1, N, 10 * N, probes);
  CHECK(one_one.discrepancy <= 1e-12);
  CHECK(one_one.clamping_loss == 0.0);

  const auto tight = check_psi_multiplicative(2, 3, N, 2 * N, probes);
  CHECK(tight.clamping_loss > 0.0);
  CHECK(tight.discrepancy <= tight.clamping_loss);
}

TEST_CASE("reconstruction") {
  const Index N = 128;
  const Index cap = 2 * N;
  const auto probes = defaults::probes();

  SUBCASE("identity braid is exact") {
    for (int M : {0, 1, 5, 40}) {
      CHECK(approx_equal(reconstruct({0}, M, N, cap), delta(0), 0.0));
    }
  }
  SUBCASE("two computations of the same sum") {
    for (Index k : {-2, -1, 1, 2}) {
      const int M = auto_terms(std::abs(static_cast<double>(k)) * l1_norm(tau(N)));
      const CoeffSeq r = reconstruct({k}, M, N, cap);
      const CoeffSeq e = exp_seq(scale(tau(N), static_cast<double>(k)), M, cap).value;
      CHECK(max_abs_diff(r, e) <= 1e-12);
    }
  }
  SUBCASE("q^{-k} is q^k with indices reflected") {
    const int M = auto_terms(l1_norm(tau(N)));
    const CoeffSeq plus = reconstruct({1}, M, N, cap);
    const CoeffSeq minus = reconstruct({-1}, M, N, cap);
    for (Index n = -cap; n <= cap; ++n) CHECK(std::abs(plus[n] - minus[-n]) <= 1e-13);
  }
  SUBCASE("moves toward delta(k)") {
    for (Index k : {-1, 1}) {
      const int M = auto_terms(l1_norm(tau(4 * N)));
      const double coarse =
          probe_errors(reconstruct({k}, M, N, cap), k, probes).l2_err;
      const double fine =
          probe_errors(reconstruct({k}, M, 4 * N, 4 * cap), k, probes).l2_err;
      CHECK(fine < coarse);
      CHECK(fine < 0.01);
    }
  }
  CHECK_THROWS_AS(reconstruct({1}, -1, N, cap), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct({1}, 3, N, N - 1), std::invalid_argument);
}
