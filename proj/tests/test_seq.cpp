#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "braidlab/braidexp.hpp"
#include "braidlab/conv.hpp"
#include "braidlab/seq.hpp"
#include "oracles.hpp"
#include "random_seq.hpp"

using namespace braidlab;

TEST_CASE("delta") {
  const CoeffSeq d0 = delta(0);
  CHECK(d0.radius() == 0);
  CHECK(d0[0] == Complex(1.0));

  const CoeffSeq q = delta(1);
  CHECK(q.radius() == 1);
  CHECK(q[1] == Complex(1.0));
  CHECK(q[0] == Complex(0.0));
  CHECK(q[-1] == Complex(0.0));

  // p = q^{-1}
  CHECK(approx_equal(convolve_direct(delta(1), delta(-1)), delta(0), 0.0));

  // Asymmetric support still lives in a symmetric window.
  const CoeffSeq d5 = delta(5);
  CHECK(d5.radius() == 5);
  CHECK(d5.coeffs().size() == 11);
  CHECK(d5[5] == Complex(1.0));
  CHECK(d5[-5] == Complex(0.0));
  CHECK(d5[100] == Complex(0.0));
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(CoeffSeq(1, std::vector<Complex>(2)), std::invalid_argument);
  CHECK_THROWS_AS(CoeffSeq(-1, {}), std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(CoeffSeq(0, {Complex(nan, 0.0)}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(CoeffSeq(1, {0.0, Complex(0.0, inf), 0.0}), std::invalid_argument);
}

TEST_CASE("add and scale") {
  CHECK(l1_norm(add(delta(1), scale(delta(1), -1.0))) == 0.0);

  const CoeffSeq s = scale(delta(2), 3.0);
  CHECK(s[2] == Complex(3.0));
  CHECK(l1_norm(s) == doctest::Approx(3.0));

  // Different radii align by index.
  const CoeffSeq sum = add(delta(-3), delta(1));
  CHECK(sum.radius() == 3);
  CHECK(sum[-3] == Complex(1.0));
  CHECK(sum[1] == Complex(1.0));
  CHECK(sum[0] == Complex(0.0));
  CHECK(l1_norm(add(delta(0), delta(1))) == doctest::Approx(2.0));
}

TEST_CASE("inner products and norms of unit sequences") {
  CHECK(inner(delta(1), delta(1)) == Complex(1.0));
  CHECK(inner(delta(1), delta(2)) == Complex(0.0));
  for (Index k : {-7, -1, 0, 3, 40}) {
    CHECK(l2_norm(delta(k)) == 1.0);
    CHECK(l1_norm(delta(k)) == 1.0);
  }
  CHECK(l2_norm(CoeffSeq::zero(5)) == 0.0);
  CHECK(l2_norm(CoeffSeq{}) == 0.0);
}

TEST_CASE("inner(tau, tau) is pi^2/3 minus a tail below 2/N") {
  const double pi2_3 = std::numbers::pi * std::numbers::pi / 3.0;
  for (Index N : {1, 10, 100, 1000, 4096}) {
    const CoeffSeq t = tau(N);
    const Complex ip = inner(t, t);
    CHECK(ip.imag() == 0.0);
    CHECK(ip.real() == doctest::Approx(oracle::two_sided_inverse_squares(N)).epsilon(1e-14));
    const double tail = pi2_3 - ip.real();
    CHECK(tail > 0.0);
    CHECK(tail <= 2.0 / N);
  }
}

TEST_CASE("l2_norm(tau(4096)) lies in [1.8130, 1.8138]") {
  const double n = l2_norm(tau(4096));
  CHECK(n >= 1.8130);
  CHECK(n <= 1.8138);
}

TEST_CASE("l1_norm(tau(N)) = 2 H_N") {
  for (Index N : {1, 2, 3, 50, 4096}) {
    CHECK(l1_norm(tau(N)) == doctest::Approx(2.0 * oracle::harmonic(N)).epsilon(1e-13));
  }
}

TEST_CASE("clamp reports the l2 mass it removes") {
  const CoeffSeq a(2, {3.0, 0.0, 1.0, 0.0, Complex(0.0, 4.0)});
  const auto [kept, cut] = clamp(a, 1);
  CHECK(kept.radius() == 1);
  CHECK(kept[0] == Complex(1.0));
  CHECK(cut == doctest::Approx(5.0));

  const auto same = clamp(a, 7);
  CHECK(same.discarded == 0.0);
  CHECK(same.value.radius() == 2);
}

TEST_CASE("properties on random sequences") {
  std::mt19937_64 rng(20091122);
  for (int trial = 0; trial < 200; ++trial) {
    const CoeffSeq a = testing::random_seq(rng, testing::random_radius(rng, 40));
    const CoeffSeq b = testing::random_seq(rng, testing::random_radius(rng, 40));

    // Hermitian symmetry.
    const Complex ab = inner(a, b);
    const Complex ba = inner(b, a);
    CHECK(std::abs(ab - std::conj(ba)) <= 1e-12 * (1.0 + std::abs(ab)));

    // ||a||^2 = <a, a>.
    const double n2 = l2_norm(a);
    const Complex aa = inner(a, a);
    CHECK(std::abs(aa.imag()) == 0.0);
    CHECK(std::abs(n2 * n2 - aa.real()) <= 1e-12 * aa.real());

    CHECK(n2 <= l1_norm(a) * (1.0 + 1e-15));

    // Re-windowing to a larger radius changes nothing observable.
    const Index grow = a.radius() + 1 + testing::random_radius(rng, 20);
    const CoeffSeq wide = a.rewindow(grow);
    CHECK(wide.radius() == grow);
    CHECK(max_abs_diff(a, wide) == 0.0);
    CHECK(l2_norm(wide) == l2_norm(a));
    CHECK(l1_norm(wide) == l1_norm(a));
    CHECK(inner(wide, b) == inner(a, b));
    CHECK(max_abs_diff(add(wide, b), add(a, b)) == 0.0);
    CHECK(max_abs_diff(convolve_direct(wide, b), convolve_direct(a, b)) <= 1e-13);
  }
}
