#include "braidlab/fourier.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "braidlab/braidexp.hpp"
#include "braidlab/conv.hpp"
#include "braidlab/defaults.hpp"

namespace braidlab {

namespace {

constexpr double kPi = std::numbers::pi;

// i^m without going through pow().
Complex i_pow(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double minus_one_pow(Index n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void QuadratureSpec::validate() const {
  if (panels < 1) throw std::invalid_argument("QuadratureSpec: panels must be >= 1");
  if (nodes_per_panel < 2) {
    throw std::invalid_argument("QuadratureSpec: nodes_per_panel must be >= 2");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSpec: tolerance must be > 0");
}

QuadratureSpec default_quadrature(Index n) {
  QuadratureSpec spec;
  spec.method = QuadMethod::gauss_legendre;
  spec.nodes_per_panel = defaults::kQuadNodes;
  spec.panels = static_cast<int>(std::max<Index>(8, 2 * std::abs(n) + 2));
  spec.tolerance = defaults::kQuadTolerance;
  return spec;
}

namespace {

// P_k(x) and P_{k-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int k, double x) {
  double prev = 1.0;
  double cur = x;
  for (int j = 2; j <= k; ++j) {
    const double next = ((2.0 * j - 1.0) * x * cur - (j - 1.0) * prev) / j;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussLegendreRule gauss_legendre_rule(int k) {
  if (k < 1) throw std::invalid_argument("gauss_legendre_rule: need at least one node");
  if (k == 1) return {{0.0}, {2.0}};
  GaussLegendreRule rule;
  rule.nodes.resize(k);
  rule.weights.resize(k);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_k.
    double x = std::cos(kPi * (i + 0.75) / (k + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, p_prev] = legendre_pair(k, x);
      const double dp = k * (x * p - p_prev) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const auto [p, p_prev] = legendre_pair(k, x);
    const double dp = k * (x * p - p_prev) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[k - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[k - 1 - i] = w;
  }
  if (k % 2 == 1) rule.nodes[k / 2] = 0.0;
  return rule;
}

Complex integrate_panels(const std::function<Complex(double)>& f, double lo, double hi,
                         int panels, const GaussLegendreRule& rule) {
  const double width = (hi - lo) / panels;
  Complex total{};
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * width;
    const double mid = a + 0.5 * width;
    Complex panel{};
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      panel += rule.weights[q] * f(mid + 0.5 * width * rule.nodes[q]);
    }
    total += panel * (0.5 * width);
  }
  return total;
}

Complex cn_sawtooth(Index n) {
  if (n == 0) return {};
  return Complex{0.0, minus_one_pow(n) / static_cast<double>(n)};
}

Complex theta_moment(Index n, int m) {
  if (m < 0) throw std::invalid_argument("theta_moment: negative power");
  if (m > kMaxClosedFormPower) {
    throw std::invalid_argument("theta_moment: power above " +
                                std::to_string(kMaxClosedFormPower));
  }
  using Wide = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<128>>;
  const Wide pi = boost::math::constants::pi<Wide>();
  if (n == 0) {
    if (m % 2 != 0) return {};
    return static_cast<double>(Wide(2) * pow(pi, m + 1) / (m + 1));
  }
  // Step k multiplies the running value by -i k/n, so rounding error picks up
  // a factor of up to m!/|n|^m against a result that can be far smaller than
  // the boundary terms (m = 40, n = 1 loses ~30 digits). 128 decimal digits
  // cover the whole advertised range with room to spare.
  const Wide inv_n = Wide(1) / Wide(n);
  const Wide sign_n = (n % 2 == 0) ? Wide(1) : Wide(-1);
  // J(k, n) = re + i*im; multiplying by i/n maps (re, im) to (-im/n, re/n).
  Wide re = 0;
  Wide im = 0;
  Wide pi_pow = 1;
  for (int k = 1; k <= m; ++k) {
    pi_pow *= pi;
    // Boundary term (i/n)(-1)^n pi^k (1 - (-1)^k) is purely imaginary.
    const Wide boundary = (k % 2 == 0) ? Wide(0) : Wide(2) * sign_n * pi_pow * inv_n;
    const Wide next_re = k * im * inv_n;
    const Wide next_im = boundary - k * re * inv_n;
    re = next_re;
    im = next_im;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

Complex cn_theta_power_closed(Index n, int m) {
  return i_pow(m) * (theta_moment(n, m) / (2.0 * kPi));
}

Complex cn_theta_power_quad(Index n, int m, const QuadratureSpec& spec) {
  spec.validate();
  if (spec.method != QuadMethod::gauss_legendre) {
    throw std::invalid_argument("cn_theta_power_quad: spec.method must be gauss_legendre");
  }
  if (m < 0) throw std::invalid_argument("cn_theta_power_quad: negative power");
  const Complex im = i_pow(m);
  const double nd = static_cast<double>(n);
  auto integrand = [&](double theta) {
    return std::polar(1.0, -nd * theta) * im * std::pow(theta, m);
  };
  const auto rule = gauss_legendre_rule(spec.nodes_per_panel);
  const Complex coarse = integrate_panels(integrand, -kPi, kPi, spec.panels, rule) / (2.0 * kPi);
  const Complex fine = integrate_panels(integrand, -kPi, kPi, 2 * spec.panels, rule) / (2.0 * kPi);
  const double gap = std::abs(fine - coarse);
  if (gap > spec.tolerance) {
    throw QuadratureError("quadrature did not converge for n=" + std::to_string(n) +
                              ", m=" + std::to_string(m),
                          gap);
  }
  return fine;
}

Complex cn_theta_power_quad(Index n, int m) {
  return cn_theta_power_quad(n, m, default_quadrature(n));
}

Complex parseval_rhs(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("parseval_rhs: negative power");
  if ((j + k) % 2 != 0) return {};
  return i_pow(j - k) * (std::pow(kPi, j + k) / (j + k + 1));
}

ParsevalPair parseval_pair(int j, int k, Index N) {
  if (j < 0 || k < 0) throw std::invalid_argument("parseval_pair: negative power");
  if (N < 1) throw std::invalid_argument("parseval_pair: window must be >= 1");
  const CoeffSeq t = tau(N);
  const Index cap = std::max({j, k, 1}) * N;
  const CoeffSeq a = power(t, j, cap).value;
  const CoeffSeq b = power(t, k, cap).value;
  return {inner(a, b), parseval_rhs(j, k)};
}

}  // namespace braidlab
