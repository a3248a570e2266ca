#pragma once

// Fourier coefficients c_n(f) = (1/2pi) int_{-pi}^{pi} e^{-in theta} f(theta) dtheta
// of the family f = (i theta)^m, by closed form and by quadrature, plus the
// Parseval pairing of two powers of tau.

#include <functional>
#include <stdexcept>
#include <vector>

#include "braidlab/defaults.hpp"
#include "braidlab/seq.hpp"

namespace braidlab {

enum class QuadMethod { closed_form, gauss_legendre };

struct QuadratureSpec {
  QuadMethod method = QuadMethod::gauss_legendre;
  int panels = 8;
  int nodes_per_panel = defaults::kQuadNodes;
  double tolerance = defaults::kQuadTolerance;

  /// Throws std::invalid_argument unless panels >= 1, nodes_per_panel >= 2
  /// and tolerance > 0.
  void validate() const;
};

/// 16 nodes per panel and max(8, 2|n|+2) panels, enough to put several
/// nodes on every period of e^{-in theta}.
QuadratureSpec default_quadrature(Index n);

/// Raised when the coarse and refined quadrature passes disagree by more
/// than the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double coarse_fine_gap)
      : std::runtime_error(what), gap_(coarse_fine_gap) {}
  double gap() const { return gap_; }

 private:
  double gap_;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes by Newton iteration on P_k; accurate to a few ulps for k <= 100.
GaussLegendreRule gauss_legendre_rule(int k);

/// Composite rule: [lo, hi] split into equal panels, one rule per panel.
Complex integrate_panels(const std::function<Complex(double)>& f, double lo, double hi,
                         int panels, const GaussLegendreRule& rule);

/// c_n(theta): i(-1)^n/n for n != 0, and 0 for n = 0.
Complex cn_sawtooth(Index n);

/// Largest m accepted by the closed form.
inline constexpr int kMaxClosedFormPower = 60;

/// int_{-pi}^{pi} theta^m e^{-in theta} dtheta by integration by parts:
///   n != 0: J(m,n) = (i/n)(-1)^n pi^m (1 - (-1)^m) - (i m/n) J(m-1,n), J(0,n) = 0
///   n == 0: 2 pi^{m+1}/(m+1) for even m, 0 for odd m.
/// The n != 0 recurrence runs in 128-digit arithmetic and is rounded once.
/// Throws std::invalid_argument for m < 0 or m > kMaxClosedFormPower.
Complex theta_moment(Index n, int m);

/// c_n((i theta)^m) = i^m J(m,n) / 2pi, in closed form.
Complex cn_theta_power_closed(Index n, int m);

/// c_n((i theta)^m) by composite Gauss-Legendre. The integral is evaluated
/// with spec.panels and with twice as many; the refined value is returned.
/// Throws QuadratureError when the two differ by more than spec.tolerance,
/// std::invalid_argument when spec is malformed or not gauss_legendre.
Complex cn_theta_power_quad(Index n, int m, const QuadratureSpec& spec);
Complex cn_theta_power_quad(Index n, int m);

struct ParsevalPair {
  Complex lhs;  // inner(tau^j, tau^k) in coefficient space
  Complex rhs;  // (1/2pi) int (i theta)^j conj((i theta)^k) dtheta
};

/// (1/2pi) int (i theta)^j conj((i theta)^k) dtheta
///   = i^{j-k} pi^{j+k}/(j+k+1) when j+k is even, else 0.
Complex parseval_rhs(int j, int k);

/// Both sides of Parseval for A = (i theta)^j, B = (i theta)^k with tau
/// truncated at window N. Powers are formed with cap = max(j, k, 1) * N,
/// so no clamping occurs.
ParsevalPair parseval_pair(int j, int k, Index N);

}  // namespace braidlab
