#pragma once

// Windowed two-sided complex sequences: the finite-support model of l2(Z),
// where a sequence c stands for the formal sum  sum_n c_n q^n.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace braidlab {

using Index = std::int64_t;
using Complex = std::complex<double>;

/// Coefficients c_n for n in [-radius, radius]; everything outside the window
/// is zero. Instances are immutable once built.
class CoeffSeq {
 public:
  /// The zero sequence with window radius 0.
  CoeffSeq();

  /// Takes ownership of 2*radius+1 coefficients ordered from index -radius
  /// upward. Throws std::invalid_argument on a size mismatch, a negative
  /// radius, or a non-finite entry.
  CoeffSeq(Index radius, std::vector<Complex> coeffs);

  static CoeffSeq zero(Index radius = 0);

  Index radius() const { return radius_; }

  /// c_n, or 0 when n lies outside the window.
  Complex operator[](Index n) const;

  /// Raw storage, position 0 holding c_{-radius}.
  std::span<const Complex> coeffs() const { return coeffs_; }

  /// The same sequence stored in a window of the given radius. Growing pads
  /// with zeros; shrinking drops the outer coefficients.
  CoeffSeq rewindow(Index radius) const;

 private:
  Index radius_;
  std::vector<Complex> coeffs_;
};

/// Unit sequence at index k (the braid q^k).
CoeffSeq delta(Index k);

CoeffSeq add(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq subtract(const CoeffSeq& a, const CoeffSeq& b);
CoeffSeq scale(const CoeffSeq& a, Complex s);

/// sum_n a_n * conj(b_n).
Complex inner(const CoeffSeq& a, const CoeffSeq& b);
double l2_norm(const CoeffSeq& a);
double l1_norm(const CoeffSeq& a);

/// Largest coefficientwise |a_n - b_n|.
double max_abs_diff(const CoeffSeq& a, const CoeffSeq& b);

/// Coefficientwise comparison; the only notion of sequence equality offered.
bool approx_equal(const CoeffSeq& a, const CoeffSeq& b, double tol);

/// A sequence truncated to a smaller window, with the l2 norm of what was cut.
struct Clamped {
  CoeffSeq value;
  double discarded = 0.0;
};

/// Drops coefficients with |n| > cap. No-op when cap >= radius(a).
Clamped clamp(const CoeffSeq& a, Index cap);

}  // namespace braidlab
