#pragma once

// Convolution, the group-ring product on l2(Z): (a*b)_n = sum_k a_k b_{n-k}.

#include "braidlab/seq.hpp"

namespace braidlab {

/// Quadratic-time reference product. Result radius is radius(a)+radius(b).
CoeffSeq convolve_direct(const CoeffSeq& a, const CoeffSeq& b);

/// Same contract as convolve_direct, computed through a zero-padded cyclic
/// FFT whose length is the next power of two >= 2(radius(a)+radius(b))+1,
/// so no wrap-around can occur.
CoeffSeq convolve_fast(const CoeffSeq& a, const CoeffSeq& b);

struct PowerResult {
  CoeffSeq value;
  /// Sum over steps of the l2 norm cut away by the per-step clamp.
  double discarded_mass = 0.0;
  /// Upper bound on the l2 distance between value and the unclamped power
  /// (restricted to the window), propagated through later products with
  /// ||x*a||_2 <= ||x||_2 ||a||_1.
  double loss_bound = 0.0;
};

/// m-fold power by repeated convolve_fast, clamping to radius cap after
/// every product. power(a, 0, cap) is delta(0). Throws std::invalid_argument
/// if cap < radius(a).
PowerResult power(const CoeffSeq& a, int m, Index cap);

/// One clamped step of the power ladder: clamp(prev * a, cap). Updates the
/// running discarded mass and loss bound of prev.
PowerResult power_step(const PowerResult& prev, const CoeffSeq& a, Index cap, double a_l1);

}  // namespace braidlab
