#include "braidlab/seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace braidlab {

CoeffSeq::CoeffSeq() : radius_(0), coeffs_(1, Complex{}) {}

CoeffSeq::CoeffSeq(Index radius, std::vector<Complex> coeffs)
    : radius_(radius), coeffs_(std::move(coeffs)) {
  if (radius_ < 0) {
    throw std::invalid_argument("CoeffSeq: negative radius");
  }
  if (coeffs_.size() != static_cast<std::size_t>(2 * radius_ + 1)) {
    throw std::invalid_argument("CoeffSeq: expected " + std::to_string(2 * radius_ + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("CoeffSeq: non-finite coefficient");
    }
  }
}

CoeffSeq CoeffSeq::zero(Index radius) {
  return CoeffSeq(radius, std::vector<Complex>(2 * radius + 1));
}

Complex CoeffSeq::operator[](Index n) const {
  if (n < -radius_ || n > radius_) return {};
  return coeffs_[static_cast<std::size_t>(n + radius_)];
}

CoeffSeq CoeffSeq::rewindow(Index radius) const {
  std::vector<Complex> out(2 * radius + 1);
  const Index lo = std::max(-radius, -radius_);
  const Index hi = std::min(radius, radius_);
  for (Index n = lo; n <= hi; ++n) {
    out[n + radius] = coeffs_[n + radius_];
  }
  return CoeffSeq(radius, std::move(out));
}

CoeffSeq delta(Index k) {
  const Index r = k < 0 ? -k : k;
  std::vector<Complex> c(2 * r + 1);
  c[k + r] = 1.0;
  return CoeffSeq(r, std::move(c));
}

namespace {

template <typename Op>
CoeffSeq zip(const CoeffSeq& a, const CoeffSeq& b, Op op) {
  const Index r = std::max(a.radius(), b.radius());
  std::vector<Complex> out(2 * r + 1);
  for (Index n = -r; n <= r; ++n) {
    out[n + r] = op(a[n], b[n]);
  }
  return CoeffSeq(r, std::move(out));
}

}  // namespace

CoeffSeq add(const CoeffSeq& a, const CoeffSeq& b) {
  return zip(a, b, [](Complex x, Complex y) { return x + y; });
}

CoeffSeq subtract(const CoeffSeq& a, const CoeffSeq& b) {
  return zip(a, b, [](Complex x, Complex y) { return x - y; });
}

CoeffSeq scale(const CoeffSeq& a, Complex s) {
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c *= s;
  return CoeffSeq(a.radius(), std::move(out));
}

Complex inner(const CoeffSeq& a, const CoeffSeq& b) {
  const Index r = std::min(a.radius(), b.radius());
  Complex sum{};
  for (Index n = -r; n <= r; ++n) {
    sum += a[n] * std::conj(b[n]);
  }
  return sum;
}

double l2_norm(const CoeffSeq& a) {
  double sum = 0.0;
  for (const auto& c : a.coeffs()) sum += std::norm(c);
  return std::sqrt(sum);
}

double l1_norm(const CoeffSeq& a) {
  double sum = 0.0;
  for (const auto& c : a.coeffs()) sum += std::abs(c);
  return sum;
}

double max_abs_diff(const CoeffSeq& a, const CoeffSeq& b) {
  const Index r = std::max(a.radius(), b.radius());
  double worst = 0.0;
  for (Index n = -r; n <= r; ++n) {
    worst = std::max(worst, std::abs(a[n] - b[n]));
  }
  return worst;
}

bool approx_equal(const CoeffSeq& a, const CoeffSeq& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Clamped clamp(const CoeffSeq& a, Index cap) {
  if (cap >= a.radius()) return {a, 0.0};
  double dropped = 0.0;
  for (Index n = cap + 1; n <= a.radius(); ++n) {
    dropped += std::norm(a[n]) + std::norm(a[-n]);
  }
  return {a.rewindow(cap), std::sqrt(dropped)};
}

}  // namespace braidlab
