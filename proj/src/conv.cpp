#include "braidlab/conv.hpp"

#include <fftw3.h>

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace braidlab {

CoeffSeq convolve_direct(const CoeffSeq& a, const CoeffSeq& b) {
  const Index ra = a.radius();
  const Index rb = b.radius();
  const Index r = ra + rb;
  std::vector<Complex> out(2 * r + 1);
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  // Position i in a and j in b land at position i+j of the result.
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == Complex{}) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      out[i + j] += ca[i] * cb[j];
    }
  }
  return CoeffSeq(r, std::move(out));
}

namespace {

// FFTW's planner is not re-entrant; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (p == nullptr) throw std::bad_alloc();
  return FftwBuffer(p);
}

class Plan {
 public:
  Plan(std::size_t n, fftw_complex* buf, int sign) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("fftw: planning failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  void run(fftw_complex* buf) const { fftw_execute_dft(plan_, buf, buf); }

 private:
  fftw_plan plan_;
};

void load(fftw_complex* buf, std::size_t n, std::span<const Complex> src) {
  for (std::size_t i = 0; i < n; ++i) {
    buf[i][0] = 0.0;
    buf[i][1] = 0.0;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    buf[i][0] = src[i].real();
    buf[i][1] = src[i].imag();
  }
}

}  // namespace

CoeffSeq convolve_fast(const CoeffSeq& a, const CoeffSeq& b) {
  const Index r = a.radius() + b.radius();
  const auto out_len = static_cast<std::size_t>(2 * r + 1);
  const std::size_t n = std::bit_ceil(out_len);

  auto fa = make_buffer(n);
  auto fb = make_buffer(n);
  // Both plans share the alignment of fftw_malloc'd buffers, so one forward
  // plan serves fa and fb.
  const Plan forward(n, fa.get(), FFTW_FORWARD);
  const Plan backward(n, fa.get(), FFTW_BACKWARD);

  load(fa.get(), n, a.coeffs());
  load(fb.get(), n, b.coeffs());
  forward.run(fa.get());
  forward.run(fb.get());
  for (std::size_t i = 0; i < n; ++i) {
    const Complex x{fa[i][0], fa[i][1]};
    const Complex y{fb[i][0], fb[i][1]};
    const Complex z = x * y;
    fa[i][0] = z.real();
    fa[i][1] = z.imag();
  }
  backward.run(fa.get());

  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<Complex> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) {
    out[i] = Complex{fa[i][0], fa[i][1]} * inv_n;
  }
  return CoeffSeq(r, std::move(out));
}

PowerResult power_step(const PowerResult& prev, const CoeffSeq& a, Index cap, double a_l1) {
  auto [value, cut] = clamp(convolve_fast(prev.value, a), cap);
  return {std::move(value), prev.discarded_mass + cut, prev.loss_bound * a_l1 + cut};
}

PowerResult power(const CoeffSeq& a, int m, Index cap) {
  if (cap < a.radius()) {
    throw std::invalid_argument("power: cap must be >= radius of the base sequence");
  }
  if (m < 0) throw std::invalid_argument("power: negative exponent");
  if (m == 0) return {delta(0), 0.0, 0.0};

  const double a_l1 = l1_norm(a);
  PowerResult acc{a, 0.0, 0.0};
  for (int step = 1; step < m; ++step) {
    acc = power_step(acc, a, cap, a_l1);
  }
  return acc;
}

}  // namespace braidlab
