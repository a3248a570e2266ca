#include "braidlab/braidexp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace braidlab {

CoeffSeq tau(Index N) {
  if (N < 1) throw std::invalid_argument("tau: window must be >= 1");
  std::vector<Complex> c(2 * N + 1);
  for (Index n = 1; n <= N; ++n) {
    const double v = (n % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(n);
    c[N + n] = v;
    c[N - n] = -v;
  }
  return CoeffSeq(N, std::move(c));
}

RationalLaurent tau_exact(Index N) {
  if (N < 1) throw std::invalid_argument("tau_exact: window must be >= 1");
  RationalLaurent out;
  for (Index n = 1; n <= N; ++n) {
    mpq_class v(n % 2 == 1 ? 1 : -1, static_cast<unsigned long>(n));
    v.canonicalize();
    out[n] = v;
    out[-n] = -v;
  }
  return out;
}

namespace {

// ln(1+x) = sum_{n>=1} (-1)^{n+1} x^n/n, truncated, with x = q^step.
RationalLaurent log_one_plus(Index N, Index step) {
  RationalLaurent out;
  for (Index n = 1; n <= N; ++n) {
    mpq_class c(1, static_cast<unsigned long>(n));
    if (n % 2 == 0) c = -c;
    out[n * step] += c;
  }
  return out;
}

void subtract_into(RationalLaurent& acc, const RationalLaurent& rhs) {
  for (const auto& [idx, c] : rhs) {
    auto& slot = acc[idx];
    slot -= c;
    if (sgn(slot) == 0) acc.erase(idx);
  }
}

}  // namespace

RationalLaurent log_candidate_exact(Index N) {
  if (N < 1) throw std::invalid_argument("log_candidate: window must be >= 1");
  RationalLaurent acc = log_one_plus(N, +1);
  subtract_into(acc, log_one_plus(N, -1));
  return acc;
}

CoeffSeq to_coeff_seq(const RationalLaurent& r, Index radius) {
  std::vector<Complex> c(2 * radius + 1);
  for (const auto& [idx, v] : r) {
    if (idx < -radius || idx > radius) {
      throw std::invalid_argument("to_coeff_seq: coefficient outside window");
    }
    // Numerator and denominator are exact doubles here, so the quotient is
    // correctly rounded (mpq_get_d truncates).
    const double num = v.get_num().get_d();
    const double den = v.get_den().get_d();
    c[idx + radius] = num / den;
  }
  return CoeffSeq(radius, std::move(c));
}

CoeffSeq log_candidate(Index N) { return to_coeff_seq(log_candidate_exact(N), N); }

double exp_tail_bound(double l1, int M) {
  if (l1 == 0.0) return 0.0;
  // x^{M+1}/(M+1)! in log space to survive large M.
  const double log_term = (M + 1) * std::log(l1) - std::lgamma(M + 2.0);
  return std::exp(l1 + log_term);
}

int auto_terms(double l1) {
  return static_cast<int>(std::ceil(std::numbers::e * l1)) + defaults::kExtraTerms;
}

ExpResult exp_seq(const CoeffSeq& a, int M, Index cap) {
  if (cap < a.radius()) throw std::invalid_argument("exp_seq: cap must be >= radius(a)");
  if (M < 0) throw std::invalid_argument("exp_seq: negative term count");

  const double a_l1 = l1_norm(a);
  ExpResult out{delta(0), 0.0, 0.0, exp_tail_bound(a_l1, M)};
  PowerResult p{delta(0), 0.0, 0.0};
  double inv_factorial = 1.0;
  for (int m = 1; m <= M; ++m) {
    const double cut_before = p.discarded_mass;
    p = (m == 1) ? PowerResult{a, 0.0, 0.0} : power_step(p, a, cap, a_l1);
    inv_factorial /= m;
    out.value = add(out.value, scale(p.value, inv_factorial));
    out.discarded_mass += (p.discarded_mass - cut_before) * inv_factorial;
    out.loss_bound += p.loss_bound * inv_factorial;
  }
  return out;
}

ProbeErrors probe_errors(const CoeffSeq& s, Index target, const std::vector<Index>& probes) {
  ProbeErrors e;
  double sq = 0.0;
  for (const Index n : probes) {
    const Complex want = (n == target) ? 1.0 : 0.0;
    const double d = std::abs(s[n] - want);
    sq += d * d;
    if (n == target) {
      e.err_target = d;
    } else {
      e.err_off = std::max(e.err_off, d);
    }
  }
  if (std::find(probes.begin(), probes.end(), target) == probes.end()) {
    e.err_target = std::abs(s[target] - 1.0);
  }
  e.l2_err = std::sqrt(sq);
  return e;
}

Index cap_for(Index N, double cap_factor) {
  if (!(cap_factor >= 1.0)) throw std::invalid_argument("cap_factor must be >= 1");
  return static_cast<Index>(std::ceil(cap_factor * static_cast<double>(N)));
}

ConvergenceReport verify_exp_tau(const std::vector<Index>& Ns,
                                 const std::vector<std::optional<int>>& Ms,
                                 const std::vector<Index>& probes, double cap_factor) {
  ConvergenceReport report;
  for (const Index N : Ns) {
    const CoeffSeq t = tau(N);
    const Index cap = cap_for(N, cap_factor);
    for (const Index n : probes) {
      if (n < -cap || n > cap) {
        throw std::invalid_argument("verify_exp_tau: probe " + std::to_string(n) +
                                    " outside [-cap, cap]");
      }
    }
    const double l1 = l1_norm(t);
    for (std::size_t slot = 0; slot < Ms.size(); ++slot) {
      const int M = Ms[slot].value_or(auto_terms(l1));
      const ExpResult r = exp_seq(t, M, cap);
      const ProbeErrors e = probe_errors(r.value, 1, probes);
      report.rows.push_back({N, M, e.err_target, e.err_off, e.l2_err, r.discarded_mass,
                             r.tail_bound, l1, slot});
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ConvergenceRow& a, const ConvergenceRow& b) {
                     return std::tie(a.N, a.M) < std::tie(b.N, b.M);
                   });
  return report;
}

std::string TrendViolation::describe() const {
  std::ostringstream os;
  os << field << " did not improve from (N=" << earlier.N << ", M=" << earlier.M
     << ") to (N=" << later.N << ", M=" << later.M << ")";
  return os.str();
}

namespace {

struct Field {
  const char* name;
  double ConvergenceRow::*member;
};

constexpr Field kErrorFields[] = {
    {"err_c1", &ConvergenceRow::err_c1},
    {"err_off", &ConvergenceRow::err_off},
    {"l2_err", &ConvergenceRow::l2_err},
};

constexpr double kRoundingSlack = 1e-12;

}  // namespace

std::vector<TrendViolation> check_trends(const ConvergenceReport& report) {
  std::vector<TrendViolation> out;
  const auto& rows = report.rows;

  // M direction, fixed N.
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const auto& a = rows[i];
    const auto& b = rows[i + 1];
    if (a.N != b.N || a.M == b.M || a.M <= a.tau_l1) continue;
    for (const auto& f : kErrorFields) {
      if (b.*f.member > a.*f.member + a.tail_bound + kRoundingSlack) {
        out.push_back({f.name, a, b});
      }
    }
  }

  // N direction, fixed term slot, large M only.
  std::size_t slots = 0;
  for (const auto& r : rows) slots = std::max(slots, r.term_slot + 1);
  for (std::size_t slot = 0; slot < slots; ++slot) {
    std::vector<const ConvergenceRow*> column;
    for (const auto& r : rows) {
      if (r.term_slot == slot && r.M >= std::ceil(std::numbers::e * r.tau_l1)) {
        column.push_back(&r);
      }
    }
    for (std::size_t i = 0; i + 1 < column.size(); ++i) {
      const auto& a = *column[i];
      const auto& b = *column[i + 1];
      if (a.N == b.N) continue;
      for (const auto& f : kErrorFields) {
        if (!(b.*f.member < a.*f.member)) out.push_back({f.name, a, b});
      }
    }
  }
  return out;
}

VassilievValue vassiliev_Z(BraidPower b, int i) {
  if (i < 0) throw std::invalid_argument("vassiliev_Z: negative degree");
  double c = 1.0;
  for (int j = 1; j <= i; ++j) c *= static_cast<double>(b.k) / j;
  return {i, c};
}

CoeffSeq psi(int i, const VassilievValue& v, Index N, Index cap) {
  if (v.degree != i) {
    throw std::invalid_argument("psi: value of degree " + std::to_string(v.degree) +
                                " passed to psi_" + std::to_string(i));
  }
  return scale(power(tau(N), i, cap).value, v.coeff);
}

MultiplicativityCheck check_psi_multiplicative(int i, int j, Index N, Index cap,
                                               const std::vector<Index>& probes) {
  if (i < 0 || j < 0) throw std::invalid_argument("check_psi_multiplicative: negative degree");
  const CoeffSeq t = tau(N);
  const double t_l1 = l1_norm(t);
  // psi_d(t^d) is tau^d itself: the coefficient of t^d is 1.
  const PowerResult whole = power(t, i + j, cap);
  const PowerResult left = power(t, i, cap);
  const PowerResult right = power(t, j, cap);
  const CoeffSeq product = convolve_fast(left.value, right.value);

  double sq = 0.0;
  for (const Index n : probes) sq += std::norm(whole.value[n] - product[n]);

  // |left - tau^i| <= B_i, so |left*right - tau^i*tau^j|
  //   <= B_i ||right||_1 + ||tau||_1^i B_j.
  const double loss = whole.loss_bound + left.loss_bound * l1_norm(right.value) +
                      std::pow(t_l1, i) * right.loss_bound;
  return {std::sqrt(sq), loss};
}

CoeffSeq reconstruct(BraidPower b, int M, Index N, Index cap) {
  if (M < 0) throw std::invalid_argument("reconstruct: negative term count");
  const CoeffSeq t = tau(N);
  if (cap < t.radius()) throw std::invalid_argument("reconstruct: cap must be >= N");
  if (b.k == 0) return delta(0);
  const double t_l1 = l1_norm(t);

  // Same ladder psi() climbs, shared across degrees instead of rebuilt.
  CoeffSeq sum = delta(0);
  PowerResult p{delta(0), 0.0, 0.0};
  for (int i = 1; i <= M; ++i) {
    p = (i == 1) ? PowerResult{t, 0.0, 0.0} : power_step(p, t, cap, t_l1);
    const VassilievValue z = vassiliev_Z(b, i);
    if (z.coeff == 0.0) continue;
    sum = add(sum, scale(p.value, z.coeff));
  }
  return sum;
}

}  // namespace braidlab
