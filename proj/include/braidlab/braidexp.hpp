#pragma once

// tau = sum_{n>=1} (-1)^{n+1} (q^n - q^{-n})/n, its exponential series, and
// the degree-by-degree reconstruction of q^k in P_2 from its invariants.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidlab/conv.hpp"
#include "braidlab/defaults.hpp"
#include "braidlab/seq.hpp"

namespace braidlab {

/// The pure braid q^k of P_2 = Z; negative k are powers of p = q^{-1}.
struct BraidPower {
  Index k = 0;

  friend BraidPower operator*(BraidPower a, BraidPower b) { return {a.k + b.k}; }
  friend bool operator==(BraidPower, BraidPower) = default;
};

/// Degree-i invariant stored as the scalar c in Z_i(b) = c t^i, t = Z_1(q).
struct VassilievValue {
  int degree = 0;
  double coeff = 0.0;
};

/// tau truncated to |n| <= N.
CoeffSeq tau(Index N);

/// Exact Laurent polynomial with rational coefficients (index -> coefficient).
/// Zero coefficients are never stored.
using RationalLaurent = std::map<Index, mpq_class>;

/// tau's coefficients written down directly as rationals.
RationalLaurent tau_exact(Index N);

/// ln(1+q) - ln(1+p), each logarithm expanded to N terms, combined in exact
/// rational arithmetic.
RationalLaurent log_candidate_exact(Index N);

/// Converts to floating point with correctly rounded num/den division.
CoeffSeq to_coeff_seq(const RationalLaurent& r, Index radius);

/// log_candidate_exact(N) as a CoeffSeq of radius N.
CoeffSeq log_candidate(Index N);

/// e^x x^{M+1}/(M+1)!: bounds the l1 (hence every coefficient's) distance
/// between the M-term partial sum of exp and the full series, for ||a||_1 = x.
double exp_tail_bound(double l1, int M);

/// ceil(e * l1) + 10.
int auto_terms(double l1);

struct ExpResult {
  CoeffSeq value;
  /// sum_m d_m/m!, d_m the l2 mass cut when forming a^m.
  double discarded_mass = 0.0;
  /// sum_m B_m/m!, B_m the propagated clamping bound of a^m.
  double loss_bound = 0.0;
  /// exp_tail_bound(||a||_1, M).
  double tail_bound = 0.0;
};

/// sum_{m=0}^{M} power(a, m, cap)/m!. Throws std::invalid_argument if
/// cap < radius(a) or M < 0.
ExpResult exp_seq(const CoeffSeq& a, int M, Index cap);

/// Distances between a computed sequence and delta(target) on a probe set.
struct ProbeErrors {
  double err_target = 0.0;  // |c_target - 1|
  double err_off = 0.0;     // max over probes n != target of |c_n|
  double l2_err = 0.0;      // l2 distance to delta(target) over the probes
};

ProbeErrors probe_errors(const CoeffSeq& s, Index target, const std::vector<Index>& probes);

struct ConvergenceRow {
  Index N = 0;
  int M = 0;
  double err_c1 = 0.0;
  double err_off = 0.0;
  double l2_err = 0.0;
  double discarded_mass = 0.0;
  /// Not part of the emitted table; kept for the trend checks.
  double tail_bound = 0.0;
  double tau_l1 = 0.0;
  /// Position of this row's M in the requested term list.
  std::size_t term_slot = 0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // sorted by (N, M)
};

/// Window radius used for a given N: ceil(cap_factor * N). Throws
/// std::invalid_argument when cap_factor < 1.
Index cap_for(Index N, double cap_factor);

/// Runs exp_seq(tau(N), M, cap_for(N, cap_factor)) for each (N, M) and
/// measures the result against delta(1) on the probes. A missing M means
/// auto_terms(||tau(N)||_1).
ConvergenceReport verify_exp_tau(const std::vector<Index>& Ns,
                                 const std::vector<std::optional<int>>& Ms,
                                 const std::vector<Index>& probes, double cap_factor);

struct TrendViolation {
  std::string field;
  ConvergenceRow earlier;
  ConvergenceRow later;
  std::string describe() const;
};

/// Trend checks on a report:
///  - in M at fixed N, once M > ||tau(N)||_1: each error may grow by at most
///    the previous row's series tail bound (plus 1e-12 rounding slack);
///  - in N at a fixed term slot, across rows whose M >= ceil(e ||tau(N)||_1):
///    err_c1, err_off and l2_err strictly decrease.
std::vector<TrendViolation> check_trends(const ConvergenceReport& report);

/// Z_i(q^k) = k^i / i! (t^i).
VassilievValue vassiliev_Z(BraidPower b, int i);

/// psi_i(c t^i) = c tau^i, tau truncated at N and powers clamped at cap.
/// Throws std::invalid_argument if v.degree != i.
CoeffSeq psi(int i, const VassilievValue& v, Index N, Index cap);

struct MultiplicativityCheck {
  /// ||psi_{i+j}(t^{i+j}) - psi_i(t^i) * psi_j(t^j)||_2 over the probes.
  double discrepancy = 0.0;
  /// Upper bound on the part of the discrepancy caused by clamping.
  double clamping_loss = 0.0;
};

MultiplicativityCheck check_psi_multiplicative(int i, int j, Index N, Index cap,
                                               const std::vector<Index>& probes);

/// sum_{i=0}^{M} psi_i(Z_i(b)) = sum_i k^i tau^i / i!.
CoeffSeq reconstruct(BraidPower b, int M, Index N, Index cap);

}  // namespace braidlab
