#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "braidlab/braidexp.hpp"
#include "braidlab/defaults.hpp"
#include "braidlab/fourier.hpp"
#include "output.hpp"

namespace braidlab::cli {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::vector<std::int64_t> parse_index_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto part : split_commas(text)) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(part));
      continue;
    }
    const auto lo = parse_int(part.substr(0, dots));
    const auto hi = parse_int(part.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range '" + std::string(part) + "'");
    for (auto n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

std::vector<std::optional<int>> parse_terms_list(const std::string& text) {
  std::vector<std::optional<int>> out;
  for (const auto part : split_commas(text)) {
    if (part == "auto") {
      out.emplace_back(std::nullopt);
      continue;
    }
    const auto v = parse_int(part);
    if (v < 0) throw std::invalid_argument("term counts must be >= 0");
    out.emplace_back(static_cast<int>(v));
  }
  return out;
}

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FormatFlags {
  std::string kind = "csv";
  int precision = defaults::kPrecision;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", kind, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--precision", precision, "Significant digits (1-17)")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
  }

  OutputFormat resolve() const {
    return {kind == "json" ? FormatKind::json : FormatKind::csv, precision};
  }
};

void require_window(Index N) {
  if (N < 1) throw UsageError("--window must be >= 1");
}

Table cmd_tau(Index N) {
  require_window(N);
  const CoeffSeq t = tau(N);
  Table table{"tau", {"n", "coeff"}, {}};
  for (Index n = -N; n <= N; ++n) {
    table.rows.push_back({n, t[n].real()});
  }
  return table;
}

struct CnArgs {
  Index n = 0;
  int m = 1;
  std::string method = "closed";
  Index window = defaults::kWindow;
  double cap_factor = defaults::kCapFactor;
  std::optional<int> panels;
  int nodes = defaults::kQuadNodes;
  double tolerance = defaults::kQuadTolerance;
};

Table cmd_cn(const CnArgs& a) {
  if (a.m < 0) throw UsageError("--m must be >= 0");
  Complex value;
  if (a.method == "closed") {
    value = cn_theta_power_closed(a.n, a.m);
  } else if (a.method == "quad") {
    QuadratureSpec spec = default_quadrature(a.n);
    if (a.panels) spec.panels = *a.panels;
    spec.nodes_per_panel = a.nodes;
    spec.tolerance = a.tolerance;
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    value = cn_theta_power_quad(a.n, a.m, spec);
  } else {
    require_window(a.window);
    const CoeffSeq t = tau(a.window);
    value = power(t, a.m, cap_for(a.window, a.cap_factor)).value[a.n];
  }
  return {"cn", {"n", "m", "method", "re", "im"},
          {{a.n, static_cast<std::int64_t>(a.m), a.method, value.real(), value.imag()}}};
}

void check_probes(const std::vector<Index>& probes, Index cap) {
  for (const Index n : probes) {
    if (n < -cap || n > cap) {
      throw UsageError("probe " + std::to_string(n) + " lies outside the window [-" +
                       std::to_string(cap) + ", " + std::to_string(cap) + "]");
    }
  }
}

struct VerifyArgs {
  std::string windows = std::to_string(defaults::kWindow);
  std::string terms = "auto";
  std::string probes = defaults::probe_spec();
  double cap_factor = defaults::kCapFactor;
};

int cmd_verify_exp(const VerifyArgs& a, const OutputFormat& format, std::ostream& out,
                   std::ostream& err) {
  std::vector<Index> Ns;
  std::vector<std::optional<int>> Ms;
  std::vector<Index> probes;
  try {
    Ns = parse_index_list(a.windows);
    Ms = parse_terms_list(a.terms);
    probes = parse_index_list(a.probes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (Ns.empty() || Ms.empty() || probes.empty()) throw UsageError("lists must be nonempty");
  if (a.cap_factor < 1.0) throw UsageError("--cap-factor must be >= 1");
  for (const Index N : Ns) {
    require_window(N);
    check_probes(probes, cap_for(N, a.cap_factor));
  }

  const ConvergenceReport report = verify_exp_tau(Ns, Ms, probes, a.cap_factor);
  Table table{"verify-exp", {"N", "M", "err_c1", "err_off", "l2_err", "discarded_mass"}, {}};
  for (const auto& r : report.rows) {
    table.rows.push_back({r.N, static_cast<std::int64_t>(r.M), r.err_c1, r.err_off, r.l2_err,
                          r.discarded_mass});
  }
  write_table(out, table, format);

  const auto violations = check_trends(report);
  for (const auto& v : violations) err << "trend violation: " << v.describe() << '\n';
  return violations.empty() ? kOk : kTrendFailure;
}

int cmd_parseval(int j, int k, Index N, const OutputFormat& format, std::ostream& out) {
  if (j < 0 || k < 0) throw UsageError("--j and --k must be >= 0");
  require_window(N);
  const ParsevalPair p = parseval_pair(j, k, N);
  const double gap = std::abs(p.lhs - p.rhs);
  // Known bounds: the (1,1) tail sum_{|n|>N} n^-2 < 2/N, and (0,0) is exact.
  Cell bound;
  bool ok = true;
  if (j == 1 && k == 1) {
    bound = 2.0 / static_cast<double>(N);
    ok = gap <= std::get<double>(bound);
  } else if (j == 0 && k == 0) {
    bound = 0.0;
    ok = gap == 0.0;
  }
  Table table{"parseval",
              {"j", "k", "N", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "gap", "bound"},
              {{static_cast<std::int64_t>(j), static_cast<std::int64_t>(k), N, p.lhs.real(),
                p.lhs.imag(), p.rhs.real(), p.rhs.imag(), gap, bound}}};
  write_table(out, table, format);
  return ok ? kOk : kTrendFailure;
}

struct ReconstructArgs {
  Index k = 1;
  std::string terms = "auto";
  Index window = defaults::kWindow;
  std::string probes = defaults::probe_spec();
  double cap_factor = defaults::kCapFactor;
};

Table cmd_reconstruct(const ReconstructArgs& a) {
  require_window(a.window);
  if (a.cap_factor < 1.0) throw UsageError("--cap-factor must be >= 1");
  std::vector<Index> probes;
  std::optional<int> terms;
  try {
    probes = parse_index_list(a.probes);
    const auto t = parse_terms_list(a.terms);
    if (t.size() != 1) throw std::invalid_argument("--terms takes a single value");
    terms = t.front();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Index cap = cap_for(a.window, a.cap_factor);
  check_probes(probes, cap);

  const CoeffSeq t = tau(a.window);
  const double kd = static_cast<double>(a.k);
  const int M = terms.value_or(auto_terms(std::abs(kd) * l1_norm(t)));
  const CoeffSeq r = reconstruct(BraidPower{a.k}, M, a.window, cap);

  Table table{"reconstruct", {"n", "re", "im", "target", "err"}, {}};
  for (const Index n : probes) {
    const double target = (n == a.k) ? 1.0 : 0.0;
    table.rows.push_back({n, r[n].real(), r[n].imag(), target, std::abs(r[n] - target)});
  }
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of exp(tau) = q in the group ring of P_2", "braidlab"};
  app.require_subcommand(1);

  FormatFlags fmt_tau, fmt_cn, fmt_verify, fmt_parseval, fmt_rec;

  Index tau_window = defaults::kWindow;
  auto* tau_cmd = app.add_subcommand("tau", "Print the coefficients of tau on a window");
  tau_cmd->add_option("--window", tau_window, "Window radius N")->capture_default_str();
  fmt_tau.attach(tau_cmd);

  CnArgs cn;
  auto* cn_cmd = app.add_subcommand("cn", "Fourier coefficient c_n(tau^m)");
  cn_cmd->add_option("--n", cn.n, "Coefficient index")->required();
  cn_cmd->add_option("--m", cn.m, "Power of tau")->required();
  cn_cmd->add_option("--method", cn.method, "closed | quad | conv")
      ->check(CLI::IsMember({"closed", "quad", "conv"}))
      ->capture_default_str();
  cn_cmd->add_option("--window", cn.window, "Window radius for --method conv")
      ->capture_default_str();
  cn_cmd->add_option("--cap-factor", cn.cap_factor, "Clamp radius as a multiple of N")
      ->capture_default_str();
  cn_cmd->add_option("--panels", cn.panels, "Quadrature panels (default max(8, 2|n|+2))");
  cn_cmd->add_option("--nodes", cn.nodes, "Gauss-Legendre nodes per panel")
      ->capture_default_str();
  cn_cmd->add_option("--tolerance", cn.tolerance, "Quadrature convergence tolerance")
      ->capture_default_str();
  fmt_cn.attach(cn_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-exp", "Convergence table for exp(tau) = q");
  verify_cmd->add_option("--windows", verify.windows, "Window radii, e.g. 256,1024,4096")
      ->capture_default_str();
  verify_cmd->add_option("--terms", verify.terms, "Series term counts or 'auto'")
      ->capture_default_str();
  verify_cmd->add_option("--probes", verify.probes, "Probe indices, e.g. -8..8")
      ->capture_default_str();
  verify_cmd->add_option("--cap-factor", verify.cap_factor, "Clamp radius as a multiple of N")
      ->capture_default_str();
  fmt_verify.attach(verify_cmd);

  int pj = 1, pk = 1;
  Index p_window = defaults::kWindow;
  auto* parseval_cmd = app.add_subcommand("parseval", "Both sides of Parseval for tau^j, tau^k");
  parseval_cmd->add_option("--j", pj)->capture_default_str();
  parseval_cmd->add_option("--k", pk)->capture_default_str();
  parseval_cmd->add_option("--window", p_window, "Window radius N")->capture_default_str();
  fmt_parseval.attach(parseval_cmd);

  ReconstructArgs rec;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Rebuild q^k from its invariants");
  rec_cmd->add_option("--k", rec.k, "Braid power")->capture_default_str();
  rec_cmd->add_option("--terms", rec.terms, "Number of degrees or 'auto'")
      ->capture_default_str();
  rec_cmd->add_option("--window", rec.window, "Window radius N")->capture_default_str();
  rec_cmd->add_option("--probes", rec.probes, "Probe indices, e.g. -8..8")
      ->capture_default_str();
  rec_cmd->add_option("--cap-factor", rec.cap_factor, "Clamp radius as a multiple of N")
      ->capture_default_str();
  fmt_rec.attach(rec_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (tau_cmd->parsed()) {
      write_table(out, cmd_tau(tau_window), fmt_tau.resolve());
    } else if (cn_cmd->parsed()) {
      write_table(out, cmd_cn(cn), fmt_cn.resolve());
    } else if (verify_cmd->parsed()) {
      return cmd_verify_exp(verify, fmt_verify.resolve(), out, err);
    } else if (parseval_cmd->parsed()) {
      return cmd_parseval(pj, pk, p_window, fmt_parseval.resolve(), out);
    } else if (rec_cmd->parsed()) {
      write_table(out, cmd_reconstruct(rec), fmt_rec.resolve());
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << " (coarse/fine gap " << e.gap() << ")\n";
    return kQuadratureFailure;
  }
  return kOk;
}

}  // namespace braidlab::cli
