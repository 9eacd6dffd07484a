// Command-line front end: kernel tables, slicing studies, composition,
// direct/reflected decomposition, the verification suite, and special
// function tables, all as deterministic CSV.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "halfline/decomposition.hpp"
#include "halfline/kernels.hpp"
#include "halfline/slicing.hpp"
#include "halfline/specfun.hpp"
#include "halfline/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct Options {
  double nu = 1.0;
  double mass = 1.0;
  double hbar = 1.0;
  std::string potential = "zero";
  double eps = 0.1;
  double beta = 1.0;
  std::string n_slices = "16,32,64,128";
  std::string grid = "0.5:2:5";
  std::string quad;
  double a = 1.0;
  double b = 1.0;
  int branch = 1;
  std::string exact;  // kernel: "", "free" or "oscillator"
  std::string out;
  std::string format = "csv";
  std::string only;
  double tolerance_scale = 1.0;
};

// "harmonic:omega=1" etc. -> Potential
halfline::Potential parse_potential(const std::string& s) {
  auto get = [&](const std::string& key) {
    const auto pos = s.find(key + "=");
    if (pos == std::string::npos)
      throw std::invalid_argument("--potential: missing " + key + "= in '" + s + "'");
    return std::stod(s.substr(pos + key.size() + 1));
  };
  if (s == "zero") return halfline::Potential::zero();
  if (s.rfind("harmonic", 0) == 0)
    return halfline::Potential::harmonic(get("omega"));
  if (s.rfind("coulomb", 0) == 0)
    return halfline::Potential::coulomb(get("alpha"));
  if (s.rfind("power", 0) == 0)
    return halfline::Potential::power_law(get("c"), get("p"));
  throw std::invalid_argument(
      "--potential: expected zero|harmonic:omega=W|coulomb:alpha=A|power:c=C,p=P, got '" +
      s + "'");
}

// "lo:hi:count" -> inclusive linspace; count >= 1 required
std::vector<double> parse_grid(const std::string& s) {
  double lo, hi;
  int count;
  char c1, c2;
  std::istringstream in(s);
  if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':')
    throw std::invalid_argument("--grid: expected lo:hi:count, got '" + s + "'");
  if (count < 1) throw std::invalid_argument("--grid: count must be >= 1");
  if (!(lo > 0.0) || hi < lo)
    throw std::invalid_argument("--grid: need 0 < lo <= hi");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i)
    g[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
  return g;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  if (out.empty()) throw std::invalid_argument("--n-slices: empty list");
  return out;
}

halfline::QuadratureSpec parse_quad(const std::string& s) {
  halfline::QuadratureSpec q;
  if (s.empty()) return q;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--quad: expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const double val = std::stod(tok.substr(eq + 1));
    if (key == "nodes")
      q.nodes_per_panel = static_cast<int>(val);
    else if (key == "panels")
      q.panels = static_cast<int>(val);
    else if (key == "xmax")
      q.x_max = val;
    else
      throw std::invalid_argument("--quad: unknown key '" + key + "'");
  }
  q.validate();
  return q;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// All output goes through one sink so stdout and --out see identical bytes.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);  // binary: LF endings everywhere
      if (!file_) throw std::invalid_argument("--out: cannot open '" + path + "'");
    }
  }
  void row(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    line += '\n';
    if (file_.is_open())
      file_ << line;
    else
      std::cout << line;
  }

 private:
  std::ofstream file_;
};

void emit_plot_script(const Options& opt, const std::string& ylabel,
                      int xcol, int ycol) {
  if (opt.format != "csv+plot" || opt.out.empty()) return;
  std::ofstream gp(opt.out + ".gp", std::ios::binary);
  gp << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set ylabel '" << ylabel << "'\n"
     << "plot '" << opt.out << "' using " << xcol << ":" << ycol
     << " with linespoints\n";
}

int cmd_kernel(const Options& opt) {
  const halfline::SystemSpec spec(opt.mass, opt.hbar, opt.nu,
                                  parse_potential(opt.potential));
  const auto grid = parse_grid(opt.grid);
  CsvSink csv(opt.out);
  csv.row({"x", "xprime", "eps", "value"});
  for (double x : grid)
    for (double xp : grid) {
      double v, t;
      if (opt.exact == "oscillator") {
        if (spec.potential.kind != halfline::Potential::Kind::Harmonic)
          throw std::invalid_argument("--exact oscillator requires --potential harmonic");
        t = opt.beta;
        v = halfline::radial_oscillator_kernel(opt.nu, spec.potential.omega,
                                               opt.mass, opt.hbar, x, xp, t);
      } else if (opt.exact == "free") {
        t = opt.beta;
        v = halfline::exact_free_halfline(opt.mass, opt.hbar, x, xp, t);
      } else if (opt.exact.empty()) {
        t = opt.eps;
        v = halfline::short_time_kernel(spec, x, xp, t);
      } else {
        throw std::invalid_argument("--exact: expected free or oscillator");
      }
      csv.row({fmt(x), fmt(xp), fmt(t), fmt(v)});
    }
  emit_plot_script(opt, "K(x,x')", 1, 4);
  return kExitOk;
}

int cmd_slice(const Options& opt) {
  const halfline::SystemSpec spec(opt.mass, opt.hbar, opt.nu,
                                  parse_potential(opt.potential));
  const auto quad = parse_quad(opt.quad);
  bool allow_missing = false;
  try {
    halfline::exact_reference_kernel(spec, opt.a, opt.b, opt.beta);
  } catch (const std::invalid_argument&) {
    std::cerr << "warning: no exact reference for " << spec.potential.describe()
              << "; error column left empty\n";
    allow_missing = true;
  }
  const auto records = halfline::convergence_study(
      spec, opt.a, opt.b, opt.beta, parse_int_list(opt.n_slices), quad,
      allow_missing);
  CsvSink csv(opt.out);
  csv.row({"N", "eps", "value", "rel_error_vs_exact", "observed_order"});
  for (const auto& r : records)
    csv.row({std::to_string(r.n_slices), fmt(r.eps), fmt(r.value),
             r.max_rel_error < 0.0 ? "" : fmt(r.max_rel_error),
             fmt(r.observed_order)});
  emit_plot_script(opt, "rel_error", 1, 4);
  return kExitOk;
}

int cmd_compose(const Options& opt) {
  const halfline::SystemSpec spec(opt.mass, opt.hbar, opt.nu,
                                  parse_potential(opt.potential));
  auto quad = parse_quad(opt.quad);
  if (quad.x_max <= 0.0)
    quad.x_max = halfline::QuadratureSpec::default_x_max(spec, 0.0, 0.0,
                                                         2.0 * opt.eps);
  const auto k1 = halfline::build_kernel_matrix(spec, quad, opt.eps);
  const auto k2 = halfline::compose(k1, k1);
  CsvSink csv(opt.out);
  csv.row({"x", "xprime", "eps_total", "value"});
  for (std::size_t i = 0; i < k2.size(); ++i)
    for (std::size_t j = 0; j < k2.size(); ++j)
      csv.row({fmt(k2.nodes[i]), fmt(k2.nodes[j]), fmt(k2.eps_total),
               fmt(k2.at(i, j))});
  emit_plot_script(opt, "K2(x,x')", 1, 4);
  return kExitOk;
}

int cmd_decompose(const Options& opt) {
  const halfline::SystemSpec spec(opt.mass, opt.hbar, opt.nu,
                                  parse_potential(opt.potential));
  const auto grid = parse_grid(opt.grid);
  CsvSink csv(opt.out);
  csv.row({"x", "xprime", "eps", "direct_re", "direct_im", "reflected_re",
           "reflected_im", "total_re", "total_im", "valid"});
  for (double x : grid)
    for (double xp : grid) {
      const auto d = halfline::decompose(spec, x, xp, opt.eps, opt.branch);
      csv.row({fmt(x), fmt(xp), fmt(opt.eps), fmt(d.direct.real()),
               fmt(d.direct.imag()), fmt(d.reflected.real()),
               fmt(d.reflected.imag()), fmt(d.total.real()),
               fmt(d.total.imag()), d.valid ? "1" : "0"});
    }
  emit_plot_script(opt, "Re K(x,x')", 1, 8);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const auto reports =
      halfline::verify::run_verification(opt.only, opt.tolerance_scale);
  if (reports.empty())
    throw std::invalid_argument("--only: no check matches '" + opt.only + "'");
  CsvSink csv(opt.out);
  csv.row({"check", "params", "residual", "tolerance", "pass", "wall_ms"});
  bool all_pass = true;
  for (const auto& r : reports) {
    csv.row({r.name, r.params, fmt(r.residual), fmt(r.tolerance),
             r.pass ? "1" : "0", fmt(r.wall_ms)});
    all_pass = all_pass && r.pass;
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_specfun_table(const Options& opt) {
  const double mu = opt.nu - 0.5;
  const auto grid = parse_grid(opt.grid);
  CsvSink csv(opt.out);
  csv.row({"z", "bessel_i_scaled", "bessel_j", "erf", "erfi_sign",
           "erfi_log_abs"});
  for (double z : grid) {
    const auto e = halfline::specfun::erfi_scaled(z);
    csv.row({fmt(z), fmt(halfline::specfun::bessel_i_scaled(mu, z)),
             fmt(halfline::specfun::bessel_j(mu, z)),
             fmt(halfline::specfun::erf(z)), fmt(e.sign), fmt(e.log_abs)});
  }
  emit_plot_script(opt, "Ihat_mu(z)", 1, 2);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imaginary-time kernels on the half-line"};
  app.set_config("--config", "", "flat key=value config file; flags override");

  Options opt;
  app.add_option("--nu", opt.nu, "boundary exponent nu >= 1/2");
  app.add_option("--mass", opt.mass, "particle mass (> 0)");
  app.add_option("--hbar", opt.hbar, "hbar (> 0)");
  app.add_option("--potential", opt.potential,
                 "zero|harmonic:omega=W|coulomb:alpha=A|power:c=C,p=P");
  app.add_option("--eps", opt.eps, "time step (> 0)");
  app.add_option("--beta", opt.beta, "total imaginary time (> 0)");
  app.add_option("--n-slices", opt.n_slices, "comma list of slice counts");
  app.add_option("--grid", opt.grid, "lo:hi:count inclusive linspace");
  app.add_option("--quad", opt.quad, "nodes=N,panels=P,xmax=X");
  app.add_option("--a", opt.a, "left endpoint for slicing");
  app.add_option("--b", opt.b, "right endpoint for slicing");
  app.add_option("--branch", opt.branch, "reflection branch, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  app.add_option("--exact", opt.exact, "kernel: closed form, free|oscillator");
  app.add_option("--out", opt.out, "CSV output path (default stdout)");
  app.add_option("--format", opt.format, "csv or csv+plot")
      ->check(CLI::IsMember({"csv", "csv+plot"}));
  app.add_option("--only", opt.only, "verify: name-prefix filter");
  app.add_option("--tolerance-scale", opt.tolerance_scale,
                 "verify: multiply every tolerance");

  auto* kernel = app.add_subcommand("kernel", "kernel values on a grid");
  auto* slice = app.add_subcommand("slice", "time-sliced convergence study");
  auto* compose = app.add_subcommand("compose", "K(eps) composed with itself");
  auto* decompose =
      app.add_subcommand("decompose", "direct/reflected split with phase");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  auto* specfun =
      app.add_subcommand("specfun-table", "special function table at mu=nu-1/2");
  app.require_subcommand(1);
  // shared flags live on the parent; let them appear after the subcommand
  for (auto* sub : {kernel, slice, compose, decompose, verify, specfun})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(opt);
    if (slice->parsed()) return cmd_slice(opt);
    if (compose->parsed()) return cmd_compose(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (specfun->parsed()) return cmd_specfun_table(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::overflow_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
