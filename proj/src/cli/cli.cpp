#include "diskslep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>
#include <thread>
#include <variant>

#include "diskslep/linalg.hpp"
#include "diskslep/slepian.hpp"
#include "diskslep/transforms.hpp"
#include "suites.hpp"

namespace diskslep::cli {
namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, int, std::string, bool, std::monostate>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::eigs: return "eigs";
    case Command::eval: return "eval";
    case Command::tabulate: return "tabulate";
    case Command::verify: return "verify";
    case Command::transform: return "transform";
  }
  return "";
}

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(int v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
  } visit;
  return std::visit(visit, c);
}

json json_cell(const Cell& c) {
  struct {
    json operator()(double v) const { return std::isfinite(v) ? json(v) : json(format_number(v)); }
    json operator()(int v) const { return v; }
    json operator()(bool v) const { return v; }
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const std::string& s) const { return s; }
  } visit;
  return std::visit(visit, c);
}

std::string render_csv(const Table& t) {
  std::string s;
  for (std::size_t j = 0; j < t.columns.size(); ++j) s += (j ? "," : "") + t.columns[j];
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? "," : "") + csv_cell(row[j]);
    s += '\n';
  }
  return s;
}

json config_json(const RunConfig& cfg, std::optional<int> truncation) {
  json j;
  j["command"] = command_name(cfg.command);
  j["nu"] = cfg.nu;
  j["c"] = cfg.c;
  j["N"] = cfg.N;
  j["modes"] = cfg.modes;
  j["mode"] = cfg.mode;
  j["grid_r"] = cfg.grid_r;
  j["grid_theta"] = cfg.grid_theta;
  j["target"] = cfg.target;
  j["r"] = cfg.r;
  j["theta"] = cfg.theta;
  j["suite"] = cfg.suite;
  j["quick"] = cfg.quick;
  j["tol"] = cfg.tol ? json(*cfg.tol) : json(nullptr);
  j["truncation"] = truncation ? json(*truncation) : json(nullptr);
  j["family"] = cfg.family;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["k"] = cfg.k;
  j["rho"] = cfg.rho;
  j["angle"] = cfg.angle;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["x"] = cfg.x;
  j["constant"] = cfg.constant;
  j["shape"] = cfg.shape;
  j["out"] = cfg.out;
  j["format"] = cfg.format == OutputFormat::csv ? "csv" : "json";
  return j;
}

std::string render_json(const RunConfig& cfg, std::optional<int> truncation, const Table& t) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = config_json(cfg, truncation);
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    for (std::size_t j = 0; j < row.size(); ++j) r[t.columns[j]] = json_cell(row[j]);
    rows.push_back(std::move(r));
  }
  doc["results"] = std::move(rows);
  return doc.dump(2) + "\n";
}

// Fills out[i] = f(i) on a few threads; each slot is written by one thread,
// so the result does not depend on scheduling.
template <class T, class F>
void parallel_fill(std::vector<T>& out, F&& f) {
  const std::size_t n = out.size();
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (workers == 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SlepianParams slepian_params(const RunConfig& cfg, int truncation) {
  SlepianParams p{cfg.nu, cfg.c, cfg.N, truncation};
  if (cfg.tol) p.tolerance = *cfg.tol;
  p.validate();
  return p;
}

struct Output {
  Table table;
  std::optional<int> truncation;
  bool failed = false;
};

Output cmd_eigs(const RunConfig& cfg, int truncation) {
  const SlepianParams p = slepian_params(cfg, truncation);
  const auto modes = solve_modes(p, cfg.modes);
  Output o;
  o.table.columns = {"N", "n", "chi", "mu", "lambda_re", "lambda_im", "truncation"};
  for (const auto& m : modes) {
    o.table.rows.push_back({cfg.N, m.n, m.chi, m.mu, m.lambda.real(), m.lambda.imag(), m.truncation});
  }
  o.truncation = modes.front().truncation;
  return o;
}

Output cmd_eval(const RunConfig& cfg, int truncation) {
  const SlepianParams p = slepian_params(cfg, truncation);
  const auto modes = solve_modes(p, cfg.mode + 1);
  const auto& m = modes.back();
  const std::complex<double> psi = eval_psi(m, p, cfg.r, cfg.theta);
  Output o;
  o.table.columns = {"N", "n", "r", "theta", "R", "re", "im"};
  o.table.rows.push_back({cfg.N, m.n, cfg.r, cfg.theta, eval_R(m, p, cfg.r), psi.real(), psi.imag()});
  o.truncation = m.truncation;
  return o;
}

Output cmd_tabulate(const RunConfig& cfg, int truncation) {
  const SlepianParams p = slepian_params(cfg, truncation);
  const auto modes = solve_modes(p, cfg.mode + 1);
  const auto& m = modes.back();
  Output o;
  o.truncation = m.truncation;
  if (cfg.target == "phi") {
    o.table.columns = {"x", "value"};
    std::vector<double> v(cfg.grid_r);
    parallel_fill(v, [&](std::size_t i) { return eval_phi(m, p, (i + 0.5) / cfg.grid_r); });
    for (int i = 0; i < cfg.grid_r; ++i) o.table.rows.push_back({(i + 0.5) / cfg.grid_r, v[i]});
    return o;
  }
  o.table.columns = {"r", "theta", "re", "im"};
  const std::size_t nt = cfg.grid_theta;
  std::vector<std::complex<double>> v(static_cast<std::size_t>(cfg.grid_r) * nt);
  auto r_at = [&](std::size_t idx) { return (idx / nt + 0.5) / cfg.grid_r; };
  auto t_at = [&](std::size_t idx) { return 2 * std::numbers::pi * static_cast<double>(idx % nt) / cfg.grid_theta; };
  parallel_fill(v, [&](std::size_t idx) { return eval_psi(m, p, r_at(idx), t_at(idx)); });
  for (std::size_t idx = 0; idx < v.size(); ++idx) o.table.rows.push_back({r_at(idx), t_at(idx), v[idx].real(), v[idx].imag()});
  return o;
}

GegenbauerShape shape_of(const RunConfig& cfg) {
  return cfg.shape == "printed" ? GegenbauerShape::printed : GegenbauerShape::corrected;
}

Output cmd_verify(const RunConfig& cfg) {
  const auto checks = run_suite(cfg.suite, {cfg.quick, cfg.tol, shape_of(cfg)});
  Output o;
  o.table.columns = {"suite", "check", "error", "tolerance", "pass", "value"};
  for (const auto& c : checks) {
    o.table.rows.push_back({c.suite, c.name, c.error, c.tolerance, c.pass, c.value ? Cell(*c.value) : Cell(std::monostate{})});
    o.failed = o.failed || !c.pass;
  }
  return o;
}

Output cmd_transform(const RunConfig& cfg) {
  Output o;
  if (cfg.family == "jacobi") {
    const double closed = lemma1_rhs(cfg.alpha, cfg.beta, cfg.n, cfg.x);
    const double quad = lemma1_lhs(cfg.alpha, cfg.beta, cfg.n, cfg.x);
    o.table.columns = {"family", "alpha", "beta", "n", "x", "closed", "quadrature", "abs_error"};
    o.table.rows.push_back({cfg.family, cfg.alpha, cfg.beta, cfg.n, cfg.x, closed, quad, std::abs(closed - quad)});
    return o;
  }
  const ConstantSource src = cfg.constant == "paper" ? ConstantSource::paper : ConstantSource::derived;
  ClosedFormResult closed;
  std::complex<double> quad;
  std::string index2;
  int second = 0;
  if (cfg.family == "disk") {
    closed = disk_transform_closed(cfg.nu, cfg.n, cfg.m, cfg.rho, cfg.angle, src);
    quad = disk_transform_quadrature(cfg.nu, cfg.n, cfg.m, cfg.rho, cfg.angle);
    index2 = "m";
    second = cfg.m;
  } else {
    closed = gegenbauer2d_transform_closed(cfg.nu, cfg.n, cfg.k, cfg.rho, cfg.angle, src, shape_of(cfg));
    quad = gegenbauer2d_transform_quadrature(cfg.nu, cfg.n, cfg.k, cfg.rho, cfg.angle);
    index2 = "k";
    second = cfg.k;
  }
  o.table.columns = {"family", "nu", "n", index2, "rho", "angle", "closed_re", "closed_im", "quadrature_re", "quadrature_im",
                     "abs_error", "constant_re", "constant_im", "constant_source", "paper_over_derived_re",
                     "paper_over_derived_im"};
  const auto log = closed.discrepancy_log;
  o.table.rows.push_back({cfg.family, cfg.nu, cfg.n, second, cfg.rho, cfg.angle, closed.value.real(), closed.value.imag(),
                          quad.real(), quad.imag(), std::abs(closed.value - quad), closed.constant.real(),
                          closed.constant.imag(), std::string(src == ConstantSource::paper ? "paper" : "derived"),
                          log ? Cell(log->real()) : Cell(std::monostate{}), log ? Cell(log->imag()) : Cell(std::monostate{})});
  return o;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (f) f << text;
  if (!f) {
    const int e = errno;
    throw UsageError("cannot write output file '" + cfg.out + "': " + (e ? std::strerror(e) : "write failed"));
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (!std::isfinite(nu) || !(nu > -1.0)) fail("--nu must be finite and exceed -1");
  if (!std::isfinite(c) || c < 0.0) fail("--c must be finite and non-negative");
  if (N < 0) fail("--N must be non-negative");
  if (modes < 1) fail("--modes must be at least 1");
  if (mode < 0) fail("--mode must be non-negative");
  if (grid_r < 1 || grid_theta < 1) fail("grid sizes must be at least 1");
  if (target != "psi" && target != "phi") fail("--target must be psi or phi");
  if (!(r >= 0.0 && r <= 1.0)) fail("--r must lie in [0,1]");
  if (!std::isfinite(theta)) fail("--theta must be finite");
  if (!is_suite(suite)) fail("unknown suite '" + suite + "'");
  if (tol && !(*tol > 0.0 && *tol < 1.0)) fail("--tol must lie in (0,1)");
  if (family != "disk" && family != "gegenbauer" && family != "jacobi") fail("--family must be disk, gegenbauer or jacobi");
  if (constant != "paper" && constant != "derived") fail("--constant must be paper or derived");
  if (shape != "corrected" && shape != "printed") fail("--shape must be corrected or printed");
  if (command == Command::transform) {
    if (n < 0 || m < 0) fail("--n and --m must be non-negative");
    if (family == "gegenbauer" && (k < 0 || k > n)) fail("--k must satisfy 0 <= k <= n");
    if (family == "gegenbauer" && !(nu > -0.5)) fail("the gegenbauer family needs --nu > -1/2");
    if (family == "jacobi" && (!(alpha > -1.0) || !(beta > -1.0))) fail("--alpha and --beta must exceed -1");
    if (family == "jacobi" && !(x > 0.0)) fail("--x must be positive");
    if (family != "jacobi" && !(rho > 0.0)) fail("--rho must be positive");
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  int truncation = 0;
  std::string format = "csv";
  double tol = 0.0;

  CLI::App app{"Generalized Slepian functions on the unit disk"};
  app.require_subcommand(1);
  auto* opt_tol = app.add_option("--tol", tol, "solver tolerance (eigs/eval/tabulate) or check tolerance (verify)");
  app.add_option("--out", cfg.out, "output path; stdout when omitted");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--nu", cfg.nu, "weight exponent, > -1");
  app.add_option("--c", cfg.c, "bandwidth, >= 0");
  app.add_option("--N", cfg.N, "angular order");
  app.add_option("--truncation", truncation, "spectral matrix size; 0 chooses it")->check(CLI::NonNegativeNumber);

  auto* eigs = app.add_subcommand("eigs", "first modes of one angular order");
  eigs->add_option("--modes", cfg.modes, "number of modes");

  auto* eval = app.add_subcommand("eval", "psi at one point");
  eval->add_option("--mode", cfg.mode, "radial index n");
  eval->add_option("--r", cfg.r, "radius in [0,1]");
  eval->add_option("--theta", cfg.theta, "angle");

  auto* tab = app.add_subcommand("tabulate", "psi on a polar grid or phi on a radial grid");
  tab->add_option("--mode", cfg.mode, "radial index n");
  tab->add_option("--target", cfg.target, "psi or phi");
  tab->add_option("--grid-r", cfg.grid_r, "radial points (midpoints of [0,1])");
  tab->add_option("--grid-theta", cfg.grid_theta, "angular points 2 pi j / n");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "lemma1, theorem41, theorem42, kernel, commute, nystrom, orthogonality or all");
  verify->add_flag("--quick", cfg.quick, "reduced grids");
  verify->add_option("--shape", cfg.shape, "gegenbauer shape for theorem42: corrected or printed");

  auto* transform = app.add_subcommand("transform", "closed form against quadrature for one polynomial");
  transform->add_option("--family", cfg.family, "disk, gegenbauer or jacobi");
  transform->add_option("--n", cfg.n);
  transform->add_option("--m", cfg.m, "disk: second index");
  transform->add_option("--k", cfg.k, "gegenbauer: second index");
  transform->add_option("--rho", cfg.rho);
  transform->add_option("--phi", cfg.angle, "angle of the evaluation point");
  transform->add_option("--alpha", cfg.alpha);
  transform->add_option("--beta", cfg.beta);
  transform->add_option("--x", cfg.x);
  transform->add_option("--constant", cfg.constant, "paper or derived");
  transform->add_option("--shape", cfg.shape, "gegenbauer: corrected or printed");

  for (auto* sub : {eigs, eval, tab, verify, transform}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (eigs->parsed()) cfg.command = Command::eigs;
  if (eval->parsed()) cfg.command = Command::eval;
  if (tab->parsed()) cfg.command = Command::tabulate;
  if (verify->parsed()) cfg.command = Command::verify;
  if (transform->parsed()) cfg.command = Command::transform;
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  if (opt_tol->count() > 0) cfg.tol = tol;

  try {
    cfg.validate();
    Output o;
    switch (cfg.command) {
      case Command::eigs: o = cmd_eigs(cfg, truncation); break;
      case Command::eval: o = cmd_eval(cfg, truncation); break;
      case Command::tabulate: o = cmd_tabulate(cfg, truncation); break;
      case Command::verify: o = cmd_verify(cfg); break;
      case Command::transform: o = cmd_transform(cfg); break;
    }
    emit(cfg, cfg.format == OutputFormat::json ? render_json(cfg, o.truncation, o.table) : render_csv(o.table), out);
    return o.failed ? kExitVerifyFailed : kExitOk;
  } catch (const TruncationError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const ConvergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace diskslep::cli
