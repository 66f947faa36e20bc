#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "osc/algebra.hpp"
#include "osc/cli.hpp"
#include "osc/degeneracy.hpp"
#include "osc/error.hpp"

namespace osc::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxGridPoints = 20'000'000;

std::string num(double x) { return fmt::format("{:.17g}", x); }

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

json params_json(const AlgebraParams& p) {
  return {{"dim", p.dim()}, {"ell", p.ell()}, {"omega", p.omega()}, {"alpha", p.alpha()}, {"casimir", p.casimir()}};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Counts as JSON integers when they fit, decimal strings otherwise.
json count_json(const Count& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

bool positive_real(Complex k) { return k.imag() == 0.0 && k.real() > 0.0; }

int n_max_of(const RunConfig& config) { return config.n_max.value_or(default_n_max()); }

Format format_of(const RunConfig& config) {
  return config.format.value_or(config.command == Command::Verify ? Format::Json : Format::Csv);
}

RadialGrid grid_of(const RunConfig& config, double default_rmax) {
  const double r_min = config.grid.r_min.value_or(0.0);
  const double r_max = config.grid.r_max.value_or(std::max(default_rmax, r_min));
  if ((r_max - r_min) / config.grid.step > static_cast<double>(kMaxGridPoints)) {
    throw ValidationError(fmt::format("grid has more than {} points", kMaxGridPoints));
  }
  return RadialGrid::uniform(r_min, r_max, config.grid.step);
}

CoherentState converged_state(const AlgebraParams& params, Complex k, int n_max) {
  CoherentState state = coherent_coeffs(params, k, n_max);
  if (!state.converged()) {
    throw ConvergenceError(fmt::format("coherent expansion for |k| = {} has not converged at n_max = {} (tail {:.3g})",
                                       std::abs(k), n_max, state.tail_ratio()));
  }
  return state;
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int run_spectrum(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const BranchReport report = spectrum(params, config.n_count);
  if (format_of(config) == Format::Csv) {
    out << "n,energy\n";
    for (int n = 0; n < config.n_count; ++n) out << n << ',' << num(report.branch_a_energies[n]) << '\n';
    return kExitOk;
  }
  write_json(out, {{"command", "spectrum"},
                   {"params", params_json(params)},
                   {"branch_a", report.branch_a_energies},
                   {"branch_b", report.branch_b_energies},
                   {"branch_b_status", std::string(branch_status_name(report.branch_b_status))},
                   {"reason", report.reason}});
  return kExitOk;
}

int run_rep(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const int n_max = n_max_of(config);
  const TruncatedRep rep = build_rep(params, n_max);
  if (format_of(config) == Format::Csv) {
    out << "n,j3,sigma_plus,sigma_minus\n";
    for (int n = 0; n <= n_max; ++n) {
      out << n << ',' << num(rep.j3(n, n)) << ',' << num(sigma_plus(params.alpha(), n)) << ','
          << num(sigma_minus(params.alpha(), n)) << '\n';
    }
    return kExitOk;
  }
  json j3 = json::array();
  json sp = json::array();
  json sm = json::array();
  for (int n = 0; n <= n_max; ++n) {
    j3.push_back(rep.j3(n, n));
    sp.push_back(sigma_plus(params.alpha(), n));
    sm.push_back(sigma_minus(params.alpha(), n));
  }
  const CommutatorResiduals comm = commutator_residuals(rep);
  write_json(out, {{"command", "rep"},
                   {"params", params_json(params)},
                   {"n_max", n_max},
                   {"j3", j3},
                   {"sigma_plus", sp},
                   {"sigma_minus", sm},
                   {"residuals",
                    {{"commutator_j3_kplus", comm.j3_kplus},
                     {"commutator_j3_kminus", comm.j3_kminus},
                     {"commutator_kplus_kminus", comm.kplus_kminus},
                     {"casimir", casimir_residual(rep)}}}});
  return kExitOk;
}

int run_verify(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const VerifyReport report = verify(params, n_max_of(config), config.k);
  if (format_of(config) == Format::Csv) {
    out << "name,value,tolerance,pass\n";
    for (const Check& c : report.checks) {
      out << c.name << ',' << num(c.value) << ',' << num(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
    }
  } else {
    json checks = json::array();
    for (const Check& c : report.checks) {
      checks.push_back({{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    json p = params_json(params);
    p["n_max"] = report.n_max;
    p["k"] = complex_json(report.k);
    write_json(out, {{"command", "verify"}, {"params", p}, {"checks", checks}, {"overall", report.overall()}});
  }
  return report.overall() ? kExitOk : kExitInvariant;
}

int run_coherent(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const CoherentState state = converged_state(params, config.k, n_max_of(config));
  if (format_of(config) == Format::Csv) {
    out << "n,coeff_re,coeff_im,log_abs\n";
    for (int n = 0; n <= state.n_max(); ++n) {
      const Complex c = state.coefficient(n);
      out << n << ',' << num(c.real()) << ',' << num(c.imag()) << ',' << num(state.log_abs(n)) << '\n';
    }
    return kExitOk;
  }
  json re = json::array();
  json im = json::array();
  json log_abs = json::array();
  for (int n = 0; n <= state.n_max(); ++n) {
    re.push_back(state.coefficient(n).real());
    im.push_back(state.coefficient(n).imag());
    log_abs.push_back(state.log_abs(n));  // -inf becomes null
  }
  write_json(out, {{"command", "coherent"},
                   {"params", params_json(params)},
                   {"k", complex_json(config.k)},
                   {"n_max", state.n_max()},
                   {"tail_ratio", state.tail_ratio()},
                   {"norm_squared", norm_squared(state)},
                   {"norm_closed_form", norm_closed_form(params, std::abs(config.k))},
                   {"coeff_re", re},
                   {"coeff_im", im},
                   {"log_abs", log_abs}});
  return kExitOk;
}

int run_wavefunction(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  RadialFunction f = [&] {
    if (config.level) {
      return eigenfunction(params, *config.level, grid_of(config, eigenfunction_rmax(params, *config.level)));
    }
    const RadialGrid grid = grid_of(config, coherent_rmax(std::abs(config.k)));
    if (positive_real(config.k)) return coherent_wavefunction(params, config.k.real(), grid);
    return coherent_wavefunction_series(converged_state(params, config.k, n_max_of(config)), grid);
  }();
  std::vector<double> density(f.grid.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    density[i] = std::pow(f.grid[i], params.dim() - 1) * std::norm(f.values[i]);
  }
  if (format_of(config) == Format::Csv) {
    out << "r,re,im,density\n";
    for (std::size_t i = 0; i < density.size(); ++i) {
      out << num(f.grid[i]) << ',' << num(f.values[i].real()) << ',' << num(f.values[i].imag()) << ','
          << num(density[i]) << '\n';
    }
    return kExitOk;
  }
  json r = json::array();
  json re = json::array();
  json im = json::array();
  for (std::size_t i = 0; i < density.size(); ++i) {
    r.push_back(f.grid[i]);
    re.push_back(f.values[i].real());
    im.push_back(f.values[i].imag());
  }
  json doc{{"command", "wavefunction"}, {"params", params_json(params)}};
  if (config.level) {
    doc["level"] = *config.level;
  } else {
    doc["k"] = complex_json(config.k);
  }
  doc["r"] = r;
  doc["re"] = re;
  doc["im"] = im;
  doc["density"] = density;
  write_json(out, doc);
  return kExitOk;
}

int run_evolve(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const int n_max = n_max_of(config);
  converged_state(params, config.k, n_max);
  const RadialGrid grid = grid_of(config, coherent_rmax(std::abs(config.k)));
  const double t0 = config.times.t_start;
  const double t1 = config.times.t_end.value_or(t0 + std::numbers::pi / params.omega());
  const int frames = config.times.frames;
  const bool csv = format_of(config) == Format::Csv;
  json frame_docs = json::array();
  if (csv) out << "t,r,density\n";
  for (int f = 0; f < frames; ++f) {
    const double t = frames == 1 ? t0 : t0 + (t1 - t0) * f / (frames - 1);
    const RadialDensity d = density_evolution(params, config.k, t, grid, n_max);
    if (csv) {
      const std::string ts = num(t);
      for (std::size_t i = 0; i < grid.size(); ++i) out << ts << ',' << num(grid[i]) << ',' << num(d.values[i]) << '\n';
    } else {
      frame_docs.push_back({{"t", t}, {"density", d.values}});
    }
  }
  if (!csv) {
    json r = json::array();
    for (double x : grid.points()) r.push_back(x);
    write_json(out, {{"command", "evolve"},
                     {"params", params_json(params)},
                     {"k", complex_json(config.k)},
                     {"n_max", n_max},
                     {"r", r},
                     {"frames", frame_docs}});
  }
  return kExitOk;
}

int run_degeneracy(const RunConfig& config, const AlgebraParams& params, std::ostream& out) {
  const DegeneracyTable table = identity_check(params.dim(), config.n_max.value_or(kDefaultDegeneracyMax));
  if (format_of(config) == Format::Csv) {
    out << "n_tilde,cartesian,spherical,ok\n";
    for (const DegeneracyRow& row : table.rows) {
      out << row.n_tilde << ',' << row.cartesian.str() << ',' << row.spherical_total.str() << ','
          << (row.ok() ? "true" : "false") << '\n';
    }
  } else {
    json rows = json::array();
    for (const DegeneracyRow& row : table.rows) {
      json breakdown = json::array();
      for (const auto& [ell, d] : row.spherical_breakdown) breakdown.push_back({{"ell", ell}, {"d", count_json(d)}});
      rows.push_back({{"n_tilde", row.n_tilde},
                      {"cartesian", count_json(row.cartesian)},
                      {"spherical", count_json(row.spherical_total)},
                      {"breakdown", breakdown},
                      {"ok", row.ok()}});
    }
    write_json(out, {{"command", "degeneracy"}, {"dim", params.dim()}, {"rows", rows}, {"ok", table.ok()}});
  }
  return table.ok() ? kExitOk : kExitInvariant;
}

void write_error(std::ostream& err, std::string_view kind, std::string_view message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
}

}  // namespace

std::string_view command_name(Command command) {
  switch (command) {
    case Command::Spectrum:
      return "spectrum";
    case Command::Rep:
      return "rep";
    case Command::Verify:
      return "verify";
    case Command::Coherent:
      return "coherent";
    case Command::Wavefunction:
      return "wavefunction";
    case Command::Evolve:
      return "evolve";
    case Command::Degeneracy:
      return "degeneracy";
  }
  return "unknown";
}

Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  const Complex z = comma == std::string_view::npos
                        ? Complex(parse_double(text), 0.0)
                        : Complex(parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1)));
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw ValidationError("k must be finite");
  return z;
}

int default_n_max() {
  const char* env = std::getenv("OSC_NMAX_DEFAULT");
  if (env == nullptr || *env == '\0') return kDefaultNMax;
  const std::string_view text(env);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw ValidationError("OSC_NMAX_DEFAULT must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

void validate(const RunConfig& config) {
  const AlgebraParams params = make_params(config.dim, config.ell, config.omega);
  if (config.n_max && *config.n_max < (config.command == Command::Degeneracy ? 0 : 1)) {
    throw ValidationError("--nmax is out of range");
  }
  n_max_of(config);  // validates the environment override
  if (config.n_count < 1) throw ValidationError("--count must be at least 1");
  if (!std::isfinite(config.k.real()) || !std::isfinite(config.k.imag())) throw ValidationError("k must be finite");
  if (config.level && *config.level < 0) throw ValidationError("--n must be nonnegative");
  if (!(config.grid.step > 0.0) || !std::isfinite(config.grid.step)) throw ValidationError("--step must be positive");
  if (config.grid.r_min && !(*config.grid.r_min >= 0.0)) throw ValidationError("--rmin must be nonnegative");
  if (config.grid.r_max && !(*config.grid.r_max >= config.grid.r_min.value_or(0.0))) {
    throw ValidationError("--rmax must not be below --rmin");
  }
  if (config.grid.r_max && !std::isfinite(*config.grid.r_max)) throw ValidationError("--rmax must be finite");
  if (config.times.frames < 1) throw ValidationError("--frames must be at least 1");
  if (!std::isfinite(config.times.t_start)) throw ValidationError("--tstart must be finite");
  if (config.times.t_end && !std::isfinite(*config.times.t_end)) throw ValidationError("--tend must be finite");

  if (config.command == Command::Degeneracy && params.dim() < 2) throw ValidationError("degeneracy needs N >= 2");
}

int run(const RunConfig& config, std::ostream& out) {
  validate(config);
  const AlgebraParams params = make_params(config.dim, config.ell, config.omega);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError("cannot open output file '" + config.output + "'");
    sink = &file;
  }
  // Buffer the whole document so a failing command leaves no partial output.
  std::ostringstream buffer;
  int code = kExitOk;
  switch (config.command) {
    case Command::Spectrum:
      code = run_spectrum(config, params, buffer);
      break;
    case Command::Rep:
      code = run_rep(config, params, buffer);
      break;
    case Command::Verify:
      code = run_verify(config, params, buffer);
      break;
    case Command::Coherent:
      code = run_coherent(config, params, buffer);
      break;
    case Command::Wavefunction:
      code = run_wavefunction(config, params, buffer);
      break;
    case Command::Evolve:
      code = run_evolve(config, params, buffer);
      break;
    case Command::Degeneracy:
      code = run_degeneracy(config, params, buffer);
      break;
  }
  *sink << buffer.str();
  sink->flush();
  return code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isotropic oscillator ladder algebra, coherent states and wave functions"};
  app.require_subcommand(1);

  RunConfig config;
  std::string k_text;
  std::string format_text;
  double r_min = 0.0;
  double r_max = 0.0;
  double t_end = 0.0;
  int n_max = 0;
  int level = 0;

  struct Entry {
    Command command;
    const char* help;
  };
  const Entry entries[] = {
      {Command::Spectrum, "energy levels of both branches"},
      {Command::Rep, "truncated J3, K+ and K- matrix elements"},
      {Command::Verify, "check every invariant for (N, l)"},
      {Command::Coherent, "coherent-state coefficients"},
      {Command::Wavefunction, "radial eigenfunction (--n) or coherent wave function (--k)"},
      {Command::Evolve, "radial density of an evolving coherent state"},
      {Command::Degeneracy, "Cartesian vs spherical level counts"},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(e.command)), e.help);
    sub->add_option("--dim", config.dim, "dimension N");
    sub->add_option("--ell", config.ell, "angular label l (parity tag 0/1 when N = 1)");
    sub->add_option("--omega", config.omega, "oscillator frequency");
    sub->add_option("--k", k_text, "coherent label as re,im or a real number");
    sub->add_option("--nmax", n_max, "truncation n_max (n_tilde max for degeneracy)");
    sub->add_option("--count", config.n_count, "number of levels");
    sub->add_option("--n", level, "energy level n");
    sub->add_option("--rmin", r_min, "grid start");
    sub->add_option("--rmax", r_max, "grid end");
    sub->add_option("--step", config.grid.step, "grid spacing");
    sub->add_option("--tstart", config.times.t_start, "first time");
    sub->add_option("--tend", t_end, "last time");
    sub->add_option("--frames", config.times.frames, "number of time frames");
    sub->add_option("--out", config.output, "output file (default stdout)");
    sub->add_option("--format", format_text, "csv or json");
    subs.emplace_back(sub, e.command);
  }

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::Success&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      throw ValidationError(e.what());
    }

    CLI::App* chosen = nullptr;
    for (const auto& [sub, command] : subs) {
      if (sub->parsed()) {
        chosen = sub;
        config.command = command;
      }
    }
    if (chosen == nullptr) throw ValidationError("no command given");
    if (chosen->count("--k") > 0) config.k = parse_complex(k_text);
    if (chosen->count("--nmax") > 0) config.n_max = n_max;
    if (chosen->count("--n") > 0) config.level = level;
    if (chosen->count("--rmin") > 0) config.grid.r_min = r_min;
    if (chosen->count("--rmax") > 0) config.grid.r_max = r_max;
    if (chosen->count("--tend") > 0) config.times.t_end = t_end;
    if (chosen->count("--format") > 0) {
      if (format_text == "csv") {
        config.format = Format::Csv;
      } else if (format_text == "json") {
        config.format = Format::Json;
      } else {
        throw ValidationError("--format must be csv or json");
      }
    }
    return run(config, out);
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what(), kExitValidation);
    return kExitValidation;
  } catch (const TooLargeError& e) {
    write_error(err, "validation", e.what(), kExitValidation);
    return kExitValidation;
  } catch (const ConvergenceError& e) {
    write_error(err, "convergence", e.what(), kExitConvergence);
    return kExitConvergence;
  }
}

}  // namespace osc::cli
