// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "movwall/adiabatic.hpp"
#include "movwall/berry.hpp"
#include "movwall/cli/format.hpp"
#include "movwall/cli/parallel.hpp"
#include "movwall/cli/svg.hpp"
#include "movwall/wilczek_zee.hpp"

namespace movwall::cli {

using nlohmann::json;

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string format_int(long long v) { return std::to_string(v); }

Complex parse_complex_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_string()) {
    const EtaParameter p = EtaParameter::parse(e.get<std::string>());
    if (p.is_infinite()) throw InvalidArgument("unitary entries must be finite");
    return p.value();
  }
  throw InvalidArgument("unitary entries must be numbers or strings like \"0.6+0.8i\"");
}

BoundaryUnitary parse_unitary(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw InvalidArgument("unitary must be a JSON 2x2 array such as [[0,1],[1,0]]");
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw InvalidArgument("unitary must be a JSON 2x2 array such as [[0,1],[1,0]]");
  Mat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = parse_complex_entry(j[r][c]);
  return BoundaryUnitary(m);
}

// Uniform double in [0, 1) from the top 53 bits, stable across standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex random_complex(std::mt19937_64& rng) {
  const double re = 2.0 * unit_uniform(rng) - 1.0;
  const double im = 2.0 * unit_uniform(rng) - 1.0;
  return {re, im};
}

BoundaryData random_data(std::mt19937_64& rng) {
  BoundaryData d;
  d.va = random_complex(rng);
  d.vb = random_complex(rng);
  d.da = random_complex(rng);
  d.db = random_complex(rng);
  return d;
}

EtaParameter eta_of(const RunConfig& cfg) { return EtaParameter::parse(cfg.eta); }

double wrapped_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

struct Bounds {
  double l_lo, l_hi, c_lo, c_hi;
};

Bounds loop_bounds(const LoopSpec& loop) {
  if (loop.type == "rectangle")
    return {std::min(loop.l1, loop.l2), std::max(loop.l1, loop.l2), std::min(loop.c1, loop.c2),
            std::max(loop.c1, loop.c2)};
  Bounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
           std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : loop.points) {
    b.l_lo = std::min(b.l_lo, p.l);
    b.l_hi = std::max(b.l_hi, p.l);
    b.c_lo = std::min(b.c_lo, p.c);
    b.c_hi = std::max(b.c_hi, p.c);
  }
  return b;
}

std::vector<double> linspace(double a, double b, int count) {
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(a + (b - a) * i / (count - 1));
  return v;
}

}  // namespace

CommandResult cmd_bc(const RunConfig& cfg) {
  validate(cfg);
  const bool from_unitary = !cfg.unitary.empty();
  const BoundaryUnitary u = from_unitary ? parse_unitary(cfg.unitary) : eta_to_unitary(eta_of(cfg));
  const Classification cls = classify_unitary(u);

  std::mt19937_64 rng(cfg.seed);
  double worst = 0.0;
  for (int i = 0; i < cfg.samples; ++i) {
    const BoundaryData psi = random_data(rng);
    const BoundaryData phi = random_data(rng);
    worst = std::max(worst, triple_identity_defect(psi, phi));
  }

  json doc;
  doc["input"] = from_unitary ? "unitary" : "eta";
  doc["eta"] = cls.eta ? json(cls.eta->to_string(kSignificantDigits)) : json(nullptr);
  doc["unitary"] = json_matrix(u.matrix());
  doc["classification"] = std::string(to_string(cls.kind));
  doc["dilation_invariant"] = cls.dilation_invariant();
  doc["triple_identity"] = {{"samples", cfg.samples}, {"seed", cfg.seed}, {"max_defect", json_number(worst)}};

  CommandResult r;
  r.output = doc.dump(2) + "\n";
  if (worst > cfg.tol) {
    r.exit_code = kExitOracleDisagreement;
    r.diagnostic = "boundary-triple identity defect " + format_double(worst) + " exceeds tol";
  }
  return r;
}

namespace {

struct SpectrumRow {
  int n;
  double k;
  double alpha;
  double lambda;
  int multiplicity;
};

std::vector<double> generic_lambdas(const BoundaryUnitary& u, int count, const RunConfig& cfg) {
  const auto levels = generic_spectrum(u, count, MassConvention(cfg.mass), Geometry(cfg.l, cfg.c));
  std::vector<double> out;
  for (const auto& lv : levels) out.push_back(lv.lambda);
  return out;
}

double nearest(const std::vector<double>& values, double target) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (double v : values)
    if (std::isnan(best) || std::abs(v - target) < std::abs(best - target)) best = v;
  return best;
}

}  // namespace

CommandResult cmd_spectrum(const RunConfig& cfg) {
  validate(cfg);
  const EtaParameter eta = eta_of(cfg);
  const Geometry g(cfg.l, cfg.c);
  const MassConvention mc(cfg.mass);
  if (eta.is_degenerate() && !cfg.degenerate)
    throw InvalidArgument("eta = " + cfg.eta + " has a doubly degenerate spectrum; pass --degenerate");
  if (!eta.is_degenerate() && cfg.degenerate)
    throw InvalidArgument("--degenerate applies only to eta = 1 or eta = -1");

  std::vector<SpectrumRow> rows;
  int generic_count = 0;
  if (eta.is_degenerate()) {
    const int sign = eta.degenerate_sign();
    if (cfg.n_min < 0) throw InvalidArgument("degenerate levels are labelled by n >= 0");
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const bool ground = sign == 1 && n == 0;
      const double k = ground ? 0.0 : make_degenerate_basis(sign, n).k;
      rows.push_back({n, k, 0.0, k * k / (2.0 * mc.mass() * g.l() * g.l()), ground ? 1 : 2});
    }
    generic_count = sign == 1 ? 1 + 2 * cfg.n_max : 2 * (cfg.n_max + 1);
  } else {
    double kmax = 0.0;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      const Mode m = make_mode(n, eta);
      rows.push_back({n, m.k, m.alpha, eigenvalue(m, g, mc), 1});
      kmax = std::max(kmax, std::abs(m.k));
    }
    const int reach = std::max(std::abs(cfg.n_min), std::abs(cfg.n_max)) + 2;
    for (int n = -reach; n <= reach; ++n)
      if (std::abs(wavenumber(n, eta)) <= kmax * (1.0 + 1e-9)) ++generic_count;
  }

  const bool check = cfg.check == "generic";
  std::vector<std::string> header =
      eta.is_degenerate() ? std::vector<std::string>{"n", "k", "lambda", "multiplicity"}
                          : std::vector<std::string>{"n", "k", "alpha", "lambda"};
  if (check) header.emplace_back("lambda_numeric");
  CsvTable table(header);

  std::vector<double> numeric;
  if (check) numeric = generic_lambdas(eta_to_unitary(eta), generic_count, cfg);
  double worst = 0.0;
  for (const auto& row : rows) {
    std::vector<std::string> cells{format_int(row.n), format_double(row.k)};
    if (eta.is_degenerate()) {
      cells.push_back(format_double(row.lambda));
      cells.push_back(format_int(row.multiplicity));
    } else {
      cells.push_back(format_double(row.alpha));
      cells.push_back(format_double(row.lambda));
    }
    if (check) {
      const double v = nearest(numeric, row.lambda);
      worst = std::max(worst, std::abs(v - row.lambda) / std::max(1.0, std::abs(row.lambda)));
      cells.push_back(format_double(v));
    }
    table.add_row(std::move(cells));
  }

  CommandResult r;
  r.output = table.str();
  if (check && !(worst <= cfg.tol)) {
    r.exit_code = kExitOracleDisagreement;
    r.diagnostic = "generic solver disagrees with the closed form by " + format_double(worst);
  }
  return r;
}

namespace {

struct BerryRow {
  std::string method;
  std::string resolution;
  double phase = 0.0;
  double error_estimate = 0.0;
};

CommandResult curvature_map(const RunConfig& cfg, const Mode& mode) {
  const Bounds b = loop_bounds(cfg.loop);
  const auto ls = linspace(b.l_lo, b.l_hi, cfg.map_points);
  const auto cs = linspace(b.c_lo, b.c_hi, cfg.map_points);
  CsvTable table({"l", "c", "f_lc"});
  HeatMap map{"Berry curvature f_lc", "l", "c", ls, cs, {}};
  map.values.assign(cs.size(), std::vector<double>(ls.size()));
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const double f = curvature(mode, Geometry(ls[i], cs[j])).f_lc;
      table.add_row({format_double(ls[i]), format_double(cs[j]), format_double(f)});
      map.values[j][i] = f;
    }
  CommandResult r;
  r.output = table.str();
  r.svg = render_heat_map(map);
  return r;
}

}  // namespace

CommandResult cmd_berry(const RunConfig& cfg) {
  validate(cfg);
  const EtaParameter eta = eta_of(cfg);
  const Mode mode = make_mode(cfg.n, eta);
  if (cfg.curvature_map) return curvature_map(cfg, mode);

  const ParameterPath path = cfg.loop.path();
  const double analytic = loop_phase_analytic(mode, path);
  const bool all = cfg.method == "all";
  const std::size_t nodes = 24 * path.segments().size();
  const Mollifier rho = Mollifier::smooth_step();

  std::vector<std::function<BerryRow()>> tasks;
  if (all || cfg.method == "analytic")
    tasks.emplace_back([&] { return BerryRow{"analytic", format_int(static_cast<long long>(nodes)), analytic, 0.0}; });
  if (all || cfg.method == "interior")
    tasks.emplace_back([&] {
      auto phase_at = [&](double h) {
        return loop_phase(path, [&](const Geometry& g) { return connection_interior(mode, g, h * g.l()); });
      };
      const double fine = phase_at(cfg.h);
      const double coarse = phase_at(2.0 * cfg.h);
      return BerryRow{"interior", format_int(static_cast<long long>(nodes)), fine, std::abs(fine - coarse)};
    });
  const std::size_t first_mollified = tasks.size();
  if (all || cfg.method == "mollified")
    for (double eps : cfg.eps_list)
      tasks.emplace_back([&, eps] {
        const double phase = loop_phase(
            path, [&](const Geometry& g) { return connection_mollified(mode, g, rho, eps * g.l()); });
        return BerryRow{"mollified", format_double(eps), phase, 0.0};
      });
  const std::size_t first_overlap = tasks.size();
  if (all || cfg.method == "overlap")
    for (std::size_t mesh : cfg.mesh)
      tasks.emplace_back([&, mesh] {
        const OverlapPhase o = loop_phase_overlap(mode, path, mesh);
        return BerryRow{"overlap", format_int(static_cast<long long>(mesh)), o.phase, o.error_estimate};
      });

  std::vector<BerryRow> rows = parallel_map(tasks.size(), [&](std::size_t i) { return tasks[i](); });

  std::vector<double> finals;
  if (all || cfg.method == "interior") finals.push_back(rows[first_mollified - 1].phase);
  if (all || cfg.method == "mollified") {
    std::vector<double> phases;
    for (std::size_t i = first_mollified; i < first_overlap; ++i) phases.push_back(rows[i].phase);
    const Extrapolation limit = richardson_extrapolate(cfg.eps_list, phases);
    for (std::size_t i = first_mollified; i < first_overlap; ++i)
      rows[i].error_estimate = std::abs(rows[i].phase - limit.value);
    const double spread = std::abs(phases[phases.size() - 1] - phases[phases.size() - 2]);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(first_overlap),
                BerryRow{"mollified_limit", "0", limit.value, spread});
    finals.push_back(limit.value);
  }
  if (all || cfg.method == "overlap") finals.push_back(rows.back().phase);

  CsvTable table({"method", "resolution", "phase", "error_estimate"});
  for (const auto& row : rows)
    table.add_row({row.method, row.resolution, format_double(row.phase), format_double(row.error_estimate)});

  CommandResult r;
  r.output = table.str();

  LinePlot plot{"Loop phase by refinement level", "refinement level", "phase", false, false, {}};
  std::size_t colour = 0;
  for (const std::string method : {"mollified", "overlap"}) {
    Series s{method, {}, kPalette[colour++ % 5]};
    for (const auto& row : rows)
      if (row.method == method) s.points.emplace_back(static_cast<double>(s.points.size()), row.phase);
    if (!s.points.empty()) plot.series.push_back(std::move(s));
  }
  double levels = 1.0;
  for (const auto& s : plot.series) levels = std::max(levels, static_cast<double>(s.points.size() - 1));
  plot.series.push_back(Series{"analytic", {{0.0, analytic}, {levels, analytic}}, "#000000", true, false});
  r.svg = render_line_plot(plot);

  double worst = 0.0;
  for (double f : finals) worst = std::max(worst, wrapped_distance(f, analytic));
  if (worst > cfg.tol) {
    r.exit_code = kExitOracleDisagreement;
    r.diagnostic = "numerical loop phases deviate from the closed form by " + format_double(worst);
  }
  return r;
}

CommandResult cmd_wz(const RunConfig& cfg) {
  validate(cfg);
  const EtaParameter eta = eta_of(cfg);
  if (!eta.is_degenerate()) throw InvalidArgument("wz needs eta = 1 or eta = -1");
  const Geometry g(cfg.l, cfg.c);
  const MatrixConnection conn = wz_connection(eta, cfg.n, g);
  const MatrixConnection numeric = wz_connection_interior(eta, cfg.n, g, cfg.h * g.l());
  const double interior_dev = std::max((numeric.coeff_l - conn.coeff_l).cwiseAbs().maxCoeff(),
                                       (numeric.coeff_c - conn.coeff_c).cwiseAbs().maxCoeff());
  const MatrixCurvature curv = wz_curvature(eta, cfg.n, g);
  const ParameterPath path = cfg.loop.path();
  const Holonomy hol = wz_holonomy(eta, cfg.n, path, cfg.mesh.back());
  const double abelian = loop_phase(path, [&](const Geometry& p) {
    return ConnectionSample{0.0, conn.k / p.l(), p, Mode{}};
  });
  const PlaneWaveFrame frame = diagonalize_in_plane_waves(conn);

  const Bounds b = loop_bounds(cfg.loop);
  double basis_variation = 0.0;
  double worst_off_diagonal = frame.off_diagonal;
  for (double l : linspace(b.l_lo, b.l_hi, 5))
    for (double c : linspace(b.c_lo, b.c_hi, 5)) {
      const PlaneWaveFrame f = diagonalize_in_plane_waves(wz_connection(eta, cfg.n, Geometry(l, c)));
      basis_variation = std::max(basis_variation, (f.basis_change - frame.basis_change).cwiseAbs().maxCoeff());
      worst_off_diagonal = std::max(worst_off_diagonal, f.off_diagonal);
    }

  const double unitarity = (hol.matrix.adjoint() * hol.matrix - Mat2::Identity()).cwiseAbs().maxCoeff();
  const double max_imag = hol.matrix.imag().cwiseAbs().maxCoeff();
  const std::array<double, 2> expected{wrap_angle(abelian), wrap_angle(-abelian)};
  double phase_dev = 0.0;
  for (double e : hol.eigenphases)
    phase_dev = std::max(phase_dev, std::min(wrapped_distance(e, expected[0]), wrapped_distance(e, expected[1])));

  json doc;
  doc["eta"] = eta.to_string(kSignificantDigits);
  doc["n"] = cfg.n;
  doc["k"] = json_number(conn.k);
  doc["geometry"] = {{"l", json_number(g.l())}, {"c", json_number(g.c())}};
  doc["connection"] = {{"coeff_l", json_matrix(conn.coeff_l)}, {"coeff_c", json_matrix(conn.coeff_c)}};
  doc["connection_interior"] = {{"coeff_l", json_matrix(numeric.coeff_l)},
                                {"coeff_c", json_matrix(numeric.coeff_c)},
                                {"max_deviation", json_number(interior_dev)}};
  doc["curvature"] = {{"exterior", json_matrix(curv.exterior)},
                      {"commutator", json_matrix(curv.commutator)},
                      {"total", json_matrix(curv.total)},
                      {"trace", json_number(std::abs(curv.total.trace()))}};
  doc["holonomy"] = {{"matrix", json_matrix(hol.matrix)},
                     {"eigenphases", {json_number(hol.eigenphases[0]), json_number(hol.eigenphases[1])}},
                     {"mesh", hol.mesh},
                     {"err_estimate", json_number(hol.err_estimate)},
                     {"unitarity_defect", json_number(unitarity)},
                     {"max_imag", json_number(max_imag)}};
  doc["abelian_phase"] = json_number(abelian);
  doc["diagonalization"] = {{"basis_change", json_matrix(frame.basis_change)},
                            {"diagonal_c", json_matrix(frame.diagonal_c)},
                            {"diagonal_l", json_matrix(frame.diagonal_l)},
                            {"off_diagonal", json_number(worst_off_diagonal)},
                            {"basis_variation", json_number(basis_variation)}};

  CommandResult r;
  r.output = doc.dump(2) + "\n";
  if (interior_dev > cfg.tol || phase_dev > cfg.tol) {
    r.exit_code = kExitOracleDisagreement;
    r.diagnostic = "holonomy or connection deviates from the closed form by " +
                   format_double(std::max(interior_dev, phase_dev));
  }
  return r;
}

CommandResult cmd_adiabatic(const RunConfig& cfg) {
  validate(cfg);
  const EtaParameter eta = eta_of(cfg);
  const ParameterPath path = cfg.loop.path();
  const double reference = loop_phase_analytic(make_mode(cfg.n, eta), path);
  const MassConvention mc(cfg.mass);
  const auto reports = parallel_map(cfg.T_list.size(), [&](std::size_t i) {
    const double T = cfg.T_list[i];
    const auto steps = static_cast<std::size_t>(std::max(100.0, std::ceil(cfg.resolution * T)));
    return propagate(Schedule(path, T, steps), cfg.n, eta, cfg.window, mc);
  });

  CsvTable table({"T", "total", "dynamical", "geometric", "fidelity", "warn"});
  Series err{"|geometric - analytic|", {}, kPalette[0]};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const PhaseReport& p = reports[i];
    table.add_row({format_double(cfg.T_list[i]), format_double(p.total_phase), format_double(p.dynamical_phase),
                   format_double(p.geometric_phase), format_double(p.fidelity), p.warning ? "1" : "0"});
    err.points.emplace_back(1.0 / cfg.T_list[i], std::max(wrapped_distance(p.geometric_phase, reference), 1e-16));
  }

  CommandResult r;
  r.output = table.str();
  LinePlot plot{"Adiabatic geometric phase error", "1/T", "|geometric - analytic|", true, true, {}};
  const auto anchor = *std::min_element(err.points.begin(), err.points.end());
  Series guide{"C/T", {}, "#000000", true, false};
  for (const auto& [x, y] : err.points) guide.points.emplace_back(x, anchor.second * x / anchor.first);
  std::sort(guide.points.begin(), guide.points.end());
  plot.series.push_back(std::move(err));
  plot.series.push_back(std::move(guide));
  r.svg = render_line_plot(plot);
  return r;
}

CommandResult run_command(const RunConfig& cfg) {
  if (cfg.command == "bc") return cmd_bc(cfg);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg);
  if (cfg.command == "berry") return cmd_berry(cfg);
  if (cfg.command == "wz") return cmd_wz(cfg);
  if (cfg.command == "adiabatic") return cmd_adiabatic(cfg);
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

namespace {

struct CommonFlags {
  std::string eta, unitary, method, check;
  double mass = 1.0, l = 1.0, c = 0.0, l1 = 1.0, l2 = 2.0, c1 = 0.0, c2 = 1.0, resolution = 20.0, h = 1e-4;
  int n = 0, n_min = 0, n_max = 4, orientation = 1, window = 16, map_points = 9, samples = 1000;
  std::vector<std::size_t> mesh;
  std::vector<double> eps, T;
  bool degenerate = false, curvature_map = false;
};

// Copies the flags that were actually given on top of cfg.
void overlay(RunConfig& cfg, const CLI::App& sub, const CommonFlags& f) {
  auto given = [&](const char* name) {
    const CLI::Option* o = sub.get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (given("--eta")) cfg.eta = f.eta;
  if (given("--unitary")) cfg.unitary = f.unitary;
  if (given("--mass")) cfg.mass = f.mass;
  if (given("--n")) cfg.n = f.n;
  if (given("--l")) cfg.l = f.l;
  if (given("--c")) cfg.c = f.c;
  if (given("--n-min")) cfg.n_min = f.n_min;
  if (given("--n-max")) cfg.n_max = f.n_max;
  if (given("--degenerate")) cfg.degenerate = f.degenerate;
  if (given("--check")) cfg.check = f.check;
  if (given("--method")) cfg.method = f.method;
  if (given("--mesh")) cfg.mesh = f.mesh;
  if (given("--eps")) cfg.eps_list = f.eps;
  if (given("--step")) cfg.h = f.h;
  if (given("--curvature-map")) cfg.curvature_map = f.curvature_map;
  if (given("--map-points")) cfg.map_points = f.map_points;
  if (given("--samples")) cfg.samples = f.samples;
  if (given("--T")) cfg.T_list = f.T;
  if (given("--window")) cfg.window = f.window;
  if (given("--resolution")) cfg.resolution = f.resolution;
  const bool loop_given = given("--l1") || given("--l2") || given("--c1") || given("--c2") || given("--orientation");
  if (loop_given) {
    if (cfg.loop.type != "rectangle") cfg.loop = LoopSpec{};
    if (given("--l1")) cfg.loop.l1 = f.l1;
    if (given("--l2")) cfg.loop.l2 = f.l2;
    if (given("--c1")) cfg.loop.c1 = f.c1;
    if (given("--c2")) cfg.loop.c2 = f.c2;
    if (given("--orientation")) cfg.loop.orientation = f.orientation;
  }
}

void add_loop_flags(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--l1", f.l1, "rectangle: first box length");
  sub->add_option("--l2", f.l2, "rectangle: second box length");
  sub->add_option("--c1", f.c1, "rectangle: first box centre");
  sub->add_option("--c2", f.c2, "rectangle: second box centre");
  sub->add_option("--orientation", f.orientation, "rectangle: +1 counterclockwise, -1 clockwise");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary conditions, spectra and geometric phases of a particle in a moving box"};
  app.require_subcommand(1);
  std::string config_path, out_path, plot_path;
  double tol = 1e-3;
  std::uint64_t seed = 0;
  CLI::Option* tol_opt = app.add_option("--tol", tol, "oracle disagreement threshold for exit code 3");
  CLI::Option* seed_opt = app.add_option("--seed", seed, "seed of randomized property sweeps");
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output file (default: standard output)");
  app.add_option("--plot", plot_path, "write an SVG plot");

  CommonFlags f;
  CLI::App* bc = app.add_subcommand("bc", "classify a boundary condition");
  bc->add_option("--eta", f.eta, "eta as a+bi or inf");
  bc->add_option("--unitary", f.unitary, "2x2 unitary as JSON, e.g. [[0,1],[1,0]]");
  bc->add_option("--samples", f.samples, "random pairs for the boundary-triple identity");

  CLI::App* spectrum = app.add_subcommand("spectrum", "tabulate eigenvalues");
  spectrum->add_option("--eta", f.eta, "eta as a+bi or inf");
  spectrum->add_option("--mass", f.mass, "particle mass");
  spectrum->add_option("--l", f.l, "box length");
  spectrum->add_option("--c", f.c, "box centre");
  spectrum->add_option("--n-min", f.n_min, "first level");
  spectrum->add_option("--n-max", f.n_max, "last level");
  spectrum->add_flag("--degenerate", f.degenerate, "tabulate the eta = +-1 degenerate levels");
  spectrum->add_option("--check", f.check, "append an independent solver column ('generic')");

  CLI::App* berry = app.add_subcommand("berry", "loop phase of a level");
  berry->add_option("--eta", f.eta, "eta as a+bi or inf");
  berry->add_option("--n", f.n, "level");
  berry->add_option("--method", f.method, "all, analytic, interior, mollified or overlap");
  berry->add_option("--mesh", f.mesh, "overlap mesh sizes")->delimiter(',');
  berry->add_option("--eps", f.eps, "mollifier collar widths in units of l")->delimiter(',');
  berry->add_option("--step", f.h, "interior difference step in units of l");
  berry->add_flag("--curvature-map", f.curvature_map, "tabulate f_lc over the loop's bounding box");
  berry->add_option("--map-points", f.map_points, "curvature map points per axis");
  add_loop_flags(berry, f);

  CLI::App* wz = app.add_subcommand("wz", "matrix connection and holonomy at eta = +-1");
  wz->add_option("--eta", f.eta, "1 or -1");
  wz->add_option("--n", f.n, "degenerate level");
  wz->add_option("--l", f.l, "box length for the connection");
  wz->add_option("--c", f.c, "box centre for the connection");
  wz->add_option("--mesh", f.mesh, "holonomy mesh (the last value is used)")->delimiter(',');
  wz->add_option("--step", f.h, "interior difference step in units of l");
  add_loop_flags(wz, f);

  CLI::App* adiabatic = app.add_subcommand("adiabatic", "time-dependent transport around a loop");
  adiabatic->add_option("--eta", f.eta, "eta as a+bi or inf");
  adiabatic->add_option("--mass", f.mass, "particle mass");
  adiabatic->add_option("--n", f.n, "level");
  adiabatic->add_option("--T", f.T, "traversal times")->delimiter(',');
  adiabatic->add_option("--window", f.window, "mode window half-width N");
  adiabatic->add_option("--resolution", f.resolution, "time steps per unit time");
  add_loop_flags(adiabatic, f);

  for (CLI::App* sub : {bc, spectrum, berry, wz, adiabatic}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    RunConfig cfg = defaults_for(sub->get_name());
    if (!config_path.empty()) apply_file(cfg, config_path);
    overlay(cfg, *sub, f);
    if (tol_opt->count() > 0) cfg.tol = tol;
    if (seed_opt->count() > 0) cfg.seed = seed;
    validate(cfg);

    const CommandResult r = run_command(cfg);
    if (out_path.empty()) {
      out << r.output;
    } else {
      write_file(out_path, r.output);
      write_file(out_path + ".config.json", to_json(cfg).dump(2) + "\n");
    }
    if (!plot_path.empty() && r.svg) write_file(plot_path, *r.svg);
    if (r.exit_code != kExitOk) err << "error: " << r.diagnostic << "\n";
    return r.exit_code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const SingularParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace movwall::cli
