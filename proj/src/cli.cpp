#include "divdmt/cli.hpp"

#include "divdmt/algebra.hpp"
#include "divdmt/chamber.hpp"
#include "divdmt/codebook.hpp"
#include "divdmt/dmt.hpp"
#include "divdmt/errors.hpp"
#include "divdmt/format.hpp"
#include "divdmt/sim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef DIVDMT_VERSION
#define DIVDMT_VERSION "0.0.0"
#endif

namespace divdmt::cli {

namespace {

using nlohmann::json;

/// Config files: a JSON object (optionally wrapped as {"config": {...}}, the
/// shape of the run summary) or TOML.
class JsonOrTomlConfig : public CLI::Config {
 public:
  /// Items are attached to `section`, the subcommand being run.
  explicit JsonOrTomlConfig(std::string section) : section_(std::move(section)) {}

  std::string to_config(const CLI::App* app, bool defaults, bool write_description,
                        std::string prefix) const override {
    return CLI::ConfigTOML().to_config(app, defaults, write_description, std::move(prefix));
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::stringstream buffer;
    buffer << input.rdbuf();
    std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream toml(text);
      auto items = CLI::ConfigTOML().from_config(toml);
      for (auto& item : items) {
        if (item.parents.empty() && !section_.empty()) item.parents = {section_};
      }
      return items;
    }
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw CLI::ConfigError(std::string("invalid JSON config: ") + e.what());
    }
    if (doc.contains("config") && doc["config"].is_object()) doc = doc["config"];
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      if (value.is_null()) continue;
      CLI::ConfigItem item;
      if (!section_.empty()) item.parents = {section_};
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar_text(key, v));
      } else {
        item.inputs.push_back(scalar_text(key, value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar_text(const std::string& key, const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    throw CLI::ConfigError("config key '" + key + "' must hold a scalar or a list of scalars");
  }

  std::string section_;
};

struct Common {
  std::string out;
  std::string summary;
};

struct Report {
  std::string csv;
  json config = json::object();
  json results = json::object();
  std::optional<std::uint64_t> seed;
  std::string note;  // one-line message for stderr
};

std::vector<double> db_to_linear(const std::vector<double>& db) {
  std::vector<double> out;
  for (double v : db) out.push_back(std::pow(10.0, v / 10.0));
  return out;
}

// ---------------------------------------------------------------- dmt-curve

struct DmtCurveOptions {
  int n = 0;
  int m = 0;
  double step = 0.01;
};

std::string flag(bool b) { return b ? "1" : "0"; }

Report dmt_curve_command(const DmtCurveOptions& o) {
  if (!(o.step > 0.0)) throw UsageError("--step must be positive");
  Report rep;
  rep.config = {{"n", o.n}, {"m", o.m}, {"step", o.step}};
  const double r_end = support_end<double>(Group::SLnC, o.n, o.m);
  const double inv = std::round(1.0 / o.step);
  const bool reciprocal = std::abs(inv * o.step - 1.0) < 1e-12;
  std::vector<double> grid;
  const long count = static_cast<long>(std::floor(r_end / o.step + 1e-9));
  for (long i = 0; i <= count; ++i) grid.push_back(reciprocal ? double(i) / inv : double(i) * o.step);
  if (r_end - grid.back() > 1e-12) grid.push_back(r_end);

  const bool even = o.n % 2 == 0;
  std::ostringstream csv;
  csv << "r,d_star,d1,d2,cond_slnc,cond_slnr,cond_slnh\n";
  for (double r : grid) {
    csv << format_number(r) << ',' << format_number(d_star(r, o.n, o.m)) << ',';
    if (r <= support_end<double>(Group::SLnR, o.n, o.m) + 1e-12) {
      csv << format_number(d1(r, o.n, o.m));
    }
    csv << ',';
    if (even && r <= support_end<double>(Group::SLnH, o.n, o.m) + 1e-12) {
      csv << format_number(d2(r, o.n, o.m));
    }
    csv << ',' << flag(o.m >= antenna_threshold(Group::SLnC, r)) << ','
        << flag(o.m >= antenna_threshold(Group::SLnR, r)) << ','
        << flag(o.m >= antenna_threshold(Group::SLnH, r)) << '\n';
  }
  rep.csv = csv.str();

  json breakpoints = json::object();
  for (Group g : {Group::SLnC, Group::SLnR, Group::SLnH}) {
    if (g == Group::SLnH && !even) continue;
    json pts = json::array();
    for (const auto& [r, d] : dmt_curve<double>(g, o.n, o.m).breakpoints) pts.push_back({r, d});
    breakpoints[std::string(to_string(g))] = pts;
  }
  rep.results["breakpoints"] = breakpoints;
  return rep;
}

// -------------------------------------------------------------- chamber-min

struct ChamberOptions {
  std::string group;
  int n = 0;
  int m = 0;
  std::vector<double> s;
  std::optional<double> step;
  bool grid = true;
};

Report chamber_command(const ChamberOptions& o) {
  const Group g = parse_group(o.group);
  const GroupKind kind(g, o.n);
  Report rep;
  rep.config = {{"group", std::string(to_string(g))}, {"n", o.n}, {"m", o.m}, {"s", o.s},
                {"grid", o.grid}};
  if (o.step) rep.config["step"] = *o.step;
  if (o.grid && kind.p() > kGridMaxDimension) {
    throw UsageError("grid oracle limited to p <= " + std::to_string(kGridMaxDimension) +
                     "; pass --no-grid");
  }

  std::ostringstream csv;
  csv << "group,n,m,s,min_exact,min_grid,closed_form,condition_held,argmin_label\n";
  json rows = json::array();
  bool coarse = false;
  for (double s : o.s) {
    const ChamberProblem<double> problem(kind, o.m, s);
    const auto report = verify_closed_form(g, o.n, o.m, s);
    std::optional<GridMinimum<double>> grid;
    if (o.grid) {
      grid = min_g_grid(problem, o.step.value_or(problem.u() / 200.0));
      coarse = coarse || grid->coarse;
    }
    csv << to_string(g) << ',' << o.n << ',' << o.m << ',' << format_number(s) << ','
        << format_number(report.exact) << ',' << (grid ? format_number(grid->value) : "") << ','
        << format_number(report.closed_form) << ',' << flag(report.condition_held) << ','
        << report.argmin.name() << '\n';
    json row = {{"s", s},
                {"relation", std::string(to_string(report.relation))},
                {"argmin", report.argmin.name()}};
    if (grid) row["grid_tolerance"] = grid->tolerance;
    rows.push_back(row);
  }
  rep.csv = csv.str();
  rep.results["rows"] = rows;
  rep.results["grid_coarse"] = coarse;
  if (coarse) rep.note = "warning: grid step exceeds u/4 for some s";
  return rep;
}

// ----------------------------------------------------------------- codebook

struct CodebookOptions {
  std::string preset;
  std::optional<double> rho_db;
  double r = 1.0;
  std::optional<double> radius;
  std::size_t cap = kDefaultEnumerationCap;
};

Report codebook_command(const CodebookOptions& o) {
  const Algebra algebra = build_preset(o.preset);
  Report rep;
  rep.config = {{"preset", std::string(to_string(algebra.preset.id))}, {"cap", o.cap}};
  Codebook book;
  if (o.radius) {
    rep.config["radius"] = *o.radius;
    book = build_code_with_radius(algebra, *o.radius, o.cap);
  } else if (o.rho_db) {
    rep.config["rho-db"] = *o.rho_db;
    rep.config["r"] = o.r;
    book = build_code(algebra, std::pow(10.0, *o.rho_db / 10.0), o.r, o.cap);
  } else {
    throw UsageError("codebook needs --rho-db (with --r) or --radius");
  }
  std::ostringstream csv;
  write_csv(csv, book);
  rep.csv = csv.str();
  rep.results = {{"size", book.size()},
                 {"radius", book.radius},
                 {"average_power", book.average_power()}};
  return rep;
}

// -------------------------------------------------------------------- count

struct CountOptions {
  std::string preset;
  std::string by = "det";
  std::vector<double> thresholds;
  std::optional<double> a_max;
  bool ideals = false;
  std::optional<double> frobenius_cap;
};

Report count_command(const CountOptions& o) {
  const Algebra algebra = build_preset(o.preset);
  Report rep;
  rep.config = {{"preset", std::string(to_string(algebra.preset.id))}, {"by", o.by}};
  CountTable table;
  std::string column;
  if (o.by == "det") {
    std::vector<double> thresholds = o.thresholds;
    if (thresholds.empty()) {
      if (!o.a_max) throw UsageError("count needs --thresholds or --a-max");
      thresholds = integer_thresholds(*o.a_max);
      rep.config["a-max"] = *o.a_max;
    } else {
      rep.config["thresholds"] = thresholds;
    }
    rep.config["ideals"] = o.ideals;
    if (o.frobenius_cap) rep.config["frobenius-cap"] = *o.frobenius_cap;
    table = count_dets(algebra, thresholds, o.ideals, o.frobenius_cap);
    column = "A";
  } else if (o.by == "radius") {
    if (o.thresholds.empty()) throw UsageError("count --by radius needs --thresholds (radii)");
    if (o.ideals) throw UsageError("ideal counts are only available with --by det");
    rep.config["thresholds"] = o.thresholds;
    table = count_ball_table(algebra, o.thresholds);
    column = "M";
  } else {
    throw UsageError("--by must be det or radius");
  }
  std::ostringstream csv;
  write_csv(csv, table, column);
  rep.csv = csv.str();

  auto exponent = [&](CountSeries series) -> json {
    const auto& t = table.thresholds;
    if (t.size() < 5 || t.back() < 10.0 * t.front()) return nullptr;
    const SlopeEstimate e = growth_exponent(table, series);
    return e.measurable ? json(e.value) : json(nullptr);
  };
  rep.results["element_exponent"] = exponent(CountSeries::Elements);
  if (table.ideal_counts) rep.results["ideal_exponent"] = exponent(CountSeries::Ideals);
  return rep;
}

// ---------------------------------------------------------------- pep-check

struct PepOptions {
  int n = 2;
  std::vector<int> m{2};
  std::vector<double> c{1.0};
  int samples = 5;
  std::size_t draws = 100000;
  std::uint64_t seed = 1;
};

Report pep_command(const PepOptions& o) {
  if (o.n < 1 || o.samples < 1) throw UsageError("--n and --samples must be positive");
  for (int m : o.m) {
    if (m < 1) throw UsageError("--m values must be positive");
  }
  for (double c : o.c) {
    if (!(c > 0.0)) throw UsageError("--c values must be positive");
  }
  Report rep;
  rep.seed = o.seed;
  rep.config = {{"n", o.n},         {"m", o.m},         {"c", o.c},
                {"samples", o.samples}, {"draws", o.draws}, {"seed", o.seed}};
  std::ostringstream csv;
  csv << "sample,c,m,closed_form,mc_mean,mc_stderr,z\n";
  double worst = 0.0;
  std::uint64_t stream = 1;
  for (int i = 0; i < o.samples; ++i) {
    Rng xr = derived_rng(o.seed, 0, std::uint64_t(i));
    const Eigen::MatrixXcd x = sample_channel(o.n, o.n, xr);
    for (double c : o.c) {
      for (int m : o.m) {
        Rng rng = derived_rng(o.seed, stream++, std::uint64_t(i));
        const double closed = pep_average_closed(x, c, m);
        const MonteCarloMean mc = pep_average_monte_carlo(x, c, m, o.draws, rng);
        const double z = (mc.mean - closed) / mc.standard_error;
        worst = std::max(worst, std::abs(z));
        csv << i << ',' << format_number(c) << ',' << m << ',' << format_number(closed) << ','
            << format_number(mc.mean) << ',' << format_number(mc.standard_error) << ','
            << format_number(z) << '\n';
      }
    }
  }
  rep.csv = csv.str();
  rep.results["max_abs_z"] = worst;
  return rep;
}

// ----------------------------------------------------------------- simulate

struct SimulateOptions {
  std::string preset = "LIPSCHITZ_RAMIFIED";
  std::optional<int> n;
  int m = 2;
  double r = 0.0;
  std::optional<double> radius;
  std::vector<double> rho_db;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::uint64_t union_bound_draws = 0;
  std::size_t decoder_cap = kDefaultDecoderCap;
};

Report simulate_command(const SimulateOptions& o) {
  const Algebra algebra = build_preset(o.preset);
  SimConfig config;
  config.preset = std::string(to_string(algebra.preset.id));
  config.n = o.n.value_or(algebra.preset.degree_n);
  config.m = o.m;
  config.r = o.r;
  config.radius = o.radius;
  config.rho_list = db_to_linear(o.rho_db);
  config.trials = o.trials;
  config.seed = o.seed;
  config.union_bound_draws = o.union_bound_draws;
  config.decoder_cap = o.decoder_cap;

  Report rep;
  rep.seed = o.seed;
  rep.config = {{"preset", config.preset},
                {"n", config.n},
                {"m", config.m},
                {"r", config.r},
                {"rho-db", o.rho_db},
                {"trials", config.trials},
                {"seed", config.seed},
                {"union-bound-draws", config.union_bound_draws},
                {"decoder-cap", config.decoder_cap}};
  if (o.radius) rep.config["radius"] = *o.radius;

  SimResult result = estimate_pe(config);
  std::ostringstream csv;
  csv << "rho_db,trials,errors,pe_hat,ci_low,ci_high,union_bound_mean,codebook_size\n";
  json excluded = json::array();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const SimPoint& p = result.points[i];
    csv << format_number(o.rho_db[i]) << ',' << p.trials << ',' << p.errors << ','
        << format_number(p.pe_hat) << ',' << format_number(p.ci_low) << ','
        << format_number(p.ci_high) << ',' << format_number(p.union_bound_mean) << ','
        << p.codebook_size << '\n';
    if (p.excluded_from_slope) excluded.push_back(o.rho_db[i]);
  }
  rep.csv = csv.str();
  const SlopeFit& s = result.slope;
  json slope = {{"measurable", s.measurable}, {"points", s.points}, {"excluded_rho_db", excluded}};
  std::ostringstream note;
  if (s.measurable) {
    const Interval ci = s.ci95();
    slope["value"] = s.value;
    slope["standard_error"] = s.standard_error;
    slope["ci95"] = {ci.low, ci.high};
    note << "slope " << format_number(s.value) << " (95% CI " << format_number(ci.low) << ", "
         << format_number(ci.high) << ") over " << s.points << " points";
  } else {
    note << "slope not measurable (" << s.points << " points with >= " << kMinSlopeErrors
         << " errors)";
  }
  rep.results["slope"] = slope;
  rep.note = note.str();
  return rep;
}

// ------------------------------------------------------------------ driver

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

json versions() {
  return {{"divdmt", DIVDMT_VERSION},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                        std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"cli11", CLI11_VERSION}};
}

void emit(const std::string& command, const Common& common, const Report& rep,
          double wall_seconds, std::ostream& out, std::ostream& err) {
  json summary = {{"command", command},
                  {"config", rep.config},
                  {"seed", rep.seed ? json(*rep.seed) : json(nullptr)},
                  {"versions", versions()},
                  {"wall_time_s", wall_seconds},
                  {"results", rep.results}};
  if (common.out.empty()) {
    out << rep.csv;
  } else {
    write_text(common.out, rep.csv);
  }
  const std::string text = summary.dump(2) + "\n";
  if (!common.summary.empty()) {
    write_text(common.summary, text);
  } else if (!common.out.empty()) {
    write_text(common.out + ".json", text);
  } else {
    err << text;
  }
  if (!rep.note.empty()) err << rep.note << '\n';
}

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& help,
                         Common& common) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->fallthrough();
  sub->add_option("--out", common.out, "CSV output path (default: stdout)");
  sub->add_option("--summary", common.summary,
                  "JSON summary path (default: <out>.json, or stderr without --out)");
  return sub;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Division-algebra space-time codes: DMT bounds, chamber minimization, "
               "codebooks and Rayleigh Monte Carlo",
               "divdmt"};
  // CLI11 reads only the root config option, so --config lives there and the
  // file's keys are routed to the subcommand named on the command line.
  const std::vector<std::string> names = {"dmt-curve", "chamber-min", "codebook",
                                          "count",     "pep-check",   "simulate"};
  const auto named = std::find_first_of(args.begin(), args.end(), names.begin(), names.end());
  app.config_formatter(std::make_shared<JsonOrTomlConfig>(named == args.end() ? "" : *named));
  app.set_config("--config", "", "JSON or TOML file with option values (flags override)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.set_version_flag("--version", DIVDMT_VERSION);

  Common common;
  std::string command;
  std::function<Report()> action;

  DmtCurveOptions dmt_opts;
  auto* dmt = add_subcommand(app, "dmt-curve", "Tabulate d*, d1 and d2 over r", common);
  dmt->add_option("--n", dmt_opts.n, "transmit antennas")->required();
  dmt->add_option("--m", dmt_opts.m, "receive antennas")->required();
  dmt->add_option("--step", dmt_opts.step, "r spacing")->capture_default_str();
  dmt->callback([&] { command = "dmt-curve"; action = [&] { return dmt_curve_command(dmt_opts); }; });

  ChamberOptions ch_opts;
  double ch_step = 0.0;
  auto* ch = add_subcommand(app, "chamber-min", "Exact and grid minimum of g over the chamber",
                            common);
  ch->add_option("--group", ch_opts.group, "slnc, slnr or slnh")->required();
  ch->add_option("--n", ch_opts.n, "matrix size")->required();
  ch->add_option("--m", ch_opts.m, "receive antennas")->required();
  ch->add_option("--s", ch_opts.s, "effective multiplexing gain(s)")->required()->delimiter(',');
  auto* ch_step_opt = ch->add_option("--step", ch_step, "grid step (default u/200)");
  ch->add_flag("--grid,!--no-grid", ch_opts.grid, "run the grid oracle");
  ch->callback([&] {
    if (ch_step_opt->count() > 0) ch_opts.step = ch_step;
    command = "chamber-min";
    action = [&] { return chamber_command(ch_opts); };
  });

  CodebookOptions cb_opts;
  double cb_rho_db = 0.0;
  double cb_radius = 0.0;
  auto* cb = add_subcommand(app, "codebook", "Enumerate the normalized code C(rho)", common);
  cb->add_option("--preset", cb_opts.preset, "algebra preset")->required();
  auto* cb_rho = cb->add_option("--rho-db", cb_rho_db, "SNR in dB (M = rho^{rn/k})");
  cb->add_option("--r", cb_opts.r, "multiplexing gain")->capture_default_str();
  auto* cb_rad = cb->add_option("--radius", cb_radius, "fixed Frobenius radius M");
  cb_rad->excludes(cb_rho);
  cb->add_option("--cap", cb_opts.cap, "enumeration cap")->capture_default_str();
  cb->callback([&] {
    if (cb_rho->count() > 0) cb_opts.rho_db = cb_rho_db;
    if (cb_rad->count() > 0) cb_opts.radius = cb_radius;
    command = "codebook";
    action = [&] { return codebook_command(cb_opts); };
  });

  CountOptions ct_opts;
  double ct_amax = 0.0;
  double ct_cap = 0.0;
  auto* ct = add_subcommand(app, "count", "Count elements and ideals by |det| or radius", common);
  ct->add_option("--preset", ct_opts.preset, "algebra preset")->required();
  ct->add_option("--by", ct_opts.by, "det or radius")->capture_default_str();
  ct->add_option("--thresholds", ct_opts.thresholds, "ascending thresholds")->delimiter(',');
  auto* ct_amax_opt = ct->add_option("--a-max", ct_amax, "thresholds 1..A_max");
  ct->add_flag("--ideals", ct_opts.ideals, "also count right ideals (finite unit group only)");
  auto* ct_cap_opt = ct->add_option("--frobenius-cap", ct_cap, "Frobenius radius of the search");
  ct->callback([&] {
    if (ct_amax_opt->count() > 0) ct_opts.a_max = ct_amax;
    if (ct_cap_opt->count() > 0) ct_opts.frobenius_cap = ct_cap;
    command = "count";
    action = [&] { return count_command(ct_opts); };
  });

  PepOptions pep_opts;
  auto* pep = add_subcommand(app, "pep-check",
                             "Monte Carlo check of E exp(-c||HX||^2) = det(I + cXX*)^-m", common);
  pep->add_option("--n", pep_opts.n, "size of X")->capture_default_str();
  pep->add_option("--m", pep_opts.m, "receive antennas")->delimiter(',')->capture_default_str();
  pep->add_option("--c", pep_opts.c, "scale c")->delimiter(',')->capture_default_str();
  pep->add_option("--samples", pep_opts.samples, "number of random X")->capture_default_str();
  pep->add_option("--draws", pep_opts.draws, "channel draws per estimate")->capture_default_str();
  pep->add_option("--seed", pep_opts.seed, "master seed")->capture_default_str();
  pep->callback([&] { command = "pep-check"; action = [&] { return pep_command(pep_opts); }; });

  SimulateOptions sim_opts;
  int sim_n = 0;
  double sim_radius = 0.0;
  auto* sim = add_subcommand(app, "simulate", "Error-rate Monte Carlo with ML decoding", common);
  sim->add_option("--preset", sim_opts.preset, "algebra preset")->capture_default_str();
  auto* sim_n_opt = sim->add_option("--n", sim_n, "transmit antennas (the preset's degree)");
  sim->add_option("--m", sim_opts.m, "receive antennas")->capture_default_str();
  sim->add_option("--r", sim_opts.r, "multiplexing gain")->capture_default_str();
  auto* sim_rad = sim->add_option("--radius", sim_radius, "fixed Frobenius radius M");
  sim->add_option("--rho-db", sim_opts.rho_db, "SNRs in dB, ascending")
      ->required()
      ->delimiter(',');
  sim->add_option("--trials", sim_opts.trials, "trials per SNR")->capture_default_str();
  sim->add_option("--seed", sim_opts.seed, "master seed")->capture_default_str();
  sim->add_option("--union-bound-draws", sim_opts.union_bound_draws,
                  "trials whose channel feeds the union bound (0 = all)")
      ->capture_default_str();
  sim->add_option("--decoder-cap", sim_opts.decoder_cap, "largest codebook to decode")
      ->capture_default_str();
  sim->callback([&] {
    if (sim_n_opt->count() > 0) sim_opts.n = sim_n;
    if (sim_rad->count() > 0) sim_opts.radius = sim_radius;
    command = "simulate";
    action = [&] { return simulate_command(sim_opts); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Report rep = action();
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(command, common, rep, wall, out, err);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace divdmt::cli
