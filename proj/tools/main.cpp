#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphene_cp/analysis.hpp"
#include "graphene_cp/io.hpp"
#include "graphene_cp/version.hpp"

namespace {

using namespace gcp;

struct SheetOpts {
  double gap_ev = 0.0;
  double mu_ev = 0.0;
  double vf_ratio = 1.0 / 300.0;
};

struct GeomOpts {
  double sep_um = 0.0;
  double temp_k = 300.0;
};

struct QuadOpts {
  QuadratureConfig cfg;
};

struct OutOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_sheet(CLI::App* cmd, SheetOpts& s) {
  cmd->add_option("--gap-ev", s.gap_ev, "Mass gap Delta in eV")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--mu-ev", s.mu_ev, "Chemical potential in eV")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--vf-ratio", s.vf_ratio, "Fermi velocity over c")
      ->check(CLI::Range(1e-6, 0.999999))
      ->capture_default_str();
}

void add_geometry(CLI::App* cmd, GeomOpts& g, bool need_sep) {
  auto* sep = cmd->add_option("--sep-um", g.sep_um, "Separation in um")
                  ->check(CLI::PositiveNumber);
  if (need_sep) sep->required();
  cmd->add_option("--temp-k", g.temp_k, "Temperature in K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_quadrature(CLI::App* cmd, QuadOpts& q) {
  cmd->add_option("--rel-tol", q.cfg.rel_tol, "Relative tolerance")
      ->capture_default_str();
  cmd->add_option("--max-panels", q.cfg.max_panels,
                  "Adaptive panel budget per integral")
      ->capture_default_str();
  cmd->add_option("--matsubara-max-l", q.cfg.matsubara_max_l,
                  "Hard cap on the frequency sum")
      ->capture_default_str();
}

void add_output(CLI::App* cmd, OutOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write output to this file");
}

void emit(const OutOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + o.out_path);
  f << text;
}

// Single-result commands share one row shape: named numeric fields printed
// in insertion order.
struct Row {
  std::vector<std::pair<std::string, JsonValue>> fields;

  void add(const std::string& key, JsonValue v) {
    fields.emplace_back(key, std::move(v));
  }

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "json") {
      JsonObject obj(fields.begin(), fields.end());
      write_json(os, JsonValue(std::move(obj)));
      os << "\n";
      return os.str();
    }
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << csv_escape(fields[i].first);
    }
    os << "\r\n";
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      const auto& v = fields[i].second.v;
      if (std::holds_alternative<double>(v))
        os << format_number(std::get<double>(v));
      else if (std::holds_alternative<long long>(v))
        os << std::get<long long>(v);
      else if (std::holds_alternative<std::string>(v))
        os << csv_escape(std::get<std::string>(v));
      else if (std::holds_alternative<bool>(v))
        os << (std::get<bool>(v) ? "true" : "false");
    }
    os << "\r\n";
    return os.str();
  }
};

void add_common_fields(Row& row, const std::string& command,
                       const SheetOpts& s, const GeomOpts& g) {
  row.add("command", command);
  row.add("gap_ev", s.gap_ev);
  row.add("mu_ev", s.mu_ev);
  row.add("vf_ratio", s.vf_ratio);
  row.add("sep_um", g.sep_um);
  row.add("temp_k", g.temp_k);
}

void add_force_fields(Row& row, const ForceResult& res) {
  row.add("reduced_force", res.reduced_force);
  if (res.absolute_force)
    row.add("absolute_force_ev_per_um", *res.absolute_force);
  row.add("terms_used", static_cast<long long>(res.terms_used));
  row.add("est_rel_error", res.est_rel_error);
}

std::string render_scan(const OutOpts& o, const CurveTable& table,
                        const std::vector<std::pair<std::string, JsonValue>>&
                            extra_sections) {
  std::ostringstream os;
  if (o.format == "json") {
    JsonObject root;
    root.emplace_back("table", table_to_json(table));
    for (const auto& [key, val] : extra_sections)
      root.emplace_back(key, val);
    write_json(os, JsonValue(std::move(root)));
    os << "\n";
  } else {
    write_table_csv(os, table);
  }
  return os.str();
}

void report_crossings(const std::string& band,
                      const std::vector<Crossing>& crossings) {
  for (const auto& c : crossings) {
    std::cerr << "crossing " << band << " " << c.curve << ": ";
    if (c.always_within)
      std::cerr << "within band over the whole range";
    else if (c.never_within)
      std::cerr << "outside band up to the end of the range";
    else
      std::cerr << format_number(c.a_um) << " um";
    std::cerr << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Casimir-Polder force from a gapped, doped graphene sheet"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);
  // lets --config appear after the subcommand name; unmatched flags climb
  // back up to the top-level parser
  app.fallthrough();
  app.get_formatter()->column_width(34);

  SheetOpts sheet;
  GeomOpts geom;
  QuadOpts quad;
  OutOpts out;
  std::optional<double> alpha0;
  double a_lo = 1.0, a_hi = 7.6, threshold = 0.99, tol_um = 0.01;
  std::vector<double> gaps, mus;
  double a_min = 3.0, a_max = 100.0;
  int points = 40;

  auto add_alpha0 = [&](CLI::App* cmd) {
    cmd->add_option("--alpha0-um3", alpha0,
                    "Static polarizability in um^3 (enables absolute force)")
        ->check(CLI::PositiveNumber);
  };

  auto* c_force = app.add_subcommand(
      "force", "Full finite-temperature force at one separation");
  auto* c_f0 = app.add_subcommand(
      "f0", "Zero-frequency contribution at one separation");
  auto* c_ideal = app.add_subcommand(
      "ideal", "Ideal-metal large-separation value");
  auto* c_asym = app.add_subcommand(
      "asym", "Large-separation closed form with regime report");
  auto* c_delta = app.add_subcommand(
      "delta-f0", "Relative deviation of F0 from the ideal-metal value");
  auto* c_ratio = app.add_subcommand(
      "ratio", "F0 against its large-separation closed form");
  auto* c_a0 = app.add_subcommand(
      "a0", "Smallest separation where F0 carries the chosen share of F");
  auto* c_scan_a0 = app.add_subcommand(
      "scan-a0", "a0 as a function of gap, one curve per mu");
  auto* c_scan_delta = app.add_subcommand(
      "scan-delta-f0", "delta-f0 curves over separation");
  auto* c_scan_ratio = app.add_subcommand(
      "scan-ratio", "F0 / asymptotic curves over separation");

  for (CLI::App* cmd : {c_force, c_f0, c_ideal, c_asym, c_delta, c_ratio,
                        c_a0, c_scan_a0, c_scan_delta, c_scan_ratio}) {
    add_quadrature(cmd, quad);
    add_output(cmd, out);
  }
  // the scans take gap and mu lists instead of the point flags
  for (CLI::App* cmd : {c_force, c_f0, c_asym, c_delta, c_ratio, c_a0})
    add_sheet(cmd, sheet);
  for (CLI::App* cmd : {c_force, c_f0, c_ideal, c_asym, c_delta, c_ratio})
    add_geometry(cmd, geom, /*need_sep=*/true);
  for (CLI::App* cmd : {c_force, c_f0, c_ideal, c_asym}) add_alpha0(cmd);

  c_a0->add_option("--temp-k", geom.temp_k, "Temperature in K")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_a0->add_option("--a-lo-um", a_lo, "Bracket lower end")
      ->capture_default_str();
  c_a0->add_option("--a-hi-um", a_hi, "Bracket upper end")
      ->capture_default_str();
  c_a0->add_option("--threshold", threshold, "Zero-term share target")
      ->capture_default_str();
  c_a0->add_option("--tol-um", tol_um, "Bisection resolution")
      ->capture_default_str();

  for (CLI::App* cmd : {c_scan_a0, c_scan_delta, c_scan_ratio}) {
    cmd->add_option("--temp-k", geom.temp_k, "Temperature in K")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--vf-ratio", sheet.vf_ratio, "Fermi velocity over c")
        ->check(CLI::Range(1e-6, 0.999999))
        ->capture_default_str();
    cmd->add_option("--mu-ev", mus, "Chemical potential list in eV");
    cmd->add_option("--tol-um", tol_um, "Crossing resolution")
        ->capture_default_str();
  }
  c_scan_a0->add_option("--gap-ev", gaps, "Gap list in eV");
  c_scan_a0->add_option("--threshold", threshold, "Zero-term share target")
      ->capture_default_str();
  for (CLI::App* cmd : {c_scan_delta, c_scan_ratio}) {
    cmd->add_option("--gap-ev", gaps, "Gap list in eV");
    cmd->add_option("--a-min-um", a_min, "Scan start")->capture_default_str();
    cmd->add_option("--a-max-um", a_max, "Scan end")->capture_default_str();
    cmd->add_option("--points", points, "Sampled separations")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto make_pol = [&]() -> std::optional<PolarizabilityModel> {
    if (!alpha0) return std::nullopt;
    return PolarizabilityModel::static_model(*alpha0);
  };
  const auto spec_from_flags = [&](bool single_gap) {
    ScanSpec spec = ScanSpec::defaults();
    if (!gaps.empty()) spec.gaps_ev = gaps;
    if (single_gap && gaps.empty()) spec.gaps_ev = {0.2};
    if (!mus.empty()) spec.mus_ev = mus;
    spec.a_min_um = a_min;
    spec.a_max_um = a_max;
    spec.points = points;
    spec.temp_k = geom.temp_k;
    spec.vf_ratio = sheet.vf_ratio;
    spec.threshold = threshold;
    spec.tol_um = tol_um;
    return spec;
  };

  if (c_force->parsed() || c_f0->parsed()) {
    const bool zero_only = c_f0->parsed();
    const GrapheneSheet gs(sheet.gap_ev, sheet.mu_ev, sheet.vf_ratio);
    const Geometry g(geom.sep_um, geom.temp_k);
    const ForceResult res =
        zero_only ? force_zero_term(gs, g, make_pol(), quad.cfg)
                  : force_total(gs, g, make_pol(), quad.cfg);
    Row row;
    add_common_fields(row, zero_only ? "f0" : "force", sheet, geom);
    add_force_fields(row, res);
    emit(out, row.render(out.format));
  } else if (c_ideal->parsed()) {
    const Geometry g(geom.sep_um, geom.temp_k);
    Row row;
    row.add("command", "ideal");
    row.add("sep_um", geom.sep_um);
    row.add("temp_k", geom.temp_k);
    row.add("reduced_force", 6.0);
    if (alpha0)
      row.add("absolute_force_ev_per_um",
              force_ideal_metal(g, PolarizabilityModel::static_model(*alpha0)));
    emit(out, row.render(out.format));
  } else if (c_asym->parsed()) {
    const GrapheneSheet gs(sheet.gap_ev, sheet.mu_ev, sheet.vf_ratio);
    const Geometry g(geom.sep_um, geom.temp_k);
    const AsymptoticRegime regime = classify_regime(gs, g);
    if (regime.thermal_warn)
      std::cerr << "warning: thermal parameter "
                << format_number(regime.thermal_param)
                << " < 10, the closed form degrades at this separation\n";
    const ForceResult res = force_asymptotic(gs, g, make_pol());
    Row row;
    add_common_fields(row, "asym", sheet, geom);
    row.add("regime", regime_name(regime.tag));
    row.add("marginal", regime.marginal);
    row.add("d0", regime.d0);
    row.add("thermal_param", regime.thermal_param);
    add_force_fields(row, res);
    emit(out, row.render(out.format));
  } else if (c_delta->parsed()) {
    const GrapheneSheet gs(sheet.gap_ev, sheet.mu_ev, sheet.vf_ratio);
    const Geometry g(geom.sep_um, geom.temp_k);
    Row row;
    add_common_fields(row, "delta-f0", sheet, geom);
    row.add("delta_f0", delta_f0(gs, g, quad.cfg));
    emit(out, row.render(out.format));
  } else if (c_ratio->parsed()) {
    const GrapheneSheet gs(sheet.gap_ev, sheet.mu_ev, sheet.vf_ratio);
    const Geometry g(geom.sep_um, geom.temp_k);
    const double f0 =
        force_zero_term(gs, g, std::nullopt, quad.cfg).reduced_force;
    const double fas = force_asymptotic(gs, g, std::nullopt).reduced_force;
    Row row;
    add_common_fields(row, "ratio", sheet, geom);
    row.add("f0_reduced", f0);
    row.add("asym_reduced", fas);
    row.add("f0_over_asym", f0 / fas);
    emit(out, row.render(out.format));
  } else if (c_a0->parsed()) {
    const GrapheneSheet gs(sheet.gap_ev, sheet.mu_ev, sheet.vf_ratio);
    const A0Result res = find_a0(gs, geom.temp_k, threshold, a_lo, a_hi,
                                 tol_um, quad.cfg);
    Row row;
    row.add("command", "a0");
    row.add("gap_ev", sheet.gap_ev);
    row.add("mu_ev", sheet.mu_ev);
    row.add("vf_ratio", sheet.vf_ratio);
    row.add("temp_k", geom.temp_k);
    row.add("threshold", threshold);
    row.add("a0_um", res.a0_um);
    row.add("ratio_at_a0", res.ratio_at_a0);
    emit(out, row.render(out.format));
  } else if (c_scan_a0->parsed()) {
    const CurveTable table = scan_a0_vs_gap(spec_from_flags(false), quad.cfg);
    emit(out, render_scan(out, table, {}));
  } else if (c_scan_delta->parsed()) {
    const DeltaF0Scan scan = scan_delta_f0(spec_from_flags(true), quad.cfg);
    report_crossings("1%", scan.crossings);
    emit(out, render_scan(out, scan.table,
                          {{"crossings_1pct",
                            crossings_to_json(scan.crossings)}}));
  } else if (c_scan_ratio->parsed()) {
    const RatioScan scan =
        scan_exact_vs_asymptotic(spec_from_flags(true), quad.cfg);
    report_crossings("1%", scan.crossings_1pct);
    report_crossings("2%", scan.crossings_2pct);
    emit(out, render_scan(out, scan.table,
                          {{"crossings_1pct",
                            crossings_to_json(scan.crossings_1pct)},
                           {"crossings_2pct",
                            crossings_to_json(scan.crossings_2pct)}}));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    // parse errors are reported inside run(); reaching here means a setup
    // mistake such as a duplicate option name, so say which
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gcp::QuadratureError& e) {
    std::cerr << "error: " << e.what()
              << " (best estimate " << gcp::format_number(e.best_estimate)
              << ", error bound " << gcp::format_number(e.error_bound)
              << ")\n";
    return 3;
  } catch (const gcp::RegimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gcp::BracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
