#pragma once

#include "tropgeo/cover.hpp"
#include "tropgeo/honeycomb.hpp"
#include "tropgeo/isoperimetry.hpp"
#include "tropgeo/json_io.hpp"
#include "tropgeo/measure.hpp"
#include "tropgeo/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace tropgeo::cli {

// exit codes per the interface contract
constexpr int kOk = 0;
constexpr int kInvalidInput = 2;
constexpr int kVerificationFailure = 3;
constexpr int kUnsupported = 4;

struct CliResult {
  int code = kOk;
  std::string output;  // what gets printed or written to --out
  std::string error;   // diagnostic on nonzero exit
};

namespace detail_cli {

inline std::vector<Rational> parse_schedule(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty eps schedule");
  return out;
}

inline RatVec parse_vector(const std::string& s) {
  RatVec out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty vector literal");
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

inline Polyline polygon_boundary(const Polygon2D& P) { return Polyline{P.vertices, true}; }

inline std::string format_csv_quotient(const std::vector<QuotientRow>& rows) {
  std::ostringstream out;
  out << "structure,isoperimetric_quotient,provenance\n";
  out << std::fixed << std::setprecision(3);
  for (const auto& r : rows)
    out << r.structure << "," << r.quotient << "," << (r.computed ? "computed" : "paper-constant")
        << "\n";
  return out.str();
}

}  // namespace detail_cli

/// Runs one CLI invocation. All numbers in the output come from library
/// calls; this layer only parses arguments and formats results.
inline CliResult run(std::vector<std::string> args) {
  CLI::App app{"tropical metric geometry toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 0;
  int workers = 1;
  app.add_option("--out", out_path, "write output to a file as well as stdout");
  app.add_option("--format", format, "json | csv | svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--seed", seed, "run seed (recorded in output; all computations deterministic)");
  app.add_option("--workers", workers, "worker-count hint; results are identical for any value")
      ->check(CLI::PositiveNumber);

  // ball-info
  auto* ball_cmd = app.add_subcommand("ball-info", "tropical ball geometry and measures");
  int bi_dim = 2;
  std::string bi_radius = "1";
  ball_cmd->add_option("--dim", bi_dim, "dimension")->check(CLI::Range(1, 4));
  ball_cmd->add_option("--radius", bi_radius, "radius (rational)");

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "volume and surface measures of a polytope file");
  std::string measure_file;
  measure_cmd->add_option("file", measure_file, "polytope JSON file")->required();

  // cover-estimate
  auto* cover_cmd = app.add_subcommand("cover-estimate", "greedy Minkowski cover estimates");
  std::string cov_target = "square";
  std::string cov_shape = "ball";
  std::string cov_sched = "1/4,1/8";
  int cov_k = -1;
  cover_cmd->add_option("--target", cov_target, "square | ball | ball-boundary | polytope file");
  cover_cmd->add_option("--shape", cov_shape, "ball | cube | simplex")
      ->check(CLI::IsMember({"ball", "cube", "simplex"}));
  cover_cmd->add_option("--eps-schedule", cov_sched, "comma-separated rationals");
  cover_cmd->add_option("--k", cov_k, "target dimension (defaults to the natural one)");

  // steiner
  auto* steiner_cmd = app.add_subcommand("steiner", "Minkowski-Steiner surface area of a polytope file");
  std::string steiner_file;
  std::string steiner_sched = "1/2,1/4,1/8";
  steiner_cmd->add_option("file", steiner_file, "polytope JSON file")->required();
  steiner_cmd->add_option("--eps-schedule", steiner_sched, "strictly decreasing rationals");

  // isoperim
  auto* iso_cmd = app.add_subcommand("isoperim", "isoperimetric deficit of a polygon or polytope file");
  std::string iso_file;
  iso_cmd->add_option("file", iso_file, "geometry JSON file")->required();

  // hexagon
  auto* hex_cmd = app.add_subcommand("hexagon", "canonical tropically geodesic hexagon from edge lengths");
  std::string ha = "1", hb = "1", hc = "1", hd = "1";
  hex_cmd->add_option("--a", ha);
  hex_cmd->add_option("--b", hb);
  hex_cmd->add_option("--c", hc);
  hex_cmd->add_option("--d", hd);

  // honeycomb
  auto* honey_cmd = app.add_subcommand("honeycomb", "honeycomb tiling: verification, ratio, svg");
  int ho_dim = 2;
  std::string ho_window = "10";
  bool ho_ratio = false;
  std::string ho_measure = "sigma";
  std::string ho_svg;
  honey_cmd->add_option("--dim", ho_dim, "dimension (<= 4)");
  honey_cmd->add_option("--window", ho_window, "window radius (rational)");
  honey_cmd->add_flag("--ratio", ho_ratio, "include the boundary-measure / volume ratio");
  honey_cmd->add_option("--measure", ho_measure, "sigma | minkowski")
      ->check(CLI::IsMember({"sigma", "minkowski"}));
  honey_cmd->add_option("--svg", ho_svg, "write an SVG of the tiling (dim 2)");

  // section
  auto* sec_cmd = app.add_subcommand("section", "central section of the unit tropical ball");
  int sec_dim = 3;
  std::string sec_dir;
  sec_cmd->add_option("--dim", sec_dim)->check(CLI::Range(1, 4));
  sec_cmd->add_option("--direction", sec_dir, "comma-separated rationals")->required();

  // quotient-table
  app.add_subcommand("quotient-table", "3D isoperimetric quotient table (CSV)");

  CliResult res;
  std::vector<const char*> argv;
  argv.push_back("tropgeo");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    res.code = e.get_exit_code() == 0 ? kOk : kInvalidInput;
    std::ostringstream os;
    res.code == kOk ? void(os << app.help()) : void(os << e.what());
    res.output = os.str();
    return res;
  }

  auto emit = [&](std::string text) {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text;
    }
    res.output = std::move(text);
  };
  Json config{{"seed", seed}, {"workers", workers}};

  try {
    if (ball_cmd->parsed()) {
      Rational R = parse_rational(bi_radius);
      Polytope B = trop_ball(bi_dim, R);
      if (format == "svg") {
        if (bi_dim != 2) throw UnsupportedDirectionError("svg rendering is 2D only");
        emit(svg::render_polygon(detail::hull2d(B.vertices)));
        return res;
      }
      Json j = polytope_to_json(B);
      j["config"] = config;
      j["volume"] = rational_to_json(sigma_volume(B));
      j["sigma_surface"] = measure_report_to_json(sigma_surface_polytope(B));
      j["minkowski_surface"] = measure_report_to_json(minkowski_surface_polytope(B));
      j["surface_to_volume_ratio"] = rational_to_json(Rational(bi_dim) / R);
      emit(j.dump(2) + "\n");
    } else if (measure_cmd->parsed()) {
      Polytope P = polytope_from_json(detail_cli::load_json_file(measure_file));
      Json j{{"config", config}};
      j["volume"] = rational_to_json(sigma_volume(P));
      j["minkowski_surface"] = measure_report_to_json(minkowski_surface_polytope(P));
      j["sigma_surface"] = measure_report_to_json(sigma_surface_polytope(P));
      emit(j.dump(2) + "\n");
    } else if (cover_cmd->parsed()) {
      CoverSpec spec;
      spec.shape = cov_shape == "ball" ? CoverSpec::Shape::ball
                   : cov_shape == "cube" ? CoverSpec::Shape::hypercube
                                         : CoverSpec::Shape::simplex;
      Json results = Json::array();
      auto schedule = detail_cli::parse_schedule(cov_sched);
      for (const auto& eps : schedule) {
        spec.eps = eps;
        MeasureReport r;
        if (cov_target == "square") {
          std::vector<Halfspace> hs;
          for (int j = 0; j < 2; ++j) {
            RatVec plus(2, Rational(0)), minus(2, Rational(0));
            plus[j] = 1;
            minus[j] = -1;
            hs.push_back(Halfspace{plus, Rational(1)});
            hs.push_back(Halfspace{minus, Rational(0)});
          }
          spec.k = cov_k < 0 ? 2 : cov_k;
          r = cover_estimate(polytope_from_halfspaces(2, hs, "hypercube"), spec);
        } else if (cov_target == "ball") {
          spec.k = cov_k < 0 ? 2 : cov_k;
          r = cover_estimate(trop_ball(2, 1), spec);
        } else if (cov_target == "ball-boundary") {
          Polytope B = trop_ball(2, 1);
          spec.k = cov_k < 0 ? 1 : cov_k;
          r = cover_estimate(Polyline{detail::hull2d(B.vertices), true}, spec);
        } else {
          Polytope P = polytope_from_json(detail_cli::load_json_file(cov_target));
          spec.k = cov_k < 0 ? P.dim : cov_k;
          r = cover_estimate(P, spec);
        }
        results.push_back(measure_report_to_json(r));
      }
      Json j{{"config", config}, {"target", cov_target}, {"shape", cov_shape},
             {"reports", results}};
      emit(j.dump(2) + "\n");
    } else if (steiner_cmd->parsed()) {
      Polytope P = polytope_from_json(detail_cli::load_json_file(steiner_file));
      MeasureReport st = steiner_surface(P, detail_cli::parse_schedule(steiner_sched));
      MeasureReport mk = minkowski_surface_polytope(P);
      Json j{{"config", config}};
      j["steiner"] = measure_report_to_json(st);
      j["minkowski_surface"] = measure_report_to_json(mk);
      Rational err = abs_rat(*st.exact_value - *mk.exact_value);
      bool consistent = to_double(err) <= st.error_estimate + 1e-15;
      j["consistent"] = consistent;
      emit(j.dump(2) + "\n");
      if (!consistent) {
        res.code = kVerificationFailure;
        res.error = "steiner limit disagrees with the facet-sum surface measure";
      }
    } else if (iso_cmd->parsed()) {
      Json in = detail_cli::load_json_file(iso_file);
      const bool planar = in.at("dim").get<int>() == 2 && !in.contains("halfspaces");
      Json j{{"config", config}};
      if (planar) {
        Polygon2D P = polygon_from_json(in);
        j["deficit_2d"] = deficit2d_to_json(deficit_2d(P));
      } else {
        Polytope P = polytope_from_json(in);
        j["deficit_nd"] = deficit_nd_to_json(deficit_nd(P));
      }
      emit(j.dump(2) + "\n");
    } else if (hex_cmd->parsed()) {
      HexagonParams p{parse_rational(ha), parse_rational(hb), parse_rational(hc),
                      parse_rational(hd)};
      Polygon2D poly = hexagon_from_params(p);
      if (format == "svg") {
        emit(svg::render_polygon(poly.vertices));
        return res;
      }
      Json j{{"config", config}};
      j["polygon"] = polygon_to_json(poly);
      j["deficit_2d"] = deficit2d_to_json(deficit_2d(poly));
      emit(j.dump(2) + "\n");
    } else if (honey_cmd->parsed()) {
      if (ho_dim > 4) throw UnsupportedDirectionError("honeycomb verification is desk-scale: dim <= 4");
      Rational W = parse_rational(ho_window);
      Tiling t;
      t.dim = ho_dim;
      t.window = W;
      t.centers = lattice_centers(ho_dim, W);
      TilingReport rep = verify_tiling(ho_dim, W);
      Json j{{"config", config}};
      j["tiling"] = tiling_to_json(t);
      j["verification"] = tiling_report_to_json(rep);
      if (ho_ratio) {
        HoneycombRatio hr = honeycomb_ratio(
            ho_dim, W, ho_measure == "sigma" ? SurfaceMeasure::sigma : SurfaceMeasure::minkowski);
        j["ratio"] = Json{{"value", hr.ratio},
                          {"limit_target", hr.limit_target},
                          {"cells", hr.cells},
                          {"boundary_cells", hr.boundary_cells},
                          {"boundary_contribution", hr.boundary_contribution},
                          {"measure", hr.measure}};
      }
      if (!ho_svg.empty()) {
        if (ho_dim != 2) throw UnsupportedDirectionError("tiling svg is 2D only");
        std::ofstream f(ho_svg);
        f << svg::render_tiling_2d(t.centers, W);
      }
      emit(j.dump(2) + "\n");
      if (!rep.pass) {
        res.code = kVerificationFailure;
        res.error = "tiling verification failed: " + rep.failure;
      }
    } else if (sec_cmd->parsed()) {
      RatVec v = detail_cli::parse_vector(sec_dir);
      if (static_cast<int>(v.size()) != sec_dim)
        throw std::invalid_argument("direction length must match --dim");
      CentralSection s = central_section_area(sec_dim, v);
      Json j{{"config", config}};
      j["dim"] = sec_dim;
      j["direction"] = point_to_json(Point(v));
      j["kind"] = s.kind == SectionKind::subset_family      ? "subset_family"
                  : s.kind == SectionKind::difference_family ? "difference_family"
                  : s.kind == SectionKind::generic2d         ? "generic2d"
                                                             : "generic3d";
      j["area"] = radical_to_json(s.area);
      if (s.subset_size > 0) j["subset_size"] = s.subset_size;
      j["section_times_height"] = rational_to_json(section_times_height(sec_dim, v));
      emit(j.dump(2) + "\n");
    } else {  // quotient-table
      emit(detail_cli::format_csv_quotient(quotient_table()));
    }
  } catch (const UnsupportedDirectionError& e) {
    res.code = kUnsupported;
    res.error = e.what();
  } catch (const std::invalid_argument& e) {
    res.code = kInvalidInput;
    res.error = e.what();
  } catch (const Json::exception& e) {
    res.code = kInvalidInput;
    res.error = e.what();
  } catch (const std::logic_error& e) {
    res.code = kVerificationFailure;
    res.error = e.what();
  }
  return res;
}

}  // namespace tropgeo::cli
