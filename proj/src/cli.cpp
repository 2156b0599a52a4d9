#include "ecag/cli.hpp"

#include "ecag/bound.hpp"
#include "ecag/chars.hpp"
#include "ecag/code.hpp"
#include "ecag/errors.hpp"
#include "ecag/json_io.hpp"
#include "ecag/scan.hpp"
#include "ecag/sieve.hpp"
#include "ecag/ssp.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace ecag {

namespace {

// "O;3,4;0:1,1:0" -> points
std::vector<CurvePoint> parse_point_list(const Field& f, const std::string& spec) {
  std::vector<CurvePoint> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';'))
    if (!part.empty()) out.push_back(point_from_string(f, part));
  return out;
}

// Evaluation set from --exclude (complement) or --include (explicit list).
std::vector<CurvePoint> resolve_subset(const GroupStructure& gs, const std::string& exclude,
                                       const std::string& include) {
  const Field& f = *gs.curve()->field();
  if (!include.empty()) {
    if (!exclude.empty()) fail(ErrorKind::ConfigParse, "--include and --exclude are mutually exclusive");
    return parse_point_list(f, include);
  }
  std::vector<CurvePoint> excluded = parse_point_list(f, exclude);
  std::vector<CurvePoint> out;
  for (const auto& pt : gs.points()) {
    bool drop = false;
    for (const auto& e : excluded) drop = drop || e == pt;
    if (!drop) out.push_back(pt);
  }
  return out;
}

struct ScanCliOptions {
  std::string q_range = "5..8";
  std::string n_policy = "q+2";
  std::string out_path;
  std::string summary_path;
  long curves = 0;
  long kmin = 0, kmax = 0;
  std::uint64_t seed = 1;
  int jobs = 0;
};

ScanConfig make_scan_config(const ScanCliOptions& opt) {
  ScanConfig cfg;
  auto dots = opt.q_range.find("..");
  if (dots == std::string::npos) {
    cfg.qs = {std::stol(opt.q_range)};
  } else {
    long lo = std::stol(opt.q_range.substr(0, dots));
    long hi = std::stol(opt.q_range.substr(dots + 2));
    cfg.qs = prime_powers_in(lo, hi);
    if (cfg.qs.empty()) fail(ErrorKind::ConfigParse, "no prime powers in " + opt.q_range);
  }
  if (opt.n_policy == "q+2") {
    cfg.n_policy = NPolicy::QPlus2;
  } else if (opt.n_policy == "max") {
    cfg.n_policy = NPolicy::MaxD;
  } else if (opt.n_policy.rfind("ratio:", 0) == 0) {
    cfg.n_policy = NPolicy::Ratio;
    cfg.ratio = std::stod(opt.n_policy.substr(6));
    if (cfg.ratio <= 0.0 || cfg.ratio >= 1.0) fail(ErrorKind::ConfigParse, "ratio must be in (0, 1)");
  } else {
    fail(ErrorKind::ConfigParse, "unknown n-policy " + opt.n_policy);
  }
  cfg.curves_per_q = opt.curves;
  cfg.k_min = opt.kmin;
  cfg.k_max = opt.kmax;
  cfg.seed = opt.seed;
  cfg.jobs = opt.jobs;
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"elliptic-curve AG code toolkit"};
  app.require_subcommand(1);

  std::string curve_path, exclude, include, point_spec, b_spec, method = "ssp";
  long k = 0, trials = 200;
  ScanCliOptions scan_opt;

  auto* curve_cmd = app.add_subcommand("curve", "curve inspection");
  auto* curve_info = curve_cmd->add_subcommand("info", "order, invariant factors, structure case");
  curve_info->add_option("--curve", curve_path, "curve JSON file")->required();

  auto* chars_cmd = app.add_subcommand("chars", "additive character sums");
  auto* chars_phi = chars_cmd->add_subcommand("phi", "max nontrivial character sum over a subset");
  chars_phi->add_option("--curve", curve_path)->required();
  chars_phi->add_option("--exclude", exclude, "points removed from G (semicolon-separated)");
  chars_phi->add_option("--include", include, "explicit point list for D");
  chars_phi->add_option("--k", k, "report |{chi : ord(chi) > k}|")->required();

  auto* ssp_cmd = app.add_subcommand("ssp", "subset-sum counting");
  auto* ssp_count = ssp_cmd->add_subcommand("count", "exact N(k, b, D) by dynamic programming");
  ssp_count->add_option("--curve", curve_path)->required();
  ssp_count->add_option("--exclude", exclude);
  ssp_count->add_option("--include", include);
  ssp_count->add_option("--k", k)->required();
  ssp_count->add_option("--b", b_spec, "single target point; histogram over G when omitted");

  auto* bound_cmd = app.add_subcommand("bound", "deviation-bound evaluation");
  auto* bound_eval = bound_cmd->add_subcommand("eval", "exact-rational bound report");
  bound_eval->add_option("--curve", curve_path)->required();
  bound_eval->add_option("--exclude", exclude);
  bound_eval->add_option("--include", include);
  bound_eval->add_option("--k", k)->required();

  auto* code_cmd = app.add_subcommand("code", "evaluation codes");
  auto* code_build = code_cmd->add_subcommand("build", "construct a code and report [n, k, d]");
  code_build->add_option("--curve", curve_path)->required();
  code_build->add_option("--k", k)->required();
  code_build->add_option("--P", point_spec, "divisor point, e.g. \"0,1\" or O")->required();
  code_build->add_option("--exclude", exclude, "\"auto\" = all points except O and P");
  auto* code_mindist = code_cmd->add_subcommand("mindist", "minimum distance");
  code_mindist->add_option("--curve", curve_path)->required();
  code_mindist->add_option("--k", k)->required();
  code_mindist->add_option("--P", point_spec)->required();
  code_mindist->add_option("--exclude", exclude);
  code_mindist->add_option("--method", method, "ssp | brute | both");

  auto* scan_cmd = app.add_subcommand("scan", "parameter scans");
  auto* scan_mds = scan_cmd->add_subcommand("mds", "distance/positivity scan over curves");
  scan_mds->add_option("--q-range", scan_opt.q_range, "A..B or a single prime power");
  scan_mds->add_option("--n-policy", scan_opt.n_policy, "q+2 | ratio:R | max");
  scan_mds->add_option("--curves", scan_opt.curves, "sampled curves per q (0 = exhaustive)");
  scan_mds->add_option("--k-min", scan_opt.kmin);
  scan_mds->add_option("--k-max", scan_opt.kmax);
  scan_mds->add_option("--seed", scan_opt.seed);
  scan_mds->add_option("--jobs", scan_opt.jobs, "worker threads (default: ECAG_JOBS or hardware)");
  scan_mds->add_option("--out", scan_opt.out_path, "CSV output path (default stdout)");
  scan_mds->add_option("--summary", scan_opt.summary_path, "per-curve k-window CSV");

  auto* sieve_cmd = app.add_subcommand("sieve", "distinct-coordinate sieve");
  auto* sieve_check = sieve_cmd->add_subcommand("check", "sieve vs direct enumeration self-test");
  sieve_check->add_option("--k", k, "max tuple length (<= 8)")->default_val(5);
  sieve_check->add_option("--trials", trials)->default_val(200);
  sieve_check->add_option("--seed", scan_opt.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (curve_info->parsed()) {
      auto curve = load_curve_file(curve_path);
      auto gs = GroupStructure::from_curve(curve);
      Json j;
      j["curve_id"] = curve->id();
      j["q"] = curve->field()->q();
      j["N"] = gs.order();
      j["n1"] = gs.n1();
      j["n2"] = gs.n2();
      j["case"] = gs.structure_case();
      j["case_warning"] = gs.case_warning();
      out << j.dump(2) << "\n";
    } else if (chars_phi->parsed()) {
      auto curve = load_curve_file(curve_path);
      auto gs = GroupStructure::from_curve(curve);
      auto D = resolve_subset(gs, exclude, include);
      auto prof = char_sum_profile(gs, D);
      Json j;
      j["n"] = long(D.size());
      j["phi"] = prof.phi;
      j["tolerance"] = prof.tolerance;
      j["argmax"] = {prof.argmax.u, prof.argmax.v};
      j["S"] = count_chars_order_gt(gs.group(), k);
      j["k"] = k;
      out << j.dump(2) << "\n";
    } else if (ssp_count->parsed()) {
      auto curve = load_curve_file(curve_path);
      auto gs = GroupStructure::from_curve(curve);
      auto D = resolve_subset(gs, exclude, include);
      auto table = count_subset_sums(gs, D, k);
      if (b_spec.empty()) {
        out << count_table_to_json(gs, table, k).dump(2) << "\n";
      } else {
        auto b = point_from_string(*curve->field(), b_spec);
        Json j;
        j["k"] = k;
        j["b"] = b_spec;
        j["N"] = table.at(k, gs.index_of(b)).str();
        out << j.dump(2) << "\n";
      }
    } else if (bound_eval->parsed()) {
      auto curve = load_curve_file(curve_path);
      auto gs = GroupStructure::from_curve(curve);
      auto D = resolve_subset(gs, exclude, include);
      auto prof = char_sum_profile(gs, D);
      auto rep = eval_bound(gs.group(), prof, long(D.size()), k);
      out << bound_report_to_json(rep).dump(2) << "\n";
    } else if (code_build->parsed() || code_mindist->parsed()) {
      auto curve = load_curve_file(curve_path);
      auto gs = GroupStructure::from_curve(curve);
      auto P = point_from_string(*curve->field(), point_spec);
      EvaluationSet D;
      if (exclude.empty() || exclude == "auto") {
        D = all_points_except(gs, P);
      } else {
        D.points = resolve_subset(gs, exclude, "");
        std::erase_if(D.points, [&](const CurvePoint& pt) { return pt.infinity || pt == P; });
      }
      auto code = build_code(curve, D, k, P);
      if (code_build->parsed()) {
        long d = min_distance_ssp(gs, code);
        out << "[" << code.n() << ", " << code.k << ", " << d << "]\n";
        Json j = code_to_json(code);
        j["d"] = d;
        j["is_mds"] = is_mds(gs, code);
        out << j.dump(2) << "\n";
      } else {
        Json j;
        j["n"] = code.n();
        j["k"] = code.k;
        if (method == "ssp" || method == "both") j["d_ssp"] = min_distance_ssp(gs, code);
        if (method == "brute" || method == "both") j["d_brute"] = min_distance_bruteforce(code);
        if (method == "both" && j["d_ssp"] != j["d_brute"])
          fail(ErrorKind::InvariantViolation, "distance criterion mismatch");
        j["d"] = method == "brute" ? j["d_brute"] : j["d_ssp"];
        j["method"] = method;
        out << j.dump(2) << "\n";
      }
    } else if (scan_mds->parsed()) {
      auto report = scan_region(make_scan_config(scan_opt));
      if (!report.certificate_violations.empty())
        fail(ErrorKind::InvariantViolation, "certificate violated on " + report.certificate_violations[0]);
      if (scan_opt.out_path.empty()) {
        write_scan_csv(out, report);
      } else {
        std::ofstream f(scan_opt.out_path);
        if (!f) fail(ErrorKind::FileIO, "cannot write " + scan_opt.out_path);
        write_scan_csv(f, report);
        out << "rows: " << report.rows.size() << ", curves: " << report.curves_scanned << "\n";
      }
      if (!scan_opt.summary_path.empty()) {
        std::ofstream f(scan_opt.summary_path);
        if (!f) fail(ErrorKind::FileIO, "cannot write " + scan_opt.summary_path);
        write_scan_summary_csv(f, report);
      }
    } else if (sieve_check->parsed()) {
      auto res = sieve_self_check(k, trials, scan_opt.seed);
      out << (res.passed ? "pass" : "FAIL") << " (" << res.instances
          << " instances, max deviation " << res.max_deviation << ")\n";
      if (!res.passed) return 2;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ecag
