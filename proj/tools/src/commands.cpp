#include "lfball_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "lfball/dynamics.hpp"
#include "lfball/errors.hpp"
#include "lfball/sampling.hpp"
#include "lfball/schur_agler.hpp"

namespace lfball::cli {

using nlohmann::json;

std::string Csv::str() const {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  char buf[32];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (row[i]) {
        std::snprintf(buf, sizeof buf, "%.17g", *row[i]);
        out += buf;
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

json base_report(const char* command, const std::string& digest, json parameters) {
  return {{"command", command},
          {"input_digest", digest},
          {"parameters", std::move(parameters)},
          {"results", json::object()},
          {"warnings", json::array()}};
}

// Infinite or NaN values have no JSON spelling; they are reported as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

double beta_for(const Options& opt, std::size_t m) {
  return opt.beta.value_or(static_cast<double>(m));
}

// The validated ball map of a document, or nothing with the reason recorded
// in the report.
std::optional<LinearFractionalMap> ball_map(const MapDocument& doc, json& report) {
  if (const auto* phi = std::get_if<LinearFractionalMap>(&doc.map)) {
    SelfMapReport check;
    try {
      return validated(*phi, &check);
    } catch (const NotSelfMapError&) {
      report["results"] = {{"valid", false}, {"reason", check.reason}};
      return std::nullopt;
    }
  }
  const BCDMap& map = std::get<BCDMap>(doc.map);
  const BCDValidationReport check = validate_bcd(map);
  if (!check.valid) {
    report["results"] = {{"valid", false}, {"reason", check.reason}};
    return std::nullopt;
  }
  return bcd_to_ball(map);
}

json classification_json(const ClassificationResult& c) {
  return {{"kind", to_string(c.kind)},
          {"point", to_json(c.dw_point)},
          {"alpha", optional_number(c.alpha)},
          {"orbit_steps", c.orbit_steps},
          {"degenerate_spectrum", c.degenerate_spectrum}};
}

// log(1 - |phi_n(0)|^2) for n = 0..steps, falling back to the stable ball
// orbit (with a warning) when the preferred route runs out of precision.
std::vector<double> log_defects(const LinearFractionalMap& phi, const ClassificationResult& kind,
                                std::size_t steps, json& report) {
  try {
    return origin_log_defects(phi, kind, steps);
  } catch (const PrecisionExhaustedError& e) {
    report["warnings"].push_back(std::string(e.what()) + "; sequence truncated at n = " +
                                 std::to_string(e.last_reliable_n()));
    const Orbit o = orbit(phi, BallPoint::origin(phi.dim()), steps);
    std::vector<double> out;
    for (const double d : o.defects) out.push_back(std::log(d));
    return out;
  }
}

}  // namespace

CommandOutput cmd_validate(const MapDocument& doc, const std::string& digest, const Options&) {
  json report = base_report("validate", digest, {{"kind", doc.kind()}, {"m", doc.m}});
  json& res = report["results"];
  if (const auto* phi = std::get_if<LinearFractionalMap>(&doc.map)) {
    const SelfMapReport r = check_self_map(*phi);
    res = {{"valid", r.valid},
           {"scale", optional_number(r.scale)},
           {"min_eig", number(r.min_eig)},
           {"spot_checks", r.spot_checks},
           {"spot_failures", r.spot_failures},
           {"reason", r.reason}};
    if (r.valid) res["factorization_residual"] = kernel_factorization(*phi, *r.scale).residual;
  } else {
    const BCDValidationReport r = validate_bcd(std::get<BCDMap>(doc.map));
    res = {{"valid", r.valid},
           {"a_norm", r.a_norm},
           {"sqrt_alpha", std::sqrt(std::get<BCDMap>(doc.map).alpha())},
           {"norm_ok", r.norm_ok},
           {"quadratic_max", number(r.quadratic_max)},
           {"quadratic_unbounded", std::isinf(r.quadratic_max)},
           {"quadratic_ok", r.quadratic_ok},
           {"spot_checks", r.spot_checks},
           {"spot_max", number(r.spot_max)},
           {"reason", r.reason}};
  }
  return {std::move(report), std::nullopt};
}

CommandOutput cmd_classify(const MapDocument& doc, const std::string& digest, const Options&) {
  json report = base_report("classify", digest, {{"kind", doc.kind()}, {"m", doc.m}});
  const auto phi = ball_map(doc, report);
  if (!phi) return {std::move(report), std::nullopt};
  const ClassificationResult c = classify(*phi);
  report["results"] = classification_json(c);
  report["results"]["valid"] = true;
  json fps = json::array();
  const FixedPointSet set = fixed_points(*phi);
  for (const FixedPoint& p : set.points) {
    fps.push_back({{"point", to_json(p.point)}, {"location", to_string(p.location)}});
  }
  report["results"]["fixed_points"] = std::move(fps);
  return {std::move(report), std::nullopt};
}

CommandOutput cmd_specrad(const MapDocument& doc, const std::string& digest, const Options& opt) {
  const double beta = beta_for(opt, doc.m);
  json report = base_report("specrad", digest,
                            {{"kind", doc.kind()}, {"m", doc.m}, {"beta", beta},
                             {"iters", opt.iters}});
  const auto phi = ball_map(doc, report);
  if (!phi) return {std::move(report), std::nullopt};
  const SpaceParams params(doc.m, beta);
  const ClassificationResult c = classify(*phi);
  const std::vector<double> ld = log_defects(*phi, c, opt.iters, report);
  const std::vector<double> s = spectral_radius_from_log_defects(ld, params.beta);

  Csv csv{{"n", "defect", "s_n", "r_n"}, {}};
  for (std::size_t n = 1; n < ld.size(); ++n) {
    csv.rows.push_back({static_cast<double>(n), std::exp(ld[n]), s[n - 1],
                        std::exp(ld[n] - ld[n - 1])});
  }
  const double predicted = predicted_spectral_radius(c, params.beta);
  json& res = report["results"];
  res = {{"valid", true},
         {"classification", classification_json(c)},
         {"predicted_radius", predicted},
         {"terms", s.size()},
         {"truncated", s.size() < opt.iters}};
  if (!s.empty()) {
    res["last_n"] = s.size();
    res["last_s"] = number(s.back());
    res["last_r"] = number(*csv.rows.back()[3]);
    res["relative_gap"] = number(std::abs(s.back() - predicted) / predicted);
  }
  return {std::move(report), std::move(csv)};
}

CommandOutput cmd_kernel_check(const MapDocument& doc, const std::string& digest,
                               const Options& opt) {
  json report = base_report("kernel-check", digest,
                            {{"kind", doc.kind()}, {"m", doc.m}, {"points", opt.points},
                             {"seed", opt.seed}, {"tol", opt.tol}});
  const auto phi = ball_map(doc, report);
  if (!phi) return {std::move(report), std::nullopt};
  const std::vector<BallPoint> pts = sample_ball(doc.m, opt.points, opt.seed);
  const Kernel kernel = [&](const BallPoint& z, const BallPoint& w) {
    return dbr_kernel(*phi, z, w);
  };
  const KernelGramReport gram = gram_positivity(kernel, pts, opt.tol);
  const KernelFactorization& f = phi->factorization();
  double residual = 0.0;
  for (const BallPoint& z : pts) {
    for (const BallPoint& w : pts) {
      residual = std::max(residual, std::abs(kernel(z, w) - f.kernel(z.coords(), w.coords())));
    }
  }
  report["results"] = {{"valid", true},
                       {"scale", optional_number(phi->contractive_scale())},
                       {"points", gram.points.size()},
                       {"min_eig", gram.min_eig},
                       {"positive", gram.positive},
                       {"factorization_residual", residual}};
  return {std::move(report), std::nullopt};
}

CommandOutput cmd_normbounds(const MapDocument& doc, const std::string& digest,
                             const Options& opt) {
  const double beta = beta_for(opt, doc.m);
  json report = base_report("normbounds", digest,
                            {{"kind", doc.kind()}, {"m", doc.m}, {"beta", beta},
                             {"points", opt.points}, {"seed", opt.seed}});
  const auto phi = ball_map(doc, report);
  if (!phi) return {std::move(report), std::nullopt};
  const SpaceParams params(doc.m, beta);
  const BallPoint phi0 = eval(*phi, BallPoint::origin(doc.m));
  const NormBounds bounds = norm_bounds(phi0, params);

  // the origin is always in the sample
  std::vector<BallPoint> pts{BallPoint::origin(doc.m)};
  if (opt.points > 1) {
    for (BallPoint& z : sample_ball(doc.m, opt.points - 1, opt.seed)) pts.push_back(std::move(z));
  }
  const double gram = gram_norm_lower_bound(*phi, params, pts);
  const bool lower_ok = bounds.lower <= gram * (1.0 + 1e-12);
  const bool upper_ok = gram <= bounds.upper + 1e-9;
  report["results"] = {{"valid", true},
                       {"phi0_norm", bounds.phi0_norm},
                       {"lower", bounds.lower},
                       {"gram", gram},
                       {"upper", bounds.upper},
                       {"points", pts.size()},
                       {"sandwich_ok", lower_ok && upper_ok}};
  if (!(lower_ok && upper_ok)) {
    throw InvariantViolation("normbounds: Gram estimate outside [lower, upper]", report);
  }
  return {std::move(report), std::nullopt};
}

CommandOutput cmd_factor(const MapDocument& doc, const std::string& digest, const Options&) {
  json report = base_report("factor", digest, {{"kind", doc.kind()}, {"m", doc.m}});
  const auto phi = ball_map(doc, report);
  if (!phi) return {std::move(report), std::nullopt};
  const KernelFactorization& f = phi->factorization();
  report["results"] = {{"valid", true},
                       {"scale", optional_number(phi->contractive_scale())},
                       {"X", to_json(f.x)},
                       {"C", to_json(f.c)},
                       {"D", to_json(f.d)},
                       {"residual", f.residual}};
  return {std::move(report), std::nullopt};
}

CommandOutput cmd_counterexample(const Options& opt) {
  const double beta = beta_for(opt, opt.m);
  const json parameters = {{"alpha", opt.alpha}, {"m", opt.m}, {"beta", beta},
                           {"iters", opt.iters}};
  json report = base_report("counterexample", fnv1a_hex(parameters.dump()), parameters);
  const SpaceParams params(opt.m, beta);
  const BCDMap map = counterexample_map(opt.alpha, opt.m);
  const BCDValidationReport check = validate_bcd(map);
  const std::size_t n_max = std::max<std::size_t>(opt.iters, 1);

  const std::vector<double> t = restricted_defect_seq(map, n_max);
  const std::vector<IterateData> its = direct_iterates(map, n_max);
  const RestrictednessReport restricted = restrictedness_report(its, map.alpha());
  const std::vector<double> ratios = defect_ratio_sequence(its, map.alpha());
  std::vector<double> ld;
  for (const IterateData& it : its) ld.push_back(it.log_ball_defect(map.alpha()));
  const std::vector<double> s = spectral_radius_from_log_defects(ld, params.beta);
  const cplx x = x_limit(map);

  const LinearFractionalMap ball = bcd_to_ball(map);
  const ClassificationResult c = classify(ball);

  Csv csv{{"n", "t_n", "re_u", "im_u", "norm_v", "re_x", "im_x", "defect", "special",
           "restricted", "s_n", "r_n"},
          {}};
  for (const IterateData& it : its) {
    std::vector<std::optional<double>> row{static_cast<double>(it.n)};
    row.push_back(it.n >= 1 ? std::optional<double>(t[it.n - 1]) : std::nullopt);
    row.push_back(it.u ? std::optional<double>(it.u->real()) : std::nullopt);
    row.push_back(it.u ? std::optional<double>(it.u->imag()) : std::nullopt);
    row.push_back(it.v ? std::optional<double>(it.v->norm()) : std::nullopt);
    row.push_back(it.x.real());
    row.push_back(it.x.imag());
    row.push_back(std::exp(ld[it.n]));
    row.push_back(restricted.special_seq[it.n]);
    row.push_back(restricted.restricted_seq[it.n]);
    row.push_back(it.n >= 1 ? std::optional<double>(s[it.n - 1]) : std::nullopt);
    row.push_back(it.n >= 1 ? std::optional<double>(ratios[it.n - 1]) : std::nullopt);
    csv.rows.push_back(std::move(row));
  }

  const cplx x_last = its.back().x;
  report["results"] = {
      {"map", to_json(MapDocument{kDocumentVersion, opt.m, "counterexample", map})},
      {"valid", check.valid},
      {"t_1", t.front()},
      {"t_min", *std::min_element(t.begin(), t.end())},
      {"t_max", *std::max_element(t.begin(), t.end())},
      {"all_t_above_1", std::all_of(t.begin(), t.end(), [](double v) { return v > 1.0; })},
      {"special_limit_zero", restricted.special_limit_zero},
      {"restricted_bounded", restricted.restricted_bounded},
      {"x_limit", to_json(x)},
      {"x_last", to_json(x_last)},
      {"x_error", std::abs(x_last - x)},
      {"re_x_at_least_1", x.real() >= 1.0 - 1e-9},
      {"last_r", ratios.back()},
      {"last_s", s.back()},
      {"predicted_radius", std::pow(opt.alpha, -params.beta / 2.0)},
      {"ball_map", classification_json(c)}};
  return {std::move(report), std::move(csv)};
}

std::string report_digest(const json& report) {
  json copy = report;
  copy.erase("wall_time_s");
  copy.erase("report_digest");
  return fnv1a_hex(copy.dump());
}

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw SchemaError("cannot write " + out_path);
  file << text;
}

std::string render(json report, double seconds) {
  report["report_digest"] = report_digest(report);
  report["wall_time_s"] = seconds;
  return report.dump(2) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments with linear fractional self-maps of the unit ball"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::optional<double> beta;
  std::string format = "json";
  std::string out_path;
  app.add_option("--seed", opt.seed, "Seed for every random sample")->capture_default_str();
  app.add_option("--beta", beta, "Space parameter beta >= 1 (default m)");
  app.add_option("-n,--iters", opt.iters, "Number of iterates")->capture_default_str();
  app.add_option("--points", opt.points, "Number of sample points")->capture_default_str();
  app.add_option("--tol", opt.tol, "Positivity tolerance")->capture_default_str();
  app.add_option("--out", out_path, "Write output to this file instead of stdout");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string input;
  const auto add_doc_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("document", input, "Map document (JSON), or - for stdin")->required();
    return sub;
  };
  CLI::App* validate = add_doc_command("validate", "Check that the map is a self-map of the ball");
  CLI::App* classify_cmd = add_doc_command("classify", "Elliptic, parabolic or hyperbolic");
  CLI::App* specrad = add_doc_command("specrad", "Spectral radius estimates of C_phi");
  CLI::App* kernel = add_doc_command("kernel-check", "Positivity of the de Branges-Rovnyak kernel");
  CLI::App* normb = add_doc_command("normbounds", "Norm bounds for C_phi");
  CLI::App* factor = add_doc_command("factor", "Kernel factorization X, C, D");
  CLI::App* counter = app.add_subcommand("counterexample", "Restricted-convergence counterexample");
  counter->add_option("--alpha", opt.alpha, "Dilatation coefficient in (0, 1)")
      ->capture_default_str();
  counter->add_option("--m", opt.m, "Dimension, at least 2")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }
  opt.beta = beta;
  if (beta && !(*beta >= 1.0 && std::isfinite(*beta))) {
    err << "error: --beta must be a finite number >= 1\n";
    return kExitSchema;
  }

  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    CommandOutput result;
    if (counter->parsed()) {
      if (!(opt.alpha > 0.0 && opt.alpha < 1.0) || opt.m < 2) {
        err << "error: counterexample needs 0 < alpha < 1 and m >= 2\n";
        return kExitSchema;
      }
      result = cmd_counterexample(opt);
    } else {
      const std::string text = read_input(input);
      const MapDocument doc = parse_document(text);
      const std::string digest = fnv1a_hex(text);
      if (validate->parsed()) result = cmd_validate(doc, digest, opt);
      else if (classify_cmd->parsed()) result = cmd_classify(doc, digest, opt);
      else if (specrad->parsed()) result = cmd_specrad(doc, digest, opt);
      else if (kernel->parsed()) result = cmd_kernel_check(doc, digest, opt);
      else if (normb->parsed()) result = cmd_normbounds(doc, digest, opt);
      else if (factor->parsed()) result = cmd_factor(doc, digest, opt);
    }
    if (format == "csv") {
      if (!result.csv) {
        err << "error: " << result.report["command"].get<std::string>()
            << " has no CSV output\n";
        return kExitSchema;
      }
      emit(result.csv->str(), out_path, out);
    } else {
      emit(render(std::move(result.report), elapsed()), out_path, out);
    }
    return kExitOk;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    out << render(e.report(), elapsed());
    return kExitInvariant;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace lfball::cli
