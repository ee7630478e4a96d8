// Command-line driver: verify the identity suite, certify convexity of
// quadratic problems, run the closed-form and iterative solvers, and
// generate synthetic demo datasets. Exit codes: 0 success, 1 certificate or
// solve failure, 2 malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "quatopt/convexity.hpp"
#include "quatopt/demo.hpp"
#include "quatopt/optimize.hpp"
#include "quatopt/serialization.hpp"
#include "quatopt/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw quatopt::ParseError("cannot write file: " + path);
  out << content;
}

void emit(const nlohmann::json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) write_file(out_path, text);
}

double parse_snr(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "Inf") {
    return std::numeric_limits<double>::infinity();
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw quatopt::ParseError("snr-db must be a number or 'inf'");
  }
  if (used != text.size()) throw quatopt::ParseError("snr-db must be a number or 'inf'");
  return value;
}

int run_verify(std::uint64_t seed, std::size_t samples, const std::string& out_path,
               bool timings) {
  const quatopt::RunReport report = quatopt::run_verification(seed, samples);
  std::cout << quatopt::format_report(report, timings);
  if (!out_path.empty())
    write_file(out_path, quatopt::report_to_json(report, timings).dump(2) + "\n");
  return report.all_passed() ? 0 : 1;
}

int run_check(const std::string& file, bool with_sampling, std::size_t samples,
              std::uint64_t seed, const std::string& out_path) {
  const nlohmann::json j = quatopt::load_json_file(file);
  const quatopt::QuadraticObjective obj =
      quatopt::decode_objective(j.is_object() && j.contains("objective") ? j["objective"] : j);
  const quatopt::Certificate cert = quatopt::check_second_order_quadratic(obj);

  nlohmann::json doc = quatopt::encode(cert);
  if (with_sampling) {
    const auto f = [&obj](const quatopt::QVector& q) { return obj.evaluate(q); };
    const auto grad = [&obj](const quatopt::QVector& q) { return obj.gradient_conjugate(q); };
    const auto dom = quatopt::SampledDomain::all_space(obj.dim(), samples, seed);
    quatopt::PairList seeded;
    if (cert.witness) seeded.push_back({cert.witness->p, cert.witness->q});
    doc["first_order"] = quatopt::encode(quatopt::check_first_order(f, grad, dom, seeded));
    doc["gradient_monotonicity"] =
        quatopt::encode(quatopt::check_monotonicity(f, grad, dom, seeded));
  }
  emit(doc, out_path);
  return cert.verdict == quatopt::Verdict::Certified ? 0 : 1;
}

int run_solve(const std::string& kind, const std::string& file, std::optional<double> step,
              double tol, int max_iter, const std::string& out_path) {
  const nlohmann::json j = quatopt::load_json_file(file);
  quatopt::SolveResult result{quatopt::QVector(1)};
  if (kind == "wiener") {
    const quatopt::ConstrainedQP prob = quatopt::decode_problem(j);
    result = quatopt::wiener_solve(prob.objective.R(), prob.objective.p());
  } else if (kind == "projection") {
    if (!j.is_object() || !j.contains("A") || !j.contains("b") || !j.contains("y"))
      throw quatopt::ParseError("projection problem needs A, b and y");
    result = quatopt::affine_projection(quatopt::decode_qmatrix(j["A"]),
                                        quatopt::decode_qvector(j["b"]),
                                        quatopt::decode_qvector(j["y"]));
  } else if (kind == "mvdr") {
    if (!j.is_object() || !j.contains("R") || !j.contains("a"))
      throw quatopt::ParseError("mvdr problem needs R and a");
    result = quatopt::mvdr_beamform(quatopt::decode_qmatrix(j["R"]),
                                    quatopt::decode_qvector(j["a"]));
  } else if (kind == "descent") {
    const quatopt::ConstrainedQP prob = quatopt::decode_problem(j);
    quatopt::QVector q0(prob.objective.dim());
    if (j.is_object() && j.contains("q0")) {
      q0 = quatopt::decode_qvector(j["q0"]);
      if (q0.size() != prob.objective.dim())
        throw quatopt::ParseError("q0 length disagrees with the objective");
    }
    const double s = step ? *step : quatopt::safe_step(prob.objective);
    result = quatopt::projected_gradient(prob, q0, s, tol, max_iter);
  } else {
    throw quatopt::ParseError("unknown solve kind: " + kind);
  }
  emit(quatopt::encode(result), out_path);
  return 0;
}

int run_demo_cmd(const std::string& scenario, std::size_t n, std::size_t snapshots,
                 const std::string& snr, std::uint64_t seed, const std::string& out_prefix) {
  quatopt::DemoConfig cfg;
  cfg.scenario = quatopt::scenario_from_string(scenario);
  cfg.n = n;
  cfg.snapshots = snapshots;
  cfg.snr_db = parse_snr(snr);
  cfg.seed = seed;
  const quatopt::DemoResult result = quatopt::run_demo(cfg);
  write_file(out_prefix + ".csv", result.csv);
  write_file(out_prefix + ".json", result.summary.dump(2) + "\n");
  std::cout << result.summary.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion convex optimization toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string out_path;
  bool timings = false;

  auto* verify = app.add_subcommand("verify", "run the full identity and oracle suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "instances per identity")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_flag("--timings", timings, "include per-check timings (not byte-reproducible)");

  std::string problem_file;
  bool with_sampling = false;
  std::uint64_t check_seed = 1;
  std::size_t check_samples = 1000;
  std::string check_out;

  auto* check = app.add_subcommand("check", "certify convexity of a quadratic objective");
  check->add_option("problem", problem_file, "problem JSON file")->required();
  check->add_flag("--sample", with_sampling, "also run the sampling refuters");
  check->add_option("--samples", check_samples, "pairs per sampling refuter")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", check_seed, "sampling seed");
  check->add_option("--out", check_out, "write the certificate here");

  std::string solve_kind;
  std::string solve_file;
  std::optional<double> step;
  double tol = 1e-9;
  int max_iter = 200000;
  std::string solve_out;

  auto* solve = app.add_subcommand("solve", "run a closed-form or iterative solver");
  solve->add_option("kind", solve_kind, "one of wiener|projection|mvdr|descent")->required();
  solve->add_option("problem", solve_file, "problem JSON file")->required();
  solve->add_option("--step", step, "descent step (default: safe step)");
  solve->add_option("--tol", tol, "gradient stopping tolerance");
  solve->add_option("--max-iter", max_iter, "iteration cap")->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_out, "write the result here");

  std::string scenario;
  std::size_t demo_n = 4;
  std::size_t demo_snapshots = 400;
  std::string snr = "20";
  std::uint64_t demo_seed = 1;
  std::string demo_out;

  auto* demo = app.add_subcommand(
      "demo", "generate a synthetic dataset, solve it, and emit CSV + JSON.\n"
              "CSV columns: filter -> iter,objective,grad_norm,error_to_wiener;\n"
              "projection -> index + y and x quadruples; beamform -> index + a and w quadruples");
  demo->add_option("scenario", scenario, "one of filter|projection|beamform")->required();
  demo->add_option("--n", demo_n, "problem dimension")->check(CLI::PositiveNumber);
  demo->add_option("--snapshots", demo_snapshots, "snapshot count (>= 10*n)")
      ->check(CLI::PositiveNumber);
  demo->add_option("--snr-db", snr, "signal-to-noise ratio in dB, or 'inf'");
  demo->add_option("--seed", demo_seed, "dataset seed");
  demo->add_option("--out", demo_out, "output prefix (writes <prefix>.csv and <prefix>.json)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(seed, samples, out_path, timings);
    if (check->parsed())
      return run_check(problem_file, with_sampling, check_samples, check_seed, check_out);
    if (solve->parsed()) return run_solve(solve_kind, solve_file, step, tol, max_iter, solve_out);
    if (demo->parsed())
      return run_demo_cmd(scenario, demo_n, demo_snapshots, snr, demo_seed, demo_out);
  } catch (const quatopt::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const quatopt::BadScenario& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const quatopt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
