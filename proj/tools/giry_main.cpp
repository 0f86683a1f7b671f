#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "giry/errors.hpp"
#include "giry/laws.hpp"
#include "giry/model_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;
constexpr int kInvariantBreach = 3;

int run_infer(const std::string& model_path, const std::string& method_name,
              const std::string& out_path) {
  giry::LoadedModel loaded = giry::load_model_file(model_path);
  giry::Method method = method_name == "rn" ? giry::Method::rn : giry::Method::decomp;
  giry::InferenceResult result = giry::infer(loaded.bayes, method);
  std::string report = giry::format_report(result);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw giry::ParseError(out_path + ": cannot write file");
    out << report;
  }
  return kOk;
}

int run_verify(const std::string& model_path, const std::string& candidate_path) {
  giry::LoadedModel loaded = giry::load_model_file(model_path);
  giry::Kernel candidate = giry::load_candidate_file(candidate_path, loaded.bayes);
  auto witness = giry::bayes_witness(loaded.bayes, candidate);
  if (!witness) {
    std::cout << "verified: candidate satisfies the Bayes equation exactly\n";
    return kOk;
  }
  const giry::Space& pairs = witness->zeta.space();
  std::cout << "FAILED: Bayes equation broken at zeta = {"
            << pairs.point(witness->zeta.members().front()) << "}\n"
            << "  joint(zeta)              = " << giry::to_string(witness->joint_mass) << "\n"
            << "  (candidate * P_Y)(zeta)  = " << giry::to_string(witness->candidate_mass)
            << "\n";
  return kVerifyFailed;
}

int run_law_suites(std::uint64_t seed, int max_points, int trials) {
  giry::LawsConfig config;
  config.seed = seed;
  config.max_points = static_cast<giry::Index>(max_points);
  config.trials = trials;
  giry::LawsReport report = giry::run_laws(config);
  std::cout << giry::format_laws(report);
  return report.all_passed() ? kOk : kInvariantBreach;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bayesian inversion for finite probability models"};
  app.require_subcommand(1);

  std::string model_path;
  std::string out_path;
  std::string candidate_path;
  std::string method_name;
  std::uint64_t seed = 1;
  int max_points = 4;
  int trials = 200;

  CLI::App* infer_cmd =
      app.add_subcommand("infer", "Run inference on a model file and emit a report");
  infer_cmd->add_option("--model", model_path, "model file (JSON)")->required();
  infer_cmd->add_option("--method", method_name, "rn or decomp")
      ->required()
      ->check(CLI::IsMember({"rn", "decomp"}));
  infer_cmd->add_option("--out", out_path, "write the report here instead of standard output");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a candidate inference map against a model");
  verify_cmd->add_option("--model", model_path, "model file (JSON)")->required();
  verify_cmd->add_option("--candidate", candidate_path, "candidate kernel or report file")
      ->required();

  CLI::App* laws_cmd = app.add_subcommand("laws", "Run the randomized exact law suites");
  laws_cmd->add_option("--seed", seed, "stream seed");
  laws_cmd->add_option("--max-points", max_points, "largest space size")
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--trials", trials, "cases per law")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (infer_cmd->parsed()) return run_infer(model_path, method_name, out_path);
    if (verify_cmd->parsed()) return run_verify(model_path, candidate_path);
    return run_law_suites(seed, max_points, trials);
  } catch (const giry::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariantBreach;
  } catch (const giry::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kInvariantBreach;
  }
}
