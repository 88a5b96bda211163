// betamat: generate, analyze and verify beta-function matrices exactly.

#include "betamat/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct OutputOptions {
  std::string format = "json";
  std::string out;
};

int emit(const betamat::CommandResult& result, const OutputOptions& output) {
  const std::string text =
      output.format == "csv" ? betamat::report_to_csv(result.report) : betamat::to_json(result.report).dump(2) + "\n";
  if (output.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(output.out);
    if (!file) {
      throw betamat::UsageError("cannot write to '" + output.out + "'");
    }
    file << text;
  }
  return result.exit_code;
}

void add_output_flags(CLI::App* cmd, OutputOptions& output) {
  cmd->add_option("--format", output.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", output.out, "Write the report to this path instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact beta-function matrices: generation, analysis and verification"};
  app.set_version_flag("--version", std::string(betamat::kVersion));
  app.require_subcommand(1);

  OutputOptions output;

  betamat::GenRequest gen;
  long gen_n = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a structured matrix with exact entries");
  gen_cmd->add_option("kind", gen.kind, "Matrix kind")->required()->check(CLI::IsMember(betamat::gen_kinds()));
  auto* gen_n_pos = gen_cmd->add_option("size", gen_n, "Matrix order (same as --n)");
  auto* gen_n_opt = gen_cmd->add_option("--n", gen_n, "Matrix order");
  gen_n_pos->excludes(gen_n_opt);
  gen_cmd->add_option("--lambdas", gen.lambdas, "Comma separated rationals p/q (generalized)");
  gen_cmd->add_option("--mus", gen.mus, "Comma separated rationals p/q (generalized)");
  gen_cmd->add_option("--m", gen.m, "Hadamard exponent (generalized)");
  add_output_flags(gen_cmd, output);

  long analyze_n = 0;
  std::string matrix_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Determinant, inertia and inverse integrality");
  auto* analyze_n_opt = analyze_cmd->add_option("--n", analyze_n, "Analyze the n x n beta matrix");
  auto* analyze_file = analyze_cmd->add_option("--matrix", matrix_path, "Matrix file (.json or .csv)");
  analyze_n_opt->excludes(analyze_file);
  add_output_flags(analyze_cmd, output);

  betamat::VerifyRequest verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a closed form or theorem exactly");
  verify_cmd->add_option("theorem", verify.theorem, "Theorem label")
      ->required()
      ->check(CLI::IsMember(betamat::verify_theorems()));
  verify_cmd->add_option("--n", verify.n, "Single matrix order");
  verify_cmd->add_option("--n-max", verify.n_max, "Check orders 1..n-max");
  verify_cmd->add_option("--seed", verify.seed, "Seed for randomized sweeps");
  verify_cmd->add_option("--samples", verify.samples, "Number of random parameter samples");
  verify_cmd->add_option("--lambdas", verify.lambdas, "Comma separated rationals p/q");
  verify_cmd->add_option("--mus", verify.mus, "Comma separated rationals p/q");
  verify_cmd->add_option("--m", verify.m, "Hadamard exponent");
  add_output_flags(verify_cmd, output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return betamat::kExitUsage;
  }

  try {
    if (*gen_cmd) {
      if (gen_n_pos->count() + gen_n_opt->count() > 0) {
        gen.n = gen_n;
      }
      return emit(betamat::run_gen(gen), output);
    }
    if (*analyze_cmd) {
      std::optional<long> n;
      std::optional<betamat::Matrix> matrix;
      if (analyze_n_opt->count() > 0) {
        n = analyze_n;
      }
      if (analyze_file->count() > 0) {
        matrix = betamat::load_matrix_file(matrix_path);
      }
      return emit(betamat::run_analyze(n, matrix, matrix_path), output);
    }
    if (output.format == "csv") {
      throw betamat::UsageError("verify reports are JSON only");
    }
    return emit(betamat::run_verify(verify), output);
  } catch (const betamat::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return betamat::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return betamat::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return betamat::kExitFailure;
  }
}
