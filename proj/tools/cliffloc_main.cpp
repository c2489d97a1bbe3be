#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cliffloc/genus.hpp"
#include "cliffloc/verify.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

int cmd_verify(const std::string& suite, cliffloc::RunConfig cfg, const std::string& tau, const std::string& format,
               const std::string& out_path) {
  if (tau == "0")
    cfg.taus = {0};
  else if (tau == "1")
    cfg.taus = {1};
  else
    cfg.taus = {0, 1};

  cliffloc::VerificationReport report;
  try {
    report = cliffloc::run_suite(suite, cfg);
  } catch (const cliffloc::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string body = format == "json" ? cliffloc::to_json(report).dump(2) + "\n" : cliffloc::to_text(report);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kUsage;
    }
    out << body;
    std::cout << (report.ok() ? "pass" : "fail") << ": " << report.cases.size() << " cases written to " << out_path << "\n";
  }
  return report.ok() ? kPass : kFail;
}

int cmd_index(const std::string& path) {
  cliffloc::IndexModel m;
  try {
    m = cliffloc::load_model(path);
  } catch (const cliffloc::ModelParseError& e) {
    std::cerr << path << ": parse error at " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const cliffloc::IndexCheck c = cliffloc::index_doubling_check(m.ring, m.ch, m.x, m.a_hat);
  std::cout << "index_X = " << cliffloc::to_string(c.index_x) << "\n";
  std::cout << "index_Y = " << cliffloc::to_string(c.index_y) << "\n";
  std::cout << "2 index_X = index_Y: " << (c.equality ? "true" : "false") << "\n";
  for (const auto& v : c.violations) std::cout << "precondition violated: " << v << "\n";
  return c.holds() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clifford algebra and index verification toolkit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  cliffloc::RunConfig cfg;
  std::string tau = "both";
  std::string format = "text";
  std::string out_path;
  verify->add_option("suite", suite, "clifford | rep | cl3 | localization | genus | all")->required();
  verify->add_option("--n", cfg.n, "Scale parameter (0 unless --allow-large-n)");
  verify->add_option("--tau", tau, "0, 1 or both")->check(CLI::IsMember({"0", "1", "both"}));
  verify->add_option("--samples", cfg.samples, "Random samples per sampled check");
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  verify->add_option("--order", cfg.order, "Series truncation order");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "Write the report to a file");
  verify->add_flag("--allow-large-n", cfg.allow_large_n, "Permit n > 0 (very long runtimes)");
  verify->add_flag("--timing", cfg.include_timing, "Include wall time in the report");

  auto* index = app.add_subcommand("index", "Evaluate both index formulas for a model file");
  std::string model_path;
  index->add_option("model-file", model_path, "Model description")->required();

  app.add_subcommand("report-signs", "Print the computed eta squares beside the stated sign");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, cfg, tau, format, out_path);
    if (*index) return cmd_index(model_path);
    std::cout << cliffloc::format_sign_table(cliffloc::report_signs());
    return kPass;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
