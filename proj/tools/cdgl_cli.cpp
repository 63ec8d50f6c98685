// Command-line front end. Talks to the engine exclusively through the
// extern-C API; rendering beyond what the library provides is plain text or
// JSON assembled here. Exit codes: 0 success / all checks pass, 1 failure,
// 2 input error.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "../vendor/CLI11.hpp"
#include "../vendor/json.hpp"
#include "cdgl.h"

namespace {

using Json = nlohmann::ordered_json;

int input_error() {
  std::cerr << "error: " << cdgl_last_error() << "\n";
  return 2;
}

int internal_error() {
  std::cerr << "error: " << cdgl_last_error() << "\n";
  return 1;
}

int report(cdgl_status st) {
  return st == CDGL_ERR_INVALID_ARGUMENT ? input_error() : internal_error();
}

std::string take(char* s) {
  std::string r = s;
  cdgl_string_free(s);
  return r;
}

int run_build(int n, int truncation, const std::string& out_path) {
  cdgl_model* m = nullptr;
  if (cdgl_status st = cdgl_model_build(n, truncation, 0, &m); st != CDGL_OK)
    return report(st);
  char* text = nullptr;
  cdgl_status st = cdgl_model_to_json(m, &text);
  cdgl_model_free(m);
  if (st != CDGL_OK) return report(st);
  std::string body = take(text);
  if (out_path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return 2;
  }
  out << body;
  return out.good() ? 0 : internal_error();
}

int run_verify(const std::string& suite, int truncation, int cap, int seed,
               const std::string& model, const std::string& format,
               bool timings) {
  cdgl_report* r = nullptr;
  if (cdgl_status st =
          cdgl_suite_run(suite.c_str(), truncation, cap, seed, model.c_str(), &r);
      st != CDGL_OK)
    return report(st);
  char* text = nullptr;
  cdgl_status st = cdgl_report_render(r, format == "json" ? 1 : 0,
                                      timings ? 1 : 0, &text);
  if (st != CDGL_OK) {
    cdgl_report_free(r);
    return report(st);
  }
  std::cout << take(text);
  int passed = cdgl_report_passed(r);
  cdgl_report_free(r);
  return passed ? 0 : 1;
}

int run_lambda(const std::string& input, int truncation, int cap,
               const std::string& format) {
  std::ifstream in(input, std::ios::binary);
  if (!in.good()) {
    std::cerr << "error: cannot read \"" << input << "\"\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  char* out = nullptr;
  if (cdgl_status st = cdgl_lambda_homology(text.c_str(), truncation, cap, &out);
      st != CDGL_OK)
    return report(st);
  Json dims = Json::parse(take(out));
  if (format == "json") {
    Json j{{"truncation", truncation}, {"cap", cap}, {"dims", dims}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < dims.size(); ++i)
      std::cout << "degree " << i + 1 << ": " << dims[i].get<int>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact models of simplices as complete differential graded Lie "
      "algebras, with verification suites and loop-algebra homology."};
  app.require_subcommand(1);

  int truncation = 4;
  int cap = 3;
  int seed = 0;
  std::string model = "s2";
  std::string format = "text";
  bool timings = false;
  std::string out_path;
  std::string input;
  int level = 0;

  CLI::App* build = app.add_subcommand(
      "build-ln", "Build the level-n simplex model and print or write its "
                  "presentation with the solver trace");
  build->add_option("n", level, "Simplex level (0..4)")->required();
  build->add_option("--truncation", truncation,
                    "Maximum bracket word length (level 4 is capped at 3)")
      ->capture_default_str();
  build->add_option("--out", out_path, "Write to this file instead of stdout");

  std::string suite;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification suite and report one line per check");
  verify->add_option("suite", suite,
                     "One of: lemma | ln-conditions | ez-aw | bch | phi | "
                     "homotopy | ce")
      ->required();
  verify->add_option("--truncation", truncation, "Maximum bracket word length")
      ->capture_default_str();
  verify->add_option("--cap", cap, "Top degree for cohomology tables")
      ->capture_default_str();
  verify->add_option("--seed", seed, "Seed for randomized instances")
      ->capture_default_str();
  verify->add_option("--model", model,
                     "Homotopy suite target: s2 | wedge")
      ->capture_default_str();
  verify->add_option("--format", format, "Output format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_flag("--timings", timings,
                   "Append wall-clock seconds per check (breaks byte-stable "
                   "output)");

  CLI::App* lambda = app.add_subcommand(
      "lambda", "Homology of the free loop Lie algebra of a finite "
                "simplicial set given as JSON");
  lambda->add_option("--input", input, "Simplicial-set JSON file")->required();
  lambda->add_option("--truncation", truncation, "Maximum bracket word length")
      ->capture_default_str();
  lambda->add_option("--cap", cap, "Top homology degree reported")
      ->capture_default_str();
  lambda->add_option("--format", format, "Output format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) return run_build(level, truncation, out_path);
  if (verify->parsed())
    return run_verify(suite, truncation, cap, seed, model, format, timings);
  return run_lambda(input, truncation, cap, format);
}
