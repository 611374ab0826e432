// Command line front end: exact Hecke operators on truncated power series
// and hypergeometric functions.
//
// Exit codes: 0 success, 1 verification suite failure, 2 malformed input,
// 3 illegal values, 4 oracle mismatch.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hecke/errors.hpp"
#include "hecke/hecke_action.hpp"
#include "hecke/io.hpp"
#include "hecke/multiplicative.hpp"
#include "hecke/spectral.hpp"
#include "hecke/verify.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw hecke::ParseError("cannot open input file \"" + path + "\"");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

int run_expand(const std::string& input, std::size_t order) {
  hecke::HypSeries h = hecke::io::hyp_from_document(read_input(input));
  std::cout << hecke::io::to_document(h.expand(order));
  return 0;
}

int run_apply(const std::string& input, unsigned long n, const std::string& mode,
              std::size_t order) {
  hecke::HypSeries h = hecke::io::hyp_from_document(read_input(input));
  if (mode == "numeric") {
    hecke::TruncatedSeries wide = h.expand(n == 0 ? order : n * order);
    std::cout << hecke::io::to_document(hecke::decimate(wide, n));
    return 0;
  }
  hecke::HypSeries image = hecke::decimate(h, n).canonical();
  // Always confirm the symbolic image against plain coefficient decimation
  // before printing it.
  hecke::TruncatedSeries symbolic = image.expand(order);
  hecke::TruncatedSeries numeric =
      hecke::decimate(h.expand(n * order + n), n).truncated(order);
  if (symbolic != numeric)
    throw hecke::OracleMismatchError(
        "symbolic image disagrees with numeric decimation up to order " +
        std::to_string(order));
  std::cout << hecke::io::to_document(image);
  return 0;
}

int run_classify(const std::string& input) {
  hecke::HypSeries h = hecke::io::hyp_from_document(read_input(input));
  std::cout << hecke::io::to_document(hecke::classify_eigen(h));
  return 0;
}

int run_cm(const std::string& upper_text, const std::string& lower_text,
           std::size_t depth) {
  std::vector<hecke::GaussianRational> upper =
      hecke::io::parse_scalar_list(upper_text);
  std::vector<hecke::GaussianRational> lower =
      hecke::io::parse_scalar_list(lower_text);
  std::cout << hecke::io::to_document(hecke::classify_cm(upper, lower, depth));
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed) {
  const std::vector<std::string>& names = hecke::verify::suite_names();
  std::vector<std::string> to_run;
  if (suite.empty()) {
    to_run = names;
  } else {
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw hecke::IllegalParameterError("unknown verification suite \"" +
                                         suite + "\"");
    to_run.push_back(suite);
  }

  bool all_passed = true;
  for (const std::string& name : to_run) {
    try {
      hecke::verify::SuiteResult result = hecke::verify::run_suite(name, seed);
      if (result.passed) {
        std::cout << result.suite << ": PASS (" << result.cases_run << " cases";
        if (!result.detail.empty()) std::cout << "; " << result.detail;
        std::cout << ")\n";
      } else {
        std::cout << result.suite << ": FAIL after " << result.cases_run
                  << " cases: " << result.detail << "\n";
        all_passed = false;
      }
    } catch (const hecke::Error& e) {
      std::cout << name << ": FAIL (" << e.what() << ")\n";
      all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Hecke operators on truncated power series and hypergeometric "
      "functions"};
  app.require_subcommand(1);

  std::string expand_input;
  std::size_t expand_order = 16;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "Expand a hypergeometric document into a truncated series");
  expand_cmd->add_option("input", expand_input,
                         "input document path ('-' or omitted: stdin)");
  expand_cmd->add_option("--order", expand_order, "truncation order");

  std::string apply_input;
  unsigned long apply_n = 2;
  std::string apply_mode = "symbolic";
  std::size_t apply_order = 8;
  CLI::App* apply_cmd = app.add_subcommand(
      "apply", "Apply the coefficient decimation operator to a document");
  apply_cmd->add_option("input", apply_input,
                        "input document path ('-' or omitted: stdin)");
  apply_cmd->add_option("--n", apply_n, "decimation index");
  apply_cmd->add_option("--mode", apply_mode, "symbolic or numeric")
      ->check(CLI::IsMember({"symbolic", "numeric"}));
  apply_cmd->add_option("--order", apply_order,
                        "output order (and symbolic verification depth)");

  std::string classify_input;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "Decide whether a hypergeometric document is a decimation "
                  "eigenfunction");
  classify_cmd->add_option("input", classify_input,
                           "input document path ('-' or omitted: stdin)");

  std::string cm_upper;
  std::string cm_lower;
  std::size_t cm_depth = 60;
  CLI::App* cm_cmd = app.add_subcommand(
      "cm", "Test a Pochhammer-ratio coefficient sequence for complete "
            "multiplicativity");
  cm_cmd->add_option("--upper", cm_upper, "comma-separated upper parameters");
  cm_cmd->add_option("--lower", cm_lower, "comma-separated lower parameters");
  cm_cmd->add_option("--n", cm_depth, "probe depth");

  std::string verify_suite;
  std::uint64_t verify_seed = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the randomized verification suites");
  verify_cmd->add_option("--suite", verify_suite,
                         "suite name (default: run all)");
  verify_cmd->add_option("--seed", verify_seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand_cmd->parsed()) return run_expand(expand_input, expand_order);
    if (apply_cmd->parsed())
      return run_apply(apply_input, apply_n, apply_mode, apply_order);
    if (classify_cmd->parsed()) return run_classify(classify_input);
    if (cm_cmd->parsed()) return run_cm(cm_upper, cm_lower, cm_depth);
    if (verify_cmd->parsed()) return run_verify(verify_suite, verify_seed);
  } catch (const hecke::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hecke::OracleMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const hecke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
