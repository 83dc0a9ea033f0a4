// hh — Hochschild dimensions of bound quiver algebras and weighted curves.
//
//   hh algebra --input FILE [--method auto|complex|oracle] [--table]
//   hh curve --genus G --weights W1,W2,...
//   hh classify --weights W1,W2,...
//   hh companion --weights W1,W2,...
//   hh crosscheck --max-arms N --max-weight A [--with-oracle] [--corrupt-fixture]
//
// Exit codes: 0 ok, 1 cross-check mismatch, 2 parse error, 3 precondition.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hh/cli.hpp"

namespace {

using hh::cli::json;

void emit(const json& report, bool table) {
  if (table)
    std::cout << hh::cli::render_table(report);
  else
    std::cout << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild dimensions of bound quiver algebras and weighted projective curves"};
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "human-readable key/value output instead of JSON");

  std::string input, method = "auto";
  auto* algebra = app.add_subcommand("algebra", "HH of an algebra, family or genus-0 curve given as JSON");
  algebra->add_option("--input", input, "JSON input document")->required();
  algebra->add_option("--method", method, "auto, complex or oracle")
      ->check(CLI::IsMember({"auto", "complex", "oracle"}));
  algebra->add_flag("--table", table, "human-readable output");

  std::int64_t genus = 0;
  std::vector<std::int64_t> weights;
  auto* curve = app.add_subcommand("curve", "closed-form HH of a weighted projective curve");
  curve->add_option("--genus", genus, "genus g >= 0")->required();
  curve->add_option("--weights", weights, "weights e_i >= 2")->delimiter(',');
  curve->add_flag("--table", table, "human-readable output");

  auto* classify = app.add_subcommand("classify", "Euler characteristic, class and realization");
  classify->add_option("--weights", weights, "weights a_i >= 1")->delimiter(',');
  classify->add_flag("--table", table, "human-readable output");

  auto* companion = app.add_subcommand("companion", "projective companion invariants");
  companion->add_option("--weights", weights, "weights a_i >= 1")->delimiter(',')->required();
  companion->add_flag("--table", table, "human-readable output");

  hh::cli::CrosscheckOptions cc;
  auto* crosscheck = app.add_subcommand("crosscheck", "formula vs. complex vs. oracle over canonical algebras");
  crosscheck->add_option("--max-arms", cc.max_arms, "largest number of arms (>= 2)")->check(CLI::Range(2, 8));
  crosscheck->add_option("--max-weight", cc.max_weight, "largest weight")->check(CLI::Range(1, 8));
  crosscheck->add_flag("--with-oracle", cc.with_oracle, "also run the enveloping-algebra oracle within its cap");
  crosscheck->add_flag("--corrupt-fixture", cc.corrupt_fixture, "negative control: perturb one relation");
  crosscheck->add_flag("--table", table, "human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hh::cli::kOk : hh::cli::kParseError;
  }

  try {
    if (*algebra) {
      const json doc = hh::cli::read_json_file(input);
      const auto a = hh::cli::parse_algebra_document(doc);
      emit(hh::cli::algebra_report(a, hh::cli::parse_method(method), doc), table);
    } else if (*curve) {
      hh::WeightedCurveSpec spec;
      spec.genus = genus;
      spec.weights = weights;
      emit(hh::cli::curve_report(spec), table);
    } else if (*classify) {
      emit(hh::cli::classify_report(weights), table);
    } else if (*companion) {
      emit(hh::cli::companion_report(weights), table);
    } else if (*crosscheck) {
      bool all_pass = true;
      emit(hh::cli::crosscheck_report(cc, all_pass), table);
      return all_pass ? hh::cli::kOk : hh::cli::kMismatch;
    }
  } catch (const hh::Error& e) {
    std::cerr << "hh: " << e.what() << '\n';
    return hh::cli::exit_code(e.kind());
  }
  return hh::cli::kOk;
}
