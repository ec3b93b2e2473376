#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torsig/acceptance.hpp"
#include "torsig/analysis.hpp"
#include "torsig/error.hpp"
#include "torsig/generators.hpp"
#include "torsig/serialize.hpp"

using namespace torsig;

namespace {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;
constexpr int kNotSimple = 3;
constexpr int kOddDimension = 4;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_input(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidInput, "input is not valid JSON");
  return j;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSimple: return kNotSimple;
    case ErrorCode::OddDimension: return kOddDimension;
    case ErrorCode::StepLimit: return kFailure;
    default: return kInvalid;
  }
}

void emit(const Json& j, bool pretty) { std::cout << dump(j, pretty) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charney-Davis signatures and normal fan convexity of simple rational polytopes"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON output");

  std::string input;
  std::string gen_name;
  std::optional<std::size_t> gen_n, gen_d;
  auto* gen = app.add_subcommand("gen", "Emit a generated polytope");
  gen->add_option("name", gen_name, "cube, permutohedron, associahedron, a polygon preset or a corpus name")->required();
  gen->add_option("--n", gen_n, "Size parameter");
  gen->add_option("--d", gen_d, "Dimension");

  bool chow = false;
  std::string forced;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for a polytope");
  analyze_cmd->add_option("input", input, "Polytope JSON file (default: standard input)");
  analyze_cmd->add_flag("--chow", chow, "Also compute the signature from intersection numbers");
  analyze_cmd->add_option("--case", forced, "Force a bound case")->check(CLI::IsMember({"i", "ii", "iii"}));

  auto* bounds_cmd = app.add_subcommand("bounds", "Lower bound for (-1)^(d/2) sigma");
  bounds_cmd->add_option("input", input, "Polytope JSON file (default: standard input)");
  bounds_cmd->add_option("--case", forced, "Force a bound case")->check(CLI::IsMember({"i", "ii", "iii"}));

  bool terms = false;
  auto* chow_cmd = app.add_subcommand("chow-signature", "Signature from the toric L-class");
  chow_cmd->add_option("input", input, "Polytope or fan JSON file (default: standard input)");
  chow_cmd->add_flag("--terms", terms, "List every monomial term");

  auto* mirror_cmd = app.add_subcommand("mirror", "Euler characteristic of the mirror manifold");
  mirror_cmd->add_option("input", input, "Polytope JSON file (default: standard input)");

  bool perm7 = false;
  auto* verify_cmd = app.add_subcommand("corpus-verify", "Run the acceptance suite");
  verify_cmd->add_flag("--perm7", perm7, "Include the seven-letter permutohedron");

  for (auto* sub : {gen, analyze_cmd, bounds_cmd, chow_cmd, mirror_cmd, verify_cmd})
    sub->add_flag("--pretty", pretty, "Indent the JSON output");

  CLI11_PARSE(app, argc, argv);

  std::optional<TheoremCase> forced_case;
  try {
    if (!forced.empty()) forced_case = parse_theorem_case(forced);

    if (gen->parsed()) {
      emit(to_json(generate(gen_name, gen_n, gen_d)), pretty);
      return kOk;
    }

    if (analyze_cmd->parsed()) {
      const Polytope p = polytope_from_json(read_input(input));
      const AnalysisReport r = analyze(p, {chow, forced_case});
      emit(to_json(r), pretty);
      return r.simple ? kOk : kNotSimple;
    }

    if (bounds_cmd->parsed()) {
      const Polytope p = full_dimensional(polytope_from_json(read_input(input)));
      if (p.intrinsic_dim() % 2 != 0) throw Error(ErrorCode::OddDimension, "bounds need even dimension");
      const Fan fan = normal_fan(p);
      emit(to_json(bound_report(f_vector(p), classify(fan).overall, m_of(fan), forced_case)), pretty);
      return kOk;
    }

    if (chow_cmd->parsed()) {
      const Json j = read_input(input);
      const Fan fan = j.contains("rays") ? fan_from_json(j) : normal_fan(full_dimensional(polytope_from_json(j)));
      emit(to_json(chow_signature(fan), terms), pretty);
      return kOk;
    }

    if (mirror_cmd->parsed()) {
      emit(to_json(mirror(polytope_from_json(read_input(input)))), pretty);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      AcceptanceOptions options;
      options.permutohedron7 = perm7;
      const AcceptanceReport r = run_acceptance(options);
      emit(to_json(r), pretty);
      return r.passed() ? kOk : kFailure;
    }
  } catch (const Error& e) {
    std::cerr << "torsig: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "torsig: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
