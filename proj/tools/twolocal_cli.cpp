// Command-line front end. Every command prints one JSON report on stdout.
// Exit codes: 0 success/pass, 1 mathematical failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "twolocal/twolocal.hpp"

namespace {

using namespace twolocal;
using json::Json;

constexpr int kMathFailure = 1;
constexpr int kUsageError = 2;

int emit(const Json& report, bool pass) {
  std::cout << report.dump(2) << "\n";
  return pass ? 0 : kMathFailure;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && s[p] == '{';
}

/// A --map argument: inline JSON, a JSON file, or a value-table file.
MapOracle load_map(const std::string& arg) {
  const std::string text = looks_like_json(arg) ? arg : read_file(arg);
  if (looks_like_json(text)) {
    Json j = Json::parse(text);
    if (j.contains("kind")) {
      Derivation d = json::derivation_from(j);
      if (auto* w = std::get_if<W22Derivation>(&d)) return MapOracle::from(*w);
      return MapOracle::from(std::get<ThinDerivation>(d));
    }
    return MapOracle::from(json::two_local_map_from(j));
  }
  std::istringstream in(text);
  ValueTable t = read_value_table(in);
  return MapOracle::table(t.algebra, std::move(t.values));
}

std::vector<Element> load_probes(const std::string& path, AlgebraId alg) {
  std::istringstream in(read_file(path));
  return read_probes(in, alg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with W(2,2), the thin Lie algebra and their 2-local derivations"};
  app.require_subcommand(1);

  std::string algebra_name = "w22";
  const auto algebra_check = CLI::IsMember({"w22", "thin"});
  std::int64_t window = 0;

  std::string a, b;
  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket_cmd->add_option("--algebra", algebra_name)->required()->check(algebra_check);
  bracket_cmd->add_option("a", a)->required();
  bracket_cmd->add_option("b", b)->required();

  std::string derivation_text, element_text;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a derivation literal to an element");
  apply_cmd->add_option("--derivation", derivation_text, "JSON derivation literal")->required();
  apply_cmd->add_option("element", element_text)->required();

  auto* solve_cmd = app.add_subcommand("solve-der", "Windowed derivation space");
  solve_cmd->add_option("--algebra", algebra_name)->required()->check(algebra_check);
  solve_cmd->add_option("--window", window)->required()->check(CLI::Range(3, 64));

  std::string x, vx, y, vy;
  auto* witness_cmd = app.add_subcommand("witness", "Derivation d with d(x) = vx and d(y) = vy");
  witness_cmd->add_option("--algebra", algebra_name)->required()->check(algebra_check);
  witness_cmd->add_option("--x", x)->required();
  witness_cmd->add_option("--vx", vx)->required();
  witness_cmd->add_option("--y", y)->required();
  witness_cmd->add_option("--vy", vy)->required();
  witness_cmd->add_option("--window", window)->required()->check(CLI::PositiveNumber);

  std::string map_arg, probes_path;
  auto* verify_cmd = app.add_subcommand("verify-2local", "Check the 2-local property on every pair of probes");
  verify_cmd->add_option("--map", map_arg, "JSON literal, JSON file or value-table file")->required();
  verify_cmd->add_option("--probes", probes_path, "one element per line")->required();
  verify_cmd->add_option("--window", window)->required()->check(CLI::PositiveNumber);

  auto* decompose_cmd = app.add_subcommand("decompose-w22", "Reconstruct a W(2,2) 2-local map as a derivation");
  decompose_cmd->add_option("--map", map_arg, "value-table file")->required();
  decompose_cmd->add_option("--window", window)->required()->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--verify", probes_path, "one element per line")->required();

  auto* classify_cmd = app.add_subcommand("classify-thin", "Recover delta + Omega from a thin 2-local map");
  classify_cmd->add_option("--map", map_arg, "JSON literal, JSON file or value-table file")->required();
  classify_cmd->add_option("--window", window)->required()->check(CLI::Range(6, 1000));

  std::string case_id;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a named reproduction case, or all of them");
  reproduce_cmd->add_option("--case", case_id)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    const AlgebraId alg = parse_algebra(algebra_name);

    if (*bracket_cmd) {
      Element r = bracket(parse_element(a, alg), parse_element(b, alg));
      return emit(Json{{"result", r.str()}}, true);
    }
    if (*apply_cmd) {
      Derivation d = json::derivation_from(Json::parse(derivation_text));
      Element in = parse_element(element_text, algebra_of(d));
      return emit(Json{{"derivation", json::to_json(d)}, {"input", in.str()}, {"result", twolocal::apply(d, in).str()}}, true);
    }
    if (*solve_cmd) {
      DerivationSpace s = solve_derivation_space(alg, window);
      Json out{{"check", "solve_der"}, {"status", "pass"}};
      out.update(json::to_json(s));
      return emit(out, true);
    }
    if (*witness_cmd) {
      Element ex = parse_element(x, alg), evx = parse_element(vx, alg);
      Element ey = parse_element(y, alg), evy = parse_element(vy, alg);
      auto w = witness_find(alg, ex, evx, ey, evy, window);
      Json out{{"check", "witness"}, {"status", w ? "feasible" : "infeasible"}};
      out["x"] = ex.str();
      out["vx"] = evx.str();
      out["y"] = ey.str();
      out["vy"] = evy.str();
      if (w) out["witness"] = json::to_json(*w);
      return emit(out, w.has_value());
    }
    if (*verify_cmd) {
      MapOracle map = load_map(map_arg);
      CheckReport rep = is_two_local_on_set(map, load_probes(probes_path, map.algebra()), window);
      return emit(json::to_json(rep), rep.pass);
    }
    if (*decompose_cmd) {
      MapOracle map = load_map(map_arg);
      if (map.algebra() != AlgebraId::W22) throw AlgebraMismatch("decompose-w22 needs a W(2,2) map");
      DecomposeResult res = decompose_w22_two_local(map, window, load_probes(probes_path, AlgebraId::W22));
      return emit(json::to_json(res), res.ok());
    }
    if (*classify_cmd) {
      MapOracle map = load_map(map_arg);
      if (map.algebra() != AlgebraId::Thin) throw AlgebraMismatch("classify-thin needs a thin-algebra map");
      ClassifyResult res = classify_thin_two_local(map, window);
      return emit(json::to_json(res), res.ok());
    }
    if (*reproduce_cmd) {
      Json out = reproduce::run(case_id);
      return emit(out, out["status"] == "pass");
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
