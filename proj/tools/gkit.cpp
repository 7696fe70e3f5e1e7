// Command-line front end: load groupoid/action/grading definitions, run the
// constructions and theorem verifiers, emit JSON reports.
//
// Exit codes: 0 ok; 1 validation/verification failure; 2 parse or structural
// error; 3 internal consistency error (an implementation bug, never expected
// on valid inputs).

#include "gkit/json_io.hpp"
#include "gkit/remarks.hpp"
#include "gkit/selftest.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace gkit;

bool verbose() {
  const char* v = std::getenv("GKIT_VERBOSE");
  return v && *v && std::string(v) != "0";
}

void note(const std::string& msg) {
  if (verbose()) std::cerr << "gkit: " << msg << "\n";
}

int write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write to " << output_path << "\n";
    return 2;
  }
  out << text << "\n";
  return 0;
}

int cmd_validate(const std::string& input, const std::string& output) {
  // parse without the validating wrapper so violations land in the report
  std::ifstream in(input);
  if (!in) throw structural_error("cannot open file: " + input);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  GroupoidPtr g = io::parse_groupoid_json(text);
  GroupoidReport rep = validate(*g);
  int rc = write_output(io::groupoid_report_to_json(rep), output);
  if (rc) return rc;
  return rep.ok ? 0 : 1;
}

int cmd_build(const std::string& kind, const std::string& input, const std::string& output) {
  if (kind == "kg" || kind == "kgdual") {
    GroupoidPtr g = io::load_groupoid_file(input);
    if (kind == "kg") return write_output(io::algebra_to_json(*build_kg(g).algebra), output);
    return write_output(io::algebra_to_json(*build_kgdual(g).algebra), output);
  }
  if (kind == "skew") {
    GroupoidAction a = io::load_action_file(input);
    SkewGroupoidRing sk = skew_ring(a);
    return write_output(io::algebra_to_json(*sk.algebra, &sk.grade), output);
  }
  if (kind == "smash") {
    GradedAlgebra graded = io::load_graded_file(input);
    SmashProduct s = smash(graded);
    nlohmann::json out;
    out["algebra"] = nlohmann::json::parse(io::algebra_to_json(*s.algebra));
    nlohmann::json pre = nlohmann::json::object();
    for (const auto& [l, c] : s.preunit.entries()) pre[l] = rational_to_string(c);
    out["preunit"] = pre;
    out["preunit_law"] = s.preunit_law_ok;
    // the coaction a ↦ a ⊗ u_{deg a} determined by the grading, as data
    nlohmann::json coaction = nlohmann::json::object();
    for (const auto& [l, arrow] : graded.grade) coaction[l] = arrow;
    out["coaction"] = coaction;
    out["unital"] = s.unital;
    if (s.right_annihilator) {
      out["right_annihilator"] = *s.right_annihilator;
      out["annihilator_verified"] = s.annihilator_verified;
    } else {
      out["note"] = "degenerate unital case: no annihilator witness exists";
    }
    return write_output(out.dump(2), output);
  }
  throw argument_error("unknown build kind: " + kind);
}

int cmd_theorem(const std::string& theorem, const std::string& input, const std::string& output,
                bool emit_iso) {
  if (theorem == "3.7") {
    GroupoidAction a = io::load_action_file(input);
    note("action loaded: |G| = " + std::to_string(a.groupoid->size()) +
         ", dim R = " + std::to_string(a.total->dim()));
    DualityReport rep = theorem37(a);
    note("decomposition: " + std::to_string(rep.blocks.size()) + " block(s), dim " +
         std::to_string(rep.dim_decomposed));
    int rc = write_output(io::duality_report_to_json(rep, emit_iso), output);
    if (rc) return rc;
    return rep.ok ? 0 : 1;
  }
  if (theorem == "4.5") {
    GradedAlgebra graded = io::load_graded_file(input);
    note("grading loaded: |G| = " + std::to_string(graded.groupoid->size()) +
         ", dim A = " + std::to_string(graded.algebra->dim()));
    DualityReport rep = theorem45(graded);
    note("decomposition: " + std::to_string(rep.blocks.size()) + " block(s), dim " +
         std::to_string(rep.dim_decomposed));
    int rc = write_output(io::duality_report_to_json(rep, emit_iso), output);
    if (rc) return rc;
    return rep.ok ? 0 : 1;
  }
  if (theorem == "5.2") {
    GroupoidAction a = io::load_action_file(input);
    note("action loaded: |G| = " + std::to_string(a.groupoid->size()));
    Theorem52Result res = theorem52(a);
    note("exact sequence checked: dim B = " + std::to_string(res.exact.dim_B) +
         ", dim D = " + std::to_string(res.exact.dim_D));
    int rc = write_output(io::exactness_report_to_json(res), output);
    if (rc) return rc;
    return res.ok ? 0 : 1;
  }
  throw argument_error("unknown theorem selector: " + theorem + " (expected 3.7, 4.5 or 5.2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for finite groupoid algebra decompositions"};
  app.require_subcommand(1);

  std::string input, output, theorem;
  bool emit_iso = false;
  int max_size = 8;

  auto* validate_cmd = app.add_subcommand("validate", "validate a groupoid JSON file");
  validate_cmd->add_option("input", input, "groupoid JSON file")->required();
  validate_cmd->add_option("-o,--output", output, "report path (default stdout)");

  auto* kg_cmd = app.add_subcommand("kg", "build the groupoid algebra KG");
  kg_cmd->add_option("input", input, "groupoid JSON file")->required();
  kg_cmd->add_option("-o,--output", output, "algebra JSON path");

  auto* kgdual_cmd = app.add_subcommand("kgdual", "build the dual algebra KG*");
  kgdual_cmd->add_option("input", input, "groupoid JSON file")->required();
  kgdual_cmd->add_option("-o,--output", output, "algebra JSON path");

  auto* skew_cmd = app.add_subcommand("skew", "build the skew groupoid ring R ⋆ G");
  skew_cmd->add_option("input", input, "action JSON file")->required();
  skew_cmd->add_option("-o,--output", output, "algebra JSON path");

  auto* smash_cmd = app.add_subcommand("smash", "build the weak smash product A # KG*");
  smash_cmd->add_option("input", input, "graded-algebra JSON file")->required();
  smash_cmd->add_option("-o,--output", output, "algebra JSON path");

  auto* decompose_cmd = app.add_subcommand("decompose", "matrix-block decomposition (3.7 / 4.5)");
  decompose_cmd->add_option("--theorem", theorem, "3.7 or 4.5")->required();
  decompose_cmd->add_option("input", input, "action (3.7) or graded-algebra (4.5) JSON file")
      ->required();
  decompose_cmd->add_option("-o,--output", output, "report path");
  decompose_cmd->add_flag("--emit-iso-matrices", emit_iso, "include the full isomorphism matrices");

  auto* verify_cmd = app.add_subcommand("verify", "verify a theorem (3.7, 4.5 or 5.2)");
  verify_cmd->add_option("--theorem", theorem, "3.7, 4.5 or 5.2")->required();
  verify_cmd->add_option("input", input, "action or graded-algebra JSON file")->required();
  verify_cmd->add_option("-o,--output", output, "report path");
  verify_cmd->add_flag("--emit-iso-matrices", emit_iso, "include the full isomorphism matrices");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in fixture suite");
  selftest_cmd->add_option("--max-size", max_size, "bound on |G| for the fixture family");
  selftest_cmd->add_option("-o,--output", output, "report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(input, output);
    if (app.got_subcommand(kg_cmd)) return cmd_build("kg", input, output);
    if (app.got_subcommand(kgdual_cmd)) return cmd_build("kgdual", input, output);
    if (app.got_subcommand(skew_cmd)) return cmd_build("skew", input, output);
    if (app.got_subcommand(smash_cmd)) return cmd_build("smash", input, output);
    if (app.got_subcommand(decompose_cmd)) {
      if (theorem == "5.2") throw argument_error("decompose handles 3.7 and 4.5; use verify for 5.2");
      return cmd_theorem(theorem, input, output, emit_iso);
    }
    if (app.got_subcommand(verify_cmd)) return cmd_theorem(theorem, input, output, emit_iso);
    if (app.got_subcommand(selftest_cmd)) {
      gkit::SelftestResult res = gkit::run_selftest(max_size);
      int rc = write_output(gkit::selftest_to_json(res), output);
      if (rc) return rc;
      return res.ok ? 0 : 1;
    }
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const gkit::structural_error& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return 2;
  } catch (const gkit::argument_error& e) {
    std::cerr << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const gkit::validation_error& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const gkit::internal_error& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
