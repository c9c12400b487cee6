// Command-line front end: sequence families, Catalan's triangle, graph
// construction, axiom checks, the feasibility gate, rule inference, path
// tables and conjecture verification.
//
// Exit codes: 0 success / feasible-so-far; 1 infeasible, contradiction or
// refutation evidence; 2 usage or size errors.

#include <catgraph/axioms.hpp>
#include <catgraph/build.hpp>
#include <catgraph/errors.hpp>
#include <catgraph/infer.hpp>
#include <catgraph/io.hpp>
#include <catgraph/ntable.hpp>
#include <catgraph/numbers.hpp>
#include <catgraph/sequences.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace catgraph;

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kUsage = 2;

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// ---------------------------------------------------------------- families

struct FamilyChoice {
  std::string kind;  // classic | fuss | super
  long long k = 0;   // fuss only
};

GraphFamily build_family(const FamilyChoice& choice, int n) {
  if (choice.kind == "classic") return build_classic(n);
  if (choice.kind == "fuss") {
    if (choice.k < 1) throw std::invalid_argument("fuss needs --k K with K >= 1");
    return build_fuss(n, Nat(choice.k));
  }
  return build_super(n);
}

SequenceSpec family_sequence(const GraphFamily& fam) {
  switch (fam.kind) {
    case GraphFamily::Kind::Classic: return SequenceSpec::catalan();
    case GraphFamily::Kind::Fuss: return SequenceSpec::fuss(fam.fuss_k);
    default: return SequenceSpec::super_catalan_row(0);
  }
}

// ------------------------------------------------------------- subcommands

int run_seq(const std::string& spec_text, int count) {
  const SequenceSpec spec = parse_sequence_spec(spec_text);
  std::size_t n = 10;
  if (count >= 0) {
    n = static_cast<std::size_t>(count);
  } else if (spec.max_terms()) {
    n = std::min(n, *spec.max_terms());
  }
  for (const Nat& value : sequence_values(spec, n)) std::cout << value.str() << "\n";
  return kOk;
}

int run_triangle(int rows, bool ab) {
  if (rows < 0) throw std::invalid_argument("--rows must be >= 0");
  if (ab) {
    // rows a = 1..rows; entry at column b is C(a-1,b) over a-b
    for (int a = 1; a <= rows; ++a) {
      for (int b = 0; b < a; ++b) {
        if (b) std::cout << " ";
        std::cout << catalan_triangle(a - 1, b).str() << "/" << a - b;
      }
      std::cout << "\n";
    }
  } else {
    for (int n = 0; n <= rows; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (k) std::cout << " ";
        std::cout << catalan_triangle(n, k).str();
      }
      std::cout << "\n";
    }
  }
  return kOk;
}

int emit_graphs(const GraphFamily& fam, int n, const std::string& format,
                bool expanded, const Nat& size_limit, std::ostream& out) {
  if (format == "dot") {
    const std::string name = fam.kind_name() + "_" + std::to_string(n);
    if (expanded) out << to_dot(expand(fam.at(n), size_limit), name);
    else out << to_dot(fam.at(n), name);
  } else {
    out << to_json(fam, expanded, size_limit, 2) << "\n";
  }
  return kOk;
}

int run_build(const FamilyChoice& choice, int n, const std::string& format,
              bool expanded, long long size_limit, const std::string& out_path) {
  const GraphFamily fam = build_family(choice, n);
  const Nat limit(size_limit);
  if (out_path.empty()) return emit_graphs(fam, n, format, expanded, limit, std::cout);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write to " + out_path);
  const int code = emit_graphs(fam, n, format, expanded, limit, out);
  std::cerr << "wrote " << out_path << "\n";
  return code;
}

int run_check_axioms(const FamilyChoice& choice, int n, std::string seq_text,
                     long long size_limit, const std::string& format) {
  const GraphFamily fam = build_family(choice, n);
  const Nat limit(size_limit);
  const SequenceSpec spec =
      seq_text.empty() ? family_sequence(fam) : parse_sequence_spec(seq_text);

  const Axiom1Report a1 = check_axiom1(fam, sequence_values(spec, static_cast<std::size_t>(n) + 1));
  std::vector<Axiom2Report> a2;
  std::vector<Axiom3Report> a3;
  for (int step = 0; step <= n; ++step) {
    a2.push_back(check_axiom2(fam, step, limit));
    a3.push_back(check_axiom3(fam, step));
  }

  bool fail = !a1.pass;
  bool skipped = false;
  for (const auto& report : a2) {
    fail = fail || report.status == Axiom2Report::Status::Fail;
    skipped = skipped || report.status == Axiom2Report::Status::SkippedSize;
  }
  for (const auto& report : a3) fail = fail || !report.pass;

  if (format == "json") {
    nlohmann::json j;
    j["family"] = fam.kind_name();
    if (fam.kind == GraphFamily::Kind::Fuss) j["k"] = fam.fuss_k.str();
    j["n"] = n;
    j["sequence"] = spec.name();
    j["axiom1"] = nlohmann::json::parse(to_json(a1));
    j["axiom2"] = nlohmann::json::array();
    for (const auto& report : a2) j["axiom2"].push_back(nlohmann::json::parse(to_json(report)));
    j["axiom3"] = nlohmann::json::array();
    for (const auto& report : a3) j["axiom3"].push_back(nlohmann::json::parse(to_json(report)));
    j["pass"] = !fail;
    j["skipped"] = skipped;
    std::cout << j.dump() << "\n";
    return fail ? kInfeasible : kOk;
  }

  std::cout << "family: " << fam.kind_name();
  if (fam.kind == GraphFamily::Kind::Fuss) std::cout << " (k = " << fam.fuss_k.str() << ")";
  std::cout << ", steps 0.." << n << "\n";

  std::cout << "axiom 1 (step counts match " << spec.name() << "): "
            << (a1.pass ? "pass" : "FAIL") << "\n";
  if (!a1.pass)
    for (const auto& step : a1.steps)
      if (!step.ok)
        std::cout << "  step " << step.n << ": expected " << step.expected.str()
                  << ", got " << step.actual.str() << "\n";

  std::cout << "axiom 2 (every subtree is a shifted earlier graph):\n";
  for (const auto& report : a2) {
    std::cout << "  step " << report.n << ": ";
    if (report.status == Axiom2Report::Status::SkippedSize) {
      std::cout << "not checked (size)\n";
      continue;
    }
    if (report.status == Axiom2Report::Status::Fail) {
      std::cout << "FAIL — label-" << report.counterexample->label
                << " subtree matches no earlier graph\n";
      continue;
    }
    std::cout << "pass (" << report.classes.size() << " subtree classes";
    bool unexpected = false;
    for (const auto& match : report.classes) unexpected = unexpected || !match.expected;
    if (unexpected) std::cout << ", some matched an unexpected step";
    std::cout << ")\n";
  }

  bool a3_pass = true;
  for (const auto& report : a3) a3_pass = a3_pass && report.pass;
  std::cout << "axiom 3 (all leaves carry the newest label): "
            << (a3_pass ? "pass" : "FAIL") << "\n";
  for (const auto& report : a3)
    if (!report.pass)
      std::cout << "  step " << report.n << ": " << report.offending.size()
                << " leaves with stale labels\n";

  std::cout << "result: " << (fail ? "FAIL" : "pass") << "\n";
  return fail ? kInfeasible : kOk;
}

int run_gate(const std::string& seq_text, int terms, const std::string& format) {
  const SequenceSpec spec = parse_sequence_spec(seq_text);
  const GateReport report = gate(spec, static_cast<std::size_t>(terms));

  if (format == "json") {
    std::cout << to_json(report) << "\n";
  } else {
    std::cout << "sequence: " << report.sequence_name << "\n";
    std::cout << "terms: " << report.s0.str() << ", " << report.s1.str() << ", "
              << report.s2.str() << "\n";
    if (report.feasible) {
      std::cout << "verdict: feasible-so-far (s0 = 1 and s2 = " << report.s2.str()
                << " >= s1^2 = " << Nat(report.s1 * report.s1).str() << ")\n";
    } else if (report.violated == GateReport::Violated::S0) {
      std::cout << "verdict: infeasible (violated: lemma_s0; s0 = "
                << report.s0.str() << ", must be 1)\n";
    } else {
      std::cout << "verdict: infeasible (violated: lemma_square; s1^2 = "
                << Nat(report.s1 * report.s1).str() << " > s2 = " << report.s2.str()
                << ")\n";
    }
  }
  return report.feasible ? kOk : kInfeasible;
}

int run_infer(const std::string& seq_text, int n_max, bool integral,
              const std::string& format) {
  const SequenceSpec spec = parse_sequence_spec(seq_text);
  int steps = n_max;
  if (steps <= 0) {
    steps = 10;
    if (const auto cap = spec.max_terms())
      steps = std::min<int>(steps, static_cast<int>(*cap) - 1);
    if (steps < 1) throw std::invalid_argument("sequence has too few terms to infer from");
  }
  const InferenceReport report = infer_rules(spec, steps, integral);

  if (format == "json") {
    std::cout << to_json(report) << "\n";
    return report.consistent() ? kOk : kInfeasible;
  }

  std::cout << "sequence: " << report.sequence_name << "\n";
  if (!report.trace.empty()) {
    std::cout << pad_left("step", 5) << pad_left("forced", 12)
              << pad_left("available", 12) << "  new rule\n";
    for (const auto& step : report.trace) {
      std::cout << pad_left(std::to_string(step.n), 5)
                << pad_left(to_string(step.forced), 12)
                << pad_left(step.available.str(), 12) << "  ";
      if (step.new_rule)
        std::cout << "r(" << step.n - 1 << ") = " << to_string(*step.new_rule);
      else
        std::cout << "-";
      std::cout << "\n";
    }
  }

  switch (report.outcome) {
    case InferenceReport::Outcome::Consistent:
      std::cout << "outcome: consistent up to step " << report.last_step << "\n";
      break;
    case InferenceReport::Outcome::Contradiction: {
      std::string parts;
      for (const auto& c : report.trace.back().contributions) {
        if (!parts.empty()) parts += "+";
        parts += to_string(c.amount);
      }
      std::cout << "outcome: contradiction at step " << report.last_step
                << ": forced=" << to_string(report.fail_forced);
      if (!parts.empty()) std::cout << " (" << parts << ")";
      std::cout << " available=" << report.fail_available.str() << "\n";
      break;
    }
    case InferenceReport::Outcome::NonIntegral:
      std::cout << "outcome: non-integral at step " << report.last_step << ": "
                << report.fail_detail << "\n";
      break;
    case InferenceReport::Outcome::InfeasibleS0:
      std::cout << "outcome: infeasible (" << report.fail_detail << ")\n";
      break;
  }
  return report.consistent() ? kOk : kInfeasible;
}

int run_ntable(int n, bool csv) {
  const NTable t = compute_ntable(build_super(n), n);
  if (csv) {
    std::cout << to_csv(t);
    return kOk;
  }
  std::cout << "path table for step " << n << " (rows: length, columns: start label)\n";
  std::size_t width = 4;
  for (int l = 0; l <= n; ++l)
    for (int v = 0; v <= n; ++v) width = std::max(width, t.at(l, v).str().size() + 2);
  std::cout << "l\\v";
  for (int v = 0; v <= n; ++v) std::cout << pad_left(std::to_string(v), width);
  std::cout << "\n";
  for (int l = 0; l <= n; ++l) {
    std::cout << pad_left(std::to_string(l), 3);
    for (int v = 0; v <= n; ++v) std::cout << pad_left(t.at(l, v).str(), width);
    std::cout << "\n";
  }
  return kOk;
}

int run_verify(int n_max, const std::string& format) {
  const VerifyReport report = verify_conjectures(n_max);
  if (format == "json") {
    std::cout << to_json(report) << "\n";
    return report.ok ? kOk : kInfeasible;
  }

  std::cout << "checking the path-table recurrence and successor sums of the "
               "super family up to step " << n_max << "\n";
  for (const auto& entry : report.entries) {
    std::cout << "  step " << entry.n << " -> " << entry.n + 1 << ": ";
    if (entry.recurrence_ok) std::cout << "recurrence ok";
    else if (entry.non_integral)
      std::cout << "recurrence FAILED (fractional entry at length "
                << entry.non_integral->first << ", label "
                << entry.non_integral->second << ")";
    else {
      const auto& [table, length, label] = *entry.first_mismatch;
      std::cout << "recurrence FAILED (table " << table << ", length " << length
                << ", label " << label << ")";
    }
    std::cout << "; next value " << to_string(entry.predicted_next)
              << (entry.sum_ok ? " ok" : " MISMATCH") << "\n";
  }
  if (report.ok)
    std::cout << "all steps verified (" << report.note << ")\n";
  else
    std::cout << "verification FAILED\n";
  return report.ok ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact action-graph toolkit for Catalan-type sequences"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // seq
  std::string seq_spec;
  int seq_count = -1;
  auto* seq = app.add_subcommand("seq", "print the first terms of a sequence");
  seq->add_option("spec", seq_spec,
                  "family name, inline list like 1,4,14,48, or @file")->required();
  seq->add_option("--count", seq_count, "number of terms (default 10)");
  seq->callback([&]() { exit_code = run_seq(seq_spec, seq_count); });

  // triangle
  int triangle_rows = 8;
  bool triangle_ab = false;
  auto* triangle = app.add_subcommand("triangle", "print Catalan's triangle");
  triangle->add_option("--rows", triangle_rows, "last row to print")->required();
  triangle->add_flag("--ab", triangle_ab,
                     "print the fraction table C(a-1,b)/(a-b) instead");
  triangle->callback([&]() { exit_code = run_triangle(triangle_rows, triangle_ab); });

  // shared family options
  const auto add_family = [](CLI::App* cmd, FamilyChoice& choice) {
    cmd->add_option("family", choice.kind, "classic, fuss or super")
        ->required()
        ->check(CLI::IsMember({"classic", "fuss", "super"}));
    cmd->add_option("--k", choice.k, "branching parameter for fuss");
  };

  // build
  FamilyChoice build_choice;
  int build_n = 0;
  std::string build_format = "json";
  bool build_expand = false;
  long long build_limit = 1000000;
  auto* build = app.add_subcommand("build", "construct a graph family");
  add_family(build, build_choice);
  build->add_option("--n", build_n, "number of growth steps")->required();
  build->add_option("--format", build_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  build->add_flag("--expand", build_expand, "emit expanded graphs");
  build->add_option("--size-limit", build_limit, "expansion budget in vertices");
  build->callback([&]() {
    exit_code = run_build(build_choice, build_n, build_format, build_expand,
                          build_limit, "");
  });

  // export
  FamilyChoice export_choice;
  int export_n = 0;
  std::string export_format = "json";
  bool export_expand = false;
  long long export_limit = 1000000;
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "write a graph family to a file");
  add_family(export_cmd, export_choice);
  export_cmd->add_option("--n", export_n, "number of growth steps")->required();
  export_cmd->add_option("--out", export_out, "output file")->required();
  export_cmd->add_option("--format", export_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  export_cmd->add_flag("--expand", export_expand, "emit expanded graphs");
  export_cmd->add_option("--size-limit", export_limit, "expansion budget in vertices");
  export_cmd->callback([&]() {
    exit_code = run_build(export_choice, export_n, export_format, export_expand,
                          export_limit, export_out);
  });

  // check-axioms
  FamilyChoice axioms_choice;
  int axioms_n = 0;
  std::string axioms_seq;
  long long axioms_limit = 1000000;
  std::string axioms_format = "text";
  auto* axioms = app.add_subcommand("check-axioms", "verify the three axioms");
  add_family(axioms, axioms_choice);
  axioms->add_option("--n", axioms_n, "number of growth steps")->required();
  axioms->add_option("--seq", axioms_seq, "sequence to compare step counts against");
  axioms->add_option("--size-limit", axioms_limit, "expansion budget in vertices");
  axioms->add_option("--format", axioms_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  axioms->callback([&]() {
    exit_code = run_check_axioms(axioms_choice, axioms_n, axioms_seq, axioms_limit,
                                 axioms_format);
  });

  // gate
  std::string gate_seq;
  int gate_terms = 3;
  std::string gate_format = "text";
  auto* gate_cmd = app.add_subcommand("gate", "necessary-condition feasibility gate");
  gate_cmd->add_option("--seq", gate_seq, "sequence to test")->required();
  gate_cmd->add_option("--terms", gate_terms, "terms to materialize (>= 3)");
  gate_cmd->add_option("--format", gate_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  gate_cmd->callback([&]() { exit_code = run_gate(gate_seq, gate_terms, gate_format); });

  // infer
  std::string infer_seq;
  int infer_n_max = 0;
  bool infer_integral = false;
  std::string infer_format = "text";
  auto* infer = app.add_subcommand("infer", "derive forced path-length rules");
  infer->add_option("--seq", infer_seq, "sequence to model")->required();
  infer->add_option("--n-max", infer_n_max, "steps to attempt (default 10)");
  infer->add_flag("--integral", infer_integral, "require whole-number rules");
  infer->add_option("--format", infer_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  infer->callback([&]() {
    exit_code = run_infer(infer_seq, infer_n_max, infer_integral, infer_format);
  });

  // ntable
  int ntable_n = 0;
  bool ntable_csv = false;
  auto* ntable = app.add_subcommand("ntable", "path table of the super family");
  ntable->add_option("--n", ntable_n, "step")->required();
  ntable->add_flag("--csv", ntable_csv, "CSV output");
  ntable->callback([&]() { exit_code = run_ntable(ntable_n, ntable_csv); });

  // verify
  int verify_n_max = 7;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "check the table recurrence and successor sums");
  verify->add_option("--n-max", verify_n_max, "last step to verify")->required();
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->callback([&]() { exit_code = run_verify(verify_n_max, verify_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NonIntegralGrowthError& e) {
    // a fractional class is refutation evidence, not a usage problem
    std::cerr << "refuted: " << e.what() << "\n";
    return kInfeasible;
  } catch (const NonIntegralEntryError& e) {
    std::cerr << "refuted: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}
