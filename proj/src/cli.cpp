#include "lieob/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lieob/cohomology.hpp"
#include "lieob/examples.hpp"
#include "lieob/io.hpp"
#include "lieob/obstruction.hpp"

namespace lieob::cli {

namespace {

// Ordered key/value report; the one payload all commands emit. Stable key
// order keeps machine output diffable and json output deterministic.
struct Report {
  std::vector<std::pair<std::string, std::string>> items;
  void add(std::string key, std::string value) {
    items.emplace_back(std::move(key), std::move(value));
  }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
};

void render(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& [k, v] : report.items) j[k] = v;
    out << j.dump(2) << "\n";
    return;
  }
  if (format == "machine") {
    for (const auto& [k, v] : report.items) out << k << ": " << v << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : report.items) width = std::max(width, k.size());
  for (const auto& [k, v] : report.items)
    out << std::left << std::setw(static_cast<int>(width + 2)) << k << v << "\n";
}

std::string row_to_string(const Matrix& m, std::size_t i) {
  std::string s = "(";
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) s += ", ";
    s += format_rational(m.at(i, j));
  }
  return s + ")";
}

void add_subspace(Report& report, const std::string& key, const Subspace& s) {
  report.add(key + ".dim", s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    report.add(key + ".basis." + std::to_string(i), row_to_string(s.basis(), i));
}

struct Input {
  std::string example;
  std::string file;
};

NamedAlgebra load(const Input& input, bool enforce_jacobi = true) {
  if (!input.example.empty() && !input.file.empty())
    throw DocumentError("--example and --file are mutually exclusive");
  if (!input.example.empty())
    return NamedAlgebra{input.example, builtins::by_name(input.example)};
  if (!input.file.empty()) {
    std::ifstream in(input.file);
    if (!in) throw DocumentError("cannot open file '" + input.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str(), enforce_jacobi);
  }
  throw DocumentError("an algebra is required: pass --example NAME or --file PATH");
}

void add_input_options(CLI::App* cmd, Input& input) {
  cmd->fallthrough(); // lets the global --format follow the subcommand
  cmd->add_option("--example", input.example, "built-in algebra name");
  cmd->add_option("--file", input.file, "algebra document path");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact-arithmetic structure theory of rational Lie algebras and the "
               "triviality classifier for the coupling obstruction"};
  app.name("lieob");
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "machine", "json"}))
      ->capture_default_str();

  Input input;
  bool strict = false;
  std::size_t degree = 3;
  std::string module_kind = "trivial";

  auto* check = app.add_subcommand("check", "verify the Jacobi identity");
  add_input_options(check, input);
  auto* center_cmd = app.add_subcommand("center", "center Zg as a reduced subspace");
  add_input_options(center_cmd, input);
  auto* derived_cmd = app.add_subcommand("derived", "derived subalgebra [g,g]");
  add_input_options(derived_cmd, input);
  auto* classify = app.add_subcommand("classify", "obstruction triviality verdict");
  add_input_options(classify, input);
  classify->add_flag("--strict", strict, "exit 2 when the verdict is Undetermined");
  auto* split = app.add_subcommand("split", "central split g = Zg (+) g0, or its witness");
  add_input_options(split, input);
  auto* aut_blocks = app.add_subcommand("aut-blocks", "block dimensions of Aut(g) over a split");
  add_input_options(aut_blocks, input);
  auto* quotient = app.add_subcommand("quotient", "quotient g/Zg and its document");
  add_input_options(quotient, input);
  auto* cohomology = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology dimension");
  add_input_options(cohomology, input);
  cohomology->add_option("--degree", degree, "cochain degree k")->capture_default_str();
  cohomology->add_option("--module", module_kind, "coefficient module")
      ->check(CLI::IsMember({"trivial", "adjoint"}))
      ->capture_default_str();
  app.add_subcommand("examples", "list built-in algebras")->fallthrough();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end()); // CLI11 consumes back-to-front
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    Report report;
    int exit_code = 0;

    if (app.got_subcommand("examples")) {
      auto names = builtins::names();
      for (std::size_t i = 0; i < names.size(); ++i)
        report.add("example." + std::to_string(i), names[i]);
    } else if (app.got_subcommand(check)) {
      auto [name, g] = load(input, /*enforce_jacobi=*/false);
      report.add("algebra", name);
      report.add("dim", g.dim());
      JacobiReport jac = verify_jacobi(g);
      report.add("jacobi", jac.pass() ? "pass" : "fail");
      for (std::size_t v = 0; v < jac.violations.size(); ++v) {
        const auto& viol = jac.violations[v];
        report.add("violation." + std::to_string(v),
                   "(" + std::to_string(viol.i) + "," + std::to_string(viol.j) + "," +
                       std::to_string(viol.k) + ")");
      }
      if (!jac.pass()) exit_code = 1;
    } else if (app.got_subcommand(center_cmd)) {
      auto [name, g] = load(input);
      report.add("algebra", name);
      add_subspace(report, "center", center(g));
    } else if (app.got_subcommand(derived_cmd)) {
      auto [name, g] = load(input);
      report.add("algebra", name);
      add_subspace(report, "derived", derived_subalgebra(g));
    } else if (app.got_subcommand(classify)) {
      auto [name, g] = load(input);
      report.add("algebra", name);
      ObstructionVerdict verdict = classify_obstruction(g);
      if (verdict.trivial) {
        report.add("verdict", "Trivial (" + to_string(*verdict.reason) + ")");
      } else {
        report.add("verdict", "Undetermined");
        const auto& d = *verdict.diagnostics;
        report.add("diagnostics.dim_center", d.dim_center);
        report.add("diagnostics.dim_derived", d.dim_derived);
        report.add("diagnostics.dim_center_meet_derived", d.dim_center_meet_derived);
        report.add("diagnostics.dim_hom_block", d.dim_hom_block);
        if (strict) exit_code = 2;
      }
    } else if (app.got_subcommand(split)) {
      auto [name, g] = load(input);
      report.add("algebra", name);
      SplitResult result = split_check(g);
      report.add("found", result.found ? "true" : "false");
      if (result.found) {
        add_subspace(report, "center", result.split->center_part);
        add_subspace(report, "complement", result.split->complement_part);
      } else {
        add_subspace(report, "witness", result.obstruction_witness);
      }
    } else if (app.got_subcommand(aut_blocks)) {
      auto [name, g] = load(input);
      report.add("algebra", name);
      SplitResult result = split_check(g);
      if (!result.found) {
        err << "no central split: Zg meets [g,g] in dimension "
            << result.obstruction_witness.dim() << "\n";
        return 1;
      }
      AutOutReport aut = aut_out_description(*result.split);
      report.add("block.0", aut.block_names[0]);
      report.add("block.1", aut.block_names[1]);
      report.add("block.2", aut.block_names[2]);
      report.add("dim_gl_center", aut.dim_gl_center);
      report.add("dim_hom_block", aut.dim_hom_block);
      report.add("derived_codim_in_g0", aut.derived_codim_in_g0);
    } else if (app.got_subcommand(quotient)) {
      auto [name, g] = load(input);
      ReductionReport red = reduction_report(g);
      report.add("algebra", name);
      report.add("quotient_dim", red.quotient.dim());
      report.add("quotient_center_dim", red.quotient_center_dim);
      report.add("note", red.note);
      std::string doc = emit_algebra(name + "/center", red.quotient, /*indent=*/-1);
      doc.pop_back(); // report values are single lines
      report.add("document", std::move(doc));
    } else if (app.got_subcommand(cohomology)) {
      auto [name, g] = load(input);
      if (degree > g.dim()) {
        err << "degree " << degree << " exceeds dim " << g.dim() << "\n";
        return 1;
      }
      LieModule m = module_kind == "adjoint" ? adjoint_module(g) : trivial_module(g);
      report.add("algebra", name);
      report.add("module", module_kind);
      report.add("degree", degree);
      report.add("cochain_dim", cochain_dim(m, degree));
      report.add("dim H^" + std::to_string(degree), cohomology_dim(m, degree));
    }

    render(report, format, out);
    return exit_code;
  } catch (const JacobiDocumentError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace lieob::cli
