// hilbcat: command-line front end for the closed-subobject logic library.
//
//   hilbcat check --laws orthomodularity,frobenius --dims 4 --samples 1000 --seed 42 [--json out.json]
//   hilbcat eval --model m.hc --formula "EX f . P"
//   hilbcat entails --model m.hc --lhs "P & Q" --rhs P
//   hilbcat search --counterexample distributivity --dim 2
//   hilbcat witness --nonfibred-perp
//   hilbcat lattice --model m.hc --object X --dot out.dot
//
// Exit codes: 0 success, 1 a theorem suite failed, 2 bad input.

#include <hilbcat/hilbcat.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hilbcat;
using namespace hilbcat::dsl;

constexpr int kOk = 0;
constexpr int kTheoremFailed = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_suite(const SuiteResult& s) {
  std::cout << s.name << ": " << s.passed << "/" << s.instances << " passed";
  if (s.failed) std::cout << ", " << s.failed << " FAILED";
  std::cout << " (seed " << s.seed << ")\n";
  std::cerr << "  " << s.name << " took " << s.elapsed.count() << " s\n";
}

void print_witness(const Witness& w) {
  for (const auto& [name, m] : w.matrices) std::cout << "  " << name << " = " << m << "\n";
  for (const auto& [name, v] : w.flags) std::cout << "  " << name << " = " << (v ? "true" : "false") << "\n";
}

int cmd_check(const std::string& laws, std::size_t dims, std::size_t min_dim, std::size_t samples,
              std::uint64_t seed, const std::string& json_out) {
  SuiteConfig cfg{split_commas(laws), dims, min_dim, samples, seed};
  if (cfg.laws.empty()) throw input_error("--laws needs at least one law name");
  Report r = run_law_suite(cfg);
  for (const auto& s : r.suites) print_suite(s);
  if (!json_out.empty()) write_file(json_out, export_report(r, ExportFormat::json) + "\n");
  return r.ok() ? kOk : kTheoremFailed;
}

int cmd_eval(const std::string& model_path, const std::string& formula) {
  Model model = parse_model(read_file(model_path));
  Formula phi = parse_formula(formula, model);
  Subobject s = eval_formula(model, phi);
  std::cout << to_string(phi) << " : " << phi.object() << "\n";
  std::cout << "proj " << s.proj() << "\n";
  std::cout << "rank " << s.rank() << "\n";
  return kOk;
}

int cmd_entails(const std::string& model_path, const std::string& lhs, const std::string& rhs) {
  Model model = parse_model(read_file(model_path));
  Formula phi = parse_formula(lhs, model);
  Formula psi = parse_formula(rhs, model);
  std::cout << (check_entailment(model, phi, psi) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_search(const std::string& which, std::size_t dim) {
  if (which != "distributivity") throw input_error("unknown counterexample '" + which + "'");
  auto w = find_distributivity_counterexample(dim);
  if (!w) {
    std::cout << "no witness: ClSub of a space of dimension " << dim << " is distributive\n";
    return kOk;
  }
  std::cout << "M meet (N join P) != (M meet N) join (M meet P)\n";
  std::cout << "  M = " << w->m << "\n  N = " << w->n << "\n  P = " << w->p << "\n";
  std::cout << "  lhs = " << w->lhs << "\n  rhs = " << w->rhs << "\n";
  return kOk;
}

int cmd_witness(bool nonfibred, bool preimage_perp, const std::string& json_out) {
  SuiteConfig cfg;
  if (nonfibred) cfg.laws.push_back("nonfibred-perp");
  if (preimage_perp) cfg.laws.push_back("preimage-perp");
  if (cfg.laws.empty()) throw input_error("witness needs --nonfibred-perp or --preimage-perp");
  Report r = run_law_suite(cfg);
  for (const auto& s : r.suites) {
    std::cout << s.name << ": " << (s.ok() ? "reproduced" : "NOT reproduced") << "\n";
    if (s.witness) print_witness(*s.witness);
  }
  if (!json_out.empty()) write_file(json_out, export_report(r, ExportFormat::json) + "\n");
  return r.ok() ? kOk : kTheoremFailed;
}

int cmd_lattice(const std::string& model_path, const std::string& object, const std::string& dot_out) {
  Model model = parse_model(read_file(model_path));
  std::size_t dim = model.object_dim(object);
  std::vector<std::pair<std::string, Subobject>> gens;
  for (const auto& p : model.predicates()) {
    if (p.object == object) gens.emplace_back(p.name, p.sub);
  }
  Report r;
  r.lattice = generate_sublattice(object, dim, gens);
  std::string dot = export_report(r, ExportFormat::dot);
  if (dot_out.empty() || dot_out == "-") {
    std::cout << dot;
  } else {
    write_file(dot_out, dot);
    std::cout << r.lattice->nodes.size() << " nodes, " << r.lattice->edges.size() << " edges\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closed-subobject logic over the Gaussian rationals"};
  app.require_subcommand(1);

  std::string laws, json_out, model_path, formula, lhs, rhs, which, object, dot_out;
  std::size_t dims = 4, min_dim = 1, samples = 100, dim = 2;
  std::uint64_t seed = 42;
  bool nonfibred = false, preimage_perp = false;

  auto* check = app.add_subcommand("check", "Run law verifiers on seeded random instances");
  check->add_option("--laws", laws, "Comma-separated law names")->required();
  check->add_option("--dims", dims, "Largest dimension drawn");
  check->add_option("--min-dim", min_dim, "Smallest dimension drawn");
  check->add_option("--samples", samples, "Instances per law");
  check->add_option("--seed", seed, "64-bit seed");
  check->add_option("--json", json_out, "Write the report as JSON");
  check->footer("Laws: " + [] {
    std::string s;
    for (const auto& n : law_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());

  auto* eval = app.add_subcommand("eval", "Evaluate a formula in a model");
  eval->add_option("--model", model_path, "Model file")->required();
  eval->add_option("--formula", formula, "Formula text")->required();

  auto* entails = app.add_subcommand("entails", "Decide lhs |= rhs in a model");
  entails->add_option("--model", model_path, "Model file")->required();
  entails->add_option("--lhs", lhs)->required();
  entails->add_option("--rhs", rhs)->required();

  auto* search = app.add_subcommand("search", "Search for a counterexample");
  search->add_option("--counterexample", which, "Which identity to refute")->required();
  search->add_option("--dim", dim, "Ambient dimension");

  auto* witness = app.add_subcommand("witness", "Reproduce a fixed counterexample");
  witness->add_flag("--nonfibred-perp", nonfibred, "Orthocomplement is not a fibred functor");
  witness->add_flag("--preimage-perp", preimage_perp, "Orthocomplement does not commute with preimage");
  witness->add_option("--json", json_out, "Write the report as JSON");

  auto* lattice = app.add_subcommand("lattice", "Export the sublattice generated by an object's predicates");
  lattice->add_option("--model", model_path, "Model file")->required();
  lattice->add_option("--object", object, "Object name")->required();
  lattice->add_option("--dot", dot_out, "Output .dot file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(laws, dims, min_dim, samples, seed, json_out);
    if (*eval) return cmd_eval(model_path, formula);
    if (*entails) return cmd_entails(model_path, lhs, rhs);
    if (*search) return cmd_search(which, dim);
    if (*witness) return cmd_witness(nonfibred, preimage_perp, json_out);
    if (*lattice) return cmd_lattice(model_path, object, dot_out);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
