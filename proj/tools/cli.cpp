#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cdg/classification.hpp"
#include "cdg/errors.hpp"
#include "cdg/graph_io.hpp"
#include "cdg/recognition.hpp"
#include "cdg/report.hpp"
#include "cdg/verify.hpp"

namespace cdg::cli {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(const std::set<std::uint64_t>& values) {
  std::string s = "{";
  bool first = true;
  for (auto v : values) {
    s += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return s + "}";
}

// Everything printed as a claim is checked again here first.
bool recheck(const Graph& g, const Verdict& v) {
  if (v.is_divisor) {
    if (!v.certificate) return false;
    return validate_orientation(g, v.certificate->orientation) && validate_labeling(g, v.certificate->labeling);
  }
  if (!v.obstruction) return false;
  const auto& arcs = v.obstruction->arcs;
  if (arcs.empty()) return v.obstruction->kind == Obstruction::Kind::exhausted_search;
  std::vector<Arc> chain;
  for (const auto& [a, b] : arcs) chain.emplace_back(g.index_of(a), g.index_of(b));
  return validate_forcing_cycle(g, chain);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << content;
}

void print_certificate(std::ostream& out, const Graph& g, const Certificate& cert) {
  out << "orientation:";
  for (const auto& [u, v] : cert.orientation.arcs()) out << ' ' << g.label(u) << "->" << g.label(v);
  out << "\nlabels:";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) out << ' ' << g.label(i) << '=' << cert.labeling.labels[i];
  out << '\n';
}

void print_obstruction(std::ostream& out, const Obstruction& ob) {
  out << "obstruction (" << to_string(ob.kind) << "): " << ob.description << '\n';
  if (!ob.arcs.empty()) {
    out << "forcing chain:";
    for (const auto& [a, b] : ob.arcs) out << ' ' << a << "->" << b;
    out << '\n';
  }
}

struct AnalyzeArgs {
  std::string spec;
  bool json = false;
  std::string dot;
  std::size_t element_cap = EnumerationOptions{}.element_cap;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const auto spec = parse_group_spec(a.spec);
  const EnumerationOptions options{a.element_cap};
  const auto spectrum = order_spectrum(spec, options);
  const auto gv = coprime_is_divisor(spectrum);
  const Graph& ng = gv.radical_graph.graph;
  if (!recheck(ng, gv.verdict)) throw std::logic_error("emitted certificate failed validation");
  const auto elapsed = millis_since(start);

  if (!a.dot.empty()) {
    std::optional<Orientation> o;
    if (gv.verdict.certificate) o = gv.verdict.certificate->orientation;
    write_file(a.dot, to_dot(ng, o, "N_G"));
  }

  const auto total = spectrum.total();
  if (a.json) {
    Json j;
    j["spec"] = to_string(spec);
    j["order"] = total ? Json(total->str()) : Json(nullptr);
    j["primes"] = gv.primes;
    j["pi_e"] = gv.pi_e;
    j["radical_graph"] = radical_graph_json(gv.radical_graph);
    j["verdict"] = verdict_json(ng, gv.verdict);
    j["witness"] = gv.witness ? witness_json(*gv.witness) : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "group: " << to_string(spec) << '\n';
    out << "order: " << (total ? total->str() : std::string("unknown")) << '\n';
    out << "primes: " << join(gv.primes) << '\n';
    out << "pi_e: " << join(gv.pi_e) << '\n';
    out << "radicals:";
    for (auto r : gv.radical_graph.radicals) out << ' ' << r;
    out << '\n';
    out << "verdict: " << (gv.verdict.is_divisor ? "divisor graph" : "not a divisor graph") << " ("
        << gv.verdict.method << ")\n";
    if (gv.verdict.certificate) print_certificate(out, ng, *gv.verdict.certificate);
    if (gv.verdict.obstruction) print_obstruction(out, *gv.verdict.obstruction);
    out << "time: " << elapsed << " ms\n";
  }
  return gv.verdict.is_divisor ? kOk : kNegative;
}

struct GraphArgs {
  std::string file;
  bool oracle = false;
  bool json = false;
  std::string dot;
};

Verdict decide(const Graph& g, bool oracle) {
  return oracle ? is_divisor_graph_brute_force(g) : is_divisor_graph(g);
}

int graph_is_divisor(const GraphArgs& a, std::ostream& out) {
  const auto g = load_edge_list(a.file);
  const auto v = decide(g, a.oracle);
  if (!recheck(g, v)) throw std::logic_error("emitted certificate failed validation");
  if (!a.dot.empty()) {
    std::optional<Orientation> o;
    if (v.certificate) o = v.certificate->orientation;
    write_file(a.dot, to_dot(g, o));
  }
  if (a.json) {
    out << verdict_json(g, v).dump(2) << '\n';
  } else {
    out << "vertices: " << g.vertex_count() << ", edges: " << g.edge_count() << '\n';
    out << "verdict: " << (v.is_divisor ? "divisor graph" : "not a divisor graph") << " (" << v.method << ")\n";
    if (v.certificate) print_certificate(out, g, *v.certificate);
    if (v.obstruction) print_obstruction(out, *v.obstruction);
  }
  return v.is_divisor ? kOk : kNegative;
}

int graph_label(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = load_edge_list(a.file);
  const auto v = decide(g, a.oracle);
  if (!recheck(g, v)) throw std::logic_error("emitted certificate failed validation");
  if (!v.is_divisor) {
    err << "error: not a divisor graph";
    if (v.obstruction) err << ": " << v.obstruction->description;
    err << '\n';
    return kNegative;
  }
  out << labeling_json(g, v.certificate->labeling).dump(2) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::vector<std::string> families;
  std::optional<std::uint64_t> max_n;
  std::size_t cases = VerifyOptions{}.oracle_cases;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool json = false;
  std::string out_dir = "verify-report";
};

int verify_theorems(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.families = a.families;
  options.max_n = a.max_n;
  options.oracle_cases = a.cases;
  options.seed = a.seed;
  for (const auto& f : options.families) {
    const auto& known = verification_families();
    if (std::find(known.begin(), known.end(), f) == known.end()) throw OutOfRange("unknown family '" + f + "'");
  }

  const auto start = Clock::now();
  const auto reports = verify_paper(options);
  const auto elapsed = millis_since(start);
  const auto table = summary_table(reports);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_agree();

  if (!a.out_dir.empty()) {
    std::filesystem::create_directories(a.out_dir);
    for (const auto& r : reports) write_file(a.out_dir + "/" + r.family + ".json", report_json(r).dump(2) + "\n");
    write_file(a.out_dir + "/summary.txt", table);
  }
  if (a.json) {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    out << Json{{"all_agree", ok}, {"reports", j}}.dump(2) << '\n';
  } else {
    out << table;
    for (const auto& r : reports) {
      for (const auto& c : r.cases) {
        if (!c.agree || !c.certified) out << "disagreement in " << r.family << ": " << c.param << '\n';
      }
    }
    out << "time: " << elapsed << " ms\n";
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coprime graphs of finite groups and divisor-graph recognition", "cdg"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide whether the coprime graph of a group is a divisor graph");
  analyze_cmd->add_option("spec", analyze_args.spec, "Group spec, e.g. \"D 12\" or \"DP (Z 2) (S 3)\"")->required();
  analyze_cmd->add_flag("--json", analyze_args.json, "Machine-readable output");
  analyze_cmd->add_option("--dot", analyze_args.dot, "Write the radical graph as DOT");
  analyze_cmd->add_option("--element-cap", analyze_args.element_cap, "Largest group to enumerate")
      ->check(CLI::PositiveNumber);

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "Work with an edge-list graph");
  graph_cmd->require_subcommand(1);
  auto add_graph_options = [&](CLI::App* sub) {
    sub->add_option("file", graph_args.file, "Edge-list file")->required()->check(CLI::ExistingFile);
    sub->add_flag("--oracle", graph_args.oracle, "Use the brute-force oracle (at most 9 vertices)");
  };
  auto* is_divisor_cmd = graph_cmd->add_subcommand("is-divisor", "Decide and print a certificate or witness");
  add_graph_options(is_divisor_cmd);
  is_divisor_cmd->add_flag("--json", graph_args.json, "Machine-readable output");
  is_divisor_cmd->add_option("--dot", graph_args.dot, "Write the graph, oriented when certified, as DOT");
  auto* label_cmd = graph_cmd->add_subcommand("label", "Print a divisor labeling as JSON");
  add_graph_options(label_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify-theorems", "Check every closed-form theorem against the recognizer");
  verify_cmd->add_option("--family", verify_args.families, "Family to run (repeatable); default all");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Upper end of the dihedral, dicyclic, symmetric and alternating sweeps");
  verify_cmd->add_option("--cases", verify_args.cases, "Random graphs in the oracle family");
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for the oracle family");
  verify_cmd->add_flag("--json", verify_args.json, "Print all reports as one JSON document");
  verify_cmd->add_option("--out", verify_args.out_dir, "Directory for per-family JSON and summary.txt; empty disables")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*analyze_cmd) return analyze(analyze_args, out);
    if (*is_divisor_cmd) return graph_is_divisor(graph_args, out);
    if (*label_cmd) return graph_label(graph_args, out, err);
    if (*verify_cmd) return verify_theorems(verify_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace cdg::cli
