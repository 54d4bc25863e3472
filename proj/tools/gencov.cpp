// gencov: command-line front end for the generalized covering design library.
//
// Exit codes: 0 success or valid design, 1 invalid design, 2 usage or input
// error, 3 search budget exhausted without proof.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gencov/gencov.hpp"

namespace {

using namespace gencov;

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "empty integer list");
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("GENCOV_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

int cmd_verify(const std::string& path, int jobs, std::uint64_t cap) {
  const std::string text = read_file(path);
  const Design d = fill_placeholders(parse_placeholder_design(text));
  const auto report = verify(d, {cap, jobs});
  std::cout << "valid: " << (report.valid ? "yes" : "no") << "\n"
            << "blocks: " << d.size() << "\n"
            << "checked_patterns: " << report.checked_patterns << "\n"
            << "checked_tuples: " << report.checked_tuples << "\n"
            << "deficient_count: " << report.deficient_count << "\n";
  if (report.first_uncovered) std::cout << "first_uncovered: " << to_string(*report.first_uncovered) << "\n";
  return report.valid ? 0 : kExitInvalid;
}

int cmd_bounds(const std::vector<int>& v, const std::vector<int>& k, int t, bool all, int max_subset) {
  const PartStructure s(v, k);
  BoundOptions options;
  options.lower.all_restrictions = all;
  options.lower.max_subset = max_subset;
  const BoundReport r = bound_report(s, t, options);

  std::cout << std::left << std::setw(8) << "kind" << std::setw(28) << "rule" << "value\n";
  for (const auto& [rule, value] : r.lower) std::cout << std::setw(8) << "lower" << std::setw(28) << rule << value << "\n";
  for (const auto& [rule, entry] : r.upper)
    std::cout << std::setw(8) << "upper" << std::setw(28) << rule << entry.value << "\n";
  std::cout << "\n";
  for (const auto& [rule, value] : r.lower) std::cout << "lower." << rule << "=" << value << "\n";
  for (const auto& [rule, entry] : r.upper) std::cout << "upper." << rule << "=" << entry.value << "\n";
  std::cout << "best_lower=" << r.best_lower << "\n";
  std::cout << "best_upper=" << (r.best_upper ? std::to_string(*r.best_upper) : "none") << "\n";
  std::cout << "infeasible=" << (r.infeasible ? "true" : "false") << "\n";
  return 0;
}

int cmd_construct(const std::vector<int>& v, const std::vector<int>& k, const std::string& base_path, bool keep,
                  const std::string& out) {
  const PartStructure s(v, k);
  std::optional<Design> base;
  if (!base_path.empty()) {
    base = parse_design(read_file(base_path));
  } else {
    if (s.k_min() < 2) throw Error(ErrorKind::UnitProfilePart, "construction needs every k_i >= 2");
    int w = 0;
    for (int i = 0; i < s.parts(); ++i) w = std::max(w, s.size(i) - (s.profile(i) - s.k_min()));
    base = classical_base(w, s.k_min(), {}).design;
  }
  if (keep)
    write_output(out, emit_placeholder_design(construct_minimax_placeholders(s, *base)));
  else
    write_output(out, emit_design(construct_minimax(s, *base)));
  return 0;
}

int cmd_search(const std::vector<int>& v, const std::vector<int>& k, int t, const SearchBudget& budget,
               const std::string& out) {
  const SearchResult r = exact_min(PartStructure(v, k), t, budget);
  std::ostringstream text;
  text << "# optimum: " << r.optimum << "\n# status: " << to_string(r.status) << "\n# nodes: " << r.nodes << "\n";
  if (r.design) text << emit_design(*r.design);
  write_output(out, text.str());
  if (!out.empty() && out != "-")
    std::cout << "optimum: " << r.optimum << "\nstatus: " << to_string(r.status) << "\nnodes: " << r.nodes << "\n";
  return r.proven() ? 0 : kExitBudget;
}

int cmd_product(const std::string& kind, const std::string& a, const std::string& b, const std::string& e1,
                const std::string& e2, const std::string& out) {
  const Design d1 = parse_design(read_file(a));
  const Design d2 = parse_design(read_file(b));
  Design result = [&] {
    if (kind == "concat") return product_concat(d1, d2);
    if (kind == "hadamard") return product_hadamard(d1, d2);
    std::optional<Design> x, y;
    if (!e1.empty()) x = parse_design(read_file(e1));
    if (!e2.empty()) y = parse_design(read_file(e2));
    return product_concat_improved(d1, d2, x, y);
  }();
  write_output(out, emit_design(result));
  return 0;
}

int cmd_transform(const std::string& op, const std::string& path, const std::string& args, const std::string& out) {
  const Design d = parse_design(read_file(path));
  auto need_args = [&] {
    if (args.empty()) throw Error(ErrorKind::InvalidInput, "transform " + op + " needs an argument list");
    return parse_list(args);
  };
  Design result = [&] {
    if (op == "restrict") return restrict(d, need_args());
    if (op == "amalgamate") {
      const auto ij = need_args();
      if (ij.size() != 2) throw Error(ErrorKind::InvalidInput, "amalgamate takes two part indices");
      return amalgamate(d, ij[0], ij[1]);
    }
    if (op == "delete-points") return delete_points(d, need_args());
    if (op == "expand-blocks") return expand_blocks(d, need_args());
    if (op == "expand-equivalent") {
      const auto i = need_args();
      if (i.size() != 1) throw Error(ErrorKind::InvalidInput, "expand-equivalent takes one part index");
      return expand_equivalent(d, i[0]);
    }
    if (op == "drop-full") return drop_full_parts(d);
    if (op == "add-full") return add_full_parts(d, need_args());
    if (op == "prune") return prune_redundant(d);
    throw Error(ErrorKind::InvalidInput, "unknown transform '" + op + "'");
  }();
  write_output(out, emit_design(result));
  return 0;
}

int cmd_convert(const std::string& direction, const std::string& path, int t, const std::string& out) {
  if (direction == "ca2gc") {
    const ArrayText a = parse_covering_array(read_file(path));
    write_output(out, emit_design(from_covering_array(a.rows, a.alphabet, t)));
  } else {
    write_output(out, emit_covering_array(to_covering_array(parse_design(read_file(path)))));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized covering designs: verify, bound, construct, search and transform"};
  app.require_subcommand(1);

  std::string file, file_b, out, base, e1, e2, args, kind, op, v_text, k_text;
  int t = 2, jobs = default_jobs(), max_subset = 3;
  std::uint64_t cap = 1000, max_nodes = 10'000'000;
  double timeout = 60.0;
  bool all_restrictions = false, keep = false;

  auto* verify_cmd = app.add_subcommand("verify", "check that a design covers every admissible tuple");
  verify_cmd->add_option("file", file, "design file")->required();
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--cap", cap, "stop after this many deficient tuples");

  auto* bounds_cmd = app.add_subcommand("bounds", "lower and certified upper bounds on C(v,k,t)");
  bounds_cmd->add_option("--v", v_text, "part sizes, e.g. 4,2,2")->required();
  bounds_cmd->add_option("--k", k_text, "block profile, e.g. 2,1,1")->required();
  bounds_cmd->add_option("--t", t, "strength")->required();
  bounds_cmd->add_flag("--all-restrictions", all_restrictions, "edge bounds on every small restriction");
  bounds_cmd->add_option("--max-subset", max_subset, "largest restriction tried");

  auto* construct_cmd = app.add_subcommand("construct", "strength-2 design from a classical base design");
  construct_cmd->add_option("--v", v_text, "part sizes")->required();
  construct_cmd->add_option("--k", k_text, "block profile")->required();
  construct_cmd->add_option("--base", base, "single-part (w,k0,2) design file");
  construct_cmd->add_flag("--keep-placeholders", keep, "leave '*' in unfilled positions");
  construct_cmd->add_option("-o", out, "output file");

  auto* search_cmd = app.add_subcommand("search", "exact minimum by branch and bound");
  search_cmd->add_option("--v", v_text, "part sizes")->required();
  search_cmd->add_option("--k", k_text, "block profile")->required();
  search_cmd->add_option("--t", t, "strength")->required();
  search_cmd->add_option("--max-nodes", max_nodes, "node budget");
  search_cmd->add_option("--timeout", timeout, "time budget in seconds");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_option("-o", out, "output file");

  auto* product_cmd = app.add_subcommand("product", "combine two designs");
  product_cmd->add_option("kind", kind, "concat, concat-improved or hadamard")
      ->required()
      ->check(CLI::IsMember({"concat", "concat-improved", "hadamard"}));
  product_cmd->add_option("a", file, "first design")->required();
  product_cmd->add_option("b", file_b, "second design")->required();
  product_cmd->add_option("--e1", e1, "strength t-1 design over the first structure");
  product_cmd->add_option("--e2", e2, "strength t-1 design over the second structure");
  product_cmd->add_option("-o", out, "output file");

  auto* transform_cmd = app.add_subcommand("transform", "single-design transformations");
  transform_cmd->add_option("op", op, "operation")
      ->required()
      ->check(CLI::IsMember({"restrict", "amalgamate", "delete-points", "expand-blocks", "expand-equivalent",
                             "drop-full", "add-full", "prune"}));
  transform_cmd->add_option("file", file, "design file")->required();
  transform_cmd->add_option("args", args, "comma-separated operation arguments");
  transform_cmd->add_option("-o", out, "output file");

  auto* convert_cmd = app.add_subcommand("convert", "covering array <-> design");
  convert_cmd->add_option("direction", kind, "ca2gc or gc2ca")->required()->check(CLI::IsMember({"ca2gc", "gc2ca"}));
  convert_cmd->add_option("file", file, "input file")->required();
  convert_cmd->add_option("--t", t, "strength of the array (ca2gc)");
  convert_cmd->add_option("-o", out, "output file");

  auto* graph_cmd = app.add_subcommand("graph", "join graph of a structure");
  graph_cmd->add_option("format", kind, "output format")->required()->check(CLI::IsMember({"dot"}));
  graph_cmd->add_option("--v", v_text, "part sizes")->required();
  graph_cmd->add_option("--k", k_text, "block profile")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(file, jobs, cap);
    if (*bounds_cmd) return cmd_bounds(parse_list(v_text), parse_list(k_text), t, all_restrictions, max_subset);
    if (*construct_cmd) return cmd_construct(parse_list(v_text), parse_list(k_text), base, keep, out);
    if (*search_cmd) return cmd_search(parse_list(v_text), parse_list(k_text), t, {max_nodes, timeout, jobs}, out);
    if (*product_cmd) return cmd_product(kind, file, file_b, e1, e2, out);
    if (*transform_cmd) return cmd_transform(op, file, args, out);
    if (*convert_cmd) return cmd_convert(kind, file, t, out);
    if (*graph_cmd) {
      std::cout << to_dot(join_graph(PartStructure(parse_list(v_text), parse_list(k_text))));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "gencov: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
