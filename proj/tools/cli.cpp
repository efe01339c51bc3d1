#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "betamaps/audit.hpp"
#include "betamaps/fixed_points.hpp"
#include "betamaps/involution.hpp"
#include "betamaps/series.hpp"
#include "betamaps/symmetry.hpp"
#include "betamaps/tree_map.hpp"

namespace betamaps::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kTsv, kJsonl };

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::kTsv;
  unsigned threads = 1;

  bool jsonl() const { return format == Format::kJsonl; }
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

// Values given on the command line, or else every nonblank line of stdin.
std::vector<std::string> inputs(const Context& ctx, const std::string& flag_value) {
  if (!flag_value.empty()) return {flag_value};
  return read_lines(ctx.in);
}

BetaTree parse_tree(const std::string& s) {
  BetaTree t;
  try {
    t = from_text(s);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  if (auto v = validate(t)) throw InputError("invalid tree " + to_text(t) + ": " + v->describe());
  return t;
}

json map_to_json(const RootedMap& m) {
  return json{{"edges", m.edge_count()},
              {"alpha", m.alpha_one_based()},
              {"sigma", m.sigma_one_based()},
              {"root", m.root + 1}};
}

RootedMap parse_map(const std::string& s) {
  RootedMap m;
  try {
    const json j = json::parse(s);
    m = RootedMap::from_one_based(j.at("alpha").get<std::vector<int>>(),
                                  j.at("sigma").get<std::vector<int>>(), j.at("root").get<int>());
    if (j.contains("edges") && j.at("edges").get<std::size_t>() != m.edge_count()) {
      throw InputError("map: `edges` does not match the dart arrays");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("map: ") + e.what());
  }
  if (auto v = validate_map(m)) throw InputError("invalid map: " + v->message);
  return m;
}

std::string structure_json_free(const FixedPointStructure& s) { return describe(s); }

json structure_json(const FixedPointStructure& s) {
  if (std::holds_alternative<F0>(s)) return json{{"type", "F0"}};
  if (const auto* f1 = std::get_if<F1>(&s)) return json{{"type", "F1"}, {"a", to_text(f1->a)}};
  const auto& f2 = std::get<F2>(s);
  return json{{"type", "F2"}, {"a1", to_text(f2.a1)}, {"a2", to_text(f2.a2)}, {"b", f2.b}};
}

void emit_tree(const Context& ctx, const BetaTree& t) {
  if (ctx.jsonl()) {
    ctx.out << json{{"tree", to_text(t)}}.dump() << '\n';
  } else {
    ctx.out << to_text(t) << '\n';
  }
}

void emit_count(const Context& ctx, const std::string& key, const std::string& value) {
  if (ctx.jsonl()) {
    ctx.out << "{\"" << key << "\":" << value << "}\n";
  } else {
    ctx.out << value << '\n';
  }
}

// ---------------------------------------------------------------------------

int cmd_gen_trees(const Context& ctx, std::size_t nodes, bool count_only) {
  if (count_only) {
    std::size_t n = 0;
    generate_all(nodes, [&](const BetaTree&) { ++n; });
    emit_count(ctx, "count", std::to_string(n));
    return kOk;
  }
  generate_all(nodes, [&](const BetaTree& t) { emit_tree(ctx, t); });
  return kOk;
}

int cmd_stats(const Context& ctx, const std::string& tree) {
  for (const auto& line : inputs(ctx, tree)) {
    const BetaTree t = parse_tree(line);
    const TreeStats s = stats(t);
    if (ctx.jsonl()) {
      ctx.out << json{{"tree", to_text(t)}, {"root", s.root_label}, {"sub", s.sub},
                      {"rpath", s.rpath},   {"rsub", s.rsub}}
                     .dump()
              << '\n';
    } else {
      ctx.out << to_text(t) << '\t' << s.root_label << '\t' << s.sub << '\t' << s.rpath << '\t'
              << s.rsub << '\n';
    }
  }
  return kOk;
}

int cmd_apply_h(const Context& ctx, const std::string& tree) {
  for (const auto& line : inputs(ctx, tree)) emit_tree(ctx, h(parse_tree(line)));
  return kOk;
}

int cmd_fixed_points(const Context& ctx, std::size_t nodes, bool classify_flag, bool count_only) {
  if (nodes > 1 && nodes % 2 == 1) {
    ctx.err << "no fixed points of h on an odd number (" << nodes << ") of nodes\n";
  }
  if (count_only) {
    std::size_t n = 0;
    enumerate_fixed(nodes, [&](const BetaTree&) { ++n; });
    emit_count(ctx, "count", std::to_string(n));
    return kOk;
  }
  enumerate_fixed(nodes, [&](const BetaTree& t) {
    if (!classify_flag) {
      emit_tree(ctx, t);
      return;
    }
    const auto s = classify(t);
    if (ctx.jsonl()) {
      ctx.out << json{{"tree", to_text(t)}, {"structure", structure_json(s)}}.dump() << '\n';
    } else {
      ctx.out << to_text(t) << '\t' << structure_json_free(s) << '\n';
    }
  });
  return kOk;
}

int cmd_classify(const Context& ctx, const std::string& tree) {
  int code = kOk;
  for (const auto& line : inputs(ctx, tree)) {
    const BetaTree t = parse_tree(line);
    if (!is_fixed(t)) {
      ctx.err << to_text(t) << ": not a fixed point\n";
      code = kCheckFailed;
      continue;
    }
    const auto s = classify(t);
    if (ctx.jsonl()) {
      ctx.out << json{{"tree", to_text(t)}, {"structure", structure_json(s)}}.dump() << '\n';
    } else {
      ctx.out << to_text(t) << '\t' << structure_json_free(s) << '\n';
    }
  }
  return code;
}

int cmd_build_f1(const Context& ctx, const std::string& tree) {
  for (const auto& line : inputs(ctx, tree)) emit_tree(ctx, build_f1(parse_tree(line)));
  return kOk;
}

int cmd_build_f2(const Context& ctx, const std::string& a1, const std::string& a2, long b) {
  try {
    emit_tree(ctx, build_f2(parse_tree(a1), parse_tree(a2), b));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return kOk;
}

void print_check(const Context& ctx, const CheckResult& r) {
  if (ctx.jsonl()) {
    json j{{"check", r.name}, {"pass", r.pass}};
    if (r.first_failure) {
      j["identity"] = r.failing_identity;
      j["n"] = r.first_failure->n;
      j["k"] = r.first_failure->k;
      j["residual"] = r.first_failure->value.str();
    }
    ctx.out << j.dump() << '\n';
    return;
  }
  ctx.out << (r.pass ? "PASS" : "FAIL") << '\t' << r.name;
  if (r.first_failure) {
    ctx.out << "\tfirst failing coefficient x^" << r.first_failure->n << " y^"
            << r.first_failure->k << " residual " << r.first_failure->value << " in "
            << r.failing_identity;
  }
  ctx.out << '\n';
}

int cmd_series(const Context& ctx, const std::string& check, const std::string& dump,
               std::size_t order) {
  if (check.empty() == dump.empty()) throw InputError("series: give exactly one of --check, --dump");
  if (!dump.empty()) {
    TruncatedBiSeries s(order);
    if (dump == "A") s = census_A(order);
    else if (dump == "B") s = census_B(order);
    else if (dump == "u") s = lagrange_u(order);
    else if (dump == "T") s = ternary_T(order);
    else throw InputError("series: unknown series " + dump);
    if (!ctx.jsonl()) ctx.out << "n\tk\tvalue\n";
    for (const auto& t : s.terms()) {
      if (ctx.jsonl()) {
        ctx.out << json{{"n", t.n}, {"k", t.k}, {"value", t.value.str()}}.dump() << '\n';
      } else {
        ctx.out << t.n << '\t' << t.k << '\t' << t.value << '\n';
      }
    }
    return kOk;
  }
  std::vector<std::function<CheckResult(std::size_t)>> checks;
  if (check == "eq1" || check == "all") checks.emplace_back(verify_eq1);
  if (check == "eq2" || check == "all") checks.emplace_back(verify_eq2);
  if (check == "thm4" || check == "all") checks.emplace_back(verify_theorem4);
  if (check == "ternary" || check == "all") checks.emplace_back(verify_ternary_link);
  if (checks.empty()) throw InputError("series: unknown check " + check);
  bool pass = true;
  for (const auto& c : checks) {
    const CheckResult r = c(order);
    print_check(ctx, r);
    pass = pass && r.pass;
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_tree_to_map(const Context& ctx, const std::string& tree) {
  for (const auto& line : inputs(ctx, tree)) {
    ctx.out << map_to_json(tree_to_map(parse_tree(line))).dump() << '\n';
  }
  return kOk;
}

std::vector<std::string> map_inputs(const Context& ctx, const std::string& map,
                                    const std::string& file) {
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw InputError("cannot open " + file);
    std::stringstream buf;
    buf << f.rdbuf();
    return {buf.str()};
  }
  return inputs(ctx, map);
}

int cmd_dual(const Context& ctx, const std::string& map, const std::string& file) {
  for (const auto& text : map_inputs(ctx, map, file)) {
    const RootedMap m = parse_map(text);
    if (m.edge_count() < 2) throw InputError("degenerate dual: the map needs at least 2 edges");
    ctx.out << map_to_json(dual(m)).dump() << '\n';
  }
  return kOk;
}

int cmd_map_to_tree(const Context& ctx, const std::string& map, const std::string& file) {
  int code = kOk;
  for (const auto& text : map_inputs(ctx, map, file)) {
    const RootedMap m = parse_map(text);
    try {
      emit_tree(ctx, map_to_tree(m));
    } catch (const NoPreimageError&) {
      ctx.err << "no preimage\n";
      code = kCheckFailed;
    }
  }
  return code;
}

int cmd_self_dual(const Context& ctx, std::size_t edges) {
  if (edges < 2) throw InputError("self-dual: needs at least 2 edges");
  std::vector<std::string> codes;
  generate_all(edges, [&](const BetaTree& t) {
    const RootedMap m = tree_to_map(t);
    if (is_self_dual(m)) codes.push_back(canonical_code(m).to_string());
  });
  std::sort(codes.begin(), codes.end());
  if (ctx.jsonl()) {
    ctx.out << json{{"edges", edges}, {"count", codes.size()}, {"codes", codes}}.dump() << '\n';
  } else {
    ctx.out << codes.size() << '\n';
    for (const auto& c : codes) ctx.out << c << '\n';
  }
  return kOk;
}

int cmd_bijection_audit(const Context& ctx, std::size_t nodes) {
  bool pass = true;
  if (!ctx.jsonl()) ctx.out << "nodes\ttrees\tdistinct\tnonseparable\tdegree_law\tround_trip\tstatus\n";
  for (std::size_t n = 1; n <= nodes; ++n) {
    const auto r = audit_bijection_size(n);
    pass = pass && r.ok();
    if (ctx.jsonl()) {
      ctx.out << json{{"nodes", n},
                      {"trees", r.trees},
                      {"distinct", r.distinct_images},
                      {"nonseparable", r.nonseparable},
                      {"degree_law", r.degree_law},
                      {"round_trip", r.round_trips},
                      {"pass", r.ok()}}
                     .dump()
              << '\n';
    } else {
      ctx.out << n << '\t' << r.trees << '\t' << r.distinct_images << '\t' << r.nonseparable
              << '\t' << r.degree_law << '\t' << r.round_trips << '\t'
              << (r.ok() ? "PASS" : "FAIL") << '\n';
    }
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_symmetric(const Context& ctx, const std::string& family, std::size_t size) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto c = count_symmetric(f, size);
  if (ctx.jsonl()) {
    ctx.out << json{{"family", family_name(f)},
                    {"size", size},
                    {"total", c.total.str()},
                    {"symmetric", c.symmetric.str()}}
                   .dump()
            << '\n';
  } else {
    ctx.out << family_name(f) << '\t' << size << '\t' << c.total << '\t' << c.symmetric << '\n';
  }
  return kOk;
}

int cmd_verify(const Context& ctx, AuditOptions opt) {
  opt.threads = ctx.threads;
  std::size_t passed = 0;
  const auto lines = run_all_audits(opt);
  for (const auto& l : lines) {
    if (l.pass) ++passed;
    if (ctx.jsonl()) {
      ctx.out << json{{"check", l.name}, {"pass", l.pass}, {"detail", l.detail}}.dump() << '\n';
    } else {
      ctx.out << (l.pass ? "PASS" : "FAIL") << '\t' << l.name << '\t' << l.detail << '\n';
    }
  }
  const bool all = passed == lines.size();
  if (ctx.jsonl()) {
    ctx.out << json{{"summary", all ? "PASS" : "FAIL"}, {"passed", passed}, {"total", lines.size()}}
                   .dump()
            << '\n';
  } else {
    ctx.out << (all ? "PASS" : "FAIL") << '\t' << passed << '/' << lines.size() << " checks\n";
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"beta(1,0)-trees, the involution h, and rooted non-separable maps", "betamaps"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "tsv";
  unsigned threads = 1;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for audits")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::size_t nodes = 1;
  std::string tree;
  bool count_only = false;
  bool classify_flag = false;

  auto* gen = app.add_subcommand("gen-trees", "All beta(1,0)-trees on N nodes");
  gen->add_option("--nodes", nodes)->required()->check(CLI::PositiveNumber);
  gen->add_flag("--count", count_only, "Print only the number of trees");

  auto* st = app.add_subcommand("stats", "root, sub, rpath, rsub of each tree");
  st->add_option("--tree", tree);

  auto* ah = app.add_subcommand("apply-h", "Apply the involution h");
  ah->add_option("--tree", tree);

  auto* fp = app.add_subcommand("fixed-points", "Fixed points of h on N nodes");
  fp->add_option("--nodes", nodes)->required()->check(CLI::PositiveNumber);
  fp->add_flag("--classify", classify_flag, "Append the F0/F1/F2 structure");
  fp->add_flag("--count", count_only, "Print only the number of fixed points");

  auto* cl = app.add_subcommand("classify", "F0/F1/F2 structure of a fixed point");
  cl->add_option("--tree", tree);

  auto* b1 = app.add_subcommand("build-f1", "Fixed point of type F1 built from A");
  b1->add_option("--tree", tree);

  std::string a1;
  std::string a2;
  long b = 2;
  auto* b2 = app.add_subcommand("build-f2", "Fixed point of type F2 built from (A1, A2, b)");
  b2->add_option("--a1", a1)->required();
  b2->add_option("--a2", a2)->required();
  b2->add_option("--b", b)->required();

  std::string check;
  std::string dump;
  std::size_t order = 10;
  auto* se = app.add_subcommand("series", "Generating-function identity checks");
  se->add_option("--check", check)->check(CLI::IsMember({"eq1", "eq2", "thm4", "ternary", "all"}));
  se->add_option("--dump", dump)->check(CLI::IsMember({"A", "B", "u", "T"}));
  se->add_option("--order", order)->check(CLI::PositiveNumber)->capture_default_str();

  auto* tm = app.add_subcommand("tree-to-map", "Standard bijection to a rooted map");
  tm->add_option("--tree", tree);

  std::string map;
  std::string map_file;
  auto* du = app.add_subcommand("dual", "Dual of a rooted map");
  du->add_option("--map", map, "Map as a JSON object");
  du->add_option("--file", map_file, "File holding a JSON map");

  auto* mt = app.add_subcommand("map-to-tree", "Preimage of a map under the standard bijection");
  mt->add_option("--map", map, "Map as a JSON object");
  mt->add_option("--file", map_file, "File holding a JSON map");

  std::size_t edges = 2;
  auto* sd = app.add_subcommand("self-dual", "Self-dual rooted non-separable maps on E edges");
  sd->add_option("--edges", edges)->required()->check(CLI::PositiveNumber);

  auto* ba = app.add_subcommand("bijection-audit", "Injectivity and degree law up to N nodes");
  ba->add_option("--nodes", nodes)->required()->check(CLI::PositiveNumber);

  std::string family;
  std::size_t size = 1;
  auto* sy = app.add_subcommand("symmetric", "Totals and symmetric counts for a tree family");
  sy->add_option("--family", family)->required();
  sy->add_option("--size", size)->required()->check(CLI::PositiveNumber);

  AuditOptions audit;
  audit.max_nodes = 12;
  bool all_flag = false;
  auto* ve = app.add_subcommand("verify", "Run every audit");
  ve->add_flag("--all", all_flag, "Run all checks (the default)");
  ve->add_option("--max-nodes", audit.max_nodes, "Tree-size budget")
      ->check(CLI::Range(2, 14))
      ->capture_default_str();
  ve->add_option("--order", audit.series_order, "Bivariate series order")
      ->check(CLI::Range(1, 12))
      ->capture_default_str();
  ve->add_option("--map-edges", audit.max_map_edges, "Map corpus edge budget")
      ->check(CLI::Range(2, 11))
      ->capture_default_str();
  ve->add_option("--symmetry-size", audit.symmetry_size)
      ->check(CLI::Range(1, 9))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  Context ctx{in, out, err, format == "jsonl" ? Format::kJsonl : Format::kTsv, threads};
  try {
    if (gen->parsed()) return cmd_gen_trees(ctx, nodes, count_only);
    if (st->parsed()) return cmd_stats(ctx, tree);
    if (ah->parsed()) return cmd_apply_h(ctx, tree);
    if (fp->parsed()) return cmd_fixed_points(ctx, nodes, classify_flag, count_only);
    if (cl->parsed()) return cmd_classify(ctx, tree);
    if (b1->parsed()) return cmd_build_f1(ctx, tree);
    if (b2->parsed()) return cmd_build_f2(ctx, a1, a2, b);
    if (se->parsed()) return cmd_series(ctx, check, dump, order);
    if (tm->parsed()) return cmd_tree_to_map(ctx, tree);
    if (du->parsed()) return cmd_dual(ctx, map, map_file);
    if (mt->parsed()) return cmd_map_to_tree(ctx, map, map_file);
    if (sd->parsed()) return cmd_self_dual(ctx, edges);
    if (ba->parsed()) return cmd_bijection_audit(ctx, nodes);
    if (sy->parsed()) return cmd_symmetric(ctx, family, size);
    if (ve->parsed()) return cmd_verify(ctx, audit);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace betamaps::cli
