#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "laperm/closed_forms.hpp"
#include "laperm/enumeration.hpp"
#include "laperm/families.hpp"
#include "laperm/graph.hpp"
#include "laperm/limits.hpp"
#include "laperm/permanent.hpp"
#include "laperm/transforms.hpp"

namespace {

using namespace laperm;
using nlohmann::json;

constexpr const char* kSchema = "laperm.report/1";

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file `" + path + "`");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (format == "graph6") {
    // first non-empty line
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) return read_graph6(line);
    throw ParseError("empty graph6 input");
  }
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string graph_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

json graph_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

// The closed form evaluating this family's permanent, when one exists.
std::optional<FormulaId> closed_form_for(const FamilySpec& spec) {
  using K = FormulaId::Kind;
  if (auto* f = std::get_if<family::Path>(&spec))
    return FormulaId{K::PathPermanent, f->n};
  if (auto* f = std::get_if<family::Star>(&spec))
    return FormulaId{K::DStar, 1, f->n - 1};
  if (auto* f = std::get_if<family::DoubleStar>(&spec))
    return FormulaId{K::DStar, f->p, f->q};
  if (auto* f = std::get_if<family::DPrime>(&spec))
    return FormulaId{K::DPrime, f->p, f->q};
  if (auto* f = std::get_if<family::DDoublePrime>(&spec))
    return FormulaId{K::DDoublePrime, f->p, f->q};
  if (auto* f = std::get_if<family::TEndAttach>(&spec)) {
    if (f->k == 3) return FormulaId{K::T3i, f->n, f->a};
    if (f->k == 2) return FormulaId{K::DStar, f->a + 1, f->n - f->a - 1};
    return std::nullopt;
  }
  if (auto* f = std::get_if<family::Broom>(&spec)) {
    if (f->i == 2 || f->n == f->d + 1) return FormulaId{K::Broom, f->n, f->d};
    return FormulaId{K::BroomGeneral, f->n, f->d, f->i};
  }
  if (auto* f = std::get_if<family::Caterpillar>(&spec))
    return FormulaId{K::BroomGeneral, f->n, f->d, f->d / 2};
  if (auto* f = std::get_if<family::BPQ>(&spec))
    return FormulaId{K::BPQ, f->p, f->q};
  if (auto* f = std::get_if<family::G1>(&spec))
    return FormulaId{K::G1, f->p, f->q};
  if (auto* f = std::get_if<family::C4Family>(&spec)) {
    const auto& s = f->s;
    const auto& k = f->k;
    if (k == std::array<int, 4>{0, 0, 0, 0} && s[1] == 0 && s[3] == 0) {
      int n = 4 + s[0] + s[2];
      return FormulaId{K::C4Quad, n, std::min(s[0], s[2])};
    }
    return std::nullopt;
  }
  if (auto* f = std::get_if<family::GHat>(&spec)) {
    if (f->index >= 1 && f->index <= 7)
      return FormulaId{K::GHatLinear, f->index, f->n};
    return std::nullopt;
  }
  return std::nullopt;
}

void print_value_pair(std::ostream& out, const std::optional<Int>& formula,
                      const std::optional<Int>& engine) {
  if (formula && engine) {
    out << "closed form: " << formula->get_str() << "\n";
    out << "engine:      " << engine->get_str() << "  "
        << (*formula == *engine ? "[equal]" : "[MISMATCH]") << "\n";
  } else if (formula) {
    out << "closed form: " << formula->get_str() << "\n";
  } else if (engine) {
    out << "engine: " << engine->get_str() << "\n";
  }
}

struct Options {
  bool json = false;
  std::string format = "edgelist";
};

int emit(const json& j, const std::string& text, const Options& opt) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

int cmd_perm(const std::string& input, const Options& opt) {
  Graph g = load_graph(input, opt.format);
  Int value = laplacian_permanent(g);
  json j{{"schema", kSchema},
         {"command", "perm"},
         {"n", g.vertex_count()},
         {"permanent", value.get_str()}};
  return emit(j, "per L = " + value.get_str() + "\n", opt);
}

int cmd_family(const std::string& spec_text, const std::string& emit_what,
               const Options& opt) {
  FamilySpec spec = parse_family(spec_text);
  Graph g = build(spec);
  json j{{"schema", kSchema},
         {"command", "family"},
         {"family", print_family(spec)},
         {"emit", emit_what}};
  std::ostringstream text;
  if (emit_what == "graph") {
    j["graph"] = graph_json(g);
    text << graph_text(g);
  } else if (emit_what == "perm") {
    std::optional<Int> formula;
    if (auto id = closed_form_for(spec)) formula = eval_formula(*id);
    std::optional<Int> engine;
    if (g.vertex_count() <= ryser_max_order())
      engine = laplacian_permanent(g);
    if (formula) j["closed_form"] = formula->get_str();
    if (engine) j["engine"] = engine->get_str();
    if (formula && engine) j["equal"] = (*formula == *engine);
    print_value_pair(text, formula, engine);
  } else if (emit_what == "coeffs") {
    CharPoly cp = char_poly(g);
    j["coefficients"] = json::array();
    text << "Laplacian coefficients c_0..c_n:";
    for (const Int& c : cp.c) {
      j["coefficients"].push_back(c.get_str());
      text << ' ' << c.get_str();
    }
    text << "\n";
  } else {
    throw ParseError("unknown --emit value `" + emit_what + "`");
  }
  return emit(j, text.str(), opt);
}

int cmd_transform(const std::string& input, const std::string& move,
                  const std::string& emit_what, const Options& opt) {
  Graph g = load_graph(input, opt.format);
  std::istringstream ms(move);
  std::string op;
  ms >> op;
  Graph result;
  if (op == "op1" || op == "op2" || op == "l35") {
    int a, b, c = -1;
    if (op == "l35") {
      if (!(ms >> a >> b)) throw ParseError("expected `l35 v u`");
    } else if (!(ms >> a >> b >> c)) {
      throw ParseError("expected `" + op + " u v w`");
    }
    if (op == "op1")
      result = apply_op1(g, a, b, c);
    else if (op == "op2")
      result = apply_op2(g, a, b, c);
    else
      result = apply_lemma35(g, a, b);
  } else if (op == "op3") {
    result = apply_op3(g);
  } else {
    throw ParseError("unknown move `" + op + "` (op1/op2/op3/l35)");
  }
  Int before = laplacian_permanent(g);
  Int after = laplacian_permanent(result);
  json j{{"schema", kSchema},
         {"command", "transform"},
         {"move", move},
         {"before", before.get_str()},
         {"after", after.get_str()},
         {"decreased", after < before}};
  std::ostringstream text;
  text << "per L before = " << before.get_str()
       << ", after = " << after.get_str()
       << (after < before ? "  [strict decrease]" : "  [NOT decreased]")
       << "\n";
  if (emit_what == "graph") {
    j["graph"] = graph_json(result);
    text << graph_text(result);
  }
  return emit(j, text.str(), opt);
}

int cmd_enumerate(const ClassQuery& query, int rank, const Options& opt) {
  json j{{"schema", kSchema}, {"command", "enumerate"}};
  std::ostringstream text;
  if (rank > 0) {
    RankedResult r = rank_by_permanent(query, rank);
    j["class_size"] = r.class_size;
    j["ranked"] = json::array();
    text << "class size " << r.class_size << "\n";
    for (const auto& e : r.entries) {
      std::string fam = e.family ? print_family(*e.family) : "unrecognized";
      j["ranked"].push_back({{"family", fam},
                             {"value", e.value.get_str()},
                             {"graph", graph_json(e.graph)}});
      text << "  " << e.value.get_str() << "  " << fam << "\n";
    }
  } else {
    auto graphs = enumerate_class(query);
    j["class_size"] = graphs.size();
    text << "class size " << graphs.size() << "\n";
  }
  return emit(j, text.str(), opt);
}

int cmd_verify(const std::string& theorem, int n, const Options& opt) {
  VerificationReport report = verify_theorem(parse_theorem(theorem), n);
  json j = report.to_json();
  j["schema"] = kSchema;
  j["command"] = "verify";
  emit(j, report.text(), opt);
  return report.status == VerifyStatus::Refuted ? 1 : 0;
}

int cmd_coeffs(const std::string& input, const Options& opt) {
  Graph g = load_graph(input, opt.format);
  CharPoly cp = char_poly(g);
  json j{{"schema", kSchema}, {"command", "coeffs"}};
  j["coefficients"] = json::array();
  std::ostringstream text;
  text << "c_0..c_n:";
  for (const Int& c : cp.c) {
    j["coefficients"].push_back(c.get_str());
    text << ' ' << c.get_str();
  }
  text << "\n";
  return emit(j, text.str(), opt);
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& mode, const Options& opt) {
  Graph a = load_graph(a_path, opt.format);
  Graph b = load_graph(b_path, opt.format);
  json j{{"schema", kSchema}, {"command", "compare"}, {"mode", mode}};
  std::ostringstream text;
  if (mode == "perm") {
    Int pa = laplacian_permanent(a), pb = laplacian_permanent(b);
    j["a"] = pa.get_str();
    j["b"] = pb.get_str();
    j["order"] = pa < pb ? "a<b" : (pa == pb ? "a=b" : "a>b");
    text << "per L(a) = " << pa.get_str() << ", per L(b) = " << pb.get_str()
         << "  [" << j["order"].get<std::string>() << "]\n";
  } else if (mode == "dominance") {
    Dominance d = dominance_compare(char_poly(a), char_poly(b));
    std::string name;
    switch (d) {
      case Dominance::Equal: name = "equal"; break;
      case Dominance::ADominated: name = "a<=b"; break;
      case Dominance::BDominated: name = "b<=a"; break;
      case Dominance::StrictlyADominated: name = "a prec b"; break;
      case Dominance::StrictlyBDominated: name = "b prec a"; break;
      case Dominance::Incomparable: name = "incomparable"; break;
    }
    j["dominance"] = name;
    text << "coefficient dominance: " << name << "\n";
  } else {
    throw ParseError("unknown --mode `" + mode + "`");
  }
  return emit(j, text.str(), opt);
}

int cmd_formula(const std::string& id_text, const Options& opt) {
  json j{{"schema", kSchema}, {"command", "formula"}, {"id", id_text}};
  std::ostringstream text;
  if (id_text.rfind("lemma34(", 0) == 0 && id_text.back() == ')') {
    std::string args = id_text.substr(8, id_text.size() - 9);
    int n, k, l;
    char c1, c2;
    std::istringstream in(args);
    if (!(in >> n >> c1 >> k >> c2 >> l) || c1 != ',' || c2 != ',')
      throw ParseError("expected lemma34(n,k,j)");
    Int gap = lemma34_gap(n, k, l);
    j["value"] = gap.get_str();
    text << "lemma34 gap = " << gap.get_str()
         << (gap > 0 ? "  [positive]" : "  [NOT positive]") << "\n";
    return emit(j, text.str(), opt);
  }
  FormulaId id = parse_formula(id_text);
  Int value = eval_formula(id);
  j["id"] = print_formula(id);
  j["closed_form"] = value.get_str();
  std::optional<Int> engine;
  try {
    if (auto spec = formula_family(id)) {
      Graph g = build(*spec);
      if (g.vertex_count() <= ryser_max_order()) {
        engine = laplacian_permanent(g);
        j["family"] = print_family(*spec);
        j["engine"] = engine->get_str();
        j["equal"] = (*engine == value);
      }
    }
  } catch (const InvalidParameters&) {
    // Outside the graph construction's hypothesis range: the polynomial is
    // still evaluable, just without an engine cross-check.
  }
  print_value_pair(text, value, engine);
  return emit(j, text.str(), opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laperm: exact Laplacian permanents, graph families, "
               "edge-grafting transforms, and extremal verification"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON (schema laperm.report/1)");
  app.add_option("--format", opt.format, "input format: edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string input = "-", spec_text, emit_what = "perm", move, theorem;
  std::string input_b, mode = "perm", formula_text, kind = "trees";
  int n = 0, rank = 0, p = 0, q = 0, diam = 0, matching = 0;

  auto* perm = app.add_subcommand("perm", "Laplacian permanent of a graph");
  perm->add_option("input", input, "edge-list file, or - for stdin");

  auto* fam = app.add_subcommand("family", "build a named family");
  fam->add_option("spec", spec_text, "family spec, e.g. D(3,5)")->required();
  fam->add_option("--emit", emit_what, "graph | perm | coeffs");

  auto* trans = app.add_subcommand("transform", "apply a grafting move");
  trans->add_option("input", input, "edge-list file, or - for stdin");
  trans->add_option("--move", move, "op1 u v w | op2 u v w | op3 | l35 v u")
      ->required();
  trans->add_option("--emit", emit_what, "graph | perm");

  auto* enumc = app.add_subcommand("enumerate", "enumerate a graph class");
  enumc->add_option("--kind", kind, "trees | unicyclic");
  enumc->add_option("--n", n, "vertex count")->required();
  enumc->add_option("--p", p, "bipartition class size p");
  enumc->add_option("--q", q, "bipartition class size q");
  enumc->add_option("--diameter-at-least", diam, "diameter filter");
  enumc->add_option("--matching", matching, "matching-number filter");
  enumc->add_option("--rank", rank, "report the bottom-k by permanent");

  auto* verify = app.add_subcommand("verify", "check a stated result");
  verify
      ->add_option("theorem", theorem,
                   "T32 T33 T36 T37 T38 T39 L34 R1 R3")
      ->required();
  verify->add_option("--n", n, "vertex count")->required();

  auto* coeffs = app.add_subcommand("coeffs", "Laplacian coefficients");
  coeffs->add_option("input", input, "edge-list file, or - for stdin");

  auto* compare = app.add_subcommand("compare", "compare two graphs");
  compare->add_option("a", input, "first graph file")->required();
  compare->add_option("b", input_b, "second graph file")->required();
  compare->add_option("--mode", mode, "perm | dominance");

  auto* formula = app.add_subcommand("formula", "evaluate a displayed formula");
  formula->add_option("id", formula_text, "e.g. D(3,5), Q(7), lemma34(9,1,2)")
      ->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (perm->parsed()) return cmd_perm(input, opt);
    if (fam->parsed()) return cmd_family(spec_text, emit_what, opt);
    if (trans->parsed()) return cmd_transform(input, move, emit_what, opt);
    if (enumc->parsed()) {
      ClassQuery query;
      query.kind = kind == "unicyclic" ? laperm::ClassKind::BipartiteUnicyclic
                                       : laperm::ClassKind::Trees;
      if (kind != "trees" && kind != "unicyclic")
        throw ParseError("unknown --kind `" + kind + "`");
      query.n = n;
      if (p > 0 || q > 0) {
        if (p == 0) p = n - q;
        if (q == 0) q = n - p;
        if (p > q) std::swap(p, q);
        query.bipartition = std::pair{p, q};
      }
      if (diam > 0) query.diameter_at_least = diam;
      if (matching > 0) query.matching_number = matching;
      return cmd_enumerate(query, rank, opt);
    }
    if (verify->parsed()) return cmd_verify(theorem, n, opt);
    if (coeffs->parsed()) return cmd_coeffs(input, opt);
    if (compare->parsed()) return cmd_compare(input, input_b, mode, opt);
    if (formula->parsed()) return cmd_formula(formula_text, opt);
  } catch (const laperm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
