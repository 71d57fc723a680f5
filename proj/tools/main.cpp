#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "crystal/oracle.hpp"

namespace {

using nlohmann::json;
using namespace crystal;

Family make_family(const std::string& tag, int n) {
  const auto aff = affine_from_tag(tag);
  if (!aff)
    throw CLI::ValidationError("--fam", "unknown family tag '" + tag + "'");
  return Family(*aff, n);
}

json element_json(const Element& b) {
  return json{{"coords", coords_text(b)},
              {"row", render(to_tableau(b))},
              {"text", element_text(b)}};
}

int run_apply(const std::string& fam_tag, int n, int l, int k,
              const std::string& b1s, const std::string& b2s, bool as_json) {
  const Family fam = make_family(fam_tag, n);
  const Element b1 = element_from_coords_text(fam, l, b1s);
  const Element b2 = element_from_coords_text(fam, k, b2s);
  const RResult res = r_apply(TensorElement(b1, b2));

  if (as_json) {
    json w = json::array();
    for (Letter a : res.diag.w) w.push_back(letter_token(a));
    json out{{"family", fam_tag},
             {"n", n},
             {"l", l},
             {"k", k},
             {"b1", element_json(b1)},
             {"b2", element_json(b2)},
             {"image", {{"b2", element_json(res.image.b1)},
                        {"b1", element_json(res.image.b2)}}},
             {"H", res.H},
             {"diag", {{"z", res.diag.z},
                       {"l_prime", res.diag.l_prime},
                       {"k_prime", res.diag.k_prime},
                       {"m", res.diag.m},
                       {"w", w}}}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }

  std::cout << "input: " << render(to_tableau(b1)) << " (x) "
            << render(to_tableau(b2)) << '\n'
            << "image: " << render(to_tableau(res.image.b1)) << " (x) "
            << render(to_tableau(res.image.b2)) << '\n'
            << "image elements: " << element_text(res.image.b1) << " (x) "
            << element_text(res.image.b2) << '\n'
            << "H: " << res.H << '\n'
            << "z=" << res.diag.z << " l'=" << res.diag.l_prime
            << " k'=" << res.diag.k_prime << " m=" << res.diag.m << '\n';
  return 0;
}

int run_enumerate(const std::string& fam_tag, int n, int l, bool as_json) {
  const Family fam = make_family(fam_tag, n);
  const std::vector<Element> all = enumerate(fam, l);
  if (as_json) {
    json out = json::array();
    for (const Element& b : all) out.push_back(element_json(b));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const Element& b : all) std::cout << element_text(b) << '\n';
  return 0;
}

int run_graph(const std::string& fam_tag, int n, int l,
              const std::string& dot_path) {
  const Family fam = make_family(fam_tag, n);
  const std::vector<Element> all = enumerate(fam, l);
  const bool with_zero =
      fam.affine == Affine::A2_2n || fam.affine == Affine::C1_n;

  std::map<Element, std::size_t> id;
  for (const Element& b : all) id.emplace(b, id.size());

  std::ostringstream os;
  os << "digraph crystal {\n  rankdir=LR;\n";
  for (const Element& b : all)
    os << "  v" << id.at(b) << " [label=\"" << element_text(b) << "\"];\n";
  for (const Element& b : all) {
    for (int i = with_zero ? 0 : 1; i <= n; ++i) {
      const auto b2 = apply_f(i, b);
      if (!b2) continue;
      os << "  v" << id.at(b) << " -> v" << id.at(*b2) << " [label=\"" << i
         << "\"";
      if (i == 0) os << ", style=dashed";
      os << "];\n";
    }
  }
  os << "}\n";

  if (dot_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write " + dot_path);
    out << os.str();
  }
  return 0;
}

int run_verify(const std::string& fam_tag, int n, int l, int k, bool as_json,
               const std::string& report_path) {
  const Family fam = make_family(fam_tag, n);
  const Report rep = verify(fam, l, k);

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << rep.to_text();
  }

  if (as_json) {
    json props = json::array();
    for (const PropertyResult& p : rep.properties)
      props.push_back(
          {{"id", p.id}, {"pass", p.pass}, {"details", p.details}});
    std::cout << json{{"family", fam_tag},
                      {"n", n},
                      {"l", l},
                      {"k", k},
                      {"all_pass", rep.all_pass()},
                      {"properties", props}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << rep.to_text();
  }
  return rep.all_pass() ? 0 : 1;
}

int run_insert(const std::string& fam_tag, int n, const std::string& tab_text,
               const std::string& letter_tok, bool as_json) {
  const Family fam = make_family(fam_tag, n);
  const ClassicalFamily cf = fam.classical_family();
  const Tableau t = parse_tableau(tab_text, cf);
  const ValidationReport vr = validate(t);
  if (!vr.ok())
    throw std::runtime_error("invalid tableau: " + vr.violations[0].tag +
                             " at column " +
                             std::to_string(vr.violations[0].column));
  const Letter a = letter_from_token(letter_tok);

  // Re-run column by column so the trace shows the bumped letters.
  Tableau cur = t;
  const auto [result, route] = insert(cf, t, a);

  json steps = json::array();
  Letter in = a;
  for (const RouteEntry& e : route) {
    Column col;
    if (e.column < cur.r1()) col.push_back(cur.row1[e.column]);
    if (e.column < cur.r2()) col.push_back(cur.row2[e.column]);
    const ColumnStep step = insert_column(cf, col, in);
    const std::string out_tok = step.bumped ? letter_token(*step.bumped) : "-";
    if (as_json) {
      steps.push_back({{"col", e.column},
                       {"case", case_tag_name(e.tag)},
                       {"in", letter_token(in)},
                       {"out", out_tok}});
    } else {
      std::cout << "col=" << e.column << " case=" << case_tag_name(e.tag)
                << " in=" << letter_token(in) << " out=" << out_tok << '\n';
    }
    if (e.column < cur.r1())
      cur.row1[e.column] = step.column[0];
    else
      cur.row1.push_back(step.column[0]);
    if (step.column.size() == 2) {
      if (e.column < cur.r2())
        cur.row2[e.column] = step.column[1];
      else
        cur.row2.push_back(step.column[1]);
    }
    if (!step.bumped) break;
    in = *step.bumped;
  }

  if (as_json) {
    std::cout << json{{"steps", steps}, {"result", render(result)}}.dump(2)
              << '\n';
  } else {
    std::cout << "result: " << render(result) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial R matrix for one-row affine crystals"};
  app.require_subcommand(1);

  std::string fam_tag, b1s, b2s, tab_text, letter_tok, report_path, dot_path;
  int n = 2, l = 1, k = 1;
  bool as_json = false;

  auto* apply = app.add_subcommand("apply", "apply R to b1 (x) b2");
  apply->add_option("--fam", fam_tag, "family tag (A2|D2|C1|B1|D1)")
      ->required();
  apply->add_option("--n", n, "rank")->required();
  apply->add_option("--l", l, "capacity of the first factor")->required();
  apply->add_option("--k", k, "capacity of the second factor")->required();
  apply->add_option("--b1", b1s, "first factor coordinates")->required();
  apply->add_option("--b2", b2s, "second factor coordinates")->required();
  apply->add_flag("--json", as_json, "JSON output");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list B_l");
  enumerate_cmd->add_option("--fam", fam_tag, "family tag")->required();
  enumerate_cmd->add_option("--n", n, "rank")->required();
  enumerate_cmd->add_option("--l", l, "capacity")->required();
  enumerate_cmd->add_flag("--json", as_json, "JSON output");

  auto* graph = app.add_subcommand("graph", "export the crystal graph as DOT");
  graph->add_option("--fam", fam_tag, "family tag")->required();
  graph->add_option("--n", n, "rank")->required();
  graph->add_option("--l", l, "capacity")->required();
  graph->add_option("--dot", dot_path, "output path (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "verify against the oracles");
  verify_cmd->add_option("--fam", fam_tag, "family tag")->required();
  verify_cmd->add_option("--n", n, "rank")->required();
  verify_cmd->add_option("--l", l, "capacity of the first factor")->required();
  verify_cmd->add_option("--k", k, "capacity of the second factor")->required();
  verify_cmd->add_flag("--json", as_json, "JSON output");
  verify_cmd->add_option("--report", report_path, "write the report here");

  auto* insert_cmd =
      app.add_subcommand("insert", "trace one column insertion");
  insert_cmd->add_option("--fam", fam_tag, "family tag")->required();
  insert_cmd->add_option("--n", n, "rank")->required();
  insert_cmd->add_option("--tableau", tab_text, "rows, \" / \"-separated")
      ->required();
  insert_cmd->add_option("--letter", letter_tok, "letter to insert")
      ->required();
  insert_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (apply->parsed()) return run_apply(fam_tag, n, l, k, b1s, b2s, as_json);
    if (enumerate_cmd->parsed()) return run_enumerate(fam_tag, n, l, as_json);
    if (graph->parsed()) return run_graph(fam_tag, n, l, dot_path);
    if (verify_cmd->parsed())
      return run_verify(fam_tag, n, l, k, as_json, report_path);
    if (insert_cmd->parsed())
      return run_insert(fam_tag, n, tab_text, letter_tok, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
