#pragma once

// Command line surface. run_cli is the whole program: it takes argv minus
// the program name plus the two output streams and returns the exit code,
// so tests can drive every subcommand in process. Exit codes: 0 success
// (for verify: all checks passed), 1 violated precondition or failed
// verification, 2 malformed command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lenscap/contfrac.hpp"
#include "lenscap/formulas.hpp"
#include "lenscap/oracle.hpp"
#include "lenscap/rational.hpp"
#include "lenscap/render.hpp"
#include "lenscap/tree.hpp"

namespace lenscap {

namespace cli_detail {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw UsageError("not an integer: \"" + s + "\"");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw UsageError("not an integer: \"" + s + "\"");
    }
  }
  return Int(s);
}

// Arbitrary precision integers become JSON numbers while they fit in 64
// bits and decimal strings beyond that. Fractions are always strings.
inline ordered_json json_int(const Int& v) {
  static const Int lo{std::numeric_limits<std::int64_t>::min()};
  static const Int hi{std::numeric_limits<std::int64_t>::max()};
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

inline ordered_json json_int_list(const std::vector<Int>& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

inline std::string term_text(const ExtRational& t) {
  return t.is_infinity() ? "inf" : t.num().str();
}

inline std::string join_terms(const std::vector<ExtRational>& ts) {
  std::string out = "(";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ",";
    out += term_text(ts[i]);
  }
  return out + ")";
}

inline std::string join_ints(const std::vector<Int>& ts) {
  std::string out = "(";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ",";
    out += ts[i].str();
  }
  return out + ")";
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

inline ordered_json report_json(const VerifyReport& r) {
  ordered_json j;
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["connected"] = r.connected;
  j["acyclic"] = r.acyclic;
  j["parent_matches_mother"] = r.parent_matches_mother;
  j["depth_matches_formulas"] = r.depth_matches_formulas;
  if (r.first_counterexample) {
    j["first_counterexample"] = {{"check", r.first_counterexample->check},
                                 {"detail", r.first_counterexample->detail}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  return j;
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using cli_detail::json_int;
  using cli_detail::json_int_list;
  using cli_detail::ordered_json;
  using cli_detail::parse_int;
  using cli_detail::yn;

  CLI::App app{"exact crosscap numbers of closed non-orientable surfaces in lens spaces,\n"
               "with the even-vertex distance-2 slope tree behind them"};
  app.require_subcommand(0, 1);

  struct {
    std::string p, q;
    std::string method = "all";
    bool trace = false;
    bool json = false;
  } cr;
  CLI::App* c_cross = app.add_subcommand("crosscap", "minimum crosscap number Cr(p,q) in L(p,q)");
  c_cross->add_option("p", cr.p, "even lens space order")->required();
  c_cross->add_option("q", cr.q, "twisting parameter, coprime to p")->required();
  c_cross->add_option("--method", cr.method, "bw, new, path or all")
      ->check(CLI::IsMember({"bw", "new", "path", "all"}));
  c_cross->add_flag("--trace", cr.trace, "show the intermediate sequences");
  c_cross->add_flag("--json", cr.json);

  struct {
    std::string p, q;
    bool json = false;
  } pa;
  CLI::App* c_path = app.add_subcommand("path", "band-sum slope chain from 0/1 to p/q");
  c_path->add_option("p", pa.p)->required();
  c_path->add_option("q", pa.q)->required();
  c_path->add_flag("--json", pa.json);

  struct {
    std::string p, q;
    bool json = false;
  } cf;
  CLI::App* c_cf = app.add_subcommand("cf", "standard continued fraction expansion of p/q");
  c_cf->add_option("p", cf.p)->required();
  c_cf->add_option("q", cf.q)->required();
  c_cf->add_flag("--json", cf.json);

  struct {
    std::string p, q;
    bool json = false;
  } mo;
  CLI::App* c_mother = app.add_subcommand("mother", "unique smaller neighbor of p/q in the tree");
  c_mother->add_option("p", mo.p)->required();
  c_mother->add_option("q", mo.q)->required();
  c_mother->add_flag("--json", mo.json);

  struct {
    std::string p, q;
    int count = 6;
    bool json = false;
  } ch;
  CLI::App* c_children = app.add_subcommand("children", "first children of p/q in the tree");
  c_children->add_option("p", ch.p)->required();
  c_children->add_option("q", ch.q)->required();
  c_children->add_option("--count", ch.count, "how many children to list")->check(CLI::Range(0, 100000));
  c_children->add_flag("--json", ch.json);

  struct {
    std::string p, q;
    bool json = false;
  } ge;
  CLI::App* c_gen = app.add_subcommand("generation", "distance from 0/1 to p/q in the tree");
  c_gen->add_option("p", ge.p)->required();
  c_gen->add_option("q", ge.q)->required();
  c_gen->add_flag("--json", ge.json);

  struct {
    std::string p, q;
    bool json = false;
  } te;
  CLI::App* c_terr = app.add_subcommand("territory", "open interval holding p/q and its descendants");
  c_terr->add_option("p", te.p)->required();
  c_terr->add_option("q", te.q)->required();
  c_terr->add_flag("--json", te.json);

  struct {
    std::int64_t max_size = 500;
    std::int64_t max_p = 200;
    bool json = false;
  } ve;
  CLI::App* c_verify = app.add_subcommand("verify", "check the tree and the formulas by brute force");
  c_verify->add_option("--max-size", ve.max_size, "vertex size bound for the ball graph");
  c_verify->add_option("--max-p", ve.max_p, "largest even p for formula agreement");
  c_verify->add_flag("--json", ve.json);

  struct {
    int generations = 0;
    int children = 6;
    int label_depth = 3;
    std::vector<std::string> highlight;
    bool farey = false;
    std::string output;
    bool json = false;
  } re;
  CLI::App* c_render = app.add_subcommand("render", "draw the tree in the Poincare disk as SVG");
  c_render->add_option("--generations", re.generations, "tree depth to draw")->required();
  c_render->add_option("--children", re.children, "children cap per vertex")->check(CLI::Range(0, 1000));
  c_render->add_option("--label-depth", re.label_depth, "hide labels past this generation");
  c_render->add_option("--highlight", re.highlight, "slope path target p q")->expected(2);
  c_render->add_flag("--farey", re.farey, "underlay the distance-1 edges");
  c_render->add_option("-o,--output", re.output, "write the SVG here instead of stdout");
  c_render->add_flag("--json", re.json);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("lenscap");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return 0;
  }

  try {
    if (app.got_subcommand(c_cross)) {
      Int p = parse_int(cr.p);
      Int q = parse_int(cr.q);
      LensParams lens = normalize_lens(p, q);
      std::optional<BWTrace> bw;
      std::optional<NewTrace> nw;
      std::optional<PathResult> pr;
      if (cr.method == "bw" || cr.method == "all") bw = crosscap_bw(lens);
      if (cr.method == "new" || cr.method == "all") nw = crosscap_new(lens);
      if (cr.method == "path" || cr.method == "all") pr = slope_path(p, q);
      Int total = bw ? bw->total : nw ? nw->total : pr->crosscap;
      if (cr.json) {
        ordered_json j;
        j["command"] = "crosscap";
        j["p"] = json_int(p);
        j["q"] = json_int(q);
        j["q_normalized"] = json_int(lens.q_normalized);
        j["method"] = cr.method;
        j["crosscap"] = json_int(total);
        if (cr.method == "all") {
          j["methods"] = {{"bw", json_int(bw->total)},
                          {"new", json_int(nw->total)},
                          {"path", json_int(pr->crosscap)}};
        }
        if (cr.trace) {
          ordered_json t;
          if (bw) t["bw"] = {{"a", json_int_list(bw->expansion.terms)}, {"b", json_int_list(bw->b)}};
          if (nw) {
            ordered_json ap = ordered_json::array();
            for (const ExtRational& v : nw->alpha_prime) ap.push_back(v.str());
            t["new"] = {{"alpha", json_int_list(nw->alpha)},
                        {"alpha_prime", ap},
                        {"beta", json_int_list(nw->beta)}};
          }
          if (pr) {
            ordered_json slopes = ordered_json::array();
            for (const ExtRational& s : pr->slopes) slopes.push_back(s.str());
            t["path"] = {{"slopes", slopes}};
          }
          j["trace"] = t;
        }
        out << j.dump() << "\n";
      } else {
        out << "Cr(" << p << "," << q << ") = " << total;
        if (cr.method == "all") {
          out << " (bw=" << bw->total << ", new=" << nw->total << ", path=" << pr->crosscap << ")";
        }
        out << "\n";
        if (cr.trace) {
          if (lens.q_normalized != q) out << "q normalized to " << lens.q_normalized << "\n";
          if (bw) {
            out << "a = " << bw->expansion.str() << "\n";
            out << "b = " << cli_detail::join_ints(bw->b) << "\n";
          }
          if (nw) {
            out << "alpha (as written) = " << cli_detail::join_ints(nw->alpha) << "\n";
            out << "alpha' (tail term first) = " << cli_detail::join_terms(nw->alpha_prime) << "\n";
            out << "beta = " << cli_detail::join_ints(nw->beta) << "\n";
          }
          if (pr) {
            out << "path:";
            for (std::size_t i = 0; i < pr->slopes.size(); ++i) {
              out << (i ? " -> " : " ") << pr->slopes[i].str();
            }
            out << "\n";
          }
        }
      }
    } else if (app.got_subcommand(c_path)) {
      Int p = parse_int(pa.p);
      Int q = parse_int(pa.q);
      PathResult pr = slope_path(p, q);
      if (pa.json) {
        ordered_json j;
        j["command"] = "path";
        j["p"] = json_int(p);
        j["q"] = json_int(q);
        ordered_json slopes = ordered_json::array();
        for (const ExtRational& s : pr.slopes) slopes.push_back(s.str());
        j["slopes"] = slopes;
        ordered_json exps = ordered_json::array();
        for (const ContFrac& c : pr.expansions) exps.push_back(json_int_list(c.terms));
        j["expansions"] = exps;
        j["crosscap"] = json_int(pr.crosscap);
        j["euler_char"] = json_int(pr.euler_char);
        out << j.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < pr.slopes.size(); ++i) {
          out << "r" << i << " = " << pr.slopes[i].str() << "  " << pr.expansions[i].str() << "\n";
        }
        out << "crosscap = " << pr.crosscap << "\n";
        out << "euler characteristic = " << pr.euler_char << "\n";
      }
    } else if (app.got_subcommand(c_cf)) {
      Int p = parse_int(cf.p);
      Int q = parse_int(cf.q);
      ExtRational x = ExtRational::reduce(p, q);
      ContFrac e = std_expand(x);
      if (cf.json) {
        ordered_json j;
        j["command"] = "cf";
        j["value"] = x.str();
        j["terms"] = json_int_list(e.terms);
        out << j.dump() << "\n";
      } else {
        out << x.str() << " = " << e.str() << "\n";
      }
    } else if (app.got_subcommand(c_mother)) {
      ExtRational x = ExtRational::reduce(parse_int(mo.p), parse_int(mo.q));
      ExtRational m = mother(x);
      if (mo.json) {
        ordered_json j;
        j["command"] = "mother";
        j["vertex"] = x.str();
        j["mother"] = m.str();
        out << j.dump() << "\n";
      } else {
        out << "mother(" << x.str() << ") = " << m.str() << "\n";
      }
    } else if (app.got_subcommand(c_children)) {
      ExtRational x = ExtRational::reduce(parse_int(ch.p), parse_int(ch.q));
      std::vector<Int> ts = default_t_values(static_cast<std::size_t>(ch.count), x.is_zero());
      std::vector<ExtRational> cs = children(x, ts);
      if (ch.json) {
        ordered_json j;
        j["command"] = "children";
        j["vertex"] = x.str();
        ordered_json list = ordered_json::array();
        for (std::size_t i = 0; i < cs.size(); ++i) {
          list.push_back({{"t", json_int(ts[i])}, {"child", cs[i].str()}});
        }
        j["children"] = list;
        out << j.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < cs.size(); ++i) {
          out << "t=" << ts[i] << ": " << cs[i].str() << "\n";
        }
      }
    } else if (app.got_subcommand(c_gen)) {
      ExtRational x = ExtRational::reduce(parse_int(ge.p), parse_int(ge.q));
      Int g = generation(x);
      if (ge.json) {
        ordered_json j;
        j["command"] = "generation";
        j["vertex"] = x.str();
        j["generation"] = json_int(g);
        out << j.dump() << "\n";
      } else {
        out << "generation(" << x.str() << ") = " << g << "\n";
      }
    } else if (app.got_subcommand(c_terr)) {
      ExtRational x = ExtRational::reduce(parse_int(te.p), parse_int(te.q));
      Territory t = territory(x);
      if (te.json) {
        ordered_json j;
        j["command"] = "territory";
        j["vertex"] = x.str();
        j["lo"] = t.lo.str();
        j["hi"] = t.hi.str();
        out << j.dump() << "\n";
      } else {
        out << "territory(" << x.str() << ") = (" << t.lo.str() << ", " << t.hi.str() << ")\n";
      }
    } else if (app.got_subcommand(c_verify)) {
      VerifyReport tree = verify_tree(ve.max_size);
      VerifyReport formulas = verify_formulas(ve.max_p);
      bool ok = tree.all_passed() && formulas.all_passed();
      if (ve.json) {
        ordered_json j;
        j["command"] = "verify";
        j["max_size"] = ve.max_size;
        j["max_p"] = ve.max_p;
        j["tree"] = cli_detail::report_json(tree);
        j["formulas"] = cli_detail::report_json(formulas);
        j["all_passed"] = ok;
        out << j.dump() << "\n";
      } else {
        out << "tree ball, size <= " << ve.max_size << ": " << tree.vertex_count << " vertices, "
            << tree.edge_count << " edges\n";
        out << "  connected:               " << yn(tree.connected) << "\n";
        out << "  acyclic:                 " << yn(tree.acyclic) << "\n";
        out << "  parent matches mother:   " << yn(tree.parent_matches_mother) << "\n";
        out << "  depth matches formulas:  " << yn(tree.depth_matches_formulas) << "\n";
        if (tree.first_counterexample) {
          out << "  first counterexample (" << tree.first_counterexample->check
              << "): " << tree.first_counterexample->detail << "\n";
        }
        out << "formula agreement, even p <= " << ve.max_p << ": " << formulas.vertex_count
            << " cases\n";
        out << "  all methods agree:       " << yn(formulas.depth_matches_formulas) << "\n";
        if (formulas.first_counterexample) {
          out << "  first counterexample (" << formulas.first_counterexample->check
              << "): " << formulas.first_counterexample->detail << "\n";
        }
        out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
      }
      return ok ? 0 : 1;
    } else if (app.got_subcommand(c_render)) {
      RenderOptions opt;
      opt.children_per_vertex = re.children;
      opt.label_depth = re.label_depth;
      opt.farey = re.farey;
      if (!re.highlight.empty()) {
        opt.highlight = std::make_pair(parse_int(re.highlight[0]), parse_int(re.highlight[1]));
      }
      Scene scene = build_scene(re.generations, opt);
      std::string svg = render_svg(re.generations, opt);
      if (!re.output.empty()) {
        std::ofstream f(re.output, std::ios::binary);
        if (!f) throw DomainError("cannot open output file: " + re.output);
        f << svg;
        if (!f.good()) throw DomainError("failed writing output file: " + re.output);
      }
      if (re.json) {
        ordered_json j;
        j["command"] = "render";
        j["generations"] = re.generations;
        j["vertices"] = scene.vertices.size();
        j["edges"] = scene.edges.size();
        j["farey_edges"] = scene.farey_edges.size();
        j["path_length"] = scene.path.empty() ? 0 : scene.path.size() - 1;
        if (!re.output.empty()) {
          j["output"] = re.output;
        } else {
          j["svg"] = svg;
        }
        out << j.dump() << "\n";
      } else if (!re.output.empty()) {
        out << "wrote " << re.output << ": " << scene.vertices.size() << " vertices, "
            << scene.edges.size() << " edges\n";
      } else {
        out << svg;
      }
    }
  } catch (const cli_detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace lenscap
