// fibtab: k-ribbon Fibonacci tableaux from the command line.
//
// Subcommands cover the whole pipeline: insertion and its inverse, Fomin
// growth diagrams, evacuation and its inverse, shadow lines, P-equivalence
// classes, the colour/spin statistics, enumeration, and an exhaustive
// theorem checker.  Permutations are passed as "v^c" text (argument or
// stdin); tableaux travel as the JSON serialisation, one object per stream.
// Exit codes: 0 success, 1 verification failure, 2 bad input or usage.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fibtab/colored_permutation.hpp"
#include "fibtab/evacuation.hpp"
#include "fibtab/fib_word.hpp"
#include "fibtab/growth.hpp"
#include "fibtab/insertion.hpp"
#include "fibtab/serialize.hpp"
#include "fibtab/shadow.hpp"
#include "fibtab/stats.hpp"
#include "fibtab/tableau.hpp"
#include "fibtab/verify.hpp"

namespace {

using namespace fibtab;

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

colored_permutation permutation_input(const std::string& arg, int k) {
  return parse_permutation(arg.empty() ? read_stdin() : arg, k);
}

void print_tableau(std::ostream& out, const std::string& name, const tableau& t, bool json) {
  if (json) return;  // callers emit a combined JSON object instead
  out << name << " (shape " << format_word(shape_word(t)) << "):\n" << render_ascii(t);
}

int cmd_insert(const std::string& arg, int k, bool json) {
  insertion_pair pq = insert(permutation_input(arg, k));
  if (json) {
    std::cout << nlohmann::json{{"P", tableau_to_json(pq.p)}, {"Q", tableau_to_json(pq.q)}}.dump()
              << "\n";
  } else {
    std::cout << "shape: " << format_word(shape_word(pq.p)) << "\n";
    print_tableau(std::cout, "P", pq.p, false);
    print_tableau(std::cout, "Q", pq.q, false);
  }
  return 0;
}

int cmd_uninsert() {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_stdin());
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("uninsert: ") + e.what());
  }
  if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
    throw error("uninsert: expected a JSON object {\"P\":...,\"Q\":...} on stdin");
  tableau p = tableau_from_json(j["P"]);
  tableau q = tableau_from_json(j["Q"]);
  std::cout << format_permutation(uninsert(p, q)) << "\n";
  return 0;
}

int cmd_grow(const std::string& arg, int k, bool json) {
  growth_diagram g = build_growth(permutation_input(arg, k));
  tableau ph = extract_p_hat(g), qh = extract_q_hat(g);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 0; row <= g.n; ++row) {
      nlohmann::json r = nlohmann::json::array();
      for (int col = 0; col <= g.n; ++col) r.push_back(format_word(g.corner[col][row]));
      rows.push_back(r);
    }
    std::cout << nlohmann::json{{"corners", rows},
                                {"P_hat", tableau_to_json(ph)},
                                {"Q_hat", tableau_to_json(qh)}}
                     .dump()
              << "\n";
  } else {
    for (int row = g.n; row >= 0; --row) {
      std::cout << "row " << row << ":";
      for (int col = 0; col <= g.n; ++col) std::cout << " [" << format_word(g.corner[col][row]) << "]";
      std::cout << "\n";
    }
    print_tableau(std::cout, "P-hat", ph, false);
    print_tableau(std::cout, "Q-hat", qh, false);
  }
  return 0;
}

int cmd_evacuate(bool inverse_direction, bool json) {
  tableau in = parse_tableau(read_stdin());
  tableau out = inverse_direction ? unevacuate(in) : evacuate(in);
  if (json)
    std::cout << dump_tableau(out) << "\n";
  else
    print_tableau(std::cout, inverse_direction ? "unevacuated" : "evacuated", out, false);
  return 0;
}

int cmd_shadow(const std::string& arg, int k, bool json) {
  colored_permutation p = permutation_input(arg, k);
  auto lines = shadow_lines(p);
  tableau t = p_from_shadow(p);
  if (json) {
    nlohmann::json ls = nlohmann::json::array();
    for (const shadow_line& l : lines) {
      nlohmann::json jl = {{"high", {{"column", l.high.column}, {"row", l.high.row}, {"color", l.high.color}}}};
      if (!l.single())
        jl["right"] = {{"column", l.right.column}, {"row", l.right.row}, {"color", l.right.color}};
      ls.push_back(jl);
    }
    std::cout << nlohmann::json{{"lines", ls}, {"P", tableau_to_json(t)}}.dump() << "\n";
  } else {
    for (size_t i = 0; i < lines.size(); ++i) {
      const shadow_line& l = lines[i];
      std::cout << "L" << i + 1 << ": (" << l.high.column << "," << l.high.row << ")^"
                << l.high.color;
      if (!l.single())
        std::cout << " -> (" << l.right.column << "," << l.right.row << ")^" << l.right.color;
      std::cout << "\n";
    }
    print_tableau(std::cout, "P", t, false);
  }
  return 0;
}

int cmd_class(const std::string& arg, int k, bool fiber, long long max_states) {
  colored_permutation p = permutation_input(arg, k);
  std::vector<colored_permutation> members =
      fiber ? p_fiber_bruteforce(p, max_states) : positional_class(p);
  std::sort(members.begin(), members.end());
  for (const auto& q : members) std::cout << format_permutation(q) << "\n";
  return 0;
}

int cmd_stats(const std::string& arg, int k) {
  colored_permutation p = permutation_input(arg, k);
  insertion_pair pq = insert(p);
  std::cout << "color=" << color(p) << " vert=" << vert(pq.p) + vert(pq.q)
            << " split_P=" << split(pq.p) << " split_Q=" << split(pq.q)
            << " spin=" << spin(pq.p, pq.q) << "\n";
  return 0;
}

int cmd_enumerate(int k, std::optional<int> rank, const std::string& shape, bool standard,
                  bool path, std::optional<int> perms, bool count_only) {
  if (rank) {
    auto words = elements_of_rank(k, *rank);
    if (count_only) {
      std::cout << words.size() << "\n";
    } else {
      for (const fib_word& w : words) std::cout << format_word(w) << "\n";
    }
    return 0;
  }
  if (!shape.empty()) {
    if (standard == path) throw error("enumerate: pick exactly one of --standard / --path");
    fib_word w = parse_word(shape, k);
    auto ts = standard ? enumerate_standard(w) : enumerate_path(w);
    if (count_only) {
      std::cout << ts.size() << "\n";
    } else {
      for (const tableau& t : ts) std::cout << dump_tableau(t) << "\n";
    }
    return 0;
  }
  if (perms) {
    auto all = enumerate_all(*perms, k);
    if (count_only) {
      std::cout << all.size() << "\n";
    } else {
      for (const auto& p : all) std::cout << format_permutation(p) << "\n";
    }
    return 0;
  }
  throw error("enumerate: pass one of --rank, --shape, --perms");
}

int cmd_render(bool json) {
  tableau t = parse_tableau(read_stdin());
  if (json)
    std::cout << dump_tableau(t) << "\n";
  else
    std::cout << "shape: " << format_word(shape_word(t)) << "\n" << render_ascii(t);
  return 0;
}

int cmd_verify(int k, int n, int rank) {
  std::vector<check_result> results;
  results.push_back(check_worked_example());
  results.push_back(check_reference_class());
  for (int m = 0; m <= n; ++m) results.push_back(check_bijection_sweep(m, k));
  for (int r = 0; r <= rank; ++r) results.push_back(check_differential_identity(k, r));
  results.push_back(check_enumeration_equality(k, rank));
  results.push_back(check_evacuation_roundtrip(k, rank));
  results.push_back(check_degree_law(k, rank));
  for (int m = 0; m <= n; ++m) results.push_back(check_class_containment(m, k));
  bool all_ok = true;
  for (const check_result& r : results) {
    std::cout << (r.ok ? "ok:   " : "FAIL: ") << r.name;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
    all_ok = all_ok && r.ok;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-ribbon Fibonacci tableaux: insertion, growth diagrams, evacuation, "
               "shadow lines and statistics over the Fibonacci lattice Z(k)"};
  app.require_subcommand(1);

  int k = 0;
  std::string perm_arg;
  bool json = false, fiber = false, positional = false, standard = false, path = false;
  bool count_only = false;
  long long max_states = 2'000'000;
  std::optional<int> rank_opt, perms_opt;
  std::string shape_arg;
  int verify_n = 5, verify_rank = 6;

  auto add_k = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--k", k, "ambient colour count");
    if (required) opt->required();
  };
  auto add_perm = [&](CLI::App* sub) {
    sub->add_option("permutation", perm_arg, "permutation as v^c tokens (stdin when omitted)");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };

  CLI::App* c_insert = app.add_subcommand("insert", "insert a coloured permutation into (P, Q)");
  add_k(c_insert);
  add_perm(c_insert);
  add_json(c_insert);

  CLI::App* c_uninsert =
      app.add_subcommand("uninsert", "recover the permutation from {\"P\":...,\"Q\":...} on stdin");

  CLI::App* c_grow = app.add_subcommand("grow", "growth diagram with P-hat and Q-hat");
  add_k(c_grow);
  add_perm(c_grow);
  add_json(c_grow);

  CLI::App* c_evacuate = app.add_subcommand("evacuate", "evacuate a standard tableau (stdin JSON)");
  add_json(c_evacuate);
  CLI::App* c_unevacuate =
      app.add_subcommand("unevacuate", "invert evacuation on a path tableau (stdin JSON)");
  add_json(c_unevacuate);

  CLI::App* c_shadow = app.add_subcommand("shadow", "shadow lines and the P tableau they induce");
  add_k(c_shadow);
  add_perm(c_shadow);
  add_json(c_shadow);

  CLI::App* c_class = app.add_subcommand("class", "permutations sharing the P tableau");
  add_k(c_class);
  add_perm(c_class);
  c_class->add_flag("--positional", positional, "positional moves, colours fixed (default)");
  c_class->add_flag("--fiber", fiber, "exhaustive insertion fibre");
  c_class->add_option("--max-states", max_states, "guard for the exhaustive sweep");

  CLI::App* c_stats = app.add_subcommand("stats", "colour, vert, split and spin statistics");
  add_k(c_stats);
  add_perm(c_stats);

  CLI::App* c_enum = app.add_subcommand("enumerate", "words of a rank, tableaux of a shape, or permutations");
  add_k(c_enum);
  c_enum->add_option("--rank", rank_opt, "list the Z(k) words of this rank");
  c_enum->add_option("--shape", shape_arg, "list tableaux of this shape word");
  c_enum->add_flag("--standard", standard, "standard tableaux of --shape");
  c_enum->add_flag("--path", path, "path tableaux of --shape");
  c_enum->add_option("--perms", perms_opt, "list the coloured permutations of this size");
  c_enum->add_flag("--count", count_only, "print only the count");

  CLI::App* c_verify = app.add_subcommand("verify", "exhaustively check the structural theorems");
  c_verify->add_option("--k", k, "ambient colour count")->default_val(3);
  c_verify->add_option("--n", verify_n, "permutation size bound for the sweeps")->default_val(5);
  c_verify->add_option("--rank", verify_rank, "shape rank bound")->default_val(6);

  CLI::App* c_render = app.add_subcommand("render", "draw a tableau (stdin JSON) as an ASCII grid");
  add_json(c_render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_insert)) return cmd_insert(perm_arg, k, json);
    if (app.got_subcommand(c_uninsert)) return cmd_uninsert();
    if (app.got_subcommand(c_grow)) return cmd_grow(perm_arg, k, json);
    if (app.got_subcommand(c_evacuate)) return cmd_evacuate(false, json);
    if (app.got_subcommand(c_unevacuate)) return cmd_evacuate(true, json);
    if (app.got_subcommand(c_shadow)) return cmd_shadow(perm_arg, k, json);
    if (app.got_subcommand(c_class)) {
      if (positional && fiber) throw error("class: --positional and --fiber are exclusive");
      return cmd_class(perm_arg, k, fiber, max_states);
    }
    if (app.got_subcommand(c_stats)) return cmd_stats(perm_arg, k);
    if (app.got_subcommand(c_enum))
      return cmd_enumerate(k, rank_opt, shape_arg, standard, path, perms_opt, count_only);
    if (app.got_subcommand(c_verify)) return cmd_verify(k, verify_n, verify_rank);
    if (app.got_subcommand(c_render)) return cmd_render(json);
  } catch (const fibtab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
