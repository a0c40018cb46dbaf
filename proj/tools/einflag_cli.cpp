// Command-line driver: enumerate the two-summand painted diagrams, solve the
// Einstein systems, and regenerate the published reference values.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "einflag/classify.hpp"
#include "einflag/reproduce.hpp"

using json = nlohmann::ordered_json;
using namespace einflag;

namespace {

struct GlobalOpts {
  std::string format = "human";
  int precision = 12;
  Rat width = pow10(-12);
  std::string out;
};

struct Selector {
  std::string group;   // "E6", "B5", ...
  std::string family;  // "B", "C", "D"
  int n = 0;
  int node = 0;  // 1-based painted node
  int p = 0;     // alias for node in the classical families
  std::string type;
  std::string sweep;  // "a..b"

  std::vector<LieKind> kinds() const {
    std::vector<LieKind> out;
    if (!group.empty()) {
      out.push_back(LieKind::parse(group));
      return out;
    }
    if (family.empty()) throw CLI::ValidationError("selector", "need --group or --family");
    Family f;
    if (family == "B") f = Family::B;
    else if (family == "C") f = Family::C;
    else if (family == "D") f = Family::D;
    else throw CLI::ValidationError("selector", "--family must be B, C or D");
    if (!sweep.empty()) {
      auto dots = sweep.find("..");
      if (dots == std::string::npos)
        throw CLI::ValidationError("selector", "--sweep wants the form a..b");
      int a = std::stoi(sweep.substr(0, dots));
      int b = std::stoi(sweep.substr(dots + 2));
      for (int r = a; r <= b; ++r) out.push_back(LieKind::make(f, r));
      return out;
    }
    if (n == 0) throw CLI::ValidationError("selector", "--family needs --n or --sweep");
    out.push_back(LieKind::make(f, n));
    return out;
  }

  bool node_selected(const Decomposition& d) const {
    int want = node ? node : p;
    if (want && d.i0 + 1 != want) return false;
    if (!type.empty() && dtype_name(d.dtype) != type) return false;
    return true;
  }
};

std::ostream& output_stream(const GlobalOpts& g, std::ofstream& file) {
  if (g.out.empty()) return std::cout;
  file.open(g.out);
  if (!file) throw std::runtime_error("cannot open " + g.out);
  return file;
}

json number_json(const RatInterval& v, bool exact, int precision) {
  json j;
  if (exact) j["fraction"] = to_fraction_string(v.lo);
  j["decimal"] = to_decimal_string(v.mid(), precision);
  return j;
}

json solution_json(EinsteinSolution& s, const Decomposition& d, const GlobalOpts& g) {
  json j;
  j["branch"] = branch_name(s.branch);
  auto ivs = s.param_intervals(g.width);
  RatInterval e = s.e_interval(g.width);
  bool exact = s.exact();
  static const char* names[] = {"u0", "u1", "u2", "x1", "x2"};
  json params;
  auto blocks = d.blocks();
  for (size_t i = 0; i < ivs.size(); ++i) {
    const char* nm = names[blocks[i]];
    bool slot_exact = exact || ivs[i].is_point();
    params[nm] = number_json(ivs[i], slot_exact, g.precision);
  }
  j["params"] = params;
  j["e"] = number_json(e, exact, g.precision);
  j["residual_bound"] = to_fraction_string(s.residual_bound);
  j["classification"] = verdict_name(s.classification.verdict);
  j["witness"] = s.classification.witness;
  return j;
}

json poly_json(const RationalPoly& p) {
  json coeffs = json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
  return json{{"degree", p.degree()}, {"coeffs_ascending", coeffs}};
}

std::string fixed_width(const std::string& s, size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

// ---- spaces ----------------------------------------------------------------

int cmd_spaces(const Selector& sel, const GlobalOpts& g) {
  std::ofstream file;
  std::ostream& os = output_stream(g, file);
  json rows = json::array();
  for (const LieKind& k : sel.kinds()) {
    RootSystem rs = enumerate_positive_roots(k);
    for (const Decomposition& d : find_nodes_with_q2(rs)) {
      if (!sel.node_selected(d)) continue;
      json row;
      row["group"] = k.name();
      row["node"] = d.i0 + 1;
      row["type"] = dtype_name(d.dtype);
      row["d0"] = d.d0;
      row["d1"] = d.d1;
      row["d2"] = d.d2;
      row["d3"] = d.d3;
      row["d4"] = d.d4;
      row["dim_g"] = d.dim_g();
      rows.push_back(row);
    }
  }
  if (g.format == "json") {
    os << json{{"command", "spaces"}, {"rows", rows}}.dump(2) << "\n";
  } else if (g.format == "csv") {
    os << "group,node,type,d0,d1,d2,d3,d4,dim_g\n";
    for (auto& r : rows)
      os << r["group"].get<std::string>() << "," << r["node"] << "," << r["type"].get<std::string>()
         << "," << r["d0"] << "," << r["d1"] << "," << r["d2"] << "," << r["d3"] << ","
         << r["d4"] << "," << r["dim_g"] << "\n";
  } else {
    os << fixed_width("group", 8) << fixed_width("node", 6) << fixed_width("type", 6)
       << fixed_width("d0", 5) << fixed_width("d1", 7) << fixed_width("d2", 7)
       << fixed_width("d3", 7) << fixed_width("d4", 7) << "dim g\n";
    for (auto& r : rows)
      os << fixed_width(r["group"].get<std::string>(), 8)
         << fixed_width(std::to_string(r["node"].get<int>()), 6)
         << fixed_width(r["type"].get<std::string>(), 6)
         << fixed_width(std::to_string(r["d0"].get<long>()), 5)
         << fixed_width(std::to_string(r["d1"].get<long>()), 7)
         << fixed_width(std::to_string(r["d2"].get<long>()), 7)
         << fixed_width(std::to_string(r["d3"].get<long>()), 7)
         << fixed_width(std::to_string(r["d4"].get<long>()), 7) << r["dim_g"] << "\n";
  }
  return 0;
}

// ---- solve -----------------------------------------------------------------

int cmd_solve(const Selector& sel, const GlobalOpts& g, bool unit_e) {
  std::ofstream file;
  std::ostream& os = output_stream(g, file);
  SolveOptions opts;
  opts.refine_width = g.width;
  json groups = json::array();

  for (const LieKind& k : sel.kinds()) {
    RootSystem rs = enumerate_positive_roots(k);
    for (const Decomposition& d : find_nodes_with_q2(rs)) {
      if (!sel.node_selected(d)) continue;
      SolveResult res = solve(d, opts);
      for (auto& s : res.solutions) classify(s, d);

      json jg;
      jg["group"] = k.name();
      jg["node"] = d.i0 + 1;
      jg["type"] = dtype_name(d.dtype);
      jg["dims"] = {{"d0", d.d0}, {"d1", d.d1}, {"d2", d.d2}, {"d3", d.d3}, {"d4", d.d4}};
      jg["generic_polynomial"] = poly_json(res.generic_poly);
      jg["reductive_branch_polynomial"] = poly_json(res.nr_branch_poly);
      json sols = json::array();
      for (auto& s : res.solutions) sols.push_back(solution_json(s, d, g));
      jg["solutions"] = sols;
      if (unit_e) {
        json scaled = json::array();
        for (auto& s : res.solutions) {
          ScaledSolution sc = rescale_to_unit_e(s, g.width);
          json row = json::array();
          for (auto& p : sc.params) row.push_back(to_decimal_string(p.mid(), g.precision));
          scaled.push_back(row);
        }
        jg["solutions_unit_e"] = scaled;
      }
      json rej = json::array();
      for (auto& r : res.rejected)
        rej.push_back(json{{"near", to_decimal_string(r.where.mid(), 6)}, {"reason", r.reason}});
      jg["rejected_roots"] = rej;
      json notes = json::array();
      for (auto& n : res.notes) notes.push_back(n);
      jg["notes"] = notes;
      groups.push_back(jg);
    }
  }

  if (g.format == "json") {
    os << json{{"command", "solve"}, {"groups", groups}}.dump(2) << "\n";
    return 0;
  }
  if (g.format == "csv") {
    os << "group,node,type,branch,u0,u1,u2,x1,x2,e,residual_bound,classification\n";
    for (auto& jg : groups) {
      for (auto& s : jg["solutions"]) {
        auto dec = [&](const char* nm) -> std::string {
          if (!s["params"].contains(nm)) return "";
          return s["params"][nm]["decimal"].get<std::string>();
        };
        os << jg["group"].get<std::string>() << "," << jg["node"] << ","
           << jg["type"].get<std::string>() << "," << s["branch"].get<std::string>() << ","
           << dec("u0") << "," << dec("u1") << "," << dec("u2") << "," << dec("x1") << ","
           << dec("x2") << "," << s["e"]["decimal"].get<std::string>() << ","
           << s["residual_bound"].get<std::string>() << ","
           << s["classification"].get<std::string>() << "\n";
      }
    }
    return 0;
  }
  // human
  for (auto& jg : groups) {
    os << jg["group"].get<std::string>() << " node " << jg["node"] << " (type "
       << jg["type"].get<std::string>() << "), blocks (d0,...,d4) = (" << jg["dims"]["d0"] << ", "
       << jg["dims"]["d1"] << ", " << jg["dims"]["d2"] << ", " << jg["dims"]["d3"] << ", "
       << jg["dims"]["d4"] << ")\n";
    os << "  generic eliminant degree " << jg["generic_polynomial"]["degree"]
       << ", reductive branch degree " << jg["reductive_branch_polynomial"]["degree"] << "\n";
    for (auto& s : jg["solutions"]) {
      os << "  " << fixed_width(s["branch"].get<std::string>(), 26);
      for (const char* nm : {"u0", "u1", "u2", "x1", "x2"}) {
        if (!s["params"].contains(nm)) continue;
        auto& v = s["params"][nm];
        os << nm << " = "
           << (v.contains("fraction") ? v["fraction"].get<std::string>()
                                      : v["decimal"].get<std::string>())
           << "  ";
      }
      auto& e = s["e"];
      os << "e = "
         << (e.contains("fraction") ? e["fraction"].get<std::string>()
                                    : e["decimal"].get<std::string>());
      os << "  [" << s["classification"].get<std::string>() << "]\n";
    }
    for (auto& r : jg["rejected_roots"])
      os << "  rejected root near " << r["near"].get<std::string>() << ": "
         << r["reason"].get<std::string>() << "\n";
  }
  return 0;
}

// ---- reproduce -------------------------------------------------------------

int cmd_reproduce(const GlobalOpts& g, bool full_sweep, int rank_max) {
  std::ofstream file;
  std::ostream& os = output_stream(g, file);
  ReproduceOptions opts;
  opts.include_sweep = full_sweep;
  if (rank_max > 0) {
    opts.table_rank_max = std::min(rank_max, 12);
    opts.sign_rank_max = rank_max;
    opts.sweep_rank_max = rank_max;
  }
  auto checks = run_reproduction(opts);
  int failures = 0;
  for (const auto& c : checks)
    if (!c.pass) ++failures;

  if (g.format == "json") {
    json arr = json::array();
    for (const auto& c : checks) {
      json j;
      j["id"] = c.id;
      j["paper_ref"] = c.ref;
      j["expected"] = c.expected;
      j["computed"] = c.computed;
      j["pass"] = c.pass;
      if (!c.note.empty()) j["note"] = c.note;
      arr.push_back(j);
    }
    os << json{{"command", "reproduce"},
               {"checks", arr},
               {"total", checks.size()},
               {"failures", failures}}
              .dump(2)
       << "\n";
  } else {
    for (const auto& c : checks) {
      os << (c.pass ? "PASS " : "FAIL ") << fixed_width(c.id, 28) << " expected: " << c.expected
         << "  computed: " << c.computed;
      if (!c.note.empty()) os << "  note: " << c.note;
      os << "\n";
    }
    os << checks.size() << " checks, " << failures << " failures\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein metrics on compact simple Lie groups from two-summand painted diagrams"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string width_str;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--precision", g.precision, "decimal digits in reports")
      ->check(CLI::Range(6, 200))
      ->capture_default_str();
  app.add_option("--width", width_str, "refinement width for root enclosures (default 1e-12)");
  app.add_option("--out", g.out, "write output to a file instead of stdout");

  Selector sel;
  auto add_selector = [&](CLI::App* cmd) {
    cmd->add_option("--group", sel.group, "group name, e.g. E7 or B5");
    cmd->add_option("--family", sel.family, "classical family B, C or D");
    cmd->add_option("--n", sel.n, "rank for --family");
    cmd->add_option("--node", sel.node, "painted node (1-based)");
    cmd->add_option("--p", sel.p, "painted node for classical families");
    cmd->add_option("--type", sel.type, "filter by type Ia/Ib/IIa/IIb")
        ->check(CLI::IsMember({"Ia", "Ib", "IIa", "IIb"}));
    cmd->add_option("--sweep", sel.sweep, "rank range a..b for --family");
  };

  CLI::App* spaces = app.add_subcommand("spaces", "list two-summand painted diagrams");
  add_selector(spaces);

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve the Einstein systems");
  add_selector(solve_cmd);
  bool unit_e = false;
  solve_cmd->add_flag("--unit-e", unit_e, "also report solutions rescaled to e = 1");

  CLI::App* repro = app.add_subcommand("reproduce", "regenerate the published reference values");
  bool full_sweep = false;
  int rank_max = 0;
  repro->add_flag("--full-sweep", full_sweep, "include the rank sweep up to 30 (slower)");
  repro->add_option("--rank-max", rank_max, "cap the rank ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!width_str.empty()) {
      g.width = parse_rat(width_str);
      if (g.width <= 0) throw std::invalid_argument("--width must be positive");
    }
    if (spaces->parsed()) return cmd_spaces(sel, g);
    if (solve_cmd->parsed()) return cmd_solve(sel, g, unit_e);
    if (repro->parsed()) return cmd_reproduce(g, full_sweep, rank_max);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
