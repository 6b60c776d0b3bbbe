// borel: command-line front end.
//
// Exit status: 0 success, 1 a checked property does not hold, 2 usage
// error (bad flags, malformed input, input outside the poset, cap hit).

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "borel/borel.hpp"
#include "borel/verify.hpp"

namespace {

using namespace borel;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw parse_error("expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

std::string set_text(const MonomialSet& F) {
  std::string s = "{";
  for (const auto& m : F) s += (s.size() > 1 ? ", " : "") + m.to_string();
  return s + "}";
}

/// Number of variables to pad JSON exponent arrays to.
int json_width(const PosetId& p, const std::vector<Monomial>& ms) {
  int n = p.nvars.value_or(0);
  for (const auto& m : ms) n = std::max(n, m.max_supp());
  return n;
}

std::string relation_text(const PosetId& p, const Monomial& a, const Monomial& b) {
  const bool le = leq(p, a, b), ge = leq(p, b, a);
  if (le && ge) return "=";
  if (le) return "<";
  if (ge) return ">";
  return "||";
}

// ---------------------------------------------------------------------------

struct PosetArgs {
  std::string poset;
  std::optional<int> max_degree;

  void add(CLI::App* cmd) {
    cmd->add_option("--poset", poset, "poset, e.g. A[n=3,d=4], B[n=3], D[n=2,d=5]")->required();
    cmd->add_option("--max-degree", max_degree, "truncation degree for posets of unbounded degree");
  }

  PosetId id() const { return parse_poset(poset); }

  HasseDiagram diagram(std::size_t cap) const { return HasseDiagram(id(), max_degree, cap); }
};

int run_compare(const PosetArgs& pa, const std::string& a, const std::string& b, const std::string& format) {
  const auto p = pa.id();
  const auto m = parse_monomial(a), mp = parse_monomial(b);
  require_ground(p, m);
  require_ground(p, mp);
  const auto rel = relation_text(p, m, mp);
  if (format == "json")
    std::cout << json{{"poset", p.to_string()}, {"left", m.to_string()}, {"right", mp.to_string()}, {"relation", rel}}.dump() << "\n";
  else
    std::cout << m.to_string() << " " << rel << " " << mp.to_string() << "\n";
  return kOk;
}

int run_hasse(const PosetArgs& pa, const std::string& format, std::size_t cap) {
  const auto h = pa.diagram(cap);
  if (format == "json") {
    std::cout << hasse_to_json(h).dump(2) << "\n";
  } else if (format == "dot") {
    std::cout << hasse_to_dot(h);
  } else {
    std::cout << h.label() << ": " << h.size() << " vertices, " << h.covers().size() << " covers\n";
    for (std::size_t k = 0; k < h.size(); ++k) {
      std::cout << h.vertex(k).to_string() << " <";
      for (auto u : h.upper_covers(k)) std::cout << " " << h.vertex(u).to_string();
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_lattice_op(bool is_meet, const PosetArgs& pa, const std::string& a, const std::string& b, std::size_t cap) {
  const auto p = pa.id();
  const auto m = parse_monomial(a), mp = parse_monomial(b);
  require_ground(p, m);
  require_ground(p, mp);
  std::optional<Monomial> r;
  if (p.family == Family::A) {
    r = is_meet ? meet_A(m, mp, p) : join_A(m, mp, p);
  } else if (p.family == Family::B && p.finite()) {
    r = is_meet ? meet_B(m, mp, *p.nvars, *p.degree) : join_B(m, mp, *p.nvars, *p.degree);
  } else {
    const auto h = pa.diagram(cap);
    LatticeTables t(h);
    const auto k = is_meet ? t.meet(h.index_of(m), h.index_of(mp)) : t.join(h.index_of(m), h.index_of(mp));
    if (k != LatticeTables::npos) r = h.vertex(k);
  }
  if (!r) {
    std::cout << "no " << (is_meet ? "meet" : "join") << " of " << m.to_string() << " and " << mp.to_string() << " in " << p.to_string() << "\n";
    return kViolation;
  }
  std::cout << r->to_string() << "\n";
  return kOk;
}

int run_count(const PosetArgs& pa, std::optional<long> v, bool by_cardinality, const std::string& format, std::size_t cap) {
  const auto h = pa.diagram(cap);
  if (by_cardinality) {
    const auto dist = filter_distribution(h);
    if (format == "json") {
      json arr = json::array();
      for (const auto& c : dist) arr.push_back(c.str());
      std::cout << json{{"poset", h.label()}, {"by_cardinality", arr}}.dump() << "\n";
    } else {
      for (std::size_t k = 0; k < dist.size(); ++k) std::cout << k << " " << dist[k] << "\n";
    }
    return kOk;
  }
  const auto c = count_filters(h, v);
  if (format == "json") {
    json out{{"poset", h.label()}, {"count", c.str()}};
    if (v) out["cardinality"] = *v;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << c << "\n";
  }
  return kOk;
}

int run_enumerate(const PosetArgs& pa, std::optional<long> v, const std::string& format, std::size_t vertex_cap, std::size_t filter_cap) {
  const auto h = pa.diagram(vertex_cap);
  const auto filters = enumerate_filters(h, v, filter_cap);
  if (format == "json") {
    const int n = json_width(h.poset(), h.vertices());
    json arr = json::array();
    for (const auto& F : filters) arr.push_back(filter_to_json(F, n));
    std::cout << arr.dump() << "\n";
  } else {
    for (const auto& F : filters) std::cout << set_text(F) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct BijectionArgs {
  std::string monomial, diagram, filter, parts, walk;
  int d = -1;
};

int run_bijection(const std::string& kind, const BijectionArgs& a) {
  if (kind == "young") {
    if (!a.monomial.empty()) {
      std::cout << monomial_to_young(parse_monomial(a.monomial)).to_string() << "\n";
    } else if (!a.diagram.empty()) {
      std::cout << young_to_monomial(FerrersDiagram(parse_int_list(a.diagram))).to_string() << "\n";
    } else {
      throw parse_error("bijection young needs --monomial or --diagram");
    }
    return kOk;
  }
  if (a.d < 0) throw parse_error("bijection " + kind + " needs --d");
  if (kind == "partition") {
    if (!a.filter.empty()) {
      const auto p = filter3_to_distinct_partition(filter_from_json_text(a.filter), a.d);
      std::string s;
      for (int x : p.parts()) s += (s.empty() ? "" : ",") + std::to_string(x);
      std::cout << (s.empty() ? "()" : s) << "  square-free " << distinct_partition_to_squarefree(p, a.d).to_string() << "\n";
    } else {  // no --parts means the empty partition
      const auto p = DistinctPartition(a.parts.empty() ? std::vector<int>{} : parse_int_list(a.parts), a.d + 1);
      std::cout << filter_to_json(distinct_partition_to_filter3(p, a.d), 3).dump() << "\n";
    }
    return kOk;
  }
  if (kind == "walk") {
    if (!a.filter.empty()) {
      const auto w = stable_filter_to_walk(filter_from_json_text(a.filter), a.d);
      std::cout << w.to_string() << "  weight " << walk_weight(w, a.d) << "\n";
    } else if (!a.walk.empty()) {
      const auto w = parse_walk(a.walk, a.d + 2);
      std::cout << filter_to_json(walk_to_stable_filter(w, a.d), 2).dump() << "\n";
    } else {
      throw parse_error("bijection walk needs --filter or --walk");
    }
    return kOk;
  }
  throw parse_error("unknown bijection '" + kind + "' (expected young, partition or walk)");
}

// ---------------------------------------------------------------------------

int run_termorder_check(const std::string& order, int n, int maxdeg, const std::string& against) {
  const auto o = parse_term_order(order);
  const bool ordinal = against == "ordinal";
  const auto v = ordinal ? refines_ordinal_sum(o, n, maxdeg) : refines_A(o, n, maxdeg);
  const std::string target = ordinal ? "the ordinal sum" : "A_{" + std::to_string(n) + ",.}";
  if (v) {
    std::cout << o.to_string() << " does not refine " << target << ": " << v->first.to_string() << " < " << v->second.to_string()
              << " but not in " << o.to_string() << "\n";
    return kViolation;
  }
  std::cout << o.to_string() << " refines " << target << " up to degree " << maxdeg << "\n";
  return kOk;
}

int run_termorder_separate(const std::string& a, const std::string& b, int n, bool degree_compatible) {
  const auto m = parse_monomial(a), mp = parse_monomial(b);
  const bool comparable = degree_compatible ? (ordinal_sum_leq(m, mp, n) || ordinal_sum_leq(mp, m, n)) : (leq_A(m, mp) || leq_A(mp, m));
  if (comparable) {
    std::cout << m.to_string() << " and " << mp.to_string() << " are comparable; no order can separate them\n";
    return kViolation;
  }
  const auto w = separating_witnesses(m, mp, n, degree_compatible);
  std::cout << w.greater.to_string() << ": " << m.to_string() << " > " << mp.to_string() << "\n";
  std::cout << w.less.to_string() << ": " << m.to_string() << " < " << mp.to_string() << "\n";
  return kOk;
}

Family ideal_family(const std::string& order) {
  if (order == "A") return Family::A;
  if (order == "B") return Family::B;
  throw parse_error("--order must be A (Borel) or B (stable)");
}

int run_ideal(const std::string& action, const std::string& order, const std::string& gens) {
  const auto f = ideal_family(order);
  const auto g = parse_generators(gens);
  const std::string kind = f == Family::A ? "Borel" : "stable";
  if (action == "check") {
    const bool ok = is_ideal_closed(g, f);
    std::cout << g.to_string() << (ok ? " is " : " is not ") << kind << "\n";
    return ok ? kOk : kViolation;
  }
  if (action == "close") {
    std::cout << borel_closure(g, f).to_string() << "\n";
    return kOk;
  }
  throw parse_error("unknown ideal action '" + action + "' (expected check or close)");
}

int run_gf(const std::string& which, int terms) {
  if (which != "fountains") throw parse_error("unknown generating function '" + which + "' (expected fountains)");
  if (terms < 1) throw parse_error("--terms must be positive");
  const auto c = fountain_gf_coefficients(terms - 1);
  for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? " " : "") << c[k];
  std::cout << "\n";
  return kOk;
}

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& format, bool list) {
  if (list) {
    for (const auto& s : suite_names()) std::cout << s << "\n";
    std::cout << "all\n";
    return kOk;
  }
  const auto reports = run_suites(suite, seed);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    if (format == "json") {
      arr.push_back({{"suite", r.suite}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}, {"notes", r.notes},
                     {"ok", r.ok()}});
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << "  " << r.passed << " passed, " << r.failed << " failed\n";
    for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
    for (const auto& nt : r.notes) std::cout << "  note: " << nt << "\n";
  }
  if (format == "json") std::cout << arr.dump(2) << "\n";
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orders, lattices and filters on monomials"};
  app.require_subcommand(1);
  std::size_t cap = HasseDiagram::default_cap;
  std::size_t filter_cap = 1'000'000;
  app.add_option("--cap", cap, "vertex cap for Hasse diagrams")->capture_default_str();
  app.add_option("--filter-cap", filter_cap, "cap on enumerated filters")->capture_default_str();

  const std::vector<std::string> text_json{"text", "json"};
  std::string format = "text";

  PosetArgs cmp_p;
  std::string cmp_a, cmp_b;
  auto* cmp = app.add_subcommand("compare", "compare two monomials");
  cmp_p.add(cmp);
  cmp->add_option("m1", cmp_a)->required();
  cmp->add_option("m2", cmp_b)->required();
  cmp->add_option("--format", format)->check(CLI::IsMember(text_json));

  PosetArgs hasse_p;
  auto* hasse = app.add_subcommand("hasse", "print the Hasse diagram");
  hasse_p.add(hasse);
  hasse->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

  PosetArgs meet_p, join_p;
  std::string ma, mb, ja, jb;
  auto* meet = app.add_subcommand("meet", "greatest lower bound");
  meet_p.add(meet);
  meet->add_option("m1", ma)->required();
  meet->add_option("m2", mb)->required();
  auto* joinc = app.add_subcommand("join", "least upper bound");
  join_p.add(joinc);
  joinc->add_option("m1", ja)->required();
  joinc->add_option("m2", jb)->required();

  PosetArgs count_p;
  std::optional<long> count_v;
  bool by_card = false;
  auto* count = app.add_subcommand("count", "count filters");
  count_p.add(count);
  count->add_option("--cardinality", count_v, "only filters with this many elements");
  count->add_flag("--by-cardinality", by_card, "print the count for every cardinality");
  count->add_option("--format", format)->check(CLI::IsMember(text_json));

  PosetArgs enum_p;
  std::optional<long> enum_v;
  auto* enumerate = app.add_subcommand("enumerate", "list filters");
  enum_p.add(enumerate);
  enumerate->add_option("--cardinality", enum_v, "only filters with this many elements");
  enumerate->add_option("--format", format)->check(CLI::IsMember(text_json));

  std::string bij_kind;
  BijectionArgs bij;
  auto* bijection = app.add_subcommand("bijection", "apply a bijection");
  bijection->add_option("kind", bij_kind, "young, partition or walk")->required();
  bijection->add_option("--monomial", bij.monomial, "young: monomial to convert");
  bijection->add_option("--diagram", bij.diagram, "young: row lengths, e.g. 3,2,2");
  bijection->add_option("--filter", bij.filter, "partition/walk: filter as JSON");
  bijection->add_option("--parts", bij.parts, "partition: strictly decreasing parts, e.g. 4,2");
  bijection->add_option("--walk", bij.walk, "walk: steps, e.g. \"D4 R3 D1 R2\"");
  bijection->add_option("--d", bij.d, "degree");

  std::string to_action, to_order = "lex", to_against = "A";
  std::vector<std::string> to_monomials;
  int to_n = 3, to_maxdeg = 6;
  bool to_degcompat = false;
  auto* termorder = app.add_subcommand("termorder", "term order checks");
  termorder->add_option("action", to_action, "check or separate")->required()->check(CLI::IsMember({"check", "separate"}));
  termorder->add_option("monomials", to_monomials, "separate: the two monomials");
  termorder->add_option("--order", to_order)->check(CLI::IsMember({"lex", "deglex", "degrevlex"}));
  termorder->add_option("--against", to_against, "check: A or ordinal")->check(CLI::IsMember({"A", "ordinal"}));
  termorder->add_option("--n", to_n)->check(CLI::Range(1, 12));
  termorder->add_option("--max-degree", to_maxdeg)->check(CLI::Range(0, 40));
  termorder->add_flag("--degree-compatible", to_degcompat, "separate: witnesses that compare degree first");

  std::string id_action, id_order = "A", id_gens;
  auto* ideal = app.add_subcommand("ideal", "Borel and stable ideals");
  ideal->add_option("action", id_action, "check or close")->required();
  ideal->add_option("--order", id_order, "A (Borel) or B (stable)");
  ideal->add_option("--gens", id_gens, "generators, e.g. x1^2,x1*x2")->required();

  std::string gf_which;
  int gf_terms = 13;
  auto* gf = app.add_subcommand("gf", "generating function coefficients");
  gf->add_option("which", gf_which, "fountains")->required();
  gf->add_option("--terms", gf_terms)->capture_default_str();

  std::string suite = "all";
  std::uint64_t seed = default_seed;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run self-check suites");
  verify->add_option("--suite", suite)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--list", list, "list suite names");
  verify->add_option("--format", format)->check(CLI::IsMember(text_json));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cmp) return run_compare(cmp_p, cmp_a, cmp_b, format);
    if (*hasse) return run_hasse(hasse_p, format, cap);
    if (*meet) return run_lattice_op(true, meet_p, ma, mb, cap);
    if (*joinc) return run_lattice_op(false, join_p, ja, jb, cap);
    if (*count) return run_count(count_p, count_v, by_card, format, cap);
    if (*enumerate) return run_enumerate(enum_p, enum_v, format, cap, filter_cap);
    if (*bijection) return run_bijection(bij_kind, bij);
    if (*termorder) {
      if (to_action == "check") return run_termorder_check(to_order, to_n, to_maxdeg, to_against);
      if (to_monomials.size() != 2) throw parse_error("termorder separate needs two monomials");
      return run_termorder_separate(to_monomials[0], to_monomials[1], to_n, to_degcompat);
    }
    if (*ideal) return run_ideal(id_action, id_order, id_gens);
    if (*gf) return run_gf(gf_which, gf_terms);
    if (*verify) return run_verify(suite, seed, format, list);
  } catch (const structure_error& e) {
    std::cerr << "borel: " << e.what() << "\n";
    return kViolation;
  } catch (const error& e) {
    std::cerr << "borel: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
