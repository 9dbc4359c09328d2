#include "feasreg/analysis.hpp"
#include "feasreg/colouring.hpp"
#include "feasreg/enumeration.hpp"
#include "feasreg/errors.hpp"
#include "feasreg/geometry.hpp"
#include "feasreg/io.hpp"
#include "feasreg/overlap.hpp"
#include "feasreg/reproduce.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace feasreg;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kCap = 3, kInternal = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string avoid;
  std::size_t monotone = 0;
  std::string symmetry;
  std::size_t k = 3;
  std::string format = "text";
  std::size_t cap_cycles = 1'000'000;
  std::string out;
};

// The class after applying --symmetry. Increasing monotone classes are served
// through the reverse map onto the decreasing pattern of the same size.
struct ResolvedClass {
  PatternSet patterns;
  std::size_t monotone_n = 0;
  bool via_reverse = false;

  bool monotone() const { return monotone_n != 0; }
  // Maps a pattern of the requested class onto the class actually computed.
  Permutation to_computed(const Permutation& p) const { return via_reverse ? p.reverse() : p; }
};

ResolvedClass resolve(const Common& c) {
  ResolvedClass r;
  if (c.monotone) {
    if (c.monotone < 2) throw UsageError("--monotone needs n >= 2");
    r.patterns = {Permutation::decreasing(c.monotone)};
  } else if (!c.avoid.empty()) {
    r.patterns = parse_pattern_set(c.avoid);
  }
  if (c.symmetry == "reverse" || c.symmetry == "complement") {
    for (auto& p : r.patterns) p = c.symmetry == "reverse" ? p.reverse() : p.complement();
    std::sort(r.patterns.begin(), r.patterns.end());
  } else if (c.symmetry == "inverse") {
    throw UsageError("the inverse map does not preserve consecutive pattern occurrences, so it does not act on feasible regions");
  } else if (!c.symmetry.empty()) {
    throw UsageError("unknown symmetry '" + c.symmetry + "'");
  }
  if (r.patterns.size() == 1 && r.patterns[0].size() >= 2) {
    const auto& p = r.patterns[0];
    if (p == Permutation::decreasing(p.size())) r.monotone_n = p.size();
    if (p == Permutation::identity(p.size())) {
      r.monotone_n = p.size();
      r.via_reverse = true;
    }
  }
  return r;
}

// Single size-3 non-monotone patterns: the cycle polytope is the feasible
// region (the 312 case and its images under reverse and complement).
bool cycle_polytope_is_region(const ResolvedClass& r) {
  if (r.patterns.empty()) return true;
  if (r.patterns.size() != 1 || r.patterns[0].size() != 3) return false;
  const auto& p = r.patterns[0];
  return p != Permutation{1, 2, 3} && p != Permutation{3, 2, 1};
}

std::string describe(const ResolvedClass& r) {
  if (r.patterns.empty()) return "all permutations";
  std::string s = "Av(";
  for (std::size_t i = 0; i < r.patterns.size(); ++i) s += (i ? "," : "") + r.patterns[i].compact();
  return s + ")";
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const std::filesystem::path target(c.out);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << text;
  }
  std::filesystem::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw UsageError("format '" + c.format + "' is not available for this command");
}

// Point over S_k: positional in conventional_order(k), or "pattern=value" pairs.
std::map<Permutation, Rational> parse_point(const std::string& text, std::size_t k) {
  std::map<Permutation, Rational> point;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  const bool labelled = text.find('=') != std::string::npos;
  if (labelled) {
    for (const auto& part : parts) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw UsageError("mixed labelled and positional point entries");
      const Permutation p = parse_permutation(part.substr(0, eq));
      if (p.size() != k) throw UsageError("point label " + p.compact() + " has the wrong size");
      point[p] = parse_rational(part.substr(eq + 1));
    }
  } else {
    const auto order = conventional_order(k);
    if (parts.size() != order.size())
      throw UsageError("expected " + std::to_string(order.size()) + " coordinates, got " + std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) point[order[i]] = parse_rational(parts[i]);
  }
  return point;
}

// Coordinates on the computed class's size-k avoiders (lexicographic). Returns
// nullopt if mass sits on a pattern outside the class.
std::optional<RatVector> restrict_point(const std::map<Permutation, Rational>& point, const ResolvedClass& r,
                                        const std::vector<Permutation>& order) {
  RatVector v = RatVector::Zero(static_cast<Eigen::Index>(order.size()));
  for (const auto& [p, value] : point) {
    const Permutation q = r.to_computed(p);
    auto it = std::lower_bound(order.begin(), order.end(), q);
    if (it == order.end() || *it != q) {
      if (value != 0) return std::nullopt;
      continue;
    }
    v(it - order.begin()) = value;
  }
  return v;
}

PatternSet computed_patterns(const ResolvedClass& r) {
  return r.monotone() ? PatternSet{Permutation::decreasing(r.monotone_n)} : r.patterns;
}

int cmd_enumerate(const Common& c, std::size_t size, bool count_only) {
  require_format(c, {"text", "json"});
  const auto r = resolve(c);
  const auto perms = enumerate_avoiders(size, r.patterns);
  if (count_only) {
    emit(c, c.format == "json" ? dump(Json{{"size", size}, {"count", std::to_string(perms.size())}})
                               : std::to_string(perms.size()) + "\n");
    return kYes;
  }
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& p : perms) arr.push_back(to_json(p));
    emit(c, dump(arr));
  } else {
    std::string s;
    for (const auto& p : perms) s += p.to_string() + "\n";
    emit(c, s);
  }
  return kYes;
}

int cmd_graph(const Common& c, bool plain) {
  require_format(c, {"text", "json", "dot"});
  const auto r = resolve(c);
  if (r.monotone() && !plain) {
    if (r.via_reverse) std::cerr << "note: showing the coloured graph of the reversed (decreasing) class\n";
    const auto cog = build_coloured_overlap(r.monotone_n, c.k);
    if (c.format == "dot") return emit(c, to_dot(cog.graph)), kYes;
    if (c.format == "json") return emit(c, dump(to_json(cog.graph))), kYes;
    std::string s;
    for (std::size_t e = 0; e < cog.graph.edge_count(); ++e)
      s += cog.graph.vertex_label(cog.graph.edge(e).source).pretty() + " -> " +
           cog.graph.vertex_label(cog.graph.edge(e).target).pretty() + " : " + cog.graph.edge_label(e).pretty() + "\n";
    emit(c, s);
    return kYes;
  }
  const auto og = build_overlap_graph(c.k, r.patterns);
  if (c.format == "dot") return emit(c, to_dot(og.graph)), kYes;
  if (c.format == "json") return emit(c, dump(to_json(og.graph))), kYes;
  std::string s;
  for (std::size_t e = 0; e < og.graph.edge_count(); ++e)
    s += og.graph.vertex_label(og.graph.edge(e).source).compact() + " -> " +
         og.graph.vertex_label(og.graph.edge(e).target).compact() + " : " + og.graph.edge_label(e).compact() + "\n";
  emit(c, s);
  return kYes;
}

std::string polytope_text(const VPolytope<Rational>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.labels.size(); ++i) s += (i ? " " : "") + pretty_label(p.labels[i]);
  s += "\n";
  for (const auto& v : p.vertices) {
    for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v(i));
    s += "\n";
  }
  return s;
}

VPolytope<Rational> relabel_reversed(VPolytope<Rational> p) {
  for (auto& l : p.labels) l = parse_permutation(l).reverse().compact();
  return p;
}

int cmd_polytope(const Common& c, bool h_form, bool coloured) {
  require_format(c, {"text", "json", "csv"});
  const auto r = resolve(c);
  if (coloured && !r.monotone()) throw UsageError("--coloured needs a monotone class");
  if (h_form) {
    HPolytope<Rational> h;
    if (r.monotone() && coloured) h = h_representation<Rational>(build_coloured_overlap(r.monotone_n, c.k).graph);
    else h = h_representation<Rational>(build_overlap_graph(c.k, r.patterns).graph);
    if (c.format == "json") return emit(c, dump(to_json(h))), kYes;
    LabelledMatrix<Rational> m{h.constraint_labels, h.labels, h.equalities};
    m.col_labels.push_back("rhs");
    m.values.conservativeResize(Eigen::NoChange, m.values.cols() + 1);
    m.values.col(m.values.cols() - 1) = h.rhs;
    emit(c, c.format == "csv" ? to_csv(m) : to_text(m));
    return kYes;
  }
  VPolytope<Rational> p;
  if (r.monotone()) {
    const auto cog = build_coloured_overlap(r.monotone_n, c.k);
    p = cycle_polytope<Rational>(cog.graph, c.cap_cycles);
    if (!coloured) {
      p = project_forget_colours(forget_colours_matrix(cog), p);
      if (r.via_reverse) p = relabel_reversed(std::move(p));
    }
  } else {
    if (!cycle_polytope_is_region(r))
      std::cerr << "note: for " << describe(r) << " the cycle polytope is an outer bound of the feasible region\n";
    p = cycle_polytope<Rational>(build_overlap_graph(c.k, r.patterns).graph, c.cap_cycles);
  }
  if (c.format == "json") {
    Json j = to_json(p);
    j["affine_dimension"] = std::to_string(p.vertices.empty() ? 0 : affine_dimension(p.vertices));
    emit(c, dump(j));
  } else {
    emit(c, c.format == "csv" ? to_csv(p) : polytope_text(p));
  }
  return kYes;
}

int cmd_membership(const Common& c, const std::string& point_text, bool projected) {
  require_format(c, {"text", "json"});
  const auto r = resolve(c);
  if (projected && !r.monotone()) throw UsageError("--projected needs a monotone class");
  const auto point = parse_point(point_text, c.k);
  const auto order = enumerate_avoiders(c.k, computed_patterns(r));
  const auto v = restrict_point(point, r, order);
  bool member = false;
  std::string region;
  if (v) {
    if (projected) {
      const auto cog = build_coloured_overlap(r.monotone_n, c.k);
      member = projection_contains(h_representation<Rational>(cog.graph), forget_colours_matrix(cog), *v);
      region = "feasible region of " + describe(r);
    } else {
      const auto og = build_overlap_graph(c.k, computed_patterns(r));
      member = contains_point(h_representation<Rational>(og.graph), *v);
      region = "cycle polytope of the overlap graph of " + describe(r);
    }
  }
  if (c.format == "json") emit(c, dump(Json{{"member", member}, {"region", region}}));
  else emit(c, member ? "YES\n" : "NO\n");
  return member ? kYes : kNo;
}

int cmd_pack(const Common& c, const std::string& pattern_text) {
  require_format(c, {"text", "json"});
  const auto r = resolve(c);
  const Permutation pi = parse_permutation(pattern_text);
  if (pi.size() != c.k) throw UsageError("--pattern must have size k");
  const Permutation target = r.to_computed(pi);
  bool exact = true;
  LpOptimum<Rational> best{Rational(0), {}};
  std::vector<std::string> labels;
  if (r.monotone()) {
    const auto cog = build_coloured_overlap(r.monotone_n, c.k);
    const auto projection = forget_colours_matrix(cog);
    auto it = std::find(projection.row_labels.begin(), projection.row_labels.end(), target.compact());
    if (it != projection.row_labels.end()) {
      const RatVector objective = projection.values.row(it - projection.row_labels.begin()).transpose();
      best = lp_maximize(objective, h_representation<Rational>(cog.graph));
      best.optimizer = projection.values * best.optimizer;
      labels = projection.row_labels;
    }
  } else {
    exact = cycle_polytope_is_region(r);
    const auto og = build_overlap_graph(c.k, r.patterns);
    if (auto e = og.graph.find_edge(target)) {
      RatVector objective = RatVector::Zero(static_cast<Eigen::Index>(og.graph.edge_count()));
      objective(static_cast<Eigen::Index>(*e)) = 1;
      best = lp_maximize(objective, h_representation<Rational>(og.graph));
      labels = edge_label_strings(og.graph);
    }
    if (!exact) std::cerr << "note: value is an upper bound from the cycle polytope\n";
  }
  if (r.via_reverse)
    for (auto& l : labels) l = parse_permutation(l).reverse().compact();
  if (c.format == "json") {
    Json j{{"pattern", pi.compact()}, {"value", to_string(best.value)}, {"exact", exact}};
    if (best.optimizer.size() > 0) {
      Json point = Json::object();
      for (std::size_t i = 0; i < labels.size(); ++i) point[labels[i]] = to_string(best.optimizer(static_cast<Eigen::Index>(i)));
      j["optimizer"] = point;
    }
    emit(c, dump(j));
  } else {
    emit(c, to_string(best.value) + "\n");
  }
  return kYes;
}

int cmd_dimension(const Common& c, std::size_t effort_cap) {
  require_format(c, {"text", "json"});
  const auto r = resolve(c);
  DimensionReport report;
  if (r.monotone()) {
    report = feasible_dimension_monotone(r.monotone_n, c.k, c.cap_cycles);
    if (r.via_reverse) report.class_description = describe(r) + " via reverse";
  } else if (cycle_polytope_is_region(r)) {
    report = cycle_polytope_dimension(r.patterns, c.k, c.cap_cycles);
  } else if (r.patterns.size() == 1) {
    ProbeEffort effort;
    effort.cycle_cap = std::min(c.cap_cycles, effort_cap);
    report = conjecture_probe(r.patterns[0], c.k, effort);
  } else {
    const std::size_t upper = enumerate_avoiders(c.k, r.patterns).size() - enumerate_avoiders(c.k - 1, r.patterns).size();
    report.class_description = describe(r);
    report.k = c.k;
    report.upper_bound = upper;
    report.lower_bound = 0;
    report.conclusive = upper == 0;
    report.method = "upper-bound-only";
  }
  if (c.format == "json") {
    emit(c, dump(to_json(report)));
  } else if (report.conclusive) {
    emit(c, std::to_string(report.lower_bound) + "\n");
  } else {
    emit(c, "between " + std::to_string(report.lower_bound) + " and " + std::to_string(report.upper_bound) +
                " (inconclusive)\n");
  }
  return kYes;
}

int cmd_matrix(const Common& c, bool minor) {
  require_format(c, {"text", "json", "csv"});
  const auto r = resolve(c);
  if (!r.monotone() || r.via_reverse) throw UsageError("matrix needs --monotone n");
  const auto cog = build_coloured_overlap(r.monotone_n, c.k);
  if (minor) {
    const auto cert = triangular_minor(cog);
    if (c.format == "json") emit(c, dump(to_json(cert)));
    else if (c.format == "csv") emit(c, to_csv(cert));
    else emit(c, to_text(LabelledMatrix<Rational>{cert.row_labels, cert.col_labels, cert.minor}));
    return kYes;
  }
  const auto a = matrix_A(cog);
  if (c.format == "json") emit(c, dump(to_json(a)));
  else if (c.format == "csv") emit(c, to_csv(a));
  else emit(c, to_text(a));
  return kYes;
}

int cmd_ritmo(const Common& c, const std::string& perm_text) {
  require_format(c, {"text", "json"});
  const Permutation sigma = parse_permutation(perm_text);
  const auto cp = ritmo(sigma);
  Json j{{"colouring", to_json(cp)}, {"pretty", cp.pretty()}};
  std::string text = cp.pretty() + "\n";
  if (c.monotone && sigma.size() >= c.k) {
    const auto cog = build_coloured_overlap(c.monotone, c.k);
    const auto w = coloured_walk_of(cog, sigma);
    Json walk = Json::array();
    for (std::size_t e : w.edges) {
      walk.push_back(cog.graph.edge_label(e).to_string());
      text += cog.graph.edge_label(e).pretty() + "\n";
    }
    j["walk"] = walk;
  }
  emit(c, c.format == "json" ? dump(j) : text);
  return kYes;
}

int cmd_reproduce(const Common& c, const std::string& id, bool verbose) {
  require_format(c, {"text", "json"});
  std::vector<FactResult> results;
  if (id == "all") results = reproduce_all();
  else results.push_back(reproduce_fact(id));
  bool ok = true;
  Json arr = Json::array();
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.passed;
    arr.push_back(Json{{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"details", r.details}});
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.description + "\n";
    for (const auto& d : r.details)
      if (verbose || d.rfind("ok", 0) != 0) text += "  " + d + "\n";
  }
  emit(c, c.format == "json" ? dump(arr) : text);
  return ok ? kYes : kNo;
}

void add_class_options(CLI::App* sub, Common& c) {
  auto* avoid = sub->add_option("--avoid", c.avoid, "comma separated forbidden patterns, e.g. 312 or 132,213");
  auto* mono = sub->add_option("--monotone", c.monotone, "avoid the decreasing pattern n...1");
  avoid->excludes(mono);
  sub->add_option("--symmetry", c.symmetry, "apply reverse or complement to the class")
      ->check(CLI::IsMember({"reverse", "complement", "inverse"}));
}

void add_common(CLI::App* sub, Common& c, bool with_k = true) {
  if (with_k) sub->add_option("--k", c.k, "pattern size")->check(CLI::Range(2, 12));
  sub->add_option("--format", c.format, "text, json, dot or csv")->check(CLI::IsMember({"text", "json", "dot", "csv"}));
  sub->add_option("--cap-cycles", c.cap_cycles, "refuse beyond this many simple cycles")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasible regions of consecutive pattern densities in permutation classes"};
  app.require_subcommand(1);
  Common c;

  std::size_t size = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "list the permutations of a class of a given size");
  add_class_options(enumerate, c);
  add_common(enumerate, c, false);
  enumerate->add_option("--size", size, "permutation size")->required();
  enumerate->add_flag("--count", count_only, "print only the number of permutations");

  bool plain = false;
  auto* graph = app.add_subcommand("graph", "overlap graph (coloured for monotone classes)");
  add_class_options(graph, c);
  add_common(graph, c);
  graph->add_flag("--plain", plain, "uncoloured overlap graph even for monotone classes");

  bool h_form = false, coloured = false;
  auto* polytope = app.add_subcommand("polytope", "vertices or equations of the cycle polytope");
  add_class_options(polytope, c);
  add_common(polytope, c);
  polytope->add_flag("--h-form", h_form, "print the equality description instead of vertices");
  polytope->add_flag("--coloured", coloured, "monotone classes: the coloured polytope before projection");

  std::string point;
  bool projected = false;
  auto* membership = app.add_subcommand("membership", "decide whether a point lies in a region");
  add_class_options(membership, c);
  add_common(membership, c);
  membership->add_option("--point", point, "k! coordinates, or pattern=value pairs")->required();
  membership->add_flag("--projected", projected, "monotone classes: test the feasible region itself");

  std::string pattern;
  auto* pack = app.add_subcommand("pack", "maximum density of a consecutive pattern");
  add_class_options(pack, c);
  add_common(pack, c);
  pack->add_option("--pattern", pattern, "pattern of size k")->required();

  std::size_t effort_cap = 200'000;
  auto* dimension = app.add_subcommand("dimension", "dimension of the feasible region");
  add_class_options(dimension, c);
  add_common(dimension, c);
  dimension->add_option("--effort", effort_cap, "cycle budget for the empirical lower bound")->check(CLI::PositiveNumber);

  bool minor = false;
  auto* matrix = app.add_subcommand("matrix", "the stacked matrix A for a monotone class");
  add_class_options(matrix, c);
  add_common(matrix, c);
  matrix->add_flag("--minor", minor, "the upper triangular minor instead");

  std::string perm;
  auto* colour = app.add_subcommand("ritmo", "RITMO colouring and, with --monotone, the coloured walk");
  add_common(colour, c);
  colour->add_option("--perm", perm, "permutation")->required();
  colour->add_option("--monotone", c.monotone, "size of the avoided decreasing pattern");

  std::string fact = "all";
  bool verbose = false;
  auto* reproduce = app.add_subcommand("reproduce", "recompute published facts and diff against reference data");
  add_common(reproduce, c, false);
  reproduce->add_option("fact", fact, "fact id or 'all'")->check(CLI::IsMember([] {
    auto ids = fact_ids();
    ids.push_back("all");
    return ids;
  }()));
  reproduce->add_flag("--verbose", verbose, "show every comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(c, size, count_only);
    if (*graph) return cmd_graph(c, plain);
    if (*polytope) return cmd_polytope(c, h_form, coloured);
    if (*membership) return cmd_membership(c, point, projected);
    if (*pack) return cmd_pack(c, pattern);
    if (*dimension) return cmd_dimension(c, effort_cap);
    if (*matrix) return cmd_matrix(c, minor);
    if (*colour) return cmd_ritmo(c, perm);
    if (*reproduce) return cmd_reproduce(c, fact, verbose);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCap;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
