#include "feasreg/io.hpp"

#include <algorithm>
#include <sstream>

namespace feasreg {

std::vector<Permutation> conventional_order(std::size_t k) {
  if (k == 3)
    return {Permutation{1, 2, 3}, Permutation{2, 3, 1}, Permutation{3, 1, 2},
            Permutation{2, 1, 3}, Permutation{1, 3, 2}, Permutation{3, 2, 1}};
  return all_permutations(k);
}

std::string pretty_label(const std::string& label) {
  if (label.find(':') == std::string::npos) return label;
  return parse_coloured(label).pretty();
}

Json to_json(const Permutation& p) { return Json(std::vector<int>(p.begin(), p.end())); }

Json to_json(const ColouredPermutation& cp) {
  return Json{{"values", to_json(cp.perm)}, {"colours", cp.colours}};
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

Json to_json(const LabelledMatrix<Rational>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) rows.push_back(to_json(RatVector(m.values.row(i).transpose())));
  return Json{{"rows", m.row_labels}, {"columns", m.col_labels}, {"values", rows}};
}

Json to_json(const VPolytope<Rational>& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return Json{{"labels", p.labels}, {"vertices", vertices}};
}

Json to_json(const HPolytope<Rational>& h) {
  Json constraints = Json::array();
  for (Eigen::Index i = 0; i < h.equalities.rows(); ++i)
    constraints.push_back(Json{{"label", h.constraint_labels[i]},
                               {"coefficients", to_json(RatVector(h.equalities.row(i).transpose()))},
                               {"rhs", to_string(h.rhs(i))}});
  return Json{{"labels", h.labels}, {"equalities", constraints}, {"nonnegative", h.nonnegative}};
}

Json to_json(const DimensionReport& r) {
  Json certs = Json::object();
  for (const auto& [name, value] : r.certificates) certs[name] = value;
  return Json{{"class", r.class_description},
              {"k", r.k},
              {"upper_bound", r.upper_bound},
              {"lower_bound", r.lower_bound},
              {"conclusive", r.conclusive},
              {"method", r.method},
              {"certificates", certs}};
}

Json to_json(const MinorCertificate& c) {
  LabelledMatrix<Rational> m{c.row_labels, c.col_labels, c.minor};
  Json out = to_json(m);
  out["upper_triangular"] = c.upper_triangular;
  return out;
}

namespace {

template <typename Label>
Json graph_json(const DirectedMultigraph<Label>& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertex_labels()) vertices.push_back(label_string(v));
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    edges.push_back(Json{{"label", label_string(g.edge_label(e))},
                         {"source", g.edge(e).source},
                         {"target", g.edge(e).target}});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string coloured_html(const ColouredPermutation& cp) {
  std::string out;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    const bool open = i == 0 || cp.colours[i] != cp.colours[i - 1];
    const bool close = i + 1 == cp.size() || cp.colours[i + 1] != cp.colours[i];
    if (open) {
      const std::string name = colour_name(cp.colours[i]);
      out += "<font color=\"" + (cp.colours[i] <= 3 ? name : std::string("black")) + "\">";
    }
    out += std::to_string(cp.perm[i]);
    if (close) out += "</font>";
  }
  return out;
}

}  // namespace

Json to_json(const DirectedMultigraph<Permutation>& g) { return graph_json(g); }
Json to_json(const DirectedMultigraph<ColouredPermutation>& g) { return graph_json(g); }

std::string to_dot(const DirectedMultigraph<Permutation>& g) {
  std::ostringstream out;
  out << "digraph overlap {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << dot_escape(g.vertex_label(v).compact()) << "\"];\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out << "  v" << g.edge(e).source << " -> v" << g.edge(e).target << " [label=\""
        << dot_escape(g.edge_label(e).compact()) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DirectedMultigraph<ColouredPermutation>& g) {
  std::ostringstream out;
  out << "digraph coloured_overlap {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=<" << coloured_html(g.vertex_label(v)) << ">];\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    out << "  v" << g.edge(e).source << " -> v" << g.edge(e).target << " [label=<"
        << coloured_html(g.edge_label(e)) << ">];\n";
  out << "}\n";
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const LabelledMatrix<Rational>& m) {
  std::ostringstream out;
  for (const auto& c : m.col_labels) out << ',' << csv_field(c);
  out << '\n';
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    out << csv_field(m.row_labels[i]);
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) out << ',' << to_string(m.values(i, j));
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const MinorCertificate& c) {
  std::ostringstream out;
  out << "row_order";
  for (const auto& l : c.row_labels) out << ',' << csv_field(l);
  out << "\ncolumn_order";
  for (const auto& l : c.col_labels) out << ',' << csv_field(l);
  out << '\n' << to_csv(LabelledMatrix<Rational>{c.row_labels, c.col_labels, c.minor});
  return out.str();
}

std::string to_csv(const VPolytope<Rational>& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.labels.size(); ++i) out << (i ? "," : "") << csv_field(p.labels[i]);
  out << '\n';
  for (const auto& v : p.vertices) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v(i));
    out << '\n';
  }
  return out.str();
}

std::string to_text(const LabelledMatrix<Rational>& m) {
  std::vector<std::string> rows, cols;
  for (const auto& l : m.row_labels) rows.push_back(pretty_label(l));
  for (const auto& l : m.col_labels) cols.push_back(pretty_label(l));
  std::size_t label_width = 0;
  for (const auto& r : rows) label_width = std::max(label_width, r.size());
  std::vector<std::size_t> widths(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    widths[j] = cols[j].size();
    for (Eigen::Index i = 0; i < m.values.rows(); ++i)
      widths[j] = std::max(widths[j], to_string(m.values(i, static_cast<Eigen::Index>(j))).size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t j = 0; j < cols.size(); ++j) out << ' ' << pad(cols[j], widths[j]);
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i] << std::string(label_width - rows[i].size(), ' ');
    for (std::size_t j = 0; j < cols.size(); ++j)
      out << ' ' << pad(to_string(m.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))), widths[j]);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const DimensionReport& r) {
  std::ostringstream out;
  out << "class: " << r.class_description << "\nk: " << r.k << "\nupper bound: " << r.upper_bound
      << "\nlower bound: " << r.lower_bound << "\nconclusive: " << (r.conclusive ? "yes" : "no")
      << "\nmethod: " << r.method << '\n';
  for (const auto& [name, value] : r.certificates) out << name << ": " << value << '\n';
  return out.str();
}

}  // namespace feasreg
