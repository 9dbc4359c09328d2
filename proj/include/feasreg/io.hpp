#pragma once

#include "feasreg/analysis.hpp"
#include "feasreg/colouring.hpp"
#include "feasreg/geometry.hpp"
#include "feasreg/graph.hpp"
#include "feasreg/permutation.hpp"
#include "feasreg/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace feasreg {

using Json = nlohmann::ordered_json;

/// Coordinate order used for size-k points on the command line: the
/// conventional (123,231,312,213,132,321) for k = 3, lexicographic otherwise.
std::vector<Permutation> conventional_order(std::size_t k);

/// "red13blue2" for coloured machine labels, the label itself otherwise.
std::string pretty_label(const std::string& label);

Json to_json(const Permutation& p);
Json to_json(const ColouredPermutation& cp);
Json to_json(const Rational& r);
Json to_json(const RatVector& v);
Json to_json(const LabelledMatrix<Rational>& m);
Json to_json(const VPolytope<Rational>& p);
Json to_json(const HPolytope<Rational>& h);
Json to_json(const DimensionReport& r);
Json to_json(const MinorCertificate& c);
Json to_json(const DirectedMultigraph<Permutation>& g);
Json to_json(const DirectedMultigraph<ColouredPermutation>& g);

std::string to_dot(const DirectedMultigraph<Permutation>& g);
/// Edge labels use coloured runs (red/blue/green fonts).
std::string to_dot(const DirectedMultigraph<ColouredPermutation>& g);

/// Header row of column labels; first column holds row labels.
std::string to_csv(const LabelledMatrix<Rational>& m);
std::string to_csv(const MinorCertificate& c);
std::string to_csv(const VPolytope<Rational>& p);

/// Aligned plain-text table with human-readable labels.
std::string to_text(const LabelledMatrix<Rational>& m);
std::string to_text(const DimensionReport& r);

}  // namespace feasreg
