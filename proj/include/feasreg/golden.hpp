#pragma once

// Reference data transcribed from the published tables and matrices.

#include <cstddef>
#include <string>
#include <vector>

namespace feasreg::golden {

struct GoldenMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<int>> values;
};

extern const GoldenMatrix matrix_a_3_3;
extern const GoldenMatrix minor_3_3;
/// As published, including the column listed in matrix_a_4_3_erratum.
extern const GoldenMatrix matrix_a_4_3;

/// A published column whose label is not a valid RITMO-inherited colouring
/// (two entries of one colour form a descent), with its replacement.
struct ColumnErratum {
  std::size_t column;
  std::string published_label;
  std::string corrected_label;
  std::vector<int> corrected_values;
};
extern const ColumnErratum matrix_a_4_3_erratum;

/// matrix_a_4_3 with the erratum applied.
GoldenMatrix corrected(const GoldenMatrix& published, const ColumnErratum& erratum);

/// Inherited 2-colourings of size-3 avoiders of 321.
extern const std::vector<std::string> inherited_2_3;
/// A colouring of 213 that is not inherited.
extern const std::string not_inherited_2_3;

/// Coloured 3-walk of 1243756 and its RITMO colours.
extern const std::string walk_permutation;
extern const std::vector<int> walk_colours;
extern const std::vector<std::string> walk_edges;

}  // namespace feasreg::golden
