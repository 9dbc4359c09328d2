#include "feasreg/golden.hpp"

namespace feasreg::golden {

const GoldenMatrix matrix_a_3_3{
    {"123", "132", "213", "231", "312", "1:1 2:1", "1:2 2:1", "1:2 2:2", "2:1 1:2"},
    {"1:1 2:1 3:1", "1:2 2:1 3:1", "1:2 2:2 3:1", "1:2 2:2 3:2", "1:1 3:1 2:2", "1:2 3:1 2:2", "2:1 1:2 3:1", "2:1 3:1 1:2", "3:1 1:2 2:2"},
    {
        {1, 1, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, -1, 0, 0, 1, 0, 0, 1, 0},
        {0, 1, -1, 0, 0, 1, -1, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0, -1},
        {0, 0, 0, 0, -1, -1, 1, -1, 1},
    }};

const GoldenMatrix minor_3_3{
    {"123", "1:2 2:1", "1:2 2:2", "2:1 1:2", "132", "231", "312"},
    {"1:1 2:1 3:1", "1:2 2:1 3:1", "1:2 2:2 3:1", "2:1 1:2 3:1", "1:1 3:1 2:2", "2:1 3:1 1:2", "3:1 1:2 2:2"},
    {
        {1, 1, 1, 0, 0, 0, 0},
        {0, 1, -1, -1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, -1},
        {0, 0, 0, 1, -1, -1, 1},
        {0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 0, 1},
    }};

const GoldenMatrix matrix_a_4_3{
    {"123", "132", "213", "231", "312", "321", "1:1 2:1", "1:2 2:1", "1:3 2:1", "1:2 2:2", "1:3 2:2", "1:3 2:3", "2:1 1:2", "2:1 1:3", "2:2 1:3"},
    {"1:1 2:1 3:1", "1:2 2:1 3:1", "1:3 2:1 3:1", "1:2 2:2 3:1", "1:3 2:2 3:1", "1:3 2:3 3:1", "1:2 2:2 3:2", "1:3 2:2 3:2", "1:3 2:3 3:2", "1:3 2:3 3:3", "1:1 3:1 2:2", "1:2 3:1 2:2", "1:3 3:1 2:2", "1:3 3:1 2:3", "1:2 3:2 2:3", "1:3 3:2 2:3", "2:1 1:2 3:1", "2:1 1:3 3:1", "2:2 1:3 3:1", "2:2 1:3 3:2", "2:1 3:1 1:2", "2:1 3:1 1:3", "2:2 3:1 1:3", "2:3 3:2 1:3", "3:1 1:2 2:2", "3:1 1:3 2:2", "3:1 1:3 2:3", "3:2 1:3 2:3", "3:1 2:2 1:3"},
    {
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
        {0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 1, -1},
    }};

const ColumnErratum matrix_a_4_3_erratum{
    23, "2:3 3:2 1:3", "2:2 3:2 1:3", {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}};

GoldenMatrix corrected(const GoldenMatrix& published, const ColumnErratum& erratum) {
  GoldenMatrix out = published;
  out.cols.at(erratum.column) = erratum.corrected_label;
  for (std::size_t i = 0; i < out.rows.size(); ++i) out.values[i].at(erratum.column) = erratum.corrected_values.at(i);
  return out;
}

const std::vector<std::string> inherited_2_3{
    "1:1 2:1 3:1", "1:2 2:1 3:1", "1:2 2:2 3:1", "1:2 2:2 3:2", "1:1 3:1 2:2",
    "1:2 3:1 2:2", "2:1 1:2 3:1", "2:1 3:1 1:2", "3:1 1:2 2:2"};

const std::string not_inherited_2_3 = "2:1 1:2 3:2";

const std::string walk_permutation = "1243756";
const std::vector<int> walk_colours{1, 1, 1, 2, 1, 2, 2};
const std::vector<std::string> walk_edges{"1:1 2:1 3:1", "1:1 3:1 2:2", "2:1 1:2 3:1", "1:2 3:1 2:2", "3:1 1:2 2:2"};

}  // namespace feasreg::golden
