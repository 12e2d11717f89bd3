#pragma once

#include <optional>
#include <vector>

#include "wheelsym/cycfield.hpp"

namespace wheelsym {

using Row = std::vector<CycNum>;
using Matrix = std::vector<Row>;

/// Rank by fraction-free (Bareiss) elimination. Rows are scaled to Z[z]
/// first; every division by the previous pivot is checked to stay in Z[z].
std::size_t rank_fraction_free(Matrix m, std::size_t ncols);

struct RowEchelon {
    Matrix rows;                      // reduced row echelon form, nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form over the field.
RowEchelon row_reduce(Matrix m, std::size_t ncols);

/// Basis of {x : m x = 0}, one vector per free column, with a 1 in that
/// column.
std::vector<Row> nullspace(const Matrix& m, std::size_t ncols, const FieldRef& field);

/// Unique solution of a square system, or nullopt when singular.
std::optional<Row> solve_square(Matrix a, Row b);

} // namespace wheelsym
