#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "laguerre/coefficient_field.hpp"
#include "laguerre/quadrature.hpp"

namespace laguerre::io {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);
double parse_double(std::string_view text);

/// Coefficient file:
///
///     # optional comment lines
///     dim 2
///     truncation_kind total
///     truncation_degree 12
///     0,0,0.5
///     0,1,-0.25
///     ...
///
/// Records are `n_1,...,n_d,value`, written in graded-lex order.
void write_coefficients(std::ostream& out, const CoefficientField& field);
CoefficientField read_coefficients(std::istream& in);

void save_coefficients(const std::filesystem::path& path, const CoefficientField& field);
CoefficientField load_coefficients(const std::filesystem::path& path);

/// CSV with columns node,weight,log_modified_weight.
void write_rule_csv(std::ostream& out, const QuadratureRule& rule);

/// Points CSV: one point per row, `dim` columns; a leading non-numeric header
/// row is skipped. dim == 0 infers the width from the first data row.
std::vector<std::vector<double>> read_points_csv(std::istream& in, std::size_t dim = 0);

/// Writes the points with an appended value column and header x1..xd,value.
void write_values_csv(std::ostream& out, const std::vector<std::vector<double>>& points,
                      const std::vector<double>& values);

}  // namespace laguerre::io
