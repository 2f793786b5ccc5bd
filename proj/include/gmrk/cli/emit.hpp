#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gmrk/cli/run_config.hpp"
#include "gmrk/operators/operator_matrix.hpp"
#include "gmrk/validator/report.hpp"

namespace gmrk::cli {

using Json = nlohmann::ordered_json;

/// %.17g: round-trips every double.
std::string format_double(double v);

Json config_json(const RunConfig& cfg);
Json state_json(const repspace::BasisState& s);
Json basis_json(const repspace::BasisIndex& basis);
/// {label, kind, component, su_n, entries: [{row, col, re, im}]} in row-major order.
Json operator_json(const operators::OperatorMatrix& op);
Json report_json(const validator::ResidualReport& r);

/// index,J,k,m
std::string basis_csv(const repspace::BasisIndex& basis);
/// row_J,row_k,row_m,col_J,col_k,col_m,re,im
std::string operator_csv(const operators::OperatorMatrix& op);
std::string reports_csv(const std::vector<validator::ResidualReport>& reports);

/// File-system safe name of an operator component: "M_p1", "T_p1_m1", "C2K".
std::string operator_file_name(const operators::TensorTag& tag);

/// Writes through a temporary file and renames it into place.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace gmrk::cli
