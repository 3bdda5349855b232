#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qpd/gaussian.hpp"
#include "qpd/inference.hpp"
#include "qpd/qmatrix.hpp"

// Single interchange format for every CLI surface:
//   matrix      {"n": int, "entries": row-major n*n array of [q0,q1,q2,q3]}
//   samples     [matrix, ...]
//   psi table   {"n": int, "rows": [{"eta", "psi_prime", "stderr"}, ...]}
//   fit result  {"barycentre": matrix, "eta_hat", "sigma_hat",
//                "mean_sq_dist", "iterations"}
// Doubles serialize via the shortest round-trip decimal representation.
namespace qpd::io {

using nlohmann::json;

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);

json to_json(const std::vector<SpdMatrix>& samples);
std::vector<QMatrix> qmatrix_list_from_json(const json& j);

json to_json(const PsiTable& t);
PsiTable psi_table_from_json(const json& j);

json to_json(const FitResult& r);

// Parses a file; FormatError on unreadable or syntactically invalid input.
json load_json_file(const std::string& path);

// Writes to the path, or to stdout when path is empty; always ends with a
// newline.
void write_output(const std::string& path, const std::string& payload);

}  // namespace qpd::io
