#include "qpd/io.hpp"

#include <fstream>
#include <iostream>

namespace qpd::io {

namespace {

double number_at(const json& j, const std::string& where) {
  if (!j.is_number())
    throw FormatError("expected a number at " + where + ", got " +
                      std::string(j.type_name()));
  return j.get<double>();
}

}  // namespace

json to_json(const QMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      const Quaternion& q = m(i, j);
      entries.push_back(json::array({q.w, q.x, q.y, q.z}));
    }
  }
  return json{{"n", m.n()}, {"entries", std::move(entries)}};
}

QMatrix qmatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw FormatError("matrix object must have \"n\" and \"entries\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
    throw FormatError("\"n\" must be a positive integer");
  const int n = j["n"].get<int>();
  const json& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw FormatError("\"entries\" must be an array of n*n quaternions");

  std::vector<Quaternion> e;
  e.reserve(entries.size());
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const json& q = entries[t];
    const std::string where = "entries[" + std::to_string(t) + "]";
    if (!q.is_array() || q.size() != 4)
      throw FormatError(where + " must be a 4-element array [q0,q1,q2,q3]");
    e.emplace_back(number_at(q[0], where), number_at(q[1], where),
                   number_at(q[2], where), number_at(q[3], where));
  }
  return QMatrix(n, std::move(e));
}

json to_json(const std::vector<SpdMatrix>& samples) {
  json arr = json::array();
  for (const SpdMatrix& s : samples) arr.push_back(to_json(s.matrix()));
  return arr;
}

std::vector<QMatrix> qmatrix_list_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("sample file must be an array of matrices");
  if (j.empty()) throw FormatError("sample file is empty");
  std::vector<QMatrix> out;
  out.reserve(j.size());
  for (const json& m : j) out.push_back(qmatrix_from_json(m));
  return out;
}

json to_json(const PsiTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.etas.size(); ++i) {
    rows.push_back(json{{"eta", t.etas[i]},
                        {"psi_prime", t.psi_prime[i]},
                        {"stderr", t.stderrs[i]}});
  }
  json out{{"n", t.n}, {"rows", std::move(rows)}};
  if (t.analytic) out["analytic"] = true;
  return out;
}

PsiTable psi_table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw FormatError("psi table must have \"n\" and \"rows\"");
  if (!j["n"].is_number_integer() || j["n"].get<long>() < 1)
    throw FormatError("psi table \"n\" must be a positive integer");
  if (!j["rows"].is_array() || j["rows"].empty())
    throw FormatError("psi table \"rows\" must be a non-empty array");

  PsiTable t;
  t.n = j["n"].get<int>();
  t.analytic = j.value("analytic", false);
  for (std::size_t i = 0; i < j["rows"].size(); ++i) {
    const json& row = j["rows"][i];
    const std::string where = "rows[" + std::to_string(i) + "]";
    if (!row.is_object() || !row.contains("eta") || !row.contains("psi_prime") ||
        !row.contains("stderr"))
      throw FormatError(where + " must have eta, psi_prime and stderr");
    t.etas.push_back(number_at(row["eta"], where + ".eta"));
    t.psi_prime.push_back(number_at(row["psi_prime"], where + ".psi_prime"));
    t.stderrs.push_back(number_at(row["stderr"], where + ".stderr"));
  }
  for (std::size_t i = 0; i < t.etas.size(); ++i) {
    if (!(t.etas[i] < 0.0)) throw FormatError("psi table etas must be negative");
    if (!(t.psi_prime[i] > 0.0)) throw FormatError("psi table psi_prime must be positive");
    if (i > 0 && t.etas[i] <= t.etas[i - 1])
      throw FormatError("psi table etas must be strictly ascending");
    if (i > 0 && t.psi_prime[i] <= t.psi_prime[i - 1])
      throw FormatError("psi table psi_prime must be strictly increasing");
  }
  return t;
}

json to_json(const FitResult& r) {
  return json{{"barycentre", to_json(r.barycentre.matrix())},
              {"eta_hat", r.eta_hat},
              {"sigma_hat", r.sigma_hat},
              {"mean_sq_dist", r.mean_sq_dist},
              {"iterations", r.iterations}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw FormatError("invalid JSON in file: " + path);
  return j;
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open output file: " + path);
  out << payload << "\n";
}

}  // namespace qpd::io
