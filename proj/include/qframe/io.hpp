// Copyright 2026 The qframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFRAME_IO_HPP_
#define QFRAME_IO_HPP_

// File formats.
//
//   frame     {"field": "real"|"complex", "dim": n, "vectors": [[...], ...]}
//   operator  {"field": "real"|"complex", "dim": n, "entries": [[...], ...]}
//   record    CSV, one value per line, optional header line "a"
//
// Real entries are JSON numbers, complex entries [re, im] pairs. Doubles are
// written in shortest round-trip form, so parse(serialize(x)) == x.

#include <qframe/core.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qframe {

struct IoError : Error {
  explicit IoError(const std::string& w) : Error("io", w) {}
};

using Json = nlohmann::json;

namespace detail {

inline Json scalar_to_json(Scalar z, Field field) {
  if (field == Field::Real) return z.real();
  return Json::array({z.real(), z.imag()});
}

inline Scalar scalar_from_json(const Json& j, Field field) {
  if (j.is_number()) return Scalar(j.get<double>(), 0.0);
  if (field == Field::Complex && j.is_array() && j.size() == 2 && j[0].is_number() &&
      j[1].is_number())
    return Scalar(j[0].get<double>(), j[1].get<double>());
  throw ValidationError("expected a number" +
                        std::string(field == Field::Complex ? " or [re, im] pair" : "") +
                        ", got " + j.dump());
}

inline Json rows_to_json(const Matrix& m, Field field) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix rows_from_json(const Json& rows, Index cols, Field field, const char* what) {
  if (!rows.is_array() || rows.empty())
    throw ValidationError(std::string("'") + what + "' must be a nonempty array");
  Matrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw DimensionError(std::string(what) + " row " + std::to_string(r + 1) + " must have " +
                           std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < row.size(); ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) = scalar_from_json(row[c], field);
  }
  return m;
}

inline void read_header(const Json& j, Field& field, Index& dim) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  if (!j.contains("field") || !j["field"].is_string())
    throw ValidationError("missing string member 'field'");
  field = field_from_string(j["field"].get<std::string>());
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ValidationError("missing integer member 'dim'");
  dim = j["dim"].get<Index>();
  if (dim < 1) throw DimensionError("'dim' must be at least 1");
}

}  // namespace detail

inline Json frame_to_json(const Frame& f) {
  return Json{{"field", to_string(f.field())},
              {"dim", f.dim()},
              {"vectors", detail::rows_to_json(f.vectors(), f.field())}};
}

inline Frame frame_from_json(const Json& j) {
  Field field;
  Index dim;
  detail::read_header(j, field, dim);
  if (!j.contains("vectors")) throw ValidationError("missing member 'vectors'");
  return Frame(field, detail::rows_from_json(j["vectors"], dim, field, "vectors"));
}

inline Json operator_to_json(const SelfAdjointOperator& t) {
  return Json{{"field", to_string(t.field())},
              {"dim", t.dim()},
              {"entries", detail::rows_to_json(t.entries(), t.field())}};
}

// Entries must be Hermitian to 1e-12 (1 + |M|_F).
inline SelfAdjointOperator operator_from_json(const Json& j) {
  Field field;
  Index dim;
  detail::read_header(j, field, dim);
  if (!j.contains("entries")) throw ValidationError("missing member 'entries'");
  const Matrix m = detail::rows_from_json(j["entries"], dim, field, "entries");
  if (m.rows() != dim) throw DimensionError("'entries' must have dim rows");
  return SelfAdjointOperator(field, m, Strictness::Strict);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

inline Frame read_frame(const std::string& path) { return frame_from_json(read_json_file(path)); }

inline SelfAdjointOperator read_operator(const std::string& path) {
  return operator_from_json(read_json_file(path));
}

inline MeasurementRecord parse_measurements(std::istream& in) {
  std::vector<double> values;
  std::string line;
  Index line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string cell = line.substr(b, e - b + 1);
    if (values.empty() && cell == "a") continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cell.size())
      throw ValidationError("measurement line " + std::to_string(line_no) + " is not a number: '" +
                            cell + "'");
    values.push_back(v);
  }
  RealVector a(static_cast<Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) a(static_cast<Index>(k)) = values[k];
  return MeasurementRecord(std::move(a));
}

inline MeasurementRecord read_measurements(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_measurements(in);
}

inline std::string format_measurements(const MeasurementRecord& a) {
  std::string out = "a\n";
  char buf[32];
  for (Index k = 0; k < a.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g\n", a[k]);
    out += buf;
  }
  return out;
}

}  // namespace qframe

#endif  // QFRAME_IO_HPP_
