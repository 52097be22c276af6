// Copyright 2026 The qitk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qitk/io.hpp"

#include <fstream>
#include <sstream>

namespace qitk::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "schema: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const json& x : j) {
    if (!x.is_number()) schema_error(std::string(what) + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& x : j) {
    if (!x.is_number_integer()) schema_error(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Dims dims_of(const json& j) {
  Dims dims = int_array(field(j, "dims"), "dims");
  if (dims.empty()) schema_error("dims must be nonempty");
  for (int d : dims)
    if (d < 1) schema_error("dims entries must be positive");
  return dims;
}

Vector complex_vector(const json& j, std::size_t expected) {
  const std::vector<double> re = number_array(field(j, "re"), "re");
  const std::vector<double> im =
      j.contains("im") ? number_array(j.at("im"), "im") : std::vector<double>(re.size(), 0.0);
  if (re.size() != expected || im.size() != expected) {
    throw Error(ErrorKind::kDimensionMismatch, "amplitude count does not match dims");
  }
  Vector v(static_cast<Eigen::Index>(expected));
  for (std::size_t k = 0; k < expected; ++k) v(static_cast<Eigen::Index>(k)) = cplx(re[k], im[k]);
  return v;
}

json split(const Vector& v) {
  json re = json::array(), im = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    re.push_back(v(k).real());
    im.push_back(v(k).imag());
  }
  return {{"re", re}, {"im", im}};
}

bool is_catalog_gate(const Gate& g) {
  try {
    return standard_gate(g.name).dense().isApprox(g.dense(), 1e-14);
  } catch (const Error&) {
    return false;
  }
}

json op_gate_fields(const Op& op) {
  json o;
  o["name"] = op.gate.name;
  o["targets"] = op.targets;
  if (!is_catalog_gate(op.gate)) o["matrix"] = matrix_to_json(op.gate.dense());
  if (!op.controls.empty()) {
    json cs = json::array();
    for (const Control& c : op.controls) cs.push_back({{"wire", c.wire}, {"polarity", c.polarity}});
    o["controls"] = cs;
  }
  return o;
}

Gate gate_of(const json& o, double tol) {
  const json& name = field(o, "name");
  if (!name.is_string()) schema_error("gate name must be a string");
  if (o.contains("matrix")) return custom_gate(name.get<std::string>(), matrix_from_json(o.at("matrix")), tol);
  return standard_gate(name.get<std::string>());
}

std::vector<Control> controls_of(const json& o) {
  std::vector<Control> out;
  if (!o.contains("controls")) return out;
  if (!o.at("controls").is_array()) schema_error("controls must be an array");
  for (const json& c : o.at("controls")) {
    const json& w = field(c, "wire");
    if (!w.is_number_integer()) schema_error("control wire must be an integer");
    int polarity = 1;
    if (c.contains("polarity")) {
      if (!c.at("polarity").is_number_integer()) schema_error("polarity must be 0 or 1");
      polarity = c.at("polarity").get<int>();
    }
    out.push_back({w.get<int>(), polarity});
  }
  return out;
}

}  // namespace

json to_json(const StateVector& psi) {
  json j = split(psi.amplitudes());
  j["dims"] = psi.dims();
  j["kind"] = "pure";
  return j;
}

json to_json(const DensityMatrix& rho) {
  const Matrix& m = rho.matrix();
  Vector flat(m.size());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) flat(r * m.cols() + c) = m(r, c);
  json j = split(flat);
  j["dims"] = rho.dims();
  j["kind"] = "mixed";
  return j;
}

AnyState state_from_json(const json& j, double tol) {
  const Dims dims = dims_of(j);
  const json& kind = field(j, "kind");
  const std::size_t d = static_cast<std::size_t>(product(dims));
  if (kind == "pure") return StateVector(dims, complex_vector(j, d), tol);
  if (kind != "mixed") schema_error("kind must be \"pure\" or \"mixed\"");
  const Vector flat = complex_vector(j, d * d);
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = flat(r * d + c);
  return DensityMatrix(dims, m, tol);
}

DensityMatrix density_from_json(const json& j, double tol) {
  const AnyState s = state_from_json(j, tol);
  if (const auto* psi = std::get_if<StateVector>(&s)) return DensityMatrix(*psi);
  return std::get<DensityMatrix>(s);
}

json matrix_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"re", re}, {"im", im}};
}

Matrix matrix_from_json(const json& j) {
  const json& re = field(j, "re");
  if (!re.is_array() || re.empty()) schema_error("matrix re must be a nonempty array of rows");
  const bool has_im = j.contains("im");
  if (has_im && (!j.at("im").is_array() || j.at("im").size() != re.size())) {
    throw Error(ErrorKind::kDimensionMismatch, "matrix re and im shapes differ");
  }
  const std::size_t rows = re.size();
  std::size_t cols = 0;
  std::vector<std::vector<double>> rr, ri;
  for (std::size_t r = 0; r < rows; ++r) {
    rr.push_back(number_array(re[r], "matrix row"));
    ri.push_back(has_im ? number_array(j.at("im")[r], "matrix row") : std::vector<double>(rr.back().size(), 0.0));
    if (r == 0) cols = rr.back().size();
    if (rr.back().size() != cols || ri.back().size() != cols) {
      throw Error(ErrorKind::kDimensionMismatch, "ragged matrix rows");
    }
  }
  if (cols == 0) schema_error("matrix rows must be nonempty");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = cplx(rr[r][c], ri[r][c]);
  return m;
}

json to_json(const KrausChannel& ch) {
  json elements = json::array();
  for (const Matrix& e : ch.elements()) elements.push_back(matrix_to_json(e));
  return {{"dims", ch.dim()},
          {"kind", ch.kind() == ChannelKind::kTracePreserving ? "tp" : "sub"},
          {"elements", elements}};
}

KrausChannel channel_from_json(const json& j, double tol) {
  const json& elements = field(j, "elements");
  if (!elements.is_array() || elements.empty()) schema_error("elements must be a nonempty array");
  std::vector<Matrix> ms;
  for (const json& e : elements) ms.push_back(matrix_from_json(e));
  ChannelKind kind = ChannelKind::kTracePreserving;
  if (j.contains("kind")) {
    if (j.at("kind") == "sub") {
      kind = ChannelKind::kSubNormalized;
    } else if (j.at("kind") != "tp") {
      schema_error("channel kind must be \"tp\" or \"sub\"");
    }
  }
  if (j.contains("dims")) {
    const json& d = j.at("dims");
    if (!d.is_number_integer()) schema_error("channel dims must be an integer");
    for (const Matrix& m : ms)
      if (m.rows() != d.get<int>()) throw Error(ErrorKind::kDimensionMismatch, "element size differs from dims");
  }
  return KrausChannel(std::move(ms), kind, tol);
}

json to_json(const Circuit& c) {
  json ops = json::array();
  for (const Op& op : c.ops()) {
    switch (op.kind) {
      case Op::Kind::kGate: {
        json o = op_gate_fields(op);
        o["kind"] = "gate";
        ops.push_back(o);
        break;
      }
      case Op::Kind::kMeasure:
        ops.push_back({{"kind", "measure"}, {"wires", op.wires}});
        break;
      case Op::Kind::kClassicalGate: {
        json o = op_gate_fields(op);
        o["kind"] = "classical_gate";
        o["condition"] = {{"bit", op.condition_bit}, {"value", op.condition_value}};
        ops.push_back(o);
        break;
      }
    }
  }
  return {{"n", c.n_qubits()}, {"ops", ops}};
}

Circuit circuit_from_json(const json& j, double tol) {
  const json& n = field(j, "n");
  if (!n.is_number_integer()) schema_error("n must be an integer");
  Circuit c(n.get<int>());
  const json& ops = field(j, "ops");
  if (!ops.is_array()) schema_error("ops must be an array");
  for (const json& o : ops) {
    const json& kind = field(o, "kind");
    if (kind == "gate") {
      c.gate(gate_of(o, tol), int_array(field(o, "targets"), "targets"), controls_of(o));
    } else if (kind == "measure") {
      c.measure(int_array(field(o, "wires"), "wires"));
    } else if (kind == "classical_gate") {
      const json& cond = field(o, "condition");
      const json& bit = field(cond, "bit");
      if (!bit.is_number_integer()) schema_error("condition bit must be an integer");
      int value = 1;
      if (cond.contains("value")) value = cond.at("value").get<int>();
      c.classical_gate(gate_of(o, tol), int_array(field(o, "targets"), "targets"), bit.get<int>(), value);
    } else {
      schema_error("unknown op kind");
    }
  }
  return c;
}

Ensemble ensemble_from_json(const json& j, double tol) {
  const json& entries = field(j, "ensemble");
  if (!entries.is_array() || entries.empty()) schema_error("ensemble must be a nonempty array");
  std::vector<std::pair<double, DensityMatrix>> out;
  for (const json& e : entries) {
    const json& p = field(e, "p");
    if (!p.is_number()) schema_error("ensemble weight must be a number");
    out.emplace_back(p.get<double>(), density_from_json(field(e, "state"), tol));
  }
  return Ensemble::make(std::move(out), tol);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, path + ": " + e.what());
  }
}

}  // namespace qitk::io
