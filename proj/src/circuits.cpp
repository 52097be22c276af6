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

#include "qitk/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace qitk {

namespace {

std::uint64_t wire_bit(int n, int wire) { return std::uint64_t{1} << (n - 1 - wire); }

}  // namespace

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 24) {
    throw Error(ErrorKind::kInvalidArgument, "circuit width must be between 1 and 24 qubits");
  }
}

void Circuit::validate(const Op& op) const {
  std::vector<int> used;
  auto check_wire = [&](int w) {
    if (w < 0 || w >= n_) {
      std::ostringstream msg;
      msg << "wire " << w << " outside a " << n_ << "-qubit circuit";
      throw Error(ErrorKind::kDimensionMismatch, msg.str());
    }
    if (std::find(used.begin(), used.end(), w) != used.end()) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate wire within one node");
    }
    used.push_back(w);
  };
  if (op.kind == Op::Kind::kMeasure) {
    if (op.wires.empty()) throw Error(ErrorKind::kInvalidArgument, "measurement without wires");
    for (int w : op.wires) check_wire(w);
    return;
  }
  if (static_cast<int>(op.targets.size()) != op.gate.arity) {
    throw Error(ErrorKind::kDimensionMismatch, "gate " + op.gate.name + " has wrong target count");
  }
  for (int w : op.targets) check_wire(w);
  for (const Control& c : op.controls) {
    check_wire(c.wire);
    if (c.polarity != 0 && c.polarity != 1) {
      throw Error(ErrorKind::kInvalidArgument, "control polarity must be 0 or 1");
    }
  }
  if (op.kind == Op::Kind::kClassicalGate) {
    if (op.condition_bit < 0 || op.condition_bit >= classical_bits()) {
      throw Error(ErrorKind::kInvalidArgument, "condition refers to a bit not yet measured");
    }
    if (op.condition_value != 0 && op.condition_value != 1) {
      throw Error(ErrorKind::kInvalidArgument, "condition value must be 0 or 1");
    }
  }
}

Circuit& Circuit::gate(const Gate& g, std::vector<int> targets, std::vector<Control> controls) {
  Op op;
  op.kind = Op::Kind::kGate;
  op.gate = g;
  op.targets = std::move(targets);
  op.controls = std::move(controls);
  validate(op);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::gate(const std::string& name, std::vector<int> targets,
                       std::vector<Control> controls) {
  return gate(standard_gate(name), std::move(targets), std::move(controls));
}

Circuit& Circuit::measure(std::vector<int> wires) {
  Op op;
  op.kind = Op::Kind::kMeasure;
  op.wires = std::move(wires);
  validate(op);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::classical_gate(const Gate& g, std::vector<int> targets, int bit, int value) {
  Op op;
  op.kind = Op::Kind::kClassicalGate;
  op.gate = g;
  op.targets = std::move(targets);
  op.condition_bit = bit;
  op.condition_value = value;
  validate(op);
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw Error(ErrorKind::kDimensionMismatch, "appending circuits of different width");
  const int shift = classical_bits();
  for (Op op : other.ops_) {
    if (op.kind == Op::Kind::kClassicalGate) op.condition_bit += shift;
    validate(op);
    ops_.push_back(std::move(op));
  }
  return *this;
}

Circuit Circuit::embedded(int n_total, int offset) const {
  if (offset < 0 || offset + n_ > n_total) {
    throw Error(ErrorKind::kDimensionMismatch, "embedding does not fit the register");
  }
  Circuit out(n_total);
  for (Op op : ops_) {
    for (int& w : op.targets) w += offset;
    for (int& w : op.wires) w += offset;
    for (Control& c : op.controls) c.wire += offset;
    out.validate(op);
    out.ops_.push_back(std::move(op));
  }
  return out;
}

Circuit Circuit::inverse() const {
  if (has_measurements()) {
    throw Error(ErrorKind::kInvalidArgument, "cannot invert a circuit with measurements");
  }
  Circuit out(n_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    Op op = *it;
    op.gate = op.gate.adjoint();
    out.ops_.push_back(std::move(op));
  }
  return out;
}

bool Circuit::has_measurements() const {
  return std::any_of(ops_.begin(), ops_.end(),
                     [](const Op& op) { return op.kind != Op::Kind::kGate; });
}

int Circuit::classical_bits() const {
  int bits = 0;
  for (const Op& op : ops_)
    if (op.kind == Op::Kind::kMeasure) bits += static_cast<int>(op.wires.size());
  return bits;
}

int Circuit::gate_count() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(), [](const Op& op) {
    return op.kind != Op::Kind::kMeasure;
  }));
}

void apply_gate_op(Vector& psi, int n, const Op& op) {
  if (op.kind == Op::Kind::kMeasure) {
    throw Error(ErrorKind::kInvalidArgument, "measurement is not a gate");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(psi.size()) != dim) {
    throw Error(ErrorKind::kDimensionMismatch, "state size does not match circuit width");
  }
  const int a = static_cast<int>(op.targets.size());
  const std::uint64_t local = std::uint64_t{1} << a;
  std::uint64_t tmask = 0, cmask = 0, cval = 0;
  std::vector<std::uint64_t> offset(local, 0);
  for (int k = 0; k < a; ++k) {
    const std::uint64_t b = wire_bit(n, op.targets[k]);
    tmask |= b;
    // targets[0] is the most significant bit of the gate's local index.
    for (std::uint64_t l = 0; l < local; ++l)
      if (l & (std::uint64_t{1} << (a - 1 - k))) offset[l] |= b;
  }
  for (const Control& c : op.controls) {
    const std::uint64_t b = wire_bit(n, c.wire);
    cmask |= b;
    if (c.polarity == 1) cval |= b;
  }
  const bool perm = op.gate.is_permutation();
  Vector in(static_cast<Eigen::Index>(local));
  for (std::uint64_t base = 0; base < dim; ++base) {
    if ((base & tmask) != 0 || (base & cmask) != cval) continue;
    for (std::uint64_t l = 0; l < local; ++l) in(l) = psi(base | offset[l]);
    if (perm) {
      for (std::uint64_t l = 0; l < local; ++l) psi(base | offset[op.gate.permutation[l]]) = in(l);
    } else {
      const Vector out = op.gate.matrix * in;
      for (std::uint64_t l = 0; l < local; ++l) psi(base | offset[l]) = out(l);
    }
  }
}

Matrix unitary_of(const Circuit& c) {
  if (c.has_measurements()) {
    throw Error(ErrorKind::kInvalidArgument, "circuit contains measurement nodes");
  }
  const int n = c.n_qubits();
  const Eigen::Index d = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    Vector v = u.col(col);
    for (const Op& op : c.ops()) apply_gate_op(v, n, op);
    u.col(col) = v;
  }
  return u;
}

std::vector<double> marginal_probabilities(const Vector& psi, int n, const std::vector<int>& wires) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (static_cast<std::uint64_t>(psi.size()) != dim) {
    throw Error(ErrorKind::kDimensionMismatch, "state size does not match width");
  }
  const int k = static_cast<int>(wires.size());
  std::vector<double> p(std::size_t{1} << k, 0.0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t label = 0;
    for (int w : wires) label = (label << 1) | ((i & wire_bit(n, w)) ? 1 : 0);
    p[label] += std::norm(psi(i));
  }
  return p;
}

namespace {

std::uint64_t label_of(std::uint64_t i, int n, const std::vector<int>& wires) {
  std::uint64_t label = 0;
  for (int w : wires) label = (label << 1) | ((i & wire_bit(n, w)) ? 1 : 0);
  return label;
}

bool is_qubit_register(const Dims& dims, int n) {
  return static_cast<int>(product(dims)) == (1 << n);
}

}  // namespace

SimResult simulate(const Circuit& c, const StateVector& input, std::uint64_t seed) {
  const int n = c.n_qubits();
  if (!is_qubit_register(input.dims(), n)) {
    throw Error(ErrorKind::kDimensionMismatch, "input state does not match circuit width");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Vector psi = input.amplitudes();
  std::vector<int> record;
  for (const Op& op : c.ops()) {
    if (op.kind == Op::Kind::kGate) {
      apply_gate_op(psi, n, op);
    } else if (op.kind == Op::Kind::kClassicalGate) {
      if (record[op.condition_bit] == op.condition_value) apply_gate_op(psi, n, op);
    } else {
      const std::vector<double> p = marginal_probabilities(psi, n, op.wires);
      // Inverse CDF on the exact distribution.
      const double r = uni(rng);
      std::size_t outcome = 0;
      double acc = 0.0;
      for (; outcome + 1 < p.size(); ++outcome) {
        acc += p[outcome];
        if (r < acc) break;
      }
      while (p[outcome] <= 0.0 && outcome > 0) --outcome;
      for (Eigen::Index i = 0; i < psi.size(); ++i)
        if (label_of(static_cast<std::uint64_t>(i), n, op.wires) != outcome) psi(i) = 0.0;
      psi /= std::sqrt(p[outcome]);
      const int k = static_cast<int>(op.wires.size());
      for (int b = k - 1; b >= 0; --b) record.push_back(static_cast<int>((outcome >> b) & 1));
    }
  }
  return {StateVector::normalized(input.dims(), psi), record};
}

namespace {

// Applies a gate node to rho as U rho U^dag using only the vector kernel.
void conjugate(Matrix& rho, int n, const Op& op) {
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    Vector v = rho.col(c);
    apply_gate_op(v, n, op);
    rho.col(c) = v;
  }
  rho.adjointInPlace();
  for (Eigen::Index c = 0; c < rho.cols(); ++c) {
    Vector v = rho.col(c);
    apply_gate_op(v, n, op);
    rho.col(c) = v;
  }
}

}  // namespace

DensitySimResult simulate_density(const Circuit& c, const DensityMatrix& input) {
  const int n = c.n_qubits();
  if (!is_qubit_register(input.dims(), n)) {
    throw Error(ErrorKind::kDimensionMismatch, "input state does not match circuit width");
  }
  // Branches keyed by the classical record; each holds an unnormalized state.
  std::map<std::vector<int>, Matrix> branches{{{}, input.matrix()}};
  std::vector<std::vector<double>> distributions;
  for (const Op& op : c.ops()) {
    if (op.kind == Op::Kind::kGate) {
      for (auto& [rec, rho] : branches) conjugate(rho, n, op);
    } else if (op.kind == Op::Kind::kClassicalGate) {
      for (auto& [rec, rho] : branches)
        if (rec[op.condition_bit] == op.condition_value) conjugate(rho, n, op);
    } else {
      const int k = static_cast<int>(op.wires.size());
      std::vector<double> dist(std::size_t{1} << k, 0.0);
      std::map<std::vector<int>, Matrix> next;
      for (const auto& [rec, rho] : branches) {
        for (std::uint64_t outcome = 0; outcome < dist.size(); ++outcome) {
          Matrix part = Matrix::Zero(rho.rows(), rho.cols());
          for (Eigen::Index i = 0; i < rho.rows(); ++i) {
            if (label_of(static_cast<std::uint64_t>(i), n, op.wires) != outcome) continue;
            for (Eigen::Index j = 0; j < rho.cols(); ++j)
              if (label_of(static_cast<std::uint64_t>(j), n, op.wires) == outcome) part(i, j) = rho(i, j);
          }
          const double p = part.trace().real();
          dist[outcome] += p;
          if (p <= 0.0) continue;
          std::vector<int> r = rec;
          for (int b = k - 1; b >= 0; --b) r.push_back(static_cast<int>((outcome >> b) & 1));
          next.emplace(std::move(r), std::move(part));
        }
      }
      branches.swap(next);
      distributions.push_back(std::move(dist));
    }
  }
  Matrix total = Matrix::Zero(input.dim(), input.dim());
  for (const auto& [rec, rho] : branches) total += rho;
  return {DensityMatrix(input.dims(), total, 1e-8), distributions};
}

Matrix qft_matrix(int n) {
  if (n < 1 || n > 14) throw Error(ErrorKind::kInvalidArgument, "QFT width must be 1..14");
  const std::int64_t d = std::int64_t{1} << n;
  Matrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::int64_t j = 0; j < d; ++j)
    for (std::int64_t k = 0; k < d; ++k)
      f(k, j) = norm * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((j * k) % d) / d);
  return f;
}

Circuit qft_circuit(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "QFT width must be positive");
  Circuit c(n);
  for (int w = 0; w < n; ++w) {
    c.gate("H", {w});
    for (int k = 2; k <= n - w; ++k) {
      c.gate(phase_gate(2 * std::numbers::pi / std::ldexp(1.0, k)), {w}, {{w + k - 1, 1}});
    }
  }
  for (int w = 0; w < n / 2; ++w) c.gate("SWAP", {w, n - 1 - w});
  return c;
}

GateTally tally(const Circuit& c) {
  GateTally t;
  for (const Op& op : c.ops()) {
    if (op.kind == Op::Kind::kMeasure) continue;
    if (op.gate.name == "SWAP" && op.controls.empty()) ++t.swaps;
    else if (op.controls.empty() && op.gate.arity == 1) ++t.single_qubit;
    else ++t.controlled;
  }
  return t;
}

Circuit bell_circuit() {
  Circuit c(2);
  c.gate("H", {0});
  c.gate("X", {1}, {{0, 1}});
  return c;
}

}  // namespace qitk
