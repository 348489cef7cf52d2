// Copyright 2026 The rankrange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rankrange/qec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/tverberg.hpp"

namespace rankrange {

CodeVerification verify_code(const KrausChannel& ch, const Isometry& u, double tol) {
  if (u.n() != ch.n()) throw DimensionError("verify_code: code basis dimension differs from channel");
  const std::size_t r = ch.r();
  const std::size_t k = u.k();
  std::vector<ComplexMatrix> tu;
  tu.reserve(r);
  for (const auto& t : ch.kraus()) tu.push_back(t * u.matrix());

  CodeCertificate cert{u, ComplexMatrix(r, r), 0.0};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      ComplexMatrix c = adjoint_times(tu[i], tu[j]);
      const Complex g = c.trace() / static_cast<double>(k);
      cert.gamma(i, j) = g;
      for (std::size_t d = 0; d < k; ++d) c(d, d) -= g;
      cert.residual = std::max(cert.residual, c.frobenius_norm());
    }
  }
  const bool ok = cert.residual <= tol;
  return {ok, std::move(cert)};
}

std::string to_string(CodeRoute route) {
  return route == CodeRoute::kConstructive ? "constructive" : "optimization";
}

FindCodeResult find_code(const KrausChannel& ch, std::size_t k, const FindCodeOptions& options) {
  if (k == 0 || k > ch.n()) throw DimensionError("find_code: need 1 <= k <= n");
  const KrausChannel kept = ch.without_negligible();
  const KLTuple kl = kl_tuple(kept);
  const Reduction red = reduce_tuple(kl.base);
  const std::size_t m = red.independent.size();
  const std::size_t n = ch.n();

  FindCodeResult out;
  out.kept_operators = kept.r();
  out.reduced_size = m;

  Isometry witness;
  const bool constructive = options.allow_constructive &&
                            (k == 1 || (n >= existence_dimension(m, k) &&
                                        tverberg_point_count(m, k) <= kMaxTverbergPoints));
  if (constructive) {
    out.route = CodeRoute::kConstructive;
    witness = construct_point(red.independent, k).witness;
  } else {
    out.route = CodeRoute::kOptimization;
    witness = membership_solve_free(red.independent, k, FreeTarget{}, options.membership).best.witness;
  }
  CodeVerification v = verify_code(ch, witness, options.accept);
  out.found = v.accepted;
  out.best = std::move(v.certificate);
  return out;
}

namespace {

ComplexMatrix pauli(char p) {
  const Complex i1(0.0, 1.0);
  switch (p) {
    case 'X':
      return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 'Y':
      return ComplexMatrix::from_rows({{0.0, -i1}, {i1, 0.0}});
    case 'Z':
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    default:
      return ComplexMatrix::identity(2);
  }
}

/// Pauli p on `qubit` (0-based, most significant first) of a `count`-qubit register.
ComplexMatrix on_qubit(char p, std::size_t qubit, std::size_t count) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t q = 0; q < count; ++q) out = kron(out, q == qubit ? pauli(p) : pauli('I'));
  return out;
}

std::vector<ComplexMatrix> three_qubit(char p, double prob) {
  std::vector<ComplexMatrix> ops{std::sqrt(1.0 - prob) * ComplexMatrix::identity(8)};
  for (std::size_t q = 0; q < 3; ++q) ops.push_back(std::sqrt(prob / 3.0) * on_qubit(p, q, 3));
  return ops;
}

}  // namespace

const std::vector<std::string>& builtin_channel_names() {
  static const std::vector<std::string> names{"bit_flip_3q", "phase_flip_3q",
                                              "single_qubit_bitflip", "depolarizing_1q",
                                              "amplitude_damping"};
  return names;
}

NamedChannel builtin_channel(const std::string& name, double parameter) {
  if (!(parameter >= 0.0 && parameter <= 1.0)) {
    std::ostringstream os;
    os << "builtin_channel: parameter " << parameter << " of " << name << " is outside [0, 1]";
    throw DomainError(os.str());
  }
  const double p = parameter;
  std::vector<ComplexMatrix> ops;
  if (name == "bit_flip_3q") {
    ops = three_qubit('X', p);
  } else if (name == "phase_flip_3q") {
    ops = three_qubit('Z', p);
  } else if (name == "single_qubit_bitflip") {
    ops = {std::sqrt(1.0 - p) * pauli('I'), std::sqrt(p) * pauli('X')};
  } else if (name == "depolarizing_1q") {
    ops = {std::sqrt(1.0 - p) * pauli('I'), std::sqrt(p / 3.0) * pauli('X'),
           std::sqrt(p / 3.0) * pauli('Y'), std::sqrt(p / 3.0) * pauli('Z')};
  } else if (name == "amplitude_damping") {
    ops = {ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}}),
           ComplexMatrix::from_rows({{0.0, std::sqrt(p)}, {0.0, 0.0}})};
  } else {
    throw DomainError("builtin_channel: unknown channel '" + name + "'");
  }
  return NamedChannel{name, parameter, KrausChannel(std::move(ops)).without_negligible()};
}

}  // namespace rankrange
