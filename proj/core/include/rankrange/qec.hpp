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

#ifndef RANKRANGE_QEC_HPP_
#define RANKRANGE_QEC_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rankrange/channel.hpp"
#include "rankrange/isometry.hpp"
#include "rankrange/matrix.hpp"
#include "rankrange/membership.hpp"

namespace rankrange {

/// Code space V = range(basis) with P T_i^*T_j P = gamma_ij P up to `residual`,
/// the largest ||U^*T_i^*T_jU - gamma_ij I||_F over all pairs.
struct CodeCertificate {
  Isometry basis;
  ComplexMatrix gamma;  // r x r
  double residual = 0.0;

  std::size_t k() const noexcept { return basis.k(); }
};

struct CodeVerification {
  bool accepted = false;
  CodeCertificate certificate;
};

/// gamma_ij = tr(U^*T_i^*T_jU)/k; accepted iff residual <= tol.
CodeVerification verify_code(const KrausChannel& ch, const Isometry& u, double tol = 1e-8);

enum class CodeRoute { kConstructive, kOptimization };

std::string to_string(CodeRoute route);

struct FindCodeOptions {
  MembershipOptions membership;
  /// A code is reported found iff its verify_code residual is <= accept.
  double accept = 1e-6;
  bool allow_constructive = true;
};

struct FindCodeResult {
  bool found = false;
  /// Best candidate; a valid code only when `found`.
  CodeCertificate best;
  CodeRoute route = CodeRoute::kOptimization;
  /// Kraus operators kept and size of the reduced KL family.
  std::size_t kept_operators = 0;
  std::size_t reduced_size = 0;
};

/// Drops negligible Kraus operators, reduces the KL family to an independent
/// subfamily and searches its rank-k range: constructively when the dimension
/// bound holds and the partition search is small enough, otherwise by
/// free-target optimization. The outcome is re-verified against `ch`.
FindCodeResult find_code(const KrausChannel& ch, std::size_t k, const FindCodeOptions& options = {});

struct NamedChannel {
  std::string name;
  double parameter = 0.0;
  KrausChannel channel;
};

/// bit_flip_3q(p), phase_flip_3q(p): sqrt(1-p) I and sqrt(p/3) P_i for the
/// Pauli P on qubit i, qubit 1 being the most significant tensor factor.
/// single_qubit_bitflip(p): sqrt(1-p) I, sqrt(p) X.
/// depolarizing_1q(p): sqrt(1-p) I, sqrt(p/3) X, Y, Z.
/// amplitude_damping(g): [[1, 0], [0, sqrt(1-g)]], [[0, sqrt(g)], [0, 0]].
/// Operators with ||T||_F <= 1e-14 are dropped. The parameter must lie in
/// [0, 1].
NamedChannel builtin_channel(const std::string& name, double parameter);

const std::vector<std::string>& builtin_channel_names();

}  // namespace rankrange

#endif  // RANKRANGE_QEC_HPP_
