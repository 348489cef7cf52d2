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

#include "rankrange/channel.hpp"

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"

namespace rankrange {

namespace {

void check_shapes(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) throw DimensionError("KrausChannel: needs at least one operator");
  const std::size_t n = kraus.front().rows();
  for (const auto& t : kraus) {
    if (!t.square() || t.rows() != n) {
      throw DimensionError("KrausChannel: operators must be square and of equal size");
    }
    if (!t.all_finite()) throw DomainError("KrausChannel: non-finite entry");
  }
}

double completeness_residual(const std::vector<ComplexMatrix>& kraus) {
  const std::size_t n = kraus.front().rows();
  ComplexMatrix s(n, n);
  for (const auto& t : kraus) s += adjoint_times(t, t);
  for (std::size_t i = 0; i < n; ++i) s(i, i) -= 1.0;
  return s.frobenius_norm();
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  check_shapes(kraus_);
  const double res = completeness_residual(kraus_);
  if (!(res <= kTraceTolerance)) {
    throw PreconditionError("KrausChannel: sum T_j^*T_j differs from I", res);
  }
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus, Unchecked)
    : kraus_(std::move(kraus)) {
  check_shapes(kraus_);
}

KrausChannel KrausChannel::unchecked(std::vector<ComplexMatrix> kraus) {
  return KrausChannel(std::move(kraus), Unchecked{});
}

KrausChannel KrausChannel::without_negligible(double threshold) const {
  std::vector<ComplexMatrix> kept;
  for (const auto& t : kraus_) {
    if (t.frobenius_norm() > threshold) kept.push_back(t);
  }
  if (kept.empty()) kept.push_back(kraus_.front());
  return KrausChannel(std::move(kept), Unchecked{});
}

TraceReport validate_kraus(const KrausChannel& ch, double tol) {
  TraceReport report;
  report.residual = completeness_residual(ch.kraus());
  report.ok = report.residual <= tol;
  return report;
}

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.n() || x.cols() != ch.n()) {
    throw DimensionError("apply_channel: input is not n x n");
  }
  ComplexMatrix out(ch.n(), ch.n());
  for (const auto& t : ch.kraus()) out += t * x * t.adjoint();
  return out;
}

std::string to_string(ProductPart part) {
  switch (part) {
    case ProductPart::kDiag:
      return "diag";
    case ProductPart::kHerm:
      return "herm";
    case ProductPart::kSkew:
      return "skew";
  }
  return "unknown";
}

KLTuple kl_tuple(const KrausChannel& ch) {
  std::vector<HermitianMatrix> mats;
  std::vector<ProductLabel> labels;
  const std::size_t r = ch.r();
  mats.reserve(r * r);
  labels.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const ComplexMatrix product = adjoint_times(ch[i], ch[j]);
      if (i == j) {
        mats.push_back(HermitianMatrix::symmetrized(product));
        labels.push_back({i, j, ProductPart::kDiag});
      } else {
        auto [h, k] = hermitian_split(product);
        mats.push_back(std::move(h));
        labels.push_back({i, j, ProductPart::kHerm});
        mats.push_back(std::move(k));
        labels.push_back({i, j, ProductPart::kSkew});
      }
    }
  }
  return KLTuple{HermitianTuple(std::move(mats)), std::move(labels)};
}

}  // namespace rankrange
