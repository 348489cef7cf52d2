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

#include <cmath>

#include "doctest.h"
#include "rankrange/channel.hpp"
#include "rankrange/error.hpp"
#include "rankrange/qec.hpp"
#include "rankrange/random.hpp"

using namespace rankrange;

TEST_CASE("trace preservation is validated") {
  const ComplexMatrix k0 = std::sqrt(0.5) * ComplexMatrix::identity(2);
  const ComplexMatrix k1 = std::sqrt(0.5) * ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK_NOTHROW(KrausChannel({k0, k1}));
  CHECK(validate_kraus(KrausChannel({k0, k1})).ok);
  CHECK_THROWS_AS(KrausChannel({k0}), PreconditionError);
  const KrausChannel loose = KrausChannel::unchecked({k0});
  const TraceReport rep = validate_kraus(loose);
  CHECK_FALSE(rep.ok);
  CHECK(rep.residual == doctest::Approx(std::sqrt(2.0) * 0.5));
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}),
                  DimensionError);
  CHECK_THROWS_AS(KrausChannel::unchecked({}), DimensionError);
}

TEST_CASE("apply_channel preserves trace") {
  const KrausChannel ch = builtin_channel("depolarizing_1q", 0.4).channel;
  const ComplexMatrix rho = ComplexMatrix::from_rows({{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}});
  const ComplexMatrix out = apply_channel(ch, rho);
  CHECK(std::abs(out.trace() - 1.0) < 1e-14);
  // Depolarizing: rho -> (1 - 4p/3) rho + (2p/3) I for a unit-trace rho.
  const double p = 0.4;
  CHECK(std::abs(out(0, 0) - ((1.0 - 4.0 * p / 3.0) * 0.7 + 2.0 * p / 3.0)) < 1e-14);
  CHECK(std::abs(out(0, 1) - (1.0 - 4.0 * p / 3.0) * Complex(0.1, 0.2)) < 1e-14);
}

TEST_CASE("negligible operators are dropped") {
  const KrausChannel ch = KrausChannel({ComplexMatrix::identity(2), ComplexMatrix(2, 2)});
  CHECK(ch.without_negligible().r() == 1);
  const KrausChannel ad = builtin_channel("amplitude_damping", 0.0).channel;
  CHECK(ad.r() == 1);
}

TEST_CASE("KL tuple layout") {
  const KrausChannel ch = builtin_channel("bit_flip_3q", 0.3).channel;
  const KLTuple kl = kl_tuple(ch);
  CHECK(kl.base.size() == 16);
  CHECK(kl.labels.size() == 16);
  CHECK(kl.labels[0] == ProductLabel{0, 0, ProductPart::kDiag});
  CHECK(kl.labels[1] == ProductLabel{0, 1, ProductPart::kHerm});
  CHECK(kl.labels[2] == ProductLabel{0, 1, ProductPart::kSkew});
  CHECK(to_string(ProductPart::kSkew) == "skew");
  // Each product is recovered from its Hermitian and skew parts.
  for (std::size_t idx = 0; idx < kl.labels.size(); ++idx) {
    const ProductLabel l = kl.labels[idx];
    if (l.part != ProductPart::kHerm) continue;
    ComplexMatrix back = kl.base[idx].matrix() + Complex(0.0, 1.0) * kl.base[idx + 1].matrix();
    back -= adjoint_times(ch[l.i], ch[l.j]);
    CHECK(back.frobenius_norm() < 1e-14);
  }
}

TEST_CASE("builtin channels validate") {
  for (const auto& name : builtin_channel_names()) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
      const NamedChannel c = builtin_channel(name, p);
      CHECK(validate_kraus(c.channel, 1e-10).ok);
    }
  }
  CHECK(builtin_channel("bit_flip_3q", 0.3).channel.r() == 4);
  CHECK(builtin_channel("bit_flip_3q", 0.3).channel.n() == 8);
  CHECK(builtin_channel("depolarizing_1q", 0.2).channel.r() == 4);
  CHECK_THROWS_AS(builtin_channel("nope", 0.1), DomainError);
  CHECK_THROWS_AS(builtin_channel("depolarizing_1q", 1.5), DomainError);
}

TEST_CASE("qubit one is the most significant factor") {
  const KrausChannel ch = builtin_channel("bit_flip_3q", 0.3).channel;
  // X on qubit 1 maps |000> (index 0) to |100> (index 4).
  const ComplexMatrix x1 = ch[1] * (1.0 / std::sqrt(0.1));
  CHECK(std::abs(x1(4, 0) - 1.0) < 1e-14);
  const ComplexMatrix x3 = ch[3] * (1.0 / std::sqrt(0.1));
  CHECK(std::abs(x3(1, 0) - 1.0) < 1e-14);
}
