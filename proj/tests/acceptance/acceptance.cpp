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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rankrange/error.hpp"
#include "rankrange/geometry.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/membership.hpp"
#include "rankrange/qec.hpp"
#include "rankrange/random.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/star.hpp"
#include "rankrange/tverberg.hpp"
#include "support/oracles.hpp"

namespace {

using namespace rankrange;
using Clock = std::chrono::steady_clock;

// Tolerances and budgets.
constexpr double kSphereWitnessTol = 1e-12;
constexpr double kSphereInteriorFloor = 1e-2;
constexpr double kSphereSeconds = 60.0;
constexpr double kConstructTol = 1e-8;
constexpr double kConstructSeconds = 120.0;
constexpr double kEndpointWitnessTol = 1e-9;
constexpr double kSweepAgreement = 1e-6;
constexpr double kAxisAgreement = 1e-9;
constexpr double kSweepMembershipTol = 1e-9;
constexpr int kSweepSteps = 45;
constexpr double kSlackFloor = -1e-8;
constexpr std::size_t kOuterDirections = 512;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kStarTol = 1e-8;
constexpr double kCollinearTol = 1e-9;
constexpr double kRepetitionTol = 1e-10;
constexpr double kGammaTol = 1e-12;
constexpr double kFindCodeTol = 1e-6;
constexpr double kFindCodeSeconds = 120.0;
constexpr std::size_t kSupMinEvaluations = 2000;
constexpr double kSupMinGap = 5e-3;
constexpr double kSupMinOvershoot = 1e-9;
constexpr double kVerifyTol = 1e-8;
constexpr double kNoiseSlack = 1e-12;
constexpr double kTranslateTol = 1e-13;
constexpr double kPointTol = 1e-10;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

/// Certificates gathered for the outer-containment criterion.
struct Issued {
  std::shared_ptr<const HermitianTuple> tuple;
  std::size_t k;
  RealVector point;
  std::string origin;
};
std::vector<Issued> g_issued;

void issue(const std::shared_ptr<const HermitianTuple>& a, const RangeCertificate& c,
           const std::string& origin) {
  g_issued.push_back({a, c.k(), c.point, origin});
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

RealVector scaled(RealVector v, double s) {
  for (double& x : v) x *= s;
  return v;
}

// 1. Closed-form sphere witnesses and interior non-membership.
Outcome sphere_oracle() {
  Outcome out;
  const auto start = Clock::now();
  double worst_witness = 0.0;
  double lowest_interior = INFINITY;
  for (std::size_t k = 1; k <= 3; ++k) {
    const SphereFamily family = sphere_family(k);
    const auto tuple = std::make_shared<const HermitianTuple>(family.tuple);
    Rng rng(derive_seed(0x5B11E, k));
    for (int i = 0; i < 100; ++i) {
      const RealVector a = random_direction(3, rng);
      const Isometry u = family.witness(a);
      const Verification v = verify_point(family.tuple, u, kSphereWitnessTol);
      const double res = oracle::residual(family.tuple, u.matrix(), a);
      worst_witness = std::max({worst_witness, v.certificate.residual, res});
      out.require(v.accepted && res <= kSphereWitnessTol,
                  "witness k=" + std::to_string(k) + " #" + std::to_string(i));
      if (i % 10 == 0) issue(tuple, v.certificate, "sphere witness");
    }
    for (int i = 0; i < 100; ++i) {
      const RealVector a = scaled(random_direction(3, rng), 0.8 * rng.uniform());
      MembershipOptions opts;
      opts.restarts = 50;
      opts.seed = derive_seed(0x1A7E, 1000 * k + i);
      const MembershipResult res = membership_solve(family.tuple, a, k, opts);
      lowest_interior = std::min(lowest_interior, res.best_residual());
      out.require(!res.found && res.best_residual() >= kSphereInteriorFloor,
                  "interior k=" + std::to_string(k) + " #" + std::to_string(i) +
                      fmt(" residual %.3g", res.best_residual()));
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kSphereSeconds, fmt("runtime %.1fs", elapsed));
  out.detail = fmt("worst witness residual %.2e", worst_witness) +
               fmt(", lowest interior residual %.3f", lowest_interior) + fmt(", %.1fs", elapsed);
  return out;
}

// 2. Constructive existence at the exact dimension bound.
Outcome constructive_existence() {
  Outcome out;
  const auto start = Clock::now();
  double worst = 0.0;
  const std::vector<std::pair<std::size_t, std::size_t>> cases{
      {1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}};
  for (auto [m, k] : cases) {
    const std::size_t n = existence_dimension(m, k);
    out.require(tverberg_point_count(m, k) <= kMaxTverbergPoints, "guard");
    for (int s = 0; s < 20; ++s) {
      Rng rng(derive_seed(0xC0257, 100 * m + 10 * k + s));
      const auto a = std::make_shared<const HermitianTuple>(random_tuple(m, n, rng));
      const std::string tag = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " #" +
                              std::to_string(s);
      try {
        const RangeCertificate c = construct_point(*a, k);
        const double res = oracle::residual(*a, c.witness.matrix(), c.point);
        worst = std::max({worst, c.residual, res});
        out.require(c.k() == k && res <= kConstructTol && c.residual <= kConstructTol, tag);
        issue(a, c, "construct_point");
      } catch (const Error& e) {
        out.require(false, tag + ": " + e.what());
      }
    }
  }
  const double elapsed = seconds_since(start);
  out.require(elapsed < kConstructSeconds, fmt("runtime %.1fs", elapsed));
  out.detail = fmt("100 tuples, worst residual %.2e", worst) + fmt(", %.1fs", elapsed);
  return out;
}

// 3. Emptiness of the diagonal example and the single point at n = 2k - 1.
Outcome emptiness_oracle() {
  Outcome out;
  auto diag = [](std::size_t n) {
    RealVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i + 1);
    return HermitianMatrix::diagonal(d);
  };
  for (auto [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 3}, {4, 3}}) {
    out.require(!single_matrix_interval(diag(n), k).has_value(),
                "nonempty for n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  double worst = 0.0;
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t n = 2 * k - 1;
    const auto a = std::make_shared<const HermitianTuple>(std::vector<HermitianMatrix>{diag(n)});
    const auto iv = single_matrix_interval((*a)[0], k);
    const double kk = static_cast<double>(k);
    out.require(iv && iv->lower == kk && iv->upper == kk, "point {k} for k=" + std::to_string(k));
    if (!iv) continue;
    for (const Isometry* w : {&iv->lower_witness, &iv->upper_witness, &iv->mid_witness}) {
      const Verification v = verify_point(*a, *w, kEndpointWitnessTol);
      const double res = oracle::residual(*a, w->matrix(), {kk});
      worst = std::max(worst, res);
      out.require(v.accepted && res <= kEndpointWitnessTol &&
                      std::abs(v.certificate.point[0] - kk) <= kPointTol,
                  "witness k=" + std::to_string(k));
      issue(a, v.certificate, "endpoint witness");
    }
  }
  out.detail = fmt("3 empty cases, 3 single points, worst witness residual %.2e", worst);
  return out;
}

/// Largest (sign = +1) or smallest (sign = -1) target that membership_solve
/// certifies, by bisection from a certified inner point.
double extremal_sweep(const std::shared_ptr<const HermitianTuple>& a, std::size_t k, double inside,
                      double sign, std::uint64_t seed) {
  double good = inside;
  double bad = inside + sign * ((*a)[0].frobenius_norm() + 1.0);
  for (int step = 0; step < kSweepSteps; ++step) {
    const double mid = 0.5 * (good + bad);
    MembershipOptions opts;
    opts.restarts = 8;
    opts.tol = kSweepMembershipTol;
    opts.seed = derive_seed(seed, static_cast<std::uint64_t>(step));
    const RealVector target{mid};
    const MembershipResult r = membership_solve(*a, target, k, opts);
    if (r.found) {
      good = mid;
      if (step % 15 == 14) issue(a, r.best, "sweep");
    } else {
      bad = mid;
    }
  }
  return good;
}

// 4. Single-matrix interval vs. optimization sweeps and axis half-spaces.
Outcome oracle_equivalence() {
  Outcome out;
  double worst_sweep = 0.0;
  double worst_axis = 0.0;
  for (int s = 0; s < 30; ++s) {
    Rng rng(derive_seed(0x0E0E, s));
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5.0);  // 2..6
    const std::size_t kmax = std::min<std::size_t>(3, (n + 1) / 2);
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(kmax));
    const auto a = std::make_shared<const HermitianTuple>(
        std::vector<HermitianMatrix>{random_hermitian(n, rng)});
    const std::string tag = "#" + std::to_string(s) + " n=" + std::to_string(n) +
                            " k=" + std::to_string(k);
    const auto iv = single_matrix_interval((*a)[0], k);
    if (!iv) {
      out.require(false, tag + ": empty interval");
      continue;
    }
    MembershipOptions free_opts;
    free_opts.seed = derive_seed(0xF4EE, s);
    const MembershipResult inner = membership_solve_free(*a, k, FreeTarget{}, free_opts);
    if (!inner.found) {
      out.require(false, tag + ": no inner point");
      continue;
    }
    issue(a, inner.best, "free sample");
    const double inside = inner.best.point[0];
    const double hi = extremal_sweep(a, k, inside, +1.0, derive_seed(0x5EE9, 2 * s));
    const double lo = extremal_sweep(a, k, inside, -1.0, derive_seed(0x5EE9, 2 * s + 1));
    const double sweep_err = std::max(std::abs(hi - iv->upper), std::abs(lo - iv->lower));
    worst_sweep = std::max(worst_sweep, sweep_err);
    out.require(sweep_err <= kSweepAgreement, tag + fmt(" sweep error %.2e", sweep_err));

    const HalfspaceSet h = outer_halfspaces(*a, k, 0, 0);
    const double axis_err = std::max(std::abs(h.entries[0].bound - iv->upper),
                                     std::abs(-h.entries[1].bound - iv->lower));
    worst_axis = std::max(worst_axis, axis_err);
    out.require(axis_err <= kAxisAgreement, tag + fmt(" axis error %.2e", axis_err));

    for (const Isometry* w : {&iv->lower_witness, &iv->upper_witness, &iv->mid_witness}) {
      issue(a, verify_point(*a, *w, kVerifyTol).certificate, "interval witness");
    }
  }
  out.detail = fmt("30 matrices, worst sweep error %.2e", worst_sweep) +
               fmt(", worst axis error %.2e", worst_axis);
  return out;
}

// 5. Outer containment of every certificate above, and monotonicity in k.
Outcome outer_containment() {
  Outcome out;
  double lowest = INFINITY;
  const HermitianTuple* last_tuple = nullptr;
  std::size_t last_k = 0;
  HalfspaceSet h;
  std::size_t tuples = 0;
  for (const auto& c : g_issued) {
    if (c.tuple.get() != last_tuple || c.k != last_k) {
      h = outer_halfspaces(*c.tuple, c.k, kOuterDirections, 0x0A7E);
      last_tuple = c.tuple.get();
      last_k = c.k;
    }
    const SlackReport r = check_against_halfspaces(h, c.point);
    lowest = std::min(lowest, r.min_slack);
    out.require(r.min_slack >= kSlackFloor, c.origin + fmt(" slack %.3g", r.min_slack));
  }

  double worst_increase = -INFINITY;
  last_tuple = nullptr;
  for (const auto& c : g_issued) {
    if (c.tuple.get() == last_tuple) continue;
    last_tuple = c.tuple.get();
    ++tuples;
    const std::size_t top = std::min<std::size_t>(c.tuple->dim(), 4);
    HalfspaceSet prev = outer_halfspaces(*c.tuple, 1, 64, 0x0A7E);
    for (std::size_t k = 2; k <= top; ++k) {
      const HalfspaceSet next = rebound(*c.tuple, prev, k);
      for (std::size_t i = 0; i < next.entries.size(); ++i) {
        const double inc = next.entries[i].bound - prev.entries[i].bound;
        worst_increase = std::max(worst_increase, inc);
        out.require(inc <= kMonotoneSlack, fmt("bound increased by %.3g", inc));
      }
      prev = next;
    }
  }
  out.detail = std::to_string(g_issued.size()) + " certificates" +
               fmt(", lowest slack %.2e", lowest) + ", " + std::to_string(tuples) +
               " tuples monotone in k" + fmt(" (largest change %.2e)", worst_increase);
  return out;
}

double off_segment(const StarSegment& seg) {
  double worst = 0.0;
  for (const auto& s : seg.samples) {
    for (std::size_t j = 0; j < s.cert.point.size(); ++j) {
      const double want = seg.center.point[j] + s.t * (seg.tip.point[j] - seg.center.point[j]);
      worst = std::max(worst, std::abs(s.cert.point[j] - want));
    }
  }
  return worst;
}

double segment_residual(const HermitianTuple& a, const StarSegment& seg) {
  double worst = 0.0;
  for (const auto& s : seg.samples) {
    RealVector want(seg.center.point.size());
    for (std::size_t j = 0; j < want.size(); ++j) {
      want[j] = seg.center.point[j] + s.t * (seg.tip.point[j] - seg.center.point[j]);
    }
    worst = std::max(worst, oracle::residual(a, s.cert.witness.matrix(), want));
  }
  return worst;
}

// 6. Star segments at rank k and rank one.
Outcome star_segments() {
  Outcome out;
  double worst_res = 0.0;
  double worst_line = 0.0;
  for (int s = 0; s < 10; ++s) {
    const std::string tag = "rank-k #" + std::to_string(s);
    try {
      Rng rng(derive_seed(0x57A4, s));
      const HermitianTuple a = random_tuple(2, 36, rng);
      const RangeCertificate center = construct_point(a, 4);
      const auto tips = sample_inner(a, 1, 1, derive_seed(0x7195, s));
      if (tips.empty()) {
        out.require(false, tag + ": no tip");
        continue;
      }
      const StarSegment seg = star_segment_rank_k(a, center, tips[0], equally_spaced(21));
      const double res = segment_residual(a, seg);
      const double line = off_segment(seg);
      worst_res = std::max(worst_res, res);
      worst_line = std::max(worst_line, line);
      out.require(seg.samples.size() == 21 && res <= kStarTol && line <= kCollinearTol, tag);
    } catch (const Error& e) {
      out.require(false, tag + ": " + e.what());
    }
  }
  int dependent = 0;
  int independent = 0;
  for (int s = 0; s < 10; ++s) {
    const std::string tag = "rank-1 #" + std::to_string(s);
    try {
      Rng rng(derive_seed(0x57A1, s));
      const HermitianTuple a = random_tuple(4, 75, rng);
      const RangeCertificate center = construct_point(a, 3);
      ComplexVector x;
      if (s % 2 == 1) {
        // x orthogonal to range(X) + A'_4 range(X) makes the fourth first-row
        // vector vanish.
        const HermitianTuple shifted = translate_tuple(a, center.point);
        const ComplexMatrix& w = center.witness.matrix();
        const ComplexMatrix basis = orth_complement(hcat(w, shifted[3].matrix() * w));
        ComplexVector coeff(basis.cols());
        for (auto& z : coeff) z = rng.complex_normal();
        x = basis * std::span<const Complex>(coeff);
        const double len = norm(x);
        for (auto& z : x) z /= len;
      } else {
        x = random_unit_vector(75, rng);
      }
      const StarSegment seg = star_segment_rank_1(a, center, x, equally_spaced(11));
      if (seg.star_case == StarCase::kDependent) ++dependent;
      if (seg.star_case == StarCase::kIndependent) ++independent;
      const double res = segment_residual(a, seg);
      const double line = off_segment(seg);
      worst_res = std::max(worst_res, res);
      worst_line = std::max(worst_line, line);
      out.require(seg.samples.size() == 11 && res <= kStarTol && line <= kCollinearTol, tag);
    } catch (const Error& e) {
      out.require(false, tag + ": " + e.what());
    }
  }
  out.require(dependent > 0 && independent > 0, "both rank-one constructions exercised");
  out.detail = fmt("worst residual %.2e", worst_res) + fmt(", worst off-segment %.2e", worst_line) +
               ", rank-one cases dependent/independent = " + std::to_string(dependent) + "/" +
               std::to_string(independent);
  return out;
}

// 7. Repetition code for the three-qubit bit flip and code search.
Outcome qec_end_to_end() {
  Outcome out;
  const KrausChannel ch = builtin_channel("bit_flip_3q", 0.3).channel;
  ComplexMatrix basis(8, 2);
  basis(0, 0) = 1.0;
  basis(7, 1) = 1.0;
  const CodeVerification v = verify_code(ch, Isometry(basis), kRepetitionTol);
  const oracle::KLCheck brute = oracle::knill_laflamme(ch.kraus(), basis);
  const double expected[4] = {0.7, 0.1, 0.1, 0.1};
  double gamma_err = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex want = i == j ? expected[i] : 0.0;
      gamma_err = std::max({gamma_err, std::abs(v.certificate.gamma(i, j) - want),
                            std::abs(brute.gamma(i, j) - want)});
    }
  }
  out.require(v.accepted && brute.residual <= kRepetitionTol, "repetition code accepted");
  out.require(gamma_err <= kGammaTol, fmt("gamma error %.2e", gamma_err));

  const auto start = Clock::now();
  FindCodeOptions opts;
  opts.membership.seed = 7;
  opts.accept = kFindCodeTol;
  const FindCodeResult found = find_code(ch, 2, opts);
  const double elapsed = seconds_since(start);
  const oracle::KLCheck recheck = oracle::knill_laflamme(ch.kraus(), found.best.basis.matrix());
  out.require(found.found && found.best.residual <= kFindCodeTol && recheck.residual <= kFindCodeTol,
              fmt("find_code residual %.2e", found.best.residual));
  out.require(elapsed < kFindCodeSeconds, fmt("find_code runtime %.1fs", elapsed));
  out.detail = fmt("repetition residual %.2e", v.certificate.residual) +
               fmt(", gamma error %.2e", gamma_err) +
               fmt(", find_code residual %.2e", found.best.residual) +
               " via " + to_string(found.route) + fmt(" in %.2fs", elapsed);
  return out;
}

// 8. k-th largest eigenvalue vs. a sampled sup-min search.
Outcome courant_fischer() {
  Outcome out;
  double worst_gap = 0.0;
  double worst_over = -INFINITY;
  for (int s = 0; s < 20; ++s) {
    Rng rng(derive_seed(0xCF, s));
    const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 5.0);  // 1..5
    const std::size_t k = 1 + static_cast<std::size_t>(rng.uniform() * std::min<double>(3, n));
    const HermitianMatrix a = random_hermitian(n, rng);
    const double lambda = kth_largest_eigenvalue(a, k);
    const double brute =
        oracle::sup_min_search(a.matrix(), k, kSupMinEvaluations, derive_seed(0xB2, s));
    worst_gap = std::max(worst_gap, lambda - brute);
    worst_over = std::max(worst_over, brute - lambda);
    out.require(lambda - brute <= kSupMinGap && brute - lambda <= kSupMinOvershoot,
                "#" + std::to_string(s) + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    fmt(" gap %.2e", lambda - brute));
  }
  out.detail = fmt("worst gap below %.2e", worst_gap) + fmt(", largest overshoot %.2e", worst_over);
  return out;
}

/// Random tuple with a certificate: rank one from a random vector, rank two
/// and three from the constructive pipeline.
struct Instance {
  HermitianTuple a;
  RangeCertificate cert;
};

Instance random_instance(std::uint64_t seed, std::size_t min_k = 1) {
  Rng rng(seed);
  const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform() * 2.0);  // 1..2
  std::size_t k = min_k + static_cast<std::size_t>(rng.uniform() * static_cast<double>(4 - min_k));
  k = std::min<std::size_t>(k, 3);
  if (k == 1) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform() * 5.0);
    HermitianTuple a = random_tuple(m + 1, n, rng);
    Isometry u = random_isometry(n, 1, rng);
    RangeCertificate c = verify_point(a, u, kVerifyTol).certificate;
    return {std::move(a), std::move(c)};
  }
  const std::size_t n = existence_dimension(m, k) + static_cast<std::size_t>(rng.uniform() * 3.0);
  HermitianTuple a = random_tuple(m, n, rng);
  RangeCertificate c = construct_point(a, k);
  return {std::move(a), std::move(c)};
}

// 9. Transform, translation, coordinate drop, rank shrink and compression.
Outcome covariances() {
  Outcome out;
  int checks = 0;
  for (int s = 0; s < 50; ++s) {
    const std::string tag = "#" + std::to_string(s);
    // Transform transport.
    {
      Instance in = random_instance(derive_seed(0x21, s));
      Rng rng(derive_seed(0x22, s));
      const std::size_t m = in.a.size();
      const std::size_t p = 1 + static_cast<std::size_t>(rng.uniform() * 4.0);
      std::vector<double> t(m * p);
      for (double& x : t) x = rng.normal();
      RealVector mu(p);
      for (double& x : mu) x = rng.normal();
      const RealTransform tr(m, p, t, mu);
      const HermitianTuple b = transform_tuple(in.a, tr);
      const RangeCertificate moved = transport_certificate(b, in.cert, tr);
      const RealVector want = tr.apply(in.cert.point);
      const double res = oracle::residual(b, moved.witness.matrix(), want);
      const double bound = tr.l1_norm() * in.cert.residual + kNoiseSlack;
      out.require(res <= bound && std::abs(moved.residual - res) <= kNoiseSlack &&
                      verify_point(b, moved.witness, tr.l1_norm() * kVerifyTol).accepted,
                  tag + " transform");
      ++checks;
    }
    // Translation.
    {
      Instance in = random_instance(derive_seed(0x31, s));
      Rng rng(derive_seed(0x32, s));
      RealVector mu(in.a.size());
      for (double& x : mu) x = 3.0 * rng.normal();
      const HermitianTuple b = translate_tuple(in.a, mu);
      const Verification after = verify_point(b, in.cert.witness, kVerifyTol);
      const RangeCertificate moved = translate_certificate(in.cert, mu);
      double diff = 0.0;
      for (std::size_t j = 0; j < mu.size(); ++j) {
        diff = std::max(diff, std::abs(after.certificate.point[j] - (in.cert.point[j] - mu[j])));
        diff = std::max(diff, std::abs(moved.point[j] - (in.cert.point[j] - mu[j])));
      }
      out.require(after.accepted && diff <= kTranslateTol &&
                      std::abs(after.certificate.residual - in.cert.residual) <= kNoiseSlack,
                  tag + fmt(" translate %.2e", diff));
      ++checks;
    }
    // Coordinate drop.
    {
      Instance in = random_instance(derive_seed(0x41, s));
      if (in.a.size() < 2) {
        Rng rng(derive_seed(0x42, s));
        std::vector<HermitianMatrix> mats = in.a.matrices();
        mats.push_back(random_hermitian(in.a.dim(), rng));
        const HermitianTuple wider(std::move(mats));
        in.cert = verify_point(wider, in.cert.witness, INFINITY).certificate;
        in.a = wider;
      }
      std::vector<HermitianMatrix> head(in.a.matrices().begin(), in.a.matrices().end() - 1);
      const HermitianTuple shorter(std::move(head));
      const RangeCertificate dropped = drop_coordinate(in.a, in.cert);
      const RealVector want(in.cert.point.begin(), in.cert.point.end() - 1);
      const double res = oracle::residual(shorter, dropped.witness.matrix(), want);
      out.require(dropped.point == want && res <= in.cert.residual + kNoiseSlack,
                  tag + " drop");
      ++checks;
    }
    // Rank shrink.
    {
      Instance in = random_instance(derive_seed(0x51, s), 2);
      const RangeCertificate shrunk = shrink_rank(in.a, in.cert);
      const double res = oracle::residual(in.a, shrunk.witness.matrix(), in.cert.point);
      out.require(shrunk.k() + 1 == in.cert.k() && res <= in.cert.residual + kNoiseSlack &&
                      verify_point(in.a, shrunk.witness, kVerifyTol).accepted,
                  tag + " shrink");
      ++checks;
    }
    // Compression.
    {
      Instance in = random_instance(derive_seed(0x61, s), 2);
      Rng rng(derive_seed(0x62, s));
      const std::size_t k = in.cert.k();
      const std::size_t r = 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(k - 1));
      const std::size_t n = in.a.dim();
      const Isometry x = random_isometry(n, n - r, rng);
      try {
        const RangeCertificate c = compression_inclusion_check(in.a, in.cert, x);
        const HermitianTuple b = compress(in.a, x);
        const double res = oracle::residual(b, c.witness.matrix(), in.cert.point);
        double diff = 0.0;
        for (std::size_t j = 0; j < c.point.size(); ++j) {
          diff = std::max(diff, std::abs(c.point[j] - in.cert.point[j]));
        }
        out.require(c.k() == k - r && res <= kVerifyTol && diff <= kPointTol,
                    tag + fmt(" compression residual %.2e", res));
      } catch (const Error& e) {
        out.require(false, tag + " compression: " + e.what());
      }
      ++checks;
    }
  }
  out.detail = std::to_string(checks) + " property checks over 50 seeds per family";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"sphere oracle", sphere_oracle},
      {"constructive existence", constructive_existence},
      {"emptiness oracle", emptiness_oracle},
      {"oracle equivalence", oracle_equivalence},
      {"outer containment", outer_containment},
      {"star segments", star_segments},
      {"qec end-to-end", qec_end_to_end},
      {"courant-fischer audit", courant_fischer},
      {"algebraic covariances", covariances},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
