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

#include "rankrange/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/parallel.hpp"
#include "rankrange/random.hpp"

namespace rankrange {

namespace {

constexpr std::size_t kMaxPolishUnknowns = 400;

/// out = a * b for a (n x n) and b (n x k); out must be pre-sized.
void multiply_into(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  const std::size_t n = a.rows();
  const std::size_t k = b.cols();
  auto o = out.entries();
  std::fill(o.begin(), o.end(), Complex{});
  const auto ae = a.entries();
  const auto be = b.entries();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      const Complex x = ae[i * n + l];
      if (x == Complex{}) continue;
      for (std::size_t j = 0; j < k; ++j) o[i * k + j] += x * be[l * k + j];
    }
  }
}

class Objective {
 public:
  Objective(const HermitianTuple& a, std::size_t k, bool fixed, RealVector target, double weight)
      : a_(a),
        k_(k),
        fixed_(fixed),
        target_(std::move(target)),
        weight_(weight),
        au_(a.size(), ComplexMatrix(a.dim(), k)),
        c_(a.size(), ComplexMatrix(k, k)),
        point_(a.size()) {}

  void set_weight(double w) { weight_ = w; }
  bool penalized() const { return !fixed_ && weight_ > 0.0 && !target_.empty(); }

  /// Returns f(U); caches A_jU, U^*A_jU and the point for gradient().
  double evaluate(const ComplexMatrix& u) {
    const double kd = static_cast<double>(k_);
    double dev = 0.0;
    double penalty = 0.0;
    for (std::size_t j = 0; j < a_.size(); ++j) {
      multiply_into(a_[j].matrix(), u, au_[j]);
      c_[j] = adjoint_times(u, au_[j]);
      double tr = 0.0;
      for (std::size_t p = 0; p < k_; ++p) tr += c_[j](p, p).real();
      point_[j] = fixed_ ? target_[j] : tr / kd;
      for (std::size_t p = 0; p < k_; ++p) {
        for (std::size_t q = 0; q < k_; ++q) {
          const Complex h = 0.5 * (c_[j](p, q) + std::conj(c_[j](q, p)));
          dev += std::norm(p == q ? h - point_[j] : h);
        }
      }
      if (penalized()) penalty += (point_[j] - target_[j]) * (point_[j] - target_[j]);
    }
    deviation_ = dev;
    return dev + weight_ * penalty * (penalized() ? 1.0 : 0.0);
  }

  /// Residual of the last evaluated U at its point.
  double residual() const { return std::sqrt(deviation_); }

  /// Riemannian gradient at the last evaluated U.
  ComplexMatrix gradient(const ComplexMatrix& u) const {
    const std::size_t n = a_.dim();
    ComplexMatrix g(n, k_);
    ComplexMatrix mj(k_, k_);
    for (std::size_t j = 0; j < a_.size(); ++j) {
      for (std::size_t p = 0; p < k_; ++p) {
        for (std::size_t q = 0; q < k_; ++q) {
          const Complex h = 0.5 * (c_[j](p, q) + std::conj(c_[j](q, p)));
          mj(p, q) = p == q ? h - point_[j] : h;
        }
      }
      double extra = 0.0;
      if (penalized()) extra = weight_ * (point_[j] - target_[j]) / static_cast<double>(k_);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t q = 0; q < k_; ++q) {
          Complex s = extra * au_[j](i, q);
          for (std::size_t p = 0; p < k_; ++p) s += au_[j](i, p) * mj(p, q);
          g(i, q) += 4.0 * s;
        }
      }
    }
    // Tangent projection G - U sym(U^*G).
    const ComplexMatrix ug = adjoint_times(u, g);
    ComplexMatrix sym(k_, k_);
    for (std::size_t p = 0; p < k_; ++p) {
      for (std::size_t q = 0; q < k_; ++q) sym(p, q) = 0.5 * (ug(p, q) + std::conj(ug(q, p)));
    }
    return g - u * sym;
  }

 private:
  const HermitianTuple& a_;
  std::size_t k_;
  bool fixed_;
  RealVector target_;
  double weight_;
  std::vector<ComplexMatrix> au_;
  std::vector<ComplexMatrix> c_;
  RealVector point_;
  double deviation_ = 0.0;
};

struct Run {
  ComplexMatrix u;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

double initial_step(const HermitianTuple& a) {
  double s = 0.0;
  for (const auto& m : a) s += m.frobenius_norm() * m.frobenius_norm();
  return 1.0 / (1.0 + 4.0 * s);
}

/// One descent from `u`. Stops on small residual (when `stop_residual` > 0),
/// small gradient, failed line search, stagnation, or the iteration cap.
int descend(Objective& obj, ComplexMatrix& u, double step, double stop_residual,
            const MembershipOptions& opt) {
  double f = obj.evaluate(u);
  int stall = 0;
  int it = 0;
  for (; it < opt.max_iters; ++it) {
    if (stop_residual > 0.0 && obj.residual() <= stop_residual) break;
    const ComplexMatrix grad = obj.gradient(u);
    const double gnorm = grad.frobenius_norm();
    if (gnorm <= opt.grad_tol) break;
    const double g2 = gnorm * gnorm;

    double s = std::min(2.0 * step, 1e6);
    bool accepted = false;
    double f_new = f;
    ComplexMatrix candidate;
    for (int bt = 0; bt < 80; ++bt) {
      candidate = thin_qr(u - grad * Complex(s, 0.0)).q;
      f_new = obj.evaluate(candidate);
      if (f_new <= f - opt.armijo * s * g2) {
        accepted = true;
        break;
      }
      s *= opt.shrink;
    }
    if (!accepted) break;
    const double decrease = f - f_new;
    u = std::move(candidate);
    step = s;
    stall = decrease <= 1e-12 * f ? stall + 1 : 0;
    f = f_new;
    if (stall >= 10) break;
  }
  obj.evaluate(u);
  return it;
}

/// Columns of the real Jacobian follow U's entries, real then imaginary part;
/// rows hold each Hermitian k x k block as its diagonal and sqrt(2) times the
/// real and imaginary parts above it, so row norms match Frobenius norms.
void push_hermitian(const ComplexMatrix& h, std::vector<double>& out) {
  const std::size_t k = h.rows();
  for (std::size_t p = 0; p < k; ++p) out.push_back(h(p, p).real());
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      out.push_back(std::sqrt(2.0) * h(p, q).real());
      out.push_back(std::sqrt(2.0) * h(p, q).imag());
    }
  }
}

/// Residual blocks U^*A_jU - a_j I (a_j fixed or the trace average) followed
/// by U^*U - I.
std::vector<double> residual_vector(const HermitianTuple& a, const ComplexMatrix& u, bool fixed,
                                    const RealVector& target, std::vector<ComplexMatrix>& au) {
  const std::size_t k = u.cols();
  std::vector<double> r;
  for (std::size_t j = 0; j < a.size(); ++j) {
    au[j] = a[j].matrix() * u;
    ComplexMatrix c = adjoint_times(u, au[j]);
    double tr = 0.0;
    for (std::size_t p = 0; p < k; ++p) tr += c(p, p).real();
    const double point = fixed ? target[j] : tr / static_cast<double>(k);
    ComplexMatrix h(k, k);
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) h(p, q) = 0.5 * (c(p, q) + std::conj(c(q, p)));
      h(p, p) -= point;
    }
    push_hermitian(h, r);
  }
  ComplexMatrix e = adjoint_times(u, u);
  for (std::size_t p = 0; p < k; ++p) e(p, p) -= 1.0;
  push_hermitian(e, r);
  return r;
}

/// Derivative of the residual blocks along the entry (i, c) of U scaled by z.
void jacobian_column(const std::vector<ComplexMatrix>& au, const ComplexMatrix& u, bool fixed,
                     std::size_t i, std::size_t c, Complex z, std::vector<double>& out) {
  const std::size_t k = u.cols();
  ComplexMatrix s(k, k);
  auto block = [&](const ComplexMatrix& w, bool center) {
    // S = M + M^* with M = Delta^* W, whose only nonzero row is c.
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) {
        Complex v = 0.0;
        if (p == c) v += std::conj(z) * w(i, q);
        if (q == c) v += z * std::conj(w(i, p));
        s(p, q) = v;
      }
    }
    if (center) {
      const double tr = 2.0 * (std::conj(z) * w(i, c)).real() / static_cast<double>(k);
      for (std::size_t p = 0; p < k; ++p) s(p, p) -= tr;
    }
    push_hermitian(s, out);
  };
  for (const auto& w : au) block(w, !fixed);
  block(u, false);
}

/// Cholesky solve of the symmetric positive definite n x n system; false if
/// the factorization breaks down.
bool cholesky_solve(std::vector<double> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t p = 0; p < j; ++p) d -= a[j * n + p] * a[j * n + p];
    if (!(d > 0.0)) return false;
    d = std::sqrt(d);
    a[j * n + j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = a[i * n + j];
      for (std::size_t p = 0; p < j; ++p) v -= a[i * n + p] * a[j * n + p];
      a[i * n + j] = v / d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < i; ++p) b[i] -= a[i * n + p] * b[p];
    b[i] /= a[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t p = i + 1; p < n; ++p) b[i] -= a[p * n + i] * b[p];
    b[i] /= a[i * n + i];
  }
  return true;
}

double squared(const std::vector<double>& r) {
  double s = 0.0;
  for (double x : r) s += x * x;
  return s;
}

/// Levenberg-Marquardt on the residual blocks, retracting each step by thin
/// QR. Stops at `stop_residual`, after `max_iters` iterations, or when the
/// damping grows past 1e12.
int polish(const HermitianTuple& a, ComplexMatrix& u, bool fixed, const RealVector& target,
           double stop_residual, int max_iters) {
  const std::size_t n = u.rows();
  const std::size_t k = u.cols();
  const std::size_t cols = 2 * n * k;
  std::vector<ComplexMatrix> au(a.size());
  std::vector<double> r = residual_vector(a, u, fixed, target, au);
  double f = squared(r);
  double mu = -1.0;
  int it = 0;
  std::vector<double> jac;
  std::vector<double> column;
  for (; it < max_iters && std::sqrt(f) > stop_residual; ++it) {
    const std::size_t rows = r.size();
    jac.assign(rows * cols, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < k; ++c) {
        for (int part = 0; part < 2; ++part) {
          column.clear();
          jacobian_column(au, u, fixed, i, c, part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0),
                          column);
          const std::size_t col = 2 * (i * k + c) + static_cast<std::size_t>(part);
          for (std::size_t row = 0; row < rows; ++row) jac[row * cols + col] = column[row];
        }
      }
    }
    std::vector<double> normal(cols * cols, 0.0);
    std::vector<double> grad(cols, 0.0);
    for (std::size_t row = 0; row < rows; ++row) {
      const double* jr = &jac[row * cols];
      for (std::size_t p = 0; p < cols; ++p) {
        if (jr[p] == 0.0) continue;
        grad[p] += jr[p] * r[row];
        for (std::size_t q = p; q < cols; ++q) normal[p * cols + q] += jr[p] * jr[q];
      }
    }
    double diag_max = 0.0;
    for (std::size_t p = 0; p < cols; ++p) {
      for (std::size_t q = 0; q < p; ++q) normal[p * cols + q] = normal[q * cols + p];
      diag_max = std::max(diag_max, normal[p * cols + p]);
    }
    if (mu < 0.0) mu = 1e-3 * std::max(diag_max, 1e-300);

    bool accepted = false;
    while (!accepted && mu <= 1e12 * std::max(diag_max, 1.0)) {
      std::vector<double> sys = normal;
      for (std::size_t p = 0; p < cols; ++p) sys[p * cols + p] += mu;
      std::vector<double> step(cols);
      for (std::size_t p = 0; p < cols; ++p) step[p] = -grad[p];
      if (!cholesky_solve(std::move(sys), step)) {
        mu *= 4.0;
        continue;
      }
      ComplexMatrix moved = u;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
          const std::size_t col = 2 * (i * k + c);
          moved(i, c) += Complex(step[col], step[col + 1]);
        }
      }
      try {
        moved = thin_qr(moved).q;
      } catch (const DegeneracyError&) {
        mu *= 4.0;
        continue;
      }
      std::vector<ComplexMatrix> au_new(a.size());
      std::vector<double> r_new = residual_vector(a, moved, fixed, target, au_new);
      const double f_new = squared(r_new);
      if (f_new < f) {
        u = std::move(moved);
        au = std::move(au_new);
        r = std::move(r_new);
        f = f_new;
        mu = std::max(mu / 3.0, 1e-300);
        accepted = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!accepted) break;
  }
  return it;
}

MembershipResult search(const HermitianTuple& a, std::size_t k, bool fixed, RealVector target,
                        const FreeTarget& free, const MembershipOptions& opt) {
  const std::size_t n = a.dim();
  if (k == 0 || k > n) throw DimensionError("membership_solve: need 1 <= k <= n");
  if (fixed && target.size() != a.size()) {
    throw DimensionError("membership_solve: target length != m");
  }
  if (!fixed && free.anchor && free.anchor->size() != a.size()) {
    throw DimensionError("membership_solve: anchor length != m");
  }

  const int restarts = std::max(1, opt.restarts);
  const int block = std::max(1, opt.block);
  const double step0 = initial_step(a);
  const bool polishable = opt.polish_iters > 0 && 2 * n * k <= kMaxPolishUnknowns;
  std::vector<Run> runs(static_cast<std::size_t>(restarts));

  auto run_one = [&](std::size_t i) {
    Rng rng(derive_seed(opt.seed, i));
    Run r;
    r.u = random_isometry(n, k, rng).matrix();
    if (fixed) {
      Objective obj(a, k, true, target, 0.0);
      r.iterations = descend(obj, r.u, step0, 1e-3 * opt.tol, opt);
      r.residual = obj.residual();
      if (r.residual > opt.tol && polishable) {
        r.iterations += polish(a, r.u, true, target, 1e-3 * opt.tol, opt.polish_iters);
        r.residual = std::sqrt(obj.evaluate(r.u));
      }
    } else {
      Objective obj(a, k, false, free.anchor.value_or(RealVector{}), free.weight);
      if (obj.penalized()) r.iterations = descend(obj, r.u, step0, 0.0, opt);
      obj.set_weight(0.0);
      r.iterations += descend(obj, r.u, step0, 1e-3 * opt.tol, opt);
      r.residual = obj.residual();
      if (r.residual > opt.tol && polishable) {
        r.iterations += polish(a, r.u, false, {}, 1e-3 * opt.tol, opt.polish_iters);
        obj.evaluate(r.u);
        r.residual = obj.residual();
      }
    }
    runs[i] = std::move(r);
  };

  std::size_t done = 0;
  while (done < runs.size()) {
    const std::size_t end = std::min(runs.size(), done + static_cast<std::size_t>(block));
    parallel_for(done, end, opt.workers, run_one);
    done = end;
    const bool any = std::any_of(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(done),
                                 [&](const Run& r) { return r.residual <= opt.tol; });
    if (any) break;
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < done; ++i) {
    if (runs[i].residual < runs[best].residual) best = i;
  }
  int iterations = 0;
  for (std::size_t i = 0; i < done; ++i) iterations += runs[i].iterations;

  Isometry witness(runs[best].u);
  MembershipResult out;
  if (fixed) {
    const double residual = residual_at(a, witness, target);
    out.best = RangeCertificate{std::move(target), std::move(witness), residual};
  } else {
    out.best = verify_point(a, witness, opt.tol).certificate;
  }
  out.found = out.best.residual <= opt.tol;
  out.restart = static_cast<int>(best);
  out.iterations = iterations;
  return out;
}

}  // namespace

MembershipResult membership_solve(const HermitianTuple& a, std::span<const double> target,
                                  std::size_t k, const MembershipOptions& options) {
  return search(a, k, true, RealVector(target.begin(), target.end()), FreeTarget{}, options);
}

MembershipResult membership_solve_free(const HermitianTuple& a, std::size_t k,
                                       const FreeTarget& free, const MembershipOptions& options) {
  return search(a, k, false, {}, free, options);
}

}  // namespace rankrange
