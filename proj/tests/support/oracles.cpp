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

#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace rankrange::oracle {

namespace {

using Mat = Eigen::MatrixXcd;

Mat to_eigen(const ComplexMatrix& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  }
  return out;
}

Mat gram_schmidt(Mat u) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index p = 0; p < j; ++p) u.col(j) -= u.col(p).dot(u.col(j)) * u.col(p);
    }
    u.col(j).normalize();
  }
  return u;
}

double min_eig(const Mat& a, const Mat& u) {
  const Mat c = u.adjoint() * a * u;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

std::vector<double> eigenvalues(const ComplexMatrix& a) {
  const Mat m = to_eigen(a);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  return out;
}

double residual(const HermitianTuple& a, const ComplexMatrix& u, const std::vector<double>& point) {
  const std::size_t n = u.rows();
  const std::size_t k = u.cols();
  double total = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) {
        Complex s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) s += std::conj(u(r, p)) * a[j](r, c) * u(c, q);
        }
        if (p == q) s -= point[j];
        total += std::norm(s);
      }
    }
  }
  return std::sqrt(total);
}

std::vector<double> trace_point(const HermitianTuple& a, const ComplexMatrix& u) {
  std::vector<double> out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Complex s = 0.0;
    for (std::size_t p = 0; p < u.cols(); ++p) {
      for (std::size_t r = 0; r < u.rows(); ++r) {
        for (std::size_t c = 0; c < u.rows(); ++c) s += std::conj(u(r, p)) * a[j](r, c) * u(c, p);
      }
    }
    out.push_back(s.real() / static_cast<double>(u.cols()));
  }
  return out;
}

KLCheck knill_laflamme(const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& u) {
  const Mat uu = to_eigen(u);
  const Mat p = uu * uu.adjoint();
  const double k = static_cast<double>(u.cols());
  const std::size_t r = kraus.size();
  KLCheck out{ComplexMatrix(r, r), 0.0};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Mat m = p * to_eigen(kraus[i]).adjoint() * to_eigen(kraus[j]) * p;
      const Complex g = m.trace() / k;
      out.gamma(i, j) = g;
      out.residual = std::max(out.residual, (m - g * p).norm());
    }
  }
  return out;
}

double sup_min_search(const ComplexMatrix& a, std::size_t k, std::size_t evaluations,
                      std::uint64_t seed) {
  const Mat am = to_eigen(a);
  const Eigen::Index n = am.rows();
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  auto gaussian = [&]() {
    Mat g(n, static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = {normal(gen), normal(gen)};
    return g;
  };
  const std::size_t uniform = std::max<std::size_t>(1, evaluations / 5);
  Mat best = gram_schmidt(gaussian());
  double best_value = min_eig(am, best);
  for (std::size_t e = 1; e < uniform; ++e) {
    Mat u = gram_schmidt(gaussian());
    const double v = min_eig(am, u);
    if (v > best_value) {
      best_value = v;
      best = u;
    }
  }
  double step = 0.3;
  for (std::size_t e = uniform; e < evaluations; ++e) {
    Mat u = gram_schmidt(best + step * gaussian());
    const double v = min_eig(am, u);
    if (v > best_value) {
      best_value = v;
      best = u;
      step *= 1.5;
    } else {
      step = std::max(step * 0.9, 1e-12);
    }
  }
  return best_value;
}

double inf_max_search(const ComplexMatrix& a, std::size_t k, std::size_t evaluations,
                      std::uint64_t seed) {
  ComplexMatrix neg = a;
  neg *= -1.0;
  return -sup_min_search(neg, k, evaluations, seed);
}

std::size_t gram_rank(const HermitianTuple& a, double tol) {
  const Eigen::Index m = static_cast<Eigen::Index>(a.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      g(i, j) = (to_eigen(a[i].matrix()).adjoint() * to_eigen(a[j].matrix())).trace().real();
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (es.eigenvalues()(i) > tol * tol * top) ++rank;
  }
  return rank;
}

double isometry_defect(const ComplexMatrix& u) {
  double total = 0.0;
  for (std::size_t p = 0; p < u.cols(); ++p) {
    for (std::size_t q = 0; q < u.cols(); ++q) {
      Complex s = 0.0;
      for (std::size_t r = 0; r < u.rows(); ++r) s += std::conj(u(r, p)) * u(r, q);
      if (p == q) s -= 1.0;
      total += std::norm(s);
    }
  }
  return std::sqrt(total);
}

}  // namespace rankrange::oracle
