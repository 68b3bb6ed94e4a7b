// Copyright 2026 The dwdecomp Authors
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

#include "dwd/dense_matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "dwd/errors.hpp"

namespace dwd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "dimension mismatch";
    case ErrorKind::kNonFinite: return "non-finite value";
    case ErrorKind::kNegativeInput: return "negative input";
    case ErrorKind::kInfeasibleStart: return "infeasible start";
    case ErrorKind::kInvalidBeta: return "invalid beta";
    case ErrorKind::kUnbounded: return "unbounded";
    case ErrorKind::kInfeasible: return "infeasible";
    case ErrorKind::kMaxIterationsExceeded: return "maximum iterations exceeded";
    case ErrorKind::kInternal: return "internal error";
  }
  return "unknown";
}

namespace {

void check_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw SolverError(ErrorKind::kNonFinite, "matrix entry is not finite");
    }
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  check_finite(entries_);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw SolverError(ErrorKind::kDimensionMismatch,
                      "matrix has " + std::to_string(entries_.size()) +
                          " entries, expected " + std::to_string(rows * cols));
  }
  check_finite(entries_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw SolverError(ErrorKind::kDimensionMismatch, "ragged matrix rows");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  check_finite(entries_);
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> DenseMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw SolverError(ErrorKind::kDimensionMismatch, "matrix-vector size");
  }
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

std::vector<double> DenseMatrix::left_multiply(std::span<const double> x) const {
  if (x.size() != rows_) {
    throw SolverError(ErrorKind::kDimensionMismatch, "vector-matrix size");
  }
  std::vector<double> y(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0.0) continue;
    const auto src = row(r);
    for (std::size_t c = 0; c < cols_; ++c) y[c] += x[r] * src[c];
  }
  return y;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw SolverError(ErrorKind::kDimensionMismatch, "matrix-matrix size");
  }
  DenseMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const double a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "dot product size");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseMatrix invert(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw SolverError(ErrorKind::kDimensionMismatch, "inverse of non-square matrix");
  }
  const std::size_t n = m.rows();
  DenseMatrix work = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(best, col))) best = r;
    }
    if (std::abs(work(best, col)) < 1e-12) {
      throw SolverError(ErrorKind::kInternal, "singular basis matrix");
    }
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(best, c), work(col, c));
        std::swap(inv(best, c), inv(col, c));
      }
    }
    const double p = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

}  // namespace dwd
