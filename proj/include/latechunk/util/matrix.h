// Copyright 2026 The Latechunk Authors
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
#ifndef LATECHUNK_UTIL_MATRIX_H_
#define LATECHUNK_UTIL_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace latechunk {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> Row(size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> Row(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  // Appends a row; the first appended row fixes cols() when empty.
  void AppendRow(std::span<const double> row);

  bool AllFinite() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double Norm(std::span<const double> v);

// Cosine similarity; 0 when either side has zero norm.
double Cosine(std::span<const double> a, std::span<const double> b);

// In-place L2 normalization. Returns false when the vector is zero.
bool NormalizeInPlace(std::span<double> v);

// Arithmetic mean of rows [begin, end). Requires begin < end.
std::vector<double> MeanRows(const Matrix& m, size_t begin, size_t end);

// y = M x, M is rows x cols, x has cols entries.
std::vector<double> MatVec(const Matrix& m, std::span<const double> x);

bool AllFinite(std::span<const double> v);

}  // namespace latechunk

#endif  // LATECHUNK_UTIL_MATRIX_H_
