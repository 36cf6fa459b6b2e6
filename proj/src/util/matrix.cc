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
#include "latechunk/util/matrix.h"

#include <cassert>
#include <cmath>

namespace latechunk {

void Matrix::AppendRow(std::span<const double> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  assert(row.size() == cols_);
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

bool Matrix::AllFinite() const { return latechunk::AllFinite(data_); }

double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double Norm(std::span<const double> v) { return std::sqrt(Dot(v, v)); }

double Cosine(std::span<const double> a, std::span<const double> b) {
  const double na = Norm(a);
  const double nb = Norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return Dot(a, b) / (na * nb);
}

bool NormalizeInPlace(std::span<double> v) {
  const double n = Norm(v);
  if (n == 0.0 || !std::isfinite(n)) return false;
  for (double& x : v) x /= n;
  return true;
}

std::vector<double> MeanRows(const Matrix& m, size_t begin, size_t end) {
  assert(begin < end && end <= m.rows());
  std::vector<double> mean(m.cols(), 0.0);
  for (size_t r = begin; r < end; ++r) {
    std::span<const double> row = m.Row(r);
    for (size_t c = 0; c < mean.size(); ++c) mean[c] += row[c];
  }
  const double count = static_cast<double>(end - begin);
  for (double& x : mean) x /= count;
  return mean;
}

std::vector<double> MatVec(const Matrix& m, std::span<const double> x) {
  assert(x.size() == m.cols());
  std::vector<double> y(m.rows(), 0.0);
  for (size_t r = 0; r < m.rows(); ++r) y[r] = Dot(m.Row(r), x);
  return y;
}

bool AllFinite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace latechunk
