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
#include "latechunk/kg/gat.h"

#include <algorithm>
#include <cmath>

#include "fmt/format.h"
#include "json.hpp"
#include "latechunk/util/hash.h"
#include "latechunk/util/status.h"

namespace latechunk::kg {

using nlohmann::json;

std::string_view ActivationName(Activation a) {
  switch (a) {
    case Activation::kElu: return "elu";
    case Activation::kRelu: return "relu";
    case Activation::kIdentity: return "identity";
  }
  return "elu";
}

absl::StatusOr<Activation> ParseActivation(std::string_view name) {
  if (name == "elu") return Activation::kElu;
  if (name == "relu") return Activation::kRelu;
  if (name == "identity") return Activation::kIdentity;
  return MakeError(ErrorKind::kInvalidConfig,
                   fmt::format("unknown activation '{}'", name));
}

double Activate(Activation a, double x) {
  switch (a) {
    case Activation::kElu: return x > 0 ? x : std::expm1(x);
    case Activation::kRelu: return x > 0 ? x : 0.0;
    case Activation::kIdentity: return x;
  }
  return x;
}

absl::Status GatParams::Validate() const {
  if (a.size() != 2 * d_prime()) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("a has {} entries, expected {}", a.size(),
                                 2 * d_prime()));
  }
  if (mlp_w.cols() != d_prime() || mlp_b.size() != mlp_w.rows()) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("mlp is {}x{} with bias {}, expected dx{}",
                                 mlp_w.rows(), mlp_w.cols(), mlp_b.size(),
                                 d_prime()));
  }
  if (!(lambda >= 0) || !std::isfinite(lambda)) {
    return MakeError(ErrorKind::kInvalidConfig, "lambda must be finite and >= 0");
  }
  if (!w.AllFinite() || !mlp_w.AllFinite() || !AllFinite(a) || !AllFinite(mlp_b) ||
      !std::isfinite(leaky_slope)) {
    return MakeError(ErrorKind::kInvalidConfig, "non-finite parameter");
  }
  return absl::OkStatus();
}

GatParams DefaultGatParams(size_t d_k, size_t d_prime, size_t d, uint64_t seed,
                           double lambda) {
  GatParams p;
  p.w = Matrix(d_prime, d_k);
  for (size_t i = 0; i < std::min(d_prime, d_k); ++i) p.w(i, i) = 1.0;
  p.a.assign(2 * d_prime, 0.0);
  p.lambda = lambda;
  p.mlp_w = Matrix(d, d_prime);
  uint64_t state = seed ^ 0x6d6c70ULL;
  const double scale = 1.0 / std::sqrt(static_cast<double>(std::max<size_t>(d_prime, 1)));
  for (double& x : p.mlp_w.data()) x = scale * UniformSigned(state);
  p.mlp_b.assign(d, 0.0);
  return p;
}

namespace {

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.Row(r).begin(), m.Row(r).end()));
  }
  return rows;
}

Matrix MatrixFromJson(const json& j, size_t cols) {
  Matrix m(0, cols);
  for (const json& row : j) m.AppendRow(row.get<std::vector<double>>());
  return m;
}

}  // namespace

absl::StatusOr<GatParams> ParseGatParams(std::string_view json_text) {
  GatParams p;
  try {
    const json j = json::parse(json_text);
    const size_t d_k = j.at("d_k").get<size_t>();
    const size_t d_prime = j.at("d_prime").get<size_t>();
    const size_t d = j.at("d").get<size_t>();
    p.w = MatrixFromJson(j.at("W"), d_k);
    p.a = j.at("a").get<std::vector<double>>();
    p.leaky_slope = j.value("leaky_slope", 0.2);
    LC_ASSIGN_OR_RETURN(p.activation,
                        ParseActivation(j.value("activation", std::string("elu"))));
    p.lambda = j.value("lambda", 0.1);
    p.mlp_w = MatrixFromJson(j.at("mlp").at("weight"), d_prime);
    p.mlp_b = j.at("mlp").at("bias").get<std::vector<double>>();
    if (p.w.rows() != d_prime || p.w.cols() != d_k || p.mlp_w.rows() != d ||
        p.mlp_w.cols() != d_prime) {
      return MakeError(ErrorKind::kInvalidConfig,
                       "parameter shapes disagree with d_k/d_prime/d");
    }
    for (size_t r = 0; r < p.w.rows(); ++r) {
      if (j.at("W")[r].size() != d_k) {
        return MakeError(ErrorKind::kInvalidConfig, "ragged W");
      }
    }
    for (size_t r = 0; r < p.mlp_w.rows(); ++r) {
      if (j.at("mlp").at("weight")[r].size() != d_prime) {
        return MakeError(ErrorKind::kInvalidConfig, "ragged mlp weight");
      }
    }
  } catch (const json::exception& e) {
    return MakeError(ErrorKind::kInvalidConfig,
                     fmt::format("GAT parameters: {}", e.what()));
  }
  LC_RETURN_IF_ERROR(p.Validate());
  return p;
}

std::string FormatGatParams(const GatParams& p) {
  json j;
  j["schema_version"] = 1;
  j["d_k"] = p.d_k();
  j["d_prime"] = p.d_prime();
  j["d"] = p.d();
  j["W"] = MatrixToJson(p.w);
  j["a"] = p.a;
  j["leaky_slope"] = p.leaky_slope;
  j["activation"] = ActivationName(p.activation);
  j["lambda"] = p.lambda;
  j["mlp"] = {{"weight", MatrixToJson(p.mlp_w)}, {"bias", p.mlp_b}};
  return j.dump(1);
}

absl::StatusOr<GatOutput> GatForward(const Matrix& u,
                                     const std::vector<std::vector<size_t>>& hood,
                                     const GatParams& params) {
  if (u.rows() > 0 && u.cols() != params.d_k()) {
    return MakeError(ErrorKind::kDimMismatch,
                     fmt::format("concept dim {} != W columns {}", u.cols(),
                                 params.d_k()));
  }
  if (params.a.size() != 2 * params.d_prime()) {
    return MakeError(ErrorKind::kDimMismatch, "attention vector length != 2 d'");
  }
  const size_t n = u.rows();
  const size_t dp = params.d_prime();
  Matrix z(n, dp);
  for (size_t j = 0; j < n; ++j) {
    std::vector<double> wz = MatVec(params.w, u.Row(j));
    std::copy(wz.begin(), wz.end(), z.Row(j).begin());
  }
  std::span<const double> a_self(params.a.data(), dp);
  std::span<const double> a_other(params.a.data() + dp, dp);
  std::vector<double> left(n), right(n);
  for (size_t j = 0; j < n; ++j) {
    left[j] = Dot(a_self, z.Row(j));
    right[j] = Dot(a_other, z.Row(j));
  }

  GatOutput out;
  out.rows = Matrix(n, dp);
  out.neighborhoods = hood;
  out.attention.resize(n);
  for (size_t j = 0; j < n; ++j) {
    const std::vector<size_t>& nb = hood[j];
    std::vector<double>& alpha = out.attention[j];
    alpha.resize(nb.size());
    double peak = -INFINITY;
    for (size_t m = 0; m < nb.size(); ++m) {
      const double e = left[j] + right[nb[m]];
      alpha[m] = e > 0 ? e : params.leaky_slope * e;
      peak = std::max(peak, alpha[m]);
    }
    double total = 0;
    for (double& x : alpha) {
      x = std::exp(x - peak);
      total += x;
    }
    for (double& x : alpha) x /= total;
    std::span<double> row = out.rows.Row(j);
    for (size_t m = 0; m < nb.size(); ++m) {
      std::span<const double> zk = z.Row(nb[m]);
      for (size_t c = 0; c < dp; ++c) row[c] += alpha[m] * zk[c];
    }
    for (double& x : row) x = Activate(params.activation, x);
  }
  return out;
}

absl::StatusOr<GatOutput> GatForward(const KnowledgeSubgraph& sub,
                                     const ConceptGraph& graph,
                                     const GatParams& params) {
  Matrix u(0, graph.dim());
  for (const std::string& cui : sub.nodes) {
    const Concept* c = graph.Find(cui);
    if (c == nullptr) {
      return MakeError(ErrorKind::kInvalidConfig,
                       fmt::format("subgraph node {} not in concept graph", cui));
    }
    u.AppendRow(c->embedding);
  }
  LC_ASSIGN_OR_RETURN(GatOutput out, GatForward(u, Neighborhoods(sub), params));
  for (size_t j = 0; j < sub.size(); ++j) {
    out.enriched.emplace(sub.nodes[j],
                         std::vector<double>(out.rows.Row(j).begin(),
                                             out.rows.Row(j).end()));
  }
  return out;
}

std::vector<double> ApplyMlp(const GatParams& params, std::span<const double> x) {
  std::vector<double> y = MatVec(params.mlp_w, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += params.mlp_b[i];
  return y;
}

}  // namespace latechunk::kg
