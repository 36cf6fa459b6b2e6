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
#ifndef LATECHUNK_KG_GAT_H_
#define LATECHUNK_KG_GAT_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "latechunk/kg/concept_graph.h"
#include "latechunk/kg/subgraph.h"
#include "latechunk/util/matrix.h"

namespace latechunk::kg {

enum class Activation { kElu, kRelu, kIdentity };

std::string_view ActivationName(Activation a);
absl::StatusOr<Activation> ParseActivation(std::string_view name);
double Activate(Activation a, double x);

// Single-head graph attention layer followed by the projection and gate used
// to add concept signal to token vectors.
struct GatParams {
  Matrix w;                // d' x d_k
  std::vector<double> a;   // 2 d'
  double leaky_slope = 0.2;
  Activation activation = Activation::kElu;
  double lambda = 0.1;
  Matrix mlp_w;            // d x d'
  std::vector<double> mlp_b;  // d

  size_t d_k() const { return w.cols(); }
  size_t d_prime() const { return w.rows(); }
  size_t d() const { return mlp_w.rows(); }

  absl::Status Validate() const;
};

// W = truncated identity, a = 0, seeded random MLP with zero bias.
GatParams DefaultGatParams(size_t d_k, size_t d_prime, size_t d,
                           uint64_t seed = 0, double lambda = 0.1);

absl::StatusOr<GatParams> ParseGatParams(std::string_view json_text);
std::string FormatGatParams(const GatParams& params);

struct GatOutput {
  // u'_j per node, in node order.
  Matrix rows;
  // The same rows keyed by CUI; empty for the explicit-matrix overload.
  std::map<std::string, std::vector<double>, std::less<>> enriched;
  std::vector<std::vector<size_t>> neighborhoods;
  // attention[j][m] is the weight of neighborhoods[j][m] for node j.
  std::vector<std::vector<double>> attention;
};

// Embeddings come from the concept graph. DimMismatch when they disagree
// with params.
absl::StatusOr<GatOutput> GatForward(const KnowledgeSubgraph& sub,
                                     const ConceptGraph& graph,
                                     const GatParams& params);

// Same layer over explicit node embeddings (rows of u) and neighborhoods.
absl::StatusOr<GatOutput> GatForward(const Matrix& u,
                                     const std::vector<std::vector<size_t>>& hood,
                                     const GatParams& params);

// mlp_w x + mlp_b.
std::vector<double> ApplyMlp(const GatParams& params, std::span<const double> x);

}  // namespace latechunk::kg

#endif  // LATECHUNK_KG_GAT_H_
