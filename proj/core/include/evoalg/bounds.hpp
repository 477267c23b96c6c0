#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "evoalg/algebra.hpp"

namespace evoalg {

// Small exact fraction for certificate values (K-condition sums, Schur
// bounds). Computed with exact rational arithmetic internally; the values
// that reach this struct are tiny (degrees and their reciprocals).
struct ExactValue {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const ExactValue& o) const { return num == o.num && den == o.den; }
  std::string str() const;
};

struct BoundScope {
  bool exact = true;       // whole graph (finite view)
  VertexId radius = -1;    // examined ball for lazy graphs
  std::string str() const;
};

struct BoundednessReport {
  enum class Kind { KCondition, SchurTest, DegreeBound };

  Kind kind = Kind::KCondition;
  BoundScope scope;
  bool satisfied = false;

  // KCondition: K = max over examined i of sum_k c_{ki}^2
  std::optional<ExactValue> k_value;
  std::optional<VertexId> k_arg;  // attaining vertex

  // SchurTest: smallest valid (M1, M2) for the given weights and the
  // implied operator bound (M1 M2)^{1/2}. Exact values present when the
  // sums are rational (unit weights, Adjacency or RandomWalk kind).
  std::optional<ExactValue> m1, m2;
  double m1_value = 0.0;
  double m2_value = 0.0;
  double operator_bound = 0.0;
  std::string weights_note;

  // DegreeBound: observed max of ||A v|| / ||v||
  std::optional<VertexId> degree_bound;
  double max_ratio = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<VertexId> violating_vertex;  // degree above the claimed bound

  std::string notes;
};

// K = sup_i sum_k c_{ki}^2 over the examined scope, exact rationals.
// Lazy graphs require a radius and report WithinRadius scope.
BoundednessReport k_condition(const EvolutionAlgebra& alg,
                              std::optional<VertexId> radius = std::nullopt);

// Row/column sum test with positive weights (defaults: constant 1):
//   sum_k |c_{ki}| alpha_k <= M1 beta_i   for examined i
//   sum_i |c_{ki}| beta_i  <= M2 alpha_k  for examined k
// Returns the smallest valid (M1, M2) over the scope and the implied bound
// ||C|| <= (M1 M2)^{1/2}. Weighted sums are exact when the weights are the
// constant-1 sequences; otherwise computed in doubles.
BoundednessReport schur_test(const EvolutionAlgebra& alg,
                             std::function<double(VertexId)> alpha = {},
                             std::function<double(VertexId)> beta = {},
                             std::optional<VertexId> radius = std::nullopt);

// Property check of ||A v|| <= M ||v|| on seeded random finitely supported
// vectors drawn from the examined window. Reports the max observed ratio.
// Fails fast if some examined vertex has degree above M.
BoundednessReport degree_bound_norm_check(const Graph& g, VertexId degree_bound,
                                          std::int64_t trials,
                                          std::optional<VertexId> radius = std::nullopt,
                                          std::uint64_t seed = 0);

// Lower estimate of the left-multiplication norm M_v: max over canonical
// basis directions of supp(v) and seeded random unit vectors supported on
// supp(v) and its neighborhood of ||v.w|| / ||w||.
double left_mult_norm_estimate(const EvolutionAlgebra& alg, const SparseVector& v,
                               std::int64_t trials, std::uint64_t seed = 0);

// Random finitely supported vector: support of size <= max_support drawn
// from the pool, coefficients uniform in [-1, 1].
SparseVector random_sparse_vector(std::mt19937_64& rng, const std::vector<VertexId>& pool,
                                  int max_support = 16);

// Vertex pool an operation may draw from: all vertices of a finite view,
// or B(root, radius) for a lazy graph (radius required).
std::vector<VertexId> vertex_pool(const Graph& g, std::optional<VertexId> radius);

}  // namespace evoalg
