#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "evoalg/graph.hpp"

namespace evoalg {

// Finitely supported real vector keyed by vertex id. Exact zeros are never
// stored; computed near-zeros are kept so that storage does not alter
// values.
class SparseVector {
 public:
  SparseVector() = default;

  double coeff(VertexId i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? 0.0 : it->second;
  }
  void set(VertexId i, double c) {
    if (c == 0.0) {
      entries_.erase(i);
    } else {
      entries_[i] = c;
    }
  }
  void accumulate(VertexId i, double c) { set(i, coeff(i) + c); }

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<VertexId, double>& entries() const { return entries_; }

  bool operator==(const SparseVector& other) const { return entries_ == other.entries_; }

 private:
  std::map<VertexId, double> entries_;  // sorted: deterministic iteration
};

SparseVector basis(VertexId i);
SparseVector add(const SparseVector& v, const SparseVector& w);
SparseVector scale(double c, const SparseVector& v);

// Standard, degree-weighted <v,w>_d = sum v_i w_i deg(i), or the inner
// product induced by a nonvanishing weight sequence: <v,w> = sum v_i w_i a_i^2.
class InnerProduct {
 public:
  static InnerProduct standard();
  static InnerProduct degree_weighted(Graph g);
  static InnerProduct alpha_induced(std::function<double(VertexId)> alpha);

  double inner(const SparseVector& v, const SparseVector& w) const;
  double norm(const SparseVector& v) const { return std::sqrt(inner(v, v)); }

 private:
  enum class Kind { Standard, DegreeWeighted, AlphaInduced };
  InnerProduct(Kind k) : kind_(k) {}

  Kind kind_;
  std::optional<Graph> graph_;
  std::function<double(VertexId)> alpha_;
};

}  // namespace evoalg
