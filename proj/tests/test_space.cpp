#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "evoalg/generators.hpp"
#include "evoalg/sparse_vector.hpp"

using namespace evoalg;

namespace {

SparseVector from_pairs(std::initializer_list<std::pair<VertexId, double>> pairs) {
  SparseVector v;
  for (const auto& [i, c] : pairs) v.set(i, c);
  return v;
}

SparseVector random_vec(std::mt19937_64& rng, VertexId max_vertex) {
  std::uniform_int_distribution<VertexId> idx(1, max_vertex);
  std::uniform_int_distribution<int> sz(1, 8);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  SparseVector v;
  const int n = sz(rng);
  for (int k = 0; k < n; ++k) v.set(idx(rng), coeff(rng));
  return v;
}

}  // namespace

TEST_CASE("basis vectors and orthonormality") {
  SparseVector e3 = basis(3);
  CHECK(e3.entries() == std::map<VertexId, double>{{3, 1.0}});
  const InnerProduct ip = InnerProduct::standard();
  CHECK(ip.inner(e3, e3) == 1.0);
  CHECK(ip.inner(e3, basis(5)) == 0.0);
  CHECK_THROWS_AS(basis(0), std::invalid_argument);
}

TEST_CASE("add and scale") {
  CHECK(add(from_pairs({{1, 1.0}}), from_pairs({{1, -1.0}})).empty());
  CHECK(scale(2.0, from_pairs({{1, 1.0}, {4, -0.5}})) ==
        from_pairs({{1, 2.0}, {4, -1.0}}));
  CHECK(add(from_pairs({{1, 1.0}}), from_pairs({{2, 1.0}})) ==
        from_pairs({{1, 1.0}, {2, 1.0}}));
}

TEST_CASE("standard inner product and norm") {
  SparseVector v = from_pairs({{1, 3.0}, {2, 4.0}});
  const InnerProduct ip = InnerProduct::standard();
  CHECK(ip.inner(v, v) == 25.0);
  CHECK(ip.norm(v) == 5.0);
}

TEST_CASE("degree-weighted inner product") {
  Graph t(make_factorial_tree());
  const InnerProduct dw = InnerProduct::degree_weighted(t);
  CHECK(dw.inner(basis(1), basis(1)) == 2.0);  // root degree

  // ||e_i||_d^2 = deg(i) exactly
  Graph k23(make_complete_bipartite(2, 3));
  const InnerProduct dk = InnerProduct::degree_weighted(k23);
  for (VertexId i = 1; i <= 5; ++i) {
    CHECK(dk.inner(basis(i), basis(i)) == static_cast<double>(k23.degree(i)));
  }

  FiniteGraph with_isolated = FiniteGraph::from_edges(3, {{1, 2}});
  const InnerProduct di = InnerProduct::degree_weighted(Graph(with_isolated));
  CHECK_THROWS_AS(di.inner(basis(3), basis(3)), std::invalid_argument);
}

TEST_CASE("alpha-induced inner product") {
  const InnerProduct f2 = InnerProduct::alpha_induced([](VertexId) { return 2.0; });
  CHECK(f2.inner(basis(1), basis(1)) == 4.0);
  // e~_1 = e_1 / 2 is a unit vector for <.,.>_f
  CHECK(f2.inner(scale(0.5, basis(1)), scale(0.5, basis(1))) == 1.0);

  const InnerProduct bad = InnerProduct::alpha_induced([](VertexId) { return 0.0; });
  CHECK_THROWS_AS(bad.inner(basis(1), basis(1)), std::invalid_argument);
}

TEST_CASE("rescaled basis is orthonormal for random alpha") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ad(0.2, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    double alphas[9];
    for (double& a : alphas) a = ad(rng);
    const InnerProduct f = InnerProduct::alpha_induced(
        [&alphas](VertexId i) { return alphas[i % 9]; });
    for (VertexId i = 1; i <= 8; ++i) {
      for (VertexId j = i; j <= 8; ++j) {
        const SparseVector ei = scale(1.0 / alphas[i % 9], basis(i));
        const SparseVector ej = scale(1.0 / alphas[j % 9], basis(j));
        const double want = i == j ? 1.0 : 0.0;
        CHECK(std::fabs(f.inner(ei, ej) - want) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Cauchy-Schwarz and triangle inequality on random vectors") {
  std::mt19937_64 rng(7);
  Graph k23(make_complete_bipartite(2, 3));
  const InnerProduct ips[] = {
      InnerProduct::standard(), InnerProduct::degree_weighted(k23),
      InnerProduct::alpha_induced([](VertexId i) { return 1.0 + 0.25 * static_cast<double>(i % 5); })};
  for (const InnerProduct& ip : ips) {
    for (int trial = 0; trial < 200; ++trial) {
      const SparseVector v = random_vec(rng, 5);
      const SparseVector w = random_vec(rng, 5);
      const double slack = 1e-9 * (1.0 + ip.norm(v) * ip.norm(w));
      CHECK(std::fabs(ip.inner(v, w)) <= ip.norm(v) * ip.norm(w) + slack);
      CHECK(ip.norm(add(v, w)) <= ip.norm(v) + ip.norm(w) + slack);
      // symmetry and bilinearity spot checks
      CHECK(ip.inner(v, w) == ip.inner(w, v));
      CHECK(std::fabs(ip.inner(scale(2.0, v), w) - 2.0 * ip.inner(v, w)) <= slack);
    }
  }
}

TEST_CASE("storage prunes exact zeros only") {
  SparseVector v;
  v.set(1, 1e-300);
  CHECK(v.support_size() == 1);  // tiny values are kept
  v.set(1, 0.0);
  CHECK(v.empty());
  v.accumulate(2, 0.5);
  v.accumulate(2, -0.5);
  CHECK(v.empty());
}
