#include <doctest.h>

#include <gmpxx.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "evoalg/algebra.hpp"
#include "evoalg/bounds.hpp"
#include "evoalg/generators.hpp"

using namespace evoalg;

namespace {

SparseVector from_pairs(std::initializer_list<std::pair<VertexId, double>> pairs) {
  SparseVector v;
  for (const auto& [i, c] : pairs) v.set(i, c);
  return v;
}

}  // namespace

TEST_CASE("square_basis per kind") {
  Graph c4(make_cycle(4));
  CHECK(square_basis({c4, AlgebraKind::Adjacency}, 1) == from_pairs({{2, 1.0}, {4, 1.0}}));
  CHECK(square_basis({c4, AlgebraKind::RandomWalk}, 1) == from_pairs({{2, 0.5}, {4, 0.5}}));

  Graph t(make_factorial_tree());
  SparseVector dw_root = square_basis({t, AlgebraKind::DegreeWeighted}, 1);
  REQUIRE(dw_root.support_size() == 2);
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);  // the root's children have degree 3
  CHECK(dw_root.coeff(2) == inv_sqrt3);
  CHECK(dw_root.coeff(3) == inv_sqrt3);
}

TEST_CASE("product expansions") {
  Graph c4(make_cycle(4));
  const EvolutionAlgebra adj{c4, AlgebraKind::Adjacency};
  // (e_1 + e_2)^2 = e_1^2 + e_2^2, cross terms vanish
  SparseVector v = from_pairs({{1, 1.0}, {2, 1.0}});
  CHECK(product(adj, v, v) == from_pairs({{1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}}));

  // disjoint supports annihilate exactly
  CHECK(product(adj, basis(1), basis(2)).empty());
  const EvolutionAlgebra rw5{Graph(make_cycle(5)), AlgebraKind::RandomWalk};
  CHECK(product(rw5, from_pairs({{1, 2.0}}), from_pairs({{1, 3.0}})) ==
        from_pairs({{2, 3.0}, {5, 3.0}}));
}

TEST_CASE("disjoint supports annihilate exactly") {
  std::mt19937_64 rng(31);
  for (const auto& [name, g] : corpus::finite_graphs()) {
    if (g.vertex_count() < 4) continue;
    CAPTURE(name);
    Graph gh(g);
    std::vector<VertexId> odd, even;
    for (VertexId i = 1; i <= g.vertex_count(); ++i) (i % 2 ? odd : even).push_back(i);
    for (AlgebraKind kind :
         {AlgebraKind::Adjacency, AlgebraKind::RandomWalk, AlgebraKind::DegreeWeighted}) {
      const EvolutionAlgebra alg{gh, kind};
      for (int trial = 0; trial < 10; ++trial) {
        const SparseVector v = random_sparse_vector(rng, odd);
        const SparseVector w = random_sparse_vector(rng, even);
        CHECK(product(alg, v, w).empty());
      }
    }
  }
}

TEST_CASE("product is commutative and bilinear") {
  std::mt19937_64 rng(99);
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    Graph gh(g);
    std::vector<VertexId> pool = vertex_pool(gh, std::nullopt);
    for (AlgebraKind kind :
         {AlgebraKind::Adjacency, AlgebraKind::RandomWalk, AlgebraKind::DegreeWeighted}) {
      const EvolutionAlgebra alg{gh, kind};
      const SparseVector v = random_sparse_vector(rng, pool);
      const SparseVector w = random_sparse_vector(rng, pool);
      const SparseVector u = random_sparse_vector(rng, pool);
      CHECK(product(alg, v, w) == product(alg, w, v));

      const SparseVector lhs = product(alg, add(scale(2.0, v), u), w);
      const SparseVector rhs = add(scale(2.0, product(alg, v, w)), product(alg, u, w));
      const SparseVector diff = add(lhs, scale(-1.0, rhs));
      CHECK(InnerProduct::standard().norm(diff) <= 1e-12);
    }
  }
}

TEST_CASE("apply_adjacency") {
  Graph c5(make_cycle(5));
  CHECK(apply_adjacency(c5, basis(1)) == from_pairs({{2, 1.0}, {5, 1.0}}));

  // kernel vector of C_4: N(1) = N(3) cancels exactly
  Graph c4(make_cycle(4));
  CHECK(apply_adjacency(c4, from_pairs({{1, 1.0}, {3, -1.0}})).empty());

  Graph t(make_spherically_symmetric_tree({2, 3}));
  CHECK(apply_adjacency(t, basis(1)) == from_pairs({{2, 1.0}, {3, 1.0}}));
}

TEST_CASE("apply_evolution matches apply_adjacency bit for bit") {
  std::mt19937_64 rng(4242);
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    Graph gh(g);
    const EvolutionAlgebra adj{gh, AlgebraKind::Adjacency};
    std::vector<VertexId> pool = vertex_pool(gh, std::nullopt);
    for (int trial = 0; trial < 25; ++trial) {
      const SparseVector v = random_sparse_vector(rng, pool);
      CHECK(apply_evolution(adj, v) == apply_adjacency(gh, v));
    }
  }
  // also through the oracle of an infinite graph
  Graph t(make_spherically_symmetric_tree({2, 3}));
  const EvolutionAlgebra adj_t{t, AlgebraKind::Adjacency};
  std::vector<VertexId> ball = t.as_lazy()->ball(4);
  for (int trial = 0; trial < 25; ++trial) {
    const SparseVector v = random_sparse_vector(rng, ball);
    CHECK(apply_evolution(adj_t, v) == apply_adjacency(t, v));
  }
}

TEST_CASE("apply_evolution examples") {
  Graph c5(make_cycle(5));
  const EvolutionAlgebra adj{c5, AlgebraKind::Adjacency};
  CHECK(apply_evolution(adj, basis(1)) == apply_adjacency(c5, basis(1)));

  Graph c4(make_cycle(4));
  const EvolutionAlgebra rw{c4, AlgebraKind::RandomWalk};
  CHECK(apply_evolution(rw, from_pairs({{1, 1.0}, {3, 1.0}})) ==
        from_pairs({{2, 1.0}, {4, 1.0}}));
  CHECK(apply_evolution(rw, SparseVector{}).empty());
}

TEST_CASE("apply_transition") {
  Graph c4(make_cycle(4));
  SparseVector step = apply_transition(c4, basis(1));
  CHECK(step == from_pairs({{2, 0.5}, {4, 0.5}}));
  CHECK(InnerProduct::standard().inner(step, step) == 0.5);  // 1/deg(1)

  Graph star(make_star(3));
  SparseVector leaves = apply_transition(star, basis(1));
  REQUIRE(leaves.support_size() == 3);
  for (VertexId leaf = 2; leaf <= 4; ++leaf) CHECK(leaves.coeff(leaf) == 1.0 / 3.0);

  Graph p3(make_path(3));
  CHECK(apply_transition(p3, from_pairs({{1, 0.5}, {3, 0.5}})) == from_pairs({{2, 1.0}}));

  FiniteGraph with_isolated = FiniteGraph::from_edges(3, {{1, 2}});
  CHECK_THROWS_AS(apply_transition(Graph(with_isolated), basis(3)), std::invalid_argument);
}

TEST_CASE("random-walk squares are stochastic") {
  // The structure constants a_{ki}/deg(i) are exact rationals summing to 1;
  // the stored doubles are their correctly rounded images. Verified at the
  // rational level, with a double-level sanity bound.
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    Graph gh(g);
    const EvolutionAlgebra rw{gh, AlgebraKind::RandomWalk};
    for (VertexId i = 1; i <= g.vertex_count(); ++i) {
      const SparseVector sq = square_basis(rw, i);
      const VertexId d = g.degree(i);
      REQUIRE(static_cast<VertexId>(sq.support_size()) == d);
      double sum = 0.0;
      for (const auto& [k, c] : sq.entries()) {
        CHECK(c == 1.0 / static_cast<double>(d));
        CHECK(c >= 0.0);
        sum += c;
      }
      CHECK(mpq_class(1, static_cast<long>(d)) * d == 1);
      CHECK(std::fabs(sum - 1.0) <= static_cast<double>(d) * 4e-16);
    }
  }
}

TEST_CASE("transition norm identity, exact rationals") {
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    for (VertexId i = 1; i <= g.vertex_count(); ++i) {
      const mpq_class inv(1, static_cast<long>(g.degree(i)));
      mpq_class norm_sq = inv * inv * g.degree(i);
      CHECK(norm_sq == inv);  // ||P delta_i||^2 = 1/deg(i)
    }
  }
}

TEST_CASE("degree-weighted norm identity and continuity on the factorial tree") {
  Graph t(make_factorial_tree());
  const EvolutionAlgebra dw{t, AlgebraKind::DegreeWeighted};
  const InnerProduct ip_d = InnerProduct::degree_weighted(t);
  const InnerProduct ip = InnerProduct::standard();

  Window w = truncate(*t.as_lazy(), 3);
  std::vector<VertexId> interior;
  for (VertexId wi : w.interior_vertices()) {
    interior.push_back(w.original[static_cast<size_t>(wi)]);
  }
  REQUIRE(interior.size() == 7);

  for (VertexId i : interior) {
    const SparseVector sq = square_basis(dw, i);
    const double lhs = ip_d.inner(sq, sq);
    CHECK(std::fabs(lhs - static_cast<double>(t.degree(i))) <= 1e-9);
    // ||e_i||_d^2 = deg(i) as well
    CHECK(ip_d.inner(basis(i), basis(i)) == static_cast<double>(t.degree(i)));
  }

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const SparseVector v = random_sparse_vector(rng, interior);
    const SparseVector u = random_sparse_vector(rng, interior);
    const double bound = ip.norm(v) * ip_d.norm(u);
    CHECK(ip_d.norm(product(dw, v, u)) <= bound * (1.0 + 1e-9) + 1e-12);
  }
}

TEST_CASE("algebra kind strings") {
  CHECK(algebra_kind_from_string("adj") == AlgebraKind::Adjacency);
  CHECK(algebra_kind_from_string("random_walk") == AlgebraKind::RandomWalk);
  CHECK(to_string(AlgebraKind::DegreeWeighted) == "degree_weighted");
  CHECK_THROWS_AS(algebra_kind_from_string("x"), std::invalid_argument);
}
