#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "evoalg/generators.hpp"
#include "evoalg/morphisms.hpp"

using namespace evoalg;

namespace {

std::vector<VertexId> all_of(const FiniteGraph& g) {
  std::vector<VertexId> v;
  for (VertexId i = 1; i <= g.vertex_count(); ++i) v.push_back(i);
  return v;
}

SparseVector from_pairs(std::initializer_list<std::pair<VertexId, double>> pairs) {
  SparseVector v;
  for (const auto& [i, c] : pairs) v.set(i, c);
  return v;
}

}  // namespace

TEST_CASE("regular witnesses") {
  MonomialMap w5 = build_regular_iso(Graph(make_cycle(5)));
  CHECK(w5.direction == MapDirection::AdjToRw);
  for (const auto& [i, e] : w5.entries) {
    CHECK(e.alpha == 2.0);
    CHECK(e.image == i);
  }

  MonomialMap wk2 = build_regular_iso(Graph(make_path(2)));
  CHECK(wk2.entries.at(1).alpha == 1.0);

  // regularity is what matters, singularity of C_4 does not block this side
  MonomialMap w4 = build_regular_iso(Graph(make_cycle(4)));
  CHECK(w4.entries.at(3).alpha == 2.0);

  CHECK_THROWS_AS(build_regular_iso(Graph(make_path(3))), std::invalid_argument);
}

TEST_CASE("biregular witnesses") {
  // P_3: leaves on side 1 (d1 = 1), the middle vertex on side 2 (d2 = 2)
  MonomialMap p3 = build_biregular_iso(Graph(make_path(3)));
  CHECK(p3.entries.at(1).alpha == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
  CHECK(p3.entries.at(3).alpha == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
  CHECK(p3.entries.at(2).alpha == doctest::Approx(std::cbrt(4.0)).epsilon(1e-12));

  MonomialMap k23 = build_biregular_iso(Graph(make_complete_bipartite(2, 3)));
  CHECK(k23.entries.at(1).alpha == doctest::Approx(std::cbrt(18.0)).epsilon(1e-12));
  CHECK(k23.entries.at(2).alpha == doctest::Approx(std::cbrt(18.0)).epsilon(1e-12));
  CHECK(k23.entries.at(4).alpha == doctest::Approx(std::cbrt(12.0)).epsilon(1e-12));

  CHECK_THROWS_AS(build_biregular_iso(Graph(make_cycle(5))), std::invalid_argument);
}

TEST_CASE("windowed witness on the periodic tree") {
  Graph t(make_spherically_symmetric_tree({2, 3}));
  MonomialMap w = build_biregular_iso(t, 3);
  // even levels carry 12^{1/3}, odd levels 18^{1/3}
  CHECK(w.entries.at(1).alpha == doctest::Approx(std::cbrt(12.0)).epsilon(1e-12));
  CHECK(w.entries.at(2).alpha == doctest::Approx(std::cbrt(18.0)).epsilon(1e-12));

  Window win = truncate(*t.as_lazy(), 3);
  std::vector<VertexId> interior;
  for (VertexId wi : win.interior_vertices()) {
    interior.push_back(win.original[static_cast<size_t>(wi)]);
  }
  const EvolutionAlgebra adj{t, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{t, AlgebraKind::RandomWalk};
  HomReport rep = check_homomorphism(w, adj, rw, interior, 1e-10);
  CHECK(rep.passed);
}

TEST_CASE("witness soundness in both directions over the corpus") {
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    if (!is_connected(g)) continue;
    Graph gh(g);
    std::optional<MonomialMap> w;
    if (check_regular(gh).holds()) {
      w = build_regular_iso(gh);
    } else if (check_biregular(gh).holds()) {
      w = build_biregular_iso(gh);
    }
    if (!w) continue;
    const EvolutionAlgebra adj{gh, AlgebraKind::Adjacency};
    const EvolutionAlgebra rw{gh, AlgebraKind::RandomWalk};
    HomReport fwd = check_homomorphism(*w, adj, rw, all_of(g), 1e-10);
    HomReport bwd = check_homomorphism(w->inverse(), rw, adj, all_of(g), 1e-10);
    CHECK(fwd.passed);
    CHECK(bwd.passed);
  }
}

TEST_CASE("check_homomorphism rejects the identity on P_3") {
  Graph p3(make_path(3));
  MonomialMap identity;
  identity.direction = MapDirection::AdjToRw;
  for (VertexId i = 1; i <= 3; ++i) identity.entries[i] = MonomialEntry{1.0, i};
  const EvolutionAlgebra adj{p3, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{p3, AlgebraKind::RandomWalk};
  HomReport rep = check_homomorphism(identity, adj, rw, {1, 2, 3}, 1e-10);
  CHECK_FALSE(rep.passed);
  // at i = 2: ||(e_1 + e_3) - (e_1 + e_3)/2|| = sqrt(2)/2
  CHECK(rep.max_square_residual == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  CHECK(rep.worst_vertex == 2);
}

TEST_CASE("apply_map") {
  MonomialMap two_id;
  two_id.direction = MapDirection::AdjToRw;
  two_id.entries[1] = MonomialEntry{2.0, 1};
  two_id.entries[2] = MonomialEntry{2.0, 2};
  CHECK(apply_map(two_id, from_pairs({{1, 1.0}, {2, -1.0}})) ==
        from_pairs({{1, 2.0}, {2, -2.0}}));

  SparseLinearMap swap;
  swap.columns[1] = from_pairs({{2, 3.0}});
  swap.columns[2] = from_pairs({{1, 3.0}});
  CHECK(apply_map(swap, basis(1)) == from_pairs({{2, 3.0}}));

  SparseLinearMap null_map;
  null_map.columns[1] = SparseVector{};
  null_map.columns[2] = SparseVector{};
  CHECK(apply_map(null_map, from_pairs({{1, 1.0}, {2, 5.0}})).empty());

  CHECK_THROWS_AS(apply_map(two_id, basis(7)), std::invalid_argument);
}

TEST_CASE("classify_monomial") {
  SparseLinearMap identity;
  for (VertexId i = 1; i <= 4; ++i) identity.columns[i] = from_pairs({{i, 1.0}});
  MonomialClassification c = classify_monomial(identity);
  CHECK(c.is_monomial);
  CHECK(c.disjoint);
  CHECK(c.covering);
  CHECK(c.monomial->image_bijective());

  SparseLinearMap overlapping;
  overlapping.columns[1] = from_pairs({{1, 1.0}, {2, 1.0}});
  overlapping.columns[2] = from_pairs({{2, 1.0}});
  MonomialClassification o = classify_monomial(overlapping);
  CHECK_FALSE(o.is_monomial);
  CHECK_FALSE(o.disjoint);
  REQUIRE(o.overlap.has_value());
  CHECK((*o.overlap)[2] == 2);  // row 2 hit twice
  CHECK(*o.wide_column == 1);

  SparseLinearMap swap_scaled;
  swap_scaled.columns[1] = from_pairs({{2, 3.0}});
  swap_scaled.columns[2] = from_pairs({{1, 5.0}});
  MonomialClassification s = classify_monomial(swap_scaled);
  CHECK(s.is_monomial);
  CHECK(s.monomial->entries.at(1).alpha == 3.0);
  CHECK(s.monomial->entries.at(1).image == 2);
  CHECK(s.monomial->entries.at(2).alpha == 5.0);
  CHECK(s.monomial->entries.at(2).image == 1);

  SparseLinearMap with_null;
  with_null.columns[1] = SparseVector{};
  with_null.columns[2] = from_pairs({{2, 1.0}});
  MonomialClassification n = classify_monomial(with_null);
  CHECK_FALSE(n.is_monomial);
  CHECK(n.null_columns == std::vector<VertexId>{1});
}

TEST_CASE("decide_isomorphism branches") {
  Verdict c5 = decide_isomorphism(make_cycle(5));
  CHECK(c5.status == Verdict::Status::Isomorphic);
  CHECK(c5.witness->entries.at(1).alpha == 2.0);
  CHECK(c5.witness_report->passed);
  CHECK(c5.inverse_report->passed);

  // regular branch wins although C_4 is singular
  Verdict c4 = decide_isomorphism(make_cycle(4));
  CHECK(c4.status == Verdict::Status::Isomorphic);
  CHECK(c4.witness->entries.at(1).alpha == 2.0);

  Verdict p4 = decide_isomorphism(make_path(4));
  CHECK(p4.status == Verdict::Status::NotIsomorphic);
  CHECK(*p4.rank == 4);
  CHECK(*p4.nonsingular);

  Verdict spider = decide_isomorphism(make_spider({1, 1, 2}));
  CHECK(spider.status == Verdict::Status::Undetermined);
  CHECK_FALSE(*spider.nonsingular);
  CHECK(spider.kernel_vector ==
        std::map<VertexId, std::int64_t>{{2, 1}, {3, -1}});
  CHECK_FALSE(spider.twin_homomorphism.has_value());  // quotient is a path
  REQUIRE(spider.twins.has_value());
  CHECK(spider.twins->class_count() == 4);
}

TEST_CASE("decide_isomorphism rejects bad inputs") {
  CHECK_THROWS_AS(decide_isomorphism(FiniteGraph::from_edges(4, {{1, 2}, {3, 4}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(decide_isomorphism(FiniteGraph::from_edges(1, {})), std::invalid_argument);
}

TEST_CASE("decision consistency: regular or biregular graphs are never NotIsomorphic") {
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    if (!is_connected(g)) continue;
    const bool structured =
        check_regular(Graph(g)).holds() || check_biregular(Graph(g)).holds();
    Verdict v = decide_isomorphism(g);
    if (structured) CHECK(v.status == Verdict::Status::Isomorphic);
    if (v.status == Verdict::Status::NotIsomorphic) CHECK_FALSE(structured);
  }
}

TEST_CASE("twin lift on C_4") {
  auto lift = twin_quotient_homomorphism(make_cycle(4));
  REQUIRE(lift.has_value());
  CHECK(lift->direction == MapDirection::RwToAdj);

  // constant on classes {1,3} and {2,4}, scaled class indicators
  CHECK(lift->columns.at(1) == lift->columns.at(3));
  CHECK(lift->columns.at(2) == lift->columns.at(4));
  CHECK(lift->columns.at(1) == from_pairs({{1, 0.5}, {3, 0.5}}));

  Graph gh(make_cycle(4));
  const EvolutionAlgebra adj{gh, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{gh, AlgebraKind::RandomWalk};
  HomReport rep = check_homomorphism(*lift, rw, adj, {1, 2, 3, 4}, 1e-10);

  // the square law holds exactly
  CHECK(rep.max_square_residual <= 1e-12);
  // zero products hold across classes but cannot hold on a twin pair: the
  // shared image squares to a nonzero vector, here of norm sqrt(2)/2
  CHECK(rep.max_pair_residual == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  const InnerProduct ip = InnerProduct::standard();
  CHECK(ip.norm(product(adj, lift->columns.at(1), lift->columns.at(2))) <= 1e-15);
}

TEST_CASE("twin lift on K_{2,3}") {
  FiniteGraph k23 = make_complete_bipartite(2, 3);
  auto lift = twin_quotient_homomorphism(k23);
  REQUIRE(lift.has_value());
  CHECK(lift->columns.at(1) == lift->columns.at(2));
  CHECK(lift->columns.at(3) == lift->columns.at(4));
  CHECK(lift->columns.at(3) == lift->columns.at(5));

  const double beta1 = std::cbrt(2.0 / 3.0) / 2.0;
  CHECK(lift->columns.at(1).coeff(1) == doctest::Approx(beta1).epsilon(1e-12));

  Graph gh(k23);
  const EvolutionAlgebra adj{gh, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{gh, AlgebraKind::RandomWalk};
  HomReport rep = check_homomorphism(*lift, rw, adj, all_of(k23), 1e-10);
  CHECK(rep.max_square_residual <= 1e-12);

  // columns span the scaled class indicators: the quotient witness image
  std::set<std::vector<VertexId>> supports;
  for (const auto& [i, col] : lift->columns) {
    std::vector<VertexId> sup;
    for (const auto& [k, c] : col.entries()) sup.push_back(k);
    supports.insert(sup);
  }
  CHECK(supports == std::set<std::vector<VertexId>>{{1, 2}, {3, 4, 5}});
}

TEST_CASE("twin lift on a star") {
  FiniteGraph star = make_star(3);
  auto lift = twin_quotient_homomorphism(star);
  REQUIRE(lift.has_value());
  CHECK(lift->columns.at(2) == lift->columns.at(4));
  CHECK(lift->columns.at(1).coeff(1) == doctest::Approx(std::cbrt(1.0 / 3.0)).epsilon(1e-12));

  Graph gh(star);
  HomReport rep = check_homomorphism(*lift, {gh, AlgebraKind::RandomWalk},
                                     {gh, AlgebraKind::Adjacency}, all_of(star), 1e-10);
  CHECK(rep.max_square_residual <= 1e-12);
}

TEST_CASE("twin lift on a twin-free regular graph is the inverse witness") {
  FiniteGraph c6 = make_cycle(6);
  auto lift = twin_quotient_homomorphism(c6);
  REQUIRE(lift.has_value());
  for (VertexId i = 1; i <= 6; ++i) {
    REQUIRE(lift->columns.at(i).support_size() == 1);
    // libm cbrt can be an ulp off even on exact cubes
    CHECK(lift->columns.at(i).coeff(i) == doctest::Approx(0.5).epsilon(1e-15));
  }
  Graph gh(c6);
  HomReport rep = check_homomorphism(*lift, {gh, AlgebraKind::RandomWalk},
                                     {gh, AlgebraKind::Adjacency}, all_of(c6), 1e-10);
  CHECK(rep.passed);  // injective, so the full check genuinely holds
}

TEST_CASE("twin lift absent for twin-free non-structured graphs") {
  CHECK_FALSE(twin_quotient_homomorphism(make_path(4)).has_value());
  CHECK_FALSE(twin_quotient_homomorphism(make_spider({1, 1, 2})).has_value());
  CHECK_THROWS_AS(twin_quotient_homomorphism(FiniteGraph::from_edges(4, {{1, 2}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("overlapping column breaks a valid witness") {
  FiniteGraph c5 = make_cycle(5);
  Graph gh(c5);
  SparseLinearMap damaged = to_sparse(build_regular_iso(gh));
  damaged.columns[1].set(2, 1.0);  // now hits e_2 as well: overlaps column 2

  MonomialClassification cls = classify_monomial(damaged);
  CHECK_FALSE(cls.disjoint);

  const EvolutionAlgebra adj{gh, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{gh, AlgebraKind::RandomWalk};
  HomReport rep = check_homomorphism(damaged, adj, rw, all_of(c5), 1e-10);
  CHECK_FALSE(rep.passed);
  CHECK(rep.max_residual >= 0.1);
}

TEST_CASE("induce_unitary") {
  // from the C_5 witness: e~_i = e_i / 2, f~(e~_i) = e_i
  MonomialMap w5 = build_regular_iso(Graph(make_cycle(5)));
  UnitaryWitness u5 = induce_unitary(w5, 100, 0);
  CHECK(u5.max_basis_residual <= 1e-12);
  CHECK(u5.max_polarization_residual <= 1e-9);

  MonomialMap p3 = build_biregular_iso(Graph(make_path(3)));
  UnitaryWitness up3 = induce_unitary(p3, 100, 0);
  CHECK(up3.max_basis_residual <= 1e-12);
  CHECK(up3.max_polarization_residual <= 1e-9);

  // identity witness: induced product is the standard one
  MonomialMap identity;
  identity.direction = MapDirection::AdjToRw;
  for (VertexId i = 1; i <= 4; ++i) identity.entries[i] = MonomialEntry{1.0, i};
  UnitaryWitness ui = induce_unitary(identity, 50, 0);
  CHECK(ui.max_basis_residual == 0.0);
  CHECK(ui.max_polarization_residual == 0.0);
}

TEST_CASE("induce_unitary validates its input") {
  MonomialMap zero_alpha;
  zero_alpha.entries[1] = MonomialEntry{0.0, 1};
  CHECK_THROWS_AS(induce_unitary(zero_alpha, 10, 0), std::invalid_argument);

  MonomialMap collapse;
  collapse.entries[1] = MonomialEntry{1.0, 1};
  collapse.entries[2] = MonomialEntry{1.0, 1};  // not injective
  CHECK_THROWS_AS(induce_unitary(collapse, 10, 0), std::invalid_argument);
}

TEST_CASE("monomial witnesses classify as monomial over the corpus") {
  for (const auto& [name, g] : corpus::finite_graphs()) {
    CAPTURE(name);
    if (!is_connected(g)) continue;
    Verdict v = decide_isomorphism(g);
    if (v.status != Verdict::Status::Isomorphic) continue;
    MonomialClassification c = classify_monomial(to_sparse(*v.witness));
    CHECK(c.is_monomial);
    CHECK(c.monomial->image_bijective());
    for (const auto& [i, e] : c.monomial->entries) {
      CHECK(std::fabs(e.alpha) <= 1e6);  // bounded coefficients
    }
  }
}
