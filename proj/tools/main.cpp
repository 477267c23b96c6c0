// evoalg: evolution algebras of graphs from the command line.
//
// Subcommands: analyze, iso, verify-hom, product, apply, twins, bounds,
// unitary. Exit codes: 0 success, 1 negative verdict or failed verification,
// 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "evoalg/bounds.hpp"
#include "evoalg/generators.hpp"
#include "evoalg/io.hpp"
#include "evoalg/morphisms.hpp"

using nlohmann::json;
using namespace evoalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EVOALG_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw std::invalid_argument("EVOALG_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::string timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::ostringstream os;
  os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Material that feeds the reproducibility digest: the graph spec (or file
// contents) plus any auxiliary file contents, flags, and the seed. The
// timestamp stays out of the digest.
struct Report {
  std::string command;
  std::string args_echo;
  std::string digest_material;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  json result = json::object();

  json to_json() const {
    json obj;
    obj["schema_version"] = 1;
    obj["command"] = command;
    obj["args"] = args_echo;
    obj["input_digest"] = digest_hex(digest_material);
    obj["seed"] = seed;
    obj["warnings"] = warnings;
    obj["result"] = result;
    obj["timestamp"] = timestamp_now();
    return obj;
  }
};

std::string slurp_or_echo(const std::string& path_or_spec) {
  if (looks_like_generator_spec(path_or_spec)) return path_or_spec;
  std::ifstream in(path_or_spec);
  if (!in) throw std::invalid_argument("cannot open file '" + path_or_spec + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
  out << content;
}

void emit(const Report& report, bool as_json, const std::string& text_summary) {
  if (as_json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    std::cout << text_summary;
    if (!report.warnings.empty()) {
      for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    }
  }
}

std::vector<VertexId> all_vertices(VertexId n) {
  std::vector<VertexId> v;
  for (VertexId i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

// Vertices on which both sides of a homomorphism check are exact: everything
// for finite graphs, window interiors otherwise (original ids for lazy
// handles so the oracle computes exactly).
std::vector<VertexId> checkable_vertices(const Graph& g, std::optional<VertexId> radius,
                                         std::vector<std::string>& warnings) {
  if (g.as_finite()) return all_vertices(*g.vertex_count());
  if (const Window* w = g.as_window()) {
    warnings.push_back("verdict is WithinRadius(" + std::to_string(w->radius) +
                       "), not global");
    return w->interior_vertices();
  }
  if (!radius) throw std::invalid_argument("lazy graph: --radius is required");
  Window w = truncate(*g.as_lazy(), *radius);
  warnings.push_back("verdict is WithinRadius(" + std::to_string(*radius) + "), not global");
  std::vector<VertexId> ids;
  for (VertexId wi : w.interior_vertices()) ids.push_back(w.original[static_cast<size_t>(wi)]);
  return ids;
}

json structural_to_json(const StructuralVerdict& v) {
  json obj;
  switch (v.status) {
    case StructuralVerdict::Status::Exact: obj["status"] = "exact"; break;
    case StructuralVerdict::Status::ConsistentUpToRadius:
      obj["status"] = "consistent_up_to_radius";
      obj["radius"] = v.radius;
      break;
    case StructuralVerdict::Status::Refuted:
      obj["status"] = "refuted";
      obj["refutation"] = v.refutation;
      if (v.witness_pair) {
        obj["witness_pair"] = json::array({v.witness_pair->first, v.witness_pair->second});
      }
      break;
  }
  if (v.regular_degree) obj["degree"] = *v.regular_degree;
  if (v.bipartition) {
    obj["d1"] = v.bipartition->d1;
    obj["d2"] = v.bipartition->d2;
  }
  return obj;
}

int cmd_analyze(const std::string& graph_arg, std::optional<VertexId> radius,
                VertexId rank_cap, bool as_json) {
  Report rep;
  rep.command = "analyze";
  rep.args_echo = graph_arg + (radius ? " --radius " + std::to_string(*radius) : "");
  rep.digest_material = slurp_or_echo(graph_arg) + "|" + rep.args_echo;

  Graph g = parse_graph(graph_arg);
  std::ostringstream text;
  text << "input: " << g.describe() << "\n";
  rep.result["graph"] = g.describe();

  if (g.is_lazy() && !radius) {
    throw std::invalid_argument("lazy graph: --radius is required for analyze");
  }

  Graph view = g.is_lazy() ? Graph(truncate(*g.as_lazy(), *radius)) : g;
  const VertexId n = *view.vertex_count();
  VertexId min_deg = view.degree(1), max_deg = view.degree(1);
  for (VertexId i = 2; i <= n; ++i) {
    min_deg = std::min(min_deg, view.degree(i));
    max_deg = std::max(max_deg, view.degree(i));
  }
  rep.result["vertices_examined"] = n;
  rep.result["min_degree"] = min_deg;
  rep.result["max_degree"] = max_deg;
  text << "examined vertices: " << n << ", degrees in [" << min_deg << ", " << max_deg
       << "]\n";

  StructuralVerdict reg = check_regular(view);
  rep.result["regular"] = structural_to_json(reg);
  text << "regular: " << rep.result["regular"]["status"].get<std::string>();
  if (reg.holds()) text << " (d=" << *reg.regular_degree << ")";
  text << "\n";

  const bool finite = view.as_finite() != nullptr;
  bool connected = true;
  if (finite) {
    connected = is_connected(*view.as_finite());
    rep.result["connected"] = connected;
    text << "connected: " << (connected ? "yes" : "no") << "\n";
  }

  if (!finite || connected) {
    StructuralVerdict big = check_biregular(view);
    rep.result["biregular"] = structural_to_json(big);
    text << "biregular: " << rep.result["biregular"]["status"].get<std::string>();
    if (big.holds()) text << " (d1=" << big.bipartition->d1 << ", d2=" << big.bipartition->d2 << ")";
    text << "\n";
  } else {
    rep.warnings.push_back("biregularity skipped: graph is disconnected");
  }

  if (finite) {
    const FiniteGraph& fg = *view.as_finite();
    TwinPartition p = twin_partition(fg);
    json classes = json::array();
    for (const auto& cls : p.classes) classes.push_back(cls);
    rep.result["twin_classes"] = classes;
    rep.result["twin_free"] = p.twin_free();
    text << "twin classes: " << p.class_count() << (p.twin_free() ? " (twin-free)" : "") << "\n";

    if (n <= rank_cap) {
      const std::int64_t rk = adjacency_rank(fg, RankOptions{rank_cap});
      rep.result["rank"] = rk;
      rep.result["nonsingular"] = rk == n;
      text << "adjacency rank: " << rk << " of " << n
           << (rk == n ? " (non-singular)" : " (singular)") << "\n";
      if (rk < n) {
        auto kv = adjacency_kernel_vector(fg, RankOptions{rank_cap});
        json kernel = json::object();
        for (const auto& [i, c] : kv) kernel[std::to_string(i)] = c;
        rep.result["kernel_vector"] = kernel;
      }
    } else {
      rep.warnings.push_back("rank skipped: graph above --rank-cap");
    }
  } else {
    rep.warnings.push_back("verdicts are WithinRadius(" +
                           std::to_string(view.as_window()->radius) + "), not global");
    rep.result["interior_vertices"] = view.as_window()->interior_vertices().size();
  }

  emit(rep, as_json, text.str());
  return kExitOk;
}

int cmd_iso(const std::string& graph_arg, std::optional<VertexId> radius, double tol,
            std::uint64_t seed, VertexId rank_cap, const std::string& witness_out,
            bool as_json) {
  Report rep;
  rep.command = "iso";
  rep.seed = seed;
  rep.args_echo = graph_arg;
  rep.digest_material = slurp_or_echo(graph_arg) + "|tol=" + std::to_string(tol) +
                        "|seed=" + std::to_string(seed);

  Graph g = parse_graph(graph_arg);
  std::ostringstream text;

  if (const FiniteGraph* fg = g.as_finite()) {
    DecideOptions opt;
    opt.rank.cap = rank_cap;
    opt.tol = tol;
    opt.seed = seed;
    Verdict v = decide_isomorphism(*fg, opt);
    rep.result = json::parse(verdict_to_json(v));
    text << "status: " << rep.result["status"].get<std::string>() << "\n";
    if (v.rank) text << "adjacency rank: " << *v.rank << "\n";
    if (v.witness) {
      text << "witness: alpha on " << v.witness->entries.size()
           << " vertices, max residual " << v.witness_report->max_residual << "\n";
      if (!witness_out.empty()) write_file(witness_out, morphism_to_json(*v.witness));
    }
    if (!v.kernel_vector.empty()) {
      text << "kernel vector entries: " << v.kernel_vector.size() << "\n";
    }
    emit(rep, as_json, text.str());
    return v.status == Verdict::Status::NotIsomorphic ? kExitNegative : kExitOk;
  }

  // infinite input: build and verify a witness inside a window, no global claim
  if (g.is_lazy() && !radius) {
    throw std::invalid_argument("lazy graph: --radius is required for iso");
  }
  StructuralVerdict reg = check_regular(g, radius);
  StructuralVerdict big =
      reg.holds() ? StructuralVerdict{} : check_biregular(g, radius);
  if (!reg.holds() && !big.holds()) {
    rep.result["status"] = "undetermined";
    rep.result["regular"] = structural_to_json(reg);
    rep.result["biregular"] = structural_to_json(big);
    rep.warnings.push_back("window refutes regularity and biregularity; no witness from this construction");
    emit(rep, as_json, "status: undetermined (window refutes both regular and biregular)\n");
    return kExitOk;
  }
  MonomialMap witness = reg.holds() ? build_regular_iso(g, radius) : build_biregular_iso(g, radius);
  std::vector<VertexId> vertices = checkable_vertices(g, radius, rep.warnings);
  const EvolutionAlgebra adj{g, AlgebraKind::Adjacency};
  const EvolutionAlgebra rw{g, AlgebraKind::RandomWalk};
  HomReport hom = check_homomorphism(witness, adj, rw, vertices, tol, seed);
  const VertexId window_radius = g.is_window() ? g.as_window()->radius : *radius;
  rep.result["status"] = "consistent_witness_within_radius";
  rep.result["radius"] = window_radius;
  rep.result["witness"] = json::parse(morphism_to_json(witness));
  rep.result["residuals"] = json::parse(hom_report_to_json(hom));
  if (!witness_out.empty()) write_file(witness_out, morphism_to_json(witness));
  std::ostringstream wtext;
  wtext << "status: consistent witness within radius " << window_radius << ", max residual "
        << hom.max_residual << " on " << vertices.size() << " interior vertices\n";
  emit(rep, as_json, wtext.str());
  return hom.passed ? kExitOk : kExitNegative;
}

int cmd_verify_hom(const std::string& graph_arg, const std::string& morphism_path,
                   const std::string& from_kind, const std::string& to_kind,
                   std::optional<VertexId> radius, double tol, std::uint64_t seed,
                   bool as_json) {
  Report rep;
  rep.command = "verify-hom";
  rep.seed = seed;
  rep.args_echo = graph_arg + " --from " + from_kind + " --to " + to_kind;
  rep.digest_material = slurp_or_echo(graph_arg) + "|" + slurp(morphism_path) + "|" +
                        rep.args_echo + "|tol=" + std::to_string(tol);

  Graph g = parse_graph(graph_arg);
  Morphism m = parse_morphism_file(morphism_path);
  const EvolutionAlgebra src{g, algebra_kind_from_string(from_kind)};
  const EvolutionAlgebra dst{g, algebra_kind_from_string(to_kind)};
  std::vector<VertexId> vertices = checkable_vertices(g, radius, rep.warnings);

  HomReport hom = std::holds_alternative<MonomialMap>(m)
                      ? check_homomorphism(std::get<MonomialMap>(m), src, dst, vertices, tol, seed)
                      : check_homomorphism(std::get<SparseLinearMap>(m), src, dst, vertices,
                                           tol, seed);
  rep.result = json::parse(hom_report_to_json(hom));
  std::ostringstream text;
  text << (hom.passed ? "PASS" : "FAIL") << ": max residual " << hom.max_residual << " (tol "
       << tol << ") over " << hom.vertices_checked << " vertices, " << hom.pairs_checked
       << " pairs\n";
  emit(rep, as_json, text.str());
  return hom.passed ? kExitOk : kExitNegative;
}

int cmd_product(const std::string& graph_arg, const std::string& kind,
                const std::string& lhs_path, const std::string& rhs_path,
                const std::string& out_path, bool as_json) {
  Report rep;
  rep.command = "product";
  rep.args_echo = graph_arg + " --algebra " + kind;
  rep.digest_material =
      slurp_or_echo(graph_arg) + "|" + slurp(lhs_path) + "|" + slurp(rhs_path) + "|" + kind;

  Graph g = parse_graph(graph_arg);
  const EvolutionAlgebra alg{g, algebra_kind_from_string(kind)};
  const SparseVector v = parse_vector_file(lhs_path);
  const SparseVector w = parse_vector_file(rhs_path);
  const SparseVector res = product(alg, v, w);
  rep.result["vector"] = json::parse(vector_to_json(res));
  if (!out_path.empty()) write_file(out_path, vector_to_json(res));
  emit(rep, as_json, vector_to_json(res) + "\n");
  return kExitOk;
}

int cmd_apply(const std::string& graph_arg, const std::string& op, const std::string& kind,
              const std::string& vec_path, const std::string& out_path, bool as_json) {
  Report rep;
  rep.command = "apply";
  rep.args_echo = graph_arg + " --operator " + op;
  rep.digest_material = slurp_or_echo(graph_arg) + "|" + slurp(vec_path) + "|" + op + "|" + kind;

  Graph g = parse_graph(graph_arg);
  const SparseVector v = parse_vector_file(vec_path);
  SparseVector res;
  if (op == "A") {
    res = apply_adjacency(g, v);
  } else if (op == "C") {
    res = apply_evolution(EvolutionAlgebra{g, algebra_kind_from_string(kind)}, v);
  } else if (op == "P") {
    res = apply_transition(g, v);
  } else {
    throw std::invalid_argument("--operator must be A, C or P");
  }
  rep.result["vector"] = json::parse(vector_to_json(res));
  if (!out_path.empty()) write_file(out_path, vector_to_json(res));
  emit(rep, as_json, vector_to_json(res) + "\n");
  return kExitOk;
}

int cmd_twins(const std::string& graph_arg, const std::string& quotient_out, bool as_json) {
  Report rep;
  rep.command = "twins";
  rep.args_echo = graph_arg;
  rep.digest_material = slurp_or_echo(graph_arg);

  Graph g = parse_graph(graph_arg);
  const FiniteGraph* fg = g.as_finite();
  if (!fg) {
    if (const Window* w = g.as_window()) {
      fg = &w->graph;
      rep.warnings.push_back("twin partition computed on the finite window only");
    } else {
      throw std::invalid_argument("twins requires a finite graph or a window (use '@r=')");
    }
  }
  TwinPartition p = twin_partition(*fg);
  FiniteGraph q = quotient_graph(*fg, p);
  rep.result["partition"] = json::parse(twin_partition_to_json(p));
  rep.result["quotient"] = {{"n", q.vertex_count()}, {"m", q.edge_count()}};
  if (!quotient_out.empty()) write_file(quotient_out, write_edge_list(q));

  std::ostringstream text;
  text << "twin classes: " << p.class_count() << (p.twin_free() ? " (twin-free)" : "") << "\n";
  for (const auto& cls : p.classes) {
    text << "  {";
    for (size_t k = 0; k < cls.size(); ++k) text << (k ? ", " : " ") << cls[k];
    text << " }\n";
  }
  text << "quotient: " << q.vertex_count() << " vertices, " << q.edge_count() << " edges\n";
  emit(rep, as_json, text.str());
  return kExitOk;
}

int cmd_bounds(const std::string& graph_arg, const std::string& kind,
               std::optional<VertexId> degree_bound, std::int64_t trials,
               std::optional<VertexId> radius, const std::string& alpha_path,
               const std::string& beta_path, std::uint64_t seed, bool as_json) {
  Report rep;
  rep.command = "bounds";
  rep.seed = seed;
  rep.args_echo = graph_arg + " --kind " + kind;
  rep.digest_material = slurp_or_echo(graph_arg) + "|" + kind + "|seed=" +
                        std::to_string(seed) + "|trials=" + std::to_string(trials);

  Graph g = parse_graph(graph_arg);
  const EvolutionAlgebra alg{g, algebra_kind_from_string(kind)};

  BoundednessReport k = k_condition(alg, radius);
  std::function<double(VertexId)> alpha, beta;
  if (!alpha_path.empty()) alpha = parse_weights_file(alpha_path);
  if (!beta_path.empty()) beta = parse_weights_file(beta_path);
  BoundednessReport schur = schur_test(alg, alpha, beta, radius);
  k.seed = seed;
  schur.seed = seed;

  rep.result["k_condition"] = json::parse(bounds_report_to_json(k));
  rep.result["schur_test"] = json::parse(bounds_report_to_json(schur));

  std::ostringstream text;
  text << "K-condition: K = " << k.k_value->str() << " (" << k.scope.str() << ")\n";
  text << "Schur test: (M1, M2) = (" << schur.m1_value << ", " << schur.m2_value
       << "), operator bound " << schur.operator_bound << "\n";

  bool all_ok = k.satisfied && schur.satisfied;
  if (degree_bound) {
    BoundednessReport db = degree_bound_norm_check(g, *degree_bound, trials, radius, seed);
    rep.result["degree_bound"] = json::parse(bounds_report_to_json(db));
    text << "degree-bound norm check: max ratio " << db.max_ratio << " vs M = "
         << *degree_bound << (db.satisfied ? " (satisfied)" : " (VIOLATED)") << "\n";
    all_ok = all_ok && db.satisfied;
  }
  if (!k.scope.exact) {
    rep.warnings.push_back("bounds are WithinRadius(" + std::to_string(k.scope.radius) +
                           "), not global");
  }
  emit(rep, as_json, text.str());
  return all_ok ? kExitOk : kExitNegative;
}

int cmd_unitary(const std::string& witness_path, std::int64_t trials, double tol,
                std::uint64_t seed, bool as_json) {
  Report rep;
  rep.command = "unitary";
  rep.seed = seed;
  rep.args_echo = "--witness " + witness_path;
  rep.digest_material = slurp(witness_path) + "|trials=" + std::to_string(trials) +
                        "|seed=" + std::to_string(seed);

  Morphism m = parse_morphism_file(witness_path);
  if (!std::holds_alternative<MonomialMap>(m)) {
    throw std::invalid_argument("unitary induction needs a monomial witness");
  }
  UnitaryWitness w = induce_unitary(std::get<MonomialMap>(m), trials, seed);
  const bool ok = w.max_basis_residual <= 1e-12 && w.max_polarization_residual <= tol;
  rep.result["max_basis_residual"] = w.max_basis_residual;
  rep.result["max_polarization_residual"] = w.max_polarization_residual;
  rep.result["pairs_checked"] = w.pairs_checked;
  rep.result["passed"] = ok;

  std::ostringstream text;
  text << (ok ? "PASS" : "FAIL") << ": basis residual " << w.max_basis_residual
       << ", polarization residual " << w.max_polarization_residual << " over "
       << w.pairs_checked << " random pairs\n";
  emit(rep, as_json, text.str());
  return ok ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolution algebras of finite and locally finite graphs"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  try {
    seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  std::string graph_arg, morphism_path, witness_out, from_kind = "adj", to_kind = "rw";
  std::string kind = "adj", lhs_path, rhs_path, vec_path, out_path, quotient_out;
  std::string op = "A", alpha_path, beta_path, witness_path;
  std::optional<VertexId> radius, degree_bound;
  VertexId rank_cap = 2000;
  double tol = 1e-9;
  double iso_tol = 1e-10;
  std::int64_t trials = 200;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub, bool with_graph = true) {
    if (with_graph) {
      sub->add_option("graph", graph_arg, "graph file or generator spec (e.g. cycle:5)")
          ->required();
    }
    sub->add_flag("--json", as_json, "emit a JSON report");
    sub->add_option("--seed", seed, "seed for randomized checks (default: EVOALG_SEED or 0)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "degrees, connectivity, structure, rank");
  add_common(analyze);
  analyze->add_option("--radius", radius, "ball radius for lazy graphs");
  analyze->add_option("--rank-cap", rank_cap, "largest n for exact rank");

  CLI::App* iso = app.add_subcommand("iso", "decide A_RW(G) vs A(G) and emit a witness");
  add_common(iso);
  iso->add_option("--radius", radius, "ball radius for lazy graphs");
  iso->add_option("--tol", iso_tol, "verification tolerance");
  iso->add_option("--rank-cap", rank_cap, "largest n for exact rank");
  iso->add_option("--witness-out", witness_out, "write the witness morphism to a file");

  CLI::App* verify = app.add_subcommand("verify-hom", "check a morphism file");
  add_common(verify);
  verify->add_option("--morphism", morphism_path, "morphism JSON file")->required();
  verify->add_option("--from", from_kind, "source algebra kind: adj|rw|dw");
  verify->add_option("--to", to_kind, "target algebra kind: adj|rw|dw");
  verify->add_option("--radius", radius, "ball radius for lazy graphs");
  verify->add_option("--tol", tol, "verification tolerance");

  CLI::App* prod = app.add_subcommand("product", "algebra product of two vector files");
  add_common(prod);
  prod->add_option("--algebra", kind, "algebra kind: adj|rw|dw");
  prod->add_option("--lhs", lhs_path, "left vector JSON file")->required();
  prod->add_option("--rhs", rhs_path, "right vector JSON file")->required();
  prod->add_option("--out", out_path, "write the result vector to a file");

  CLI::App* apply = app.add_subcommand("apply", "apply an operator to a vector file");
  add_common(apply);
  apply->add_option("--operator", op, "A (adjacency), C (evolution), P (transition)");
  apply->add_option("--algebra", kind, "algebra kind for C: adj|rw|dw");
  apply->add_option("--vec", vec_path, "vector JSON file")->required();
  apply->add_option("--out", out_path, "write the result vector to a file");

  CLI::App* twins = app.add_subcommand("twins", "twin partition and quotient graph");
  add_common(twins);
  twins->add_option("--quotient-out", quotient_out, "write the quotient as an edge list");

  CLI::App* bounds = app.add_subcommand("bounds", "K-condition, Schur test, norm check");
  add_common(bounds);
  bounds->add_option("--kind", kind, "algebra kind: adj|rw|dw");
  bounds->add_option("--M", degree_bound, "degree bound for the norm check");
  bounds->add_option("--trials", trials, "random vectors for the norm check");
  bounds->add_option("--radius", radius, "ball radius for lazy graphs");
  bounds->add_option("--schur-alpha", alpha_path, "JSON weights file (alpha)");
  bounds->add_option("--schur-beta", beta_path, "JSON weights file (beta)");

  CLI::App* unitary = app.add_subcommand("unitary", "induced inner product from a witness");
  add_common(unitary, /*with_graph=*/false);
  unitary->add_option("--witness", witness_path, "monomial witness JSON file")->required();
  unitary->add_option("--trials", trials, "random polarization pairs");
  unitary->add_option("--tol", tol, "polarization tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(graph_arg, radius, rank_cap, as_json);
    if (iso->parsed()) {
      return cmd_iso(graph_arg, radius, iso_tol, seed, rank_cap, witness_out, as_json);
    }
    if (verify->parsed()) {
      return cmd_verify_hom(graph_arg, morphism_path, from_kind, to_kind, radius, tol, seed,
                            as_json);
    }
    if (prod->parsed()) return cmd_product(graph_arg, kind, lhs_path, rhs_path, out_path, as_json);
    if (apply->parsed()) return cmd_apply(graph_arg, op, kind, vec_path, out_path, as_json);
    if (twins->parsed()) return cmd_twins(graph_arg, quotient_out, as_json);
    if (bounds->parsed()) {
      return cmd_bounds(graph_arg, kind, degree_bound, trials, radius, alpha_path, beta_path,
                        seed, as_json);
    }
    if (unitary->parsed()) return cmd_unitary(witness_path, trials, tol, seed, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
