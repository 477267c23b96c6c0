#include "evoalg/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "evoalg/generators.hpp"

namespace evoalg {

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

VertexId parse_vertex_key(const std::string& key) {
  VertexId v = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
  if (ec != std::errc() || ptr != key.data() + key.size() || v < 1) {
    throw std::invalid_argument("bad vertex key '" + key + "' (expected a positive integer)");
  }
  return v;
}

json vector_to_json_obj(const SparseVector& v) {
  json obj = json::object();
  for (const auto& [i, c] : v.entries()) obj[std::to_string(i)] = c;
  return obj;
}

SparseVector vector_from_json_obj(const json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("vector file must be a JSON object");
  SparseVector v;
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_number()) throw std::invalid_argument("vector entries must be numbers");
    v.set(parse_vertex_key(key), value.get<double>());
  }
  return v;
}

}  // namespace

FiniteGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  VertexId declared = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string trimmed = line.substr(first);
    if (trimmed.rfind("n=", 0) == 0) {
      if (!edges.empty()) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": 'n=' header must precede the edges");
      }
      std::istringstream hs(trimmed.substr(2));
      if (!(hs >> declared) || declared < 1) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad 'n=' header");
      }
      continue;
    }
    std::istringstream ls(trimmed);
    VertexId a = 0, b = 0;
    if (!(ls >> a >> b)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected two vertex ids");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing content '" +
                                  extra + "'");
    }
    if (a < 1 || b < 1) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": ids must be >= 1");
    }
    if (a == b) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": loop detected at " +
                                  std::to_string(a));
    }
    edges.emplace_back(a, b);
  }
  if (edges.empty() && declared == 0) throw std::invalid_argument("empty edge list");
  return FiniteGraph::from_edges(declared, edges);
}

FiniteGraph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string write_edge_list(const FiniteGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << "\n";
  for (const auto& [a, b] : g.edges()) os << a << " " << b << "\n";
  return os.str();
}

Graph parse_graph(const std::string& path_or_spec) {
  if (looks_like_generator_spec(path_or_spec)) return generate(path_or_spec);
  return Graph(parse_edge_list_file(path_or_spec));
}

SparseVector parse_vector_json(const std::string& text) {
  return vector_from_json_obj(json::parse(text));
}

SparseVector parse_vector_file(const std::string& path) {
  try {
    return parse_vector_json(slurp(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string vector_to_json(const SparseVector& v) { return vector_to_json_obj(v).dump(); }

Morphism parse_morphism_json(const std::string& text) {
  const json obj = json::parse(text);
  if (!obj.is_object() || !obj.contains("kind")) {
    throw std::invalid_argument("morphism file must be a JSON object with a 'kind' field");
  }
  const std::string kind = obj.at("kind").get<std::string>();
  if (kind == "monomial") {
    MonomialMap m;
    if (obj.contains("direction")) {
      m.direction = map_direction_from_string(obj.at("direction").get<std::string>());
    }
    for (const auto& e : obj.at("entries")) {
      const VertexId i = e.at("i").get<VertexId>();
      const double alpha = e.at("alpha").get<double>();
      const VertexId pi = e.at("pi").get<VertexId>();
      if (i < 1 || pi < 1) throw std::invalid_argument("monomial entries need ids >= 1");
      if (alpha == 0.0) throw std::invalid_argument("monomial alpha must be nonzero");
      if (!m.entries.emplace(i, MonomialEntry{alpha, pi}).second) {
        throw std::invalid_argument("duplicate monomial entry for vertex " + std::to_string(i));
      }
    }
    return m;
  }
  if (kind == "sparse") {
    SparseLinearMap m;
    if (obj.contains("direction")) {
      m.direction = map_direction_from_string(obj.at("direction").get<std::string>());
    }
    for (const auto& [key, col] : obj.at("columns").items()) {
      m.columns[parse_vertex_key(key)] = vector_from_json_obj(col);
    }
    return m;
  }
  throw std::invalid_argument("unknown morphism kind '" + kind + "'");
}

Morphism parse_morphism_file(const std::string& path) {
  try {
    return parse_morphism_json(slurp(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string morphism_to_json(const MonomialMap& m) {
  json obj;
  obj["kind"] = "monomial";
  obj["direction"] = to_string(m.direction);
  json entries = json::array();
  for (const auto& [i, e] : m.entries) {
    entries.push_back(json{{"i", i}, {"alpha", e.alpha}, {"pi", e.image}});
  }
  obj["entries"] = std::move(entries);
  return obj.dump(2);
}

std::string morphism_to_json(const SparseLinearMap& m) {
  json obj;
  obj["kind"] = "sparse";
  if (m.direction) obj["direction"] = to_string(*m.direction);
  json cols = json::object();
  for (const auto& [i, col] : m.columns) cols[std::to_string(i)] = vector_to_json_obj(col);
  obj["columns"] = std::move(cols);
  return obj.dump(2);
}

std::function<double(VertexId)> parse_weights_file(const std::string& path) {
  const json obj = json::parse(slurp(path));
  if (!obj.is_object()) throw std::invalid_argument(path + ": weights must be a JSON object");
  auto table = std::make_shared<std::map<VertexId, double>>();
  for (const auto& [key, value] : obj.items()) {
    const double w = value.get<double>();
    if (!(w > 0.0)) throw std::invalid_argument(path + ": weights must be positive");
    (*table)[parse_vertex_key(key)] = w;
  }
  return [table, path](VertexId i) {
    auto it = table->find(i);
    if (it == table->end()) {
      throw std::invalid_argument(path + ": no weight for vertex " + std::to_string(i));
    }
    return it->second;
  };
}

namespace {

json hom_report_obj(const HomReport& r) {
  return json{{"max_residual", r.max_residual},
              {"max_square_residual", r.max_square_residual},
              {"max_pair_residual", r.max_pair_residual},
              {"worst_vertex", r.worst_vertex},
              {"worst_pair", json::array({r.worst_pair.first, r.worst_pair.second})},
              {"vertices_checked", r.vertices_checked},
              {"pairs_checked", r.pairs_checked},
              {"seed", r.seed},
              {"tol", r.tol},
              {"passed", r.passed}};
}

}  // namespace

std::string hom_report_to_json(const HomReport& r) { return hom_report_obj(r).dump(2); }

std::string twin_partition_to_json(const TwinPartition& p) {
  json obj;
  json classes = json::array();
  for (const auto& cls : p.classes) classes.push_back(cls);
  obj["classes"] = std::move(classes);
  json reps = json::array();
  for (VertexId c = 1; c <= p.class_count(); ++c) reps.push_back(p.representative(c));
  obj["representatives"] = std::move(reps);
  return obj.dump(2);
}

std::string verdict_to_json(const Verdict& v) {
  json obj;
  switch (v.status) {
    case Verdict::Status::Isomorphic: obj["status"] = "isomorphic"; break;
    case Verdict::Status::NotIsomorphic: obj["status"] = "not_isomorphic"; break;
    case Verdict::Status::Undetermined: obj["status"] = "undetermined"; break;
  }
  if (!v.reason.empty()) obj["reason"] = v.reason;
  if (v.rank) obj["rank"] = *v.rank;
  if (v.nonsingular) obj["nonsingular"] = *v.nonsingular;
  if (v.witness) obj["witness"] = json::parse(morphism_to_json(*v.witness));
  if (v.witness_inverse) {
    obj["witness_inverse"] = json::parse(morphism_to_json(*v.witness_inverse));
  }
  json residuals = json::object();
  if (v.witness_report) residuals["witness"] = hom_report_obj(*v.witness_report);
  if (v.inverse_report) residuals["witness_inverse"] = hom_report_obj(*v.inverse_report);
  if (!residuals.empty()) obj["residuals"] = std::move(residuals);
  if (!v.kernel_vector.empty()) {
    json kv = json::object();
    for (const auto& [i, c] : v.kernel_vector) kv[std::to_string(i)] = c;
    obj["kernel_vector"] = std::move(kv);
  }
  if (v.twins) {
    json classes = json::array();
    for (const auto& cls : v.twins->classes) classes.push_back(cls);
    obj["twin_classes"] = std::move(classes);
  }
  if (v.twin_homomorphism) {
    obj["twin_homomorphism"] = json::parse(morphism_to_json(*v.twin_homomorphism));
  }
  return obj.dump(2);
}

std::string bounds_report_to_json(const BoundednessReport& r) {
  json obj;
  switch (r.kind) {
    case BoundednessReport::Kind::KCondition: obj["kind"] = "k_condition"; break;
    case BoundednessReport::Kind::SchurTest: obj["kind"] = "schur_test"; break;
    case BoundednessReport::Kind::DegreeBound: obj["kind"] = "degree_bound"; break;
  }
  obj["scope"] = r.scope.str();
  obj["satisfied"] = r.satisfied;
  obj["seed"] = r.seed;
  if (r.k_value) {
    obj["value"] = r.k_value->approx();
    obj["value_exact"] = r.k_value->str();
    if (r.k_arg) obj["attained_at"] = *r.k_arg;
  }
  if (r.kind == BoundednessReport::Kind::SchurTest) {
    obj["value"] = json::array({r.m1_value, r.m2_value});
    if (r.m1 && r.m2) obj["value_exact"] = json::array({r.m1->str(), r.m2->str()});
    obj["operator_bound"] = r.operator_bound;
    obj["weights"] = r.weights_note;
  }
  if (r.kind == BoundednessReport::Kind::DegreeBound) {
    obj["value"] = r.degree_bound ? json(*r.degree_bound) : json();
    obj["max_ratio"] = r.max_ratio;
    obj["trials"] = r.trials;
  }
  if (!r.notes.empty()) obj["notes"] = r.notes;
  return obj.dump(2);
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_hex(const std::string& data) {
  std::ostringstream os;
  os << "fnv1a:" << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
  return os.str();
}

}  // namespace evoalg
