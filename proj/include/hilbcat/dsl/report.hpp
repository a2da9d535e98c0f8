#ifndef HILBCAT_DSL_REPORT_HPP
#define HILBCAT_DSL_REPORT_HPP

#include <hilbcat/dsl/errors.hpp>
#include <hilbcat/subobject.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hilbcat::dsl {

/// Named matrices and flags describing one instance (a failing input or a
/// counterexample).
struct Witness {
  std::map<std::string, Matrix> matrices;
  std::map<std::string, bool> flags;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SuiteResult {
  std::string name;
  std::string kind = "theorem";  // or "counterexample"
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Witness> failures;
  std::optional<Witness> witness;
  /// Not serialized, so exported reports are reproducible byte for byte.
  std::chrono::duration<double> elapsed{0};

  bool ok() const { return failed == 0; }

  friend bool operator==(const SuiteResult& a, const SuiteResult& b) {
    return a.name == b.name && a.kind == b.kind && a.seed == b.seed && a.instances == b.instances &&
           a.passed == b.passed && a.failed == b.failed && a.failures == b.failures && a.witness == b.witness;
  }
};

struct LatticeNode {
  std::string label;
  Subobject sub;

  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

/// A finite sublattice of ClSub(object); edges are covering pairs
/// (lower, upper) by node index.
struct LatticeExport {
  std::string object;
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  friend bool operator==(const LatticeExport&, const LatticeExport&) = default;
};

struct Report {
  std::vector<SuiteResult> suites;
  std::optional<LatticeExport> lattice;

  bool ok() const {
    for (const auto& s : suites) {
      if (!s.ok()) return false;
    }
    return true;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ExportFormat { json, dot };

namespace detail {

using nlohmann::json;

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"shape", {m.rows(), m.cols()}}, {"rows", std::move(rows)}};
}

inline Matrix matrix_from_json(const json& j) {
  std::size_t rows = j.at("shape").at(0).get<std::size_t>();
  std::size_t cols = j.at("shape").at(1).get<std::size_t>();
  const json& data = j.at("rows");
  if (data.size() != rows) throw input_error("matrix rows do not match its shape");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (data.at(r).size() != cols) throw input_error("matrix row does not match its shape");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::parse(data.at(r).at(c).get<std::string>());
  }
  return m;
}

inline json witness_to_json(const Witness& w) {
  json mats = json::object();
  for (const auto& [k, m] : w.matrices) mats[k] = matrix_to_json(m);
  json flags = json::object();
  for (const auto& [k, v] : w.flags) flags[k] = v;
  return json{{"matrices", std::move(mats)}, {"flags", std::move(flags)}};
}

inline Witness witness_from_json(const json& j) {
  Witness w;
  for (const auto& [k, v] : j.at("matrices").items()) w.matrices.emplace(k, matrix_from_json(v));
  for (const auto& [k, v] : j.at("flags").items()) w.flags.emplace(k, v.get<bool>());
  return w;
}

inline std::string rank_label(const LatticeNode& n) {
  return n.label + " (rank " + std::to_string(n.sub.rank()) + ")";
}

}  // namespace detail

/// json: compact, keys sorted, scalars in `a/b+c/d*i` text.
/// dot: Hasse diagram of the report's lattice payload.
inline std::string export_report(const Report& report, ExportFormat format) {
  using detail::json;
  if (format == ExportFormat::dot) {
    if (!report.lattice) throw input_error("dot export needs a lattice payload");
    const LatticeExport& lat = *report.lattice;
    std::ostringstream out;
    out << "digraph \"ClSub(" << lat.object << ")\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < lat.nodes.size(); ++k) {
      out << "  n" << k << " [label=\"" << detail::rank_label(lat.nodes[k]) << "\"];\n";
    }
    for (const auto& [lo, hi] : lat.edges) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
  }
  json suites = json::array();
  for (const auto& s : report.suites) {
    json failures = json::array();
    for (const auto& w : s.failures) failures.push_back(detail::witness_to_json(w));
    json j{{"name", s.name},         {"kind", s.kind},     {"seed", s.seed},
           {"instances", s.instances}, {"passed", s.passed}, {"failed", s.failed},
           {"failures", std::move(failures)}};
    if (s.witness) j["witness"] = detail::witness_to_json(*s.witness);
    suites.push_back(std::move(j));
  }
  json root{{"suites", std::move(suites)}};
  if (report.lattice) {
    json nodes = json::array();
    for (const auto& n : report.lattice->nodes) {
      nodes.push_back(json{{"label", n.label}, {"rank", n.sub.rank()}, {"proj", detail::matrix_to_json(n.sub.proj())}});
    }
    json edges = json::array();
    for (const auto& [lo, hi] : report.lattice->edges) edges.push_back({lo, hi});
    root["lattice"] = json{{"object", report.lattice->object}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  }
  return root.dump();
}

inline Report parse_report(std::string_view text) {
  using detail::json;
  Report r;
  try {
    json root = json::parse(text);
    for (const auto& j : root.at("suites")) {
      SuiteResult s;
      s.name = j.at("name").get<std::string>();
      s.kind = j.at("kind").get<std::string>();
      s.seed = j.at("seed").get<std::uint64_t>();
      s.instances = j.at("instances").get<std::size_t>();
      s.passed = j.at("passed").get<std::size_t>();
      s.failed = j.at("failed").get<std::size_t>();
      for (const auto& w : j.at("failures")) s.failures.push_back(detail::witness_from_json(w));
      if (j.contains("witness")) s.witness = detail::witness_from_json(j.at("witness"));
      r.suites.push_back(std::move(s));
    }
    if (root.contains("lattice")) {
      const json& l = root.at("lattice");
      LatticeExport lat;
      lat.object = l.at("object").get<std::string>();
      for (const auto& n : l.at("nodes")) {
        lat.nodes.push_back({n.at("label").get<std::string>(),
                             Subobject::from_projection(detail::matrix_from_json(n.at("proj")))});
      }
      for (const auto& e : l.at("edges")) lat.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
      r.lattice = std::move(lat);
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed report: ") + e.what());
  } catch (const scalar_syntax_error& e) {
    throw input_error(std::string("malformed report: ") + e.what());
  } catch (const usage_error& e) {
    throw input_error(std::string("malformed report: ") + e.what());
  }
  return r;
}

/// Closes `generators` (plus bottom and top) under meet, join and perp.
/// Labels: generator names, `NAME^perp`, `bottom`, `top`, otherwise
/// `rank r`. Nodes are ordered by rank, then by projection.
inline LatticeExport generate_sublattice(const std::string& object, std::size_t ambient,
                                         const std::vector<std::pair<std::string, Subobject>>& generators,
                                         std::size_t limit = 256) {
  std::set<Subobject> seen{Subobject::bottom(ambient), Subobject::top(ambient)};
  for (const auto& g : generators) seen.insert(g.second);
  std::vector<Subobject> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Subobject> found;
    std::vector<Subobject> all(seen.begin(), seen.end());
    auto add = [&](Subobject s) {
      if (seen.insert(s).second) {
        found.push_back(std::move(s));
        if (seen.size() > limit) {
          throw input_error("sublattice of " + object + " has more than " + std::to_string(limit) + " elements");
        }
      }
    };
    for (const auto& x : frontier) {
      add(sub_perp(x));
      for (const auto& y : all) {
        add(sub_meet(x, y));
        add(sub_join(x, y));
      }
    }
    frontier = std::move(found);
  }

  std::vector<Subobject> ordered(seen.begin(), seen.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Subobject& a, const Subobject& b) { return a.rank() < b.rank(); });
  LatticeExport out;
  out.object = object;
  for (const auto& s : ordered) {
    std::vector<std::string> names;
    if (s.is_bottom()) names.push_back("bottom");
    if (s.is_top()) names.push_back("top");
    for (const auto& [name, g] : generators) {
      if (g == s) names.push_back(name);
    }
    for (const auto& [name, g] : generators) {
      if (sub_perp(g) == s) names.push_back(name + "^perp");
    }
    std::string label;
    for (const auto& n : names) label += (label.empty() ? "" : " = ") + n;
    if (label.empty()) label = "rank " + std::to_string(s.rank());
    out.nodes.push_back({label, s});
  }
  for (std::size_t lo = 0; lo < ordered.size(); ++lo) {
    for (std::size_t hi = 0; hi < ordered.size(); ++hi) {
      if (lo == hi || !sub_leq(ordered[lo], ordered[hi])) continue;
      bool covers = true;
      for (std::size_t mid = 0; mid < ordered.size() && covers; ++mid) {
        if (mid == lo || mid == hi) continue;
        covers = !(sub_leq(ordered[lo], ordered[mid]) && sub_leq(ordered[mid], ordered[hi]));
      }
      if (covers) out.edges.emplace_back(lo, hi);
    }
  }
  return out;
}

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_REPORT_HPP
