#include "lpa/properties.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/transforms.hpp"

namespace lpa {

bool ClosedPath::bundle_backed() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const PathStep& s) { return s.is_bundle(); });
}

std::string ClosedPath::str(const Graph& g) const {
  std::string out;
  for (const PathStep& s : steps) {
    if (!out.empty()) out += '*';
    if (s.is_bundle()) {
      out += g.vertex_name(s.bundle_src) + "=>" + g.vertex_name(s.bundle_dst);
    } else {
      out += g.edge(s.edge).id;
    }
  }
  return out.empty() ? g.vertex_name(base) : out;
}

namespace {

std::vector<PathStep> steps_from(const Graph& g, int v) {
  std::vector<PathStep> out;
  for (int e : g.out_edges(v)) out.push_back(PathStep::explicit_edge(e));
  for (int t : g.bundle_targets(v)) out.push_back(PathStep::bundle(v, t));
  return out;
}

// Plain reachability to `target` along explicit and bundle edges.
std::vector<char> reaches(const Graph& g, int target) {
  std::vector<char> r(g.vertex_count(), 0);
  r[target] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (r[v]) continue;
      for (int w : g.successors(v)) {
        if (r[w]) {
          r[v] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return r;
}

struct ClosedWalkSearch {
  const Graph& g;
  int base;
  std::vector<char> reaches_base;
  std::vector<char> on_walk;
  std::vector<PathStep> steps;
  std::vector<ClosedPath> found;
  bool pumpable = false;

  explicit ClosedWalkSearch(const Graph& graph, int v)
      : g(graph), base(v), reaches_base(reaches(graph, v)),
        on_walk(graph.vertex_count(), 0) {}

  void run() { dfs(base); }

  void dfs(int at) {
    for (const PathStep& s : steps_from(g, at)) {
      int to = s.target(g);
      steps.push_back(s);
      if (to == base) {
        found.push_back(ClosedPath{base, steps});
      } else if (on_walk[to]) {
        // An inner loop that can be traversed any number of times before
        // returning to the base yields infinitely many simple closed paths.
        if (reaches_base[at]) pumpable = true;
      } else {
        on_walk[to] = 1;
        dfs(to);
        on_walk[to] = 0;
      }
      steps.pop_back();
    }
  }
};

}  // namespace

std::vector<ClosedPath> simple_closed_paths_at(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("unknown vertex index");
  }
  ClosedWalkSearch search(g, v);
  search.run();
  return std::move(search.found);
}

std::vector<ClosedPath> simple_closed_paths_at(const Graph& g,
                                               std::string_view vertex) {
  return simple_closed_paths_at(g, g.require_vertex(vertex));
}

int closed_path_count(const Graph& g, int v) {
  ClosedWalkSearch search(g, v);
  search.run();
  int count = search.pumpable ? 2 : 0;
  for (const ClosedPath& p : search.found) {
    count += p.bundle_backed() ? 2 : 1;
  }
  return std::min(count, 2);
}

bool has_exit(const Graph& g, const ClosedPath& alpha) {
  for (const PathStep& s : alpha.steps) {
    if (s.is_bundle()) return true;  // parallel anonymous copies
    int v = s.source(g);
    if (g.out_edges(v).size() > 1 || g.has_bundle(v)) return true;
  }
  return false;
}

bool has_exit(const Graph& g, const Path& alpha) {
  if (alpha.range(g) != alpha.source()) {
    throw std::domain_error("has_exit requires a closed path");
  }
  for (int e : alpha.edge_indices()) {
    int v = g.edge_source(e);
    if (g.out_edges(v).size() > 1 || g.has_bundle(v)) return true;
  }
  return false;
}

bool condition_L(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const ClosedPath& p : simple_closed_paths_at(g, v)) {
      if (!has_exit(g, p)) return false;
    }
  }
  return true;
}

bool condition_K(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (closed_path_count(g, v) == 1) return false;
  }
  return true;
}

bool condition_K_via_quotients(GraphPtr g) {
  for (const AdmissiblePair& p : admissible_pairs(*g)) {
    if (!condition_L(*quotient_graph(g, p))) return false;
  }
  return true;
}

bool is_cofinal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> reach_to(n);
  for (int v = 0; v < n; ++v) reach_to[v] = reaches(g, v);
  std::vector<int> on_cycle;
  for (int v = 0; v < n; ++v) {
    for (int w : g.successors(v)) {
      if (reach_to[v][w]) {  // w reaches v, closing a cycle through v
        on_cycle.push_back(v);
        break;
      }
    }
  }
  for (int u : on_cycle) {
    for (int x = 0; x < n; ++x) {
      if (!reach_to[u][x]) return false;  // x cannot reach the cycle at u
    }
  }
  return true;
}

SimplicityVerdict is_simple(GraphPtr g) {
  const Graph& gr = *g;
  if (gr.vertex_count() == 0) {
    throw std::invalid_argument("simplicity is undefined for the empty graph");
  }
  SimplicityVerdict v{};
  v.condition_L = condition_L(gr);
  v.condition_K = condition_K(gr);
  v.cofinal = is_cofinal(gr);

  v.singular_reach = true;
  for (int s = 0; s < gr.vertex_count() && v.singular_reach; ++s) {
    if (gr.is_regular(s)) continue;
    std::vector<char> r = reaches(gr, s);
    for (int x = 0; x < gr.vertex_count(); ++x) {
      if (!r[x]) {
        v.singular_reach = false;
        break;
      }
    }
  }

  v.trivial_lattice = true;
  for (const VertexSet& h : saturated_hereditary_sets(gr)) {
    if (!h.empty() && static_cast<int>(h.size()) != gr.vertex_count()) {
      v.trivial_lattice = false;
      break;
    }
  }

  v.criterion_L_trivial = v.condition_L && v.trivial_lattice;
  v.criterion_K_trivial = v.condition_K && v.trivial_lattice;
  v.criterion_L_cofinal_reach = v.condition_L && v.cofinal && v.singular_reach;
  v.criterion_K_cofinal_reach = v.condition_K && v.cofinal && v.singular_reach;

  if (v.criterion_L_trivial != v.criterion_K_trivial ||
      v.criterion_L_trivial != v.criterion_L_cofinal_reach ||
      v.criterion_L_trivial != v.criterion_K_cofinal_reach) {
    throw std::logic_error(
        "simplicity characterizations disagree (implementation bug)");
  }
  v.simple = v.criterion_L_trivial;
  return v;
}

}  // namespace lpa
