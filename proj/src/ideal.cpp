#include "lpa/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "lpa/laurent.hpp"
#include "lpa/transforms.hpp"

namespace lpa {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  for (int v : a) {
    if (b.count(v)) out.insert(v);
  }
  return out;
}

VertexSet set_complement(const Graph& g, const VertexSet& a) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!a.count(v)) out.insert(v);
  }
  return out;
}

void require_vertices(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("vertex index out of range: " +
                                  std::to_string(v));
    }
  }
}

}  // namespace

VertexSet vertex_set(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const std::string& n : names) out.insert(g.require_vertex(n));
  return out;
}

std::string vertex_set_names(const Graph& g, const VertexSet& s,
                             std::string_view separator) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += separator;
    out += g.vertex_name(v);
  }
  return out;
}

bool is_hereditary(const Graph& g, const VertexSet& H) {
  require_vertices(g, H);
  for (int v : H) {
    for (int e : g.out_edges(v)) {
      if (!H.count(g.edge_range(e))) return false;
    }
    for (int t : g.bundle_targets(v)) {
      if (!H.count(t)) return false;
    }
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& H) {
  if (!is_hereditary(g, H)) {
    throw std::invalid_argument("is_saturated requires a hereditary set");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (H.count(v) || !g.is_regular(v)) continue;
    bool all_in = true;
    for (int e : g.out_edges(v)) {
      if (!H.count(g.edge_range(e))) {
        all_in = false;
        break;
      }
    }
    if (all_in) return false;
  }
  return true;
}

VertexSet saturate(const Graph& g, VertexSet H) {
  if (!is_hereditary(g, H)) {
    throw std::invalid_argument("saturate requires a hereditary set");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (H.count(v) || !g.is_regular(v)) continue;
      bool all_in = true;
      for (int e : g.out_edges(v)) {
        if (!H.count(g.edge_range(e))) {
          all_in = false;
          break;
        }
      }
      if (all_in) {
        H.insert(v);
        changed = true;
      }
    }
  }
  return H;
}

VertexSet hereditary_closure(const Graph& g, VertexSet X) {
  require_vertices(g, X);
  std::vector<int> stack(X.begin(), X.end());
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.successors(v)) {
      if (X.insert(w).second) stack.push_back(w);
    }
  }
  return X;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& H) {
  if (!is_saturated(g, H)) {
    throw std::invalid_argument(
        "breaking_vertices requires a saturated hereditary set");
  }
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (H.count(v) || !g.is_infinite_emitter(v)) continue;
    bool bundles_inside = true;
    for (int t : g.bundle_targets(v)) {
      if (!H.count(t)) {
        bundles_inside = false;
        break;
      }
    }
    if (!bundles_inside) continue;  // infinitely many escaping edges
    int escaping = 0;
    for (int e : g.out_edges(v)) {
      if (!H.count(g.edge_range(e))) ++escaping;
    }
    if (escaping > 0) out.insert(v);
  }
  return out;
}

Element vH_element(GraphPtr g, FieldId f, const VertexSet& H, int v) {
  VertexSet b = breaking_vertices(*g, H);
  if (!b.count(v)) {
    throw std::invalid_argument(g->vertex_name(v) +
                                " is not a breaking vertex of the given set");
  }
  Element x = Element::vertex(g, f, v);
  for (int e : g->out_edges(v)) {
    if (H.count(g->edge_range(e))) continue;
    Path p(*g, v, {e});
    x = x - Element::monomial(g, f, Monomial{p, p});
  }
  return x;
}

void require_valid_pair(const Graph& g, const AdmissiblePair& p) {
  if (!is_hereditary(g, p.H) || !is_saturated(g, p.H)) {
    throw std::invalid_argument("H is not saturated hereditary");
  }
  VertexSet b = breaking_vertices(g, p.H);
  for (int v : p.S) {
    if (!b.count(v)) {
      throw std::invalid_argument("S contains the non-breaking vertex " +
                                  g.vertex_name(v));
    }
  }
}

namespace {

constexpr int kMaxLatticeVertices = 20;

void require_enumerable(const Graph& g) {
  if (g.vertex_count() > kMaxLatticeVertices) {
    throw std::domain_error(
        "graph too large for exhaustive admissible-pair enumeration");
  }
}

}  // namespace

std::vector<VertexSet> saturated_hereditary_sets(const Graph& g) {
  require_enumerable(g);
  std::vector<VertexSet> out;
  int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet H;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) H.insert(v);
    }
    if (is_hereditary(g, H) && is_saturated(g, H)) out.push_back(std::move(H));
  }
  return out;
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g) {
  std::vector<AdmissiblePair> out;
  for (const VertexSet& H : saturated_hereditary_sets(g)) {
    std::vector<int> b;
    for (int v : breaking_vertices(g, H)) b.push_back(v);
    for (std::uint32_t mask = 0; mask < (1u << b.size()); ++mask) {
      VertexSet S;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (mask & (1u << i)) S.insert(b[i]);
      }
      out.push_back(AdmissiblePair{H, std::move(S)});
    }
  }
  return out;
}

bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b) {
  if (!std::includes(b.H.begin(), b.H.end(), a.H.begin(), a.H.end())) {
    return false;
  }
  for (int v : a.S) {
    if (!b.H.count(v) && !b.S.count(v)) return false;
  }
  return true;
}

namespace {

AdmissiblePair extreme_bound(const Graph& g, const AdmissiblePair& a,
                             const AdmissiblePair& b, bool lower) {
  std::vector<AdmissiblePair> bounds;
  for (AdmissiblePair& q : admissible_pairs(g)) {
    bool ok = lower ? pair_leq(q, a) && pair_leq(q, b)
                    : pair_leq(a, q) && pair_leq(b, q);
    if (ok) bounds.push_back(std::move(q));
  }
  for (const AdmissiblePair& q : bounds) {
    bool extreme = true;
    for (const AdmissiblePair& r : bounds) {
      if (lower ? !pair_leq(r, q) : !pair_leq(q, r)) {
        extreme = false;
        break;
      }
    }
    if (extreme) return q;
  }
  throw std::logic_error("enumerated pair order is not a lattice");
}

}  // namespace

AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a,
                         const AdmissiblePair& b) {
  return extreme_bound(g, a, b, true);
}

AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a,
                         const AdmissiblePair& b) {
  return extreme_bound(g, a, b, false);
}

AdmissiblePair pair_meet_formula(const Graph& g, const AdmissiblePair& a,
                                 const AdmissiblePair& b) {
  VertexSet H = set_intersect(a.H, b.H);
  VertexSet u = set_union(set_union(a.S, a.H), set_union(b.S, b.H));
  return AdmissiblePair{H, set_intersect(u, breaking_vertices(g, H))};
}

AdmissiblePair pair_join_formula(const Graph& g, const AdmissiblePair& a,
                                 const AdmissiblePair& b) {
  VertexSet hu = saturate(g, set_union(a.H, b.H));
  VertexSet s12 = set_union(a.S, b.S);
  VertexSet bc =
      set_complement(g, breaking_vertices(g, set_intersect(a.H, b.H)));
  VertexSet first = set_union(hu, set_intersect(s12, bc));
  VertexSet second = set_intersect(s12, breaking_vertices(g, hu));
  return AdmissiblePair{std::move(first), std::move(second)};
}

std::vector<LatticeFormulaReport> lattice_formula_diagnostics(const Graph& g) {
  std::vector<LatticeFormulaReport> out;
  std::vector<AdmissiblePair> pairs = admissible_pairs(g);
  for (const AdmissiblePair& a : pairs) {
    for (const AdmissiblePair& b : pairs) {
      LatticeFormulaReport r{a,
                             b,
                             true,
                             pair_meet(g, a, b),
                             pair_meet_formula(g, a, b),
                             true,
                             pair_join(g, a, b),
                             pair_join_formula(g, a, b)};
      r.meet_agrees = r.order_meet == r.formula_meet;
      r.join_agrees = r.order_join == r.formula_join;
      if (!r.meet_agrees || !r.join_agrees) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Element> ideal_generators(GraphPtr g, FieldId f,
                                      const AdmissiblePair& p) {
  require_valid_pair(*g, p);
  std::vector<Element> out;
  for (int v : p.H) out.push_back(Element::vertex(g, f, v));
  for (int v : p.S) out.push_back(vH_element(g, f, p.H, v));
  return out;
}

bool in_graded_ideal(const AdmissiblePair& p, const Element& x) {
  return quotient_hom(p, x).term_count() == 0;
}

IdealLocalUnits::IdealLocalUnits(GraphPtr g, FieldId f, VertexSet H)
    : graph_(std::move(g)), field_(f), h_(std::move(H)) {
  const Graph& gr = *graph_;
  if (!is_saturated(gr, h_)) {
    throw std::invalid_argument("local units require a saturated hereditary set");
  }
  h_vertices_.assign(h_.begin(), h_.end());

  // Vertices outside H from which H is reachable through vertices outside H.
  reaches_h_.assign(gr.vertex_count(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < gr.vertex_count(); ++v) {
      if (h_.count(v) || reaches_h_[v]) continue;
      for (int e : gr.out_edges(v)) {
        int w = gr.edge_range(e);
        if (h_.count(w) || reaches_h_[w]) {
          reaches_h_[v] = 1;
          changed = true;
          break;
        }
      }
    }
  }

  // Length-1 seeds.
  std::vector<Path> fx0;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (h_.count(v)) continue;
    for (int e : gr.out_edges(v)) {
      Path p(gr, v, {e});
      int w = gr.edge_range(e);
      if (h_.count(w)) {
        fx0.push_back(p);
      } else if (reaches_h_[w]) {
        frontier_.push_back(p);
      }
    }
  }
  std::sort(fx0.begin(), fx0.end());
  std::sort(frontier_.begin(), frontier_.end());
  fx_ = std::move(fx0);
  exhausted_ = frontier_.empty();
}

void IdealLocalUnits::extend() {
  const Graph& gr = *graph_;
  std::vector<Path> next_fx;
  std::vector<Path> next_frontier;
  for (const Path& p : frontier_) {
    int at = p.range(gr);
    for (int e : gr.out_edges(at)) {
      std::vector<int> edges = p.edge_indices();
      edges.push_back(e);
      Path q(gr, p.source(), std::move(edges));
      int w = gr.edge_range(e);
      if (h_.count(w)) {
        next_fx.push_back(q);
      } else if (reaches_h_[w]) {
        next_frontier.push_back(q);
      }
    }
  }
  std::sort(next_fx.begin(), next_fx.end());
  std::sort(next_frontier.begin(), next_frontier.end());
  fx_.insert(fx_.end(), next_fx.begin(), next_fx.end());
  frontier_ = std::move(next_frontier);
  exhausted_ = frontier_.empty();
}

void IdealLocalUnits::ensure(int count) {
  while (static_cast<int>(fx_.size()) < count && !exhausted_) extend();
}

std::vector<Path> IdealLocalUnits::entering_paths(int count) {
  ensure(count);
  std::vector<Path> out(fx_.begin(),
                        fx_.begin() + std::min<std::size_t>(count, fx_.size()));
  return out;
}

Element IdealLocalUnits::unit(int n) {
  if (n < 1) throw std::invalid_argument("local unit index must be positive");
  ensure(n);
  Element t = Element::zero(graph_, field_);
  for (int i = 0; i < n && i < static_cast<int>(h_vertices_.size()); ++i) {
    t = t + Element::vertex(graph_, field_, h_vertices_[i]);
  }
  for (int i = 0; i < n && i < static_cast<int>(fx_.size()); ++i) {
    t = t + Element::monomial(graph_, field_, Monomial{fx_[i], fx_[i]});
  }
  return t;
}

namespace {

// A closed path with no exit: every vertex on it has exactly one explicit
// out-edge and no bundle. Returns the first one in canonical base order.
std::optional<CycleShape> find_no_exit_cycle(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> vertices;
    std::vector<int> edges;
    int at = v;
    bool ok = true;
    while (true) {
      if (g.has_bundle(at) || g.out_edges(at).size() != 1) {
        ok = false;
        break;
      }
      int e = g.out_edges(at).front();
      vertices.push_back(at);
      edges.push_back(e);
      at = g.edge_range(e);
      if (at == v) break;
      if (std::find(vertices.begin(), vertices.end(), at) != vertices.end()) {
        ok = false;  // closes on an earlier vertex, not on the base
        break;
      }
    }
    if (ok) return CycleShape{std::move(vertices), std::move(edges)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<NonGradedWitness> nongraded_ideal_witness(GraphPtr g, FieldId f) {
  std::optional<CycleShape> cycle = find_no_exit_cycle(*g);
  if (!cycle) return std::nullopt;

  const Graph& gr = *g;
  int n = static_cast<int>(cycle->vertices.size());
  Element gen = Element::zero(g, f);
  Element part = Element::zero(g, f);
  for (int i = 0; i < n; ++i) {
    int v = cycle->vertices[i];
    std::vector<int> rotation;
    for (int k = 0; k < n; ++k) {
      rotation.push_back(cycle->edges[(i + k) % n]);
    }
    Element vi = Element::vertex(g, f, v);
    gen = gen + vi + Element::real_path(g, f, Path(gr, v, std::move(rotation)));
    part = part + vi;
  }

  // Certify via the cycle model that the degree-0 part lies outside the
  // ideal generated by gen.
  VertexSet x(cycle->vertices.begin(), cycle->vertices.end());
  GraphPtr ex = hereditary_subgraph(g, x);
  LaurentMatrix m_gen = cycle_iso(transport_by_names(gen, ex));
  LaurentMatrix m_part = cycle_iso(transport_by_names(part, ex));
  if (matrix_ideal_contains(m_gen, m_part)) {
    throw std::logic_error(
        "cycle-model certification failed for the non-graded witness");
  }
  return NonGradedWitness{std::move(gen), std::move(part),
                          std::move(cycle->vertices),
                          std::move(cycle->edges)};
}

std::string format_pair(const Graph& g, const AdmissiblePair& p) {
  return "H={" + vertex_set_names(g, p.H, ",") + "};S={" +
         vertex_set_names(g, p.S, ",") + "}";
}

namespace {

VertexSet parse_braced_set(const Graph& g, std::string_view text,
                           std::string_view what) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("expected " + std::string(what) +
                                "={...} in pair");
  }
  VertexSet out;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    std::size_t comma = body.find(',', start);
    std::string_view name = comma == std::string_view::npos
                                ? body.substr(start)
                                : body.substr(start, comma - start);
    if (name.empty()) {
      throw std::invalid_argument("empty vertex name in pair set");
    }
    out.insert(g.require_vertex(name));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

AdmissiblePair parse_pair(const Graph& g, std::string_view text) {
  std::size_t semi = text.find(';');
  if (semi == std::string_view::npos || text.substr(0, 2) != "H=" ||
      text.substr(semi + 1, 2) != "S=") {
    throw std::invalid_argument(
        "expected pair in the form H={...};S={...}, got: " + std::string(text));
  }
  AdmissiblePair p;
  p.H = parse_braced_set(g, text.substr(2, semi - 2), "H");
  p.S = parse_braced_set(g, text.substr(semi + 3), "S");
  require_valid_pair(g, p);
  return p;
}

std::string lattice_to_dot(const Graph& g) {
  std::vector<AdmissiblePair> pairs = admissible_pairs(g);
  int n = static_cast<int>(pairs.size());
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < n; ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + format_pair(g, pairs[i]) +
           "\"];\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !pair_leq(pairs[i], pairs[j]) ||
          pairs[i] == pairs[j]) {
        continue;
      }
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (pair_leq(pairs[i], pairs[k]) && pair_leq(pairs[k], pairs[j]) &&
            !(pairs[k] == pairs[i]) && !(pairs[k] == pairs[j])) {
          covering = false;
        }
      }
      if (covering) {
        out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace lpa
