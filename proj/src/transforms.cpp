#include "lpa/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

namespace {

GraphPtr checked(GraphPtr g, const char* what) {
  if (!g->is_valid()) {
    throw std::domain_error(std::string(what) +
                            " produced an invalid graph: " +
                            g->violations().front());
  }
  return g;
}

Path map_path_by_names(const Graph& from, const Graph& to, const Path& p) {
  int src = to.vertex_index(from.vertex_name(p.source()));
  if (src < 0) {
    throw std::invalid_argument("target graph lacks vertex " +
                                from.vertex_name(p.source()));
  }
  std::vector<int> edges;
  edges.reserve(p.edge_indices().size());
  for (int e : p.edge_indices()) {
    int te = to.edge_index(from.edge(e).id);
    if (te < 0) {
      throw std::invalid_argument("target graph lacks edge " + from.edge(e).id);
    }
    edges.push_back(te);
  }
  return Path(to, src, std::move(edges));
}

}  // namespace

GraphPtr quotient_graph(GraphPtr g, const AdmissiblePair& p) {
  require_valid_pair(*g, p);
  const Graph& gr = *g;
  VertexSet bh = breaking_vertices(gr, p.H);
  VertexSet primed;
  for (int v : bh) {
    if (!p.S.count(v)) primed.insert(v);
  }

  std::vector<std::string> vertices;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (!p.H.count(v)) vertices.push_back(gr.vertex_name(v));
  }
  for (int v : primed) vertices.push_back(gr.vertex_name(v) + "'");

  std::vector<EdgeRecord> edges;
  for (const EdgeRecord& e : gr.edges()) {
    int r = gr.edge_range(gr.edge_index(e.id));
    if (!p.H.count(r)) edges.push_back(e);
  }
  for (const EdgeRecord& e : gr.edges()) {
    int r = gr.edge_range(gr.edge_index(e.id));
    if (primed.count(r)) {
      edges.push_back(EdgeRecord{e.id + "'", e.src, e.dst + "'"});
    }
  }

  std::vector<BundleRecord> bundles;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (p.H.count(v) || !gr.has_bundle(v)) continue;
    BundleRecord b{gr.vertex_name(v), {}};
    for (int t : gr.bundle_targets(v)) {
      if (!p.H.count(t)) b.targets.push_back(gr.vertex_name(t));
      if (primed.count(t)) b.targets.push_back(gr.vertex_name(t) + "'");
    }
    if (!b.targets.empty()) bundles.push_back(std::move(b));
  }

  return checked(
      make_graph(std::move(vertices), std::move(edges), std::move(bundles)),
      "quotient_graph");
}

Element quotient_hom(const AdmissiblePair& p, const Element& x) {
  GraphPtr g = x.graph();
  const Graph& gr = *g;
  FieldId f = x.field();
  GraphPtr q = quotient_graph(g, p);
  VertexSet bh = breaking_vertices(gr, p.H);
  VertexSet primed;
  for (int v : bh) {
    if (!p.S.count(v)) primed.insert(v);
  }

  auto vertex_image = [&](int v) {
    if (p.H.count(v)) return Element::zero(q, f);
    Element img = Element::vertex(q, f, q->require_vertex(gr.vertex_name(v)));
    if (primed.count(v)) {
      img = img +
            Element::vertex(q, f, q->require_vertex(gr.vertex_name(v) + "'"));
    }
    return img;
  };
  auto edge_image = [&](int e, bool ghost) {
    int r = gr.edge_range(e);
    if (p.H.count(r)) return Element::zero(q, f);
    const std::string& id = gr.edge(e).id;
    auto lift = [&](const std::string& name) {
      int qe = q->edge_index(name);
      return ghost ? Element::ghost_edge(q, f, qe)
                   : Element::real_edge(q, f, qe);
    };
    Element img = lift(id);
    if (primed.count(r)) img = img + lift(id + "'");
    return img;
  };

  Element out = Element::zero(q, f);
  for (const auto& [m, c] : x.terms()) {
    Element acc = Element::zero(q, f);
    bool started = false;
    auto push = [&](const Element& factor) {
      acc = started ? multiply_raw(acc, factor) : factor;
      started = true;
    };
    for (int e : m.alpha.edge_indices()) push(edge_image(e, false));
    const auto& ghost_edges = m.beta.edge_indices();
    for (auto it = ghost_edges.rbegin(); it != ghost_edges.rend(); ++it) {
      push(edge_image(*it, true));
    }
    if (!started) acc = vertex_image(m.alpha.source());
    out = out + acc.scaled(c);
  }
  return out.normal_form();
}

namespace {

GraphPtr restrict_impl(const Graph& gr, const VertexSet& h,
                       const VertexSet& s) {
  std::vector<std::string> vertices;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (h.count(v) || s.count(v)) vertices.push_back(gr.vertex_name(v));
  }
  std::vector<EdgeRecord> edges;
  for (const EdgeRecord& rec : gr.edges()) {
    int e = gr.edge_index(rec.id);
    int src = gr.edge_source(e);
    int dst = gr.edge_range(e);
    if (h.count(src) || (s.count(src) && h.count(dst))) edges.push_back(rec);
  }
  std::vector<BundleRecord> bundles;
  for (int v = 0; v < gr.vertex_count(); ++v) {
    if (!gr.has_bundle(v) || !(h.count(v) || s.count(v))) continue;
    BundleRecord b{gr.vertex_name(v), {}};
    for (int t : gr.bundle_targets(v)) {
      if (h.count(t)) b.targets.push_back(gr.vertex_name(t));
    }
    if (!b.targets.empty()) bundles.push_back(std::move(b));
  }
  return make_graph(std::move(vertices), std::move(edges), std::move(bundles));
}

}  // namespace

GraphPtr restriction_graph(GraphPtr g, const AdmissiblePair& p) {
  require_valid_pair(*g, p);
  return checked(restrict_impl(*g, p.H, p.S), "restriction_graph");
}

GraphPtr hereditary_subgraph(GraphPtr g, const VertexSet& x) {
  if (!is_hereditary(*g, x)) {
    throw std::invalid_argument("hereditary_subgraph requires a hereditary set");
  }
  return checked(restrict_impl(*g, x, {}), "hereditary_subgraph");
}

Element embed_restriction(GraphPtr g, const AdmissiblePair& p,
                          const Element& x) {
  require_valid_pair(*g, p);
  const Graph& from = *x.graph();
  FieldId f = x.field();
  Element out = Element::zero(g, f);
  for (const auto& [m, c] : x.terms()) {
    if (m.alpha.is_vertex() && m.beta.is_vertex()) {
      int v = g->require_vertex(from.vertex_name(m.alpha.source()));
      Element img = p.S.count(v) ? vH_element(g, f, p.H, v)
                                 : Element::vertex(g, f, v);
      out = out + img.scaled(c);
    } else {
      Monomial lifted{map_path_by_names(from, *g, m.alpha),
                      map_path_by_names(from, *g, m.beta)};
      out = out + Element::monomial(g, f, lifted, c);
    }
  }
  return out.normal_form();
}

GraphPtr desingularize(GraphPtr g, int depth) {
  if (depth < 1) throw std::invalid_argument("desingularization depth must be >= 1");
  const Graph& gr = *g;

  std::vector<std::string> vertices = gr.vertices();
  std::vector<EdgeRecord> edges;
  for (const EdgeRecord& rec : gr.edges()) {
    int e = gr.edge_index(rec.id);
    if (!gr.is_infinite_emitter(gr.edge_source(e))) edges.push_back(rec);
  }

  for (int v = 0; v < gr.vertex_count(); ++v) {
    VertexClass cls = gr.classify(v);
    if (cls == VertexClass::Regular) continue;
    const std::string& base = gr.vertex_name(v);

    std::vector<std::string> tail;  // v#1 .. v#depth
    for (int k = 1; k <= depth; ++k) {
      tail.push_back(base + "#" + std::to_string(k));
      vertices.push_back(tail.back());
    }

    if (cls == VertexClass::Sink) {
      std::string prev = base;
      for (int k = 1; k <= depth; ++k) {
        edges.push_back(
            EdgeRecord{base + "#f" + std::to_string(k), prev, tail[k - 1]});
        prev = tail[k - 1];
      }
      continue;
    }

    // Infinite emitter: first `depth` entries of the edge enumeration
    // (explicit edges, then bundle targets cyclically) leave the tail.
    std::vector<std::string> targets;
    std::vector<std::string> redistributed_ids;
    for (int e : gr.out_edges(v)) {
      if (static_cast<int>(targets.size()) == depth) break;
      targets.push_back(gr.edge(e).dst);
      redistributed_ids.push_back(gr.edge(e).id);
    }
    const std::vector<int>& bt = gr.bundle_targets(v);
    std::size_t bi = 0;
    while (static_cast<int>(targets.size()) < depth) {
      redistributed_ids.push_back(base + "#g" +
                                  std::to_string(targets.size() + 1));
      targets.push_back(gr.vertex_name(bt[bi]));
      bi = (bi + 1) % bt.size();
    }

    std::string prev = base;
    for (int k = 1; k <= depth; ++k) {
      edges.push_back(EdgeRecord{redistributed_ids[k - 1], prev, targets[k - 1]});
      edges.push_back(
          EdgeRecord{base + "#f" + std::to_string(k), prev, tail[k - 1]});
      prev = tail[k - 1];
    }
  }

  return checked(make_graph(std::move(vertices), std::move(edges), {}),
                 "desingularize");
}

CycleShape single_cycle_shape(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0 || g.edge_count() != n || !g.is_row_finite()) {
    throw std::domain_error("graph is not a single cycle");
  }
  CycleShape c;
  int at = 0;
  do {
    if (g.out_edges(at).size() != 1) {
      throw std::domain_error("graph is not a single cycle");
    }
    int e = g.out_edges(at).front();
    c.vertices.push_back(at);
    c.edges.push_back(e);
    at = g.edge_range(e);
  } while (at != 0 && static_cast<int>(c.vertices.size()) <= n);
  if (at != 0 || static_cast<int>(c.vertices.size()) != n) {
    throw std::domain_error("graph is not a single cycle");
  }
  return c;
}

LaurentMatrix cycle_iso(const Element& x) {
  const Graph& g = *x.graph();
  CycleShape c = single_cycle_shape(g);
  int n = static_cast<int>(c.vertices.size());
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < n; ++i) pos[c.vertices[i]] = i;

  LaurentMatrix m(x.field(), n);
  for (const auto& [mono, coeff] : x.terms()) {
    int i = pos[mono.alpha.source()];
    int j = pos[mono.beta.source()];
    int exp = mono.alpha.length() - mono.beta.length();
    m.at(i, j) = m.at(i, j) + LaurentPoly::term(x.field(), exp, coeff);
  }
  return m;
}

Element cycle_iso_inv(GraphPtr g, FieldId f, const LaurentMatrix& m) {
  const Graph& gr = *g;
  CycleShape c = single_cycle_shape(gr);
  int n = static_cast<int>(c.vertices.size());
  if (m.size() != n) {
    throw std::domain_error("matrix size does not match the cycle length");
  }
  auto walk = [&](int start, int length) {
    std::vector<int> edges;
    for (int t = 0; t < length; ++t) {
      edges.push_back(c.edges[(start + t) % n]);
    }
    return Path(gr, c.vertices[start], std::move(edges));
  };

  std::map<Monomial, FieldElement> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& [exp, coeff] : m.at(i, j).coeffs()) {
        if (((exp - (j - i)) % n + n) % n != 0) {
          throw std::domain_error(
              "matrix lies outside the image of the cycle isomorphism");
        }
        Monomial mono{walk(i, std::max(exp, 0)), walk(j, std::max(-exp, 0))};
        auto [it, inserted] = terms.try_emplace(mono, coeff);
        if (!inserted) it->second += coeff;
      }
    }
  }
  return Element::from_terms(std::move(g), f, std::move(terms));
}

}  // namespace lpa
