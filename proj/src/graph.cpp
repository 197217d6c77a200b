#include "lpa/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lpa {

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Regular:
      return "regular";
    case VertexClass::Sink:
      return "sink";
    case VertexClass::InfiniteEmitter:
      return "infinite-emitter";
  }
  return "?";
}

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges,
             std::vector<BundleRecord> bundles)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      bundles_(std::move(bundles)) {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].empty()) {
      violations_.push_back("empty vertex identifier at position " +
                            std::to_string(v));
      continue;
    }
    if (!vertex_index_.emplace(vertices_[v], v).second) {
      violations_.push_back("duplicate vertex identifier: " + vertices_[v]);
    }
  }

  out_edges_.resize(vertices_.size());
  in_edges_.resize(vertices_.size());
  bundle_targets_.resize(vertices_.size());
  edge_src_.resize(edges_.size(), -1);
  edge_dst_.resize(edges_.size(), -1);

  for (int e = 0; e < edge_count(); ++e) {
    const EdgeRecord& rec = edges_[e];
    if (rec.id.empty()) {
      violations_.push_back("empty edge identifier at position " +
                            std::to_string(e));
    } else if (!edge_index_.emplace(rec.id, e).second) {
      violations_.push_back("duplicate edge identifier: " + rec.id);
    } else if (vertex_index_.count(rec.id)) {
      violations_.push_back("identifier used for both a vertex and an edge: " +
                            rec.id);
    }
    auto s = vertex_index_.find(rec.src);
    auto d = vertex_index_.find(rec.dst);
    if (s == vertex_index_.end()) {
      violations_.push_back("edge " + rec.id + " has unknown source vertex " +
                            rec.src);
    } else {
      edge_src_[e] = s->second;
    }
    if (d == vertex_index_.end()) {
      violations_.push_back("edge " + rec.id + " has unknown range vertex " +
                            rec.dst);
    } else {
      edge_dst_[e] = d->second;
    }
    if (s != vertex_index_.end() && d != vertex_index_.end()) {
      out_edges_[s->second].push_back(e);
      in_edges_[d->second].push_back(e);
    }
  }

  // Bundle records with the same source merge; targets deduplicate keeping
  // first-occurrence order.
  for (const BundleRecord& b : bundles_) {
    auto s = vertex_index_.find(b.src);
    if (s == vertex_index_.end()) {
      violations_.push_back("bundle has unknown source vertex " + b.src);
      continue;
    }
    if (b.targets.empty()) {
      violations_.push_back("bundle at " + b.src + " has empty target set");
      continue;
    }
    for (const std::string& t : b.targets) {
      auto d = vertex_index_.find(t);
      if (d == vertex_index_.end()) {
        violations_.push_back("bundle at " + b.src +
                              " has unknown target vertex " + t);
        continue;
      }
      auto& ts = bundle_targets_[s->second];
      if (std::find(ts.begin(), ts.end(), d->second) == ts.end()) {
        ts.push_back(d->second);
      }
    }
  }

  for (const std::string& v : vertices_) {
    signature_ += "v " + v + "\n";
  }
  for (const EdgeRecord& e : edges_) {
    signature_ += "e " + e.id + " " + e.src + " " + e.dst + "\n";
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (bundle_targets_[v].empty()) continue;
    signature_ += "b " + vertices_[v];
    for (int t : bundle_targets_[v]) signature_ += " " + vertices_[t];
    signature_ += "\n";
  }
}

bool structurally_equal(const Graph& a, const Graph& b) {
  return &a == &b || a.signature() == b.signature();
}

int Graph::vertex_index(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  return it == vertex_index_.end() ? -1 : it->second;
}

int Graph::edge_index(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  return it == edge_index_.end() ? -1 : it->second;
}

int Graph::require_vertex(std::string_view name) const {
  int v = vertex_index(name);
  if (v < 0) {
    throw std::invalid_argument("unknown vertex: " + std::string(name));
  }
  return v;
}

VertexClass Graph::classify(int v) const {
  if (has_bundle(v)) return VertexClass::InfiniteEmitter;
  return out_edges_.at(v).empty() ? VertexClass::Sink : VertexClass::Regular;
}

bool Graph::is_row_finite() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (has_bundle(v)) return false;
  }
  return true;
}

bool Graph::has_sinks() const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (is_sink(v)) return true;
  }
  return false;
}

std::vector<int> Graph::successors(int v) const {
  std::set<int> succ;
  for (int e : out_edges_.at(v)) succ.insert(edge_range(e));
  for (int t : bundle_targets_.at(v)) succ.insert(t);
  return {succ.begin(), succ.end()};
}

GraphPtr make_graph(std::vector<std::string> vertices,
                    std::vector<EdgeRecord> edges,
                    std::vector<BundleRecord> bundles) {
  return std::make_shared<Graph>(std::move(vertices), std::move(edges),
                                 std::move(bundles));
}

VertexClass classify_vertex(const Graph& g, std::string_view vertex) {
  return g.classify(g.require_vertex(vertex));
}

std::vector<std::string> validate(const Graph& g) { return g.violations(); }

Path Path::vertex(int v) {
  Path p;
  p.source_ = v;
  return p;
}

Path::Path(const Graph& g, int source, std::vector<int> edges)
    : source_(source), edges_(std::move(edges)) {
  if (source < 0 || source >= g.vertex_count()) {
    throw std::invalid_argument("path source out of range");
  }
  int at = source;
  for (int e : edges_) {
    if (g.edge_source(e) != at) {
      throw std::domain_error("path edges do not compose");
    }
    at = g.edge_range(e);
  }
}

int Path::range(const Graph& g) const {
  return edges_.empty() ? source_ : g.edge_range(edges_.back());
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = edges_.size() <=> o.edges_.size(); c != 0) return c;
  if (auto c = edges_ <=> o.edges_; c != 0) return c;
  return source_ <=> o.source_;
}

std::string Path::str(const Graph& g) const {
  if (edges_.empty()) return g.vertex_name(source_);
  std::string s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += '*';
    s += g.edge(edges_[i]).id;
  }
  return s;
}

Path compose(const Graph& g, const Path& p, const Path& q) {
  if (p.range(g) != q.source()) {
    throw std::domain_error("paths not composable: r(" + p.str(g) +
                            ") != s(" + q.str(g) + ")");
  }
  std::vector<int> edges = p.edge_indices();
  edges.insert(edges.end(), q.edge_indices().begin(), q.edge_indices().end());
  return Path(g, p.source(), std::move(edges));
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.length() > q.length()) return false;
  if (p.is_vertex()) return p.source() == q.source();
  return std::equal(p.edge_indices().begin(), p.edge_indices().end(),
                    q.edge_indices().begin());
}

Path strip_prefix(const Graph& g, const Path& p, const Path& q) {
  if (!is_prefix(p, q)) throw std::domain_error("not a path prefix");
  std::vector<int> rest(q.edge_indices().begin() + p.length(),
                        q.edge_indices().end());
  return Path(g, p.range(g), std::move(rest));
}

namespace {

void extend_paths(const Graph& g, const Path& p, int remaining,
                  std::vector<Path>& out) {
  if (remaining == 0) {
    out.push_back(p);
    return;
  }
  for (int e : g.out_edges(p.range(g))) {
    std::vector<int> edges = p.edge_indices();
    edges.push_back(e);
    extend_paths(g, Path(g, p.source(), std::move(edges)), remaining - 1, out);
  }
}

}  // namespace

std::vector<Path> paths_of_length(const Graph& g, int n, int from_vertex) {
  if (n < 0) throw std::invalid_argument("negative path length");
  if (from_vertex >= g.vertex_count()) {
    throw std::invalid_argument("unknown source vertex filter");
  }
  std::vector<Path> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (from_vertex >= 0 && v != from_vertex) continue;
    extend_paths(g, Path::vertex(v), n, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> paths_of_length(const Graph& g, int n,
                                  std::string_view from_vertex) {
  return paths_of_length(g, n, g.require_vertex(from_vertex));
}

}  // namespace lpa
