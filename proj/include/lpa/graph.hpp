#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lpa {

struct EdgeRecord {
  std::string id;
  std::string src;
  std::string dst;
};

struct BundleRecord {
  std::string src;
  std::vector<std::string> targets;
};

enum class VertexClass { Regular, Sink, InfiniteEmitter };

std::string to_string(VertexClass c);

/// A finite directed graph with named vertices and edges, plus "bundle"
/// descriptors: a bundle v -> {w...} stands for countably many anonymous
/// parallel edges from v to each listed target, so a vertex owning a bundle
/// is an infinite emitter. Vertex and edge order is canonical (input order)
/// and drives every enumeration and tie-break in the toolkit.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges,
        std::vector<BundleRecord> bundles);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const EdgeRecord& edge(int e) const { return edges_.at(e); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<BundleRecord>& bundles() const { return bundles_; }

  /// Index of a vertex/edge id, or -1 when unknown.
  int vertex_index(std::string_view name) const;
  int edge_index(std::string_view name) const;

  int require_vertex(std::string_view name) const;  // throws on unknown id

  int edge_source(int e) const { return edge_src_.at(e); }
  int edge_range(int e) const { return edge_dst_.at(e); }

  const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }
  const std::vector<int>& in_edges(int v) const { return in_edges_.at(v); }

  bool has_bundle(int v) const { return !bundle_targets_.at(v).empty(); }
  /// Bundle targets of v as vertex indices, in input order (empty if none).
  const std::vector<int>& bundle_targets(int v) const {
    return bundle_targets_.at(v);
  }

  VertexClass classify(int v) const;
  bool is_regular(int v) const { return classify(v) == VertexClass::Regular; }
  bool is_sink(int v) const { return classify(v) == VertexClass::Sink; }
  bool is_infinite_emitter(int v) const {
    return classify(v) == VertexClass::InfiniteEmitter;
  }
  bool is_row_finite() const;  // no bundles
  bool has_sinks() const;

  /// Successor vertices of v along explicit edges and bundle edges,
  /// deduplicated, in canonical order. Bundles count for reachability.
  std::vector<int> successors(int v) const;

  /// Structural invariant violations; empty iff the graph is well formed.
  const std::vector<std::string>& violations() const { return violations_; }
  bool is_valid() const { return violations_.empty(); }

  /// Canonical structural fingerprint (vertex, edge and bundle lists in
  /// order). Two graphs with equal signatures assign identical indices.
  const std::string& signature() const { return signature_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeRecord> edges_;
  std::vector<BundleRecord> bundles_;

  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
  std::vector<int> edge_src_;
  std::vector<int> edge_dst_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> in_edges_;
  std::vector<std::vector<int>> bundle_targets_;
  std::vector<std::string> violations_;
  std::string signature_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Same vertices, edges and bundles in the same order (elements over
/// structurally equal graphs are interoperable).
bool structurally_equal(const Graph& a, const Graph& b);

GraphPtr make_graph(std::vector<std::string> vertices,
                    std::vector<EdgeRecord> edges,
                    std::vector<BundleRecord> bundles = {});

/// Free-function form of Graph::classify taking a vertex name.
VertexClass classify_vertex(const Graph& g, std::string_view vertex);

/// Free-function form of Graph::violations.
std::vector<std::string> validate(const Graph& g);

/// A composable sequence of explicit edges; an empty sequence is the vertex
/// itself. Only named edges occur in paths (bundle edges are anonymous).
class Path {
 public:
  Path() = default;
  static Path vertex(int v);
  /// Checked construction: consecutive edges must compose and, when the edge
  /// list is nonempty, source must equal s(first edge).
  Path(const Graph& g, int source, std::vector<int> edges);

  int source() const { return source_; }
  int range(const Graph& g) const;
  int length() const { return static_cast<int>(edges_.size()); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<int>& edge_indices() const { return edges_; }
  int edge_at(int i) const { return edges_.at(i); }
  int last_edge() const { return edges_.back(); }

  /// Ordering: by length, then edge indices lexicographically, then source.
  std::strong_ordering operator<=>(const Path& o) const;
  bool operator==(const Path& o) const = default;

  std::string str(const Graph& g) const;  // "e*f" or the vertex name

 private:
  int source_ = -1;
  std::vector<int> edges_;
};

/// Concatenation; throws std::domain_error unless r(p) = s(q).
Path compose(const Graph& g, const Path& p, const Path& q);

/// True iff p is a prefix of q (for vertex paths: same source as q).
bool is_prefix(const Path& p, const Path& q);

/// The path r with q = compose(p, r); only valid when is_prefix(p, q).
Path strip_prefix(const Graph& g, const Path& p, const Path& q);

/// All length-n paths over explicit edges, in lexicographic edge order
/// (vertices in canonical order for n = 0), optionally filtered by source.
std::vector<Path> paths_of_length(const Graph& g, int n, int from_vertex = -1);
std::vector<Path> paths_of_length(const Graph& g, int n,
                                  std::string_view from_vertex);

}  // namespace lpa

#endif
