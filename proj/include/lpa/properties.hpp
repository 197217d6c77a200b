#ifndef LPA_PROPERTIES_HPP
#define LPA_PROPERTIES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"

namespace lpa {

/// One step of a closed walk: an explicit edge, or one representative
/// anonymous edge of a bundle (src => dst).
struct PathStep {
  int edge = -1;
  int bundle_src = -1;
  int bundle_dst = -1;

  bool is_bundle() const { return edge < 0; }
  static PathStep explicit_edge(int e) { return PathStep{e, -1, -1}; }
  static PathStep bundle(int src, int dst) { return PathStep{-1, src, dst}; }

  int source(const Graph& g) const {
    return is_bundle() ? bundle_src : g.edge_source(edge);
  }
  int target(const Graph& g) const {
    return is_bundle() ? bundle_dst : g.edge_range(edge);
  }
  bool operator==(const PathStep&) const = default;
};

struct ClosedPath {
  int base = -1;
  std::vector<PathStep> steps;

  bool bundle_backed() const;
  std::string str(const Graph& g) const;  // "e*f" with bundle steps "v=>w"
};

/// Closed paths based at v that visit v only at the endpoints and repeat no
/// internal vertex, over explicit edges plus one representative per bundle.
/// These are the finite representatives of the (possibly infinite) family of
/// simple closed paths; see closed_path_count for the counting semantics.
std::vector<ClosedPath> simple_closed_paths_at(const Graph& g, int v);
std::vector<ClosedPath> simple_closed_paths_at(const Graph& g,
                                               std::string_view vertex);

/// Number of simple closed paths based at v, saturating at 2: bundle-backed
/// representatives count as at least two parallel paths, and a repeatable
/// inner loop (a walk from v hitting an on-walk vertex that can return to v)
/// yields infinitely many.
int closed_path_count(const Graph& g, int v);

/// Exit of a closed explicit path: some visited source has a second explicit
/// edge or any bundle. Throws std::domain_error on a non-closed path.
bool has_exit(const Graph& g, const Path& alpha);
bool has_exit(const Graph& g, const ClosedPath& alpha);

/// Every closed (simple) path has an exit.
bool condition_L(const Graph& g);

/// Every vertex bases zero or at least two simple closed paths.
bool condition_K(const Graph& g);

/// Condition (L) of every quotient graph E \ (H,S); must agree with
/// condition_K.
bool condition_K_via_quotients(GraphPtr g);

/// Every vertex reaches every infinite path; decided as "every vertex
/// reaches every cycle" (explicit or bundle-backed) since infinite paths in
/// a finite graph eventually cycle.
bool is_cofinal(const Graph& g);

struct SimplicityVerdict {
  bool simple;
  bool condition_L;
  bool condition_K;
  bool cofinal;
  bool singular_reach;    // every vertex reaches every singular vertex
  bool trivial_lattice;   // only saturated hereditary sets are {} and E^0
  bool criterion_L_trivial;
  bool criterion_K_trivial;
  bool criterion_L_cofinal_reach;
  bool criterion_K_cofinal_reach;
};

/// Evaluates the four graph-theoretic simplicity characterizations and
/// checks they agree; throws std::logic_error on internal disagreement.
SimplicityVerdict is_simple(GraphPtr g);

}  // namespace lpa

#endif
