#ifndef LPA_IDEAL_HPP
#define LPA_IDEAL_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

using VertexSet = std::set<int>;

VertexSet vertex_set(const Graph& g, const std::vector<std::string>& names);
std::string vertex_set_names(const Graph& g, const VertexSet& s,
                             std::string_view separator = " ");

/// Closed under moving forward along explicit edges and bundle edges.
bool is_hereditary(const Graph& g, const VertexSet& H);

/// Contains every regular vertex all of whose edge ranges it contains.
/// Requires hereditary input.
bool is_saturated(const Graph& g, const VertexSet& H);

/// Least saturated hereditary superset of a hereditary H.
VertexSet saturate(const Graph& g, VertexSet H);

/// Least hereditary superset (forward reachability, bundles included).
VertexSet hereditary_closure(const Graph& g, VertexSet X);

/// B_H: infinite emitters outside H whose bundle targets all lie in H and
/// with at least one explicit edge escaping H. Requires H saturated
/// hereditary.
VertexSet breaking_vertices(const Graph& g, const VertexSet& H);

/// The gap idempotent v - sum of e e^* over explicit edges escaping H;
/// requires v in breaking_vertices(g, H).
Element vH_element(GraphPtr g, FieldId f, const VertexSet& H, int v);

struct AdmissiblePair {
  VertexSet H;
  VertexSet S;

  bool operator==(const AdmissiblePair&) const = default;
};

void require_valid_pair(const Graph& g, const AdmissiblePair& p);

/// All saturated hereditary vertex sets, in subset-bitmask order.
std::vector<VertexSet> saturated_hereditary_sets(const Graph& g);

/// All admissible pairs (H saturated hereditary, S subset of B_H), ordered by
/// the bitmask of H and then the bitmask of S. Guarded to |E^0| <= 20.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g);

/// (H,S) <= (H',S') iff H is contained in H' and S in H' union S'.
bool pair_leq(const AdmissiblePair& a, const AdmissiblePair& b);

/// Greatest lower / least upper bound inside the enumerated lattice.
AdmissiblePair pair_meet(const Graph& g, const AdmissiblePair& a,
                         const AdmissiblePair& b);
AdmissiblePair pair_join(const Graph& g, const AdmissiblePair& a,
                         const AdmissiblePair& b);

/// Literal evaluation of the published meet/join formulas, for the
/// diagnostic comparison mode; the results need not be admissible.
AdmissiblePair pair_meet_formula(const Graph& g, const AdmissiblePair& a,
                                 const AdmissiblePair& b);
AdmissiblePair pair_join_formula(const Graph& g, const AdmissiblePair& a,
                                 const AdmissiblePair& b);

struct LatticeFormulaReport {
  AdmissiblePair a;
  AdmissiblePair b;
  bool meet_agrees;
  AdmissiblePair order_meet;
  AdmissiblePair formula_meet;
  bool join_agrees;
  AdmissiblePair order_join;
  AdmissiblePair formula_join;
};

/// Compares the order-theoretic meet/join with the published formulas over
/// all pairs; returns the disagreements.
std::vector<LatticeFormulaReport> lattice_formula_diagnostics(const Graph& g);

/// Generators of the graded ideal I_(H,S): the vertices of H, then v^H for
/// v in S, in canonical order.
std::vector<Element> ideal_generators(GraphPtr g, FieldId f,
                                      const AdmissiblePair& p);

/// Membership in I_(H,S): true iff the quotient homomorphism sends x to 0.
bool in_graded_ideal(const AdmissiblePair& p, const Element& x);

/// Local units t_n for the ideal I_(H,emptyset): partial sums of the
/// vertices of H and of alpha alpha^* over the paths entering H exactly at
/// their final vertex (enumerated by length, then lexicographically).
class IdealLocalUnits {
 public:
  IdealLocalUnits(GraphPtr g, FieldId f, VertexSet H);

  Element unit(int n);  // t_n, n >= 1

  /// The first paths of the enumeration (at least min(count, |F|) entries).
  std::vector<Path> entering_paths(int count);

 private:
  GraphPtr graph_;
  FieldId field_;
  VertexSet h_;
  std::vector<int> h_vertices_;
  std::vector<Path> fx_;
  std::vector<Path> frontier_;
  std::vector<char> reaches_h_;
  bool exhausted_ = false;

  void ensure(int count);
  void extend();
};

struct NonGradedWitness {
  Element generator;         // vertices of the no-exit cycle plus its rotations
  Element homogeneous_part;  // degree-0 part, certified outside the ideal
  std::vector<int> cycle_vertices;
  std::vector<int> cycle_edges;
};

/// A generator of a non-graded ideal supported on a closed path with no
/// exit, with a homogeneous component certified (via Laurent division in the
/// cycle model) to lie outside the generated ideal; nullopt when every
/// closed path has an exit.
std::optional<NonGradedWitness> nongraded_ideal_witness(GraphPtr g, FieldId f);

std::string format_pair(const Graph& g, const AdmissiblePair& p);
AdmissiblePair parse_pair(const Graph& g, std::string_view text);

/// Hasse diagram of the admissible-pair lattice in DOT format.
std::string lattice_to_dot(const Graph& g);

}  // namespace lpa

#endif
