#ifndef LPA_TRANSFORMS_HPP
#define LPA_TRANSFORMS_HPP

#include "lpa/element.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal.hpp"
#include "lpa/laurent.hpp"

namespace lpa {

/// The graph E \ (H,S): survivors of E^0 \ H plus a primed sink v' for every
/// v in B_H \ S; edges with range outside H plus a primed copy e' for every
/// edge whose range lies in B_H \ S. Bundles of surviving emitters keep the
/// targets that survive (plus primed copies for targets in B_H \ S); an
/// emitter whose bundle landed entirely in H loses it.
GraphPtr quotient_graph(GraphPtr g, const AdmissiblePair& p);

/// The quotient homomorphism onto L_K(E \ (H,S)): v maps to v, v + v' or 0,
/// edges likewise, extended multiplicatively and linearly; the result is
/// normalized. Its kernel is exactly I_(H,S).
Element quotient_hom(const AdmissiblePair& p, const Element& x);

/// The graph E_(H,S) on H union S: all edges leaving H, plus the edges from
/// S into H (bundle targets, all lying in H, are kept as bundles).
GraphPtr restriction_graph(GraphPtr g, const AdmissiblePair& p);

/// restriction_graph((X, {})) for a hereditary (not necessarily saturated) X.
GraphPtr hereditary_subgraph(GraphPtr g, const VertexSet& x);

/// Embeds an element of L_K(E_(H,S)) into L_K(E): identity on shared
/// vertices and edges, except each v in S maps to the gap idempotent v^H.
Element embed_restriction(GraphPtr g, const AdmissiblePair& p,
                          const Element& x);

/// Finite truncation of the desingularization: every sink grows a tail of
/// `depth` fresh vertices, and every infinite emitter has its outgoing edges
/// (explicit ones first in canonical order, then bundle targets round-robin)
/// redistributed along a tail of `depth` vertices. Output is row-finite and
/// every vertex off the truncation frontier is regular.
GraphPtr desingularize(GraphPtr g, int depth);

/// Requires g to be a single cycle v_1 -> v_2 -> ... -> v_n -> v_1 (first
/// vertex in canonical order taken as v_1). Maps v_i to e_ii, the i-th edge
/// to e_{i,i+1} x (the closing edge to e_{n,1} x) and its ghost to the
/// transpose cell with x^-1, extended to elements. The image consists of the
/// matrices whose (i,j) entry has exponents congruent to j - i mod n.
LaurentMatrix cycle_iso(const Element& x);

/// Inverse of cycle_iso on its image; throws std::domain_error on a matrix
/// outside the image.
Element cycle_iso_inv(GraphPtr g, FieldId f, const LaurentMatrix& m);

/// The ordered vertices/edges of the unique cycle of a single-cycle graph;
/// throws std::domain_error otherwise. v_1 is the first vertex in canonical
/// order, edges[i] runs from vertices[i] to vertices[i+1 mod n].
struct CycleShape {
  std::vector<int> vertices;
  std::vector<int> edges;
};
CycleShape single_cycle_shape(const Graph& g);

}  // namespace lpa

#endif
