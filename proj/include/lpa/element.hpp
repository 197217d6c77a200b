#ifndef LPA_ELEMENT_HPP
#define LPA_ELEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/field.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A word alpha * beta^* with r(alpha) = r(beta): the product of the real
/// path alpha and the ghost path beta^*. Degree is |alpha| - |beta|.
struct Monomial {
  Path alpha;
  Path beta;

  int degree() const { return alpha.length() - beta.length(); }
  auto operator<=>(const Monomial&) const = default;
};

/// Per-graph choice of one out-edge for every regular vertex (the first
/// out-edge in canonical order). Normal forms treat a monomial whose real
/// and ghost parts both end in the special edge of the same regular vertex
/// as reducible.
class SpecialEdgeSelection {
 public:
  explicit SpecialEdgeSelection(const Graph& g);

  int edge_for(int vertex) const { return special_.at(vertex); }  // -1: none
  bool is_special(int edge) const { return special_flag_.at(edge) != 0; }

 private:
  std::vector<int> special_;
  std::vector<char> special_flag_;
};

bool is_reduced(const SpecialEdgeSelection& sel, const Monomial& m);

/// A finite K-linear combination of monomials over a fixed graph and field.
/// Values are immutable; every operation returns a new element. Addition,
/// scaling and bar keep the stored representation; multiplication and the
/// queries (equality, degree, filtration) work on the rewritten normal form,
/// in which no monomial ends in a matched special-edge pair.
class Element {
 public:
  Element() = default;  // detached placeholder; not usable in arithmetic

  static Element zero(GraphPtr g, FieldId f);
  static Element vertex(GraphPtr g, FieldId f, int v);
  static Element real_path(GraphPtr g, FieldId f, const Path& p);
  static Element ghost_path(GraphPtr g, FieldId f, const Path& p);
  static Element real_edge(GraphPtr g, FieldId f, int e);
  static Element ghost_edge(GraphPtr g, FieldId f, int e);
  static Element monomial(GraphPtr g, FieldId f, const Monomial& m);
  static Element monomial(GraphPtr g, FieldId f, const Monomial& m,
                          const FieldElement& coeff);
  static Element from_terms(GraphPtr g, FieldId f,
                            std::map<Monomial, FieldElement> terms);

  const GraphPtr& graph() const { return graph_; }
  FieldId field() const { return field_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_normalized() const { return normalized_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const FieldElement& c) const;
  Element operator*(const Element& o) const;  // normalized output

  /// CK2-directed rewriting to the canonical reduced representation.
  Element normal_form() const;
  bool is_zero() const { return normal_form().term_count() == 0; }

  /// Homogeneous components keyed by degree, each normalized.
  std::map<int, Element> degree_decompose() const;
  /// Degree of a homogeneous element (normal form); nullopt on zero;
  /// throws std::domain_error if not homogeneous.
  std::optional<int> homogeneous_degree() const;

  /// The bar involution: sum of coeff * beta alpha^*.
  Element bar() const;

  bool is_ghost_polynomial() const;  // every normal-form monomial has |alpha|=0
  bool is_real_polynomial() const;   // every normal-form monomial has |beta|=0

  /// Deterministic rendering of the stored terms ("v - 1/3*a*b'", "0", ...).
  std::string str() const;

 private:
  GraphPtr graph_;
  FieldId field_;
  std::map<Monomial, FieldElement> terms_;
  bool normalized_ = true;

  void require_compatible(const Element& o) const;
  void require_attached() const;
};

/// The Leavitt product of two monomials: a single monomial or nothing (zero).
std::optional<Monomial> monomial_product(const Graph& g, const Monomial& m1,
                                         const Monomial& m2);

/// Bilinear extension of the monomial product without CK2 rewriting; the
/// result stays inside the span representation its inputs live in.
Element multiply_raw(const Element& x, const Element& y);

/// True iff x - y rewrites to zero. Requires matching graph and field.
bool equals(const Element& x, const Element& y);

/// Sum of the first n vertex idempotents (1 <= n <= |E^0|).
Element local_unit(GraphPtr g, FieldId f, int n);

/// Least n with x in span{alpha beta^* : |alpha| = |beta| <= n}; requires a
/// homogeneous degree-0 element.
int filtration_level(const Element& x);

using FieldMatrix = std::vector<std::vector<FieldElement>>;

/// Coefficient matrix of x on the basis {alpha beta^* : alpha, beta paths of
/// length n ending at v} (lexicographic path order). Reads the stored terms
/// as given; throws std::domain_error if any term lies outside that span.
FieldMatrix gn_matrix_form(const Element& x, int n, int v);

struct GhostExtraction {
  Element ghost;  // nonzero polynomial in ghost edges, = beta^* * (v * y)
  int vertex;
  Path beta;
};

/// Constructive ghost-polynomial extraction from the two-sided ideal
/// generated by a nonzero y over a row-finite graph with no sinks.
GhostExtraction extract_ghost_polynomial(const Element& y);

std::string to_string(const Element& x);

/// Re-expresses x over another graph carrying the same vertex/edge names
/// (e.g. a subgraph); throws std::invalid_argument on a missing name.
Element transport_by_names(const Element& x, GraphPtr target);

}  // namespace lpa

#endif
