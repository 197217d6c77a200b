#include "lpa/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

SpecialEdgeSelection::SpecialEdgeSelection(const Graph& g) {
  special_.assign(g.vertex_count(), -1);
  special_flag_.assign(g.edge_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_regular(v)) {
      special_[v] = g.out_edges(v).front();
      special_flag_[special_[v]] = 1;
    }
  }
}

bool is_reduced(const SpecialEdgeSelection& sel, const Monomial& m) {
  if (m.alpha.is_vertex() || m.beta.is_vertex()) return true;
  int e = m.alpha.last_edge();
  if (e != m.beta.last_edge()) return true;
  return !sel.is_special(e);
}

namespace {

Path path_append(const Graph& g, const Path& p, int e) {
  std::vector<int> edges = p.edge_indices();
  edges.push_back(e);
  return Path(g, p.source(), std::move(edges));
}

Path path_chop(const Graph& g, const Path& p) {
  std::vector<int> edges(p.edge_indices().begin(), p.edge_indices().end() - 1);
  return Path(g, p.source(), std::move(edges));
}

void add_term(std::map<Monomial, FieldElement>& terms, const Monomial& m,
              const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

bool all_reduced(const Graph& g, const std::map<Monomial, FieldElement>& terms) {
  SpecialEdgeSelection sel(g);
  for (const auto& [m, c] : terms) {
    if (!is_reduced(sel, m)) return false;
  }
  return true;
}

}  // namespace

Element Element::zero(GraphPtr g, FieldId f) {
  Element x;
  x.graph_ = std::move(g);
  x.field_ = f;
  return x;
}

Element Element::vertex(GraphPtr g, FieldId f, int v) {
  return monomial(g, f, Monomial{Path::vertex(v), Path::vertex(v)});
}

Element Element::real_path(GraphPtr g, FieldId f, const Path& p) {
  Path v = Path::vertex(p.range(*g));
  return monomial(g, f, Monomial{p, v});
}

Element Element::ghost_path(GraphPtr g, FieldId f, const Path& p) {
  Path v = Path::vertex(p.range(*g));
  return monomial(g, f, Monomial{v, p});
}

Element Element::real_edge(GraphPtr g, FieldId f, int e) {
  return real_path(g, f, Path(*g, g->edge_source(e), {e}));
}

Element Element::ghost_edge(GraphPtr g, FieldId f, int e) {
  return ghost_path(g, f, Path(*g, g->edge_source(e), {e}));
}

Element Element::monomial(GraphPtr g, FieldId f, const Monomial& m) {
  return monomial(std::move(g), f, m, FieldElement::one(f));
}

Element Element::monomial(GraphPtr g, FieldId f, const Monomial& m,
                          const FieldElement& coeff) {
  if (m.alpha.range(*g) != m.beta.range(*g)) {
    throw std::domain_error("monomial parts have different ranges");
  }
  Element x;
  x.graph_ = std::move(g);
  x.field_ = f;
  add_term(x.terms_, m, coeff);
  x.normalized_ = all_reduced(*x.graph_, x.terms_);
  return x;
}

Element Element::from_terms(GraphPtr g, FieldId f,
                            std::map<Monomial, FieldElement> terms) {
  Element x;
  x.graph_ = std::move(g);
  x.field_ = f;
  for (auto& [m, c] : terms) {
    if (m.alpha.range(*x.graph_) != m.beta.range(*x.graph_)) {
      throw std::domain_error("monomial parts have different ranges");
    }
    add_term(x.terms_, m, c);
  }
  x.normalized_ = all_reduced(*x.graph_, x.terms_);
  return x;
}

void Element::require_attached() const {
  if (!graph_) throw std::logic_error("uninitialized element");
}

void Element::require_compatible(const Element& o) const {
  require_attached();
  o.require_attached();
  if (!structurally_equal(*graph_, *o.graph_)) {
    throw std::invalid_argument("elements live over different graphs");
  }
  if (!(field_ == o.field_)) {
    throw std::invalid_argument("elements live over different fields");
  }
}

Element Element::operator+(const Element& o) const {
  require_compatible(o);
  Element x;
  x.graph_ = graph_;
  x.field_ = field_;
  x.terms_ = terms_;
  for (const auto& [m, c] : o.terms_) add_term(x.terms_, m, c);
  x.normalized_ = normalized_ && o.normalized_;
  return x;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator-() const {
  return scaled(-FieldElement::one(field_));
}

Element Element::scaled(const FieldElement& c) const {
  require_attached();
  Element x;
  x.graph_ = graph_;
  x.field_ = field_;
  if (!c.is_zero()) {
    for (const auto& [m, k] : terms_) x.terms_.emplace(m, k * c);
  }
  x.normalized_ = normalized_ || x.terms_.empty();
  return x;
}

std::optional<Monomial> monomial_product(const Graph& g, const Monomial& m1,
                                         const Monomial& m2) {
  // (alpha beta^*)(gamma delta^*)
  if (is_prefix(m1.beta, m2.alpha)) {
    Path rest = strip_prefix(g, m1.beta, m2.alpha);  // gamma = beta rest
    return Monomial{compose(g, m1.alpha, rest), m2.beta};
  }
  if (is_prefix(m2.alpha, m1.beta)) {
    Path rest = strip_prefix(g, m2.alpha, m1.beta);  // beta = gamma rest
    return Monomial{m1.alpha, compose(g, m2.beta, rest)};
  }
  return std::nullopt;
}

Element multiply_raw(const Element& x, const Element& y) {
  if (!structurally_equal(*x.graph(), *y.graph()) ||
      !(x.field() == y.field())) {
    throw std::invalid_argument("elements live over different graphs/fields");
  }
  std::map<Monomial, FieldElement> terms;
  const Graph& g = *x.graph();
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      if (auto m = monomial_product(g, m1, m2)) {
        FieldElement c = c1 * c2;
        if (!c.is_zero()) {
          auto [it, inserted] = terms.try_emplace(*m, c);
          if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
          }
        }
      }
    }
  }
  return Element::from_terms(x.graph(), x.field(), std::move(terms));
}

Element Element::operator*(const Element& o) const {
  return multiply_raw(*this, o).normal_form();
}

Element Element::normal_form() const {
  require_attached();
  if (normalized_) return *this;
  const Graph& g = *graph_;
  SpecialEdgeSelection sel(g);
  std::map<Monomial, FieldElement> work = terms_;
  std::map<Monomial, FieldElement> done;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = it->first;
    FieldElement c = it->second;
    work.erase(it);
    if (is_reduced(sel, m)) {
      add_term(done, m, c);
      continue;
    }
    // m = (alpha e, beta e) with e the special edge of the regular vertex
    // v = s(e); rewrite via v = sum of f f^* over s(f) = v.
    int e = m.alpha.last_edge();
    int v = g.edge_source(e);
    Path a = path_chop(g, m.alpha);
    Path b = path_chop(g, m.beta);
    add_term(work, Monomial{a, b}, c);
    for (int f : g.out_edges(v)) {
      if (f == e) continue;
      add_term(work, Monomial{path_append(g, a, f), path_append(g, b, f)}, -c);
    }
  }
  Element out;
  out.graph_ = graph_;
  out.field_ = field_;
  out.terms_ = std::move(done);
  out.normalized_ = true;
  return out;
}

bool equals(const Element& x, const Element& y) {
  return (x - y).normal_form().term_count() == 0;
}

std::map<int, Element> Element::degree_decompose() const {
  Element nf = normal_form();
  std::map<int, std::map<Monomial, FieldElement>> buckets;
  for (const auto& [m, c] : nf.terms_) buckets[m.degree()][m] = c;
  std::map<int, Element> out;
  for (auto& [d, terms] : buckets) {
    out.emplace(d, from_terms(graph_, field_, std::move(terms)));
  }
  return out;
}

std::optional<int> Element::homogeneous_degree() const {
  Element nf = normal_form();
  if (nf.terms_.empty()) return std::nullopt;
  int d = nf.terms_.begin()->first.degree();
  for (const auto& [m, c] : nf.terms_) {
    if (m.degree() != d) {
      throw std::domain_error("element is not homogeneous");
    }
  }
  return d;
}

Element Element::bar() const {
  require_attached();
  Element x;
  x.graph_ = graph_;
  x.field_ = field_;
  for (const auto& [m, c] : terms_) {
    x.terms_.emplace(Monomial{m.beta, m.alpha}, c);
  }
  x.normalized_ = normalized_;  // reducibility is symmetric in the two parts
  return x;
}

bool Element::is_ghost_polynomial() const {
  for (const auto& [m, c] : normal_form().terms_) {
    if (m.alpha.length() != 0) return false;
  }
  return true;
}

bool Element::is_real_polynomial() const {
  for (const auto& [m, c] : normal_form().terms_) {
    if (m.beta.length() != 0) return false;
  }
  return true;
}

namespace {

std::string monomial_str(const Graph& g, const Monomial& m) {
  if (m.alpha.is_vertex() && m.beta.is_vertex()) {
    return g.vertex_name(m.alpha.source());
  }
  std::string s;
  for (int e : m.alpha.edge_indices()) {
    if (!s.empty()) s += '*';
    s += g.edge(e).id;
  }
  const auto& ghost = m.beta.edge_indices();
  for (auto it = ghost.rbegin(); it != ghost.rend(); ++it) {
    if (!s.empty()) s += '*';
    s += g.edge(*it).id + "'";
  }
  return s;
}

}  // namespace

std::string Element::str() const {
  if (!graph_ || terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    std::string term = monomial_str(*graph_, m);
    if (mag != "1") term = mag + "*" + term;
    if (first) {
      out = (neg ? "-" : "") + term;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + term;
    }
  }
  return out;
}

std::string to_string(const Element& x) { return x.str(); }

Element local_unit(GraphPtr g, FieldId f, int n) {
  if (n < 1 || n > g->vertex_count()) {
    throw std::invalid_argument("local unit index out of range: " +
                                std::to_string(n));
  }
  Element t = Element::zero(g, f);
  for (int v = 0; v < n; ++v) t = t + Element::vertex(g, f, v);
  return t;
}

int filtration_level(const Element& x) {
  Element nf = x.normal_form();
  int level = 0;
  for (const auto& [m, c] : nf.terms()) {
    if (m.degree() != 0) {
      throw std::domain_error("filtration level requires a degree-0 element");
    }
    level = std::max(level, m.alpha.length());
  }
  return level;
}

FieldMatrix gn_matrix_form(const Element& x, int n, int v) {
  const Graph& g = *x.graph();
  std::vector<Path> basis;
  for (const Path& p : paths_of_length(g, n)) {
    if (p.range(g) == v) basis.push_back(p);
  }
  std::map<Path, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(basis[i], static_cast<int>(i));
  }
  std::size_t m = basis.size();
  FieldMatrix out(m, std::vector<FieldElement>(
                         m, FieldElement::zero(x.field())));
  for (const auto& [mono, c] : x.terms()) {
    auto i = index.find(mono.alpha);
    auto j = index.find(mono.beta);
    if (i == index.end() || j == index.end()) {
      throw std::domain_error("element lies outside the span of length-" +
                              std::to_string(n) + " monomials at " +
                              g.vertex_name(v));
    }
    out[i->second][j->second] += c;
  }
  return out;
}

Element transport_by_names(const Element& x, GraphPtr target) {
  const Graph& from = *x.graph();
  const Graph& to = *target;
  auto map_path = [&](const Path& p) {
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
        throw std::invalid_argument("target graph lacks edge " +
                                    from.edge(e).id);
      }
      edges.push_back(te);
    }
    return Path(to, src, std::move(edges));
  };
  std::map<Monomial, FieldElement> terms;
  for (const auto& [m, c] : x.terms()) {
    terms.emplace(Monomial{map_path(m.alpha), map_path(m.beta)}, c);
  }
  return Element::from_terms(std::move(target), x.field(), std::move(terms));
}

GhostExtraction extract_ghost_polynomial(const Element& y0) {
  const GraphPtr& gp = y0.graph();
  const Graph& g = *gp;
  if (!g.is_row_finite()) {
    throw std::domain_error("ghost extraction requires a row-finite graph");
  }
  if (g.has_sinks()) {
    throw std::domain_error("ghost extraction requires a graph with no sinks");
  }
  Element y = y0.normal_form();
  if (y.term_count() == 0) {
    throw std::invalid_argument("ghost extraction requires a nonzero element");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    Element vy = Element::vertex(gp, y.field(), v) * y;
    if (vy.term_count() == 0) continue;
    int n = 0;
    for (const auto& [m, c] : vy.terms()) {
      n = std::max(n, m.alpha.length());
    }
    for (const Path& beta : paths_of_length(g, n)) {
      Element x = Element::ghost_path(gp, y.field(), beta) * vy;
      if (x.term_count() != 0) {
        if (!x.is_ghost_polynomial()) {
          throw std::logic_error("ghost extraction produced a non-ghost result");
        }
        return GhostExtraction{x, v, beta};
      }
    }
  }
  throw std::logic_error("ghost extraction found no witness");
}

}  // namespace lpa
