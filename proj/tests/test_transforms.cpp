#include <doctest.h>

#include "catalogue.hpp"
#include "lpa/expr.hpp"
#include "lpa/graph_io.hpp"
#include "lpa/properties.hpp"
#include "lpa/transforms.hpp"

using namespace lpa;

namespace {
const FieldId kQ = FieldId::rationals();

AdmissiblePair ex5_pair(const Graph& g) {
  return parse_pair(g, "H={y,z};S={v}");
}
}  // namespace

TEST_CASE("quotient graph reproduces the worked example") {
  GraphPtr ex5 = cat::ex5();
  GraphPtr q = quotient_graph(ex5, ex5_pair(*ex5));
  CHECK(save_graph(*q) ==
        "vertex u\n"
        "vertex v\n"
        "vertex w\n"
        "vertex x\n"
        "vertex w'\n"
        "edge uv u v\n"
        "edge ux u x\n"
        "edge uw u w\n"
        "edge vx v x\n"
        "edge wx w x\n"
        "edge wu w u\n"
        "edge uw' u w'\n");
  // v lost its bundle and became regular; x became a sink; w' is a sink.
  CHECK(q->is_regular(q->require_vertex("v")));
  CHECK(q->is_sink(q->require_vertex("x")));
  CHECK(q->is_sink(q->require_vertex("w'")));
}

TEST_CASE("quotient by the trivial pairs") {
  GraphPtr ex5 = cat::ex5();
  GraphPtr same = quotient_graph(ex5, AdmissiblePair{{}, {}});
  CHECK(save_graph(*same) == save_graph(*ex5));

  VertexSet all;
  for (int v = 0; v < ex5->vertex_count(); ++v) all.insert(v);
  GraphPtr empty = quotient_graph(ex5, AdmissiblePair{all, {}});
  CHECK(empty->vertex_count() == 0);
  CHECK(empty->edge_count() == 0);
}

TEST_CASE("quotient keeps surviving bundles") {
  // A bundle with one target inside H and one outside keeps the outside one.
  GraphPtr g = load_valid_graph(
      "vertex a\nvertex b\nvertex c\nedge e b c\nbundle a b,c\n");
  // H = {c}: hereditary (c is a sink), saturated (b has an escape via... b's
  // only edge lands in c, so saturation forces b unless b is singular; b is
  // regular, so H = {c} is NOT saturated. Use H = {b, c}.
  AdmissiblePair p{{g->require_vertex("b"), g->require_vertex("c")}, {}};
  GraphPtr q = quotient_graph(g, p);
  CHECK(q->vertex_count() == 1);
  CHECK_FALSE(q->has_bundle(0));  // both targets died with H

  GraphPtr g2 = load_valid_graph(
      "vertex a\nvertex b\nvertex c\nedge e b c\nedge f c c\nbundle a b,c\n");
  AdmissiblePair p2{{}, {}};
  CHECK(save_graph(*quotient_graph(g2, p2)) == save_graph(*g2));
}

TEST_CASE("quotient bundles spawn primed copies for breaking targets") {
  // b is a breaking vertex of H = {h} and also a bundle target of a, so the
  // quotient bundle of a points at both b and b'.
  GraphPtr g = load_valid_graph(
      "vertex a\nvertex b\nvertex h\n"
      "edge e b a\nbundle a b\nbundle b h\n");
  AdmissiblePair p{{g->require_vertex("h")}, {}};
  CHECK(breaking_vertices(*g, p.H) == VertexSet{g->require_vertex("b")});
  GraphPtr q = quotient_graph(g, p);
  CHECK(save_graph(*q) ==
        "vertex a\nvertex b\nvertex b'\n"
        "edge e b a\nbundle a b,b'\n");
}

TEST_CASE("quotient naming collisions are rejected") {
  // The graph already contains w', so priming the breaking vertex w clashes.
  GraphPtr g = load_valid_graph(
      "vertex a\nvertex w\nvertex w'\nvertex h\n"
      "edge e w a\nbundle w h\n");
  AdmissiblePair p{{g->require_vertex("h")}, {}};
  CHECK(breaking_vertices(*g, p.H) == VertexSet{g->require_vertex("w")});
  CHECK_THROWS_AS(quotient_graph(g, p), std::domain_error);
}

TEST_CASE("quotient homomorphism case table") {
  GraphPtr ex5 = cat::ex5();
  AdmissiblePair p = ex5_pair(*ex5);
  GraphPtr q = quotient_graph(ex5, p);

  // Generators of the ideal are killed.
  for (const Element& gen : ideal_generators(ex5, kQ, p)) {
    CHECK(quotient_hom(p, gen).term_count() == 0);
  }
  // Vertices outside H and outside B_H \ S map to themselves.
  CHECK(equals(quotient_hom(p, parse_element(ex5, kQ, "u")),
               parse_element(q, kQ, "u")));
  // A vertex in B_H \ S maps to v + v'.
  CHECK(equals(quotient_hom(p, parse_element(ex5, kQ, "w")),
               parse_element(q, kQ, "w + w'")));
  // Its gap idempotent maps to the primed vertex.
  CHECK(equals(quotient_hom(p, vH_element(ex5, kQ, p.H,
                                          ex5->require_vertex("w"))),
               parse_element(q, kQ, "w'")));
  // Edges into B_H \ S split: uw maps to uw + uw'.
  CHECK(equals(quotient_hom(p, parse_element(ex5, kQ, "uw")),
               parse_element(q, kQ, "uw + uw'")));
  // Ghost edges split symmetrically. (Note: over q the token uw' denotes the
  // primed real edge by longest-match, so the expectation is built directly.)
  CHECK(equals(quotient_hom(p, Element::ghost_edge(ex5, kQ,
                                                   ex5->edge_index("uw"))),
               Element::ghost_edge(q, kQ, q->edge_index("uw")) +
                   Element::ghost_edge(q, kQ, q->edge_index("uw'"))));
  // Edges into H die.
  CHECK(quotient_hom(p, parse_element(ex5, kQ, "yz")).term_count() == 0);

  // Surviving vertices map to nonzero.
  for (int v = 0; v < ex5->vertex_count(); ++v) {
    if (p.H.count(v)) continue;
    CHECK(quotient_hom(p, Element::vertex(ex5, kQ, v)).term_count() > 0);
  }
}

TEST_CASE("quotient homomorphism is a graded ring homomorphism") {
  cat::Rng rng(31);
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    for (const AdmissiblePair& p : admissible_pairs(*g)) {
      for (int i = 0; i < 8; ++i) {
        Element x = cat::random_element(rng, g, kQ);
        Element y = cat::random_element(rng, g, kQ);
        CHECK(equals(quotient_hom(p, x * y),
                     quotient_hom(p, x) * quotient_hom(p, y)));
        CHECK(equals(quotient_hom(p, x + y),
                     quotient_hom(p, x) + quotient_hom(p, y)));
      }
      for (int d = -2; d <= 2; ++d) {
        Element x = cat::random_homogeneous(rng, g, kQ, d);
        Element img = quotient_hom(p, x);
        if (img.term_count() == 0) continue;
        CHECK(img.homogeneous_degree() == d);
      }
    }
  }
}

TEST_CASE("restriction graph reproduces the worked example") {
  GraphPtr ex5 = cat::ex5();
  GraphPtr r = restriction_graph(ex5, ex5_pair(*ex5));
  CHECK(save_graph(*r) ==
        "vertex v\n"
        "vertex y\n"
        "vertex z\n"
        "edge yz y z\n"
        "edge zy z y\n"
        "bundle v y\n");

  VertexSet all;
  for (int v = 0; v < ex5->vertex_count(); ++v) all.insert(v);
  CHECK(save_graph(*restriction_graph(ex5, AdmissiblePair{all, {}})) ==
        save_graph(*ex5));

  GraphPtr a3 = cat::a3();
  GraphPtr sub = hereditary_subgraph(a3, {a3->require_vertex("w")});
  CHECK(sub->vertex_count() == 1);
  CHECK(sub->edge_count() == 0);
  CHECK_THROWS_AS(hereditary_subgraph(a3, {a3->require_vertex("u")}),
                  std::invalid_argument);
}

TEST_CASE("embedding of the restriction algebra") {
  GraphPtr ex5 = cat::ex5();
  AdmissiblePair p = ex5_pair(*ex5);
  GraphPtr r = restriction_graph(ex5, p);

  CHECK(equals(embed_restriction(ex5, p, parse_element(r, kQ, "y")),
               parse_element(ex5, kQ, "y")));
  CHECK(equals(embed_restriction(ex5, p, parse_element(r, kQ, "v")),
               vH_element(ex5, kQ, p.H, ex5->require_vertex("v"))));

  cat::Rng rng(41);
  for (int i = 0; i < 30; ++i) {
    Element x = cat::random_element(rng, r, kQ);
    Element y = cat::random_element(rng, r, kQ);
    Element ex = embed_restriction(ex5, p, x);
    Element ey = embed_restriction(ex5, p, y);
    CHECK(equals(embed_restriction(ex5, p, x * y), ex * ey));
    CHECK(equals(embed_restriction(ex5, p, x + y), ex + ey));
    // Images stay inside the ideal.
    CHECK(in_graded_ideal(p, ex));
    // Injectivity shadow: the embedding kills only zero.
    CHECK(x.is_zero() == ex.is_zero());
  }
}

TEST_CASE("desingularization") {
  // Row-finite sink-free graphs are untouched.
  for (GraphPtr g : {cat::r1(), cat::r2(), cat::c3()}) {
    CHECK(save_graph(*desingularize(g, 3)) == save_graph(*g));
  }

  // A single sink grows a head-tail.
  GraphPtr point = load_valid_graph("vertex w\n");
  CHECK(save_graph(*desingularize(point, 3)) ==
        "vertex w\n"
        "vertex w#1\n"
        "vertex w#2\n"
        "vertex w#3\n"
        "edge w#f1 w w#1\n"
        "edge w#f2 w#1 w#2\n"
        "edge w#f3 w#2 w#3\n");

  // An emitter with one explicit edge and a bundle redistributes the
  // explicit edge first, then bundle copies.
  GraphPtr ex5 = cat::ex5();
  GraphPtr d = desingularize(ex5, 2);
  CHECK(d->is_row_finite());
  int v1 = d->require_vertex("v#1");
  REQUIRE(d->edge_index("vx") >= 0);
  CHECK(d->edge_source(d->edge_index("vx")) == d->require_vertex("v"));
  REQUIRE(d->edge_index("v#g2") >= 0);
  CHECK(d->edge_source(d->edge_index("v#g2")) == v1);
  CHECK(d->edge_range(d->edge_index("v#g2")) == d->require_vertex("y"));
  REQUIRE(d->edge_index("v#f1") >= 0);
  CHECK(d->edge_range(d->edge_index("v#f1")) == v1);

  // x has no explicit edges: both redistributed edges are bundle-backed.
  CHECK(d->edge_index("x#g1") >= 0);
  CHECK(d->edge_index("x#g2") >= 0);

  // Off the frontier every vertex is regular.
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    GraphPtr f = desingularize(g, 3);
    CHECK(f->is_row_finite());
    for (int v = 0; v < f->vertex_count(); ++v) {
      if (f->is_regular(v)) continue;
      CHECK(f->vertex_name(v).ends_with("#3"));
    }
  }

  CHECK_THROWS_AS(desingularize(cat::r1(), 0), std::invalid_argument);
}

TEST_CASE("desingularization preserves condition (L) on cycles") {
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    if (!condition_L(*g)) continue;
    GraphPtr f = desingularize(g, 3);
    CHECK(condition_L(*f));
  }
}

TEST_CASE("cycle isomorphism generator images") {
  GraphPtr r1 = cat::r1();
  LaurentMatrix mv = cycle_iso(parse_element(r1, kQ, "v"));
  CHECK(mv.at(0, 0) == LaurentPoly::one(kQ));
  LaurentMatrix me = cycle_iso(parse_element(r1, kQ, "e"));
  CHECK(me.at(0, 0) == LaurentPoly::variable(kQ));
  LaurentMatrix mg = cycle_iso(parse_element(r1, kQ, "e'"));
  CHECK(mg.at(0, 0) == LaurentPoly::term(kQ, -1, FieldElement::one(kQ)));

  GraphPtr c3 = cat::c3();
  LaurentMatrix m1 = cycle_iso(parse_element(c3, kQ, "e1"));
  CHECK(m1.at(0, 1) == LaurentPoly::variable(kQ));
  LaurentMatrix m3 = cycle_iso(parse_element(c3, kQ, "e3"));
  CHECK(m3.at(2, 0) == LaurentPoly::variable(kQ));
  LaurentMatrix m3g = cycle_iso(parse_element(c3, kQ, "e3'"));
  CHECK(m3g.at(0, 2) == LaurentPoly::term(kQ, -1, FieldElement::one(kQ)));

  // The full cycle lands on the diagonal with exponent 3.
  LaurentMatrix mc = cycle_iso(parse_element(c3, kQ, "e1*e2*e3"));
  CHECK(mc.at(0, 0) == LaurentPoly::term(kQ, 3, FieldElement::one(kQ)));

  // The defining relations hold in the model.
  for (int i = 0; i < c3->edge_count(); ++i) {
    Element e = Element::real_edge(c3, kQ, i);
    Element ghost = Element::ghost_edge(c3, kQ, i);
    Element src = Element::vertex(c3, kQ, c3->edge_source(i));
    Element rng_v = Element::vertex(c3, kQ, c3->edge_range(i));
    CHECK(cycle_iso(src) * cycle_iso(e) == cycle_iso(e));
    CHECK(cycle_iso(ghost) * cycle_iso(e) == cycle_iso(rng_v));
    CHECK(cycle_iso(e) * cycle_iso(ghost) == cycle_iso(src));  // CK2, 1 edge
  }

  CHECK_THROWS_AS(cycle_iso(parse_element(cat::r2(), kQ, "v")),
                  std::domain_error);
  CHECK_THROWS_AS(cycle_iso(parse_element(cat::t_graph(), kQ, "v")),
                  std::domain_error);
}

TEST_CASE("cycle isomorphism round-trip") {
  cat::Rng rng(59);
  for (GraphPtr g : {cat::r1(), cat::c3()}) {
    for (int i = 0; i < 250; ++i) {
      Element x = cat::random_element(rng, g, kQ, 3, 4).normal_form();
      Element back = cycle_iso_inv(g, kQ, cycle_iso(x));
      CHECK(equals(back, x));
    }
  }

  // A matrix outside the image is rejected.
  GraphPtr c3 = cat::c3();
  LaurentMatrix bad(kQ, 3);
  bad.at(0, 0) = LaurentPoly::variable(kQ);  // exponent 1 at (0,0): 1 != 0 mod 3
  CHECK_THROWS_AS(cycle_iso_inv(c3, kQ, bad), std::domain_error);
}

TEST_CASE("normalization is semantically sound in the cycle model") {
  // The model map is applied term by term to the raw representation, so
  // agreeing images mean the rewrite preserved the element.
  cat::Rng rng(61);
  for (GraphPtr g : {cat::r1(), cat::c3()}) {
    for (int i = 0; i < 200; ++i) {
      Element x = cat::random_element(rng, g, kQ, 4, 4);
      CHECK(cycle_iso(x) == cycle_iso(x.normal_form()));
    }
  }
}
