#include <doctest.h>

#include "catalogue.hpp"
#include "lpa/properties.hpp"
#include "lpa/transforms.hpp"

using namespace lpa;

TEST_CASE("simple closed path enumeration") {
  GraphPtr r1 = cat::r1();
  auto at_v = simple_closed_paths_at(*r1, "v");
  REQUIRE(at_v.size() == 1);
  CHECK(at_v[0].str(*r1) == "e");

  GraphPtr r2 = cat::r2();
  auto p2 = simple_closed_paths_at(*r2, "v");
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].str(*r2) == "a");
  CHECK(p2[1].str(*r2) == "b");

  GraphPtr a3 = cat::a3();
  for (int v = 0; v < a3->vertex_count(); ++v) {
    CHECK(simple_closed_paths_at(*a3, v).empty());
  }

  GraphPtr ex5 = cat::ex5();
  auto at_y = simple_closed_paths_at(*ex5, "y");
  REQUIRE(at_y.size() == 1);
  CHECK(at_y[0].str(*ex5) == "yz*zy");
  CHECK_FALSE(at_y[0].bundle_backed());

  // A bundle self-target carries a bundle-backed closed path.
  GraphPtr loop = load_valid_graph("vertex v\nbundle v v\n");
  auto bp = simple_closed_paths_at(*loop, 0);
  REQUIRE(bp.size() == 1);
  CHECK(bp[0].bundle_backed());
  CHECK(bp[0].str(*loop) == "v=>v");

  CHECK_THROWS_AS(simple_closed_paths_at(*r1, "zz"), std::invalid_argument);
}

TEST_CASE("closed path counting saturates at two") {
  CHECK(closed_path_count(*cat::r1(), 0) == 1);
  CHECK(closed_path_count(*cat::r2(), 0) == 2);
  CHECK(closed_path_count(*cat::t_graph(), 0) == 1);
  CHECK(closed_path_count(*cat::a3(), 0) == 0);

  // Bundle-backed cycles count as at least two parallel paths.
  GraphPtr loop = load_valid_graph("vertex v\nbundle v v\n");
  CHECK(closed_path_count(*loop, 0) == 2);

  // A repeatable inner loop pumps the count to infinity (reported as 2).
  GraphPtr pump = load_valid_graph(
      "vertex v\nvertex w\nedge e1 v w\nedge e2 w w\nedge e3 w v\n");
  CHECK(closed_path_count(*pump, pump->require_vertex("v")) == 2);
  CHECK(closed_path_count(*pump, pump->require_vertex("w")) == 2);
}

TEST_CASE("exits") {
  GraphPtr r1 = cat::r1();
  Path e(*r1, 0, {0});
  CHECK_FALSE(has_exit(*r1, e));

  GraphPtr r2 = cat::r2();
  CHECK(has_exit(*r2, Path(*r2, 0, {r2->edge_index("a")})));

  GraphPtr t = cat::t_graph();
  CHECK(has_exit(*t, Path(*t, 0, {t->edge_index("e")})));

  // Non-closed input is rejected.
  CHECK_THROWS_AS(has_exit(*t, Path(*t, 0, {t->edge_index("f")})),
                  std::domain_error);

  // A bundle at a cycle vertex supplies an exit.
  GraphPtr g = load_valid_graph(
      "vertex v\nvertex w\nedge e v v\nbundle v w\n");
  CHECK(has_exit(*g, Path(*g, 0, {0})));
}

TEST_CASE("condition (L)") {
  CHECK_FALSE(condition_L(*cat::r1()));
  CHECK(condition_L(*cat::r2()));
  CHECK(condition_L(*cat::a3()));
  CHECK(condition_L(*cat::t_graph()));
  CHECK_FALSE(condition_L(*cat::c3()));
  CHECK_FALSE(condition_L(*cat::ex5()));  // y <-> z has no exit
  CHECK_FALSE(condition_L(*cat::two_loops()));
}

TEST_CASE("condition (K)") {
  CHECK_FALSE(condition_K(*cat::r1()));
  CHECK(condition_K(*cat::r2()));
  CHECK(condition_K(*cat::a3()));
  CHECK_FALSE(condition_K(*cat::t_graph()));  // v bases exactly one
  CHECK_FALSE(condition_K(*cat::c3()));
  CHECK_FALSE(condition_K(*cat::ex5()));
}

TEST_CASE("condition (K) agrees with the quotient characterization") {
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    CHECK(condition_K(*g) == condition_K_via_quotients(g));
  }
  // The trivial pair alone reproduces condition (L).
  GraphPtr r2 = cat::r2();
  CHECK(condition_L(*quotient_graph(r2, AdmissiblePair{{}, {}})) ==
        condition_L(*r2));

  cat::Rng rng(977);
  for (int i = 0; i < 60; ++i) {
    GraphPtr g = cat::random_graph(rng);
    CAPTURE(save_graph(*g));
    CHECK(condition_K(*g) == condition_K_via_quotients(g));
  }
}

TEST_CASE("cofinality") {
  CHECK(is_cofinal(*cat::r1()));
  CHECK(is_cofinal(*cat::a3()));   // no infinite paths at all
  CHECK(is_cofinal(*cat::r2()));
  CHECK(is_cofinal(*cat::c3()));
  CHECK_FALSE(is_cofinal(*cat::two_loops()));
  CHECK_FALSE(is_cofinal(*cat::t_graph()));  // the sink cannot reach the loop
  CHECK_FALSE(is_cofinal(*cat::ex5()));      // y cannot reach the u <-> w cycle
}

TEST_CASE("simplicity verdicts") {
  CHECK(is_simple(cat::r2()).simple);
  CHECK(is_simple(cat::a3()).simple);
  CHECK(is_simple(cat::rose(3)).simple);
  CHECK(is_simple(cat::rose(5)).simple);
  CHECK(is_simple(cat::line(2)).simple);
  CHECK(is_simple(cat::line(4)).simple);
  CHECK(is_simple(load_valid_graph("vertex v\n")).simple);
  CHECK_THROWS_AS(is_simple(load_valid_graph("")), std::invalid_argument);

  CHECK_FALSE(is_simple(cat::r1()).simple);
  CHECK_FALSE(is_simple(cat::t_graph()).simple);
  CHECK_FALSE(is_simple(cat::two_loops()).simple);
  CHECK_FALSE(is_simple(cat::c3()).simple);
  CHECK_FALSE(is_simple(cat::ex5()).simple);

  SimplicityVerdict r1 = is_simple(cat::r1());
  CHECK_FALSE(r1.condition_L);
  CHECK(r1.trivial_lattice);
  CHECK(r1.cofinal);

  SimplicityVerdict t = is_simple(cat::t_graph());
  CHECK(t.condition_L);
  CHECK_FALSE(t.condition_K);
  CHECK_FALSE(t.cofinal);
  CHECK_FALSE(t.trivial_lattice);  // {w} is saturated hereditary
  CHECK(t.singular_reach);         // everything reaches the sink w
}

TEST_CASE("the four characterizations agree on random graphs") {
  cat::Rng rng(555);
  for (int i = 0; i < 120; ++i) {
    GraphPtr g = cat::random_graph(rng);
    CAPTURE(save_graph(*g));
    CHECK_NOTHROW((void)is_simple(g));
  }
}

TEST_CASE("condition (K) holds iff no quotient has a non-graded witness") {
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    bool witness_free = true;
    for (const AdmissiblePair& p : admissible_pairs(*g)) {
      if (nongraded_ideal_witness(quotient_graph(g, p), FieldId::rationals())) {
        witness_free = false;
        break;
      }
    }
    CHECK(condition_K(*g) == witness_free);
  }
}

TEST_CASE("condition (K) implies condition (L) on the catalogue") {
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    if (condition_K(*g)) CHECK(condition_L(*g));
  }
  // T witnesses strictness: (L) holds but (K) fails.
  CHECK(condition_L(*cat::t_graph()));
  CHECK_FALSE(condition_K(*cat::t_graph()));
}

TEST_CASE("simplicity forces the trivial pair lattice") {
  for (const auto& [name, g] : cat::all()) {
    CAPTURE(name);
    if (is_simple(g).simple) {
      CHECK(admissible_pairs(*g).size() == 2);
    }
  }
}
