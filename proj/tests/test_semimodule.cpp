#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "polysemi/fixtures.hpp"
#include "polysemi/semimodule.hpp"

using namespace polysemi;

namespace {

LatticePolytope mk(int dim, std::initializer_list<LatticePoint> pts) {
  return hull(dim, std::vector<LatticePoint>(pts));
}

// Independent rank oracle: materialize the whole degree piece as the join
// closure of its generators and count elements that are not joins of their
// strict subelements.
long closure_rank(const std::vector<LatticePolytope>& gens) {
  std::set<LatticePolytope> closure(gens.begin(), gens.end());
  for (;;) {
    std::set<LatticePolytope> next = closure;
    for (const auto& a : closure)
      for (const auto& b : closure) next.insert(oplus(a, b));
    if (next.size() == closure.size()) break;
    closure = std::move(next);
  }
  long rank = 0;
  for (const auto& x : closure) {
    LatticePolytope join = LatticePolytope::zero(x.dim());
    for (const auto& y : closure) {
      if (!(y == x) && contains(x, y)) join = oplus(join, y);
    }
    if (!(join == x)) ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("canonical solutions of the hexagon equations") {
  auto h = fixtures::hexagon();
  auto cs = canonical_solution(h.hexagon, {h.p2});
  REQUIRE(cs.has_value());
  CHECK(cs->entries[0] == h.p4);

  auto cs2 = canonical_solution(h.hexagon, {h.p1});
  REQUIRE(cs2.has_value());
  CHECK(cs2->entries[0] == h.p3);

  auto ident = canonical_solution(h.p1, {h.p1});
  REQUIRE(ident.has_value());
  CHECK(ident->entries[0] == LatticePolytope::point(origin_point(2)));

  auto tri = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto cs3 = canonical_solution(
      tri, {mk(3, {{1, 0, 0}, {0, 1, 0}}), mk(3, {{0, 1, 0}, {0, 0, 1}})});
  REQUIRE(cs3.has_value());
  CHECK(cs3->entries[0] == LatticePolytope::point(origin_point(3)));
  CHECK(cs3->entries[1] == LatticePolytope::point(origin_point(3)));

  CHECK(!canonical_solution(h.p3, {h.p2}).has_value());
}

TEST_CASE("solution enumeration is complete and dominated by the canonical one") {
  auto h = fixtures::hexagon();
  auto square = h.p1;
  auto vseg = mk(2, {{0, 0}, {0, 1}});
  auto en = enumerate_solutions(square, {vseg}, 100000);
  CHECK(en.complete);
  bool has_hseg = false;
  for (const auto& s : en.solutions) {
    if (s.entries[0] == mk(2, {{0, 0}, {1, 0}})) has_hseg = true;
  }
  CHECK(has_hseg);

  auto pt = LatticePolytope::point(LatticePoint{1, 1});
  auto en2 = enumerate_solutions(pt, {LatticePolytope::point(origin_point(2))}, 1000);
  CHECK(en2.solutions.size() == 1);
  CHECK(en2.solutions[0].entries[0] == pt);

  auto en3 = enumerate_solutions(h.hexagon, {h.p1, h.p2}, 100000);
  CHECK(en3.complete);
  auto canon = canonical_solution(h.hexagon, {h.p1, h.p2});
  REQUIRE(canon.has_value());
  CHECK(canon->entries[0] == h.p3);
  CHECK(canon->entries[1] == h.p4);
  bool canon_listed = false;
  for (const auto& s : en3.solutions) {
    if (s == *canon) canon_listed = true;
    for (size_t i = 0; i < s.entries.size(); ++i) {
      if (!s.entries[i].is_zero()) CHECK(contains(canon->entries[i], s.entries[i]));
    }
  }
  CHECK(canon_listed);
}

TEST_CASE("maximality of canonical solutions on random instances") {
  testing::Gen gen(41);
  int done = 0;
  for (int iter = 0; iter < 2000 && done < 500; ++iter) {
    int dim = 2;
    auto p1 = gen.nonzero(dim, 1);
    auto p2 = gen.nonzero(dim, 1);
    auto r1 = gen.nonzero(dim, 1);
    auto r2 = gen.nonzero(dim, 1);
    auto w = oplus(odot(p1, r1), odot(p2, r2));
    auto canon = canonical_solution(w, {p1, p2});
    REQUIRE(canon.has_value());  // solvable by construction
    auto en = enumerate_solutions(w, {p1, p2}, 200000);
    if (!en.complete) continue;
    ++done;
    CHECK(!en.solutions.empty());
    for (const auto& s : en.solutions) {
      for (size_t i = 0; i < s.entries.size(); ++i) {
        if (!s.entries[i].is_zero()) CHECK(contains(canon->entries[i], s.entries[i]));
      }
    }
  }
  CHECK(done >= 500);
}

TEST_CASE("canonical solutions with a summand constraint") {
  auto h = fixtures::hexagon();
  auto hseg = mk(2, {{0, 0}, {1, 0}});
  auto vseg = mk(2, {{0, 0}, {0, 1}});
  auto square = h.p1;
  auto v = LatticePolytope::point(LatticePoint{1, 0});
  auto w = odot(v, square);
  auto wrt = canonical_solution_wrt(w, {hseg, vseg}, v);
  auto plain = canonical_solution(square, {hseg, vseg});
  REQUIRE(wrt.has_value());
  REQUIRE(plain.has_value());
  for (size_t i = 0; i < wrt->entries.size(); ++i) {
    const auto& e = plain->entries[i];
    CHECK(wrt->entries[i] == (e.is_zero() ? e : odot(v, e)));
  }

  auto origin = LatticePolytope::point(origin_point(2));
  auto same = canonical_solution_wrt(h.hexagon, {h.p2}, origin);
  REQUIRE(same.has_value());
  CHECK(same->entries[0] == h.p4);

  // P1 is not a summand of P4, so nothing survives the constraint
  CHECK(!canonical_solution_wrt(h.hexagon, {h.p2}, h.p1).has_value());
}

TEST_CASE("the divided-solution identity holds on random instances") {
  testing::Gen gen(43);
  int done = 0;
  for (int iter = 0; iter < 3000 && done < 500; ++iter) {
    int dim = static_cast<int>(gen.uniform(1, 2));
    auto p1 = gen.nonzero(dim, 2);
    auto p2 = gen.nonzero(dim, 2);
    auto u = oplus(odot(p1, gen.nonzero(dim, 1)), odot(p2, gen.nonzero(dim, 1)));
    auto v = gen.nonzero(dim, 2);
    auto w = odot(v, u);
    auto cu = canonical_solution(u, {p1, p2});
    if (!cu) continue;
    ++done;
    auto cwv = canonical_solution_wrt(w, {p1, p2}, v);
    REQUIRE(cwv.has_value());
    for (size_t i = 0; i < cu->entries.size(); ++i) {
      const auto& e = cu->entries[i];
      CHECK(cwv->entries[i] == (e.is_zero() ? e : odot(v, e)));
    }
  }
  CHECK(done >= 500);
}

TEST_CASE("membership in generated sub-semimodules") {
  auto h = fixtures::hexagon();
  auto m1 = SubSemimodule::make(2, {h.p1});
  CHECK(membership(h.hexagon, m1));

  auto lift = fixtures::lifting_pair();
  auto m2 = SubSemimodule::make(2, {lift.p1, lift.p2});
  CHECK(!membership(lift.hidden, m2));

  auto m3 = SubSemimodule::make(2, {h.p2, h.p3});
  CHECK(membership(h.p2, m3));
  CHECK(membership(h.p3, m3));
}

TEST_CASE("minimal generators are the join-irreducibles") {
  auto c12 = mk(3, {{1, 0, 0}, {0, 1, 0}});
  auto c13 = mk(3, {{1, 0, 0}, {0, 0, 1}});
  auto c23 = mk(3, {{0, 1, 0}, {0, 0, 1}});
  auto tri = mk(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto mg = minimal_generators({c12, c13, c23, tri});
  std::vector<LatticePolytope> expected{c12, c13, c23};
  std::sort(expected.begin(), expected.end());
  CHECK(mg == expected);
  CHECK(mg.size() == 3);

  CHECK(minimal_generators({tri}) == std::vector<LatticePolytope>{tri});

  // every degree-2 polytope of A[2]: reduced to the three points
  std::vector<LatticePolytope> all_deg2;
  for (const auto& p : polytopes_in_box(2, 2)) {
    if (auto d = degree(p); d && *d == 2) all_deg2.push_back(p);
  }
  auto mg2 = minimal_generators(all_deg2);
  CHECK(mg2.size() == 3);
  for (const auto& g : mg2) CHECK(g.is_point());
}

TEST_CASE("minimal generators do not depend on the presented superset") {
  testing::Gen gen(47);
  for (int iter = 0; iter < 500; ++iter) {
    int dim = static_cast<int>(gen.uniform(2, 3));
    long deg = gen.uniform(1, 2);
    std::vector<LatticePolytope> s;
    for (int j = 0; j < 4; ++j) {
      auto pts = degree_points(dim, deg);
      std::vector<LatticePoint> chosen;
      int k = static_cast<int>(gen.uniform(1, 3));
      for (int t = 0; t < k; ++t)
        chosen.push_back(pts[gen.uniform(0, static_cast<long>(pts.size()) - 1)]);
      s.push_back(hull(dim, chosen));
    }
    auto base = minimal_generators(s);
    auto enlarged = s;
    enlarged.push_back(oplus(s[0], s[1]));
    enlarged.push_back(oplus(s[2], oplus(s[1], s[3])));
    CHECK(minimal_generators(enlarged) == base);
    CHECK(minimal_generators(base) == base);
  }
}

TEST_CASE("graded pieces and their ranks") {
  auto ambient2 = SubSemimodule::make(2, {LatticePolytope::point(origin_point(2))});
  CHECK(graded_piece(ambient2, 3).rank() == 4);

  auto c12 = mk(3, {{1, 0, 0}, {0, 1, 0}});
  auto c13 = mk(3, {{1, 0, 0}, {0, 0, 1}});
  auto c23 = mk(3, {{0, 1, 0}, {0, 0, 1}});
  auto m = SubSemimodule::make(3, {c12, c23, c13});
  CHECK(graded_piece(m, 1).rank() == 3);

  auto single = SubSemimodule::make(2, {LatticePolytope::point(LatticePoint{1, 0})});
  CHECK(graded_piece(single, 0).rank() == 0);
  CHECK(graded_piece(single, 0).generators_under_oplus.empty());
}

TEST_CASE("piece generators multiply into higher pieces") {
  testing::Gen gen(53);
  for (int iter = 0; iter < 500; ++iter) {
    int dim = static_cast<int>(gen.uniform(2, 3));
    auto pts = degree_points(dim, gen.uniform(1, 2));
    std::vector<LatticePoint> chosen;
    int k = static_cast<int>(gen.uniform(1, 3));
    for (int t = 0; t < k; ++t)
      chosen.push_back(pts[gen.uniform(0, static_cast<long>(pts.size()) - 1)]);
    auto g = hull(dim, chosen);
    auto m = SubSemimodule::make(dim, {g});
    long d = *degree(g);
    auto piece = graded_piece(m, d + 1);
    for (int j = 1; j <= dim; ++j) {
      auto shifted = odot(g, LatticePolytope::point(coordinate_point(j, dim)));
      CHECK(std::find(piece.generators_under_oplus.begin(), piece.generators_under_oplus.end(),
                      shifted) != piece.generators_under_oplus.end());
    }
  }
}

TEST_CASE("ambient ranks match the binomial count") {
  for (int n = 1; n <= 4; ++n) {
    auto m = SubSemimodule::make(n, {LatticePolytope::point(origin_point(n))});
    for (long k = 0; k <= 6; ++k) {
      Int expect = 1;
      for (long j = 1; j <= k; ++j) {
        expect *= n - 1 + j;
        expect /= j;
      }
      CHECK(graded_piece(m, k).rank() == to_long(expect));
    }
  }
}

TEST_CASE("piece ranks agree with the closure oracle") {
  auto fix = cm_fixture(1);
  for (long k = 1; k <= 3; ++k) {
    auto piece = graded_piece(fix, k);
    CHECK(piece.rank() == closure_rank(piece.generators_under_oplus));
  }
  auto c12 = mk(3, {{1, 0, 0}, {0, 1, 0}});
  auto c23 = mk(3, {{0, 1, 0}, {0, 0, 1}});
  auto m = SubSemimodule::make(3, {c12, c23});
  for (long k = 1; k <= 2; ++k) {
    auto piece = graded_piece(m, k);
    CHECK(piece.rank() == closure_rank(piece.generators_under_oplus));
  }
}

TEST_CASE("series of the ambient semiring") {
  auto m3 = SubSemimodule::make(3, {LatticePolytope::point(origin_point(3))});
  auto s = newton_hilbert_series(m3, 5);
  CHECK(s.coefficients == std::vector<long>({1, 3, 6, 10, 15, 21}));
  REQUIRE(s.rational_form.has_value());
  CHECK(s.rational_form->num == std::vector<Int>{Int(1)});
  CHECK(s.rational_form->den == std::vector<Int>({Int(1), Int(-3), Int(3), Int(-1)}));
}

TEST_CASE("series of the depth-one family, computed honestly") {
  // the translate generators stay join-irreducible, so each degree
  // contributes (d+1) * C(k-d+2, 2) minimal generators
  auto fix = cm_fixture(1);
  auto s = newton_hilbert_series(fix, 4);
  CHECK(s.coefficients == std::vector<long>({0, 2, 6, 12, 20}));
  REQUIRE(s.rational_form.has_value());
  CHECK(s.rational_form->num == std::vector<Int>({Int(0), Int(2)}));
  CHECK(s.rational_form->den == std::vector<Int>({Int(1), Int(-3), Int(3), Int(-1)}));
}

TEST_CASE("series of a single point generator") {
  LatticePoint p{0, 1, 1};
  auto m = SubSemimodule::make(3, {LatticePolytope::point(p)});
  auto s = newton_hilbert_series(m, 3);
  CHECK(s.coefficients == std::vector<long>({0, 0, 1, 3}));
}

TEST_CASE("coordinate regularity of the ambient semiring") {
  for (int n = 2; n <= 3; ++n) {
    auto m = SubSemimodule::make(n, {LatticePolytope::point(origin_point(n))});
    for (int i = 1; i <= n; ++i) {
      auto v = coordinate_regular(m, i, 4);
      CHECK(v.regular);
    }
  }
}

TEST_CASE("a translated generator is not coordinate regular") {
  // M generated by the point e_1: the generator itself carries e_1 as a
  // summand while the degree-0 piece is empty, so the translate condition
  // already fails at k = 0
  auto m = SubSemimodule::make(2, {LatticePolytope::point(LatticePoint{1, 0})});
  auto v = coordinate_regular(m, 1, 3);
  CHECK(!v.regular);
  REQUIRE(v.failed_degree.has_value());
  CHECK(*v.failed_degree == 0);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == LatticePolytope::point(LatticePoint{1, 0}));
}

TEST_CASE("analysis of the ambient semiring") {
  auto m = SubSemimodule::make(3, {LatticePolytope::point(origin_point(3))});
  auto rep = cm_analysis(m, 5);
  CHECK(rep.certified);
  REQUIRE(rep.depth.has_value());
  CHECK(*rep.depth == 0);  // trivially Artinian over itself
  REQUIRE(rep.artinian_k0.has_value());
  CHECK(*rep.artinian_k0 == 0);
  REQUIRE(rep.series.has_value());
  REQUIRE(rep.series->rational_form.has_value());
  CHECK(rep.series->rational_form->num == std::vector<Int>{Int(1)});
  CHECK(rep.series->rational_form->den == std::vector<Int>({Int(1), Int(-3), Int(3), Int(-1)}));
}

TEST_CASE("degree-two points of the plane are Artinian from degree two") {
  std::vector<LatticePolytope> gens;
  for (const auto& p : degree_points(2, 2)) gens.push_back(LatticePolytope::point(p));
  auto m = SubSemimodule::make(2, gens);
  auto rep = cm_analysis(m, 5);
  CHECK(rep.certified);
  CHECK(*rep.depth == 0);
  CHECK(*rep.artinian_k0 == 2);
  REQUIRE(rep.series.has_value());
  CHECK(rep.series->coefficients == std::vector<long>({0, 0, 3, 4, 5, 6}));
}

TEST_CASE("the depth-one family fails the rank condition as defined") {
  // at degree 2 four minimal generators avoid e_1 while the literal
  // restriction to x_1 = 0 is empty; no coordinate sequence certifies the
  // family within the bound
  auto fix = cm_fixture(1);
  auto v = coordinate_regular(fix, 1, 3);
  CHECK(!v.regular);
  auto rep = cm_analysis(fix, 4);
  CHECK(!rep.certified);
}

TEST_CASE("the fixture generators match the construction") {
  auto f1 = cm_fixture(1);
  CHECK(f1.generators.size() == 2);
  CHECK(f1.generators[0] == mk(3, {{0, 0, 1}, {1, 0, 0}}));
  CHECK(f1.generators[1] == mk(3, {{0, 1, 0}, {1, 0, 0}}));
  auto f2 = cm_fixture(2);
  CHECK(f2.generators.size() == 3);
  for (const auto& g : f2.generators) CHECK(*degree(g) == 2);
}

TEST_CASE("series assembled by the analysis matches direct ranks") {
  testing::Gen gen(59);
  for (int iter = 0; iter < 40; ++iter) {
    int dim = 2;
    std::vector<LatticePolytope> gens;
    int k = static_cast<int>(gen.uniform(1, 3));
    for (int j = 0; j < k; ++j) {
      auto pts = degree_points(dim, gen.uniform(0, 2));
      gens.push_back(
          LatticePolytope::point(pts[gen.uniform(0, static_cast<long>(pts.size()) - 1)]));
    }
    auto m = SubSemimodule::make(dim, gens);
    auto rep = cm_analysis(m, 5);
    if (!rep.certified || !rep.series || !rep.series->rational_form) continue;
    auto direct = newton_hilbert_series(m, 5);
    CHECK(expand_series(*rep.series->rational_form, 5) == direct.coefficients);
  }
}
