#include "polysemi/fixtures.hpp"

namespace polysemi {
namespace fixtures {

namespace {

LatticePolytope mk(int dim, std::initializer_list<LatticePoint> pts) {
  return hull(dim, std::vector<LatticePoint>(pts));
}

}  // namespace

Hexagon hexagon() {
  Hexagon h;
  h.p1 = mk(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  h.p2 = mk(2, {{0, 0}, {1, 0}, {1, 1}});
  h.p3 = mk(2, {{0, 0}, {1, 1}});
  h.p4 = mk(2, {{0, 0}, {0, 1}, {1, 1}});
  h.hexagon = mk(2, {{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}});
  return h;
}

GradedIdeal a_lattice_ideal(int n) {
  if (n < 2) throw error(errc::index_out_of_range, "need at least two variables");
  std::vector<Polynomial> gens;
  for (int i = 1; i < n; ++i) {
    Polynomial f = Polynomial::monomial(coordinate_point(i, n), Rat(1)) -
                   Polynomial::monomial(coordinate_point(i + 1, n), Rat(1));
    gens.push_back(std::move(f));
  }
  return GradedIdeal::make(n, std::move(gens));
}

Prism prism() {
  Prism out;
  LatticePolytope triangle = mk(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  LatticePolytope pillar = mk(3, {{0, 0, 0}, {0, 0, 1}});
  out.prism = odot(triangle, pillar);
  out.p = {
      mk(3, {{0, 0, 0}, {1, 0, 0}}),  // bottom edge of one quadrilateral face
      mk(3, {{1, 0, 0}, {0, 1, 0}}),
      mk(3, {{0, 1, 0}, {0, 0, 0}}),
  };
  out.q = {
      mk(3, {{0, 0, 1}, {1, 0, 1}}),  // the opposite (top) edges
      mk(3, {{1, 0, 1}, {0, 1, 1}}),
      mk(3, {{0, 1, 1}, {0, 0, 1}}),
  };
  return out;
}

std::vector<LatticePolytope> five_polytopes() {
  return {
      mk(2, {{0, 0}, {0, 1}}),
      mk(2, {{0, 0}}),
      mk(2, {{0, 1}}),
      mk(2, {{1, 0}}),
      mk(2, {{1, 1}}),
  };
}

std::vector<LatticePolytope> triangulated_product() {
  // rectangle [0,2]x[0,1] = square odot horizontal unit segment, split along
  // a diagonal; listing the triangles first puts the violation at the square
  return {
      mk(2, {{0, 0}, {2, 0}, {0, 1}}),
      mk(2, {{2, 0}, {2, 1}, {0, 1}}),
      mk(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
  };
}

LiftingPair lifting_pair() {
  LiftingPair out;
  out.p1 = mk(2, {{0, 3}, {2, 1}});
  out.p2 = mk(2, {{0, 3}, {1, 2}});
  out.hidden = mk(2, {{2, 1}, {1, 2}});
  return out;
}

std::vector<GradedIdeal> monomial_ideals() {
  auto mono = [](std::initializer_list<long> e) {
    LatticePoint p;
    for (long v : e) p.c.emplace_back(v);
    return Polynomial::monomial(p, Rat(1));
  };
  std::vector<GradedIdeal> out;
  out.push_back(GradedIdeal::make(2, {mono({1, 0})}));
  out.push_back(GradedIdeal::make(2, {mono({1, 0}), mono({0, 1})}));
  out.push_back(GradedIdeal::make(2, {mono({2, 0}), mono({1, 1})}));
  out.push_back(GradedIdeal::make(2, {mono({2, 0}), mono({0, 3})}));
  out.push_back(GradedIdeal::make(2, {mono({3, 1}), mono({1, 2})}));
  return out;
}

}  // namespace fixtures
}  // namespace polysemi
