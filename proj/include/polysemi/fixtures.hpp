#pragma once

#include "polysemi/newton.hpp"
#include "polysemi/polytope.hpp"

namespace polysemi {
namespace fixtures {

/// The square/triangle quadruple with P1.P3 = P2.P4 = hexagon.
struct Hexagon {
  LatticePolytope p1, p2, p3, p4, hexagon;
};
Hexagon hexagon();

/// The root-lattice difference ideal <x1-x2, ..., x_{n-1}-x_n> in n variables.
GradedIdeal a_lattice_ideal(int n);

/// Triangular prism (unit triangle times a unit vertical segment) together
/// with a triple of its edges carrying a type-2 syzygy that no Koszul
/// combination reproduces.
struct Prism {
  LatticePolytope prism;
  std::vector<LatticePolytope> p;  // the three base edges
  std::vector<LatticePolytope> q;  // the matching top edges
};
Prism prism();

/// Segment plus four points whose syzygies translate the points around
/// parallelograms; the source of infinitely many minimal generators.
std::vector<LatticePolytope> five_polytopes();

/// (T1, T2, P): a rectangle split into two triangles followed by the square
/// it came from; not a regular sequence, witnessed by a segment.
std::vector<LatticePolytope> triangulated_product();

/// The lifting-failure pair of degree-3 segments: New(x2^3 + x1^2 x2) and
/// New(x2^3 + x1 x2^2).
struct LiftingPair {
  LatticePolytope p1, p2;
  LatticePolytope hidden;  // New(x1^2 x2 + x1 x2^2), in D(p1,p2) but not C(p1,p2)
};
LiftingPair lifting_pair();

/// Five small monomial ideals in two variables.
std::vector<GradedIdeal> monomial_ideals();

}  // namespace fixtures
}  // namespace polysemi
