#pragma once

#include <random>
#include <vector>

#include "polysemi/polytope.hpp"

namespace polysemi::testing {

// small random polytopes for the algebraic property suites
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(unsigned long seed) : rng(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  LatticePoint point(int dim, long max_coord) {
    LatticePoint p;
    for (int i = 0; i < dim; ++i) p.c.emplace_back(uniform(0, max_coord));
    return p;
  }

  LatticePolytope polytope(int dim, long max_coord, int max_pts = 4) {
    int k = static_cast<int>(uniform(1, max_pts));
    std::vector<LatticePoint> pts;
    for (int i = 0; i < k; ++i) pts.push_back(point(dim, max_coord));
    return hull(dim, std::move(pts));
  }

  LatticePolytope nonzero(int dim, long max_coord, int max_pts = 4) {
    return polytope(dim, max_coord, max_pts);
  }
};

}  // namespace polysemi::testing
