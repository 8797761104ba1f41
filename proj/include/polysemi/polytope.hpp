#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "polysemi/numeric.hpp"

namespace polysemi {

/// A point of Z^n with non-negative coordinates.
struct LatticePoint {
  std::vector<Int> c;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<Int> coords) : c(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords) {
    c.reserve(coords.size());
    for (long v : coords) c.emplace_back(v);
  }

  int dim() const { return static_cast<int>(c.size()); }
  Int coordinate_sum() const;

  bool operator==(const LatticePoint& o) const { return c == o.c; }
  // lexicographic; the canonical vertex order everywhere
  bool operator<(const LatticePoint& o) const;

  LatticePoint operator+(const LatticePoint& o) const;
  LatticePoint operator-(const LatticePoint& o) const;
  bool nonnegative() const;
};

LatticePoint origin_point(int n);
LatticePoint coordinate_point(int i, int n);  // e_i, 1-based index

/// Element of the polytope semiring A[n]: either the additive identity 0_A
/// or the convex hull of finitely many points of Z^n_{>=0}, stored as the
/// lexicographically sorted list of its vertices. Structural equality is
/// geometric equality.
class LatticePolytope {
 public:
  LatticePolytope() = default;  // 0_A in the empty ambient space

  static LatticePolytope zero(int dim);
  static LatticePolytope point(const LatticePoint& p);

  int dim() const { return dim_; }
  bool is_zero() const { return zero_; }
  bool is_point() const { return !zero_ && verts_.size() == 1; }
  const std::vector<LatticePoint>& vertices() const { return verts_; }

  bool operator==(const LatticePolytope& o) const {
    return zero_ == o.zero_ && dim_ == o.dim_ && verts_ == o.verts_;
  }
  bool operator<(const LatticePolytope& o) const;

  friend LatticePolytope hull(int dim, std::vector<LatticePoint> pts);

 private:
  LatticePolytope(int dim, bool zero, std::vector<LatticePoint> verts)
      : dim_(dim), zero_(zero), verts_(std::move(verts)) {}
  int dim_ = 0;
  bool zero_ = true;
  std::vector<LatticePoint> verts_;
};

struct RationalVolume {
  Rat value;
  int dim_used;  // n for ambient mode, the affine dimension for relative mode
};

enum class VolumeMode { ambient, relative };

/// Convex hull; the empty list yields 0_A of the given dimension.
LatticePolytope hull(int dim, std::vector<LatticePoint> pts);

/// Semiring addition: convex hull of the union. 0_A is the identity.
LatticePolytope oplus(const LatticePolytope& p, const LatticePolytope& q);

/// Semiring multiplication: Minkowski sum. 0_A annihilates.
LatticePolytope odot(const LatticePolytope& p, const LatticePolytope& q);

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t);

/// Common coordinate sum of all vertices, if the polytope lies on one of the
/// grading hyperplanes H_k; nullopt otherwise. Throws zero_element on 0_A.
std::optional<long> degree(const LatticePolytope& p);

bool contains(const LatticePolytope& p, const LatticePoint& x);
bool contains(const LatticePolytope& p, const LatticePolytope& q);

/// Dimension of the affine hull; -1 for 0_A.
int affine_dim(const LatticePolytope& p);

/// Exact Lebesgue volume. Ambient mode measures in R^n (zero for polytopes of
/// lower affine dimension); relative mode measures inside the affine hull
/// after a lattice-preserving change of coordinates.
RationalVolume volume(const LatticePolytope& p, VolumeMode mode);

/// All lattice points of p.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p);

/// {t in Z^n_{>=0} : v odot {t} subset of w}, enumerated in sorted order.
std::vector<LatticePoint> erosion(const LatticePolytope& v, const LatticePolytope& w);

/// If q = v odot r for some r in A, returns the (unique) cofactor r;
/// absent when v is not a Minkowski summand of q.
std::optional<LatticePolytope> is_summand(const LatticePolytope& v, const LatticePolytope& q);

struct Factorization {
  std::vector<LatticePolytope> factors;  // one factorization into irreducibles
  std::vector<std::vector<LatticePolytope>> all;  // every factorization, when requested
  bool complete = true;   // false when the search budget ran out
  long tests_used = 0;
};

/// Factors p into Minkowski-irreducible polytopes. A non-trivial translation
/// is reported as a single point factor. The budget counts summand tests.
Factorization factor_irreducible(const LatticePolytope& p, long budget, bool enumerate_all);

/// Facets of a polytope of affine dimension >= 1, each as a vertex-index list
/// in boundary order (used for OBJ export and triangulation).
std::vector<std::vector<int>> facet_cycles(const LatticePolytope& p);

/// All t in Z^n_{>=0} with coordinate sum s, sorted.
std::vector<LatticePoint> degree_points(int dim, long s);

/// Every distinct polytope whose vertices lie in the box [0,box]^dim.
/// max_vertices limits the vertex count per candidate (0 = no limit).
std::vector<LatticePolytope> polytopes_in_box(int dim, long box, int max_vertices = 0);

}  // namespace polysemi
