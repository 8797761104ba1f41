#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polysemi/semimodule.hpp"

namespace polysemi {

/// Sparse multivariate polynomial with exact rational coefficients; exponent
/// vectors are lattice points, so the Newton map is just a hull.
struct Polynomial {
  int dim = 0;
  std::map<LatticePoint, Rat> terms;  // nonzero coefficients only

  static Polynomial zero(int dim) { return Polynomial{dim, {}}; }
  static Polynomial monomial(const LatticePoint& e, const Rat& c);

  bool is_zero() const { return terms.empty(); }
  std::optional<long> homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial& o) const { return dim == o.dim && terms == o.terms; }
  bool operator<(const Polynomial& o) const;
};

/// Parses `c*x1^a*x2^b` style terms joined by + and -, rationals as p/q.
Polynomial parse_polynomial(const std::string& text, int dim);
std::string to_string(const Polynomial& f);

struct GradedIdeal {
  int dim = 0;
  std::vector<Polynomial> generators;  // homogeneous, nonzero

  static GradedIdeal make(int dim, std::vector<Polynomial> gens);
};

LatticePolytope newton_polytope(const Polynomial& f);

struct DegreeBasis {
  std::vector<Polynomial> basis;  // row-reduced spanning set of I_k
  long dimension = 0;             // h_k
};
DegreeBasis ideal_degree_basis(const GradedIdeal& ideal, long k);

/// One inclusion-minimal support of a nonzero element of I_k together with
/// the (projectively unique) polynomial realizing it.
struct Circuit {
  std::vector<LatticePoint> support;  // sorted monomial exponents
  Polynomial realizer;
};

struct CircuitList {
  std::vector<Circuit> circuits;  // sorted by support
  bool complete = true;
  long subsets_tested = 0;
};

/// All minimal supports of I_k via hyperplane enumeration over the column
/// matroid of a basis matrix; complete within budget.
CircuitList circuits(const GradedIdeal& ideal, long k, long budget);

struct NewtonPiece {
  GradedPiece piece;
  std::vector<Polynomial> realizers;  // aligned with piece.generators_under_oplus
  bool complete = true;
};

/// Degree-k piece of the Newton semimodule: circuit hulls generate it.
NewtonPiece newton_graded_piece(const GradedIdeal& ideal, long k, long budget);

struct SemicontinuityReport {
  long bound = 0;
  bool complete = true;
  std::vector<long> hilbert;         // h_k
  std::vector<long> newton_hilbert;  // h^New_k
  bool inequality_holds = false;     // h^New_k >= h_k for every k <= bound
  bool lift_spans = false;           // realizers of the minimal generators span I_k
};

SemicontinuityReport semicontinuity_check(const GradedIdeal& ideal, long k_bound, long budget);

enum class BasisMode { paper, oracle };

struct NewtonBasisResult {
  std::vector<Polynomial> elements;
  std::vector<LatticePolytope> polytopes;  // Newton polytopes, aligned with elements
  bool complete = true;
};

/// Degree-k elements of a minimal Newton basis. Paper mode follows the
/// elimination algorithm literally (closure under pairwise eliminations,
/// deduplicated by support, then the inclusion-minimal subset); oracle mode
/// computes the minimal graded generators of the Newton semimodule from
/// circuit data degree by degree.
NewtonBasisResult newton_basis(const GradedIdeal& ideal, long k, BasisMode mode, long budget);

struct GenericPieceResult {
  GradedPiece piece;
  bool stable = false;  // all randomized trials agreed
  bool complete = true;
  std::string detail;
};

/// Degree-k piece of the Newton semimodule of the ideal spanned by generic
/// polynomials supported on all lattice points of the given polytopes.
/// Repeats with fresh coefficients and only reports agreeing results.
GenericPieceResult generic_semimodule_D(const std::vector<LatticePolytope>& p, long k,
                                        int trials, unsigned long seed, long budget);

struct StrongRegularityReport {
  bool violation_found = false;
  int index = 0;                           // position i of the violation
  std::optional<LatticePolytope> witness;  // homogeneous Q with Q.P_i in D but Q not
  long box = 0;
  bool stable = true;
  bool complete = true;
};

/// Bounded search for strong-regularity violations: homogeneous Q with
/// vertices in the box such that P_i odot Q lands in D(P_1..P_{i-1}) while Q
/// does not.
StrongRegularityReport strongly_regular_check(const std::vector<LatticePolytope>& p, long box,
                                              int trials, unsigned long seed, long budget);

}  // namespace polysemi
