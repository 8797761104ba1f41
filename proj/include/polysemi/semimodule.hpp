#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysemi/polytope.hpp"

namespace polysemi {

/// Finitely generated sub-semimodule of A[n], given by its generator list.
struct SubSemimodule {
  int dim = 0;
  std::vector<LatticePolytope> generators;  // nonzero, deduplicated, sorted
  bool graded = false;                      // every generator homogeneous

  static SubSemimodule make(int dim, std::vector<LatticePolytope> gens);
};

/// Candidate or verified solution tuple of W = P_1.Y_1 (+) ... (+) P_r.Y_r;
/// a Zero entry means the term is absent.
struct SolutionTuple {
  std::vector<LatticePolytope> entries;

  bool operator==(const SolutionTuple& o) const { return entries == o.entries; }
  bool operator<(const SolutionTuple& o) const {
    return std::lexicographical_compare(entries.begin(), entries.end(), o.entries.begin(),
                                        o.entries.end());
  }
};

struct GradedPiece {
  long degree = 0;
  std::vector<LatticePolytope> generators_under_oplus;  // vertex translates of the module generators
  std::vector<LatticePolytope> minimal;                 // the unique minimal generating set
  long rank() const { return static_cast<long>(minimal.size()); }
};

struct NewtonHilbertSeries {
  std::vector<long> coefficients;  // h_0 .. h_D
  struct RationalForm {
    std::vector<Int> num, den;  // den[0] = 1 after normalization, integer coefficients
  };
  std::optional<RationalForm> rational_form;  // verified against every coefficient
};

/// Entrywise-maximal solution, which equals the join of all solutions when
/// any solution exists; absent when the equation has no solution.
std::optional<SolutionTuple> canonical_solution(const LatticePolytope& w,
                                                const std::vector<LatticePolytope>& p);

struct SolutionEnumeration {
  std::vector<SolutionTuple> solutions;  // sorted, deduplicated
  bool complete = true;
  long tuples_tested = 0;
};

/// Complete enumeration of the (finite) solution set, within budget.
SolutionEnumeration enumerate_solutions(const LatticePolytope& w,
                                        const std::vector<LatticePolytope>& p, long budget);

/// Join of the solutions whose nonzero entries all carry v as a Minkowski
/// summand; computed exactly by dividing v out of the equation.
std::optional<SolutionTuple> canonical_solution_wrt(const LatticePolytope& w,
                                                    const std::vector<LatticePolytope>& p,
                                                    const LatticePolytope& v);

/// q lies in the sub-semimodule generated by m.generators.
bool membership(const LatticePolytope& q, const SubSemimodule& m);

/// Unique minimal generating subset of a list of same-degree polytopes under
/// oplus: the join-irreducible elements.
std::vector<LatticePolytope> minimal_generators(std::vector<LatticePolytope> s);

/// q as a join of elements from gens (all of q's degree); the max-join test.
bool in_oplus_span(const LatticePolytope& q, const std::vector<LatticePolytope>& gens);

GradedPiece graded_piece(const SubSemimodule& m, long k);

NewtonHilbertSeries newton_hilbert_series(const SubSemimodule& m, long degree_bound);

/// Smallest-total-degree rational function matching all given coefficients
/// exactly, with denominator constant term one; nullopt when none fits.
std::optional<NewtonHilbertSeries::RationalForm> fit_rational_form(
    const std::vector<long>& coeffs);

/// Expand num/den (den[0] = 1) as a power series through degree d.
std::vector<long> expand_series(const NewtonHilbertSeries::RationalForm& f, long d);

struct RegularityVerdict {
  bool regular = false;  // up to the bound
  long bound = 0;
  std::optional<long> failed_degree;
  std::optional<LatticePolytope> witness;
  std::string reason;
};

/// Bounded check that the coordinate point e_i is a regular element: the
/// translate condition e_i . M_k = (M_{k+1})_par and the rank condition
/// rank((M_k)_perp) = rank((M restricted to x_i = 0)_k), both for k <= bound.
RegularityVerdict coordinate_regular(const SubSemimodule& m, int i, long k_bound);

struct CmReport {
  long bound = 0;
  bool certified = false;
  std::optional<long> artinian_k0;
  std::optional<int> depth;
  std::vector<int> sequence;  // 1-based coordinate indices
  std::optional<NewtonHilbertSeries> series;
  std::string note;
};

/// Bounded Artinian / Cohen-Macaulay analysis: searches coordinate sequences
/// in lexicographic order, shortest first, and assembles the series through
/// the 1/(1-t) recurrence, verified coefficientwise against direct ranks.
CmReport cm_analysis(const SubSemimodule& m, long k_bound);

/// The depth-one family in A[3]: generators hull({q} union S_par) over the
/// degree-d points q with vanishing first coordinate, where S_par collects
/// the degree-d points with first coordinate >= 1.
SubSemimodule cm_fixture(long d);

}  // namespace polysemi
