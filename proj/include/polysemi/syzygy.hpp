#pragma once

#include <optional>
#include <vector>

#include "polysemi/polytope.hpp"

namespace polysemi {

struct Polynomial;

/// A verified polytope syzygy: every vertex of the associated polytope W lies
/// in at least two of the nonzero products P_j odot Q_j.
struct SyzygyRecord {
  std::vector<LatticePolytope> p;
  std::vector<LatticePolytope> q;  // Zero entries mean absent terms
  LatticePolytope w = LatticePolytope::zero(0);
  std::vector<int> zero_set;   // 1-based indices with Q_i = 0_A
  int type = 0;                // minimal covering cardinality; 0 for the zero tuple
  std::vector<int> index_set;  // {i : W = P_i odot Q_i}

  /// Same associated polytope and same zero coordinates.
  bool equivalent_to(const SyzygyRecord& o) const {
    return w == o.w && zero_set == o.zero_set;
  }
};

std::optional<SyzygyRecord> is_syzygy(const std::vector<LatticePolytope>& p,
                                      const std::vector<LatticePolytope>& q);

/// K_{i,j}: P_j in slot i, P_i in slot j, zeros elsewhere. 1-based, i < j.
SyzygyRecord koszul(const std::vector<LatticePolytope>& p, int i, int j);

struct KosConstruction {
  std::vector<LatticePolytope> coefficients;  // L_j per slot, Zero where unused
  SyzygyRecord rebuilt;
  bool equivalent = false;
  bool index_contained = false;  // rebuilt index set contains the input's
};

/// Rewrites a type-1 syzygy as a combination of Koszul syzygies through the
/// canonical solution of Q_{i0} = join of Y_j odot P_j over the support.
/// Absent when that equation has no solution (regularity fails at i0).
std::optional<KosConstruction> kos_construct(const std::vector<LatticePolytope>& p,
                                             const SyzygyRecord& rec, int i0);

struct KosVerdict {
  bool in_kos = false;
  // L_{ij} for pairs (1,2),(1,3),...,(2,3),... when in_kos holds
  std::vector<LatticePolytope> witness;
};

/// Exact membership in the sub-semimodule generated by the Koszul syzygies:
/// the entrywise-maximal coefficients either reproduce the tuple or nothing
/// does, so no search is needed.
KosVerdict in_kos(const std::vector<LatticePolytope>& p, const SyzygyRecord& rec);

struct SyzygyEnumeration {
  std::vector<SyzygyRecord> classes;  // one representative per equivalence class
  bool complete = true;
  long tuples_tested = 0;
  long box = 0;
};

/// All syzygies with every Q_i's vertices in [0,box]^n, deduplicated up to
/// equivalence. max_vertices, when positive, restricts the candidate entries
/// to polytopes with at most that many vertices (flagged incomplete).
/// dim_filter keeps only tuples whose entries all have that affine dimension.
SyzygyEnumeration enumerate_syzygies(const std::vector<LatticePolytope>& p, long box,
                                     long budget, int max_vertices = 0,
                                     std::optional<int> dim_filter = std::nullopt);

struct RegularSequenceVerdict {
  bool regular = false;  // no witness with vertices in the box
  long box = 0;
  int failed_index = 0;  // 1-based position i of the violation
  std::optional<LatticePolytope> witness;
  bool complete = true;
};

/// Searches Q with vertices in the box such that Q odot P_i lies in
/// C(P_1..P_{i-1}) while Q does not. NotRegular answers are final; the
/// regular verdict is a bounded confirmation (complete for coordinate-point
/// sequences, where membership only depends on vertex supports).
RegularSequenceVerdict regular_sequence_check(const std::vector<LatticePolytope>& p, long box);

struct PolynomialSyzygyReport {
  SyzygyRecord record;
  bool lattice_sharing = false;  // every lattice point of W in >= 2 products
};

/// Specializes an exact polynomial syzygy (sum f_i g_i = 0) through the
/// Newton map; the result is always a polytope syzygy.
PolynomialSyzygyReport specialize_polynomial_syzygy(const std::vector<Polynomial>& f,
                                                    const std::vector<Polynomial>& g);

}  // namespace polysemi
