#include "polysemi/syzygy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polysemi/newton.hpp"
#include "polysemi/semimodule.hpp"

namespace polysemi {

namespace {

void validate_sequence(const std::vector<LatticePolytope>& p) {
  if (p.size() < 2) throw error(errc::length_mismatch, "a sequence needs at least two polytopes");
  for (const auto& pi : p) {
    if (pi.is_zero()) throw error(errc::zero_element, "sequence entries must be nonzero");
    if (pi.dim() != p[0].dim())
      throw error(errc::mixed_dimension, "sequence entries live in different dimensions");
  }
}

}  // namespace

namespace {

std::optional<SyzygyRecord> check_syzygy(const std::vector<LatticePolytope>& p,
                                         const std::vector<LatticePolytope>& q,
                                         const std::vector<LatticePolytope>& products);

}  // namespace

std::optional<SyzygyRecord> is_syzygy(const std::vector<LatticePolytope>& p,
                                      const std::vector<LatticePolytope>& q) {
  validate_sequence(p);
  if (p.size() != q.size())
    throw error(errc::length_mismatch, "the candidate tuple must match the sequence length");
  const int n = p[0].dim();
  const int r = static_cast<int>(p.size());
  std::vector<LatticePolytope> products;
  for (int i = 0; i < r; ++i) {
    if (!q[i].is_zero() && q[i].dim() != n)
      throw error(errc::mixed_dimension, "tuple entry dimension mismatch");
    products.push_back(q[i].is_zero() ? LatticePolytope::zero(n) : odot(p[i], q[i]));
  }
  return check_syzygy(p, q, products);
}

namespace {

std::optional<SyzygyRecord> check_syzygy(const std::vector<LatticePolytope>& p,
                                         const std::vector<LatticePolytope>& q,
                                         const std::vector<LatticePolytope>& products) {
  const int n = p[0].dim();
  SyzygyRecord rec;
  rec.p = p;
  rec.q = q;
  std::vector<int> support;
  std::vector<LatticePoint> wpts;
  for (size_t i = 0; i < products.size(); ++i) {
    if (!products[i].is_zero()) {
      wpts.insert(wpts.end(), products[i].vertices().begin(), products[i].vertices().end());
      support.push_back(static_cast<int>(i));
    } else {
      rec.zero_set.push_back(static_cast<int>(i) + 1);
    }
  }
  if (support.empty()) {
    rec.w = LatticePolytope::zero(n);
    rec.type = 0;
    return rec;  // the all-zero tuple is always a syzygy
  }
  // the lexicographic extremes of the union are vertices of the join; most
  // candidate tuples already fail the sharing condition there
  {
    LatticePoint lo = *std::min_element(wpts.begin(), wpts.end());
    LatticePoint hi = *std::max_element(wpts.begin(), wpts.end());
    int clo = 0, chi = 0;
    for (int i : support) {
      if (contains(products[i], lo)) ++clo;
      if (contains(products[i], hi)) ++chi;
    }
    if (clo < 2 || chi < 2) return std::nullopt;
  }
  LatticePolytope w = hull(n, std::move(wpts));
  rec.w = w;
  for (const auto& v : w.vertices()) {
    int count = 0;
    for (int i : support) {
      if (contains(products[i], v)) ++count;
      if (count >= 2) break;
    }
    if (count < 2) return std::nullopt;
  }
  // type: smallest subset of the support whose join already gives w
  const int s = static_cast<int>(support.size());
  for (int card = 1; card <= s && rec.type == 0; ++card) {
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    for (;;) {
      LatticePolytope join = LatticePolytope::zero(n);
      for (int i : idx) join = oplus(join, products[support[i]]);
      if (join == w) {
        rec.type = card;
        break;
      }
      int i = card - 1;
      while (i >= 0 && idx[i] == s - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  for (int i : support) {
    if (products[i] == w) rec.index_set.push_back(i + 1);
  }
  return rec;
}

}  // namespace

SyzygyRecord koszul(const std::vector<LatticePolytope>& p, int i, int j) {
  validate_sequence(p);
  const int r = static_cast<int>(p.size());
  if (i < 1 || j < 1 || i >= j || j > r)
    throw error(errc::index_out_of_range, "need 1 <= i < j <= r");
  std::vector<LatticePolytope> q(r, LatticePolytope::zero(p[0].dim()));
  q[i - 1] = p[j - 1];
  q[j - 1] = p[i - 1];
  auto rec = is_syzygy(p, q);
  if (!rec) throw error(errc::internal, "a Koszul tuple must be a syzygy");
  return *rec;
}

std::optional<KosConstruction> kos_construct(const std::vector<LatticePolytope>& p,
                                             const SyzygyRecord& rec, int i0) {
  validate_sequence(p);
  if (rec.type != 1) throw error(errc::not_type_one, "construction needs a type-1 syzygy");
  if (std::find(rec.index_set.begin(), rec.index_set.end(), i0) == rec.index_set.end())
    throw error(errc::index_not_in_index_set, "i0 must realize the associated polytope");
  const int n = p[0].dim();
  const int r = static_cast<int>(p.size());
  std::vector<int> others;  // support of rec away from i0, 0-based
  for (int j = 0; j < r; ++j) {
    if (j == i0 - 1 || rec.q[j].is_zero()) continue;
    others.push_back(j);
  }
  std::vector<LatticePolytope> coeffs;
  for (int j : others) coeffs.push_back(p[j]);
  auto sol = canonical_solution(rec.q[i0 - 1], coeffs);
  if (!sol) return std::nullopt;

  KosConstruction out;
  out.coefficients.assign(r, LatticePolytope::zero(n));
  std::vector<LatticePolytope> q(r, LatticePolytope::zero(n));
  LatticePolytope at_i0 = LatticePolytope::zero(n);
  for (size_t t = 0; t < others.size(); ++t) {
    const auto& l = sol->entries[t];
    out.coefficients[others[t]] = l;
    if (l.is_zero()) continue;
    q[others[t]] = odot(l, p[i0 - 1]);
    at_i0 = oplus(at_i0, odot(l, p[others[t]]));
  }
  q[i0 - 1] = at_i0;
  auto rebuilt = is_syzygy(p, q);
  if (!rebuilt) throw error(errc::internal, "a Koszul combination must be a syzygy");
  out.rebuilt = *rebuilt;
  out.equivalent = out.rebuilt.equivalent_to(rec);
  out.index_contained = std::includes(out.rebuilt.index_set.begin(), out.rebuilt.index_set.end(),
                                      rec.index_set.begin(), rec.index_set.end());
  return out;
}

KosVerdict in_kos(const std::vector<LatticePolytope>& p, const SyzygyRecord& rec) {
  validate_sequence(p);
  const int n = p[0].dim();
  const int r = static_cast<int>(p.size());
  KosVerdict out;
  std::vector<LatticePolytope> combined(r, LatticePolytope::zero(n));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      LatticePolytope l = LatticePolytope::zero(n);
      if (!rec.q[i].is_zero() && !rec.q[j].is_zero()) {
        auto ti = erosion(p[j], rec.q[i]);
        auto tj = erosion(p[i], rec.q[j]);
        std::vector<LatticePoint> both;
        std::set_intersection(ti.begin(), ti.end(), tj.begin(), tj.end(),
                              std::back_inserter(both));
        if (!both.empty()) l = hull(n, both);
      }
      out.witness.push_back(l);
      if (l.is_zero()) continue;
      combined[i] = oplus(combined[i], odot(l, p[j]));
      combined[j] = oplus(combined[j], odot(l, p[i]));
    }
  }
  for (int i = 0; i < r; ++i) {
    if (!(combined[i] == rec.q[i])) {
      out.in_kos = false;
      out.witness.clear();
      return out;
    }
  }
  out.in_kos = true;
  return out;
}

namespace {

// candidate order that makes reported witnesses reproducible: small bounding
// boxes first, then few vertices, then canonical
void sort_candidates(std::vector<LatticePolytope>& h) {
  auto bbox_max = [](const LatticePolytope& p) {
    Int m = 0;
    for (const auto& v : p.vertices())
      for (const Int& c : v.c)
        if (c > m) m = c;
    return m;
  };
  std::stable_sort(h.begin(), h.end(), [&](const LatticePolytope& a, const LatticePolytope& b) {
    Int ba = bbox_max(a), bb = bbox_max(b);
    if (ba != bb) return ba < bb;
    if (a.vertices().size() != b.vertices().size())
      return a.vertices().size() < b.vertices().size();
    return a < b;
  });
}

bool within_box(const LatticePolytope& p, long box) {
  for (const auto& v : p.vertices())
    for (const Int& c : v.c)
      if (c > box) return false;
  return true;
}

}  // namespace

SyzygyEnumeration enumerate_syzygies(const std::vector<LatticePolytope>& p, long box,
                                     long budget, int max_vertices,
                                     std::optional<int> dim_filter) {
  validate_sequence(p);
  const int n = p[0].dim();
  const int r = static_cast<int>(p.size());
  SyzygyEnumeration out;
  out.box = box;

  std::map<std::pair<LatticePolytope, std::vector<int>>, SyzygyRecord> classes;
  auto consider = [&](const std::vector<LatticePolytope>& q) {
    auto rec = is_syzygy(p, q);
    if (!rec) return;
    if (dim_filter) {
      for (const auto& qi : rec->q) {
        if (qi.is_zero() || affine_dim(qi) != *dim_filter) return;
      }
    }
    classes.try_emplace({rec->w, rec->zero_set}, *rec);
  };

  // the zero tuple is always there
  consider(std::vector<LatticePolytope>(r, LatticePolytope::zero(n)));

  long wbox = box;
  for (const auto& pi : p)
    for (const auto& v : pi.vertices())
      for (const Int& c : v.c) wbox = std::max(wbox, box + to_long(c));
  double grid_points = 1;
  for (int j = 0; j < n; ++j) grid_points *= static_cast<double>(wbox + 1);

  if (r == 2) {
    // a pair syzygy forces P1.Q1 = P2.Q2, so the cofactor determines Q2
    auto h = polytopes_in_box(n, box, max_vertices);
    if (max_vertices > 0) out.complete = false;
    sort_candidates(h);
    for (const auto& q1 : h) {
      if (++out.tuples_tested > budget) {
        out.complete = false;
        break;
      }
      LatticePolytope w = odot(p[0], q1);
      auto q2 = is_summand(p[1], w);
      if (!q2 || !within_box(*q2, box)) continue;
      consider({q1, *q2});
    }
  } else if (max_vertices == 0 && grid_points <= 16.5) {
    // Equivalence classes are pairs (W, support): a box-bounded syzygy with
    // that data exists iff the entrywise-maximal box-bounded solution is one,
    // so candidate associated polytopes can be enumerated directly.
    auto wcands = polytopes_in_box(n, wbox);
    for (const auto& w : wcands) {
      if (out.tuples_tested > budget) {
        out.complete = false;
        break;
      }
      std::vector<LatticePolytope> ymax(r, LatticePolytope::zero(n));
      std::vector<int> nonzero;
      for (int i = 0; i < r; ++i) {
        std::vector<LatticePoint> t;
        for (const auto& cand : erosion(p[i], w)) {
          bool inside = true;
          for (const Int& c : cand.c)
            if (c > box) { inside = false; break; }
          if (inside) t.push_back(cand);
        }
        if (t.empty()) continue;
        ymax[i] = hull(n, t);
        nonzero.push_back(i);
      }
      if (static_cast<int>(nonzero.size()) < 2) continue;
      // every support subset gives its own equivalence class candidate
      const int m = static_cast<int>(nonzero.size());
      for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        if (++out.tuples_tested > budget) {
          out.complete = false;
          break;
        }
        std::vector<LatticePolytope> q(r, LatticePolytope::zero(n));
        LatticePolytope join = LatticePolytope::zero(n);
        for (int t = 0; t < m; ++t) {
          if (mask & (size_t(1) << t)) {
            q[nonzero[t]] = ymax[nonzero[t]];
            join = oplus(join, odot(p[nonzero[t]], ymax[nonzero[t]]));
          }
        }
        if (join == w) consider(q);
      }
    }
  } else {
    auto h = polytopes_in_box(n, box, max_vertices);
    if (max_vertices > 0) out.complete = false;
    sort_candidates(h);
    std::vector<int> pick(r, 0);
    std::vector<LatticePolytope> cands;
    cands.push_back(LatticePolytope::zero(n));
    cands.insert(cands.end(), h.begin(), h.end());
    const int m = static_cast<int>(cands.size());
    std::vector<std::vector<LatticePolytope>> products(r);
    for (int i = 0; i < r; ++i) {
      products[i].reserve(m);
      for (const auto& c : cands)
        products[i].push_back(c.is_zero() ? c : odot(p[i], c));
    }
    auto consider_cached = [&](const std::vector<int>& choice) {
      std::vector<LatticePolytope> q, prod;
      q.reserve(r);
      prod.reserve(r);
      for (int i = 0; i < r; ++i) {
        q.push_back(cands[choice[i]]);
        prod.push_back(products[i][choice[i]]);
      }
      auto rec = check_syzygy(p, q, prod);
      if (!rec) return;
      if (dim_filter) {
        for (const auto& qi : rec->q) {
          if (qi.is_zero() || affine_dim(qi) != *dim_filter) return;
        }
      }
      classes.try_emplace({rec->w, rec->zero_set}, *rec);
    };
    bool done = false;
    while (!done) {
      if (++out.tuples_tested > budget) {
        out.complete = false;
        break;
      }
      consider_cached(pick);
      int i = 0;
      while (i < r) {
        if (++pick[i] < m) break;
        pick[i] = 0;
        ++i;
      }
      done = i == r;
    }
  }
  for (auto& [key, rec] : classes) out.classes.push_back(std::move(rec));
  return out;
}

RegularSequenceVerdict regular_sequence_check(const std::vector<LatticePolytope>& p, long box) {
  validate_sequence(p);
  const int n = p[0].dim();
  const int r = static_cast<int>(p.size());
  RegularSequenceVerdict out;
  out.box = box;

  bool coordinate_points = true;
  for (const auto& pi : p) {
    if (!pi.is_point() || pi.vertices()[0].coordinate_sum() != 1) {
      coordinate_points = false;
      break;
    }
  }
  if (coordinate_points) {
    // Membership in C(e_{a_1},..,e_{a_m}) only asks each vertex to have some
    // coordinate a_t >= 1, and multiplying by e_i never changes the other
    // coordinates; a violation therefore needs i to repeat an earlier index.
    std::set<int> prefix;
    for (int i = 0; i < r; ++i) {
      int idx = 0;
      for (int j = 0; j < n; ++j) {
        if (p[i].vertices()[0].c[j] == 1) idx = j;
      }
      if (i > 0 && prefix.count(idx)) {
        out.failed_index = i + 1;
        out.witness = LatticePolytope::point(origin_point(n));
        return out;
      }
      prefix.insert(idx);
    }
    out.regular = true;
    return out;
  }

  auto h = polytopes_in_box(n, box);
  sort_candidates(h);
  for (int i = 1; i < r; ++i) {
    auto prefix = SubSemimodule::make(n, {p.begin(), p.begin() + i});
    for (const auto& q : h) {
      if (membership(q, prefix)) continue;
      if (membership(odot(q, p[i]), prefix)) {
        out.failed_index = i + 1;
        out.witness = q;
        return out;
      }
    }
  }
  out.regular = true;
  return out;
}

PolynomialSyzygyReport specialize_polynomial_syzygy(const std::vector<Polynomial>& f,
                                                    const std::vector<Polynomial>& g) {
  if (f.size() != g.size() || f.empty())
    throw error(errc::length_mismatch, "the tuples must have equal positive length");
  Polynomial sum = Polynomial::zero(f[0].dim);
  for (size_t i = 0; i < f.size(); ++i) sum = sum + f[i] * g[i];
  if (!sum.is_zero())
    throw error(errc::not_a_polynomial_syzygy, "sum of f_i * g_i is " + to_string(sum));
  std::vector<LatticePolytope> p, q;
  for (size_t i = 0; i < f.size(); ++i) {
    p.push_back(newton_polytope(f[i]));
    q.push_back(newton_polytope(g[i]));
  }
  auto rec = is_syzygy(p, q);
  if (!rec) throw error(errc::internal, "a polynomial syzygy must specialize to a polytope syzygy");
  PolynomialSyzygyReport rep;
  rep.record = *rec;
  rep.lattice_sharing = true;
  if (!rec->w.is_zero()) {
    std::vector<LatticePolytope> products;
    for (size_t i = 0; i < p.size(); ++i)
      products.push_back(rec->q[i].is_zero() ? LatticePolytope::zero(p[i].dim())
                                             : odot(p[i], rec->q[i]));
    for (const auto& x : lattice_points(rec->w)) {
      int count = 0;
      for (const auto& prod : products) {
        if (!prod.is_zero() && contains(prod, x)) ++count;
        if (count >= 2) break;
      }
      if (count < 2) {
        rep.lattice_sharing = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace polysemi
