#include "polysemi/semimodule.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polysemi/linalg.hpp"

namespace polysemi {

SubSemimodule SubSemimodule::make(int dim, std::vector<LatticePolytope> gens) {
  SubSemimodule m;
  m.dim = dim;
  for (const auto& g : gens) {
    if (g.is_zero()) throw error(errc::zero_element, "0_A cannot generate anything");
    if (g.dim() != dim) throw error(errc::mixed_dimension, "generator dimension mismatch");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  m.generators = std::move(gens);
  m.graded = true;
  for (const auto& g : m.generators) {
    if (!degree(g)) {
      m.graded = false;
      break;
    }
  }
  return m;
}

std::optional<SolutionTuple> canonical_solution(const LatticePolytope& w,
                                                const std::vector<LatticePolytope>& p) {
  if (w.is_zero()) throw error(errc::zero_element, "the left side must be nonzero");
  SolutionTuple t;
  LatticePolytope join = LatticePolytope::zero(w.dim());
  for (const auto& pi : p) {
    if (pi.is_zero()) throw error(errc::zero_element, "equation coefficients must be nonzero");
    if (pi.dim() != w.dim())
      throw error(errc::mixed_dimension, "equation coefficient dimension mismatch");
    auto ero = erosion(pi, w);
    LatticePolytope y = ero.empty() ? LatticePolytope::zero(w.dim()) : hull(w.dim(), ero);
    if (!y.is_zero()) join = oplus(join, odot(pi, y));
    t.entries.push_back(std::move(y));
  }
  if (!(join == w)) return std::nullopt;
  return t;
}

SolutionEnumeration enumerate_solutions(const LatticePolytope& w,
                                        const std::vector<LatticePolytope>& p, long budget) {
  SolutionEnumeration out;
  if (w.is_zero()) throw error(errc::zero_element, "the left side must be nonzero");
  const int r = static_cast<int>(p.size());
  std::vector<std::vector<LatticePolytope>> slots(r);
  for (int i = 0; i < r; ++i) {
    if (p[i].is_zero()) throw error(errc::zero_element, "equation coefficients must be nonzero");
    auto t = erosion(p[i], w);
    std::set<LatticePolytope> cands;
    cands.insert(LatticePolytope::zero(w.dim()));
    const size_t m = t.size();
    if (m > 18) {
      out.complete = false;
      return out;
    }
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<LatticePoint> pts;
      for (size_t j = 0; j < m; ++j)
        if (mask & (size_t(1) << j)) pts.push_back(t[j]);
      cands.insert(hull(w.dim(), std::move(pts)));
    }
    slots[i].assign(cands.begin(), cands.end());
  }
  std::vector<int> pick(r, 0);
  std::set<SolutionTuple> found;
  for (;;) {
    if (out.tuples_tested >= budget) {
      out.complete = false;
      break;
    }
    ++out.tuples_tested;
    LatticePolytope join = LatticePolytope::zero(w.dim());
    SolutionTuple t;
    for (int i = 0; i < r; ++i) {
      const auto& y = slots[i][pick[i]];
      if (!y.is_zero()) join = oplus(join, odot(p[i], y));
      t.entries.push_back(y);
    }
    if (join == w) found.insert(std::move(t));
    int i = 0;
    while (i < r) {
      if (++pick[i] < static_cast<int>(slots[i].size())) break;
      pick[i] = 0;
      ++i;
    }
    if (i == r) break;
  }
  out.solutions.assign(found.begin(), found.end());
  return out;
}

std::optional<SolutionTuple> canonical_solution_wrt(const LatticePolytope& w,
                                                    const std::vector<LatticePolytope>& p,
                                                    const LatticePolytope& v) {
  if (v.is_zero()) throw error(errc::zero_element, "the summand constraint must be nonzero");
  std::vector<LatticePolytope> scaled;
  scaled.reserve(p.size());
  for (const auto& pi : p) scaled.push_back(odot(pi, v));
  auto base = canonical_solution(w, scaled);
  if (!base) return std::nullopt;
  SolutionTuple t;
  for (const auto& z : base->entries)
    t.entries.push_back(z.is_zero() ? z : odot(v, z));
  return t;
}

bool membership(const LatticePolytope& q, const SubSemimodule& m) {
  if (q.is_zero()) throw error(errc::zero_element, "membership of 0_A is not defined");
  if (q.dim() != m.dim) throw error(errc::mixed_dimension, "membership dimension mismatch");
  if (m.generators.empty()) return false;
  return canonical_solution(q, m.generators).has_value();
}

std::vector<LatticePolytope> minimal_generators(std::vector<LatticePolytope> s) {
  if (s.empty()) return s;
  std::optional<long> deg;
  for (const auto& g : s) {
    if (g.is_zero()) throw error(errc::zero_element, "0_A cannot be a generator");
    auto d = degree(g);
    if (!d) throw error(errc::mixed_degree, "generators must be homogeneous");
    if (!deg) deg = *d;
    if (*d != *deg) throw error(errc::mixed_degree, "generators must share one degree");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<LatticePolytope> out;
  for (const auto& g : s) {
    LatticePolytope join = LatticePolytope::zero(g.dim());
    for (const auto& h : s) {
      if (h == g || !contains(g, h)) continue;
      join = oplus(join, h);
    }
    if (!(join == g)) out.push_back(g);
  }
  return out;
}

bool in_oplus_span(const LatticePolytope& q, const std::vector<LatticePolytope>& gens) {
  if (q.is_zero()) throw error(errc::zero_element, "span membership of 0_A is not defined");
  LatticePolytope join = LatticePolytope::zero(q.dim());
  for (const auto& g : gens) {
    if (contains(q, g)) join = oplus(join, g);
  }
  return join == q;
}

namespace {

std::vector<LatticePolytope> piece_generators(const std::vector<LatticePolytope>& module_gens,
                                              int dim, long k,
                                              const std::vector<bool>* zeroed) {
  std::set<LatticePolytope> out;
  for (const auto& g : module_gens) {
    long d = *degree(g);
    if (d > k) continue;
    if (zeroed) {
      bool ok = true;
      for (const auto& vtx : g.vertices()) {
        for (int j = 0; j < dim && ok; ++j)
          if ((*zeroed)[j] && vtx.c[j] != 0) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
    }
    for (const auto& t : degree_points(dim, k - d)) {
      if (zeroed) {
        bool ok = true;
        for (int j = 0; j < dim; ++j)
          if ((*zeroed)[j] && t.c[j] != 0) { ok = false; break; }
        if (!ok) continue;
      }
      out.insert(translate(g, t));
    }
  }
  return std::vector<LatticePolytope>(out.begin(), out.end());
}

Int min_coordinate(const LatticePolytope& p, int i) {
  Int m = p.vertices()[0].c[i - 1];
  for (const auto& v : p.vertices())
    if (v.c[i - 1] < m) m = v.c[i - 1];
  return m;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

// dense integer polynomial helpers for the series bookkeeping
using IPoly = std::vector<Int>;

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

IPoly ipoly_add(IPoly a, const IPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Int(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IPoly one_minus_t_power(long m) {
  IPoly p{Int(1)};
  for (long i = 0; i < m; ++i) p = ipoly_mul(p, IPoly{Int(1), Int(-1)});
  return p;
}

// exact division by (1 - t); nullopt if not divisible
std::optional<IPoly> ipoly_div_one_minus_t(const IPoly& a) {
  if (a.empty()) return IPoly{};
  IPoly q(a.size(), Int(0));
  Int carry = 0;
  // a(t) = (1-t) q(t)  =>  q_k = a_k + q_{k-1}
  for (size_t k = 0; k < a.size(); ++k) {
    q[k] = a[k] + carry;
    carry = q[k];
  }
  if (carry != 0) return std::nullopt;
  q.pop_back();
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

}  // namespace

GradedPiece graded_piece(const SubSemimodule& m, long k) {
  if (!m.graded) throw error(errc::not_graded, "graded pieces need a graded sub-semimodule");
  if (k < 0) throw error(errc::index_out_of_range, "piece degree must be non-negative");
  GradedPiece piece;
  piece.degree = k;
  piece.generators_under_oplus = piece_generators(m.generators, m.dim, k, nullptr);
  piece.minimal = minimal_generators(piece.generators_under_oplus);
  return piece;
}

NewtonHilbertSeries newton_hilbert_series(const SubSemimodule& m, long degree_bound) {
  NewtonHilbertSeries s;
  for (long k = 0; k <= degree_bound; ++k) s.coefficients.push_back(graded_piece(m, k).rank());
  s.rational_form = fit_rational_form(s.coefficients);
  return s;
}

std::optional<NewtonHilbertSeries::RationalForm> fit_rational_form(
    const std::vector<long>& h) {
  const long d = static_cast<long>(h.size()) - 1;
  if (d < 0) return std::nullopt;
  for (long total = 0; total <= d; ++total) {
    for (long q = total; q >= 0; --q) {  // pole-rich forms first
      const long p = total - q;
      // unknowns: n_0..n_p then q_1..q_q
      QMat a;
      QVec b;
      for (long k = 0; k <= d; ++k) {
        QVec row(p + 1 + q, Rat(0));
        if (k <= p) row[k] = 1;
        for (long j = 1; j <= q; ++j) {
          if (k - j >= 0) row[p + j] = -Rat(h[k - j]);
        }
        a.push_back(std::move(row));
        b.push_back(Rat(h[k]));
      }
      auto sol = solve(std::move(a), b);
      if (!sol) continue;
      // clear denominators, normalize content, den constant term positive
      Int lcm = 1;
      for (const Rat& x : *sol) lcm = lcm * x.get_den() / gcd(lcm, Int(x.get_den()));
      std::vector<Int> num(p + 1), den(q + 1);
      den[0] = lcm;
      for (long k = 0; k <= p; ++k) {
        Rat v = (*sol)[k] * Rat(lcm);
        num[k] = v.get_num();
      }
      for (long j = 1; j <= q; ++j) {
        Rat v = (*sol)[p + j] * Rat(lcm);
        den[j] = v.get_num();
      }
      Int g = 0;
      for (const Int& x : num) g = gcd(g, x);
      for (const Int& x : den) g = gcd(g, x);
      if (g > 1) {
        for (Int& x : num) x /= g;
        for (Int& x : den) x /= g;
      }
      while (!num.empty() && num.back() == 0) num.pop_back();
      while (!den.empty() && den.back() == 0) den.pop_back();
      if (num.empty()) num.push_back(Int(0));
      NewtonHilbertSeries::RationalForm f{std::move(num), std::move(den)};
      // keep only fits whose expansion really matches (paranoia against a
      // denominator with vanishing constant term after normalization)
      if (f.den.empty() || f.den[0] != 1) continue;
      bool ok = true;
      auto exp = expand_series(f, d);
      for (long k = 0; k <= d; ++k)
        if (exp[k] != h[k]) { ok = false; break; }
      if (ok) return f;
    }
  }
  return std::nullopt;
}

std::vector<long> expand_series(const NewtonHilbertSeries::RationalForm& f, long d) {
  std::vector<Int> h(d + 1, Int(0));
  for (long k = 0; k <= d; ++k) {
    Int v = k < static_cast<long>(f.num.size()) ? f.num[k] : Int(0);
    for (long j = 1; j < static_cast<long>(f.den.size()) && j <= k; ++j)
      v -= f.den[j] * h[k - j];
    h[k] = v;
  }
  std::vector<long> out;
  out.reserve(d + 1);
  for (const Int& v : h) out.push_back(to_long(v));
  return out;
}

namespace {

struct Restriction {
  const SubSemimodule* m;
  std::vector<bool> zeroed;
  std::map<long, std::pair<std::vector<LatticePolytope>, std::vector<LatticePolytope>>> cache;

  const std::pair<std::vector<LatticePolytope>, std::vector<LatticePolytope>>& piece(long k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    auto gens = piece_generators(m->generators, m->dim, k,
                                 std::any_of(zeroed.begin(), zeroed.end(), [](bool b) { return b; })
                                     ? &zeroed
                                     : nullptr);
    auto mins = minimal_generators(gens);
    return cache.emplace(k, std::make_pair(std::move(gens), std::move(mins))).first->second;
  }
};

// Bounded single-step regularity of e_i on the restriction, both conditions.
RegularityVerdict step_regular(Restriction& cur, Restriction& next, int i, long k_bound) {
  RegularityVerdict v;
  v.bound = k_bound;
  LatticePoint ei = coordinate_point(i, cur.m->dim);
  for (long k = 0; k <= k_bound; ++k) {
    const auto& [gens_k, mins_k] = cur.piece(k);
    const auto& [gens_k1, mins_k1] = cur.piece(k + 1);
    // translate condition on the semigroup generators of the parallel part
    for (const auto& g : gens_k1) {
      if (min_coordinate(g, i) < 1) continue;
      std::vector<LatticePoint> moved;
      for (const auto& vtx : g.vertices()) moved.push_back(vtx - ei);
      LatticePolytope y = hull(cur.m->dim, std::move(moved));
      if (!in_oplus_span(y, gens_k)) {
        v.failed_degree = k;
        v.witness = g;
        v.reason = "element of the parallel part is not e_i times a degree-" +
                   std::to_string(k) + " element";
        return v;
      }
    }
    // rank condition: generators without the e_i summand vs the restriction
    long perp = 0;
    for (const auto& g : mins_k) {
      if (min_coordinate(g, i) < 1) ++perp;
    }
    long restricted = static_cast<long>(next.piece(k).second.size());
    if (perp != restricted) {
      v.failed_degree = k;
      v.reason = "rank mismatch at degree " + std::to_string(k) + ": " + std::to_string(perp) +
                 " generators avoid e_" + std::to_string(i) + " but the restriction has rank " +
                 std::to_string(restricted);
      return v;
    }
  }
  v.regular = true;
  return v;
}

std::optional<long> artinian_threshold(Restriction& r, long k_bound) {
  const int n = r.m->dim;
  std::vector<int> remaining;
  for (int j = 0; j < n; ++j)
    if (!r.zeroed[j]) remaining.push_back(j);
  long k0 = -1;
  for (long k = k_bound; k >= 0; --k) {
    // full piece iff every degree-k point supported on the remaining
    // coordinates appears among the generators
    std::set<LatticePolytope> gens(r.piece(k).first.begin(), r.piece(k).first.end());
    bool full = true;
    for (const auto& t : degree_points(static_cast<int>(remaining.size()), k)) {
      LatticePoint lifted = origin_point(n);
      for (size_t j = 0; j < remaining.size(); ++j) lifted.c[remaining[j]] = t.c[j];
      if (!gens.count(LatticePolytope::point(lifted))) {
        full = false;
        break;
      }
    }
    if (!full) break;
    k0 = k;
  }
  if (k0 < 0) return std::nullopt;
  return k0;
}

}  // namespace

RegularityVerdict coordinate_regular(const SubSemimodule& m, int i, long k_bound) {
  if (!m.graded) throw error(errc::not_graded, "regularity checks need a graded sub-semimodule");
  if (i < 1 || i > m.dim) throw error(errc::index_out_of_range, "coordinate index out of range");
  Restriction cur{&m, std::vector<bool>(m.dim, false), {}};
  Restriction next{&m, std::vector<bool>(m.dim, false), {}};
  next.zeroed[i - 1] = true;
  return step_regular(cur, next, i, k_bound);
}

CmReport cm_analysis(const SubSemimodule& m, long k_bound) {
  if (!m.graded) throw error(errc::not_graded, "the analysis needs a graded sub-semimodule");
  CmReport report;
  report.bound = k_bound;
  const int n = m.dim;

  std::vector<int> seq;
  auto try_sequence = [&](const std::vector<int>& indices) -> std::optional<CmReport> {
    std::vector<Restriction> levels;
    levels.reserve(indices.size() + 1);
    levels.push_back(Restriction{&m, std::vector<bool>(n, false), {}});
    for (size_t j = 0; j < indices.size(); ++j) {
      auto z = levels.back().zeroed;
      z[indices[j] - 1] = true;
      levels.push_back(Restriction{&m, std::move(z), {}});
    }
    for (size_t j = 0; j < indices.size(); ++j) {
      auto verdict = step_regular(levels[j], levels[j + 1], indices[j], k_bound);
      if (!verdict.regular) return std::nullopt;
    }
    auto k0 = artinian_threshold(levels.back(), k_bound);
    if (!k0) return std::nullopt;

    CmReport r;
    r.bound = k_bound;
    r.certified = true;
    r.artinian_k0 = *k0;
    r.depth = static_cast<int>(indices.size());
    r.sequence = indices;

    // series of the Artinian restriction in closed form, then one division
    // by (1-t) per step of the sequence
    const long deg_free = n - static_cast<long>(indices.size());
    IPoly head;
    for (long k = 0; k < *k0; ++k) {
      Int c = Int(static_cast<long>(levels.back().piece(k).second.size())) -
              binomial(deg_free - 1 + k, k);
      if (c != 0) {
        if (static_cast<long>(head.size()) <= k) head.resize(k + 1, Int(0));
        head[k] = c;
      }
    }
    IPoly num = ipoly_add(ipoly_mul(head, one_minus_t_power(deg_free)), IPoly{Int(1)});
    IPoly den = one_minus_t_power(deg_free + static_cast<long>(indices.size()));
    // cancel shared (1-t) factors for a reduced display form
    for (;;) {
      auto qn = ipoly_div_one_minus_t(num);
      if (!qn) break;
      auto qd = ipoly_div_one_minus_t(den);
      if (!qd) break;
      num = *qn;
      den = *qd;
    }
    NewtonHilbertSeries series;
    NewtonHilbertSeries::RationalForm f{num, den};
    auto direct = newton_hilbert_series(m, k_bound);
    auto expanded = expand_series(f, k_bound);
    if (expanded != direct.coefficients) {
      // recurrence and direct ranks disagree within the bound; report the
      // direct series and flag the mismatch
      r.series = direct;
      r.note = "series recurrence does not match direct ranks within the bound";
      r.certified = false;
      return r;
    }
    series.coefficients = direct.coefficients;
    series.rational_form = f;
    r.series = series;
    return r;
  };

  // shortest sequence first, lexicographic among equal lengths
  for (int r = 0; r <= n; ++r) {
    std::vector<int> idx(r);
    std::vector<bool> used(n + 1, false);
    bool found = false;
    CmReport best;
    auto rec = [&](auto&& self, int pos) -> bool {
      if (found) return true;
      if (pos == r) {
        auto res = try_sequence(idx);
        if (res && res->certified) {
          best = *res;
          found = true;
          return true;
        }
        return false;
      }
      for (int i = 1; i <= n; ++i) {
        if (used[i]) continue;
        used[i] = true;
        idx[pos] = i;
        if (self(self, pos + 1)) return true;
        used[i] = false;
      }
      return false;
    };
    rec(rec, 0);
    if (found) return best;
  }
  report.note = "no coordinate sequence certifies the Cohen-Macaulay property within the bound";
  return report;
}

SubSemimodule cm_fixture(long d) {
  if (d < 1) throw error(errc::index_out_of_range, "the family needs d >= 1");
  auto pts = degree_points(3, d);
  std::vector<LatticePoint> s_par;
  std::vector<LatticePoint> s_perp;
  for (const auto& p : pts) {
    if (p.c[0] >= 1)
      s_par.push_back(p);
    else
      s_perp.push_back(p);
  }
  std::vector<LatticePolytope> gens;
  for (const auto& q : s_perp) {
    std::vector<LatticePoint> hp = s_par;
    hp.push_back(q);
    gens.push_back(hull(3, std::move(hp)));
  }
  return SubSemimodule::make(3, std::move(gens));
}

}  // namespace polysemi
