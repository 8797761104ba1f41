#include "polysemi/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "polysemi/linalg.hpp"

namespace polysemi {

Int LatticePoint::coordinate_sum() const {
  Int s = 0;
  for (const Int& v : c) s += v;
  return s;
}

bool LatticePoint::operator<(const LatticePoint& o) const {
  return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

LatticePoint LatticePoint::operator+(const LatticePoint& o) const {
  LatticePoint r;
  r.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

LatticePoint LatticePoint::operator-(const LatticePoint& o) const {
  LatticePoint r;
  r.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

bool LatticePoint::nonnegative() const {
  for (const Int& v : c) {
    if (v < 0) return false;
  }
  return true;
}

LatticePoint origin_point(int n) {
  LatticePoint p;
  p.c.assign(n, Int(0));
  return p;
}

LatticePoint coordinate_point(int i, int n) {
  if (i < 1 || i > n) throw error(errc::index_out_of_range, "coordinate index out of range");
  LatticePoint p = origin_point(n);
  p.c[i - 1] = 1;
  return p;
}

LatticePolytope LatticePolytope::zero(int dim) { return LatticePolytope(dim, true, {}); }

LatticePolytope LatticePolytope::point(const LatticePoint& p) {
  if (!p.nonnegative()) throw error(errc::negative_coordinate, "point has a negative coordinate");
  return LatticePolytope(p.dim(), false, {p});
}

bool LatticePolytope::operator<(const LatticePolytope& o) const {
  if (zero_ != o.zero_) return zero_ && !o.zero_;
  if (dim_ != o.dim_) return dim_ < o.dim_;
  return std::lexicographical_compare(verts_.begin(), verts_.end(), o.verts_.begin(),
                                      o.verts_.end());
}

namespace {

Int to_int(const Rat& v) {
  if (v.get_den() != 1) throw error(errc::internal, "expected an integer value");
  return v.get_num();
}

Int cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.c[0] - o.c[0]) * (b.c[1] - o.c[1]) - (a.c[1] - o.c[1]) * (b.c[0] - o.c[0]);
}

// Andrew's monotone chain on lexicographically sorted distinct points.
// Returns the boundary counterclockwise starting at the lex-min vertex;
// collinear interior points are dropped.
std::vector<LatticePoint> chain2d(const std::vector<LatticePoint>& pts) {
  const size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<LatticePoint> lower, upper;
  for (const auto& p : pts) {
    while (lower.size() >= 2 && cross2(lower[lower.size() - 2], lower.back(), p) <= 0)
      lower.pop_back();
    lower.push_back(p);
  }
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (upper.size() >= 2 && cross2(upper[upper.size() - 2], upper.back(), *it) <= 0)
      upper.pop_back();
    upper.push_back(*it);
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// p = a + t (b - a) with t in [0,1]?  Exact, division free.
bool on_segment(const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
  const int n = p.dim();
  // p - a and b - a must be parallel with a compatible non-negative ratio
  int pivot = -1;
  for (int j = 0; j < n; ++j) {
    if (b.c[j] != a.c[j]) { pivot = j; break; }
  }
  if (pivot < 0) return p == a;
  Int num = p.c[pivot] - a.c[pivot];
  Int den = b.c[pivot] - a.c[pivot];
  // t = num/den must satisfy 0 <= t <= 1 and scale every coordinate
  if (den > 0) {
    if (num < 0 || num > den) return false;
  } else {
    if (num > 0 || num < den) return false;
  }
  for (int j = 0; j < n; ++j) {
    if ((p.c[j] - a.c[j]) * den != (b.c[j] - a.c[j]) * num) return false;
  }
  return true;
}

// Affine rank of a point set together with a coordinate pair onto which a
// rank-2 configuration projects faithfully.
int affine_rank_points(const std::vector<LatticePoint>& pts, int* proj1 = nullptr,
                       int* proj2 = nullptr) {
  if (pts.size() <= 1) return 0;
  const int n = pts[0].dim();
  QMat edges;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec row(n);
    for (int j = 0; j < n; ++j) row[j] = Rat(pts[i].c[j] - pts[0].c[j]);
    edges.push_back(std::move(row));
  }
  QMat reduced = edges;
  std::vector<int> piv;
  int r = row_reduce(reduced, &piv);
  if (r == 2 && proj1 && proj2) {
    *proj1 = piv[0];
    *proj2 = piv[1];
  }
  return r;
}

// Exact feasibility of  sum(l_i q_i) = p, sum(l_i) = 1, l >= 0  via a
// phase-one simplex with Bland's rule.
bool in_convex_hull_lp(const LatticePoint& p, const std::vector<LatticePoint>& q) {
  const int n = p.dim();
  const int m = static_cast<int>(q.size());
  const int rows = n + 1;
  QMat a(rows, QVec(m, Rat(0)));
  QVec b(rows, Rat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = Rat(q[j].c[i]);
    b[i] = Rat(p.c[i]);
  }
  for (int j = 0; j < m; ++j) a[rows - 1][j] = 1;
  b[rows - 1] = 1;
  for (int i = 0; i < rows; ++i) {
    if (b[i] < 0) {
      for (int j = 0; j < m; ++j) a[i][j] = -a[i][j];
      b[i] = -b[i];
    }
  }
  // tableau columns: m structural + rows artificial
  std::vector<int> basis(rows);
  QMat t(rows, QVec(m + rows, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < m; ++j) t[i][j] = a[i][j];
    t[i][m + i] = 1;
    basis[i] = m + i;
  }
  QVec cost(m + rows, Rat(0));
  Rat objective(0);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < m; ++j) cost[j] -= t[i][j];
    objective -= b[i];
  }
  for (;;) {
    int enter = -1;
    for (int j = 0; j < m; ++j) {  // artificials never re-enter
      if (cost[j] < 0) { enter = j; break; }
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = b[i] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return false;  // unbounded: cannot happen with sum(l)=1
    Rat piv = t[leave][enter];
    for (int j = 0; j < m + rows; ++j) t[leave][j] /= piv;
    b[leave] /= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (int j = 0; j < m + rows; ++j) t[i][j] -= f * t[leave][j];
      b[i] -= f * b[leave];
    }
    Rat fc = cost[enter];
    for (int j = 0; j < m + rows; ++j) cost[j] -= fc * t[leave][j];
    objective -= fc * b[leave];
    basis[leave] = enter;
  }
  return objective == 0;
}

void check_same_dim(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim())
    throw error(errc::mixed_dimension, "operands live in different ambient dimensions");
}

}  // namespace

LatticePolytope hull(int dim, std::vector<LatticePoint> pts) {
  for (const auto& p : pts) {
    if (p.dim() != dim) throw error(errc::mixed_dimension, "point dimension mismatch in hull");
    if (!p.nonnegative()) throw error(errc::negative_coordinate, "hull input has a negative coordinate");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return LatticePolytope::zero(dim);
  if (pts.size() == 1 || dim == 0) return LatticePolytope(dim, false, {pts[0]});
  if (dim == 1) return LatticePolytope(dim, false, {pts.front(), pts.back()});
  std::vector<LatticePoint> ext;
  if (dim == 2) {
    ext = chain2d(pts);
  } else {
    int j1 = 0, j2 = 0;
    int r = affine_rank_points(pts, &j1, &j2);
    if (r == 1) {
      // all on a line: keep the endpoints of the parameter range
      ext = {pts.front(), pts.back()};  // lexicographic order is monotone on a line
    } else if (r == 2) {
      // project onto a faithful coordinate plane and run the planar hull
      std::vector<LatticePoint> flat;
      flat.reserve(pts.size());
      for (const auto& p : pts) {
        LatticePoint q;
        q.c = {p.c[j1], p.c[j2]};
        flat.push_back(std::move(q));
      }
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
      auto boundary = chain2d(flat);
      std::set<LatticePoint> keep(boundary.begin(), boundary.end());
      for (const auto& p : pts) {
        LatticePoint q;
        q.c = {p.c[j1], p.c[j2]};
        if (keep.count(q)) ext.push_back(p);
      }
    } else {
      std::vector<LatticePoint> others;
      for (size_t i = 0; i < pts.size(); ++i) {
        others.clear();
        for (size_t j = 0; j < pts.size(); ++j) {
          if (j != i) others.push_back(pts[j]);
        }
        if (!in_convex_hull_lp(pts[i], others)) ext.push_back(pts[i]);
      }
    }
  }
  std::sort(ext.begin(), ext.end());
  ext.erase(std::unique(ext.begin(), ext.end()), ext.end());
  return LatticePolytope(dim, false, std::move(ext));
}

LatticePolytope oplus(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.is_zero()) {
    if (!q.is_zero()) check_same_dim(p, q);
    return q;
  }
  if (q.is_zero()) {
    check_same_dim(p, q);
    return p;
  }
  check_same_dim(p, q);
  std::vector<LatticePoint> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return hull(p.dim(), std::move(pts));
}

LatticePolytope odot(const LatticePolytope& p, const LatticePolytope& q) {
  check_same_dim(p, q);
  if (p.is_zero() || q.is_zero()) return LatticePolytope::zero(p.dim());
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) pts.push_back(a + b);
  return hull(p.dim(), std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, const LatticePoint& t) {
  if (p.is_zero()) return p;
  std::vector<LatticePoint> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return hull(p.dim(), std::move(pts));
}

std::optional<long> degree(const LatticePolytope& p) {
  if (p.is_zero()) throw error(errc::zero_element, "0_A belongs to no graded piece");
  Int s = p.vertices()[0].coordinate_sum();
  for (const auto& v : p.vertices()) {
    if (v.coordinate_sum() != s) return std::nullopt;
  }
  return to_long(s);
}

bool contains(const LatticePolytope& p, const LatticePoint& x) {
  if (p.is_zero()) return false;
  if (p.dim() != x.dim()) throw error(errc::mixed_dimension, "containment dimension mismatch");
  const auto& vs = p.vertices();
  if (vs.size() == 1) return vs[0] == x;
  if (p.dim() == 1) return vs.front().c[0] <= x.c[0] && x.c[0] <= vs.back().c[0];
  if (vs.size() == 2) return on_segment(vs[0], vs[1], x);
  if (p.dim() == 2) {
    auto cyc = chain2d(vs);
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (cross2(cyc[i], cyc[(i + 1) % cyc.size()], x) < 0) return false;
    }
    return true;
  }
  {
    // planar polytopes in higher dimension: test in a faithful plane
    int j1 = 0, j2 = 0;
    if (affine_rank_points(vs, &j1, &j2) == 2) {
      std::vector<LatticePoint> flat;
      flat.reserve(vs.size() + 1);
      for (const auto& v : vs) {
        LatticePoint q;
        q.c = {v.c[j1], v.c[j2]};
        flat.push_back(std::move(q));
      }
      // x must sit in the affine plane of p: check one off-plane coordinate
      // relation via barycentric reconstruction below; cheap route: solve the
      // planar problem first, then verify exact affine consistency
      LatticePoint xf;
      xf.c = {x.c[j1], x.c[j2]};
      std::sort(flat.begin(), flat.end());
      auto cyc = chain2d(flat);
      for (size_t i = 0; i < cyc.size(); ++i) {
        if (cross2(cyc[i], cyc[(i + 1) % cyc.size()], xf) < 0) return false;
      }
      // inside the projected polygon; lift back and compare against the
      // plane through three affinely independent vertices
      const LatticePoint& a = vs[0];
      LatticePoint e1, e2;
      bool found = false;
      for (size_t i = 1; i < vs.size() && !found; ++i) {
        for (size_t j = i + 1; j < vs.size() && !found; ++j) {
          e1 = vs[i] - a;
          e2 = vs[j] - a;
          if (e1.c[j1] * e2.c[j2] - e1.c[j2] * e2.c[j1] != 0) found = true;
        }
      }
      if (!found) return in_convex_hull_lp(x, vs);
      // coordinates (s,t) of x in the plane frame, solved in the projection
      Int det = e1.c[j1] * e2.c[j2] - e1.c[j2] * e2.c[j1];
      Int rx = x.c[j1] - a.c[j1], ry = x.c[j2] - a.c[j2];
      Int s_num = rx * e2.c[j2] - ry * e2.c[j1];
      Int t_num = e1.c[j1] * ry - e1.c[j2] * rx;
      for (int j = 0; j < p.dim(); ++j) {
        if ((x.c[j] - a.c[j]) * det != s_num * e1.c[j] + t_num * e2.c[j]) return false;
      }
      return true;
    }
  }
  return in_convex_hull_lp(x, vs);
}

bool contains(const LatticePolytope& p, const LatticePolytope& q) {
  if (q.is_zero()) return true;  // empty-set reading: 0_A sits inside everything
  if (p.is_zero()) return false;
  check_same_dim(p, q);
  for (const auto& v : q.vertices()) {
    if (!contains(p, v)) return false;
  }
  return true;
}

namespace {

QMat vertex_coords(const LatticePolytope& p) {
  QMat m;
  for (const auto& v : p.vertices()) {
    QVec row;
    row.reserve(v.c.size());
    for (const Int& x : v.c) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return m;
}

QMat edge_matrix(const QMat& pts) {
  QMat e;
  for (size_t i = 1; i < pts.size(); ++i) {
    QVec row(pts[i].size());
    for (size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
    e.push_back(std::move(row));
  }
  return e;
}

struct Facet {
  QVec normal;  // a . x = b on the facet, a . x <= b inside
  Rat offset;
  std::vector<int> members;
};

// All facets of a full-dimensional point configuration in Q^d, found by
// enumerating d-subsets that span a hyperplane and keeping the one-sided ones.
std::vector<Facet> enumerate_facets(const std::vector<QVec>& pts, int d) {
  const int m = static_cast<int>(pts.size());
  std::vector<Facet> out;
  std::set<std::pair<std::vector<std::string>, std::string>> seen;
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = d - 1;
    while (i >= 0 && idx[i] == m - d + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < d) return out;
  do {
    QMat sys;
    for (int i : idx) {
      QVec row = pts[i];
      row.push_back(Rat(-1));
      sys.push_back(std::move(row));
    }
    QMat ker = kernel(std::move(sys), d + 1);
    if (ker.size() != 1) continue;  // subset does not span a hyperplane
    QVec a(ker[0].begin(), ker[0].begin() + d);
    Rat b = ker[0][d];
    // canonical primitive integer form
    Int lcm = 1;
    for (const Rat& x : a) lcm = lcm * x.get_den() / gcd(lcm, Int(x.get_den()));
    lcm = lcm * b.get_den() / gcd(lcm, Int(b.get_den()));
    std::vector<Int> ai(d);
    for (int i = 0; i < d; ++i) ai[i] = to_int(a[i] * Rat(lcm));
    Int bi = to_int(b * Rat(lcm));
    Int g = abs(bi);
    for (const Int& x : ai) g = gcd(g, x);
    if (g > 1) {
      for (Int& x : ai) x /= g;
      bi /= g;
    }
    int side = 0;  // orient so the polytope satisfies a.x <= b
    std::vector<int> members;
    bool facet = true;
    for (int i = 0; i < m && facet; ++i) {
      Rat v = -Rat(bi);
      for (int j = 0; j < d; ++j) v += Rat(ai[j]) * pts[i][j];
      int s = sgn(v);
      if (s == 0) {
        members.push_back(i);
      } else if (side == 0) {
        side = s;
      } else if (s != side) {
        facet = false;
      }
    }
    if (!facet || side == 0) continue;
    if (side > 0) {
      for (Int& x : ai) x = -x;
      bi = -bi;
    }
    std::vector<std::string> key;
    for (const Int& x : ai) key.push_back(x.get_str());
    auto inserted = seen.insert({key, bi.get_str()});
    if (!inserted.second) continue;
    Facet f;
    for (const Int& x : ai) f.normal.emplace_back(x);
    f.offset = Rat(bi);
    f.members = std::move(members);
    out.push_back(std::move(f));
  } while (advance());
  return out;
}

// Coordinates of a point set inside its affine hull, over an affine basis
// chosen from the set itself. Returns points in Q^r, r = affine rank.
std::vector<QVec> parametrize(const std::vector<QVec>& pts, int* rank_out) {
  QMat edges = edge_matrix(pts);
  QMat reduced = edges;
  std::vector<int> piv;
  row_reduce(reduced, &piv);
  // pick a maximal independent set of edge rows greedily
  QMat basis;
  QMat acc;
  for (const auto& e : edges) {
    QMat test = acc;
    test.push_back(e);
    if (rank(test) > static_cast<int>(acc.size())) {
      acc.push_back(e);
      basis.push_back(e);
    }
  }
  const int r = static_cast<int>(basis.size());
  if (rank_out) *rank_out = r;
  // solve B^T c = p - p0 for each point (consistent by construction)
  std::vector<QVec> out;
  for (const auto& p : pts) {
    QMat sys;
    for (size_t j = 0; j < p.size(); ++j) {
      QVec row(r);
      for (int k = 0; k < r; ++k) row[k] = basis[k][j];
      sys.push_back(std::move(row));
    }
    QVec rhs(p.size());
    for (size_t j = 0; j < p.size(); ++j) rhs[j] = p[j] - pts[0][j];
    auto sol = solve(std::move(sys), rhs);
    if (!sol) throw error(errc::internal, "point outside its own affine hull");
    out.push_back(std::move(*sol));
  }
  return out;
}

void triangulate_rec(const std::vector<QVec>& pts, int d,
                     std::vector<std::vector<int>>& out) {
  const int m = static_cast<int>(pts.size());
  if (d == 0 || m == d + 1) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    out.push_back(all);
    return;
  }
  if (d == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    out.push_back({lo, hi});
    return;
  }
  auto facets = enumerate_facets(pts, d);
  for (const auto& f : facets) {
    bool has_apex = false;
    for (int i : f.members) {
      if (i == 0) { has_apex = true; break; }
    }
    if (has_apex) continue;
    std::vector<QVec> fpts;
    for (int i : f.members) fpts.push_back(pts[i]);
    int fr = 0;
    auto fcoords = parametrize(fpts, &fr);
    std::vector<std::vector<int>> fsimps;
    triangulate_rec(fcoords, d - 1, fsimps);
    for (const auto& s : fsimps) {
      std::vector<int> simp{0};
      for (int li : s) simp.push_back(f.members[li]);
      out.push_back(std::move(simp));
    }
  }
}

Rat simplex_volume(const std::vector<QVec>& pts, const std::vector<int>& simp, int d) {
  QMat m;
  for (int i = 1; i <= d; ++i) {
    QVec row(d);
    for (int j = 0; j < d; ++j) row[j] = pts[simp[i]][j] - pts[simp[0]][j];
    m.push_back(std::move(row));
  }
  Rat det = determinant(std::move(m));
  if (det < 0) det = -det;
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return det / Rat(fact);
}

Rat full_dim_volume(const std::vector<QVec>& pts, int d) {
  std::vector<std::vector<int>> simps;
  triangulate_rec(pts, d, simps);
  Rat total(0);
  for (const auto& s : simps) total += simplex_volume(pts, s, d);
  return total;
}

// Lattice-preserving coordinates on the affine hull: a Z-basis of the
// direction lattice via the integer kernel of the orthogonal complement.
std::vector<QVec> lattice_coords(const LatticePolytope& p, int* rank_out) {
  const int n = p.dim();
  QMat pts = vertex_coords(p);
  QMat edges = edge_matrix(pts);
  QMat orth = kernel(std::move(edges), n);  // vectors orthogonal to every edge
  std::vector<std::vector<Int>> a;
  for (const auto& row : orth) {
    Int lcm = 1;
    for (const Rat& x : row) lcm = lcm * x.get_den() / gcd(lcm, Int(x.get_den()));
    std::vector<Int> r(n);
    for (int j = 0; j < n; ++j) r[j] = to_int(row[j] * Rat(lcm));
    a.push_back(std::move(r));
  }
  auto basis = integer_kernel(a, n);  // columns of the direction lattice
  const int d = static_cast<int>(basis.size());
  if (rank_out) *rank_out = d;
  std::vector<QVec> out;
  for (const auto& v : p.vertices()) {
    QMat sys(n, QVec(d));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) sys[i][j] = Rat(basis[j][i]);
    QVec rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = Rat(v.c[i] - p.vertices()[0].c[i]);
    auto sol = solve(std::move(sys), rhs);
    if (!sol) throw error(errc::internal, "lattice projection failed");
    for (const Rat& x : *sol) {
      if (x.get_den() != 1) throw error(errc::internal, "lattice projection not integral");
    }
    out.push_back(std::move(*sol));
  }
  return out;
}

}  // namespace

int affine_dim(const LatticePolytope& p) {
  if (p.is_zero()) return -1;
  QMat e = edge_matrix(vertex_coords(p));
  return rank(std::move(e));
}

RationalVolume volume(const LatticePolytope& p, VolumeMode mode) {
  if (mode == VolumeMode::relative && p.is_zero())
    throw error(errc::zero_element, "relative volume of 0_A is undefined");
  if (p.is_zero()) return {Rat(0), p.dim()};
  const int n = p.dim();
  if (mode == VolumeMode::ambient) {
    if (affine_dim(p) < n) return {Rat(0), n};
    return {full_dim_volume(vertex_coords(p), n), n};
  }
  int d = 0;
  auto coords = lattice_coords(p, &d);
  if (d == 0) return {Rat(1), 0};  // counting measure of a point
  return {full_dim_volume(coords, d), d};
}

std::vector<LatticePoint> lattice_points(const LatticePolytope& p) {
  std::vector<LatticePoint> out;
  if (p.is_zero()) return out;
  const int n = p.dim();
  if (n == 0) return {p.vertices()[0]};
  std::vector<Int> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    lo[j] = hi[j] = p.vertices()[0].c[j];
    for (const auto& v : p.vertices()) {
      if (v.c[j] < lo[j]) lo[j] = v.c[j];
      if (v.c[j] > hi[j]) hi[j] = v.c[j];
    }
  }
  LatticePoint t;
  t.c = lo;
  for (;;) {
    if (contains(p, t)) out.push_back(t);
    int j = n - 1;
    while (j >= 0) {
      ++t.c[j];
      if (t.c[j] <= hi[j]) break;
      t.c[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePoint> erosion(const LatticePolytope& v, const LatticePolytope& w) {
  if (v.is_zero() || w.is_zero())
    throw error(errc::zero_element, "erosion needs nonzero operands");
  check_same_dim(v, w);
  const int n = v.dim();
  std::vector<LatticePoint> out;
  if (n == 0) {
    out.push_back(origin_point(0));
    return out;
  }
  std::vector<Int> lo(n), hi(n);
  for (int j = 0; j < n; ++j) {
    Int vlo = v.vertices()[0].c[j], vhi = vlo;
    Int wlo = w.vertices()[0].c[j], whi = wlo;
    for (const auto& p : v.vertices()) {
      if (p.c[j] < vlo) vlo = p.c[j];
      if (p.c[j] > vhi) vhi = p.c[j];
    }
    for (const auto& p : w.vertices()) {
      if (p.c[j] < wlo) wlo = p.c[j];
      if (p.c[j] > whi) whi = p.c[j];
    }
    lo[j] = wlo - vlo;
    if (lo[j] < 0) lo[j] = 0;
    hi[j] = whi - vhi;
    if (hi[j] < lo[j]) return out;
  }
  LatticePoint t;
  t.c = lo;
  for (;;) {
    bool ok = true;
    for (const auto& p : v.vertices()) {
      if (!contains(w, p + t)) { ok = false; break; }
    }
    if (ok) out.push_back(t);
    int j = n - 1;
    while (j >= 0) {
      ++t.c[j];
      if (t.c[j] <= hi[j]) break;
      t.c[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Edge multiset of a 2-dimensional element: primitive direction -> total
// length, both traversal orientations for a segment.
using EdgeMap = std::map<std::pair<Int, Int>, Int>;

EdgeMap edge_map_2d(const LatticePolytope& p) {
  EdgeMap m;
  const auto& vs = p.vertices();
  if (vs.size() == 1) return m;
  auto add_edge = [&m](const LatticePoint& a, const LatticePoint& b) {
    Int dx = b.c[0] - a.c[0], dy = b.c[1] - a.c[1];
    Int g = gcd(abs(dx), abs(dy));
    m[{dx / g, dy / g}] += g;
  };
  if (vs.size() == 2) {
    add_edge(vs[0], vs[1]);
    add_edge(vs[1], vs[0]);
    return m;
  }
  auto cyc = chain2d(vs);
  for (size_t i = 0; i < cyc.size(); ++i) add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
  return m;
}

// Boundary walk realizing an edge multiset; arbitrary anchor, coordinates may
// go negative. Empty when the vectors do not close up.
std::optional<std::vector<LatticePoint>> polygon_shape(const EdgeMap& edges) {
  struct EV { Int x, y; };
  std::vector<EV> evs;
  for (const auto& [dir, len] : edges) evs.push_back({dir.first * len, dir.second * len});
  auto half = [](const EV& e) { return (e.y < 0 || (e.y == 0 && e.x < 0)) ? 1 : 0; };
  std::sort(evs.begin(), evs.end(), [&](const EV& a, const EV& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.x * b.y - a.y * b.x > 0;
  });
  std::vector<LatticePoint> pts;
  LatticePoint cur({0, 0});
  pts.push_back(cur);
  for (const auto& e : evs) {
    cur.c[0] += e.x;
    cur.c[1] += e.y;
    pts.push_back(cur);
  }
  if (!(pts.back() == pts.front())) return std::nullopt;
  pts.pop_back();
  return pts;
}

// Rebuild the polytope with a given edge multiset and lex-min vertex.
std::optional<LatticePolytope> polygon_from_edges(int dim, const EdgeMap& edges,
                                                  const LatticePoint& lexmin) {
  if (edges.empty()) {
    if (!lexmin.nonnegative()) return std::nullopt;
    return LatticePolytope::point(lexmin);
  }
  auto pts = polygon_shape(edges);
  if (!pts) return std::nullopt;
  LatticePoint mn = *std::min_element(pts->begin(), pts->end());
  std::vector<LatticePoint> shifted;
  for (const auto& p : *pts) {
    LatticePoint s = p - mn + lexmin;
    if (!s.nonnegative()) return std::nullopt;
    shifted.push_back(std::move(s));
  }
  return hull(dim, std::move(shifted));
}

std::optional<LatticePolytope> summand_2d(const LatticePolytope& v, const LatticePolytope& q) {
  EdgeMap ev = edge_map_2d(v);
  EdgeMap eq = edge_map_2d(q);
  EdgeMap rest = eq;
  for (const auto& [dir, len] : ev) {
    auto it = rest.find(dir);
    if (it == rest.end() || it->second < len) return std::nullopt;
    it->second -= len;
    if (it->second == 0) rest.erase(it);
  }
  LatticePoint base = q.vertices()[0] - v.vertices()[0];
  auto r = polygon_from_edges(q.dim(), rest, base);
  if (!r) return std::nullopt;
  if (!(odot(v, *r) == q)) return std::nullopt;
  return r;
}

std::optional<LatticePolytope> summand_erosion(const LatticePolytope& v,
                                               const LatticePolytope& q) {
  auto t = erosion(v, q);
  if (t.empty()) return std::nullopt;
  LatticePolytope r = hull(v.dim(), t);
  if (!(odot(v, r) == q)) return std::nullopt;
  return r;
}

}  // namespace

std::optional<LatticePolytope> is_summand(const LatticePolytope& v, const LatticePolytope& q) {
  if (v.is_zero() || q.is_zero())
    throw error(errc::zero_element, "summand test needs nonzero operands");
  check_same_dim(v, q);
  if (v.is_point()) {
    std::vector<LatticePoint> pts;
    for (const auto& p : q.vertices()) {
      LatticePoint s = p - v.vertices()[0];
      if (!s.nonnegative()) return std::nullopt;
      pts.push_back(std::move(s));
    }
    return hull(q.dim(), std::move(pts));
  }
  if (v.dim() == 2) return summand_2d(v, q);
  return summand_erosion(v, q);
}

namespace {

// Coordinatewise minimum over the vertices; additive under Minkowski sum,
// which is what makes it the right normalization for factor bookkeeping.
LatticePoint bbox_min(const LatticePolytope& p) {
  LatticePoint m = p.vertices()[0];
  for (const auto& v : p.vertices())
    for (int j = 0; j < p.dim(); ++j)
      if (v.c[j] < m.c[j]) m.c[j] = v.c[j];
  return m;
}

LatticePolytope translate_down(const LatticePolytope& p, const LatticePoint& t) {
  std::vector<LatticePoint> pts;
  for (const auto& v : p.vertices()) pts.push_back(v - t);
  return hull(p.dim(), std::move(pts));
}

struct FactorSearch {
  long budget;
  long used = 0;
  bool complete = true;
  std::map<LatticePolytope, std::vector<std::vector<LatticePolytope>>> memo;

  bool spend() {
    if (used >= budget) {
      complete = false;
      return false;
    }
    ++used;
    return true;
  }

  // Candidate summand shapes for a bbox-normalized polytope, themselves
  // bbox-normalized; points and p itself are skipped. In the plane the
  // candidates are the zero-sum sub-multisets of the edge multiset; in other
  // dimensions they are hulls of subsets of the bounding-box lattice.
  std::vector<LatticePolytope> candidates(const LatticePolytope& p) {
    std::set<LatticePolytope> uniq;
    if (p.dim() == 2) {
      EdgeMap em = edge_map_2d(p);
      std::vector<std::pair<std::pair<Int, Int>, long>> dirs;
      for (const auto& [d, l] : em) dirs.emplace_back(d, to_long(l));
      std::vector<long> pick(dirs.size(), 0);
      for (;;) {
        size_t i = 0;
        while (i < dirs.size()) {
          if (pick[i] < dirs[i].second) { ++pick[i]; break; }
          pick[i] = 0;
          ++i;
        }
        if (i == dirs.size()) break;
        Int sx = 0, sy = 0;
        EdgeMap sub;
        for (size_t j = 0; j < dirs.size(); ++j) {
          if (pick[j] == 0) continue;
          sx += dirs[j].first.first * pick[j];
          sy += dirs[j].first.second * pick[j];
          sub[dirs[j].first] = pick[j];
        }
        if (sx != 0 || sy != 0 || sub.empty()) continue;
        auto shape = polygon_shape(sub);
        if (!shape) continue;
        LatticePoint mn = shape->front();
        for (const auto& q : *shape)
          for (int j = 0; j < 2; ++j)
            if (q.c[j] < mn.c[j]) mn.c[j] = q.c[j];
        std::vector<LatticePoint> pts;
        for (const auto& q : *shape) pts.push_back(q - mn);
        LatticePolytope c = hull(2, std::move(pts));
        if (c.is_point() || c == p) continue;
        uniq.insert(std::move(c));
      }
    } else {
      std::vector<Int> hi(p.dim());
      for (const auto& v : p.vertices())
        for (int j = 0; j < p.dim(); ++j)
          if (v.c[j] > hi[j]) hi[j] = v.c[j];
      Int cells = 1;
      for (const Int& h : hi) cells *= h + 1;
      if (!cells.fits_slong_p() || cells.get_si() > 20) {
        complete = false;
        return {};
      }
      std::vector<LatticePoint> grid;
      LatticePoint cur = origin_point(p.dim());
      auto rec = [&](auto&& self, int pos) -> void {
        if (pos == p.dim()) {
          grid.push_back(cur);
          return;
        }
        for (Int v = 0; v <= hi[pos]; ++v) {
          cur.c[pos] = v;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
      const size_t m = grid.size();
      for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
        std::vector<LatticePoint> pts;
        for (size_t j = 0; j < m; ++j)
          if (mask & (size_t(1) << j)) pts.push_back(grid[j]);
        LatticePolytope cand = hull(p.dim(), std::move(pts));
        if (cand.is_point() || cand == p) continue;
        if (bbox_min(cand).coordinate_sum() != 0) continue;
        uniq.insert(std::move(cand));
      }
    }
    std::vector<LatticePolytope> out(uniq.begin(), uniq.end());
    std::stable_sort(out.begin(), out.end(), [](const LatticePolytope& a, const LatticePolytope& b) {
      Rat va = volume(a, VolumeMode::ambient).value;
      Rat vb = volume(b, VolumeMode::ambient).value;
      if (va != vb) return va < vb;
      size_t la = a.vertices().size(), lb = b.vertices().size();
      if (la != lb) return la < lb;
      return a < b;
    });
    return out;
  }

  // every factorization of a normalized polytope into irreducibles, each as a
  // sorted factor list
  std::vector<std::vector<LatticePolytope>> all(const LatticePolytope& p) {
    if (p.is_point()) return {{p}};
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    std::set<std::vector<LatticePolytope>> res;
    bool decomposable = false;
    for (const auto& v : candidates(p)) {
      if (!spend()) break;
      auto r = is_summand(v, p);
      if (!r) continue;
      decomposable = true;
      auto left = all(v);
      auto right = all(*r);
      for (const auto& fl : left) {
        for (const auto& fr : right) {
          std::vector<LatticePolytope> f = fl;
          f.insert(f.end(), fr.begin(), fr.end());
          std::sort(f.begin(), f.end());
          res.insert(std::move(f));
        }
      }
    }
    std::vector<std::vector<LatticePolytope>> out;
    if (!decomposable) {
      out.push_back({p});
    } else {
      out.assign(res.begin(), res.end());
    }
    memo[p] = out;
    return out;
  }

  bool irreducible(const LatticePolytope& p) {
    if (p.is_point()) return true;
    for (const auto& v : candidates(p)) {
      if (!spend()) return true;  // best effort once the budget is gone
      if (is_summand(v, p)) return false;
    }
    return true;
  }

  std::vector<LatticePolytope> one(LatticePolytope p) {
    std::vector<LatticePolytope> out;
    for (;;) {
      if (p.is_point()) {
        if (out.empty()) out.push_back(p);
        return out;
      }
      bool split = false;
      for (const auto& v : candidates(p)) {
        if (!spend()) return out.empty() ? std::vector<LatticePolytope>{p} : out;
        auto r = is_summand(v, p);
        if (!r || !irreducible(v)) continue;
        out.push_back(v);
        p = *r;
        split = true;
        break;
      }
      if (!split) {
        out.push_back(p);
        return out;
      }
    }
  }
};

}  // namespace

Factorization factor_irreducible(const LatticePolytope& p, long budget, bool enumerate_all) {
  if (p.is_zero()) throw error(errc::zero_element, "0_A has no factorization");
  Factorization result;
  FactorSearch search{budget, 0, true, {}};
  LatticePoint shift = bbox_min(p);
  bool shifted = shift.coordinate_sum() != 0;
  LatticePolytope base = shifted ? translate_down(p, shift) : p;
  if (base.is_point()) {
    result.factors = {p};
    if (enumerate_all) result.all = {{p}};
    result.tests_used = search.used;
    return result;
  }
  auto attach_shift = [&](std::vector<LatticePolytope> fs) {
    if (shifted) {
      fs.insert(fs.begin(), LatticePolytope::point(shift));
    }
    return fs;
  };
  result.factors = attach_shift(search.one(base));
  if (enumerate_all) {
    for (auto& f : search.all(base)) result.all.push_back(attach_shift(f));
  }
  result.complete = search.complete;
  result.tests_used = search.used;
  return result;
}

std::vector<std::vector<int>> facet_cycles(const LatticePolytope& p) {
  if (p.is_zero() || p.is_point()) return {};
  const auto& vs = p.vertices();
  if (p.dim() == 2) {
    auto cyc = chain2d(vs);
    std::vector<int> idx;
    for (const auto& c : cyc) {
      auto it = std::lower_bound(vs.begin(), vs.end(), c);
      idx.push_back(static_cast<int>(it - vs.begin()));
    }
    return {idx};
  }
  QMat pts = vertex_coords(p);
  int d = affine_dim(p);
  if (d == 1) {
    return {{0, static_cast<int>(vs.size()) - 1}};
  }
  if (d < p.dim()) throw error(errc::internal, "facet cycles need a full-dimensional polytope");
  auto facets = enumerate_facets(pts, p.dim());
  std::vector<std::vector<int>> out;
  for (const auto& f : facets) {
    std::vector<QVec> fpts;
    for (int i : f.members) fpts.push_back(pts[i]);
    int fr = 0;
    auto coords = parametrize(fpts, &fr);
    if (fr != 2) {  // only 3D solids need cycles; lower-dim facets come sorted
      out.push_back(f.members);
      continue;
    }
    // boundary order inside the facet plane
    Int scale = 1;
    for (const auto& c : coords)
      for (const Rat& x : c) scale = scale * x.get_den() / gcd(scale, Int(x.get_den()));
    std::vector<LatticePoint> scaled;
    for (const auto& c : coords) {
      LatticePoint lp;
      lp.c = {to_int(c[0] * Rat(scale)), to_int(c[1] * Rat(scale))};
      scaled.push_back(lp);
    }
    // order by angle around the centroid using cross products
    std::vector<int> order(f.members.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    LatticePoint centroid({0, 0});
    for (const auto& s : scaled) {
      centroid.c[0] += s.c[0];
      centroid.c[1] += s.c[1];
    }
    Int cnt(static_cast<long>(scaled.size()));
    auto angle_less = [&](int a, int b) {
      Int ax = scaled[a].c[0] * cnt - centroid.c[0], ay = scaled[a].c[1] * cnt - centroid.c[1];
      Int bx = scaled[b].c[0] * cnt - centroid.c[0], by = scaled[b].c[1] * cnt - centroid.c[1];
      int ha = (ay < 0 || (ay == 0 && ax < 0)) ? 1 : 0;
      int hb = (by < 0 || (by == 0 && bx < 0)) ? 1 : 0;
      if (ha != hb) return ha < hb;
      return ax * by - ay * bx > 0;
    };
    std::sort(order.begin(), order.end(), angle_less);
    std::vector<int> cycle;
    for (int i : order) cycle.push_back(f.members[i]);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<LatticePoint> degree_points(int dim, long s) {
  std::vector<LatticePoint> out;
  LatticePoint cur = origin_point(dim);
  auto rec = [&](auto&& self, int pos, long rest) -> void {
    if (pos == dim - 1) {
      cur.c[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      cur.c[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (dim == 0) {
    if (s == 0) out.push_back(origin_point(0));
    return out;
  }
  rec(rec, 0, s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticePolytope> polytopes_in_box(int dim, long box, int max_vertices) {
  std::vector<LatticePoint> grid;
  {
    LatticePoint cur = origin_point(dim);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == dim) {
        grid.push_back(cur);
        return;
      }
      for (long v = 0; v <= box; ++v) {
        cur.c[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  const size_t m = grid.size();
  std::set<LatticePolytope> uniq;
  if (max_vertices <= 0) {
    if (m > 20)
      throw error(errc::internal, "box too large for exhaustive polytope enumeration");
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<LatticePoint> pts;
      for (size_t j = 0; j < m; ++j) {
        if (mask & (size_t(1) << j)) pts.push_back(grid[j]);
      }
      uniq.insert(hull(dim, std::move(pts)));
    }
  } else {
    std::vector<int> idx;
    auto rec = [&](auto&& self, size_t start, int left) -> void {
      if (!idx.empty()) {
        std::vector<LatticePoint> pts;
        for (int i : idx) pts.push_back(grid[i]);
        uniq.insert(hull(dim, std::move(pts)));
      }
      if (left == 0) return;
      for (size_t i = start; i < m; ++i) {
        idx.push_back(static_cast<int>(i));
        self(self, i + 1, left - 1);
        idx.pop_back();
      }
    };
    rec(rec, 0, max_vertices);
  }
  return std::vector<LatticePolytope>(uniq.begin(), uniq.end());
}

}  // namespace polysemi
