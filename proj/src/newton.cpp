#include "polysemi/newton.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "polysemi/linalg.hpp"

namespace polysemi {

Polynomial Polynomial::monomial(const LatticePoint& e, const Rat& c) {
  Polynomial f;
  f.dim = e.dim();
  if (c != 0) f.terms[e] = c;
  return f;
}

std::optional<long> Polynomial::homogeneous_degree() const {
  if (terms.empty()) return std::nullopt;
  Int d = terms.begin()->first.coordinate_sum();
  for (const auto& [e, c] : terms) {
    if (e.coordinate_sum() != d) return std::nullopt;
  }
  return to_long(d);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (dim != o.dim) throw error(errc::mixed_dimension, "polynomial dimension mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms) {
    auto it = r.terms.find(e);
    if (it == r.terms.end()) {
      r.terms.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(Rat(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (dim != o.dim) throw error(errc::mixed_dimension, "polynomial dimension mismatch");
  Polynomial r = Polynomial::zero(dim);
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      LatticePoint e = e1 + e2;
      Rat c = c1 * c2;
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        r.terms.emplace(std::move(e), c);
      } else {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r = Polynomial::zero(dim);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms.emplace(e, v * c);
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  auto a = terms.begin();
  auto b = o.terms.begin();
  for (; a != terms.end() && b != o.terms.end(); ++a, ++b) {
    if (a->first < b->first) return true;
    if (b->first < a->first) return false;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms.end() && b != o.terms.end();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int dim;

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::parse_error,
                "column " + std::to_string(pos + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }
  // number := int [ '/' int ]
  Rat number() {
    Int num = integer();
    if (eat('/')) {
      Int den = integer();
      if (den == 0) fail("division by zero");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }
  // factor := number | 'x' idx [ '^' int ]
  void factor(Rat& coeff, LatticePoint& expo) {
    skip_ws();
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      Int idx = integer();
      long i = to_long(idx);
      if (i < 1 || i > dim) fail("variable index out of range");
      Int e = 1;
      if (eat('^')) e = integer();
      expo.c[i - 1] += e;
      return;
    }
    if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff *= number();
      return;
    }
    fail("expected a coefficient or a variable");
  }
  Polynomial run() {
    Polynomial f = Polynomial::zero(dim);
    skip_ws();
    if (pos == s.size()) fail("empty polynomial");
    bool first = true;
    for (;;) {
      skip_ws();
      if (pos == s.size()) break;
      Rat sign(1);
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Rat coeff = sign;
      LatticePoint expo = origin_point(dim);
      factor(coeff, expo);
      while (eat('*')) factor(coeff, expo);
      f = f + Polynomial::monomial(expo, coeff);
    }
    if (f.is_zero() && !first) return f;
    return f;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
  Parser p{text, 0, dim};
  return p.run();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    Rat v = c;
    if (v < 0) {
      os << (first ? "-" : " - ");
      v = -v;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    bool constant = e.coordinate_sum() == 0;
    bool unit = v == 1;
    if (!unit || constant) os << v.get_str();
    bool printed = !unit || constant;
    for (int i = 0; i < e.dim(); ++i) {
      if (e.c[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << (i + 1);
      if (e.c[i] > 1) os << "^" << e.c[i].get_str();
      printed = true;
    }
  }
  return os.str();
}

GradedIdeal GradedIdeal::make(int dim, std::vector<Polynomial> gens) {
  for (const auto& g : gens) {
    if (g.is_zero()) throw error(errc::zero_element, "ideal generators must be nonzero");
    if (g.dim != dim) throw error(errc::mixed_dimension, "ideal generator dimension mismatch");
    if (!g.homogeneous_degree())
      throw error(errc::mixed_degree, "ideal generators must be homogeneous");
  }
  return GradedIdeal{dim, std::move(gens)};
}

LatticePolytope newton_polytope(const Polynomial& f) {
  std::vector<LatticePoint> pts;
  pts.reserve(f.terms.size());
  for (const auto& [e, c] : f.terms) pts.push_back(e);
  return hull(f.dim, std::move(pts));
}

namespace {

// coefficient matrix of { m*g : g generator of degree <= k } over the
// degree-k monomial basis, row reduced
struct DegreeData {
  std::vector<LatticePoint> monomials;          // sorted basis of degree k
  std::map<LatticePoint, int> index;
  QMat rows;                                    // reduced, rank rows kept
};

DegreeData degree_data(const GradedIdeal& ideal, long k) {
  DegreeData d;
  d.monomials = degree_points(ideal.dim, k);
  for (size_t i = 0; i < d.monomials.size(); ++i)
    d.index[d.monomials[i]] = static_cast<int>(i);
  QMat rows;
  for (const auto& g : ideal.generators) {
    long dg = *g.homogeneous_degree();
    if (dg > k) continue;
    for (const auto& m : degree_points(ideal.dim, k - dg)) {
      QVec row(d.monomials.size(), Rat(0));
      for (const auto& [e, c] : g.terms) row[d.index.at(e + m)] = c;
      rows.push_back(std::move(row));
    }
  }
  int r = row_reduce(rows);
  rows.resize(r);
  d.rows = std::move(rows);
  return d;
}

Polynomial row_to_polynomial(const QVec& row, const std::vector<LatticePoint>& monomials,
                             int dim) {
  Polynomial f = Polynomial::zero(dim);
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) f.terms[monomials[j]] = row[j];
  }
  return f;
}

// primitive integer normalization with positive leading coefficient
void normalize_vector(QVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = lcm * x.get_den() / gcd(lcm, Int(x.get_den()));
  Int content = 0;
  for (Rat& x : v) {
    x *= Rat(lcm);
    content = gcd(content, x.get_num());
  }
  if (content > 1)
    for (Rat& x : v) x /= Rat(content);
  for (const Rat& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Rat& y : v) y = -y;
    break;
  }
}

}  // namespace

DegreeBasis ideal_degree_basis(const GradedIdeal& ideal, long k) {
  if (k < 0) throw error(errc::index_out_of_range, "degree must be non-negative");
  auto d = degree_data(ideal, k);
  DegreeBasis out;
  out.dimension = static_cast<long>(d.rows.size());
  for (const auto& row : d.rows)
    out.basis.push_back(row_to_polynomial(row, d.monomials, ideal.dim));
  return out;
}

CircuitList circuits(const GradedIdeal& ideal, long k, long budget) {
  CircuitList out;
  auto d = degree_data(ideal, k);
  const int h = static_cast<int>(d.rows.size());
  const int n_cols = static_cast<int>(d.monomials.size());
  if (h == 0) return out;

  // columns of the basis matrix as vectors in Q^h
  std::vector<QVec> cols(n_cols, QVec(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < n_cols; ++j) cols[j][i] = d.rows[i][j];

  std::map<std::vector<LatticePoint>, Polynomial> found;
  const int sub = h - 1;
  std::vector<int> idx(sub);
  for (int i = 0; i < sub; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = sub - 1;
    while (i >= 0 && idx[i] == n_cols - sub + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < sub; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (sub > n_cols) return out;
  do {
    if (out.subsets_tested >= budget) {
      out.complete = false;
      break;
    }
    ++out.subsets_tested;
    QMat sys;
    for (int i : idx) sys.push_back(cols[i]);
    QMat ker = kernel(std::move(sys), h);
    if (ker.size() != 1) continue;  // the subset does not span a hyperplane
    // v = u^T basis-matrix is a minimal-support element for that hyperplane
    QVec v(n_cols, Rat(0));
    for (int i = 0; i < h; ++i) {
      if (ker[0][i] == 0) continue;
      for (int j = 0; j < n_cols; ++j) v[j] += ker[0][i] * d.rows[i][j];
    }
    std::vector<LatticePoint> support;
    for (int j = 0; j < n_cols; ++j) {
      if (v[j] != 0) support.push_back(d.monomials[j]);
    }
    if (support.empty()) continue;
    if (found.count(support)) continue;
    normalize_vector(v);
    found.emplace(std::move(support), row_to_polynomial(v, d.monomials, ideal.dim));
  } while (advance());

  for (auto& [s, f] : found) out.circuits.push_back({s, f});
  return out;
}

NewtonPiece newton_graded_piece(const GradedIdeal& ideal, long k, long budget) {
  NewtonPiece out;
  auto cl = circuits(ideal, k, budget);
  out.complete = cl.complete;
  std::map<LatticePolytope, Polynomial> gens;
  for (const auto& c : cl.circuits) {
    LatticePolytope p = hull(ideal.dim, c.support);
    gens.emplace(std::move(p), c.realizer);  // first realizer wins
  }
  out.piece.degree = k;
  for (auto& [p, f] : gens) {
    out.piece.generators_under_oplus.push_back(p);
    out.realizers.push_back(f);
  }
  out.piece.minimal = minimal_generators(out.piece.generators_under_oplus);
  return out;
}

SemicontinuityReport semicontinuity_check(const GradedIdeal& ideal, long k_bound, long budget) {
  SemicontinuityReport rep;
  rep.bound = k_bound;
  rep.inequality_holds = true;
  rep.lift_spans = true;
  for (long k = 0; k <= k_bound; ++k) {
    auto basis = ideal_degree_basis(ideal, k);
    auto piece = newton_graded_piece(ideal, k, budget);
    rep.complete = rep.complete && piece.complete;
    rep.hilbert.push_back(basis.dimension);
    rep.newton_hilbert.push_back(piece.piece.rank());
    if (piece.piece.rank() < basis.dimension) rep.inequality_holds = false;
    // lift: one realizer per minimal generator must span I_k
    auto d = degree_data(ideal, k);
    QMat lifted;
    for (const auto& g : piece.piece.minimal) {
      for (size_t i = 0; i < piece.piece.generators_under_oplus.size(); ++i) {
        if (piece.piece.generators_under_oplus[i] == g) {
          QVec row(d.monomials.size(), Rat(0));
          for (const auto& [e, c] : piece.realizers[i].terms) row[d.index.at(e)] = c;
          lifted.push_back(std::move(row));
          break;
        }
      }
    }
    if (rank(std::move(lifted)) != basis.dimension) rep.lift_spans = false;
  }
  return rep;
}

namespace {

NewtonBasisResult newton_basis_oracle(const GradedIdeal& ideal, long k, long budget) {
  NewtonBasisResult out;
  // graded minimal generators of the Newton semimodule, degree by degree
  std::vector<std::pair<LatticePolytope, Polynomial>> module_gens;  // with degrees < current
  for (long d = 0; d <= k; ++d) {
    auto piece = newton_graded_piece(ideal, d, budget);
    out.complete = out.complete && piece.complete;
    std::set<LatticePolytope> lower;
    for (const auto& [g, f] : module_gens) {
      long dg = *degree(g);
      for (const auto& t : degree_points(ideal.dim, d - dg)) lower.insert(translate(g, t));
    }
    std::vector<LatticePolytope> pool(lower.begin(), lower.end());
    std::map<LatticePolytope, Polynomial> realizer;
    for (size_t i = 0; i < piece.piece.generators_under_oplus.size(); ++i) {
      const auto& p = piece.piece.generators_under_oplus[i];
      if (!lower.count(p)) pool.push_back(p);
      realizer.emplace(p, piece.realizers[i]);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.empty()) continue;
    for (const auto& g : minimal_generators(pool)) {
      if (lower.count(g)) continue;  // reachable from lower degrees
      auto it = realizer.find(g);
      if (it == realizer.end()) continue;
      if (d == k) {
        out.polytopes.push_back(g);
        out.elements.push_back(it->second);
      } else {
        module_gens.emplace_back(g, it->second);
      }
    }
    if (d < k) {
      // nothing: module_gens updated above
    }
  }
  return out;
}

NewtonBasisResult newton_basis_paper(const GradedIdeal& ideal, long k, long budget) {
  NewtonBasisResult out;
  long d0 = *ideal.generators.front().homogeneous_degree();
  for (const auto& g : ideal.generators) d0 = std::min(d0, *g.homogeneous_degree());
  if (k < d0) return out;

  std::vector<Polynomial> carried;  // S_part
  for (long d = d0; d <= k; ++d) {
    std::vector<Polynomial> s = carried;
    for (const auto& g : ideal.generators) {
      if (*g.homogeneous_degree() == d) s.push_back(g);
    }
    std::set<std::vector<LatticePoint>> seen;
    auto support_of = [](const Polynomial& f) {
      std::vector<LatticePoint> sup;
      for (const auto& [e, c] : f.terms) sup.push_back(e);
      return sup;
    };
    std::vector<Polynomial> kept;
    for (const auto& f : s) {
      if (seen.insert(support_of(f)).second) kept.push_back(f);
    }
    s = std::move(kept);
    // close under pairwise eliminations, never revisiting a support
    long work = 0;
    for (size_t i = 0; i < s.size() && out.complete; ++i) {
      for (size_t j = 0; j < s.size() && out.complete; ++j) {
        if (i == j) continue;
        const auto terms_i = s[i].terms;  // s grows below
        for (const auto& [m, ci] : terms_i) {
          if (++work > budget) {
            out.complete = false;
            break;
          }
          Rat cj;
          {
            auto it = s[j].terms.find(m);
            if (it == s[j].terms.end()) continue;
            cj = it->second;
          }
          Polynomial q = s[i].scaled(cj) - s[j].scaled(ci);
          if (q.is_zero()) continue;
          if (seen.insert(support_of(q)).second) s.push_back(std::move(q));
        }
      }
    }
    // all-monomials shortcut
    auto monoms = degree_points(ideal.dim, d);
    std::set<LatticePoint> singles;
    for (const auto& f : s) {
      if (f.terms.size() == 1) singles.insert(f.terms.begin()->first);
    }
    if (singles.size() == monoms.size()) {
      if (d == k) {
        for (const auto& e : monoms) {
          out.elements.push_back(Polynomial::monomial(e, Rat(1)));
          out.polytopes.push_back(LatticePolytope::point(e));
        }
      }
      return out;
    }
    // inclusion-minimal subset on the Newton polytopes, canonical tie-break
    std::map<LatticePolytope, Polynomial> by_polytope;
    for (const auto& f : s) {
      LatticePolytope p = newton_polytope(f);
      auto it = by_polytope.find(p);
      if (it == by_polytope.end())
        by_polytope.emplace(std::move(p), f);
      else if (f < it->second)
        it->second = f;
    }
    std::vector<std::pair<LatticePolytope, Polynomial>> minimal;
    for (const auto& [p, f] : by_polytope) {
      bool dominated = false;
      for (const auto& [q, g] : by_polytope) {
        if (!(q == p) && contains(p, q)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.emplace_back(p, f);
    }
    if (d == k) {
      for (auto& [p, f] : minimal) {
        out.polytopes.push_back(p);
        out.elements.push_back(f);
      }
      return out;
    }
    carried.clear();
    for (const auto& [p, f] : minimal) {
      for (int v = 1; v <= ideal.dim; ++v) {
        carried.push_back(f * Polynomial::monomial(coordinate_point(v, ideal.dim), Rat(1)));
      }
    }
  }
  return out;
}

}  // namespace

NewtonBasisResult newton_basis(const GradedIdeal& ideal, long k, BasisMode mode, long budget) {
  if (ideal.generators.empty()) return {};
  if (mode == BasisMode::paper) return newton_basis_paper(ideal, k, budget);
  return newton_basis_oracle(ideal, k, budget);
}

namespace {

GradedIdeal generic_ideal(const std::vector<LatticePolytope>& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned long long> dist(1ull << 20, 1ull << 40);
  std::vector<Polynomial> gens;
  for (const auto& poly : p) {
    Polynomial f = Polynomial::zero(poly.dim());
    for (const auto& pt : lattice_points(poly))
      f.terms[pt] = Rat(Int(static_cast<unsigned long>(dist(rng))));
    gens.push_back(std::move(f));
  }
  return GradedIdeal::make(p.empty() ? 0 : p[0].dim(), std::move(gens));
}

}  // namespace

GenericPieceResult generic_semimodule_D(const std::vector<LatticePolytope>& p, long k,
                                        int trials, unsigned long seed, long budget) {
  GenericPieceResult out;
  for (const auto& poly : p) {
    if (poly.is_zero()) throw error(errc::zero_element, "generic spans need nonzero polytopes");
    if (!degree(poly)) throw error(errc::mixed_degree, "generic spans need homogeneous polytopes");
  }
  std::mt19937_64 rng(seed);
  bool first = true;
  for (int t = 0; t < trials; ++t) {
    auto ideal = generic_ideal(p, rng);
    auto piece = newton_graded_piece(ideal, k, budget);
    out.complete = out.complete && piece.complete;
    if (first) {
      out.piece = piece.piece;
      first = false;
    } else if (!(piece.piece.generators_under_oplus == out.piece.generators_under_oplus)) {
      out.stable = false;
      out.detail = "trial " + std::to_string(t + 1) + " disagrees with trial 1";
      return out;
    }
  }
  out.stable = true;
  return out;
}

StrongRegularityReport strongly_regular_check(const std::vector<LatticePolytope>& p, long box,
                                              int trials, unsigned long seed, long budget) {
  StrongRegularityReport rep;
  rep.box = box;
  if (p.size() < 2) return rep;
  const int n = p[0].dim();
  auto candidates = polytopes_in_box(n, box);
  for (size_t i = 1; i < p.size(); ++i) {
    std::vector<LatticePolytope> prefix(p.begin(), p.begin() + i);
    long di = *degree(p[i]);
    // membership in D is graded; cache the needed pieces per degree
    std::map<long, GradedPiece> pieces;
    auto piece_at = [&](long deg) -> const GradedPiece& {
      auto it = pieces.find(deg);
      if (it != pieces.end()) return it->second;
      auto res = generic_semimodule_D(prefix, deg, trials, seed, budget);
      if (!res.stable) rep.stable = false;
      if (!res.complete) rep.complete = false;
      return pieces.emplace(deg, res.piece).first->second;
    };
    for (const auto& q : candidates) {
      auto dq = degree(q);
      if (!dq) continue;  // the bounded check covers homogeneous elements
      const auto& high = piece_at(*dq + di);
      if (high.generators_under_oplus.empty()) continue;
      if (!in_oplus_span(odot(q, p[i]), high.generators_under_oplus)) continue;
      const auto& low = piece_at(*dq);
      if (low.generators_under_oplus.empty() ||
          !in_oplus_span(q, low.generators_under_oplus)) {
        rep.violation_found = true;
        rep.index = static_cast<int>(i + 1);
        rep.witness = q;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace polysemi
