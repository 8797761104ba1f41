#include "polysemi/io.hpp"

#include <sstream>

namespace polysemi {

Json polytope_to_json(const LatticePolytope& p) {
  Json j;
  if (p.is_zero()) {
    j["zero"] = true;
    j["dim"] = p.dim();
    return j;
  }
  j["dim"] = p.dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const Int& c : v.c) row.push_back(to_long(c));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

LatticePolytope polytope_from_json(const Json& j, std::optional<int> default_dim) {
  if (j.contains("zero") && j["zero"].get<bool>()) {
    if (j.contains("dim")) return LatticePolytope::zero(j["dim"].get<int>());
    if (default_dim) return LatticePolytope::zero(*default_dim);
    throw error(errc::parse_error, "a zero polytope needs a dimension from context");
  }
  if (!j.contains("dim") || !j.contains("vertices"))
    throw error(errc::parse_error, "polytope JSON needs dim and vertices");
  int dim = j["dim"].get<int>();
  std::vector<LatticePoint> pts;
  for (const auto& row : j["vertices"]) {
    LatticePoint p;
    for (const auto& c : row) p.c.emplace_back(c.get<long>());
    pts.push_back(std::move(p));
  }
  return hull(dim, std::move(pts));
}

Json semimodule_to_json(const SubSemimodule& m) {
  Json j;
  j["dim"] = m.dim;
  Json gens = Json::array();
  for (const auto& g : m.generators) gens.push_back(polytope_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

SubSemimodule semimodule_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("generators"))
    throw error(errc::parse_error, "semimodule JSON needs dim and generators");
  int dim = j["dim"].get<int>();
  std::vector<LatticePolytope> gens;
  for (const auto& g : j["generators"]) gens.push_back(polytope_from_json(g, dim));
  return SubSemimodule::make(dim, std::move(gens));
}

Json ideal_to_json(const GradedIdeal& ideal) {
  Json j;
  j["dim"] = ideal.dim;
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  return j;
}

GradedIdeal ideal_from_json(const Json& j) {
  if (!j.contains("dim") || !j.contains("generators"))
    throw error(errc::parse_error, "ideal JSON needs dim and generators");
  int dim = j["dim"].get<int>();
  std::vector<Polynomial> gens;
  for (const auto& g : j["generators"]) gens.push_back(parse_polynomial(g.get<std::string>(), dim));
  return GradedIdeal::make(dim, std::move(gens));
}

Json syzygy_to_json(const SyzygyRecord& rec) {
  Json j;
  Json p = Json::array(), q = Json::array();
  for (const auto& x : rec.p) p.push_back(polytope_to_json(x));
  for (const auto& x : rec.q) q.push_back(polytope_to_json(x));
  j["P"] = std::move(p);
  j["Q"] = std::move(q);
  j["W"] = polytope_to_json(rec.w);
  j["type"] = rec.type;
  j["index_set"] = rec.index_set;
  j["zero_set"] = rec.zero_set;
  return j;
}

Json series_to_json(const NewtonHilbertSeries& s) {
  Json j;
  j["coefficients"] = s.coefficients;
  if (s.rational_form) {
    Json num = Json::array(), den = Json::array();
    for (const Int& c : s.rational_form->num) num.push_back(to_long(c));
    for (const Int& c : s.rational_form->den) den.push_back(to_long(c));
    j["rational_form"] = Json{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
  } else {
    j["rational_form"] = nullptr;
  }
  return j;
}

namespace {

struct TextParser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw error(errc::parse_error, "column " + std::to_string(pos + 1) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    bool neg = eat('-');
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    Int v(s.substr(start, pos - start));
    return neg ? Int(-v) : v;
  }
  LatticePoint tuple() {
    expect('(');
    LatticePoint p;
    p.c.push_back(integer());
    while (eat(',')) p.c.push_back(integer());
    expect(')');
    return p;
  }
};

}  // namespace

LatticePolytope parse_polytope_text(const std::string& text, std::optional<int> default_dim) {
  TextParser t{text, 0};
  t.skip_ws();
  if (t.eat_word("zero")) {
    if (!default_dim) throw error(errc::parse_error, "zero needs --dim");
    return LatticePolytope::zero(*default_dim);
  }
  if (t.eat_word("point")) {
    LatticePoint p = t.tuple();
    if (default_dim && p.dim() != *default_dim)
      throw error(errc::parse_error, "point dimension disagrees with --dim");
    return LatticePolytope::point(p);
  }
  if (t.eat_word("hull")) {
    t.expect('(');
    std::vector<LatticePoint> pts;
    pts.push_back(t.tuple());
    while (t.eat(',')) pts.push_back(t.tuple());
    t.expect(')');
    int dim = pts[0].dim();
    if (default_dim && dim != *default_dim)
      throw error(errc::parse_error, "hull dimension disagrees with --dim");
    return hull(dim, std::move(pts));
  }
  t.fail("expected zero, point(...) or hull(...)");
}

std::string to_obj(const LatticePolytope& p) {
  if (p.is_zero()) throw error(errc::zero_element, "0_A has no geometry to export");
  if (p.dim() != 2 && p.dim() != 3)
    throw error(errc::mixed_dimension, "OBJ export covers 2- and 3-dimensional spaces");
  std::ostringstream os;
  for (const auto& v : p.vertices()) {
    os << "v";
    for (const Int& c : v.c) os << " " << c.get_str();
    if (p.dim() == 2) os << " 0";
    os << "\n";
  }
  int ad = affine_dim(p);
  if (ad == 0) return os.str();
  if (ad == 1) {
    os << "l 1 " << p.vertices().size() << "\n";
    return os.str();
  }
  if (p.dim() == 3 && ad == 2) {
    // planar polygon in space: project out an axis transverse to the plane
    // and take the boundary cycle there (the projection keeps coordinates
    // non-negative and is injective on the plane)
    const auto& vs = p.vertices();
    LatticePoint e1 = vs[1] - vs[0];
    LatticePoint e2 = vs.back() - vs[0];
    Int nx = e1.c[1] * e2.c[2] - e1.c[2] * e2.c[1];
    Int ny = e1.c[2] * e2.c[0] - e1.c[0] * e2.c[2];
    Int nz = e1.c[0] * e2.c[1] - e1.c[1] * e2.c[0];
    int drop = nz != 0 ? 2 : (ny != 0 ? 1 : 0);
    std::vector<LatticePoint> flat;
    for (const auto& v : vs) {
      LatticePoint q;
      for (int j = 0; j < 3; ++j)
        if (j != drop) q.c.push_back(v.c[j]);
      flat.push_back(std::move(q));
    }
    LatticePolytope poly2 = hull(2, flat);
    os << "f";
    for (int i : facet_cycles(poly2)[0]) {
      const auto& target = poly2.vertices()[i];
      for (size_t k = 0; k < flat.size(); ++k) {
        if (flat[k] == target) {
          os << " " << (k + 1);
          break;
        }
      }
    }
    os << "\n";
    return os.str();
  }
  for (const auto& cyc : facet_cycles(p)) {
    os << "f";
    for (int i : cyc) os << " " << (i + 1);
    os << "\n";
  }
  return os.str();
}

}  // namespace polysemi
