// polysemi: exact lattice-polytope semiring calculator.
//
// One verb per operation: hulls and semiring arithmetic, Minkowski summands
// and factorizations, semimodule equations, graded pieces and Hilbert data,
// Newton bases and circuits, syzygies and regular sequences. Inputs are
// small text expressions or JSON files; outputs are deterministic JSON (or
// a terse text form) so runs can be diffed byte for byte.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "polysemi/fixtures.hpp"
#include "polysemi/io.hpp"

using namespace polysemi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitBudget = 4;

struct Output {
  std::string format = "json";
  std::optional<std::string> obj_path;

  void emit(const Json& j) const {
    if (format == "text") {
      std::cout << text_of(j) << "\n";
    } else {
      std::cout << j.dump(2) << "\n";
    }
  }

  static std::string text_of(const Json& j) {
    if (j.is_object() && j.contains("vertices")) {
      std::string s = "hull(";
      bool first = true;
      for (const auto& v : j["vertices"]) {
        if (!first) s += ",";
        first = false;
        s += "(";
        for (size_t i = 0; i < v.size(); ++i) {
          if (i) s += ",";
          s += v[i].dump();
        }
        s += ")";
      }
      return s + ")";
    }
    if (j.is_object() && j.contains("zero")) return "zero";
    return j.dump();
  }

  void maybe_obj(const LatticePolytope& p) const {
    if (!obj_path) return;
    std::ofstream out(*obj_path);
    out << to_obj(p);
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

// polytope arguments: text shorthand, or @file.json
LatticePolytope read_polytope(const std::string& arg, std::optional<int> dim) {
  if (!arg.empty() && arg[0] == '@') return polytope_from_json(read_json_file(arg.substr(1)), dim);
  return parse_polytope_text(arg, dim);
}

std::vector<LatticePolytope> read_polytope_list(const std::string& path,
                                                std::optional<int> dim) {
  Json j = read_json_file(path);
  if (j.is_array()) {
    std::vector<LatticePolytope> out;
    for (const auto& e : j) out.push_back(polytope_from_json(e, dim));
    return out;
  }
  auto m = semimodule_from_json(j);
  return m.generators;
}

Json verdict_json(const RegularSequenceVerdict& v) {
  Json j;
  j["regular"] = v.regular;
  j["box"] = v.box;
  j["complete"] = v.complete;
  if (!v.regular) {
    j["failed_index"] = v.failed_index;
    j["witness"] = v.witness ? polytope_to_json(*v.witness) : Json(nullptr);
  }
  return j;
}

Json piece_json(const GradedPiece& piece) {
  Json j;
  j["degree"] = piece.degree;
  j["rank"] = piece.rank();
  Json gens = Json::array(), mins = Json::array();
  for (const auto& g : piece.generators_under_oplus) gens.push_back(polytope_to_json(g));
  for (const auto& g : piece.minimal) mins.push_back(polytope_to_json(g));
  j["generators"] = std::move(gens);
  j["minimal_generators"] = std::move(mins);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact polytope-semiring calculator"};
  app.require_subcommand(1);

  Output out;
  int dim = 0;
  long max_degree = 4, box = 2, budget = 1000000, k = 0, d_param = 1;
  unsigned long seed = 0;
  int trials = 3, i_idx = 1, j_idx = 2, i0 = 1, var_index = 1;
  std::string mode = "oracle";
  std::string ideal_path, module_path, input_path, name;
  std::vector<std::string> args, f_args, g_args;
  bool relative = false, enumerate_all = false, do_enumerate = false, strong = false;
  int max_vertices = 0, dim_filter = -1;

  app.add_option("--format", out.format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--obj", out.obj_path);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--dim", dim);
    cmd->add_option("--seed", seed);
    cmd->add_option("--budget", budget);
    cmd->add_option("--format", out.format)->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--obj", out.obj_path);
  };

  auto* c_hull = app.add_subcommand("hull", "convex hull of points");
  c_hull->add_option("points", args, "point tuples like (0,0)");
  add_common(c_hull);

  auto* c_oplus = app.add_subcommand("oplus", "semiring addition: hull of the union");
  c_oplus->add_option("operands", args)->expected(2);
  add_common(c_oplus);

  auto* c_odot = app.add_subcommand("odot", "semiring multiplication: Minkowski sum");
  c_odot->add_option("operands", args)->expected(2);
  add_common(c_odot);

  auto* c_degree = app.add_subcommand("degree", "grading hyperplane of a polytope");
  c_degree->add_option("polytope", args)->expected(1);
  add_common(c_degree);

  auto* c_volume = app.add_subcommand("volume", "exact volume");
  c_volume->add_option("polytope", args)->expected(1);
  c_volume->add_flag("--relative", relative, "measure inside the affine hull");
  add_common(c_volume);

  auto* c_summand = app.add_subcommand("summand", "Minkowski cofactor if V divides Q");
  c_summand->add_option("operands", args)->expected(2);
  add_common(c_summand);

  auto* c_factor = app.add_subcommand("factor", "factor into Minkowski irreducibles");
  c_factor->add_option("polytope", args)->expected(1);
  c_factor->add_flag("--all", enumerate_all, "enumerate every factorization");
  add_common(c_factor);

  auto* c_solve = app.add_subcommand("solve", "canonical solution of W = join of P_i Y_i");
  c_solve->add_option("operands", args, "W followed by the P_i")->expected(-2);
  c_solve->add_flag("--enumerate", do_enumerate, "list the full solution set");
  std::string wrt;
  c_solve->add_option("--wrt", wrt, "restrict to solutions divisible by this polytope");
  add_common(c_solve);

  auto* c_member = app.add_subcommand("member", "membership in a generated sub-semimodule");
  c_member->add_option("operands", args, "Q followed by the generators")->expected(-2);
  c_member->add_option("--module", module_path, "module JSON instead of generator list");
  add_common(c_member);

  auto* c_piece = app.add_subcommand("piece", "graded piece of a sub-semimodule");
  c_piece->add_option("--module", module_path)->required();
  c_piece->add_option("--k", k)->required();
  add_common(c_piece);

  auto* c_hilbert = app.add_subcommand("hilbert", "Newton-Hilbert coefficients and series");
  c_hilbert->add_option("--module", module_path);
  c_hilbert->add_option("--ideal", ideal_path);
  c_hilbert->add_option("--max-degree", max_degree);
  add_common(c_hilbert);

  auto* c_cm = app.add_subcommand("cm", "Artinian and Cohen-Macaulay analysis");
  c_cm->add_option("--module", module_path)->required();
  c_cm->add_option("--max-degree", max_degree);
  add_common(c_cm);

  auto* c_newton = app.add_subcommand("newton", "Newton polytope of a polynomial");
  c_newton->add_option("polynomial", args)->expected(1);
  add_common(c_newton);

  auto* c_circuits = app.add_subcommand("circuits", "minimal supports of a degree piece");
  c_circuits->add_option("--ideal", ideal_path)->required();
  c_circuits->add_option("--k", k)->required();
  add_common(c_circuits);

  auto* c_basis = app.add_subcommand("basis", "degree-k elements of a minimal Newton basis");
  c_basis->add_option("--ideal", ideal_path)->required();
  c_basis->add_option("--k", k)->required();
  c_basis->add_option("--mode", mode)->check(CLI::IsMember({"paper", "oracle"}));
  add_common(c_basis);

  auto* c_generic = app.add_subcommand("genericD", "generic Newton piece of a polytope list");
  c_generic->add_option("--polytopes", module_path)->required();
  c_generic->add_option("--k", k);
  c_generic->add_option("--trials", trials);
  c_generic->add_flag("--strong", strong, "bounded strong-regularity check");
  c_generic->add_option("--box", box);
  add_common(c_generic);

  auto* c_syz = app.add_subcommand("syzygy", "syzygy operations");
  auto* s_check = c_syz->add_subcommand("check", "verify a tuple and classify it");
  s_check->add_option("--input", input_path)->required();
  add_common(s_check);
  auto* s_koszul = c_syz->add_subcommand("koszul", "the Koszul syzygy K_{i,j}");
  s_koszul->add_option("--polytopes", module_path)->required();
  s_koszul->add_option("--i", i_idx)->required();
  s_koszul->add_option("--j", j_idx)->required();
  add_common(s_koszul);
  auto* s_enum = c_syz->add_subcommand("enumerate", "equivalence classes within a box");
  s_enum->add_option("--polytopes", module_path)->required();
  s_enum->add_option("--box", box);
  s_enum->add_option("--max-vertices", max_vertices);
  s_enum->add_option("--dim-filter", dim_filter);
  add_common(s_enum);
  auto* s_inkos = c_syz->add_subcommand("inkos", "membership in the Koszul sub-semimodule");
  s_inkos->add_option("--input", input_path)->required();
  add_common(s_inkos);
  auto* s_construct = c_syz->add_subcommand("construct", "Koszul combination of a type-1 syzygy");
  s_construct->add_option("--input", input_path)->required();
  s_construct->add_option("--i0", i0)->required();
  add_common(s_construct);

  auto* c_regular = app.add_subcommand("regular", "regular-sequence check");
  c_regular->add_option("--polytopes", module_path)->required();
  c_regular->add_option("--box", box);
  add_common(c_regular);

  auto* c_spec = app.add_subcommand("specialize", "polynomial syzygy to polytope syzygy");
  c_spec->add_option("--f", f_args)->required();
  c_spec->add_option("--g", g_args)->required();
  add_common(c_spec);

  auto* c_fix = app.add_subcommand("fixtures", "emit a worked example");
  c_fix->add_option("name", name)
      ->required()
      ->check(CLI::IsMember({"hexagon", "a-lattice", "cm", "prism", "five-polytope",
                             "nonregular", "monomial", "lifting"}));
  c_fix->add_option("--n", var_index);
  c_fix->add_option("--d", d_param);
  add_common(c_fix);

  CLI11_PARSE(app, argc, argv);

  std::optional<int> odim = dim > 0 ? std::optional<int>(dim) : std::nullopt;

  try {
    if (*c_hull) {
      std::vector<LatticePoint> pts;
      for (const auto& a : args) {
        auto p = parse_polytope_text("point" + a, odim);
        pts.push_back(p.vertices()[0]);
      }
      int n = odim ? *odim : (pts.empty() ? 0 : pts[0].dim());
      auto h = hull(n, pts);
      out.emit(polytope_to_json(h));
      if (!h.is_zero()) out.maybe_obj(h);
      return kExitOk;
    }
    if (*c_oplus || *c_odot) {
      auto p = read_polytope(args[0], odim);
      auto q = read_polytope(args[1], p.is_zero() && odim ? odim : std::optional<int>(p.dim()));
      auto r = *c_oplus ? oplus(p, q) : odot(p, q);
      out.emit(polytope_to_json(r));
      if (!r.is_zero()) out.maybe_obj(r);
      return kExitOk;
    }
    if (*c_degree) {
      auto p = read_polytope(args[0], odim);
      auto d = degree(p);
      Json j;
      j["degree"] = d ? Json(*d) : Json(nullptr);
      out.emit(j);
      return kExitOk;
    }
    if (*c_volume) {
      auto p = read_polytope(args[0], odim);
      auto v = volume(p, relative ? VolumeMode::relative : VolumeMode::ambient);
      Json j;
      j["volume"] = v.value.get_str();
      j["dim_used"] = v.dim_used;
      out.emit(j);
      return kExitOk;
    }
    if (*c_summand) {
      auto v = read_polytope(args[0], odim);
      auto q = read_polytope(args[1], std::optional<int>(v.dim()));
      auto r = is_summand(v, q);
      Json j;
      j["summand"] = r.has_value();
      j["cofactor"] = r ? polytope_to_json(*r) : Json(nullptr);
      out.emit(j);
      return r ? kExitOk : kExitNegative;
    }
    if (*c_factor) {
      auto p = read_polytope(args[0], odim);
      auto f = factor_irreducible(p, budget, enumerate_all);
      Json j;
      Json fs = Json::array();
      for (const auto& g : f.factors) fs.push_back(polytope_to_json(g));
      j["factors"] = std::move(fs);
      if (enumerate_all) {
        Json all = Json::array();
        for (const auto& fac : f.all) {
          Json one = Json::array();
          for (const auto& g : fac) one.push_back(polytope_to_json(g));
          all.push_back(std::move(one));
        }
        j["all_factorizations"] = std::move(all);
      }
      j["complete"] = f.complete;
      j["budget"] = budget;
      out.emit(j);
      return f.complete ? kExitOk : kExitBudget;
    }
    if (*c_solve) {
      auto w = read_polytope(args[0], odim);
      std::vector<LatticePolytope> ps;
      for (size_t i = 1; i < args.size(); ++i)
        ps.push_back(read_polytope(args[i], std::optional<int>(w.dim())));
      Json j;
      if (do_enumerate) {
        auto en = enumerate_solutions(w, ps, budget);
        Json sols = Json::array();
        for (const auto& s : en.solutions) {
          Json entries = Json::array();
          for (const auto& e : s.entries) entries.push_back(polytope_to_json(e));
          sols.push_back(std::move(entries));
        }
        j["solutions"] = std::move(sols);
        j["complete"] = en.complete;
        j["budget"] = budget;
        out.emit(j);
        return en.complete ? kExitOk : kExitBudget;
      }
      std::optional<SolutionTuple> s;
      if (!wrt.empty()) {
        auto v = read_polytope(wrt, std::optional<int>(w.dim()));
        s = canonical_solution_wrt(w, ps, v);
      } else {
        s = canonical_solution(w, ps);
      }
      j["solvable"] = s.has_value();
      if (s) {
        Json entries = Json::array();
        for (const auto& e : s->entries) entries.push_back(polytope_to_json(e));
        j["canonical"] = std::move(entries);
      } else {
        j["canonical"] = nullptr;
      }
      out.emit(j);
      return s ? kExitOk : kExitNegative;
    }
    if (*c_member) {
      auto q = read_polytope(args[0], odim);
      SubSemimodule m = module_path.empty()
                            ? SubSemimodule::make(q.dim(),
                                                  [&] {
                                                    std::vector<LatticePolytope> gs;
                                                    for (size_t i = 1; i < args.size(); ++i)
                                                      gs.push_back(read_polytope(
                                                          args[i], std::optional<int>(q.dim())));
                                                    return gs;
                                                  }())
                            : semimodule_from_json(read_json_file(module_path));
      bool in = membership(q, m);
      Json j;
      j["member"] = in;
      out.emit(j);
      return in ? kExitOk : kExitNegative;
    }
    if (*c_piece) {
      auto m = semimodule_from_json(read_json_file(module_path));
      out.emit(piece_json(graded_piece(m, k)));
      return kExitOk;
    }
    if (*c_hilbert) {
      Json j;
      if (!ideal_path.empty()) {
        auto ideal = ideal_from_json(read_json_file(ideal_path));
        std::vector<long> hn, h;
        bool complete = true;
        for (long kk = 0; kk <= max_degree; ++kk) {
          auto piece = newton_graded_piece(ideal, kk, budget);
          complete = complete && piece.complete;
          hn.push_back(piece.piece.rank());
          h.push_back(ideal_degree_basis(ideal, kk).dimension);
        }
        j["newton_hilbert"] = hn;
        j["hilbert"] = h;
        j["bound"] = max_degree;
        j["complete"] = complete;
        auto fit = fit_rational_form(hn);
        NewtonHilbertSeries s;
        s.coefficients = hn;
        s.rational_form = fit;
        j["series"] = series_to_json(s);
        out.emit(j);
        return complete ? kExitOk : kExitBudget;
      }
      auto m = semimodule_from_json(read_json_file(module_path));
      auto s = newton_hilbert_series(m, max_degree);
      j = series_to_json(s);
      j["bound"] = max_degree;
      out.emit(j);
      return kExitOk;
    }
    if (*c_cm) {
      auto m = semimodule_from_json(read_json_file(module_path));
      auto rep = cm_analysis(m, max_degree);
      Json j;
      j["bound"] = rep.bound;
      j["certified"] = rep.certified;
      j["artinian_k0"] = rep.artinian_k0 ? Json(*rep.artinian_k0) : Json(nullptr);
      j["depth"] = rep.depth ? Json(*rep.depth) : Json(nullptr);
      j["sequence"] = rep.sequence;
      j["series"] = rep.series ? series_to_json(*rep.series) : Json(nullptr);
      j["note"] = rep.note;
      out.emit(j);
      return rep.certified ? kExitOk : kExitNegative;
    }
    if (*c_newton) {
      if (dim <= 0) throw error(errc::parse_error, "--dim is required for polynomials");
      auto f = parse_polynomial(args[0], dim);
      auto p = newton_polytope(f);
      out.emit(polytope_to_json(p));
      if (!p.is_zero()) out.maybe_obj(p);
      return kExitOk;
    }
    if (*c_circuits) {
      auto ideal = ideal_from_json(read_json_file(ideal_path));
      auto cl = circuits(ideal, k, budget);
      Json j;
      Json arr = Json::array();
      for (const auto& c : cl.circuits) {
        Json sup = Json::array();
        for (const auto& e : c.support) {
          Json row = Json::array();
          for (const Int& x : e.c) row.push_back(to_long(x));
          sup.push_back(std::move(row));
        }
        arr.push_back(Json{{"support", std::move(sup)}, {"realizer", to_string(c.realizer)}});
      }
      j["circuits"] = std::move(arr);
      j["complete"] = cl.complete;
      j["budget"] = budget;
      out.emit(j);
      return cl.complete ? kExitOk : kExitBudget;
    }
    if (*c_basis) {
      auto ideal = ideal_from_json(read_json_file(ideal_path));
      auto res = newton_basis(ideal, k, mode == "paper" ? BasisMode::paper : BasisMode::oracle,
                              budget);
      Json j;
      Json els = Json::array(), pols = Json::array();
      for (const auto& f : res.elements) els.push_back(to_string(f));
      for (const auto& p : res.polytopes) pols.push_back(polytope_to_json(p));
      j["mode"] = mode;
      j["elements"] = std::move(els);
      j["polytopes"] = std::move(pols);
      j["complete"] = res.complete;
      j["budget"] = budget;
      out.emit(j);
      return res.complete ? kExitOk : kExitBudget;
    }
    if (*c_generic) {
      auto ps = read_polytope_list(module_path, odim);
      Json j;
      if (strong) {
        auto rep = strongly_regular_check(ps, box, trials, seed, budget);
        j["violation_found"] = rep.violation_found;
        j["index"] = rep.violation_found ? Json(rep.index) : Json(nullptr);
        j["witness"] = rep.witness ? polytope_to_json(*rep.witness) : Json(nullptr);
        j["box"] = rep.box;
        j["stable"] = rep.stable;
        j["complete"] = rep.complete;
        j["seed"] = seed;
        out.emit(j);
        if (!rep.stable || !rep.complete) return kExitBudget;
        return rep.violation_found ? kExitNegative : kExitOk;
      }
      auto res = generic_semimodule_D(ps, k, trials, seed, budget);
      j["stable"] = res.stable;
      j["detail"] = res.detail;
      j["seed"] = seed;
      j["trials"] = trials;
      j["piece"] = piece_json(res.piece);
      j["complete"] = res.complete;
      out.emit(j);
      if (!res.complete) return kExitBudget;
      return res.stable ? kExitOk : kExitNegative;
    }
    if (*c_syz) {
      if (*s_koszul) {
        auto ps = read_polytope_list(module_path, odim);
        out.emit(syzygy_to_json(koszul(ps, i_idx, j_idx)));
        return kExitOk;
      }
      if (*s_check || *s_inkos || *s_construct) {
        Json in = read_json_file(input_path);
        std::vector<LatticePolytope> p, q;
        for (const auto& e : in["P"]) p.push_back(polytope_from_json(e, odim));
        std::optional<int> n = p.empty() ? odim : std::optional<int>(p[0].dim());
        for (const auto& e : in["Q"]) q.push_back(polytope_from_json(e, n));
        auto rec = is_syzygy(p, q);
        if (*s_check) {
          Json j;
          j["is_syzygy"] = rec.has_value();
          j["record"] = rec ? syzygy_to_json(*rec) : Json(nullptr);
          out.emit(j);
          return rec ? kExitOk : kExitNegative;
        }
        if (!rec) throw error(errc::parse_error, "the input tuple is not a syzygy");
        if (*s_inkos) {
          auto v = in_kos(p, *rec);
          Json j;
          j["in_kos"] = v.in_kos;
          Json ws = Json::array();
          for (const auto& l : v.witness) ws.push_back(polytope_to_json(l));
          j["coefficients"] = std::move(ws);
          out.emit(j);
          return v.in_kos ? kExitOk : kExitNegative;
        }
        auto built = kos_construct(p, *rec, i0);
        Json j;
        j["constructed"] = built.has_value();
        if (built) {
          Json cs = Json::array();
          for (const auto& l : built->coefficients) cs.push_back(polytope_to_json(l));
          j["coefficients"] = std::move(cs);
          j["rebuilt"] = syzygy_to_json(built->rebuilt);
          j["equivalent"] = built->equivalent;
          j["index_contained"] = built->index_contained;
        }
        out.emit(j);
        return built ? kExitOk : kExitNegative;
      }
      if (*s_enum) {
        auto ps = read_polytope_list(module_path, odim);
        std::optional<int> filt =
            dim_filter >= 0 ? std::optional<int>(dim_filter) : std::nullopt;
        auto en = enumerate_syzygies(ps, box, budget, max_vertices, filt);
        Json j;
        Json arr = Json::array();
        for (const auto& rec : en.classes) arr.push_back(syzygy_to_json(rec));
        j["classes"] = std::move(arr);
        j["box"] = en.box;
        j["complete"] = en.complete;
        j["budget"] = budget;
        out.emit(j);
        return en.complete ? kExitOk : kExitBudget;
      }
      throw error(errc::parse_error, "pick a syzygy subcommand");
    }
    if (*c_regular) {
      auto ps = read_polytope_list(module_path, odim);
      auto v = regular_sequence_check(ps, box);
      out.emit(verdict_json(v));
      return v.regular ? kExitOk : kExitNegative;
    }
    if (*c_spec) {
      if (dim <= 0) throw error(errc::parse_error, "--dim is required for polynomials");
      std::vector<Polynomial> f, g;
      for (const auto& a : f_args) f.push_back(parse_polynomial(a, dim));
      for (const auto& a : g_args) g.push_back(parse_polynomial(a, dim));
      auto rep = specialize_polynomial_syzygy(f, g);
      Json j;
      j["record"] = syzygy_to_json(rep.record);
      j["lattice_sharing"] = rep.lattice_sharing;
      out.emit(j);
      return kExitOk;
    }
    if (*c_fix) {
      Json j;
      if (name == "hexagon") {
        auto h = fixtures::hexagon();
        j["P1"] = polytope_to_json(h.p1);
        j["P2"] = polytope_to_json(h.p2);
        j["P3"] = polytope_to_json(h.p3);
        j["P4"] = polytope_to_json(h.p4);
        j["hexagon"] = polytope_to_json(h.hexagon);
      } else if (name == "a-lattice") {
        j = ideal_to_json(fixtures::a_lattice_ideal(var_index));
      } else if (name == "cm") {
        j = semimodule_to_json(cm_fixture(d_param));
      } else if (name == "prism") {
        auto pr = fixtures::prism();
        j["prism"] = polytope_to_json(pr.prism);
        Json p = Json::array(), q = Json::array();
        for (const auto& e : pr.p) p.push_back(polytope_to_json(e));
        for (const auto& e : pr.q) q.push_back(polytope_to_json(e));
        j["P"] = std::move(p);
        j["Q"] = std::move(q);
      } else if (name == "five-polytope") {
        Json p = Json::array();
        for (const auto& e : fixtures::five_polytopes()) p.push_back(polytope_to_json(e));
        j["P"] = std::move(p);
      } else if (name == "nonregular") {
        auto h = fixtures::hexagon();
        Json pair = Json::array();
        pair.push_back(polytope_to_json(h.p1));
        pair.push_back(polytope_to_json(h.p2));
        j["pair"] = std::move(pair);
        Json tri = Json::array();
        for (const auto& e : fixtures::triangulated_product()) tri.push_back(polytope_to_json(e));
        j["triangulated"] = std::move(tri);
      } else if (name == "monomial") {
        Json arr = Json::array();
        for (const auto& ideal : fixtures::monomial_ideals()) arr.push_back(ideal_to_json(ideal));
        j["ideals"] = std::move(arr);
      } else {  // lifting
        auto lift = fixtures::lifting_pair();
        j["P1"] = polytope_to_json(lift.p1);
        j["P2"] = polytope_to_json(lift.p2);
        j["hidden"] = polytope_to_json(lift.hidden);
      }
      out.emit(j);
      return kExitOk;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
