#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "padic/error.hpp"
#include "padic/geometry.hpp"
#include "padic/laurent.hpp"
#include "padic/newton.hpp"
#include "padic/padic_number.hpp"
#include "padic/valuation.hpp"

namespace padic::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type from = 0;
  while (true) {
    auto at = text.find(sep, from);
    parts.push_back(text.substr(from, at - from));
    if (at == std::string::npos) break;
    from = at + 1;
  }
  return parts;
}

// "a0,a1,...,an" or a JSON array of integers / "a/b" strings
std::vector<rational> parse_coeff_list(const std::string& text) {
  std::vector<rational> coeffs;
  if (!text.empty() && text.front() == '[') {
    json arr;
    try {
      arr = json::parse(text);
    } catch (const json::parse_error& e) {
      throw parse_error("bad JSON coefficient array", e.byte);
    }
    if (!arr.is_array())
      throw parse_error("expected a JSON array of coefficients", 0);
    for (const auto& item : arr) {
      if (item.is_number_integer())
        coeffs.push_back(rational(integer(item.get<long>())));
      else if (item.is_string())
        coeffs.push_back(parse_rational(item.get<std::string>()));
      else
        throw parse_error("coefficients must be integers or \"a/b\" strings",
                          0);
    }
    return coeffs;
  }
  for (const auto& part : split(text, ','))
    coeffs.push_back(parse_rational(part));
  return coeffs;
}

poly_q parse_poly(const std::string& text) {
  return poly_q(parse_coeff_list(text));
}

std::vector<integer> parse_integer_list(const std::string& text) {
  std::vector<integer> out;
  if (!text.empty() && text.front() == '[') {
    for (const auto& c : parse_coeff_list(text)) {
      if (c.get_den() != 1)
        throw parse_error("expected integer coefficients", 0);
      out.push_back(c.get_num());
    }
    return out;
  }
  for (const auto& part : split(text, ','))
    out.push_back(parse_integer(part));
  return out;
}

// "0" exact zero, "O:k" zero to precision k, "v:c0,c1,..." known window
laurent_series parse_laurent(const place& p, const std::string& text) {
  if (text == "0") return laurent_series::exact_zero(p);
  if (text.rfind("O:", 0) == 0)
    return laurent_series::zero_to_precision(
        p, parse_integer(text.substr(2)).get_si());
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("expected \"val:c0,c1,...\", \"O:k\" or \"0\"", 0);
  long val = parse_integer(text.substr(0, colon)).get_si();
  std::vector<integer> coeffs;
  for (const auto& part : split(text.substr(colon + 1), ','))
    coeffs.push_back(parse_integer(part));
  return laurent_series::from_coeffs(p, val, std::move(coeffs));
}

place parse_place(const std::string& text) {
  return place(parse_integer(text));
}

integer parse_base(const std::string& text) {
  integer g = parse_integer(text);
  if (g < 2) throw error(errc::precondition_violation, "base must be >= 2");
  return g;
}

long parse_long(const std::string& text) {
  return parse_integer(text).get_si();
}

// window wide enough for every known digit plus the fractional positions
std::size_t display_window(const padic_number& x) {
  if (x.kind() != padic_kind::approx) return 1;
  long w = static_cast<long>(x.digits().size()) + std::max(0L, -x.val());
  return static_cast<std::size_t>(w);
}

json padic_json(const padic_number& x) {
  json j;
  j["base"] = to_string(x.base());
  switch (x.kind()) {
    case padic_kind::exact_zero:
      j["kind"] = "exact_zero";
      j["val"] = 0;
      j["digits"] = json::array();
      break;
    case padic_kind::zero_to_precision:
      j["kind"] = "zero_to_precision";
      j["val"] = x.zero_precision();
      j["digits"] = json::array();
      break;
    case padic_kind::approx: {
      j["kind"] = "approx";
      j["val"] = x.val();
      json digits = json::array();
      for (const auto& d : x.digits()) digits.push_back(to_string(d));
      j["digits"] = digits;
      break;
    }
  }
  return j;
}

json laurent_json(const laurent_series& s) {
  json j;
  j["base"] = "T";
  j["p"] = to_string(s.field().prime());
  switch (s.kind()) {
    case laurent_kind::exact_zero:
      j["kind"] = "exact_zero";
      j["val"] = 0;
      j["digits"] = json::array();
      break;
    case laurent_kind::zero_to_precision:
      j["kind"] = "zero_to_precision";
      j["val"] = s.zero_precision();
      j["digits"] = json::array();
      break;
    case laurent_kind::approx: {
      j["kind"] = "approx";
      j["val"] = s.val();
      json coeffs = json::array();
      for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
      j["digits"] = coeffs;
      break;
    }
  }
  return j;
}

std::string polygon_text(const newton_polygon& np) {
  std::string out = "vertices:";
  for (const auto& v : np.vertices)
    out += " (" + std::to_string(v.index) + ", " + to_string(v.value) + ")";
  out += "\nsegments:";
  for (const auto& s : np.segments)
    out += " (slope " + to_string(s.slope) + ", length " +
           std::to_string(s.length) + ")";
  return out;
}

json polygon_json(const newton_polygon& np) {
  json vertices = json::array();
  for (const auto& v : np.vertices)
    vertices.push_back(json::array({v.index, to_string(v.value)}));
  json segments = json::array();
  for (const auto& s : np.segments)
    segments.push_back(
        json{{"slope", to_string(s.slope)}, {"length", s.length}});
  return json{{"vertices", vertices}, {"segments", segments}};
}

void write_svg(const newton_polygon& np,
               const std::vector<valued_point>& points,
               const std::string& path) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& q : points) {
    double x = static_cast<double>(q.index), y = q.value.get_d();
    if (first) {
      xmin = xmax = x;
      ymin = ymax = y;
      first = false;
    }
    xmin = std::min(xmin, x), xmax = std::max(xmax, x);
    ymin = std::min(ymin, y), ymax = std::max(ymax, y);
  }
  const double scale = 40, pad = 30;
  auto px = [&](double x) { return pad + (x - xmin) * scale; };
  auto py = [&](double y) { return pad + (ymax - y) * scale; };
  double width = px(xmax) + pad, height = py(ymin) + pad;
  std::ofstream svg(path);
  if (!svg)
    throw error(errc::precondition_violation, "cannot write " + path);
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width
      << "' height='" << height << "'>\n";
  for (long i = static_cast<long>(std::ceil(xmin));
       i <= static_cast<long>(std::floor(xmax)); ++i)
    svg << "<line x1='" << px(i) << "' y1='" << py(ymin) << "' x2='" << px(i)
        << "' y2='" << py(ymax) << "' stroke='#ddd'/>\n";
  for (long v = static_cast<long>(std::ceil(ymin));
       v <= static_cast<long>(std::floor(ymax)); ++v)
    svg << "<line x1='" << px(xmin) << "' y1='" << py(v) << "' x2='"
        << px(xmax) << "' y2='" << py(v) << "' stroke='#ddd'/>\n";
  svg << "<polyline fill='none' stroke='#d22' stroke-width='2' points='";
  for (const auto& v : np.vertices)
    svg << px(static_cast<double>(v.index)) << "," << py(v.value.get_d())
        << " ";
  svg << "'/>\n";
  for (const auto& q : points)
    svg << "<circle cx='" << px(static_cast<double>(q.index)) << "' cy='"
        << py(q.value.get_d()) << "' r='3' fill='#226'/>\n";
  svg << "</svg>\n";
}

std::string relation_name(ball_rel r) {
  switch (r) {
    case ball_rel::equal: return "equal";
    case ball_rel::first_inside_second: return "first_inside_second";
    case ball_rel::second_inside_first: return "second_inside_first";
    case ball_rel::disjoint: return "disjoint";
  }
  return "?";
}

void emit(std::ostream& out, bool as_json, const json& j,
          const std::string& text) {
  if (as_json)
    out << j.dump() << "\n";
  else
    out << text << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact p-adic and ultrametric toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  auto make_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // val <x> <p>
  struct {
    std::string x, p;
  } val_a;
  auto* val_c = make_sub("val", "p-adic valuation of a rational");
  val_c->add_option("x", val_a.x, "rational a or a/b")->required();
  val_c->add_option("p", val_a.p, "prime")->required();
  val_c->callback([&] {
    ext_int v = vp(parse_rational(val_a.x), parse_place(val_a.p));
    emit(out, as_json, json{{"val", v.str()}}, v.str());
  });

  // valg <x> <g>
  struct {
    std::string x, g;
  } valg_a;
  auto* valg_c = make_sub("valg", "base-g valuation (terminating expansions)");
  valg_c->add_option("x", valg_a.x, "rational")->required();
  valg_c->add_option("g", valg_a.g, "base >= 2")->required();
  valg_c->callback([&] {
    ext_int v = vg(parse_rational(valg_a.x), parse_base(valg_a.g));
    emit(out, as_json, json{{"val", v.str()}}, v.str());
  });

  // expand <x> <g> <N>
  struct {
    std::string x, g;
    unsigned long n = 0;
  } expand_a;
  auto* expand_c = make_sub("expand", "base-g digit expansion with N digits");
  expand_c->add_option("x", expand_a.x, "rational")->required();
  expand_c->add_option("g", expand_a.g, "base >= 2")->required();
  expand_c->add_option("N", expand_a.n, "digit count")->required();
  expand_c->callback([&] {
    auto e = padic_number::from_rational(parse_rational(expand_a.x),
                                         parse_base(expand_a.g), expand_a.n);
    emit(out, as_json, padic_json(e), display(e, display_window(e)));
  });

  // arith <op> <x> <y> <g> <N>
  struct {
    std::string op, x, y, g;
    unsigned long n = 0;
  } arith_a;
  auto* arith_c = make_sub("arith", "digit arithmetic on two expansions");
  arith_c->add_option("op", arith_a.op, "add | sub | mul | div")->required();
  arith_c->add_option("x", arith_a.x, "rational")->required();
  arith_c->add_option("y", arith_a.y, "rational")->required();
  arith_c->add_option("g", arith_a.g, "base >= 2")->required();
  arith_c->add_option("N", arith_a.n, "digit count")->required();
  arith_c->callback([&] {
    integer g = parse_base(arith_a.g);
    auto x = padic_number::from_rational(parse_rational(arith_a.x), g,
                                         arith_a.n);
    auto y = padic_number::from_rational(parse_rational(arith_a.y), g,
                                         arith_a.n);
    padic_number r = padic_number::exact_zero(g);
    if (arith_a.op == "add")
      r = add(x, y);
    else if (arith_a.op == "sub")
      r = sub(x, y);
    else if (arith_a.op == "mul")
      r = mul(x, y);
    else if (arith_a.op == "div")
      r = div(x, y);
    else
      throw parse_error("op must be add, sub, mul or div", 0);
    emit(out, as_json, padic_json(r), display(r, display_window(r)));
  });

  // inv <x> <p> <N>
  struct {
    std::string x, p;
    unsigned long n = 0;
  } inv_a;
  auto* inv_c = make_sub("inv", "p-adic inverse by digit lifting");
  inv_c->add_option("x", inv_a.x, "rational")->required();
  inv_c->add_option("p", inv_a.p, "prime base")->required();
  inv_c->add_option("N", inv_a.n, "digit count")->required();
  inv_c->callback([&] {
    place p = parse_place(inv_a.p);
    auto x =
        padic_number::from_rational(parse_rational(inv_a.x), p.prime(), inv_a.n);
    auto r = inv(x);
    emit(out, as_json, padic_json(r), display(r, display_window(r)));
  });

  // polygon <poly> <p> [--svg FILE]
  struct {
    std::string poly, p, svg;
  } poly_a;
  auto* poly_c = make_sub("polygon", "Newton polygon of a polynomial at p");
  poly_c->add_option("poly", poly_a.poly, "a0,a1,...,an ascending")
      ->required();
  poly_c->add_option("p", poly_a.p, "prime")->required();
  poly_c->add_option("--svg", poly_a.svg, "write an SVG rendering here");
  poly_c->callback([&] {
    poly_q P = parse_poly(poly_a.poly);
    place p = parse_place(poly_a.p);
    auto np = polygon_of(P, p);
    if (!poly_a.svg.empty()) {
      std::vector<valued_point> points;
      for (long i = 0; i <= P.degree(); ++i)
        if (P[static_cast<std::size_t>(i)] != 0)
          points.push_back(
              {i, rational(vp(P[static_cast<std::size_t>(i)], p).value())});
      write_svg(np, points, poly_a.svg);
    }
    emit(out, as_json, polygon_json(np), polygon_text(np));
  });

  // dumas <poly> <p>
  struct {
    std::string poly, p;
  } dumas_a;
  auto* dumas_c = make_sub("dumas", "polygon irreducibility verdict at p");
  dumas_c->add_option("poly", dumas_a.poly, "a0,a1,...,an ascending")
      ->required();
  dumas_c->add_option("p", dumas_a.p, "prime")->required();
  dumas_c->callback([&] {
    poly_q P = parse_poly(dumas_a.poly);
    place p = parse_place(dumas_a.p);
    auto verdict = dumas_irreducible(P, p);
    if (verdict == dumas_verdict::irreducible) {
      emit(out, as_json, json{{"verdict", "irreducible"}}, "irreducible");
      return;
    }
    auto purity = is_pure(P, p);
    if (purity.pure) {
      std::string slope = to_string(*purity.slope);
      emit(out, as_json,
           json{{"verdict", "inconclusive"}, {"pure", true}, {"slope", slope}},
           "inconclusive (pure, slope " + slope + ")");
    } else {
      auto np = polygon_of(P, p);
      emit(out, as_json,
           json{{"verdict", "inconclusive"}, {"pure", false}},
           "inconclusive (" + std::to_string(np.segments.size()) +
               " segments)");
    }
  });

  // eisenstein <poly> [--p P | --search BOUND]
  struct {
    std::string poly, p, bound;
  } eis_a;
  auto* eis_c = make_sub("eisenstein", "Eisenstein criterion check or search");
  eis_c->add_option("poly", eis_a.poly, "integer a0,a1,...,an ascending")
      ->required();
  auto* eis_p = eis_c->add_option("--p", eis_a.p, "check at this prime");
  auto* eis_b =
      eis_c->add_option("--search", eis_a.bound, "search primes up to bound");
  eis_p->excludes(eis_b);
  eis_c->callback([&] {
    auto coeffs = parse_integer_list(eis_a.poly);
    if (!eis_a.p.empty()) {
      auto r = eisenstein_check(coeffs, parse_place(eis_a.p));
      std::string text = !r.passes          ? "fails"
                         : r.primitive      ? "passes (primitive)"
                                            : "passes (content > 1)";
      emit(out, as_json,
           json{{"passes", r.passes}, {"primitive", r.primitive}}, text);
      return;
    }
    if (eis_a.bound.empty())
      throw parse_error("need --p P or --search BOUND", 0);
    auto found = find_eisenstein_prime(coeffs, parse_integer(eis_a.bound));
    if (found)
      emit(out, as_json, json{{"p", to_string(found->prime())}},
           "p = " + to_string(found->prime()));
    else
      emit(out, as_json, json{{"p", nullptr}},
           "none up to " + eis_a.bound);
  });

  // legendre <n> <p>
  struct {
    std::string n, p;
  } leg_a;
  auto* leg_c = make_sub("legendre", "v_p(n!) by the floor-sum formula");
  leg_c->add_option("n", leg_a.n, "n >= 0")->required();
  leg_c->add_option("p", leg_a.p, "prime")->required();
  leg_c->callback([&] {
    integer v = legendre_factorial(parse_integer(leg_a.n), parse_place(leg_a.p));
    emit(out, as_json, json{{"val", to_string(v)}}, to_string(v));
  });

  // lte <a> <b> <n> <p> <sign>
  struct {
    std::string a, b, n, p, sign;
  } lte_a;
  auto* lte_c = make_sub("lte", "lifting-the-exponent valuation of a^n -+ b^n");
  lte_c->add_option("a", lte_a.a)->required();
  lte_c->add_option("b", lte_a.b)->required();
  lte_c->add_option("n", lte_a.n)->required();
  lte_c->add_option("p", lte_a.p)->required();
  lte_c->add_option("sign", lte_a.sign, "minus | plus")->required();
  lte_c->callback([&] {
    lte_sign sign;
    if (lte_a.sign == "minus" || lte_a.sign == "-")
      sign = lte_sign::minus;
    else if (lte_a.sign == "plus" || lte_a.sign == "+")
      sign = lte_sign::plus;
    else
      throw parse_error("sign must be minus or plus", 0);
    ext_int v = lte_valuation(parse_integer(lte_a.a), parse_integer(lte_a.b),
                              parse_integer(lte_a.n), parse_place(lte_a.p),
                              sign);
    emit(out, as_json, json{{"val", v.str()}}, v.str());
  });

  // approx <p:x:m>...
  std::vector<std::string> approx_args;
  auto* approx_c = make_sub("approx", "simultaneous approximation witness");
  approx_c->add_option("constraints", approx_args, "p:x:m triples")
      ->required()
      ->expected(-1);
  approx_c->callback([&] {
    std::vector<approx_constraint> cs;
    for (const auto& a : approx_args) {
      auto parts = split(a, ':');
      if (parts.size() != 3)
        throw parse_error("constraint must look like p:x:m", 0);
      cs.push_back({parse_place(parts[0]), parse_rational(parts[1]),
                    parse_integer(parts[2])});
    }
    rational w = weak_approximation(cs);
    emit(out, as_json, json{{"witness", to_string(w)}}, to_string(w));
  });

  // squares <2|3> <n>
  struct {
    std::string form, n;
  } sq_a;
  auto* sq_c = make_sub("squares", "sum-of-squares solvability");
  sq_c->add_option("form", sq_a.form, "2 or 3")->required();
  sq_c->add_option("n", sq_a.n)->required();
  sq_c->callback([&] {
    integer n = parse_integer(sq_a.n);
    bool ok;
    if (sq_a.form == "2")
      ok = two_squares_solvable(n);
    else if (sq_a.form == "3")
      ok = three_squares_solvable(n);
    else
      throw parse_error("form must be 2 or 3", 0);
    emit(out, as_json,
         json{{"form", sq_a.form == "2" ? 2 : 3},
              {"n", to_string(n)},
              {"solvable", ok}},
         ok ? "solvable" : "not solvable");
  });

  // ball <cmd> ...
  auto* ball_c = make_sub("ball", "ultrametric ball geometry");
  ball_c->require_subcommand(1);

  struct {
    std::string p, c, x;
    long k = 0;
  } bc_a;
  auto* bc_c = ball_c->add_subcommand("contains", "membership test");
  bc_c->fallthrough();
  bc_c->add_option("p", bc_a.p)->required();
  bc_c->add_option("c", bc_a.c, "center")->required();
  bc_c->add_option("k", bc_a.k, "radius exponent")->required();
  bc_c->add_option("x", bc_a.x)->required();
  bc_c->callback([&] {
    bool in = ball_contains({parse_place(bc_a.p), parse_rational(bc_a.c),
                             bc_a.k},
                            parse_rational(bc_a.x));
    emit(out, as_json, json{{"contains", in}}, in ? "true" : "false");
  });

  struct {
    std::string p, c1, c2;
    long k1 = 0, k2 = 0;
  } br_a;
  auto* br_c = ball_c->add_subcommand("relation", "equal/nested/disjoint");
  br_c->fallthrough();
  br_c->add_option("p", br_a.p)->required();
  br_c->add_option("c1", br_a.c1)->required();
  br_c->add_option("k1", br_a.k1)->required();
  br_c->add_option("c2", br_a.c2)->required();
  br_c->add_option("k2", br_a.k2)->required();
  br_c->callback([&] {
    place p = parse_place(br_a.p);
    auto rel = ball_relation({p, parse_rational(br_a.c1), br_a.k1},
                             {p, parse_rational(br_a.c2), br_a.k2});
    emit(out, as_json, json{{"relation", relation_name(rel)}},
         relation_name(rel));
  });

  struct {
    std::string p, c, cnew;
    long k = 0;
  } brc_a;
  auto* brc_c = ball_c->add_subcommand("recenter", "move to a member center");
  brc_c->fallthrough();
  brc_c->add_option("p", brc_a.p)->required();
  brc_c->add_option("c", brc_a.c)->required();
  brc_c->add_option("k", brc_a.k)->required();
  brc_c->add_option("c_new", brc_a.cnew)->required();
  brc_c->callback([&] {
    ball b = recenter({parse_place(brc_a.p), parse_rational(brc_a.c),
                       brc_a.k},
                      parse_rational(brc_a.cnew));
    emit(out, as_json,
         json{{"p", to_string(b.p.prime())},
              {"center", to_string(b.center)},
              {"k", b.k}},
         "B_" + to_string(b.p.prime()) + "(" + to_string(b.center) + "; " +
             std::to_string(b.k) + ")");
  });

  struct {
    std::string p, c1, c2;
    long k1 = 0, k2 = 0;
  } bd_a;
  auto* bd_c = ball_c->add_subcommand("distance", "distance of disjoint balls");
  bd_c->fallthrough();
  bd_c->add_option("p", bd_a.p)->required();
  bd_c->add_option("c1", bd_a.c1)->required();
  bd_c->add_option("k1", bd_a.k1)->required();
  bd_c->add_option("c2", bd_a.c2)->required();
  bd_c->add_option("k2", bd_a.k2)->required();
  bd_c->callback([&] {
    place p = parse_place(bd_a.p);
    rational d = ball_distance({p, parse_rational(bd_a.c1), bd_a.k1},
                               {p, parse_rational(bd_a.c2), bd_a.k2});
    emit(out, as_json, json{{"distance", to_string(d)}}, to_string(d));
  });

  // laurent <cmd> ...
  auto* lau_c = make_sub("laurent", "truncated Laurent series over F_p");
  lau_c->require_subcommand(1);

  struct {
    std::string op, p, s, t;
  } la_a;
  auto* la_c = lau_c->add_subcommand("arith", "add/sub/mul/div two series");
  la_c->fallthrough();
  la_c->add_option("op", la_a.op, "add | sub | mul | div")->required();
  la_c->add_option("p", la_a.p)->required();
  la_c->add_option("s", la_a.s, "val:c0,c1,... | O:k | 0")->required();
  la_c->add_option("t", la_a.t, "second series")->required();
  la_c->callback([&] {
    place p = parse_place(la_a.p);
    auto s = parse_laurent(p, la_a.s);
    auto t = parse_laurent(p, la_a.t);
    laurent_series r = laurent_series::exact_zero(p);
    if (la_a.op == "add")
      r = add(s, t);
    else if (la_a.op == "sub")
      r = sub(s, t);
    else if (la_a.op == "mul")
      r = mul(s, t);
    else if (la_a.op == "div")
      r = div(s, t);
    else
      throw parse_error("op must be add, sub, mul or div", 0);
    emit(out, as_json, laurent_json(r), display(r));
  });

  struct {
    std::string p, s;
  } li_a;
  auto* li_c = lau_c->add_subcommand("inv", "power series inverse");
  li_c->fallthrough();
  li_c->add_option("p", li_a.p)->required();
  li_c->add_option("s", li_a.s)->required();
  li_c->callback([&] {
    place p = parse_place(li_a.p);
    auto r = inv(parse_laurent(p, li_a.s));
    emit(out, as_json, laurent_json(r), display(r));
  });

  struct {
    std::string p, s;
  } lr_a;
  auto* lr_c = lau_c->add_subcommand("residue", "constant coefficient in F_p");
  lr_c->fallthrough();
  lr_c->add_option("p", lr_a.p)->required();
  lr_c->add_option("s", lr_a.s)->required();
  lr_c->callback([&] {
    place p = parse_place(lr_a.p);
    integer r = residue(parse_laurent(p, lr_a.s));
    emit(out, as_json, json{{"residue", to_string(r)}}, to_string(r));
  });

  struct {
    std::string p;
    std::vector<std::string> coeffs;
  } lp_a;
  auto* lp_c = lau_c->add_subcommand(
      "polygon", "Newton polygon with Laurent coefficients");
  lp_c->fallthrough();
  lp_c->add_option("p", lp_a.p)->required();
  lp_c->add_option("coeffs", lp_a.coeffs, "one series per X power, ascending")
      ->required()
      ->expected(-1);
  lp_c->callback([&] {
    place p = parse_place(lp_a.p);
    std::vector<laurent_series> cs;
    for (const auto& c : lp_a.coeffs) cs.push_back(parse_laurent(p, c));
    auto np = polygon_of_laurent(cs);
    emit(out, as_json, polygon_json(np), polygon_text(np));
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace padic::cli
