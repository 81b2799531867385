#include "invop/pvspace.hh"

#include <fstream>
#include <sstream>

#include "invop/interpolate.hh"
#include "invop/lie_closure.hh"
#include "invop/parse.hh"

namespace invop {

const std::vector<SpaceDef>& PVSpace::catalog() {
  static const std::vector<SpaceDef> defs = {
      {"rank1", {"x"}, "x", "multiplication by x on C"},
      {"quad2", {"x1", "x2"}, "x1^2 + x2^2", "nondegenerate quadratic form on C^2"},
      {"quad3", {"x1", "x2", "x3"}, "x1^2 + x2^2 + x3^2",
       "nondegenerate quadratic form on C^3"},
      {"quad4", {"x1", "x2", "x3", "x4"}, "x1^2 + x2^2 + x3^2 + x4^2",
       "nondegenerate quadratic form on C^4"},
      {"det2", {"x11", "x12", "x21", "x22"}, "x11*x22 - x12*x21",
       "determinant on 2x2 matrices"},
      {"det3",
       {"x11", "x12", "x13", "x21", "x22", "x23", "x31", "x32", "x33"},
       "x11*x22*x33 - x11*x23*x32 - x12*x21*x33 + x12*x23*x31 + x13*x21*x32 - "
       "x13*x22*x31",
       "determinant on 3x3 matrices"},
      {"sym2", {"x11", "x12", "x22"}, "2*x11*x22 - x12^2",
       "determinant on symmetric 2x2 matrices, trace-form coordinates"},
      {"pfaff4", {"p12", "p13", "p14", "p23", "p24", "p34"},
       "p12*p34 - p13*p24 + p14*p23", "Pfaffian on alternating 4x4 matrices"},
  };
  return defs;
}

bool PVSpace::is_builtin(const std::string& name) {
  for (const auto& def : catalog())
    if (def.name == name) return true;
  return false;
}

PVSpace PVSpace::load(const std::string& name_or_path) {
  for (const auto& def : catalog()) {
    if (def.name != name_or_path) continue;
    return make(def.name, def.vars, parse_polynomial(def.delta_text, def.vars), true);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    std::string names;
    for (const auto& def : catalog()) names += (names.empty() ? "" : ", ") + def.name;
    throw usage_error("unknown space '" + name_or_path +
                      "' (not a catalog name or readable file); catalog: " + names);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return from_definition_text(buf.str());
}

PVSpace PVSpace::from_definition_text(const std::string& text) {
  std::string name;
  std::vector<std::string> vars;
  std::string delta_text;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (line.empty() || line[0] == '#') continue;
    if (eq == std::string::npos)
      throw usage_error("definition line without '=': " + line);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "name") {
      name = val;
    } else if (key == "vars") {
      std::istringstream vs(val);
      std::string v;
      while (std::getline(vs, v, ',')) {
        v = trim(v);
        if (!v.empty()) vars.push_back(v);
      }
    } else if (key == "delta") {
      delta_text = val;
    } else {
      throw usage_error("unknown definition key '" + key + "'");
    }
  }
  if (name.empty() || vars.empty() || delta_text.empty())
    throw usage_error("definition needs name, vars and delta lines");
  return make(name, vars, parse_polynomial(delta_text, vars), false);
}

PVSpace PVSpace::make(std::string name, std::vector<std::string> vars, SparsePoly delta,
                      bool builtin) {
  return PVSpace(std::move(name), std::move(vars), std::move(delta), builtin);
}

PVSpace::PVSpace(std::string name, std::vector<std::string> vars, SparsePoly delta,
                 bool builtin)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      delta_(std::move(delta)),
      x_(delta_.nvars()),
      y_(delta_.nvars()),
      e_(WeylOp::euler(delta_.nvars())),
      builtin_(builtin) {
  if (delta_.nvars() != vars_.size())
    throw usage_error("variable list does not match delta");
  if (delta_.is_zero()) throw usage_error("rejected: delta is the zero polynomial");
  auto hdeg = delta_.homogeneous_degree();
  if (!hdeg) throw usage_error("rejected: delta is not homogeneous");
  if (*hdeg == 0) throw usage_error("rejected: delta is constant");
  d0_ = static_cast<int>(*hdeg);

  // c = sum over monomials of c_alpha^2 alpha!, so that (Y delta)(0) = 1.
  norm_ = Rational(0);
  for (const auto& [alpha, c] : delta_.terms()) {
    Rational fac(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) fac *= rational_factorial(alpha[i]);
    norm_ += c * c * fac;
  }
  x_ = WeylOp::mult_by(delta_);
  y_ = WeylOp::constant_coeff(delta_).scaled(Rational(1) / norm_);

  SparsePoly check = y_.apply(delta_);
  if (check != SparsePoly::constant(delta_.nvars(), Rational(1)))
    throw std::logic_error("normalization failed: Y delta != 1");
}

namespace {

// p == c * q exactly for some scalar c (0 when p is zero)?
std::optional<Rational> proportionality(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero()) return Rational(0);
  if (q.is_zero()) return std::nullopt;
  const auto& [lead_m, lead_c] = *q.terms().rbegin();
  auto it = p.terms().find(lead_m);
  if (it == p.terms().end()) return std::nullopt;
  Rational c = it->second / lead_c;
  if (p != q.scaled(c)) return std::nullopt;
  return c;
}

std::vector<SparsePoly> delta_powers(const PVSpace& space, int up_to) {
  std::vector<SparsePoly> pows;
  pows.reserve(up_to + 1);
  pows.push_back(SparsePoly::constant(space.delta().nvars(), Rational(1)));
  for (int k = 1; k <= up_to; ++k) pows.push_back(pows.back() * space.delta());
  return pows;
}

}  // namespace

BTable bfunction(const PVSpace& space, int max_power) {
  if (max_power < space.d0() + 2)
    throw usage_error("bfunction needs max-power >= d0 + 2 = " +
                      std::to_string(space.d0() + 2));
  auto pows = delta_powers(space, max_power + 1);
  BTable table;
  for (int k = 0; k <= max_power; ++k) {
    SparsePoly image = space.Y().apply(pows[k + 1]);
    auto c = proportionality(image, pows[k]);
    if (!c)
      throw check_error("not a valid one-dimensional-quotient realization at this power: "
                        "Y*delta^" + std::to_string(k + 1) +
                        " is not proportional to delta^" + std::to_string(k));
    table.values.push_back(*c);
  }
  return table;
}

UniPolyQ u_polynomial(const PVSpace& space, int max_power) {
  BTable table = bfunction(space, max_power);
  const int d0 = space.d0();
  std::vector<std::pair<Rational, Rational>> points;
  for (int k = 0; k <= d0; ++k)
    points.emplace_back(Rational(static_cast<long>(d0) * (k + 1)), table.values[k]);
  UniPolyQ u = interpolate(points);
  for (int k = d0 + 1; k <= max_power; ++k) {
    if (u.eval(Rational(static_cast<long>(d0) * (k + 1))) != table.values[k])
      throw check_error("u stability failure: degree mismatch, b(" + std::to_string(k) +
                        ") is not predicted by the degree-" + std::to_string(u.degree()) +
                        " interpolant");
  }
  if (space.is_builtin_space()) {
    if (!u.coeff(0).is_zero()) throw std::logic_error("catalog u has u(0) != 0");
    if (u.degree() != d0) throw std::logic_error("catalog u has degree != d0");
  }
  return u;
}

WeylOp eval_word_weyl(const WordSum& expr, const PVSpace& space) {
  const std::size_t n = space.delta().nvars();
  WeylOp total(n);
  for (const auto& [w, c] : expr.terms()) {
    WeylOp prod = WeylOp::constant(n, Rational(1));
    for (std::uint8_t l : w) {
      switch (l) {
        case letter::x: prod = prod * space.X(); break;
        case letter::y: prod = prod * space.Y(); break;
        case letter::e: prod = prod * space.E(); break;
        default:
          throw usage_error("X^-1 is not available at the Weyl level");
      }
    }
    total += prod.scaled(c);
  }
  return total;
}

namespace {

// One graded piece applied across delta powers; interpolates g_p through
// (k d0, c_k). Null when the piece is not proportional to the expected
// power at some k.
std::optional<UniPolyQ> radial_piece(const WeylOp& piece, int p, int d0,
                                     const std::vector<SparsePoly>& pows, int max_power) {
  std::vector<std::pair<Rational, Rational>> points;
  for (int k = 0; k <= max_power; ++k) {
    SparsePoly image = piece.apply(pows[k]);
    Rational ck(0);
    if (k + p < 0) {
      if (!image.is_zero()) return std::nullopt;
    } else {
      auto c = proportionality(image, pows[k + p]);
      if (!c) return std::nullopt;
      ck = *c;
    }
    points.emplace_back(Rational(static_cast<long>(k) * d0), ck);
  }
  return interpolate(points);
}

}  // namespace

LaurentElement<Rational> radial_component(const PVSpace& space, const WordSum& expr,
                                          int max_power) {
  const int d0 = space.d0();
  WeylOp op = eval_word_weyl(expr, space);
  auto pieces = split_by_euler_grade(op);

  // Degree estimate: each y contributes at most deg u (>= d0 only for
  // custom spaces), each e one, each x nothing.
  int estimate = d0 + 3;
  for (const auto& [w, c] : expr.terms()) {
    int deg = 0;
    for (std::uint8_t l : w) deg += l == letter::y ? d0 : (l == letter::e ? 1 : 0);
    estimate = std::max(estimate, deg + 3);
  }
  int sample = max_power >= 0 ? max_power : estimate;

  for (;; sample += 4) {
    int max_p = 0;
    for (const auto& [grade, piece] : pieces) max_p = std::max<int>(max_p, std::abs(grade) / d0 + 1);
    auto pows = delta_powers(space, sample + max_p);

    LaurentElement<Rational> result = LaurentElement<Rational>::zero(Rational(0));
    bool stable = true;
    for (const auto& [grade, piece] : pieces) {
      if (grade % d0 != 0) {
        // A grade outside d0 Z can only be radial if it annihilates every
        // power of delta.
        for (int k = 0; k <= sample; ++k)
          if (!piece.apply(pows[k]).is_zero())
            throw check_error("operator is not radial: a graded piece of degree " +
                              std::to_string(grade) + " acts outside C[delta]");
        continue;
      }
      int p = static_cast<int>(grade) / d0;
      auto g = radial_piece(piece, p, d0, pows, sample);
      if (!g)
        throw check_error("operator is not radial: the degree-" + std::to_string(grade) +
                          " piece does not map powers of delta to powers of delta");
      if (g->degree() > sample - 2) {
        stable = false;
        break;
      }
      result.add_component(p, *g);
    }
    if (stable) return result;
    if (max_power >= 0 || sample > 80)
      throw check_error("radial interpolation did not stabilize by max-power " +
                        std::to_string(sample));
  }
}

Report verify_space(const PVSpace& space, int max_power) {
  Report report;
  report.space = space.name();
  const int d0 = space.d0();
  const WeylOp &X = space.X(), &Y = space.Y(), &E = space.E();

  report.values["d0"] = d0;
  report.values["nvars"] = space.vars().size();
  report.values["delta"] = space.delta().str(space.vars());

  report.add("grading.EX", commutator(E, X) == X.scaled(Rational(d0)),
             "[E,X] = " + std::to_string(d0) + "*X");
  report.add("grading.EY", commutator(E, Y) == Y.scaled(Rational(-d0)),
             "[E,Y] = -" + std::to_string(d0) + "*Y");
  report.add("tau.XE", X * E == (E - WeylOp::constant(E.nvars(), Rational(d0))) * X,
             "X*E = (E - " + std::to_string(d0) + ")*X");

  WeylOp XY = X * Y, YX = Y * X;
  report.add("commutativity.XY_YX", commutator(XY, YX).is_zero(), "[X*Y, Y*X] = 0");

  bool have_b = false;
  BTable table;
  try {
    table = bfunction(space, max_power);
    have_b = true;
    auto blist = nlohmann::ordered_json::array();
    for (const auto& b : table.values) blist.push_back(b.str());
    report.values["b"] = blist;
    report.add("bfunction.proportionality", true,
               "Y*delta^(k+1) = b(k)*delta^k exactly for k <= " + std::to_string(max_power));
    report.add("bfunction.b0", table.values.at(0) == Rational(1), "b(0) = 1");
    if (space.is_builtin_space()) {
      bool positive = true;
      for (const auto& b : table.values) positive = positive && b.sign() > 0;
      report.add("bfunction.positive", positive, "all b(k) > 0");
    }
  } catch (const check_error& err) {
    report.add("bfunction.proportionality", false, err.what());
  }

  bool have_u = false;
  UniPolyQ u = UniPolyQ::zero(Rational(0));
  if (have_b) {
    try {
      std::vector<std::pair<Rational, Rational>> points;
      for (int k = 0; k <= d0; ++k)
        points.emplace_back(Rational(static_cast<long>(d0) * (k + 1)), table.values[k]);
      u = interpolate(points);
      bool stable = true;
      int bad_k = -1;
      for (int k = d0 + 1; k <= max_power; ++k) {
        if (u.eval(Rational(static_cast<long>(d0) * (k + 1))) != table.values[k]) {
          stable = false;
          bad_k = k;
          break;
        }
      }
      report.add("ufunction.stability", stable,
                 stable ? "all b-points beyond the interpolation set lie on u"
                        : "degree mismatch at k = " + std::to_string(bad_k));
      if (stable) {
        have_u = true;
        report.values["u"] = u.str();
        report.add("ufunction.u_at_0", u.coeff(0).is_zero(), "u(0) = 0");
        if (u.degree() == d0) {
          report.add("ufunction.degree", true, "deg u = d0 = " + std::to_string(d0));
        } else if (space.is_builtin_space()) {
          report.add("ufunction.degree", false,
                     "deg u = " + std::to_string(u.degree()) + " != d0");
        } else {
          report.add_flag("ufunction.degree",
                          "deg u = " + std::to_string(u.degree()) + ", d0 = " +
                              std::to_string(d0) + " (custom space, reported only)");
        }
      }
    } catch (const usage_error& err) {
      report.add("ufunction.stability", false, err.what());
    }
  } else {
    report.add_flag("ufunction.stability", "skipped: no b-table");
  }

  const std::vector<std::pair<std::string, std::string>> words = {
      {"X", "X"},           {"Y", "Y"},       {"X*Y", "X*Y"},
      {"Y*X", "Y*X"},       {"[Y,X]", "Y*X - X*Y"},
      {"Y^2", "Y^2"},       {"X^2*Y", "X^2*Y"}, {"E*X*Y", "E*X*Y"}};
  if (have_u) {
    UPresentation<Rational> pres(u, d0);
    for (const auto& [label, text] : words) {
      WordSum expr = parse_word_sum(text, {"X", "Y", "E"});
      try {
        auto radial = radial_component(space, expr);
        auto abstract_side = eval_word_laurent(expr, pres);
        report.add("radial." + label, radial == abstract_side,
                   "Weyl radial component matches U(Q,u," + std::to_string(d0) + ")");
      } catch (const check_error& err) {
        report.add("radial." + label, false, err.what());
      }
    }
  } else {
    report.add_flag("radial.agreement", "skipped: no stable u");
  }

  return report;
}

std::vector<std::size_t> igusa_closure(const PVSpace& space, int depth) {
  return lie_closure_dims({space.X(), space.Y()}, depth);
}

}  // namespace invop
