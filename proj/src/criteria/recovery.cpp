#include "keller/criteria.hpp"
#include "keller/error.hpp"

namespace keller {

namespace {

Polynomial materialize(const PolyMap& f, const Polynomial& w) {
  if (w.nvars() != f.n()) throw StructuralError("annihilator coefficient lives in the wrong ring");
  return w.substitute(f.coords());
}

// Membership of X = x_j^m and then of x_j; absent when either fails.
std::optional<Recovery> finish(const PolyMap& f, const AnnihilatorInput& inp, const Polynomial& root,
                               const GroebnerLimits& limits) {
  SubalgebraMembership member(f, limits);
  auto xj = Polynomial::variable(f.n(), inp.j);
  auto power = member.witness(xj.pow(inp.m));
  if (!power) return std::nullopt;
  if (inp.m == 1) return Recovery{*power, *power, root};
  auto coordinate = member.witness(xj);
  if (!coordinate) return std::nullopt;
  return Recovery{*power, *coordinate, root};
}

void check_index(const PolyMap& f, const AnnihilatorInput& inp) {
  if (inp.j >= f.n()) throw StructuralError("annihilator coordinate index out of range");
  if (inp.m == 0) throw InputError("annihilator exponent must be positive");
}

}  // namespace

std::optional<Recovery> recover_coordinate_quadratic(const PolyMap& f, const AnnihilatorInput& inp,
                                                     const GroebnerLimits& limits) {
  check_index(f, inp);
  const std::size_t n = f.n();
  Polynomial A = materialize(f, inp.a), B = materialize(f, inp.b), C = materialize(f, inp.c);
  if (A.is_zero() && B.is_zero() && C.is_zero()) throw DegenerateInputError("annihilator a = b = c = 0");
  Polynomial X = Polynomial::variable(n, inp.j).pow(inp.m);
  if (!(A * X * X + B * X + C).is_zero()) throw InputError("annihilating relation does not hold");

  if (A.is_zero()) {
    // b X + c = 0 with b != 0.
    auto x = divide_exact(-C, B);
    if (!x || *x != X) return std::nullopt;
    return finish(f, inp, *x, limits);
  }
  Polynomial half_b = B * Rational(1, 2);
  Polynomial s = half_b * half_b - A * C;
  auto r = nth_root(s, 2);
  if (!r) return std::nullopt;
  SubalgebraMembership member(f, limits);
  if (!member.witness(*r)) return std::nullopt;
  // a X + b/2 = ±r.
  for (const Polynomial& e : {*r - half_b, -*r - half_b}) {
    auto x = divide_exact(e, A);
    if (x && *x == X) return finish(f, inp, *r, limits);
  }
  throw InternalInconsistencyError("square root does not solve the annihilating relation");
}

CubicRecovery recover_coordinate_cubic_special(const PolyMap& f, const AnnihilatorInput& inp,
                                               const GroebnerLimits& limits) {
  check_index(f, inp);
  if (!inp.d) throw InputError("cubic recovery needs the coefficient d");
  const std::size_t n = f.n();
  Polynomial A = materialize(f, inp.a), B = materialize(f, inp.b), C = materialize(f, inp.c),
             D = materialize(f, *inp.d);
  if (A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero())
    throw DegenerateInputError("annihilator a = b = c = d = 0");
  Polynomial X = Polynomial::variable(n, inp.j).pow(inp.m);
  if (!(A * X.pow(3) + B * X * X + C * X + D).is_zero()) throw InputError("annihilating relation does not hold");

  CubicRecovery out;
  if (!(B * B - Rational(3) * A * C).is_zero()) {
    out.status = CubicStatus::not_supported;
    return out;
  }
  Polynomial root(n);
  if (A.is_zero()) {
    // b^2 = 3ac forces b = 0: c X + d = 0.
    auto x = divide_exact(-D, C);
    if (!x || *x != X) return out;
    root = *x;
  } else {
    Polynomial third_b = B * Rational(1, 3);
    Polynomial s = third_b.pow(3) - A * A * D;
    auto r = nth_root(s, 3);
    if (!r) return out;
    SubalgebraMembership member(f, limits);
    if (!member.witness(*r)) return out;
    auto x = divide_exact(*r - third_b, A);
    if (!x || *x != X) throw InternalInconsistencyError("cube root does not solve the annihilating relation");
    root = *r;
  }
  out.recovery = finish(f, inp, root, limits);
  out.status = out.recovery ? CubicStatus::recovered : CubicStatus::absent;
  return out;
}

std::string_view to_string(ExchangeTag t) {
  switch (t) {
    case ExchangeTag::symmetric: return "symmetric";
    case ExchangeTag::skew: return "skew";
    case ExchangeTag::neither: return "neither";
  }
  return "neither";
}

ExchangeTag exchange_tag(const Polynomial& p) {
  if (p.nvars() != 2) throw StructuralError("the exchange involution acts on two variables");
  const std::size_t swap[] = {1, 0};
  Polynomial q = p.permute_variables(swap);
  if (q == p) return ExchangeTag::symmetric;
  if (q == -p) return ExchangeTag::skew;
  return ExchangeTag::neither;
}

ExchangeSymmetry check_exchange_symmetry(const PolyMap& f, const GroebnerLimits& limits) {
  if (f.n() != 2) throw PreconditionError("exchange symmetry is defined for n = 2");
  ExchangeSymmetry out;
  try {
    out.minpoly = symbolic_coordinate_minpoly(f, 0, limits);
  } catch (const BudgetExceededError& e) {
    throw UnsupportedError(std::string("symbolic minimal polynomial out of budget: ") + e.what());
  }
  // (T, t1, t2) -> (0, F1, F2).
  std::vector<Polynomial> images{Polynomial(2), f[0], f[1]};
  Polynomial conj(2);
  Polynomial x2_power = Polynomial::constant(2, 1);
  for (const auto& ck : out.minpoly.coefficients_in(0)) {
    Polynomial c = ck.substitute(images);
    out.tags.push_back(exchange_tag(c));
    conj += c * x2_power;
    x2_power *= Polynomial::variable(2, 1);
    out.coefficients.push_back(std::move(c));
  }
  out.conjugate_contained = conj.is_zero();
  return out;
}

CmwDecomposition cmw_decompose_2d(const PolyMap& f, const GroebnerLimits& limits) {
  if (f.n() != 2) throw PreconditionError("cmw_decompose_2d needs n = 2");
  if (!is_keller(f)) throw PreconditionError("cmw_decompose_2d needs a Keller map");
  if (f[0].total_degree() != 1) throw PreconditionError("cmw_decompose_2d needs F1 of degree 1");
  Rational jac = jacobian_det(f).constant_term();
  Rational alpha = f[0].derivative(0).constant_term();
  Rational beta = f[0].derivative(1).constant_term();
  // alpha*delta - beta*gamma = jac.
  Rational gamma = 0, delta = 0;
  if (sgn(alpha) != 0)
    delta = jac / alpha;
  else
    gamma = -jac / beta;
  Polynomial g2 = Polynomial::variable(2, 0) * gamma + Polynomial::variable(2, 1) * delta;
  Polynomial h = f[1] - g2;
  std::vector<Polynomial> gens{f[0]};
  auto w = SubalgebraMembership(gens, limits).witness(h);
  if (!w) throw InternalInconsistencyError("F2 - g(x2) is not a polynomial in F1");
  CmwDecomposition out{PolyMap({f[0], g2}), {}};
  for (const auto& ck : w->coefficients_in(0)) out.c.push_back(ck.constant_term());
  Polynomial rebuilt = g2;
  for (std::size_t i = 0; i < out.c.size(); ++i) rebuilt += f[0].pow(static_cast<unsigned>(i)) * out.c[i];
  if (rebuilt != f[1]) throw InternalInconsistencyError("C-M-W reconstruction failed");
  return out;
}

}  // namespace keller
