#include "sigcolor/bounds.hpp"

#include <string>

#include "sigcolor/error.hpp"

namespace sigcolor {

BoundParams::BoundParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (q <= 0 || p <= 0) throw PreconditionError("bounds: p and q must be positive");
  const std::int64_t upper = (5 * q + 1) / 2;  // ceil(5q/2)
  if (p < 2 * q || p > upper) {
    throw PreconditionError("bounds: need 2q <= p <= ceil(5q/2), got p=" + std::to_string(p) +
                            ", q=" + std::to_string(q));
  }
}

Integer m_upper_bound(const BoundParams& bp) {
  return Integer(2) * bp.p() - Integer(4) * bp.q();
}

Rational mu_bound(const BoundParams& bp, unsigned i) {
  Integer pow21;
  mpz_ui_pow_ui(pow21.get_mpz_t(), 21, i);
  const Rational p(Integer(bp.p())), q(Integer(bp.q()));
  return Rational(pow21) * (41 * p - 83 * q) / 20 - (p - 3 * q) / 20;
}

Rational mu_bound_recurrence(const BoundParams& bp, unsigned i) {
  const Rational p(Integer(bp.p())), q(Integer(bp.q()));
  Rational mu = 2 * p - 4 * q;
  for (unsigned k = 0; k < i; ++k) mu = p - 3 * q + 21 * mu;
  return mu;
}

std::optional<unsigned> first_infeasible_index(const BoundParams& bp) {
  // With 41p >= 83q the closed form is a nonnegative multiple of 21^i minus
  // (p - 3q)/20 < 0 (p <= 5q/2), so it never goes negative.
  if (41 * bp.p() - 83 * bp.q() >= 0) return std::nullopt;
  // Otherwise the 21^i term eventually dominates.
  const Rational p(Integer(bp.p())), q(Integer(bp.q()));
  Rational mu = 2 * p - 4 * q;
  for (unsigned i = 0;; ++i) {
    if (mu < 0) return i;
    mu = p - 3 * q + 21 * mu;
  }
}

// ---------------------------------------------------------------------------

LinearExpr LinearExpr::var(std::string_view name, Rational c) {
  LinearExpr e;
  e.coef.emplace(std::string(name), c);
  return e;
}

LinearExpr LinearExpr::num(Rational c) {
  LinearExpr e;
  e.constant = c;
  return e;
}

Rational LinearExpr::coefficient(std::string_view name) const {
  const auto it = coef.find(name);
  return it == coef.end() ? Rational(0) : it->second;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
  for (const auto& [v, c] : o.coef) {
    coef[v] += c;
    if (coef[v] == 0) coef.erase(v);
  }
  constant += o.constant;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
  return *this += Rational(-1) * o;
}

LinearExpr& LinearExpr::operator*=(const Rational& k) {
  if (k == 0) {
    coef.clear();
    constant = 0;
    return *this;
  }
  for (auto& [v, c] : coef) c *= k;
  constant *= k;
  return *this;
}

Rational LinearExpr::evaluate(const std::map<std::string, Rational, std::less<>>& at) const {
  Rational total = constant;
  for (const auto& [v, c] : coef) {
    const auto it = at.find(v);
    if (it == at.end()) throw PreconditionError("linear form: no value for '" + v + "'");
    total += c * it->second;
  }
  return total;
}

std::string LinearExpr::to_string() const {
  std::string out;
  for (const auto& [v, c] : coef) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    if (mag != 1) out += sigcolor::to_string(mag) + "*";
    out += v;
  }
  if (constant != 0 || out.empty()) {
    if (!out.empty()) out += constant < 0 ? " - " : " + ";
    out += sigcolor::to_string(out.empty() ? constant : Rational(abs(constant)));
  }
  return out;
}

LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
LinearExpr operator*(const Rational& k, LinearExpr a) { return a *= k; }

LinearExpr Inequality::normal() const { return lhs - rhs; }

bool Inequality::holds(const std::map<std::string, Rational, std::less<>>& at) const {
  return normal().evaluate(at) >= 0;
}

VariableBound isolate(const Inequality& ineq, std::string_view variable) {
  LinearExpr n = ineq.normal();  // c*x + rest >= 0
  const Rational c = n.coefficient(variable);
  if (c == 0) {
    throw PreconditionError("isolate: '" + std::string(variable) + "' does not occur");
  }
  n.coef.erase(std::string(variable));
  // x >= -rest/c when c > 0, x <= -rest/c when c < 0.
  return {std::string(variable), c > 0, Rational(-1) / c * n};
}

Inequality combine(const VariableBound& upper, const VariableBound& lower) {
  if (upper.lower || !lower.lower || upper.variable != lower.variable) {
    throw PreconditionError("combine: need an upper and a lower bound on one variable");
  }
  return {upper.expr, lower.expr};
}

Rational ratio_threshold(const Inequality& ineq) {
  const LinearExpr n = ineq.normal();
  for (const auto& [v, c] : n.coef) {
    if (v != "p" && v != "q") {
      throw PreconditionError("ratio_threshold: '" + v + "' is still free");
    }
  }
  if (n.constant != 0) throw PreconditionError("ratio_threshold: form is not homogeneous");
  const Rational cp = n.coefficient("p");
  if (cp <= 0) throw PreconditionError("ratio_threshold: p must have a positive coefficient");
  return -n.coefficient("q") / cp;
}

namespace {

LinearExpr P(Rational c = 1) { return LinearExpr::var("p", c); }
LinearExpr Q(Rational c = 1) { return LinearExpr::var("q", c); }

}  // namespace

Rational threshold_83_41() {
  const LinearExpr m = LinearExpr::var("m");
  // m <= p - 3q + 21m, i.e. p - 3q + 21m >= m.
  const Inequality recurrence{P() - Q(3) + Rational(21) * m, m};
  const VariableBound lower = isolate(recurrence, "m");
  // 2p - 4q >= m.
  const VariableBound upper = isolate(Inequality{P(2) - Q(4), m}, "m");
  return ratio_threshold(combine(upper, lower));
}

Rational threshold_172_85() {
  const Inequality ineq{Rational(7) * (P(2) - Q(4)), Rational(1, 6) * (Q(4) - P())};
  return ratio_threshold(ineq);
}

Inequality arboricity_counting_first() {
  const LinearExpr a = LinearExpr::var("a");
  LinearExpr lhs = Rational(2) * a + Rational(4) * (Q() - a) + Rational(4) * (Q() - a) +
                   Rational(5) * (P() - Q(2) + a);
  return {lhs, Q(8)};
}

Inequality arboricity_counting_second() {
  const LinearExpr a = LinearExpr::var("a");
  const LinearExpr auv = LinearExpr::var("a_uv");
  const LinearExpr three_halves_a = Rational(3, 2) * a;
  LinearExpr lhs = Rational(2) * auv + Rational(4) * three_halves_a +
                   Rational(3) * (Q() - auv - three_halves_a) + Rational(4) * (Q() - auv) +
                   Rational(5) * (P() - Q(2) + auv);
  return {lhs, Q(8)};
}

Rational threshold_52_25() {
  const VariableBound upper = isolate(arboricity_counting_first(), "a");
  const VariableBound lower = isolate(arboricity_counting_second(), "a");
  if (upper.lower || !lower.lower || upper.expr.coefficient("a_uv") != 0 ||
      lower.expr.coefficient("a_uv") != 0) {
    throw std::logic_error("counting inequalities lost their expected shape");
  }
  return ratio_threshold(combine(upper, lower));
}

bool arboricity_counting_check(std::int64_t p, std::int64_t q, std::int64_t a,
                               std::int64_t a_uv) {
  const std::map<std::string, Rational, std::less<>> at{
      {"p", Rational(Integer(p))},
      {"q", Rational(Integer(q))},
      {"a", Rational(Integer(a))},
      {"a_uv", Rational(Integer(a_uv))}};
  return arboricity_counting_first().holds(at) && arboricity_counting_second().holds(at);
}

}  // namespace sigcolor
