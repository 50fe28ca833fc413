#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "sigcolor/rational.hpp"

namespace sigcolor {

/// A (p, q) pair with 2q <= p <= ceil(5q/2).
class BoundParams {
 public:
  /// Throws PreconditionError outside the range.
  BoundParams(std::int64_t p, std::int64_t q);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// 2p - 4q: at most this many colors miss a negative face.
Integer m_upper_bound(const BoundParams& bp);

/// Closed form 21^i (41p - 83q)/20 - (p - 3q)/20.
Rational mu_bound(const BoundParams& bp, unsigned i);
/// mu_0 = 2p - 4q, mu_{i+1} = p - 3q + 21 mu_i.
Rational mu_bound_recurrence(const BoundParams& bp, unsigned i);

/// Least i with mu_i < 0, or nullopt when mu_i >= 0 for every i.
std::optional<unsigned> first_infeasible_index(const BoundParams& bp);

// --- Linear inequalities over named variables ------------------------------

/// sum coef[v] * v + constant.
struct LinearExpr {
  std::map<std::string, Rational, std::less<>> coef;
  Rational constant = 0;

  static LinearExpr var(std::string_view name, Rational c = 1);
  static LinearExpr num(Rational c);

  Rational coefficient(std::string_view name) const;
  LinearExpr& operator+=(const LinearExpr& o);
  LinearExpr& operator-=(const LinearExpr& o);
  LinearExpr& operator*=(const Rational& k);
  /// Exact value; throws PreconditionError if a variable is unbound.
  Rational evaluate(const std::map<std::string, Rational, std::less<>>& at) const;
  std::string to_string() const;
};

LinearExpr operator+(LinearExpr a, const LinearExpr& b);
LinearExpr operator-(LinearExpr a, const LinearExpr& b);
LinearExpr operator*(const Rational& k, LinearExpr a);

/// lhs >= rhs.
struct Inequality {
  LinearExpr lhs;
  LinearExpr rhs;

  /// lhs - rhs, so the inequality reads normal() >= 0.
  LinearExpr normal() const;
  bool holds(const std::map<std::string, Rational, std::less<>>& at) const;
};

/// var >= expr (lower) or var <= expr (upper), expr free of var.
struct VariableBound {
  std::string variable;
  bool lower = true;
  LinearExpr expr;
};

/// Solves the inequality for `variable`; throws if it does not occur.
VariableBound isolate(const Inequality& ineq, std::string_view variable);

/// Eliminates the variable shared by an upper and a lower bound:
/// upper.expr >= lower.expr.
Inequality combine(const VariableBound& upper, const VariableBound& lower);

/// For c_p p + c_q q >= 0 with c_p > 0: the least admissible ratio p/q.
Rational ratio_threshold(const Inequality& ineq);

// --- The three thresholds ---------------------------------------------------

/// m <= p - 3q + 21m solved for m, combined with m <= 2p - 4q.
Rational threshold_83_41();
/// 7(2p - 4q) >= (4q - p)/6.
Rational threshold_172_85();
/// a <= 5p - 10q and a >= (22q - 10p)/3, both derived from the two
/// counting inequalities on the wheel.
Rational threshold_52_25();

/// 2a + 4(q-a) + 4(q-a) + 5(p-2q+a) >= 8q.
Inequality arboricity_counting_first();
/// 2a_uv + 4(3a/2) + 3(q - a_uv - 3a/2) + 4(q - a_uv) + 5(p - 2q + a_uv) >= 8q.
Inequality arboricity_counting_second();

/// Both counting inequalities at the given values.
bool arboricity_counting_check(std::int64_t p, std::int64_t q, std::int64_t a,
                               std::int64_t a_uv);

}  // namespace sigcolor
