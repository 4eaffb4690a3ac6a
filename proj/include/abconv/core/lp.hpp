#pragma once

#include <span>
#include <vector>

#include "abconv/core/linalg.hpp"

namespace abconv {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize, Feasibility };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  Vec coeffs;
  Relation relation;
  Rational rhs;
};

/// A linear program over exact rationals. Variables are free unless marked
/// nonnegative.
class LinearProgram {
 public:
  explicit LinearProgram(Index num_vars);

  Index num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }
  const Vec& objective() const { return objective_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  const std::vector<bool>& nonnegative() const { return nonneg_; }

  void set_objective(Vec c, Sense sense);
  void add_constraint(Vec coeffs, Relation relation, Rational rhs);
  void add_le(Vec coeffs, Rational rhs) { add_constraint(std::move(coeffs), Relation::LessEqual, std::move(rhs)); }
  void add_ge(Vec coeffs, Rational rhs) { add_constraint(std::move(coeffs), Relation::GreaterEqual, std::move(rhs)); }
  void add_eq(Vec coeffs, Rational rhs) { add_constraint(std::move(coeffs), Relation::Equal, std::move(rhs)); }
  void set_nonnegative(Index var, bool value = true);
  void set_all_nonnegative(Index first, Index count);

 private:
  Index num_vars_;
  Vec objective_;
  Sense sense_ = Sense::Feasibility;
  std::vector<LinearConstraint> constraints_;
  std::vector<bool> nonneg_;
};

struct LPOptions {
  /// Among optimal points, return the lexicographically smallest one
  /// (coordinates minimized in order; coordinates unbounded on the optimal
  /// face are left as found).
  bool lexmin_tie_break = true;
};

/// Result of lp_solve.
///
/// - Optimal: `point`, `value`, and `dual` with value = sum_i dual_i * rhs_i.
///   For Feasibility problems `value` is 0.
/// - Infeasible: `farkas` with farkas_i >= 0 on <= rows, <= 0 on >= rows, free
///   on = rows, such that sum_i farkas_i * a_i is 0 on free variables and >= 0
///   on nonnegative ones while sum_i farkas_i * rhs_i < 0.
/// - Unbounded: `point` feasible and `ray` a recession direction along which
///   the objective improves without bound.
struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vec point;
  Rational value{0};
  Vec dual;
  Vec farkas;
  Vec ray;

  bool optimal() const { return status == LPStatus::Optimal; }
  bool feasible() const { return status != LPStatus::Infeasible; }
};

/// Two-phase primal simplex with Bland's rule (smallest-index entering and
/// leaving variables). Deterministic for identical input.
LPResult lp_solve(const LinearProgram& lp, const LPOptions& options = {});

/// Sequentially minimizes `coords` over the feasible set of `lp`, fixing each
/// bounded coordinate at its minimum. The objective of `lp` is ignored.
LPResult lp_lexmin(const LinearProgram& lp, std::span<const Index> coords);

/// Checks a Farkas certificate against the program it claims to refute.
bool verify_farkas(const LinearProgram& lp, const Vec& farkas);

}  // namespace abconv
