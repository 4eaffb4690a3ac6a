#include "abconv/core/lp.hpp"

#include <optional>

#include "abconv/core/affine.hpp"

namespace abconv {

LinearProgram::LinearProgram(Index num_vars)
    : num_vars_(num_vars), objective_(zeros(num_vars)), nonneg_(static_cast<std::size_t>(num_vars), false) {}

void LinearProgram::set_objective(Vec c, Sense sense) {
  if (c.size() != num_vars_) throw DimensionError("objective length does not match the number of variables");
  objective_ = std::move(c);
  sense_ = sense;
}

void LinearProgram::add_constraint(Vec coeffs, Relation relation, Rational rhs) {
  if (coeffs.size() != num_vars_) throw DimensionError("constraint length does not match the number of variables");
  constraints_.push_back({std::move(coeffs), relation, std::move(rhs)});
}

void LinearProgram::set_nonnegative(Index var, bool value) {
  if (var < 0 || var >= num_vars_) throw DimensionError("variable index out of range");
  nonneg_[static_cast<std::size_t>(var)] = value;
}

void LinearProgram::set_all_nonnegative(Index first, Index count) {
  for (Index k = first; k < first + count; ++k) set_nonnegative(k);
}

namespace {

using Row = std::vector<Rational>;

class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) { build(); }

  LPResult solve() {
    LPResult result;
    const Index n = lp_.num_vars();

    phase_one_costs();
    run([this](Index col) { return col < num_cols_; });
    if (rhs(cost_row()) != 0) {
      // Phase-one optimum is -rhs of the cost row; it is positive here.
      result.status = LPStatus::Infeasible;
      result.farkas = zeros(m_);
      for (Index i = 0; i < m_; ++i) {
        const Rational y = 1 - t_[cost_row()][static_cast<std::size_t>(art_col(i))];
        result.farkas(i) = flip_[static_cast<std::size_t>(i)] * -y;
      }
      return result;
    }
    drive_out_artificials();

    const bool maximize = lp_.sense() == Sense::Maximize;
    if (lp_.sense() == Sense::Feasibility) {
      result.status = LPStatus::Optimal;
      result.point = current_point();
      result.value = 0;
      result.dual = zeros(m_);
      return result;
    }

    phase_two_costs(maximize);
    const std::optional<Index> unbounded_col = run([this](Index col) { return col < art_begin_; });
    result.point = current_point();
    if (unbounded_col) {
      result.status = LPStatus::Unbounded;
      Row direction(static_cast<std::size_t>(num_cols_), Rational(0));
      direction[static_cast<std::size_t>(*unbounded_col)] = 1;
      for (std::size_t r = 0; r < basis_.size(); ++r) {
        direction[static_cast<std::size_t>(basis_[r])] = -t_[r][static_cast<std::size_t>(*unbounded_col)];
      }
      result.ray = to_original(direction);
      return result;
    }
    result.status = LPStatus::Optimal;
    result.value = pairing(lp_.objective(), result.point);
    result.dual = zeros(m_);
    for (Index i = 0; i < m_; ++i) {
      const Rational y = -t_[cost_row()][static_cast<std::size_t>(art_col(i))];
      result.dual(i) = maximize ? Rational(-flip_[static_cast<std::size_t>(i)] * y)
                                : Rational(flip_[static_cast<std::size_t>(i)] * y);
    }
    (void)n;
    return result;
  }

 private:
  void build() {
    const Index n = lp_.num_vars();
    const auto& cons = lp_.constraints();
    m_ = static_cast<Index>(cons.size());

    Index col = 0;
    plus_col_.resize(static_cast<std::size_t>(n));
    minus_col_.resize(static_cast<std::size_t>(n));
    for (Index k = 0; k < n; ++k) {
      plus_col_[static_cast<std::size_t>(k)] = col++;
      minus_col_[static_cast<std::size_t>(k)] = lp_.nonnegative()[static_cast<std::size_t>(k)] ? -1 : col++;
    }
    std::vector<Index> slack(static_cast<std::size_t>(m_), -1);
    for (Index i = 0; i < m_; ++i) {
      if (cons[static_cast<std::size_t>(i)].relation != Relation::Equal) slack[static_cast<std::size_t>(i)] = col++;
    }
    art_begin_ = col;
    num_cols_ = col + m_;

    t_.assign(static_cast<std::size_t>(m_ + 1), Row(static_cast<std::size_t>(num_cols_ + 1), Rational(0)));
    flip_.assign(static_cast<std::size_t>(m_), 1);
    basis_.resize(static_cast<std::size_t>(m_));
    for (Index i = 0; i < m_; ++i) {
      const LinearConstraint& c = cons[static_cast<std::size_t>(i)];
      const int s = c.rhs < 0 ? -1 : 1;
      flip_[static_cast<std::size_t>(i)] = s;
      Row& row = t_[static_cast<std::size_t>(i)];
      for (Index k = 0; k < n; ++k) {
        if (c.coeffs(k) == 0) continue;
        const Rational a = s * c.coeffs(k);
        row[static_cast<std::size_t>(plus_col_[static_cast<std::size_t>(k)])] = a;
        if (minus_col_[static_cast<std::size_t>(k)] >= 0) row[static_cast<std::size_t>(minus_col_[static_cast<std::size_t>(k)])] = -a;
      }
      if (slack[static_cast<std::size_t>(i)] >= 0) {
        row[static_cast<std::size_t>(slack[static_cast<std::size_t>(i)])] = c.relation == Relation::LessEqual ? s : -s;
      }
      row[static_cast<std::size_t>(art_col(i))] = 1;
      row[static_cast<std::size_t>(num_cols_)] = s * c.rhs;
      basis_[static_cast<std::size_t>(i)] = art_col(i);
    }
  }

  Index art_col(Index row) const { return art_begin_ + row; }
  std::size_t cost_row() const { return t_.size() - 1; }
  const Rational& rhs(std::size_t row) const { return t_[row][static_cast<std::size_t>(num_cols_)]; }

  void set_costs(const Row& costs) {
    Row& cr = t_[cost_row()];
    cr = costs;
    cr.push_back(Rational(0));
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const Rational& cb = costs[static_cast<std::size_t>(basis_[r])];
      if (cb == 0) continue;
      const Row& row = t_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) cr[j] -= cb * row[j];
      }
    }
  }

  void phase_one_costs() {
    Row costs(static_cast<std::size_t>(num_cols_), Rational(0));
    for (Index i = 0; i < m_; ++i) costs[static_cast<std::size_t>(art_col(i))] = 1;
    set_costs(costs);
  }

  void phase_two_costs(bool maximize) {
    Row costs(static_cast<std::size_t>(num_cols_), Rational(0));
    for (Index k = 0; k < lp_.num_vars(); ++k) {
      const Rational c = maximize ? Rational(-lp_.objective()(k)) : lp_.objective()(k);
      costs[static_cast<std::size_t>(plus_col_[static_cast<std::size_t>(k)])] = c;
      if (minus_col_[static_cast<std::size_t>(k)] >= 0) costs[static_cast<std::size_t>(minus_col_[static_cast<std::size_t>(k)])] = -c;
    }
    set_costs(costs);
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    Row& p = t_[prow];
    const Rational inv = 1 / p[pcol];
    for (auto& v : p) {
      if (v != 0) v *= inv;
    }
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == prow) continue;
      Row& row = t_[r];
      if (row[pcol] == 0) continue;
      const Rational factor = row[pcol];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (p[j] != 0) row[j] -= factor * p[j];
      }
    }
    basis_[prow] = static_cast<Index>(pcol);
  }

  /// Runs Bland pivots until optimal; returns the entering column if an
  /// unbounded ray is detected.
  template <typename Allowed>
  std::optional<Index> run(Allowed allowed) {
    for (;;) {
      const Row& cr = t_[cost_row()];
      Index enter = -1;
      for (Index j = 0; j < num_cols_; ++j) {
        if (allowed(j) && cr[static_cast<std::size_t>(j)] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return std::nullopt;
      const auto ej = static_cast<std::size_t>(enter);
      std::optional<std::size_t> leave;
      Rational best_ratio;
      for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rational& a = t_[r][ej];
        if (a <= 0) continue;
        const Rational ratio = rhs(r) / a;
        if (!leave || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[*leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, ej);
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < basis_.size();) {
      if (basis_[r] < art_begin_) {
        ++r;
        continue;
      }
      Index pick = -1;
      for (Index j = 0; j < art_begin_; ++j) {
        if (t_[r][static_cast<std::size_t>(j)] != 0) {
          pick = j;
          break;
        }
      }
      if (pick >= 0) {
        pivot(r, static_cast<std::size_t>(pick));
        ++r;
      } else {
        // Redundant row: drop it.
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  Vec to_original(const Row& values) const {
    Vec x = zeros(lp_.num_vars());
    for (Index k = 0; k < lp_.num_vars(); ++k) {
      x(k) = values[static_cast<std::size_t>(plus_col_[static_cast<std::size_t>(k)])];
      if (minus_col_[static_cast<std::size_t>(k)] >= 0) x(k) -= values[static_cast<std::size_t>(minus_col_[static_cast<std::size_t>(k)])];
    }
    return x;
  }

  Vec current_point() const {
    Row values(static_cast<std::size_t>(num_cols_), Rational(0));
    for (std::size_t r = 0; r < basis_.size(); ++r) values[static_cast<std::size_t>(basis_[r])] = rhs(r);
    return to_original(values);
  }

  const LinearProgram& lp_;
  Index m_ = 0;
  Index art_begin_ = 0;
  Index num_cols_ = 0;
  std::vector<Index> plus_col_;
  std::vector<Index> minus_col_;
  std::vector<int> flip_;
  std::vector<Row> t_;
  std::vector<Index> basis_;
};

}  // namespace

LPResult lp_solve(const LinearProgram& lp, const LPOptions& options) {
  LPResult result = Simplex(lp).solve();
  if (!options.lexmin_tie_break || result.status != LPStatus::Optimal || lp.sense() == Sense::Feasibility) {
    return result;
  }
  LinearProgram face = lp;
  face.add_eq(lp.objective(), result.value);
  std::vector<Index> coords(static_cast<std::size_t>(lp.num_vars()));
  for (Index k = 0; k < lp.num_vars(); ++k) coords[static_cast<std::size_t>(k)] = k;
  const LPResult tie = lp_lexmin(face, coords);
  result.point = tie.point;
  return result;
}

LPResult lp_lexmin(const LinearProgram& lp, std::span<const Index> coords) {
  LinearProgram current = lp;
  current.set_objective(zeros(lp.num_vars()), Sense::Feasibility);
  LPResult last = lp_solve(current, {false});
  if (!last.feasible()) return last;
  for (Index k : coords) {
    current.set_objective(unit(lp.num_vars(), k), Sense::Minimize);
    const LPResult step = lp_solve(current, {false});
    if (step.status != LPStatus::Optimal) continue;
    current.add_eq(unit(lp.num_vars(), k), step.value);
    last = step;
  }
  last.status = LPStatus::Optimal;
  return last;
}

bool verify_farkas(const LinearProgram& lp, const Vec& farkas) {
  const auto& cons = lp.constraints();
  if (farkas.size() != static_cast<Index>(cons.size())) return false;
  Vec combo = zeros(lp.num_vars());
  Rational rhs = 0;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Rational& y = farkas(static_cast<Index>(i));
    if (cons[i].relation == Relation::LessEqual && y < 0) return false;
    if (cons[i].relation == Relation::GreaterEqual && y > 0) return false;
    if (y == 0) continue;
    for (Index k = 0; k < combo.size(); ++k) combo(k) += y * cons[i].coeffs(k);
    rhs += y * cons[i].rhs;
  }
  for (Index k = 0; k < combo.size(); ++k) {
    const bool nonneg = lp.nonnegative()[static_cast<std::size_t>(k)];
    if (nonneg ? combo(k) < 0 : combo(k) != 0) return false;
  }
  return rhs < 0;
}

}  // namespace abconv
