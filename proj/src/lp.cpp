#include "fairdiv/lp.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace fairdiv {

namespace {

enum class VarState { Basic, AtLower, AtUpper };

// Working form: A x = b over structural vars, one slack per LessEq row and
// one artificial per row that needs it. Slacks have no upper bound;
// artificial bounds collapse to [0,0] after phase one.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    n_struct_ = lp.objective.size();
    if (static_cast<Index>(lp.bounds.size()) != n_struct_) {
      throw std::invalid_argument("lp: bounds count must match variable count");
    }
    for (const auto& b : lp.bounds) {
      if (b.lo > b.hi) throw std::invalid_argument("lp: empty variable bound box");
    }
    for (const auto& r : lp.rows) {
      if (r.coeffs.size() != n_struct_) {
        throw std::invalid_argument("lp: row width must match variable count");
      }
    }
    build();
  }

  LpSolution run() {
    // Phase one: maximize -sum(artificials).
    if (!artificials_.empty()) {
      Vec c1 = Vec::Zero(total_);
      for (Index a : artificials_) c1(a) = -1;
      optimize(c1);
      for (Index a : artificials_) {
        if (value_of(a) > 0) return {LpStatus::Infeasible, Vec(), Rational(0)};
        lo_(a) = 0;
        hi_(a) = Rational(0);
        has_hi_[a] = true;
      }
    }

    Vec c2 = Vec::Zero(total_);
    c2.head(n_struct_) = lp_.objective;
    optimize(c2);

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.point.resize(n_struct_);
    for (Index j = 0; j < n_struct_; ++j) sol.point(j) = value_of(j);
    sol.value = lp_.objective.dot(sol.point);
    verify(sol.point);
    return sol;
  }

 private:
  Rational& lo_(Index j) { return lo_v_[j]; }
  Rational& hi_(Index j) { return hi_v_[j]; }

  Rational value_of(Index j) const {
    switch (state_[j]) {
      case VarState::Basic:
        return xb_[row_of_[j]];
      case VarState::AtLower:
        return lo_v_[j];
      case VarState::AtUpper:
        return hi_v_[j];
    }
    return Rational(0);
  }

  void add_var(const Rational& lo, std::optional<Rational> hi) {
    lo_v_.push_back(lo);
    hi_v_.push_back(hi.value_or(Rational(0)));
    has_hi_.push_back(hi.has_value());
    state_.push_back(VarState::AtLower);
    row_of_.push_back(-1);
  }

  void build() {
    const Index n_rows = static_cast<Index>(lp_.rows.size());
    for (Index j = 0; j < n_struct_; ++j) {
      add_var(lp_.bounds[j].lo, lp_.bounds[j].hi);
    }
    std::vector<Index> slack_of(n_rows, -1);
    for (Index r = 0; r < n_rows; ++r) {
      if (lp_.rows[r].rel == Relation::LessEq) {
        slack_of[r] = static_cast<Index>(lo_v_.size());
        add_var(Rational(0), std::nullopt);
      }
    }
    // Residuals at the initial point (structurals at lo, slacks at 0)
    // decide which rows need an artificial.
    std::vector<Rational> residual(n_rows);
    std::vector<Index> art_of(n_rows, -1);
    for (Index r = 0; r < n_rows; ++r) {
      Rational res = lp_.rows[r].rhs;
      for (Index j = 0; j < n_struct_; ++j) res -= lp_.rows[r].coeffs(j) * lo_v_[j];
      residual[r] = res;
      bool needs_art = lp_.rows[r].rel == Relation::Equal || res < 0;
      if (needs_art) {
        art_of[r] = static_cast<Index>(lo_v_.size());
        artificials_.push_back(art_of[r]);
        add_var(Rational(0), std::nullopt);
      }
    }

    total_ = static_cast<Index>(lo_v_.size());
    tab_ = Mat::Zero(n_rows, total_ + 1);
    basis_.resize(n_rows);
    xb_.resize(n_rows);
    for (Index r = 0; r < n_rows; ++r) {
      tab_.row(r).head(n_struct_) = lp_.rows[r].coeffs.transpose();
      if (slack_of[r] >= 0) tab_(r, slack_of[r]) = 1;
      tab_(r, total_) = lp_.rows[r].rhs;
      if (art_of[r] >= 0) {
        // Sign keeps the basic artificial value non-negative.
        tab_(r, art_of[r]) = residual[r] < 0 ? Rational(-1) : Rational(1);
        set_basic(art_of[r], r, residual[r] < 0 ? -residual[r] : residual[r]);
      } else {
        set_basic(slack_of[r], r, residual[r]);
      }
    }
    // Normalize rows so basic columns carry coefficient +1.
    for (Index r = 0; r < n_rows; ++r) {
      if (tab_(r, basis_[r]) == -1) tab_.row(r) = -tab_.row(r);
    }
  }

  void set_basic(Index j, Index r, Rational value) {
    basis_[r] = j;
    row_of_[j] = r;
    state_[j] = VarState::Basic;
    xb_[r] = std::move(value);
  }

  // One full Bland-rule optimization over the current basis.
  void optimize(const Vec& cost) {
    const Index n_rows = tab_.rows();
    for (;;) {
      // Multipliers y = c_B (basic components), reduced cost d_j = c_j - y . col_j.
      Index entering = -1;
      int dir = 0;
      for (Index j = 0; j < total_ && entering < 0; ++j) {
        if (state_[j] == VarState::Basic) continue;
        if (lo_v_[j] == hi_v_[j] && has_hi_[j]) continue;  // fixed
        Rational d = cost(j);
        for (Index r = 0; r < n_rows; ++r) {
          if (cost(basis_[r]) != 0 && tab_(r, j) != 0) d -= cost(basis_[r]) * tab_(r, j);
        }
        if (state_[j] == VarState::AtLower && d > 0) {
          entering = j;
          dir = 1;
        } else if (state_[j] == VarState::AtUpper && d < 0) {
          entering = j;
          dir = -1;
        }
      }
      if (entering < 0) return;  // optimal for this phase

      // Ratio test: smallest step before any basic variable (or the
      // entering variable itself) hits a bound.
      std::optional<Rational> best_t;
      Index leave_row = -1;
      Index leave_var = -1;
      bool leave_at_upper = false;
      if (has_hi_[entering]) {
        best_t = hi_v_[entering] - lo_v_[entering];
        leave_var = entering;
      }
      for (Index r = 0; r < n_rows; ++r) {
        Rational rate = -tab_(r, entering) * dir;  // d x_B(r) / dt
        if (rate == 0) continue;
        Index bv = basis_[r];
        std::optional<Rational> t;
        bool at_upper = false;
        if (rate > 0) {
          if (has_hi_[bv]) {
            t = (hi_v_[bv] - xb_[r]) / rate;
            at_upper = true;
          }
        } else {
          t = (xb_[r] - lo_v_[bv]) / (-rate);
        }
        if (!t) continue;
        if (!best_t || *t < *best_t || (*t == *best_t && bv < leave_var)) {
          best_t = *t;
          leave_row = r;
          leave_var = bv;
          leave_at_upper = at_upper;
        }
      }
      if (!best_t) {
        throw std::logic_error("lp: unbounded direction; inputs violate the finite-box contract");
      }

      Rational delta = *best_t * dir;
      for (Index r = 0; r < n_rows; ++r) {
        if (tab_(r, entering) != 0) xb_[r] -= tab_(r, entering) * delta;
      }

      if (leave_var == entering) {
        // Bound flip, basis unchanged.
        state_[entering] =
            state_[entering] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      Rational entering_value =
          (state_[entering] == VarState::AtLower ? lo_v_[entering] : hi_v_[entering]) + delta;
      state_[leave_var] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
      row_of_[leave_var] = -1;

      Rational piv = tab_(leave_row, entering);
      tab_.row(leave_row) /= piv;
      for (Index r = 0; r < n_rows; ++r) {
        if (r != leave_row && tab_(r, entering) != 0) {
          tab_.row(r) -= tab_(r, entering) * tab_.row(leave_row);
        }
      }
      set_basic(entering, leave_row, std::move(entering_value));
    }
  }

  // Exact substitution check of the reported point.
  void verify(const Vec& point) const {
    for (Index j = 0; j < n_struct_; ++j) {
      if (point(j) < lp_.bounds[j].lo || point(j) > lp_.bounds[j].hi) {
        throw std::logic_error("lp: solution violates variable bounds");
      }
    }
    for (const auto& row : lp_.rows) {
      Rational lhs = row.coeffs.dot(point);
      bool ok = row.rel == Relation::Equal ? lhs == row.rhs : lhs <= row.rhs;
      if (!ok) throw std::logic_error("lp: solution violates a constraint row");
    }
  }

  const LinearProgram& lp_;
  Index n_struct_ = 0;
  Index total_ = 0;
  Mat tab_;                       // n_rows x (total_ + 1)
  std::vector<Index> basis_;      // basic variable per row
  std::vector<Rational> xb_;      // basic variable values per row
  std::vector<Rational> lo_v_, hi_v_;
  std::vector<bool> has_hi_;
  std::vector<VarState> state_;
  std::vector<Index> row_of_;
  std::vector<Index> artificials_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) { return Simplex(lp).run(); }

LpSolution solve_feasibility(const std::vector<ConstraintRow>& rows,
                             const std::vector<VariableBounds>& bounds) {
  LinearProgram lp;
  lp.objective = Vec::Zero(static_cast<Index>(bounds.size()));
  lp.rows = rows;
  lp.bounds = bounds;
  return solve(lp);
}

}  // namespace fairdiv
