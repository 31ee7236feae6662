#pragma once

// Small dense exact linear programming over rationals.

#include <cstddef>
#include <vector>

#include "selfcover/rational.hpp"

namespace selfcover {

enum class Sense { LessEq, Equal, GreaterEq };

struct LinearProgram {
  struct Row {
    std::vector<Rational> coeffs;
    Sense sense;
    Rational rhs;
  };

  /// Adds a variable and returns its index. Non-free variables are >= 0.
  std::size_t add_variable(bool free);
  void add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs);
  std::size_t num_variables() const { return free_.size(); }

  std::vector<bool> free_;
  std::vector<Row> rows_;
};

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> x;

  bool optimal() const { return status == Status::Optimal; }
};

/// Two-phase primal simplex with Bland's rule, so the pivot sequence and the
/// returned vertex are deterministic.
LPResult minimize(const LinearProgram& lp, const std::vector<Rational>& cost);

/// Minimizes the objectives in order, fixing each optimum before the next.
LPResult minimize_lex(const LinearProgram& lp, const std::vector<std::vector<Rational>>& costs);

}  // namespace selfcover
