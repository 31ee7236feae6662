#include "selfcover/lp.hpp"

#include <optional>
#include <stdexcept>

namespace selfcover {

std::size_t LinearProgram::add_variable(bool free) {
  free_.push_back(free);
  for (auto& r : rows_) r.coeffs.resize(free_.size());
  return free_.size() - 1;
}

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense sense, Rational rhs) {
  if (coeffs.size() > free_.size()) throw std::invalid_argument("LP row has too many coefficients");
  coeffs.resize(free_.size());
  rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

namespace {

// Tableau in equality form A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : a_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t r, std::size_t c) { return a_[r][c]; }
  Rational& rhs(std::size_t r) { return a_[r].back(); }
  std::size_t rows() const { return a_.size(); }
  std::size_t cols() const { return a_.empty() ? 0 : a_[0].size() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c, std::vector<Rational>& obj) {
    auto& pr = a_[r];
    const Rational inv = 1 / pr[c];
    for (auto& v : pr) v *= inv;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      eliminate(a_[i], pr, c);
    }
    if (sgn(obj[c]) != 0) eliminate(obj, pr, c);
    basis_[r] = c;
  }

  void remove_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Runs simplex on obj (reduced costs, last entry = -objective value) over
  // columns [0, allowed). Returns false when unbounded.
  bool run(std::vector<Rational>& obj, std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (sgn(obj[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < a_.size(); ++r) {
        if (sgn(a_[r][*enter]) <= 0) continue;
        Rational ratio = a_[r].back() / a_[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter, obj);
    }
  }

 private:
  static void eliminate(std::vector<Rational>& row, const std::vector<Rational>& pr, std::size_t c) {
    const Rational f = row[c];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
    }
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPResult minimize(const LinearProgram& lp, const std::vector<Rational>& cost) {
  const std::size_t nv = lp.num_variables();
  // Column layout: structural (free vars split into +/-), slacks, artificials.
  std::vector<std::size_t> pos(nv), neg(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    pos[v] = ncols++;
    if (lp.free_[v]) neg[v] = ncols++;
  }
  const std::size_t structural = ncols;
  const std::size_t m = lp.rows_.size();
  std::vector<int> flip(m, 1);
  std::vector<Sense> sense(m);
  std::size_t nslack = 0;
  for (std::size_t r = 0; r < m; ++r) {
    sense[r] = lp.rows_[r].sense;
    if (sgn(lp.rows_[r].rhs) < 0) {
      flip[r] = -1;
      if (sense[r] == Sense::LessEq) sense[r] = Sense::GreaterEq;
      else if (sense[r] == Sense::GreaterEq) sense[r] = Sense::LessEq;
    }
    if (sense[r] != Sense::Equal) ++nslack;
  }
  std::size_t nart = 0;
  for (std::size_t r = 0; r < m; ++r)
    if (sense[r] != Sense::LessEq) ++nart;
  const std::size_t art0 = structural + nslack;
  Tableau tab(m, art0 + nart);
  std::size_t slack = structural, art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = lp.rows_[r];
    for (std::size_t v = 0; v < nv; ++v) {
      if (sgn(row.coeffs[v]) == 0) continue;
      Rational c = flip[r] * row.coeffs[v];
      tab.at(r, pos[v]) = c;
      if (neg[v] != SIZE_MAX) tab.at(r, neg[v]) = -c;
    }
    tab.rhs(r) = flip[r] * row.rhs;
    if (sense[r] == Sense::LessEq) {
      tab.at(r, slack) = 1;
      tab.basis()[r] = slack++;
    } else {
      if (sense[r] == Sense::GreaterEq) tab.at(r, slack++) = -1;
      tab.at(r, art) = 1;
      tab.basis()[r] = art++;
    }
  }

  LPResult result;
  const std::size_t total = art0 + nart;
  if (nart > 0) {
    std::vector<Rational> obj(total + 1);
    for (std::size_t c = art0; c < total; ++c) obj[c] = 1;
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basis()[r] < art0) continue;
      for (std::size_t c = 0; c <= total; ++c) obj[c] -= (c == total ? tab.rhs(r) : tab.at(r, c));
    }
    tab.run(obj, total);
    if (sgn(obj[total]) != 0) {
      result.status = LPResult::Status::Infeasible;
      return result;
    }
    // Drive remaining artificials out of the basis or drop redundant rows.
    std::vector<Rational> dummy(total + 1);
    for (std::size_t r = tab.rows(); r-- > 0;) {
      if (tab.basis()[r] < art0) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < art0; ++c) {
        if (sgn(tab.at(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col) tab.pivot(r, *col, dummy);
      else tab.remove_row(r);
    }
  }

  std::vector<Rational> obj(total + 1);
  for (std::size_t v = 0; v < nv && v < cost.size(); ++v) {
    obj[pos[v]] = cost[v];
    if (neg[v] != SIZE_MAX) obj[neg[v]] = -cost[v];
  }
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    const std::size_t b = tab.basis()[r];
    if (sgn(obj[b]) == 0) continue;
    const Rational f = obj[b];
    for (std::size_t c = 0; c <= total; ++c) obj[c] -= f * (c == total ? tab.rhs(r) : tab.at(r, c));
  }
  if (!tab.run(obj, art0)) {
    result.status = LPResult::Status::Unbounded;
    return result;
  }
  std::vector<Rational> col_value(total);
  for (std::size_t r = 0; r < tab.rows(); ++r) col_value[tab.basis()[r]] = tab.rhs(r);
  result.x.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    result.x[v] = col_value[pos[v]];
    if (neg[v] != SIZE_MAX) result.x[v] -= col_value[neg[v]];
  }
  result.objective = -obj[total];
  result.status = LPResult::Status::Optimal;
  return result;
}

LPResult minimize_lex(const LinearProgram& lp, const std::vector<std::vector<Rational>>& costs) {
  LinearProgram work = lp;
  LPResult last;
  last.status = LPResult::Status::Optimal;
  for (const auto& c : costs) {
    last = minimize(work, c);
    if (!last.optimal()) return last;
    work.add_row(c, Sense::Equal, last.objective);
  }
  if (costs.empty()) last = minimize(work, {});
  return last;
}

}  // namespace selfcover
