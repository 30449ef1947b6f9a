#include "wonder/feasibility.hpp"

#include <stdexcept>

namespace wonder {

namespace {

// Dense exact simplex on the tableau [A | b] with objective z. Bland's rule
// on both phases, so no cycling.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
      : a_(std::move(a)), b_(std::move(b)) {
    m_ = a_.size();
    n_ = m_ ? a_[0].size() : 0;
    for (size_t i = 0; i < m_; ++i)
      if (b_[i].is_negative()) {
        for (auto& x : a_[i]) x = -x;
        b_[i] = -b_[i];
      }
    basis_.assign(m_, -1);
  }

  // phase 1: artificial variables, minimize their sum
  bool find_feasible_basis() {
    std::vector<Rational> cost(n_ + m_, Rational(0));
    for (size_t i = 0; i < m_; ++i) cost[n_ + i] = Rational(-1);
    for (size_t i = 0; i < m_; ++i) {
      a_[i].resize(n_ + m_, Rational(0));
      a_[i][n_ + i] = Rational(1);
      basis_[i] = (int)(n_ + i);
    }
    run(cost);
    Rational z = objective(cost);
    if (!z.is_zero()) return false;
    // drive remaining artificials out of the basis
    for (size_t i = 0; i < m_; ++i) {
      if (basis_[i] < (int)n_) continue;
      size_t piv = n_;
      for (size_t j = 0; j < n_; ++j)
        if (!a_[i][j].is_zero()) { piv = j; break; }
      if (piv == n_) { basis_[i] = -2; continue; }  // redundant row
      pivot(i, piv);
    }
    for (auto& row : a_) row.resize(n_);
    return true;
  }

  void optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> c(cost);
    c.resize(n_, Rational(0));
    run(c);
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational z(0);
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < (int)cost.size()) z += cost[basis_[i]] * b_[i];
    return z;
  }

  std::vector<Rational> solution(size_t nvars) const {
    std::vector<Rational> x(nvars, Rational(0));
    for (size_t i = 0; i < m_; ++i)
      if (basis_[i] >= 0 && basis_[i] < (int)nvars) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  void run(const std::vector<Rational>& cost) {
    size_t width = a_.empty() ? 0 : a_[0].size();
    while (true) {
      // reduced costs: cost_j - cost_B . column_j
      int enter = -1;
      for (size_t j = 0; j < width && enter < 0; ++j) {
        bool basic = false;
        for (size_t i = 0; i < m_; ++i) basic = basic || basis_[i] == (int)j;
        if (basic) continue;
        Rational rc = j < cost.size() ? cost[j] : Rational(0);
        for (size_t i = 0; i < m_; ++i)
          if (basis_[i] >= 0 && basis_[i] < (int)cost.size())
            rc -= cost[basis_[i]] * a_[i][j];
        if (rc.is_positive()) enter = (int)j;  // Bland: first improving index
      }
      if (enter < 0) return;
      int leave = -1;
      Rational best;
      for (size_t i = 0; i < m_; ++i) {
        if (!a_[i][enter].is_positive()) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = (int)i;
          best = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("unbounded LP in a normalized problem");
      pivot(leave, enter);
    }
  }

  void pivot(size_t row, size_t col) {
    Rational p = a_[row][col];
    for (auto& x : a_[row]) x /= p;
    b_[row] /= p;
    for (size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col].is_zero()) continue;
      Rational f = a_[i][col];
      for (size_t j = 0; j < a_[i].size(); ++j) a_[i][j] -= f * a_[row][j];
      b_[i] -= f * b_[row];
    }
    basis_[row] = (int)col;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<int> basis_;
  size_t m_ = 0, n_ = 0;
};

}  // namespace

LpResult lp_maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  LpResult res;
  if (a.empty()) {
    res.feasible = true;
    res.objective = Rational(0);
    res.solution.assign(c.size(), Rational(0));
    return res;
  }
  Tableau t(a, b);
  if (!t.find_feasible_basis()) return res;
  res.feasible = true;
  t.optimize(c);
  res.objective = t.objective(c);
  res.solution = t.solution(c.size());
  return res;
}

std::optional<std::vector<Rational>> positive_combination_certificate(
    const std::vector<std::vector<int>>& rows, int ncols) {
  const size_t k = rows.size();
  if (k == 0) return std::vector<Rational>{};  // vacuously distinguished

  // variables: a_1..a_k, t, s_1..s_ncols, u_1..u_k
  const size_t nt = k, tvar = k;
  const size_t nvars = k + 1 + ncols + k;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  {  // sum a = 1
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t d = 0; d < k; ++d) row[d] = Rational(1);
    a.push_back(row);
    b.push_back(Rational(1));
  }
  for (int j = 0; j < ncols; ++j) {  // sum_d a_d rows[d][j] - s_j = 0
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t d = 0; d < k; ++d) row[d] = Rational(rows[d][j]);
    row[tvar + 1 + j] = Rational(-1);
    a.push_back(row);
    b.push_back(Rational(0));
  }
  for (size_t d = 0; d < k; ++d) {  // a_d - t - u_d = 0
    std::vector<Rational> row(nvars, Rational(0));
    row[d] = Rational(1);
    row[tvar] = Rational(-1);
    row[tvar + 1 + ncols + d] = Rational(-1);
    a.push_back(row);
    b.push_back(Rational(0));
  }
  std::vector<Rational> cost(nvars, Rational(0));
  cost[tvar] = Rational(1);

  LpResult r = lp_maximize(a, b, cost);
  if (!r.feasible || !r.objective.is_positive()) return std::nullopt;

  std::vector<Rational> cert(r.solution.begin(), r.solution.begin() + nt);
  // exact verification of the certificate before handing it out
  for (const auto& x : cert)
    if (!x.is_positive()) throw std::logic_error("certificate not strictly positive");
  for (int j = 0; j < ncols; ++j) {
    Rational s(0);
    for (size_t d = 0; d < k; ++d) s += cert[d] * Rational(rows[d][j]);
    if (s.is_negative()) throw std::logic_error("certificate fails a column");
  }
  return cert;
}

std::optional<std::vector<Rational>> strict_positive_image_certificate(
    const std::vector<std::vector<int>>& rows, int ncols) {
  const size_t m = rows.size();
  if (m == 0) return std::vector<Rational>(ncols, Rational(0));
  if (ncols == 0) return std::nullopt;

  // variables: n_1..n_r, t, v_1..v_m, w
  const size_t r = ncols, tvar = r;
  const size_t nvars = r + 1 + m + 1;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  {  // sum n + w = 1
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t j = 0; j < r; ++j) row[j] = Rational(1);
    row[nvars - 1] = Rational(1);
    a.push_back(row);
    b.push_back(Rational(1));
  }
  for (size_t d = 0; d < m; ++d) {  // rows[d].n - t - v_d = 0
    std::vector<Rational> row(nvars, Rational(0));
    for (size_t j = 0; j < r; ++j) row[j] = Rational(rows[d][j]);
    row[tvar] = Rational(-1);
    row[tvar + 1 + d] = Rational(-1);
    a.push_back(row);
    b.push_back(Rational(0));
  }
  std::vector<Rational> cost(nvars, Rational(0));
  cost[tvar] = Rational(1);

  LpResult res = lp_maximize(a, b, cost);
  if (!res.feasible || !res.objective.is_positive()) return std::nullopt;
  std::vector<Rational> cert(res.solution.begin(), res.solution.begin() + r);
  for (size_t d = 0; d < m; ++d) {
    Rational s(0);
    for (size_t j = 0; j < r; ++j) s += cert[j] * Rational(rows[d][j]);
    if (!s.is_positive()) throw std::logic_error("reductive certificate fails a row");
  }
  return cert;
}

}  // namespace wonder
