// Copyright 2026 The cubic2ec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/simplex.hpp"

#include "core/errors.hpp"

namespace cubic2ec {

namespace {

class RevisedSimplex {
 public:
  RevisedSimplex(int rows, std::span<const LpColumn> columns, std::span<const Rational> rhs,
                 std::vector<int> basis)
      : m_(rows), cols_(columns), basis_(std::move(basis)), x_b_(rhs.begin(), rhs.end()) {
    require(static_cast<int>(rhs.size()) == m_, "rhs length must equal the row count");
    require(static_cast<int>(basis_.size()) == m_, "initial basis must have one column per row");
    is_basic_.assign(cols_.size(), 0);
    binv_.assign(m_, std::vector<Rational>(m_, Rational(0)));
    for (int i = 0; i < m_; ++i) {
      require(x_b_[i] >= 0, "initial basic solution must be nonnegative");
      const LpColumn& col = cols_[basis_[i]];
      require(col.entries.size() == 1 && col.entries[0].first == i &&
                  col.entries[0].second == 1,
              "initial basis must be an identity matrix");
      is_basic_[basis_[i]] = 1;
      binv_[i][i] = 1;
    }
  }

  LpResult run() {
    LpResult result;
    while (true) {
      compute_duals();
      const int entering = choose_entering();
      if (entering < 0) break;
      const std::vector<Rational> u = ftran(entering);
      const int leaving_row = choose_leaving_row(u);
      if (leaving_row < 0) {
        result.status = LpStatus::kUnbounded;
        break;
      }
      pivot(entering, leaving_row, u);
      ++result.iterations;
    }
    result.x.assign(cols_.size(), Rational(0));
    result.objective = 0;
    for (int i = 0; i < m_; ++i) {
      result.x[basis_[i]] = x_b_[i];
      result.objective += cols_[basis_[i]].cost * x_b_[i];
    }
    result.duals = duals_;
    result.basis = basis_;
    return result;
  }

 private:
  void compute_duals() {
    duals_.assign(m_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cols_[basis_[i]].cost;
      if (cb == 0) continue;
      for (int k = 0; k < m_; ++k) duals_[k] += cb * binv_[i][k];
    }
    // Integer form duals_[k] = scaled_[k] / scale_ for cheap pricing.
    scale_ = 1;
    for (const Rational& y : duals_) scale_ = lcm(scale_, y.get_den());
    scaled_.resize(m_);
    for (int k = 0; k < m_; ++k) {
      scaled_[k] = duals_[k].get_num() * (scale_ / duals_[k].get_den());
    }
  }

  // Bland: the lowest-index column with positive reduced cost.
  int choose_entering() {
    mpz_class dot;
    mpz_class lhs;
    mpz_class rhs;
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (is_basic_[j]) continue;
      dot = 0;
      for (const auto& [row, coef] : cols_[j].entries) {
        if (coef == 1) {
          dot += scaled_[row];
        } else if (coef == -1) {
          dot -= scaled_[row];
        } else {
          dot += scaled_[row] * coef;
        }
      }
      // cost - dot / scale > 0  <=>  cost.num * scale > dot * cost.den
      lhs = cols_[j].cost.get_num() * scale_;
      rhs = dot * cols_[j].cost.get_den();
      if (lhs > rhs) return static_cast<int>(j);
    }
    return -1;
  }

  std::vector<Rational> ftran(int j) const {
    std::vector<Rational> u(m_, Rational(0));
    for (const auto& [row, coef] : cols_[j].entries) {
      for (int i = 0; i < m_; ++i) {
        if (binv_[i][row] != 0) u[i] += binv_[i][row] * coef;
      }
    }
    return u;
  }

  // Minimum ratio; ties go to the basic column with the lowest index.
  int choose_leaving_row(const std::vector<Rational>& u) const {
    int best = -1;
    Rational best_ratio;
    for (int i = 0; i < m_; ++i) {
      if (u[i] <= 0) continue;
      Rational ratio = x_b_[i] / u[i];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  void pivot(int entering, int r, const std::vector<Rational>& u) {
    const Rational pivot_value = u[r];
    for (int k = 0; k < m_; ++k) binv_[r][k] /= pivot_value;
    x_b_[r] /= pivot_value;
    for (int i = 0; i < m_; ++i) {
      if (i == r || u[i] == 0) continue;
      const Rational factor = u[i];
      for (int k = 0; k < m_; ++k) {
        if (binv_[r][k] != 0) binv_[i][k] -= factor * binv_[r][k];
      }
      x_b_[i] -= factor * x_b_[r];
    }
    is_basic_[basis_[r]] = 0;
    basis_[r] = entering;
    is_basic_[entering] = 1;
  }

  static mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
  }

  int m_;
  std::span<const LpColumn> cols_;
  std::vector<int> basis_;
  std::vector<Rational> x_b_;
  std::vector<char> is_basic_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> duals_;
  mpz_class scale_;
  std::vector<mpz_class> scaled_;
};

}  // namespace

LpResult maximize(int rows, std::span<const LpColumn> columns, std::span<const Rational> rhs,
                  std::vector<int> initial_basis) {
  RevisedSimplex solver(rows, columns, rhs, std::move(initial_basis));
  return solver.run();
}

}  // namespace cubic2ec
