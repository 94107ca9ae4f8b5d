// Copyright 2026 The Sperner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sperner/exact_lp.h"

#include <optional>
#include <stdexcept>
#include <utility>

#include "sperner/error.h"

namespace sperner {

void LinearSystem::add(std::vector<Rational> row, Rational b) {
  if (row.size() != num_vars) {
    throw Error(ErrorCode::kInvalidArgument, "constraint row has the wrong length");
  }
  rows.push_back(std::move(row));
  rhs.push_back(std::move(b));
}

bool satisfies(const LinearSystem& system, const std::vector<Rational>& x) {
  if (x.size() != system.num_vars) return false;
  for (const Rational& v : x) {
    if (v < 0) return false;
  }
  for (std::size_t i = 0; i < system.rows.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (system.rows[i][j] != 0) lhs += system.rows[i][j] * x[j];
    }
    if (lhs < system.rhs[i]) return false;
  }
  return true;
}

bool is_farkas_certificate(const LinearSystem& system, const std::vector<Rational>& y) {
  if (y.size() != system.rows.size()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0) return false;
    yb += y[i] * system.rhs[i];
  }
  if (yb <= 0) return false;
  for (std::size_t j = 0; j < system.num_vars; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] != 0) col += y[i] * system.rows[i][j];
    }
    if (col > 0) return false;
  }
  return true;
}

namespace {

// Tableau for min{ -b y : A^T y + u = 0, y, u >= 0 }. One row per primal
// variable; columns are y_1..y_m then u_1..u_n. The right-hand side stays 0,
// so every pivot is degenerate and Bland's rule is what keeps it finite.
class DualTableau {
 public:
  explicit DualTableau(const LinearSystem& s)
      : m_(s.rows.size()), n_(s.num_vars), cols_(m_ + n_) {
    table_.assign(n_, std::vector<Rational>(cols_, 0));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) table_[j][i] = s.rows[i][j];
    }
    for (std::size_t j = 0; j < n_; ++j) table_[j][m_ + j] = 1;
    basis_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) basis_[j] = m_ + j;
    reduced_.assign(cols_, 0);
    for (std::size_t i = 0; i < m_; ++i) reduced_[i] = -s.rhs[i];
  }

  FeasibilityResult run() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (reduced_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return optimal();
      std::optional<std::size_t> leaving;
      for (std::size_t r = 0; r < n_; ++r) {
        if (table_[r][*entering] > 0 && (!leaving || basis_[r] < basis_[*leaving])) leaving = r;
      }
      if (!leaving) return unbounded(*entering);
      pivot(*leaving, *entering);
    }
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational p = table_[row][col];
    for (Rational& v : table_[row]) {
      if (v != 0) v /= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == row || table_[r][col] == 0) continue;
      const Rational f = table_[r][col];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (table_[row][c] != 0) table_[r][c] -= f * table_[row][c];
      }
    }
    if (reduced_[col] != 0) {
      const Rational f = reduced_[col];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (table_[row][c] != 0) reduced_[c] -= f * table_[row][c];
      }
    }
    basis_[row] = col;
  }

  FeasibilityResult optimal() const {
    FeasibilityResult out;
    out.feasible = true;
    out.x.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) out.x.push_back(reduced_[m_ + j]);
    return out;
  }

  FeasibilityResult unbounded(std::size_t entering) const {
    FeasibilityResult out;
    out.farkas.assign(m_, 0);
    if (entering < m_) out.farkas[entering] = 1;
    for (std::size_t r = 0; r < n_; ++r) {
      if (basis_[r] < m_) out.farkas[basis_[r]] = -table_[r][entering];
    }
    return out;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> table_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& system) {
  if (system.rows.size() != system.rhs.size()) {
    throw Error(ErrorCode::kInvalidArgument, "row and right-hand side counts differ");
  }
  FeasibilityResult result = DualTableau(system).run();
  const bool checked = result.feasible ? satisfies(system, result.x)
                                       : is_farkas_certificate(system, result.farkas);
  if (!checked) throw std::logic_error("exact simplex produced an invalid certificate");
  return result;
}

}  // namespace sperner
