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

#ifndef SPERNER_EXACT_LP_H_
#define SPERNER_EXACT_LP_H_

#include <cstddef>
#include <vector>

#include "sperner/numeric.h"

namespace sperner {

// A x >= b, x >= 0 over the rationals. rows[i] has num_vars entries.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;

  void add(std::vector<Rational> row, Rational b);
};

struct FeasibilityResult {
  bool feasible = false;
  // Feasible: x >= 0 with A x >= b.
  std::vector<Rational> x;
  // Infeasible: y >= 0 with yA <= 0 and yb > 0, one entry per row.
  std::vector<Rational> farkas;
};

// Exact simplex (Bland's rule) on max{ yb : yA <= 0, y >= 0 }. A bounded
// optimum yields x from the reduced costs; an unbounded ray is a Farkas
// certificate. Either answer is checked before it is returned.
FeasibilityResult solve_feasibility(const LinearSystem& system);

// Exact checks used by solve_feasibility and by tests.
bool satisfies(const LinearSystem& system, const std::vector<Rational>& x);
bool is_farkas_certificate(const LinearSystem& system, const std::vector<Rational>& y);

}  // namespace sperner

#endif  // SPERNER_EXACT_LP_H_
