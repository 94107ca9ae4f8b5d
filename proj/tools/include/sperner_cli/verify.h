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

#ifndef SPERNER_CLI_VERIFY_H_
#define SPERNER_CLI_VERIFY_H_

#include <cstddef>
#include <string>
#include <vector>

namespace sperner::cli {

struct PropertyRow {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string detail;  // first failure, empty when passed
};

// Sweeps every library invariant over instances of at most `cap` vertices
// (enumeration and graph sweeps stop at their own smaller limits).
std::vector<PropertyRow> verify_theorems(std::size_t cap);

}  // namespace sperner::cli

#endif  // SPERNER_CLI_VERIFY_H_
