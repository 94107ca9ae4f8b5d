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

#ifndef SPERNER_NUMERIC_H_
#define SPERNER_NUMERIC_H_

#include <gmpxx.h>

#include <string>

namespace sperner {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Always "p/q", also for integers ("3/1").
inline std::string to_fraction_string(const Rational& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace sperner

#endif  // SPERNER_NUMERIC_H_
