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

#ifndef SPERNER_CLI_CLI_H_
#define SPERNER_CLI_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sperner::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapRefused = 3;

// Runs one command line (program name excluded). `in` backs the "-" path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sperner::cli

#endif  // SPERNER_CLI_CLI_H_
