// Copyright 2026 The rtgirth Authors.
//
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

// Command-line front end. Lives in the library so tests can drive it.

#ifndef RTGIRTH_CLI_H_
#define RTGIRTH_CLI_H_

#include <cstdint>
#include <ostream>
#include <string_view>

namespace rtgirth {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

// 64-bit FNV-1a of `bytes`.
std::uint64_t Fnv1a64(std::string_view bytes);

// Runs one subcommand; the report goes to `out`, diagnostics to `err`.
// Returns kExitOk, kExitUsage (parse or flag errors) or kExitVerification.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtgirth

#endif  // RTGIRTH_CLI_H_
