/* Copyright 2026 The wittc Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef WITTC_CLI_HPP_
#define WITTC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "wittc/bilinear_forms.hpp"

namespace wittc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned kMaxTableRank = 4;

/// Runs one subcommand. args excludes the program name. Reports go to
/// `out`, one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Entries "a,b,(c0,c1),..." reduced into `field`; surrounding <> allowed.
Vector parse_entries(const FiniteField& field, const std::string& text);
/// Rows separated by ';', entries as in parse_entries.
Matrix parse_gram(const FiniteField& field, const std::string& text);

}  // namespace wittc::cli

#endif  // WITTC_CLI_HPP_
