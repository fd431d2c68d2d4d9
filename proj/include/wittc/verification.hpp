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

#ifndef WITTC_VERIFICATION_HPP_
#define WITTC_VERIFICATION_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace wittc {

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Summary on success, first counterexample on failure.
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Random triples per context for the rank-8 ring-axiom check.
  std::uint64_t random_triples = 100'000;
  std::uint64_t seed = 0x5eed;
};

/// The full desk-scale verification suite, one entry per check, in order:
///   1 W(k) identities, 2 |W(k)| = 4, 3 additive structure of W(k),
///   4 isotropy of rank 3 and 4 forms, 5 invariant completeness,
///   6 W(C) tables, 7 ring axioms, 8 classification, 9 quotient
///   isomorphism, 10 rank-0 degeneration.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

/// A single check by id (1..10).
CheckResult run_check(int id, const VerifyOptions& opts = {});

}  // namespace wittc

#endif  // WITTC_VERIFICATION_HPP_
