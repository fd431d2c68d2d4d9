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

#ifndef WITTC_JSON_IO_HPP_
#define WITTC_JSON_IO_HPP_

#include "json.hpp"
#include "wittc/group_ring.hpp"
#include "wittc/witt_curve.hpp"

namespace wittc {

// {"parity":"odd"|"even","u":"1"|"s","L":"<bits>"}
nlohmann::json to_json(const WittClass& a);
WittClass class_from_json(const nlohmann::json& j, Mod4 c);

// [{"coef":"1"|"s"|"e","L":"<bits>"}, ...]; zero coefficients omitted.
// A "coef":"0" entry is accepted on input and ignored.
nlohmann::json to_json(const GroupRingElement& f);
GroupRingElement element_from_json(const nlohmann::json& j, Mod4 c,
                                   unsigned rank);

}  // namespace wittc

#endif  // WITTC_JSON_IO_HPP_
