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

#include "wittc/json_io.hpp"

namespace wittc {

namespace {

SquareClass square_class_from(const std::string& s) {
  if (s == "1") return SquareClass::One;
  if (s == "s") return SquareClass::NonSquare;
  throw WittError("malformed square class '" + s + "', expected \"1\" or \"s\"");
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name) || !j.at(name).is_string()) {
    throw WittError(std::string("expected string field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace

nlohmann::json to_json(const WittClass& a) {
  return {{"parity", a.is_odd() ? "odd" : "even"},
          {"u", to_string(a.u())},
          {"L", a.line().to_string()}};
}

WittClass class_from_json(const nlohmann::json& j, Mod4 c) {
  const std::string parity = field(j, "parity").get<std::string>();
  if (parity != "odd" && parity != "even") {
    throw WittError("malformed parity '" + parity + "'");
  }
  return WittClass(parity == "odd" ? Parity::Odd : Parity::Even,
                   square_class_from(field(j, "u").get<std::string>()),
                   PicElement::parse(field(j, "L").get<std::string>()), c);
}

nlohmann::json to_json(const GroupRingElement& f) {
  nlohmann::json out = nlohmann::json::array();
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    out.push_back({{"coef", f.coeff(i).symbol()},
                   {"L", PicElement(f.rank(), i).to_string()}});
  }
  return out;
}

GroupRingElement element_from_json(const nlohmann::json& j, Mod4 c,
                                   unsigned rank) {
  if (!j.is_array()) throw WittError("group-ring element must be a JSON array");
  GroupRingElement f(c, rank);
  for (const auto& term : j) {
    const WittK a = WittK::from_symbol(c, field(term, "coef").get<std::string>());
    const PicElement l = PicElement::parse(field(term, "L").get<std::string>());
    if (l.rank() != rank) {
      throw WittError("term L = \"" + l.to_string() + "\" does not have rank " +
                      std::to_string(rank));
    }
    f.accumulate(l, a);
  }
  return f;
}

}  // namespace wittc
