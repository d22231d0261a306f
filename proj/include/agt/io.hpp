#pragma once

#include <string>

#include <json.hpp>

#include "agt/monomial.hpp"

namespace agt {

using json = nlohmann::ordered_json;

// Accepts {"vars": n, "gens": [[e...], ...]} or
// {"vars": n, "components": [[a...], ...]} (intersection of irreducibles).
MonomialIdeal idealFromJson(const json& j);
MonomialIdeal idealFromString(const std::string& text);
MonomialIdeal idealFromFile(const std::string& path);

json idealToJson(const MonomialIdeal& I);

}  // namespace agt
