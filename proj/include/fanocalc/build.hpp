#pragma once

#include "fanocalc/recipe.hpp"
#include "fanocalc/ring.hpp"

#include <string_view>

namespace fanocalc {

/// Runs a recipe through the ring constructors. Class arguments are read
/// against the model built from the recipe's base. Curve degrees not listed
/// in a `degrees` map are 0.
VarietyModel build_model(const Recipe& recipe);
VarietyModel build_model(std::string_view recipe_text);

} // namespace fanocalc
