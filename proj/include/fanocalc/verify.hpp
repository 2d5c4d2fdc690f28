#pragma once

#include "fanocalc/catalog.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fanocalc {

struct Check {
    std::string group;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;

    /// "CHECK <name> expected=<v> actual=<v> PASS|FAIL"
    std::string line() const;
};

struct Report {
    std::vector<Check> checks;

    bool all_pass() const;
    std::size_t failures() const;
};

/// appendix, intersections, splitting, partition, fibration, rank_one, recipes,
/// consistency
const std::vector<std::string>& verify_groups();

/// Recomputes the reference values and checks the catalog against the
/// classification rules. Failures are reported, never thrown; an unknown group name
/// throws ArgumentError.
Report verify_paper(const Catalog& catalog, std::optional<std::string_view> only = std::nullopt);
Report verify_paper(std::optional<std::string_view> only = std::nullopt);

} // namespace fanocalc
