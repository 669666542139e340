#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace schur_scope::cli {

std::vector<std::string> fixture_names();

/// Runs the computation behind a fixture and formats it; throws UnknownName.
std::string compute_fixture(std::string_view name);

/// The checked-in text the computation must reproduce.
std::string expected_fixture(std::string_view name);

struct FixtureOutcome {
  std::string report;
  std::vector<std::string> diff;  ///< "-expected" / "+actual" lines; empty on a match
};

FixtureOutcome reproduce_fixture(std::string_view name);

}  // namespace schur_scope::cli
