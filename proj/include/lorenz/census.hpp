#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "lorenz/lorenz_vector.hpp"

namespace lorenz {

struct CensusEntry {
  std::string name;
  std::string raw;                      // vector text as written, or "?"
  std::optional<LorenzVector> vector;   // empty for "?" rows
  std::vector<std::string> warnings;
  std::size_t line = 0;
};

/// Format: one "<name> <vector|?>" per line, '#' starts a comment.
/// Throws ParseError with the offending line number.
std::vector<CensusEntry> parse_census(std::istream& in);
std::vector<CensusEntry> load_census(const std::filesystem::path& path);

}  // namespace lorenz
