#include "lorenz/census.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "lorenz/errors.hpp"

namespace lorenz {

std::vector<CensusEntry> parse_census(std::istream& in) {
  std::vector<CensusEntry> entries;
  std::set<std::string> names;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, vector_text, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> vector_text)) throw ParseError("missing vector for '" + name + "'", number);
    if (fields >> extra) throw ParseError("unexpected text '" + extra + "' after vector", number);
    if (!names.insert(name).second) throw ParseError("duplicate census name '" + name + "'", number);

    CensusEntry entry{name, vector_text, std::nullopt, {}, number};
    if (vector_text != "?") {
      try {
        auto parsed = parse_vector(vector_text);
        entry.vector = std::move(parsed.vector);
        for (auto& w : parsed.warnings) entry.warnings.push_back(name + ": " + w);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), number);
      }
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CensusEntry> load_census(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open census file " + path.string());
  return parse_census(in);
}

}  // namespace lorenz
