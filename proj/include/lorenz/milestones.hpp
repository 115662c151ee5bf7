#pragma once

// The four closed positive braid representations of a Lorenz link, from the
// Lorenz braid down to the minimal braid index representative.

#include <array>
#include <string>

#include "lorenz/braid_word.hpp"
#include "lorenz/lorenz_vector.hpp"

namespace lorenz {

struct MilestoneEntry {
  std::string name;  // "L", "T", "Tdual", "M"
  long long crossings = 0;
  int strands = 0;
  long long excess() const noexcept { return crossings - strands; }  // c - n
  bool operator==(const MilestoneEntry&) const = default;
};

/// Crossings (S, S-p, S-d_p, S+t-p-d_p) and strands (p+d_p, d_p, p, t),
/// from the closed formulas alone.
std::array<MilestoneEntry, 4> milestone_table(const LorenzVector& v);

struct MilestoneWords {
  BraidWord lorenz;      // on p + d_p strands
  BraidWord tbraid;      // on d_p strands
  BraidWord tbraid_dual; // on p strands
  BraidWord minimal;     // on t strands

  /// Table measured from the constructed words.
  std::array<MilestoneEntry, 4> measured() const;
};

MilestoneWords milestone_words(const LorenzVector& v);

}  // namespace lorenz
