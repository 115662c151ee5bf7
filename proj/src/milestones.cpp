#include "lorenz/milestones.hpp"

#include "lorenz/tlink.hpp"

namespace lorenz {

std::array<MilestoneEntry, 4> milestone_table(const LorenzVector& v) {
  const int t = trip_number(v);
  const long long s = v.crossing_sum();
  const int p = v.p();
  const int dp = v.last();
  return {{
      {"L", s, p + dp},
      {"T", s - p, dp},
      {"Tdual", s - dp, p},
      {"M", s + t - p - dp, t},
  }};
}

std::array<MilestoneEntry, 4> MilestoneWords::measured() const {
  auto entry = [](const char* name, const BraidWord& w) {
    return MilestoneEntry{name, static_cast<long long>(w.length()), w.strands()};
  };
  return {{entry("L", lorenz), entry("T", tbraid), entry("Tdual", tbraid_dual), entry("M", minimal)}};
}

MilestoneWords milestone_words(const LorenzVector& v) {
  return MilestoneWords{
      lorenz_braid_word(v),
      tbraid_word(vector_to_tparams(v)),
      tbraid_word(vector_to_tparams(dual_vector(v))),
      minimal_braid_word(v),
  };
}

}  // namespace lorenz
