#include "lorenz/tlink.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "lorenz/errors.hpp"

namespace lorenz {

TParams::TParams(std::vector<TwistPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw InvalidArgument("T-link needs at least one pair");
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].r < 2) throw InvalidArgument("T-link pairs need r >= 2");
    if (pairs_[i].s < 1) throw InvalidArgument("T-link pairs need s >= 1");
    if (i > 0 && pairs_[i - 1].r > pairs_[i].r) throw InvalidArgument("T-link r values must be nondecreasing");
  }
}

TParams TParams::canonical() const {
  std::vector<TwistPair> merged;
  for (const auto& pair : pairs_) {
    if (!merged.empty() && merged.back().r == pair.r) {
      merged.back().s += pair.s;
    } else {
      merged.push_back(pair);
    }
  }
  return TParams(std::move(merged));
}

bool TParams::is_canonical() const noexcept {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i - 1].r == pairs_[i].r) return false;
  }
  return true;
}

TParams parse_tparams(std::string_view text) {
  std::vector<TwistPair> pairs;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  auto read_int = [&]() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer in T-link parameters");
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    return value;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in T-link parameters");
    }
    ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    expect('(');
    const int r = read_int();
    expect(',');
    const int s = read_int();
    expect(')');
    pairs.push_back({r, s});
    skip_space();
  }
  if (pairs.empty()) throw ParseError("empty T-link parameters");
  std::stable_sort(pairs.begin(), pairs.end(), [](const TwistPair& a, const TwistPair& b) { return a.r < b.r; });
  try {
    return TParams(std::move(pairs));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_tparams(const TParams& t) {
  std::ostringstream out;
  for (const auto& pair : t.pairs()) out << '(' << pair.r << ',' << pair.s << ')';
  return out.str();
}

BraidWord tbraid_word(const TParams& t) {
  const int n = t.max_strands();
  BraidWord w(n, {});
  for (const auto& pair : t.pairs()) w = concat(w, power(bracket(1, pair.r, n), pair.s));
  return w;
}

TParams vector_to_tparams(const LorenzVector& v) {
  std::vector<TwistPair> pairs;
  for (const auto& run : v.runs()) pairs.push_back({run.value, run.count});
  return TParams(std::move(pairs));
}

LorenzVector tparams_to_vector(const TParams& t) {
  const TParams canonical = t.canonical();
  std::vector<RunLength> runs;
  for (const auto& pair : canonical.pairs()) runs.push_back({pair.r, pair.s});
  return LorenzVector::from_runs(runs);
}

namespace {

int require_trip(const LorenzVector& v) {
  const int t = trip_number(v);
  if (t < 2) throw InvalidArgument("word pieces need trip number >= 2");
  return t;
}

}  // namespace

BraidWord x_word(const LorenzVector& v) {
  const int t = require_trip(v);
  const int n = v.last();
  BraidWord w(n, {});
  for (int i = 1; i <= v.p() - t; ++i) w = concat(w, bracket(1, v.d(i), n));
  return w;
}

BraidWord y_word(const LorenzVector& v) {
  const int t = require_trip(v);
  return power(bracket(1, t, v.last()), t);
}

BraidWord z_word(const LorenzVector& v) {
  const int t = require_trip(v);
  const int n = v.last();
  const int p = v.p();
  BraidWord w(n, {});
  for (int i = 0; i <= t - 1; ++i) {
    const int from = t - i;
    const int to = v.d(p - i) - i;
    if (to < from) throw InternalError("LR strand displacement below the trip number");
    if (to > from) w = concat(w, bracket(from, to, n));
  }
  return w;
}

BraidWord yz_target_word(const LorenzVector& v) {
  const int t = require_trip(v);
  const int n = v.last();
  BraidWord w(n, {});
  for (int i = v.p() - t + 1; i <= v.p(); ++i) w = concat(w, bracket(1, v.d(i), n));
  return w;
}

TParams dual_tparams(const TParams& t) {
  if (!t.is_canonical()) throw InvalidArgument("dual_tparams needs canonical parameters");
  const auto pairs = t.pairs();
  const std::size_t k = pairs.size();
  if (pairs[k - 1].s < 2) throw InvalidArgument("dual_tparams needs s_k >= 2");
  std::vector<TwistPair> dual(k);
  int partial = 0;
  for (std::size_t j = 0; j < k; ++j) {
    partial += pairs[k - 1 - j].s;
    const int below = (j + 1 == k) ? 0 : pairs[k - 2 - j].r;
    dual[j] = {partial, pairs[k - 1 - j].r - below};
  }
  return TParams(std::move(dual));
}

int braid_index(const TParams& params) {
  const TParams t = params.canonical();
  const auto pairs = t.pairs();
  const int k = static_cast<int>(pairs.size());
  // r[0] = rbar[0] = 0; rbar[j] = s_k + ... + s_{k-j+1}.
  std::vector<int> r(static_cast<std::size_t>(k + 1), 0), rbar(static_cast<std::size_t>(k + 1), 0);
  for (int i = 1; i <= k; ++i) {
    r[static_cast<std::size_t>(i)] = pairs[static_cast<std::size_t>(i - 1)].r;
    rbar[static_cast<std::size_t>(i)] = rbar[static_cast<std::size_t>(i - 1)] + pairs[static_cast<std::size_t>(k - i)].s;
  }
  auto first_reaching = [k](const std::vector<int>& a, const std::vector<int>& b) {
    for (int i = 0; i <= k; ++i) {
      if (a[static_cast<std::size_t>(i)] >= b[static_cast<std::size_t>(k - i)]) return i;
    }
    throw InternalError("braid index search did not terminate");
  };
  const int i0 = first_reaching(r, rbar);
  const int j0 = first_reaching(rbar, r);
  const int index = std::min(r[static_cast<std::size_t>(i0)], rbar[static_cast<std::size_t>(j0)]);
#ifndef NDEBUG
  const LorenzVector v = tparams_to_vector(t);
  if (v.is_normalized() && trip_number(v) != index) {
    throw InternalError("braid index formula disagrees with the trip number");
  }
#endif
  return index;
}

int braid_index_small_k(const TParams& params) {
  const TParams t = params.canonical();
  const auto pairs = t.pairs();
  if (pairs.size() == 1) return std::min(pairs[0].r, pairs[0].s);
  if (pairs.size() != 2) throw InvalidArgument("closed braid-index forms cover k <= 2 only");
  const auto [r1, s1] = pairs[0];
  const auto [r2, s2] = pairs[1];
  if (r1 <= s2) return std::min(s2, r2);
  return std::min(s1 + s2, r1);
}

TorusRewrite torus_simplify(const TParams& params) {
  const TParams t = params.canonical();
  const auto pairs = t.pairs();
  const std::size_t k = pairs.size();
  TorusRewrite out{t, false};
  if (k < 2) return out;
  if (pairs[k - 2].r > pairs[k - 1].s) return out;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (pairs[i].s % pairs[i].r != 0) return out;
  }
  std::vector<TwistPair> rewritten(pairs.begin(), pairs.end());
  std::swap(rewritten.back().r, rewritten.back().s);
  out.result = TParams(std::move(rewritten)).canonical();
  out.applied = true;
  return out;
}

TParams torus_simplify_all(const TParams& params) {
  auto key = [](const TParams& t) { return std::make_pair(t.k(), t.max_strands()); };
  TParams current = params.canonical();
  TParams best = current;
  std::set<std::string> seen{format_tparams(current)};
  while (true) {
    auto step = torus_simplify(current);
    if (!step.applied || !seen.insert(format_tparams(step.result)).second) break;
    current = step.result;
    if (key(current) < key(best)) best = current;
  }
  return best;
}

}  // namespace lorenz
