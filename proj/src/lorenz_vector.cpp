#include "lorenz/lorenz_vector.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "lorenz/errors.hpp"

namespace lorenz {

LorenzVector::LorenzVector(std::vector<int> displacements) : d_(std::move(displacements)) {
  if (d_.empty()) throw InvalidArgument("Lorenz vector must be non-empty");
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] < 1) throw InvalidArgument("Lorenz vector entries must be positive");
    if (i > 0 && d_[i - 1] > d_[i]) throw InvalidArgument("Lorenz vector must be nondecreasing");
  }
}

LorenzVector LorenzVector::from_runs(std::span<const RunLength> runs) {
  std::vector<int> d;
  for (const auto& run : runs) {
    if (run.count < 1) throw InvalidArgument("run multiplicity must be positive");
    d.insert(d.end(), static_cast<std::size_t>(run.count), run.value);
  }
  return LorenzVector(std::move(d));
}

long long LorenzVector::crossing_sum() const noexcept {
  return std::accumulate(d_.begin(), d_.end(), 0LL);
}

std::vector<RunLength> LorenzVector::runs() const {
  std::vector<RunLength> out;
  for (int value : d_) {
    if (!out.empty() && out.back().value == value) {
      ++out.back().count;
    } else {
      out.push_back({value, 1});
    }
  }
  return out;
}

bool LorenzVector::is_normalized() const noexcept {
  return d_.size() >= 2 && d_.front() >= 2 && d_[d_.size() - 2] == d_.back();
}

namespace {

int parse_positive(std::string_view token, std::string_view what) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token.size() >= 2 && token.front() == '{' && token.back() == '}') {
    token = token.substr(1, token.size() - 2);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(token) + "'");
  }
  if (value < 1) throw ParseError(std::string(what) + " must be positive, got " + std::to_string(value));
  return value;
}

std::string_view strip(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

ParsedVector parse_vector(std::string_view text) {
  text = strip(text);
  if (!text.empty() && text.front() == '<' && text.back() == '>') text = strip(text.substr(1, text.size() - 2));
  if (text.empty()) throw ParseError("empty Lorenz vector");

  std::vector<int> d;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto term = strip(text.substr(start, comma - start));
    if (term.empty()) throw ParseError("empty term in Lorenz vector");
    auto caret = term.find('^');
    int value = parse_positive(term.substr(0, caret), "entry");
    int count = caret == std::string_view::npos ? 1 : parse_positive(term.substr(caret + 1), "multiplicity");
    d.insert(d.end(), static_cast<std::size_t>(count), value);
    start = comma + 1;
  }

  ParsedVector result;
  if (!std::is_sorted(d.begin(), d.end())) {
    std::sort(d.begin(), d.end());
    result.warnings.push_back("entries of '" + std::string(text) +
                              "' are not nondecreasing; sorted as a multiset");
  }
  result.vector = LorenzVector(std::move(d));
  return result;
}

std::string format_vector(const LorenzVector& v) {
  std::string out;
  for (const auto& run : v.runs()) {
    if (!out.empty()) out += ',';
    out += std::to_string(run.value);
    if (run.count > 1) out += '^' + std::to_string(run.count);
  }
  return out;
}

NormalizeResult normalize(const LorenzVector& v) {
  std::vector<int> d(v.entries().begin(), v.entries().end());
  NormalizeResult result;
  bool changed = true;
  while (changed) {
    changed = false;
    // sigma_1 splits off on the left while d_1 = 1.
    std::size_t lead = 0;
    while (lead < d.size() && d[lead] == 1) ++lead;
    if (lead > 0) {
      d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(lead));
      result.left_moves += static_cast<int>(lead);
      changed = true;
    }
    if (d.size() <= 1) return result;
    // The last strand destabilizes on the right while d_{p-1} < d_p.
    const int gap = d.back() - d[d.size() - 2];
    if (gap > 0) {
      d.back() -= gap;
      result.right_moves += gap;
      changed = true;
    }
  }
  result.vector = LorenzVector(std::move(d));
  return result;
}

Permutation lorenz_permutation(const LorenzVector& v) {
  const int p = v.p();
  const int n = v.braid_strands();
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < p; ++i) {
    const int end = i + v.entries()[static_cast<std::size_t>(i)];
    image[static_cast<std::size_t>(i)] = end;
    used[static_cast<std::size_t>(end)] = 1;
  }
  int next_end = 0;
  for (int start = p; start < n; ++start) {
    while (used[static_cast<std::size_t>(next_end)]) ++next_end;
    image[static_cast<std::size_t>(start)] = next_end++;
  }
  return Permutation(std::move(image));
}

BraidWord lorenz_braid_word(const LorenzVector& v) {
  return permutation_braid_word(lorenz_permutation(v));
}

namespace {

void require_normalized(const LorenzVector& v, const char* op) {
  if (!v.is_normalized()) {
    throw InvalidArgument(std::string(op) + " requires a normalized Lorenz vector, got <" +
                          format_vector(v) + ">");
  }
}

}  // namespace

int trip_number(const LorenzVector& v) {
  require_normalized(v, "trip_number");
  int t = 0;
  for (int i = 1; i <= v.p(); ++i) {
    if (i + v.d(i) > v.p()) ++t;
  }
  return t;
}

StrandClassification classify_strands(const LorenzVector& v) {
  require_normalized(v, "classify_strands");
  const Permutation pi = lorenz_permutation(v);
  const int p = v.p();
  StrandClassification out;
  out.types.reserve(static_cast<std::size_t>(pi.size()));
  for (int start = 0; start < pi.size(); ++start) {
    const bool starts_left = start < p;
    const bool ends_left = pi[start] < p;
    StrandType type = starts_left ? (ends_left ? StrandType::LL : StrandType::LR)
                                  : (ends_left ? StrandType::RL : StrandType::RR);
    out.types.push_back(type);
    switch (type) {
      case StrandType::LL: ++out.ll; break;
      case StrandType::LR: ++out.lr; break;
      case StrandType::RL: ++out.rl; break;
      case StrandType::RR: ++out.rr; break;
    }
  }
  return out;
}

LorenzVector dual_vector(const LorenzVector& v) {
  require_normalized(v, "dual_vector");
  const auto runs = v.runs();
  const std::size_t k = runs.size();
  std::vector<RunLength> dual(k);
  int partial = 0;
  for (std::size_t j = 0; j < k; ++j) {
    partial += runs[k - 1 - j].count;
    const int below = (k - 1 - j == 0) ? 0 : runs[k - 2 - j].value;
    dual[j] = {partial, runs[k - 1 - j].value - below};
  }
  return LorenzVector::from_runs(dual);
}

namespace {

// Counts of the first `ll` entries of `v` by displacement 2..t.
std::vector<int> ll_histogram(const LorenzVector& v, int ll, int t) {
  std::vector<int> counts(static_cast<std::size_t>(t - 1), 0);
  for (int j = 1; j <= ll; ++j) {
    const int d = v.d(j);
    if (d < 2 || d > t) throw InternalError("LL strand displacement outside [2, t]");
    ++counts[static_cast<std::size_t>(d - 2)];
  }
  return counts;
}

}  // namespace

TmTriple tm_triple(const LorenzVector& v) {
  TmTriple triple;
  triple.t = trip_number(v);
  triple.n = ll_histogram(v, v.p() - triple.t, triple.t);
  const LorenzVector dual = dual_vector(v);
  triple.m = ll_histogram(dual, dual.p() - triple.t, triple.t);
  return triple;
}

namespace {

void validate_triple(const TmTriple& triple) {
  if (triple.t < 2) throw InvalidArgument("triple needs t >= 2");
  const auto size = static_cast<std::size_t>(triple.t - 1);
  if (triple.n.size() != size || triple.m.size() != size) {
    throw InvalidArgument("triple vectors must have t-1 entries");
  }
  for (int x : triple.n) if (x < 0) throw InvalidArgument("triple counts must be nonnegative");
  for (int x : triple.m) if (x < 0) throw InvalidArgument("triple counts must be nonnegative");
}

std::vector<int> expand_histogram(const std::vector<int>& counts) {
  std::vector<int> d;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    d.insert(d.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i) + 2);
  }
  return d;
}

}  // namespace

LorenzVector vector_from_triple(const TmTriple& triple) {
  validate_triple(triple);
  const int t = triple.t;
  std::vector<int> d = expand_histogram(triple.n);        // LL part of d
  const std::vector<int> dual_ll = expand_histogram(triple.m);  // LL part of the dual
  const int p = t + static_cast<int>(d.size());
  const int dp = t + static_cast<int>(dual_ll.size());
  const int n = p + dp;

  // RR strands are the reflections of the dual's LL strands; their 1-based
  // end positions are n + 1 - (j + dbar_j).
  std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t j = 0; j < dual_ll.size(); ++j) {
    const int end = n + 1 - (static_cast<int>(j) + 1 + dual_ll[j]);
    if (end <= p || end > n) throw InvalidArgument("triple does not describe a Lorenz braid");
    taken[static_cast<std::size_t>(end)] = 1;
  }
  // LR strands take the free right-hand end positions in order.
  int strand = p - t + 1;
  for (int end = p + 1; end <= n; ++end) {
    if (taken[static_cast<std::size_t>(end)]) continue;
    d.push_back(end - strand);
    ++strand;
  }
  if (strand != p + 1) throw InternalError("LR endpoint count mismatch");
  return LorenzVector(std::move(d));
}

BraidWord minimal_braid_word(const TmTriple& triple) {
  validate_triple(triple);
  const int t = triple.t;
  BraidWord w = power(bracket(1, t, t), t);
  for (int i = 1; i <= t - 1; ++i) {
    w = concat(w, power(bracket(1, i + 1, t), triple.n[static_cast<std::size_t>(i - 1)]));
  }
  for (int i = 1; i <= t - 1; ++i) {
    w = concat(w, power(bracket(t, t - i, t), triple.m[static_cast<std::size_t>(i - 1)]));
  }
  return w;
}

BraidWord minimal_braid_word(const LorenzVector& v) {
  return minimal_braid_word(tm_triple(v));
}

}  // namespace lorenz
