#include "hsq/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <set>

#include "hsq/errors.hpp"
#include "hsq/transfer.hpp"
#include "hsq/witten.hpp"

namespace hsq {

namespace {

std::uint64_t low_bits(int length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

std::uint64_t parse_row(std::string_view text) {
  std::uint64_t row = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      row |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw InputError("pattern rows may only contain 0 and 1");
    }
  }
  return row;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t rotate(std::uint64_t row, int shift, int length) {
  // new[i] = old[i + shift]
  if (shift == 0) return row;
  return ((row >> shift) | (row << (length - shift))) & low_bits(length);
}

std::uint64_t reflect(std::uint64_t row, int length) {
  std::uint64_t out = 0;
  for (int i = 0; i < length; ++i) {
    if ((row >> i) & 1U) out |= std::uint64_t{1} << (length - 1 - i);
  }
  return out;
}

// Column 0 becomes the most significant bit, so numeric order is lexicographic order.
std::uint64_t lex_key(std::uint64_t row, int length) { return reflect(row, length); }

}  // namespace

Pattern::Pattern(int length, std::uint64_t top, std::uint64_t bottom)
    : length_(length), top_(top), bottom_(bottom) {
  if (length <= 0 || length % 2 != 0) throw InputError("pattern length must be even and positive");
  if (length > kMaxLength) throw ResourceError("pattern length exceeds " + std::to_string(kMaxLength));
  if ((top | bottom) & ~low_bits(length)) throw InputError("pattern bits beyond its length");
  if (top & ~bottom) throw InputError("a top-row one must sit over a bottom-row one");
}

Pattern Pattern::from_rows(std::string_view top, std::string_view bottom) {
  if (top.size() != bottom.size()) throw InputError("pattern rows differ in length");
  return Pattern(static_cast<int>(top.size()), parse_row(top), parse_row(bottom));
}

Pattern Pattern::parse(std::string_view text) {
  auto split = text.find('/');
  if (split == std::string_view::npos) split = text.find('\n');
  if (split == std::string_view::npos) throw InputError("pattern needs two rows");
  return from_rows(trim(text.substr(0, split)), trim(text.substr(split + 1)));
}

Pattern Pattern::all_ones(int length) {
  return Pattern(length, low_bits(length), low_bits(length));
}

std::string Pattern::to_string() const {
  std::string out;
  for (int i = 0; i < length_; ++i) out += top(i) ? '1' : '0';
  out += " / ";
  for (int i = 0; i < length_; ++i) out += bottom(i) ? '1' : '0';
  return out;
}

std::vector<RowGroup> row_groups(std::uint64_t row, int length) {
  row &= low_bits(length);
  if (row == 0) return {};
  if (row == low_bits(length)) return {{0, length}};
  int zero = 0;
  while ((row >> zero) & 1U) ++zero;
  std::vector<RowGroup> out;
  int run = 0;
  int start = 0;
  for (int step = 1; step <= length; ++step) {
    const int col = (zero + step) % length;
    if ((row >> col) & 1U) {
      if (run == 0) start = col;
      ++run;
    } else if (run > 0) {
      out.push_back({start, run});
      run = 0;
    }
  }
  return out;
}

namespace {

// Length of every maximal zero gap, in the same cyclic order as row_groups.
bool zero_gaps_single(std::uint64_t row, int length) {
  const auto groups = row_groups(row, length);
  int ones = 0;
  for (auto g : groups) ones += g.length;
  // Each group is followed by one gap; single zeros means exactly one per group.
  return length - ones == static_cast<int>(groups.size());
}

}  // namespace

bool is_cyclic_run(std::uint64_t row, int length) {
  row &= low_bits(length);
  if (row == 0 || row == low_bits(length)) return false;
  for (auto g : row_groups(row, length)) {
    if (g.length == 2) return false;
  }
  return zero_gaps_single(row, length);
}

bool is_cyclic_nice_run(std::uint64_t row, int length) {
  if (!is_cyclic_run(row, length)) return false;
  for (auto g : row_groups(row, length)) {
    if (g.length != 1 && g.length != 3) return false;
  }
  return true;
}

Pattern canonicalize(const Pattern& p) {
  const int n = p.length();
  std::pair<std::uint64_t, std::uint64_t> best{~std::uint64_t{0}, ~std::uint64_t{0}};
  Pattern winner = p;
  for (int mirrored = 0; mirrored < 2; ++mirrored) {
    const std::uint64_t top = mirrored ? reflect(p.top(), n) : p.top();
    const std::uint64_t bottom = mirrored ? reflect(p.bottom(), n) : p.bottom();
    for (int s = 0; s < n; ++s) {
      const std::uint64_t t = rotate(top, s, n);
      const std::uint64_t b = rotate(bottom, s, n);
      const std::pair key{lex_key(t, n), lex_key(b, n)};
      if (key < best) {
        best = key;
        winner = Pattern(n, t, b);
      }
    }
  }
  return winner;
}

Graph masked_graph(const Pattern& p, int m) {
  if (m < 2) throw InputError("masked_graph needs m >= 2");
  const Graph grid = build_grid({GridFamily::kCylinder, m, p.length()});
  std::vector<int> drop;
  for (int c = 0; c < p.length(); ++c) {
    if (!p.top(c)) drop.push_back(*grid.index_of_label({1, c}));
    if (!p.bottom(c)) drop.push_back(*grid.index_of_label({2, c}));
  }
  return grid.without_vertices(drop);
}

std::vector<BigInt> pattern_series(const Pattern& p, int max_m) {
  if (max_m < 0) throw InputError("negative series length");
  const std::uint64_t masks[] = {p.top(), p.bottom()};
  auto values = RowTransfer::get(p.length(), true).series(masks, max_m);
  for (int m = 0; m < std::min(2, max_m + 1); ++m) values[m] = 0;
  return values;
}

BigInt z_pattern(const Pattern& p, int m) {
  if (m < 2) throw InputError("z_pattern needs m >= 2");
  return pattern_series(p, m)[m];
}

Pattern op_V(const Pattern& p, int i) {
  if (!p.top(i)) throw RuleInapplicable("operation V needs a one at the top of column " + std::to_string(i));
  return Pattern(p.length(), p.top() & ~(std::uint64_t{1} << p.wrap(i)), p.bottom());
}

Pattern op_N(const Pattern& p, int i) {
  if (!p.top(i)) throw RuleInapplicable("operation N needs a one at the top of column " + std::to_string(i));
  std::uint64_t top = p.top();
  for (int d = -1; d <= 1; ++d) top &= ~(std::uint64_t{1} << p.wrap(i + d));
  return Pattern(p.length(), top, p.bottom() & ~(std::uint64_t{1} << p.wrap(i)));
}

bool is_reducible(const Pattern& p) {
  if (p.top() == low_bits(p.length())) return false;
  for (auto g : row_groups(p.top(), p.length())) {
    if (g.length != 1) return false;
  }
  return true;
}

RowShift op_R(const Pattern& p) {
  if (!is_reducible(p)) throw RuleInapplicable("operation R needs a reducible pattern");
  std::uint64_t middle = p.bottom();
  std::uint64_t third = low_bits(p.length());
  for (int i = 0; i < p.length(); ++i) {
    if (!p.top(i)) continue;
    for (int d = -1; d <= 1; ++d) middle &= ~(std::uint64_t{1} << p.wrap(i + d));
    third &= ~(std::uint64_t{1} << i);
  }
  const int ones = std::popcount(p.top());
  return {Pattern(p.length(), middle, third), ones % 2 ? -1 : 1};
}

namespace {

// The top row restricted to a bottom block of length >= 4, read left to right:
// zeros, then a nice run, then zeros, with the run starting at offset 2 if it
// opens with a block and at offset 1 or 2 if it opens with a singleton
// (mirrored at the right end).
bool valid_fill(const std::vector<bool>& w) {
  const int len = static_cast<int>(w.size());
  int first = -1;
  int last = -1;
  for (int i = 0; i < len; ++i) {
    if (w[i]) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return false;
  std::vector<int> lengths;
  int i = first;
  while (i <= last) {
    int j = i;
    while (j <= last && w[j]) ++j;
    lengths.push_back(j - i);
    if (j > last) break;
    if (w[j + 1] == false) return false;  // gaps must be single zeros
    i = j + 1;
  }
  for (int g : lengths) {
    if (g != 1 && g != 3) return false;
  }
  auto end_ok = [](int group, int offset) { return group == 3 ? offset == 2 : (offset == 1 || offset == 2); };
  return end_ok(lengths.front(), first) && end_ok(lengths.back(), len - 1 - last);
}

std::vector<bool> top_over(const Pattern& p, RowGroup g) {
  std::vector<bool> w(g.length);
  for (int k = 0; k < g.length; ++k) w[k] = p.top(g.start + k);
  return w;
}

}  // namespace

bool is_proper(const Pattern& p) {
  const int n = p.length();
  if (p.bottom() == low_bits(n)) return is_cyclic_nice_run(p.top(), n);
  if (!is_cyclic_run(p.bottom(), n)) return false;
  for (auto g : row_groups(p.bottom(), n)) {
    const auto w = top_over(p, g);
    if (g.length <= 3) {
      if (std::find(w.begin(), w.end(), true) != w.end()) return false;
    } else if (!valid_fill(w)) {
      return false;
    }
  }
  return true;
}

int mu(const Pattern& p) {
  if (!is_proper(p)) throw InputError("mu is defined for proper patterns only: " + p.to_string());
  const int n = p.length();
  int blocks = 0;
  for (auto g : row_groups(p.top(), n)) blocks += g.length >= 3;
  if (p.bottom() != low_bits(n)) {
    for (auto g : row_groups(p.bottom(), n)) blocks += g.length >= 3;
  }
  return blocks;
}

namespace {

const std::vector<std::vector<bool>>& fills_for(int len) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<bool>>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(len);
  if (inserted) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<bool> w(len);
      for (int k = 0; k < len; ++k) w[k] = (bits >> k) & 1U;
      if (valid_fill(w)) it->second.push_back(std::move(w));
    }
  }
  return it->second;
}

}  // namespace

std::vector<PatternClass> enumerate_proper(int n, std::optional<int> mu_value, int bound) {
  if (n <= 0 || n % 2 != 0) throw InputError("pattern length must be even and positive");
  if (n > bound) {
    throw ResourceError("pattern length " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  std::set<PatternClass> found;
  auto keep = [&](const Pattern& p) {
    if (!mu_value || mu(p) == *mu_value) found.insert(PatternClass(p));
  };
  const std::uint64_t full = low_bits(n);
  for (std::uint64_t top = 0; top <= full; ++top) {
    if (is_cyclic_nice_run(top, n)) keep(Pattern(n, top, full));
  }
  for (std::uint64_t bottom = 0; bottom < full; ++bottom) {
    if (!is_cyclic_run(bottom, n)) continue;
    std::vector<RowGroup> wide;
    for (auto g : row_groups(bottom, n)) {
      if (g.length >= 4) wide.push_back(g);
    }
    // Odometer over the admissible fill of each wide block.
    std::vector<std::size_t> choice(wide.size(), 0);
    while (true) {
      std::uint64_t top = 0;
      for (std::size_t b = 0; b < wide.size(); ++b) {
        const auto& w = fills_for(wide[b].length)[choice[b]];
        for (int k = 0; k < wide[b].length; ++k) {
          if (w[k]) top |= std::uint64_t{1} << ((wide[b].start + k) % n);
        }
      }
      keep(Pattern(n, top, bottom));
      std::size_t b = 0;
      while (b < wide.size() && ++choice[b] == fills_for(wide[b].length).size()) choice[b++] = 0;
      if (b == wide.size()) break;
    }
  }
  return {found.begin(), found.end()};
}

BigInt SignedPatternCombo::coefficient(const Pattern& p) const {
  const PatternClass cls(p);
  for (const auto& [c, coeff] : terms) {
    if (c == cls) return coeff;
  }
  return 0;
}

SignedPatternCombo initial_patterns(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("initial patterns need an even length >= 2");
  if (n > kMaxTransferWidth) throw ResourceError("initial pattern length exceeds transfer bound");
  const int half = n / 2;
  const Pattern ones = Pattern::all_ones(n);
  std::map<PatternClass, BigInt> grouped;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << half); ++choice) {
    // Bit j set: N at column 2j, otherwise V. The writes commute.
    std::uint64_t top = ones.top();
    std::uint64_t bottom = ones.bottom();
    for (int j = 0; j < half; ++j) {
      const int col = 2 * j;
      top &= ~(std::uint64_t{1} << col);
      if ((choice >> j) & 1U) {
        top &= ~(std::uint64_t{1} << ((col + 1) % n));
        top &= ~(std::uint64_t{1} << ((col + n - 1) % n));
        bottom &= ~(std::uint64_t{1} << col);
      }
    }
    const int sign = std::popcount(choice) % 2 ? -1 : 1;
    grouped[PatternClass(Pattern(n, top, bottom))] += sign;
  }
  SignedPatternCombo combo;
  for (auto& [cls, coeff] : grouped) {
    if (coeff != 0) combo.terms.emplace_back(cls, coeff);
  }
  return combo;
}

}  // namespace hsq
