#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/graph.hpp"

namespace hsq {

/// 2 x n binary mask over the first two rows of P_m x C_n.
///
/// Columns are cyclic (0..n-1); bit i of a row mask is column i. A one in the
/// top row always sits over a one in the bottom row. The length is even.
class Pattern {
 public:
  static constexpr int kMaxLength = 62;

  Pattern(int length, std::uint64_t top, std::uint64_t bottom);

  /// Two 0/1 strings of equal length, column 0 first.
  static Pattern from_rows(std::string_view top, std::string_view bottom);
  /// "101000 / 111101", or the two rows on separate lines.
  static Pattern parse(std::string_view text);
  static Pattern all_ones(int length);

  int length() const { return length_; }
  std::uint64_t top() const { return top_; }
  std::uint64_t bottom() const { return bottom_; }
  bool top(int col) const { return (top_ >> wrap(col)) & 1U; }
  bool bottom(int col) const { return (bottom_ >> wrap(col)) & 1U; }
  int wrap(int col) const { return ((col % length_) + length_) % length_; }

  /// "101000 / 111101"
  std::string to_string() const;

  auto operator<=>(const Pattern&) const = default;

 private:
  int length_;
  std::uint64_t top_;
  std::uint64_t bottom_;
};

/// Maximal cyclic group of consecutive ones in a row.
struct RowGroup {
  int start;
  int length;
};

/// Groups of a row that is neither all zeros nor all ones, in cyclic order
/// starting after some zero. Empty for an all-zero row; a single group of the
/// full length for an all-ones row.
std::vector<RowGroup> row_groups(std::uint64_t row, int length);

/// Singletons and blocks (>= 3 ones) separated by single zeros around the whole
/// cycle. All-zero and all-ones rows are not runs.
bool is_cyclic_run(std::uint64_t row, int length);
/// A cyclic run whose blocks all have length 3.
bool is_cyclic_nice_run(std::uint64_t row, int length);

/// Lexicographically least image under the 2n rotations and reflections,
/// comparing the top row followed by the bottom row, column 0 first.
Pattern canonicalize(const Pattern& p);

/// A pattern identified with its cyclic shifts and reflections.
class PatternClass {
 public:
  explicit PatternClass(const Pattern& any) : canonical_(canonicalize(any)) {}
  const Pattern& canonical() const { return canonical_; }
  auto operator<=>(const PatternClass&) const = default;

 private:
  Pattern canonical_;
};

/// P_m x C_n with the masked vertices of rows 1 and 2 removed (m >= 2).
Graph masked_graph(const Pattern& p, int m);
/// Z(G(P; m)), m >= 2.
BigInt z_pattern(const Pattern& p, int m);
/// Z(P; m) for m = 0..max_m, with the entries for m < 2 set to zero.
std::vector<BigInt> pattern_series(const Pattern& p, int max_m);

/// Clears top[i]. Requires top[i] = 1.
Pattern op_V(const Pattern& p, int i);
/// Clears top[i-1], top[i], top[i+1] and bottom[i]. Requires top[i] = 1.
Pattern op_N(const Pattern& p, int i);

/// Every one in the top row is a singleton (an all-zero top row qualifies).
bool is_reducible(const Pattern& p);

struct RowShift {
  Pattern pattern;
  int sign;  // (-1)^(ones in the top row)
};

/// Pushes the mask one row down: Z(P; m) = sign * Z(P^R; m - 1) for m >= 3.
RowShift op_R(const Pattern& p);

bool is_proper(const Pattern& p);
/// Number of blocks in both rows. Proper patterns only.
int mu(const Pattern& p);

inline constexpr int kDefaultProperBound = 16;

/// Classes of proper patterns of length n, optionally with the given mu, sorted.
std::vector<PatternClass> enumerate_proper(int n, std::optional<int> mu_value = std::nullopt,
                                      int bound = kDefaultProperBound);

/// Integer combination of pattern classes, sorted by class, no zero terms.
struct SignedPatternCombo {
  std::vector<std::pair<PatternClass, BigInt>> terms;

  BigInt coefficient(const Pattern& p) const;
};

/// V or N at every even column of the all-ones pattern, signed (-1)^{#N} and
/// grouped by class: sum coeff * Z(P; m) = Z(P_m x C_n) for m >= 2.
SignedPatternCombo initial_patterns(int n);

}  // namespace hsq
