#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hsq/pattern.hpp"
#include "hsq/poly.hpp"

namespace hsq {

/// A stone at an integer point of the circle with a tangent vector in
/// {-2, -1, 1, 2}; positive vectors point clockwise (increasing position).
struct Stone {
  int pos;
  int vec;
  auto operator<=>(const Stone&) const = default;
};

/// 2k stones on a circle of even length n, kept sorted by position.
class Necklace {
 public:
  /// Positions are taken mod n. Rejects odd n, an odd or zero number of
  /// stones, shared positions and vectors outside {-2, -1, 1, 2}.
  Necklace(int n, std::vector<Stone> stones);

  int n() const { return n_; }
  int k() const { return static_cast<int>(stones_.size()) / 2; }
  const std::vector<Stone>& stones() const { return stones_; }
  /// Clockwise distance from stone i to stone i+1 (cyclically).
  int gap(int i) const;

  /// "n=6: 0:+1 3:-1"
  std::string to_string() const;
  auto operator<=>(const Necklace&) const = default;

 private:
  int n_;
  std::vector<Stone> stones_;
};

/// Alternating directions; facing-away gaps odd; facing-towards gaps at
/// least 3 with gap + |p| + |q| odd, and both vectors of length 1 at gap 3.
bool is_valid(const Necklace& necklace);

/// JUMP, TURN, FIX.
Necklace transform_T(const Necklace& necklace);
/// Length swap for stones not facing a stone at distance 3, jump, reverse.
Necklace transform_T_inverse(const Necklace& necklace);

/// Least rotation/reflection image, with a stone at position 0. Reflection
/// negates positions and vectors.
Necklace canonicalize(const Necklace& necklace);

class NecklaceClass {
 public:
  explicit NecklaceClass(const Necklace& any) : canonical_(canonicalize(any)) {}
  const Necklace& canonical() const { return canonical_; }
  auto operator<=>(const NecklaceClass&) const = default;

 private:
  Necklace canonical_;
};

inline constexpr int kDefaultNecklaceBound = 28;
inline constexpr int kExtendedNecklaceBound = 36;

/// All classes of (k, n)-necklaces, sorted. Empty unless 1 <= k <= n/4.
std::vector<NecklaceClass> enumerate_necklaces(int k, int n, int bound = kDefaultNecklaceBound);

/// Cycle lengths of N -> TN with their multiplicities.
struct CycleDecomposition {
  std::map<int, int> cycles;  // length -> count

  int class_count() const;
  /// "2^1 3^2 6^1"; empty string for no cycles.
  std::string to_string() const;
  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycle_decomposition(int k, int n, int bound = kDefaultNecklaceBound);
/// Lcm of the cycle lengths of Neck(i, n), 1 <= i <= n/4.
long g_value(int i, int n, int bound = kDefaultNecklaceBound);

struct CyclePeriodFailure {
  int k;
  int n;
  int cycle_length;
  Necklace witness;
};

struct CyclePeriodReport {
  int n_max = 0;
  long classes_checked = 0;
  std::vector<CyclePeriodFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// For every even n <= n_max and every k: each cycle length divides n - 3k.
CyclePeriodReport verify_cycle_periods(int n_max, int bound = kDefaultNecklaceBound);

/// Second row: a block between stones facing each other, 010..10 between
/// stones facing away. First row: zeros over length-3 blocks, otherwise
/// 101..01 leaving |vector| zeros at each end.
Pattern map_U(const Necklace& necklace);
/// Inverse of map_U on reducible proper patterns with mu >= 1.
Necklace map_Q(const Pattern& p);
/// N at the middle of every top-row block.
Pattern map_S(const Pattern& p);

struct CorrespondenceReport {
  int n_max = 0;
  long classes_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// For every class with n <= n_max: Q(U(N)) = N, mu(U(N)) = k and
/// U(T(N)) = S(U(N)^R), all compared as classes.
CorrespondenceReport check_correspondence(int n_max, int bound = kDefaultNecklaceBound);

/// (1 - (-1)^{n/2} t^2) * prod_{i=1..k} (1 - t^{2 g(i, n)}): a common
/// denominator for every proper pattern of length n with mu = k.
IntPoly necklace_denominator_bound(int n, int k, int bound = kDefaultNecklaceBound);

nlohmann::json to_json(const Necklace& necklace);
/// Functional graph of T on the classes of (k, n)-necklaces.
std::string to_dot(int k, int n, int bound = kDefaultNecklaceBound);

}  // namespace hsq
