#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsq/bigint.hpp"

namespace hsq {

/// Largest ring/row width the transfer kernels are built for.
inline constexpr int kMaxTransferWidth = 18;

/// Signed transfer recursion over the independent subsets of one row.
///
/// A row is either a path P_width or a ring C_width (with the degenerate cycle
/// conventions). States are bitmasks; a state contributes (-1)^popcount, and
/// consecutive rows must use disjoint states. Kernels are built once per
/// (width, cyclic) and shared; they are immutable after construction.
///
/// Arithmetic runs in checked 64-bit integers and transparently restarts in
/// arbitrary precision on overflow.
class RowTransfer {
 public:
  static const RowTransfer& get(int width, bool cyclic);

  int width() const { return width_; }
  std::size_t state_count() const { return states_.size(); }
  std::span<const std::uint64_t> states() const { return states_; }

  /// Z of the first m rows for m = 0..total_rows. Row r (0-based) only keeps
  /// the vertices in leading_masks[r] while r < leading_masks.size(); later
  /// rows are complete.
  std::vector<BigInt> series(std::span<const std::uint64_t> leading_masks,
                             int total_rows) const;

  /// Z of `rows` rows closed cyclically (rows >= 1), i.e. a torus C_rows x row.
  BigInt cyclic_trace(int rows) const;

  std::uint64_t full_mask() const;

 private:
  RowTransfer(int width, bool cyclic);

  template <class Num>
  std::vector<Num> run_series(std::span<const std::uint64_t> leading_masks,
                              int total_rows) const;
  template <class Num>
  Num run_trace(int rows) const;

  int width_;
  bool cyclic_;
  std::vector<std::uint64_t> states_;
  std::vector<bool> negative_;  // odd popcount
  // compat_[compat_offset_[t] .. compat_offset_[t+1]) = states disjoint from t
  std::vector<std::uint32_t> compat_offset_;
  std::vector<std::uint32_t> compat_;
};

}  // namespace hsq
