#include "hsq/transfer.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hsq/errors.hpp"

namespace hsq {

namespace {

struct Overflow {};

inline void add_to(std::int64_t& acc, std::int64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) throw Overflow{};
}
inline void add_to(BigInt& acc, const BigInt& x) { acc += x; }

inline std::int64_t negated(std::int64_t x) {
  if (x == INT64_MIN) throw Overflow{};
  return -x;
}
inline BigInt negated(const BigInt& x) { return -x; }

inline BigInt widen(std::int64_t x) {
  BigInt out;
  mpz_set_si(out.get_mpz_t(), x);
  return out;
}
inline BigInt widen(const BigInt& x) { return x; }

// Independent subsets of P_width (cyclic = false) or C_width (cyclic = true).
// Bit i adjacent to bit (i+1) mod width; for width 1 that is a loop and for
// width 2 the single edge {0,1}, matching C_1 and C_2 = P_2.
std::vector<std::uint64_t> independent_row_states(int width, bool cyclic) {
  std::vector<std::uint64_t> out;
  if (width == 0) return {0};
  auto conflicts = [&](std::uint64_t s) {
    for (int i = 0; i < width; ++i) {
      if (!((s >> i) & 1U)) continue;
      if (i + 1 < width && ((s >> (i + 1)) & 1U)) return true;
      if (cyclic && i + 1 == width && (s & 1U)) return true;
    }
    return false;
  };
  // Grow left to right, never placing adjacent bits, then filter the wrap.
  std::vector<std::uint64_t> partial{0};
  for (int i = 0; i < width; ++i) {
    std::vector<std::uint64_t> next;
    next.reserve(partial.size() * 2);
    for (auto s : partial) {
      next.push_back(s);
      if (i == 0 || !((s >> (i - 1)) & 1U)) next.push_back(s | (std::uint64_t{1} << i));
    }
    partial = std::move(next);
  }
  for (auto s : partial) {
    if (!conflicts(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

RowTransfer::RowTransfer(int width, bool cyclic) : width_(width), cyclic_(cyclic) {
  states_ = independent_row_states(width, cyclic);
  negative_.resize(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    negative_[i] = (std::popcount(states_[i]) % 2) == 1;
  }
  compat_offset_.reserve(states_.size() + 1);
  compat_offset_.push_back(0);
  for (std::size_t t = 0; t < states_.size(); ++t) {
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if ((states_[s] & states_[t]) == 0) compat_.push_back(static_cast<std::uint32_t>(s));
    }
    compat_offset_.push_back(static_cast<std::uint32_t>(compat_.size()));
  }
}

const RowTransfer& RowTransfer::get(int width, bool cyclic) {
  if (width < 0) throw InputError("negative row width");
  if (width > kMaxTransferWidth) {
    throw ResourceError("row width " + std::to_string(width) + " exceeds transfer bound " +
                        std::to_string(kMaxTransferWidth));
  }
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::unique_ptr<RowTransfer>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{width, cyclic}];
  if (!slot) slot.reset(new RowTransfer(width, cyclic));
  return *slot;
}

std::uint64_t RowTransfer::full_mask() const {
  return width_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
}

template <class Num>
std::vector<Num> RowTransfer::run_series(std::span<const std::uint64_t> leading_masks,
                                         int total_rows) const {
  const std::size_t count = states_.size();
  std::vector<Num> out;
  out.reserve(static_cast<std::size_t>(total_rows) + 1);
  out.emplace_back(1);
  if (total_rows <= 0) return out;

  auto allowed = [&](int row, std::size_t t) {
    if (row >= static_cast<int>(leading_masks.size())) return true;
    return (states_[t] & ~leading_masks[row]) == 0;
  };

  std::vector<Num> current(count, Num(0));
  std::vector<Num> next(count, Num(0));
  Num total(0);
  for (std::size_t t = 0; t < count; ++t) {
    if (!allowed(0, t)) continue;
    current[t] = negative_[t] ? Num(-1) : Num(1);
    add_to(total, current[t]);
  }
  out.push_back(total);

  for (int row = 1; row < total_rows; ++row) {
    total = Num(0);
    for (std::size_t t = 0; t < count; ++t) {
      Num acc(0);
      if (allowed(row, t)) {
        for (auto k = compat_offset_[t]; k < compat_offset_[t + 1]; ++k) {
          add_to(acc, current[compat_[k]]);
        }
        if (negative_[t]) acc = negated(acc);
      }
      add_to(total, acc);
      next[t] = std::move(acc);
    }
    std::swap(current, next);
    out.push_back(total);
  }
  return out;
}

std::vector<BigInt> RowTransfer::series(std::span<const std::uint64_t> leading_masks,
                                        int total_rows) const {
  std::vector<BigInt> out;
  try {
    for (auto x : run_series<std::int64_t>(leading_masks, total_rows)) out.push_back(widen(x));
  } catch (const Overflow&) {
    out = run_series<BigInt>(leading_masks, total_rows);
  }
  return out;
}

template <class Num>
Num RowTransfer::run_trace(int rows) const {
  const std::size_t count = states_.size();
  Num result(0);
  std::vector<Num> current(count), next(count);
  for (std::size_t start = 0; start < count; ++start) {
    if (rows == 1) {
      // A single cyclic row is joined to itself: only the empty state survives.
      if (states_[start] == 0) add_to(result, Num(1));
      continue;
    }
    std::fill(current.begin(), current.end(), Num(0));
    current[start] = negative_[start] ? Num(-1) : Num(1);
    for (int row = 1; row < rows; ++row) {
      for (std::size_t t = 0; t < count; ++t) {
        Num acc(0);
        for (auto k = compat_offset_[t]; k < compat_offset_[t + 1]; ++k) {
          add_to(acc, current[compat_[k]]);
        }
        next[t] = negative_[t] ? negated(acc) : std::move(acc);
      }
      std::swap(current, next);
    }
    for (auto k = compat_offset_[start]; k < compat_offset_[start + 1]; ++k) {
      add_to(result, current[compat_[k]]);
    }
  }
  return result;
}

BigInt RowTransfer::cyclic_trace(int rows) const {
  if (rows < 1) throw InputError("cyclic trace needs at least one row");
  try {
    return widen(run_trace<std::int64_t>(rows));
  } catch (const Overflow&) {
    return run_trace<BigInt>(rows);
  }
}

}  // namespace hsq
