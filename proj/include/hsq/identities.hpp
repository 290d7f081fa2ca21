#pragma once

#include <string>
#include <vector>

#include "hsq/bigint.hpp"
#include "hsq/witten.hpp"

namespace hsq {

/// Z(G_k) = sign * Z(G_{k - shift}) along one varying grid dimension.
struct IndexIdentity {
  std::string name;       // e.g. "Z(P_1 x C_n) = -Z(P_1 x C_{n-3})"
  GridFamily family;
  bool vary_columns;      // true: n varies with m = fixed; false: m varies with n = fixed
  int fixed;
  int shift;
  int sign;

  GridSpec instance(int k) const;
  GridSpec reduced(int k) const;
  /// Smallest k checked. When the varying factor is a cycle, C_0 is excluded
  /// on the reduced side (the identities start at C_1).
  int first_index() const;
};

/// The ten suspension identities on indices: cylinders, free grids, C_3 x C_n.
const std::vector<IndexIdentity>& index_identities();

struct IdentityCheck {
  const IndexIdentity* identity;
  GridSpec lhs;
  GridSpec rhs;
  BigInt lhs_value;
  BigInt rhs_value;
  bool passed;
};

/// Every instance with the varying dimension up to max_m (rows) or max_n (columns).
std::vector<IdentityCheck> verify_index_identities(int max_m, int max_n);

}  // namespace hsq
