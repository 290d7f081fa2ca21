#include "hsq/identities.hpp"

namespace hsq {

GridSpec IndexIdentity::instance(int k) const {
  return vary_columns ? GridSpec{family, fixed, k} : GridSpec{family, k, fixed};
}

GridSpec IndexIdentity::reduced(int k) const { return instance(k - shift); }

int IndexIdentity::first_index() const {
  const bool cyclic_varying =
      family == GridFamily::kTorus || (family == GridFamily::kCylinder && vary_columns);
  return cyclic_varying ? shift + 1 : shift;
}

const std::vector<IndexIdentity>& index_identities() {
  using enum GridFamily;
  // Sigma^j flips the sign of Z j times.
  static const std::vector<IndexIdentity> all = {
      {"Z(P_1 x C_n) = -Z(P_1 x C_{n-3})", kCylinder, true, 1, 3, -1},
      {"Z(P_2 x C_n) = Z(P_2 x C_{n-4})", kCylinder, true, 2, 4, 1},
      {"Z(P_3 x C_n) = Z(P_3 x C_{n-8})", kCylinder, true, 3, 8, 1},
      {"Z(P_m x C_3) = Z(P_{m-3} x C_3)", kCylinder, false, 3, 3, 1},
      {"Z(P_m x C_5) = Z(P_{m-2} x C_5)", kCylinder, false, 5, 2, 1},
      {"Z(P_m x C_7) = Z(P_{m-4} x C_7)", kCylinder, false, 7, 4, 1},
      {"Z(P_1 x P_n) = -Z(P_1 x P_{n-3})", kFree, true, 1, 3, -1},
      {"Z(P_2 x P_n) = -Z(P_2 x P_{n-2})", kFree, true, 2, 2, -1},
      {"Z(P_3 x P_n) = -Z(P_3 x P_{n-4})", kFree, true, 3, 4, -1},
      {"Z(C_3 x C_n) = Z(C_3 x C_{n-3})", kTorus, true, 3, 3, 1},
  };
  return all;
}

std::vector<IdentityCheck> verify_index_identities(int max_m, int max_n) {
  std::vector<IdentityCheck> out;
  for (const auto& id : index_identities()) {
    const int last = id.vary_columns ? max_n : max_m;
    for (int k = id.first_index(); k <= last; ++k) {
      IdentityCheck check{&id, id.instance(k), id.reduced(k), 0, 0, false};
      check.lhs_value = witten_transfer(check.lhs);
      check.rhs_value = witten_transfer(check.rhs);
      check.passed = check.lhs_value == id.sign * check.rhs_value;
      out.push_back(std::move(check));
    }
  }
  return out;
}

}  // namespace hsq
