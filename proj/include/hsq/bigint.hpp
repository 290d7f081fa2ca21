#pragma once

#include <gmpxx.h>

#include <string>

namespace hsq {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace hsq
