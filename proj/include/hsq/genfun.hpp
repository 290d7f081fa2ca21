#pragma once

#include <optional>
#include <vector>

#include "hsq/pattern.hpp"
#include "hsq/poly.hpp"

namespace hsq {

/// Z(P; m) = self_sign * Z(P; m - self_shift) + sum sign * Z(R; m - shift)
/// for every m >= valid_from, where each R has smaller mu than P.
struct Recurrence {
  struct SideTerm {
    PatternClass pattern;
    int sign;
    int shift;
  };

  int self_shift = 0;
  int self_sign = 1;
  std::vector<SideTerm> side_terms;
  int valid_from = 2;
};

inline constexpr int kDefaultGenfunBound = 12;

/// sum_{m >= 2} Z(P; m) t^m for a proper pattern, solved through the chain of
/// R and N successors and checked against directly computed terms.
/// Throws ConsistencyError if the solution disagrees with those terms.
RationalGF pattern_gf(const Pattern& p, int bound = kDefaultGenfunBound);

/// The self-recurrence of P when P lies on a cycle of the successor graph.
std::optional<Recurrence> pattern_recurrence(const Pattern& p, int bound = kDefaultGenfunBound);

/// f_n(t) = sum_{m >= 0} Z(P_m x C_n) t^m for even n, assembled from the
/// initial patterns and confirmed by an independent recurrence fit.
RationalGF cylinder_gf(int n, int bound = kDefaultGenfunBound);

/// Every zero of the reduced denominator is a root of unity.
bool check_roots_of_unity(const RationalGF& gf);

struct DenominatorReport {
  int n = 0;
  IntPoly conjectured;  // conjectured denominator D
  bool holds = false;   // f * D is a polynomial
};

/// (1+t^2) prod (1-t^{8c-2-6j}), exponents down to 2c+4, for n = 4c+2;
/// (1-t^2) prod (1-t^{8c-6-6j}), exponents down to 2c+6, for n = 4c.
IntPoly conjectured_denominator(int n);
DenominatorReport check_denominator_conjecture(int n, int bound = kDefaultGenfunBound);

struct MultiplicityReport {
  int n = 0;
  std::vector<std::pair<int, int>> factors;  // (order, multiplicity) of the reduced denominator
  int max_multiplicity = 0;
  bool holds = false;          // simple zeros when n = 2 mod 4, at most double when n = 0 mod 4
  std::optional<long> period;  // least L with den | 1 - t^L, when the zeros are simple
};

MultiplicityReport check_multiplicity_conjecture(int n, int bound = kDefaultGenfunBound);

}  // namespace hsq
