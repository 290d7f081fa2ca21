#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hsq/errors.hpp"
#include "hsq/pattern.hpp"
#include "hsq/witten.hpp"

using namespace hsq;

namespace {

Pattern P(const char* text) { return Pattern::parse(text); }

bool same_class(const Pattern& a, const Pattern& b) { return PatternClass(a) == PatternClass(b); }

// Every pattern of length n satisfying the column constraint (3^n of them).
std::vector<Pattern> all_patterns(int n) {
  std::vector<Pattern> out;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t bottom = 0; bottom <= full; ++bottom) {
    for (std::uint64_t top = bottom;; top = (top - 1) & bottom) {
      out.emplace_back(n, top, bottom);
      if (top == 0) break;
    }
  }
  return out;
}

std::vector<Pattern> proper_patterns_up_to(int n) {
  std::vector<Pattern> out;
  for (int len = 2; len <= n; len += 2) {
    for (const auto& p : all_patterns(len)) {
      if (is_proper(p)) out.push_back(p);
    }
  }
  return out;
}

bool contains_cyclic(std::uint64_t row, int n, const std::string& word) {
  const int len = static_cast<int>(word.size());
  for (int s = 0; s < n; ++s) {
    bool match = true;
    for (int k = 0; k < len && match; ++k) {
      match = (((row >> ((s + k) % n)) & 1U) != 0) == (word[k] == '1');
    }
    if (match) return true;
  }
  return false;
}

const Pattern kA = P("010101 / 111111");
const Pattern kB = P("010000 / 111101");
const Pattern kC = P("000000 / 110101");
const Pattern kD = P("000000 / 010101");
const Pattern kE = P("101110 / 111111");

}  // namespace

TEST_CASE("pattern text round-trip and validation", "[pattern]") {
  const auto p = P("101000 / 111101");
  CHECK(p.to_string() == "101000 / 111101");
  CHECK(Pattern::parse("101000\n111101") == p);
  CHECK(p.top(0));
  CHECK_FALSE(p.top(1));
  CHECK(p.bottom(-1));
  CHECK_THROWS_AS(P("10 / 01"), InputError);
  CHECK_THROWS_AS(P("101 / 111"), InputError);
  CHECK_THROWS_AS(P("1010 / 111"), InputError);
  CHECK_THROWS_AS(P("10x0 / 1111"), InputError);
}

TEST_CASE("masked graphs", "[pattern]") {
  const auto g = masked_graph(P("101000 / 111101"), 4);
  CHECK(g.vertex_count() == 19);
  // Row 1 keeps (1,0) and (1,2), each attached to the vertex below; row 2
  // keeps a path of five joined to row 3; rows 3, 4 are full cycles.
  CHECK(g.edge_count() == 2 + 4 + 5 + 6 + 6 + 6);

  CHECK(masked_graph(Pattern::all_ones(6), 3) == build_grid({GridFamily::kCylinder, 3, 6}));
  CHECK(masked_graph(P("0000 / 1111"), 2).vertex_count() == 4);
  CHECK(masked_graph(P("0000 / 1111"), 2) == build_grid({GridFamily::kCylinder, 1, 4}));
  CHECK_THROWS_AS(masked_graph(kA, 1), InputError);
  CHECK_THROWS_AS(z_pattern(kA, 1), InputError);
}

TEST_CASE("z_pattern agrees with brute force on every small pattern", "[pattern]") {
  for (int n : {2, 4, 6}) {
    for (const auto& p : all_patterns(n)) {
      const auto series = pattern_series(p, 4);
      CHECK(series[0] == 0);
      CHECK(series[1] == 0);
      for (int m = 2; m <= 4; ++m) {
        INFO(p.to_string() << " m=" << m);
        CHECK(series[m] == witten_brute(masked_graph(p, m)));
        CHECK(z_pattern(p, m) == series[m]);
      }
    }
  }
  CHECK(z_pattern(Pattern::all_ones(6), 4) == 4);
}

TEST_CASE("canonical classes", "[pattern]") {
  for (const auto& p : all_patterns(6)) {
    const auto c = canonicalize(p);
    CHECK(canonicalize(c) == c);
    CHECK(c.to_string() <= p.to_string());
    for (int m = 2; m <= 4; ++m) CHECK(z_pattern(c, m) == z_pattern(p, m));
  }
  // Shift by one and reflection land in the same class.
  CHECK(same_class(P("010000 / 111101"), P("001000 / 111110")));
  CHECK(same_class(P("010000 / 111101"), P("000010 / 101111")));
  CHECK_FALSE(same_class(kA, kE));
  CHECK(canonicalize(P("100000 / 100000")) == P("000001 / 000001"));
}

TEST_CASE("row structure predicates", "[pattern]") {
  CHECK(is_cyclic_run(0b010111, 6));
  CHECK(is_cyclic_run(0b101010, 6));
  CHECK_FALSE(is_cyclic_run(0, 6));
  CHECK_FALSE(is_cyclic_run(0b111111, 6));
  CHECK_FALSE(is_cyclic_run(0b011011, 6));  // groups of length 2
  CHECK_FALSE(is_cyclic_run(0b000101, 6));  // a double zero
  CHECK(is_cyclic_nice_run(0b011101, 6));
  CHECK(is_cyclic_run(0b11110111, 8));
  CHECK_FALSE(is_cyclic_nice_run(0b11110111, 8));

  const auto groups = row_groups(0b100111, 6);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].start == 5);
  CHECK(groups[0].length == 4);
}

TEST_CASE("operations V, N and R on the length-6 example", "[pattern]") {
  // The middle of the top-row block of E is column 3.
  CHECK(op_V(kE, 3) == P("101010 / 111111"));
  CHECK(same_class(op_V(kE, 3), kA));
  CHECK(same_class(op_N(kE, 3), kB));
  CHECK_THROWS_AS(op_V(kE, 1), RuleInapplicable);
  CHECK_THROWS_AS(op_N(kE, 5), RuleInapplicable);
  CHECK(op_V(op_V(kA, 1), 3) == op_V(op_V(kA, 3), 1));

  auto a = op_R(kA);
  CHECK(same_class(a.pattern, kD));
  CHECK(a.sign == -1);
  auto d = op_R(kD);
  CHECK(same_class(d.pattern, kA));
  CHECK(d.sign == 1);
  auto c = op_R(kC);
  CHECK(same_class(c.pattern, kE));
  CHECK(c.sign == 1);

  int sign = 1;
  Pattern b = kB;
  for (int step = 0; step < 3; ++step) {
    auto r = op_R(b);
    sign *= r.sign;
    b = r.pattern;
  }
  CHECK(same_class(b, kE));
  CHECK(sign == -1);
  for (int m = 5; m <= 10; ++m) CHECK(z_pattern(kB, m) == -z_pattern(kE, m - 3));

  CHECK_FALSE(is_reducible(kE));
  CHECK_THROWS_AS(op_R(kE), RuleInapplicable);
}

TEST_CASE("proper patterns and mu", "[pattern]") {
  for (const char* text : {"0101000000 / 1111101110", "1011101110 / 1111111111",
                           "0011100000 / 1111111010", "0010111000 / 1111111110"}) {
    INFO(text);
    CHECK(is_proper(P(text)));
    CHECK(mu(P(text)) == 2);
  }
  CHECK(mu(kA) == 0);
  CHECK(mu(kB) == 1);
  CHECK(mu(kC) == 1);
  CHECK(mu(kD) == 0);
  CHECK(mu(kE) == 1);

  for (int n : {4, 8, 12}) {
    Pattern p1(n, 0, 0);
    Pattern p2(n, 0, 0);
    std::uint64_t alt = 0;
    for (int i = 0; i < n; i += 2) alt |= std::uint64_t{1} << i;
    p1 = Pattern(n, alt, (std::uint64_t{1} << n) - 1);
    p2 = Pattern(n, 0, alt);
    CHECK(is_proper(p1));
    CHECK(is_proper(p2));
    CHECK(mu(p1) == 0);
    CHECK(mu(p2) == 0);
    // Both satisfy Z(m) = (-1)^{n/2} Z(m-2).
    const int s = (n / 2) % 2 ? -1 : 1;
    for (int m = 4; m <= 9; ++m) {
      CHECK(z_pattern(p1, m) == s * z_pattern(p1, m - 2));
      CHECK(z_pattern(p2, m) == s * z_pattern(p2, m - 2));
    }
  }

  // Misplaced run inside a wide block, bad right end, and a run over a short block.
  CHECK_FALSE(is_proper(P("1010000000 / 1111101110")));
  CHECK_FALSE(is_proper(P("0101100000 / 1111101110")));
  CHECK_FALSE(is_proper(P("0100000000 / 1110101110")));
  CHECK_FALSE(is_proper(P("0000 / 0000")));
  CHECK_THROWS_AS(mu(P("1010000000 / 1111101110")), InputError);
}

TEST_CASE("enumeration of proper classes", "[pattern]") {
  for (int n = 2; n <= 12; n += 2) {
    std::set<PatternClass> brute;
    for (const auto& p : all_patterns(n)) {
      if (is_proper(p)) brute.insert(PatternClass(p));
    }
    const auto listed = enumerate_proper(n);
    INFO("n=" << n);
    CHECK(std::set<PatternClass>(listed.begin(), listed.end()) == brute);
    CHECK(std::is_sorted(listed.begin(), listed.end()));
    int max_mu = 0;
    for (const auto& c : listed) {
      CHECK(is_proper(c.canonical()));
      max_mu = std::max(max_mu, mu(c.canonical()));
    }
    CHECK(4 * max_mu <= n);
    if (n >= 4) CHECK(enumerate_proper(n, 0).size() == 2);
  }
  for (const auto& c : enumerate_proper(6)) CHECK(mu(c.canonical()) <= 1);
  CHECK_FALSE(enumerate_proper(16, 4).empty());
  CHECK_THROWS_AS(enumerate_proper(18), ResourceError);
  CHECK_THROWS_AS(enumerate_proper(7), InputError);
}

TEST_CASE("initial patterns", "[pattern]") {
  const auto six = initial_patterns(6);
  REQUIRE(six.terms.size() == 4);
  CHECK(six.coefficient(kA) == 1);
  CHECK(six.coefficient(kB) == -3);
  CHECK(six.coefficient(kC) == 3);
  CHECK(six.coefficient(kD) == -1);
  CHECK(six.coefficient(kE) == 0);

  BigInt sum = 0;
  for (const auto& [cls, coeff] : six.terms) sum += coeff * z_pattern(cls.canonical(), 4);
  CHECK(sum == 4);

  for (int n = 2; n <= 14; n += 2) {
    const auto combo = initial_patterns(n);
    const auto full = column_series(n, 9);
    for (int m = 2; m <= 9; ++m) {
      BigInt total = 0;
      for (const auto& [cls, coeff] : combo.terms) {
        CHECK(coeff != 0);
        total += coeff * z_pattern(cls.canonical(), m);
      }
      CHECK(total == full[m]);
    }
    for (const auto& [cls, coeff] : combo.terms) {
      CHECK(is_proper(cls.canonical()));
      CHECK(is_reducible(cls.canonical()));
    }
  }
}

TEST_CASE("pattern operations on all proper patterns up to length 8", "[pattern][property]") {
  for (const auto& p : proper_patterns_up_to(8)) {
    INFO(p.to_string());
    const int n = p.length();
    const auto base = pattern_series(p, 8);

    for (int i = 0; i < n; ++i) {
      if (!p.top(i)) continue;
      const auto v = pattern_series(op_V(p, i), 8);
      const auto nn = pattern_series(op_N(p, i), 8);
      for (int m = 2; m <= 8; ++m) CHECK(base[m] == v[m] - nn[m]);
    }

    if (is_reducible(p)) {
      const auto r = op_R(p);
      const auto shifted = pattern_series(r.pattern, 8);
      for (int m = 3; m <= 8; ++m) CHECK(base[m] == r.sign * shifted[m - 1]);
      CHECK(is_proper(r.pattern));
      CHECK(mu(r.pattern) == mu(p));
    } else {
      for (auto g : row_groups(p.top(), n)) {
        if (g.length != 3) continue;
        const int mid = g.start + 1;
        const auto pv = op_V(p, mid);
        const auto pn = op_N(p, mid);
        CHECK(is_proper(pv));
        CHECK(is_proper(pn));
        CHECK(mu(pv) == mu(p) - 1);
        CHECK(mu(pn) == mu(p));
      }
    }

    for (std::uint64_t row : {p.top(), p.bottom()}) {
      CHECK_FALSE(contains_cyclic(row, n, "0110"));
      CHECK_FALSE(contains_cyclic(row, n, "1001"));
    }
  }
}

TEST_CASE("V then N identity on random larger proper patterns", "[pattern][property]") {
  std::mt19937_64 rng(11);
  for (int n : {10, 12, 14}) {
    const auto classes = enumerate_proper(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto& p = classes[rng() % classes.size()].canonical();
      const auto base = pattern_series(p, 8);
      for (int i = 0; i < n; ++i) {
        if (!p.top(i)) continue;
        const auto v = pattern_series(op_V(p, i), 8);
        const auto nn = pattern_series(op_N(p, i), 8);
        for (int m = 2; m <= 8; ++m) CHECK(base[m] == v[m] - nn[m]);
      }
    }
  }
}
