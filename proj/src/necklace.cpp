#include "hsq/necklace.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "hsq/errors.hpp"

namespace hsq {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }
int sign(int v) { return v > 0 ? 1 : -1; }

// Stone i faces clockwise and stone i+1 anticlockwise.
bool faces_next(const Necklace& nk, int i) {
  const auto& s = nk.stones();
  return s[i].vec > 0 && s[(i + 1) % s.size()].vec < 0;
}

void check_bound(int n, int bound) {
  if (bound > kExtendedNecklaceBound) {
    throw ResourceError("necklace bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(kExtendedNecklaceBound));
  }
  if (n > bound) {
    throw ResourceError("necklace circumference " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  }
}

void require_valid(const Necklace& nk) {
  if (!is_valid(nk)) throw InputError("invalid necklace " + nk.to_string());
}

// (gap, vec) pairs read from stone `start`, clockwise or mirrored.
std::vector<int> encoding(const Necklace& nk, int start, bool mirrored) {
  const int m = static_cast<int>(nk.stones().size());
  std::vector<int> code;
  code.reserve(2 * m);
  for (int j = 0; j < m; ++j) {
    if (!mirrored) {
      const int i = (start + j) % m;
      code.push_back(nk.gap(i));
      code.push_back(nk.stones()[i].vec);
    } else {
      const int i = mod(start - j, m);
      code.push_back(nk.gap(mod(i - 1, m)));
      code.push_back(-nk.stones()[i].vec);
    }
  }
  return code;
}

Necklace from_encoding(int n, const std::vector<int>& code) {
  std::vector<Stone> stones;
  int pos = 0;
  for (std::size_t j = 0; j < code.size(); j += 2) {
    stones.push_back({pos, code[j + 1]});
    pos += code[j];
  }
  return Necklace(n, std::move(stones));
}

// Depth-first fill of alternating vectors and gaps with stone 0 clockwise at 0.
void extend(int n, int m, std::vector<int>& code, int used, std::vector<std::vector<int>>& out) {
  const int j = static_cast<int>(code.size()) / 2;
  if (j == m) {
    if (used == n) out.push_back(code);
    return;
  }
  const int dir = j % 2 == 0 ? 1 : -1;
  for (int len : {1, 2}) {
    const int vec = dir * len;
    // Gap from stone j to stone j+1: towards when j is even.
    const int remaining_after = m - j - 1;  // each later gap needs at least 1
    if (dir > 0) {
      for (int gap = 3; used + gap + remaining_after <= n; ++gap) {
        code.push_back(gap);
        code.push_back(vec);
        extend(n, m, code, used + gap, out);
        code.pop_back();
        code.pop_back();
      }
    } else {
      const int p = std::abs(code[code.size() - 1]);
      const int towards = code[code.size() - 2];
      if ((towards + p + len) % 2 == 0) continue;
      if (towards == 3 && (p != 1 || len != 1)) continue;
      for (int gap = 1; used + gap + remaining_after <= n; gap += 2) {
        if (j == m - 1 && used + gap != n) continue;
        code.push_back(gap);
        code.push_back(vec);
        extend(n, m, code, used + gap, out);
        code.pop_back();
        code.pop_back();
      }
    }
  }
}

}  // namespace

Necklace::Necklace(int n, std::vector<Stone> stones) : n_(n), stones_(std::move(stones)) {
  if (n <= 0 || n % 2 != 0) throw InputError("necklace circumference must be even and positive");
  if (stones_.empty() || stones_.size() % 2 != 0) {
    throw InputError("a necklace has a positive even number of stones");
  }
  for (auto& s : stones_) {
    if (s.vec != -2 && s.vec != -1 && s.vec != 1 && s.vec != 2) {
      throw InputError("stone vector must be one of -2, -1, 1, 2");
    }
    s.pos = mod(s.pos, n);
  }
  std::sort(stones_.begin(), stones_.end());
  for (std::size_t i = 1; i < stones_.size(); ++i) {
    if (stones_[i].pos == stones_[i - 1].pos) throw InputError("two stones share a position");
  }
}

int Necklace::gap(int i) const {
  const int m = static_cast<int>(stones_.size());
  const int d = stones_[(i + 1) % m].pos - stones_[i].pos;
  return mod(d - 1, n_) + 1;
}

std::string Necklace::to_string() const {
  std::ostringstream out;
  out << "n=" << n_ << ":";
  for (const auto& s : stones_) out << ' ' << s.pos << ':' << (s.vec > 0 ? "+" : "") << s.vec;
  return out.str();
}

bool is_valid(const Necklace& nk) {
  const int m = static_cast<int>(nk.stones().size());
  const auto& s = nk.stones();
  for (int i = 0; i < m; ++i) {
    const Stone& a = s[i];
    const Stone& b = s[(i + 1) % m];
    if (sign(a.vec) == sign(b.vec)) return false;
    const int d = nk.gap(i);
    if (a.vec > 0) {
      const int p = a.vec, q = -b.vec;
      if (d < 3 || (d + p + q) % 2 == 0) return false;
      if (d == 3 && (p != 1 || q != 1)) return false;
    } else if (d % 2 == 0) {
      return false;
    }
  }
  return true;
}

Necklace transform_T(const Necklace& nk) {
  require_valid(nk);
  std::vector<Stone> moved;
  for (const auto& s : nk.stones()) moved.push_back({s.pos + s.vec, -sign(s.vec) * (3 - std::abs(s.vec))});
  Necklace turned(nk.n(), std::move(moved));
  std::vector<Stone> fixed = turned.stones();
  const int m = static_cast<int>(fixed.size());
  for (int i = 0; i < m; ++i) {
    if (faces_next(turned, i) && turned.gap(i) == 3) {
      fixed[i].vec = 1;
      fixed[(i + 1) % m].vec = -1;
    }
  }
  return Necklace(nk.n(), std::move(fixed));
}

Necklace transform_T_inverse(const Necklace& nk) {
  require_valid(nk);
  const int m = static_cast<int>(nk.stones().size());
  std::vector<bool> locked(m, false);
  for (int i = 0; i < m; ++i) {
    if (faces_next(nk, i) && nk.gap(i) == 3) locked[i] = locked[(i + 1) % m] = true;
  }
  std::vector<Stone> moved;
  for (int i = 0; i < m; ++i) {
    const auto& s = nk.stones()[i];
    const int vec = locked[i] ? s.vec : sign(s.vec) * (3 - std::abs(s.vec));
    moved.push_back({s.pos + vec, -vec});
  }
  return Necklace(nk.n(), std::move(moved));
}

Necklace canonicalize(const Necklace& nk) {
  const int m = static_cast<int>(nk.stones().size());
  std::vector<int> best;
  for (int start = 0; start < m; ++start) {
    for (bool mirrored : {false, true}) {
      auto code = encoding(nk, start, mirrored);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return from_encoding(nk.n(), best);
}

std::vector<NecklaceClass> enumerate_necklaces(int k, int n, int bound) {
  check_bound(n, bound);
  if (n <= 0 || n % 2 != 0) throw InputError("necklace circumference must be even and positive");
  std::vector<NecklaceClass> classes;
  if (k < 1 || 4 * k > n) return classes;
  std::vector<std::vector<int>> codes;
  std::vector<int> code;
  extend(n, 2 * k, code, 0, codes);
  for (const auto& c : codes) {
    const auto nk = from_encoding(n, c);
    if (is_valid(nk)) classes.emplace_back(nk);
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

int CycleDecomposition::class_count() const {
  int total = 0;
  for (const auto& [length, count] : cycles) total += length * count;
  return total;
}

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& [length, count] : cycles) {
    if (!out.empty()) out += ' ';
    out += std::to_string(length) + '^' + std::to_string(count);
  }
  return out;
}

namespace {

// Successor index of every class under T.
std::vector<int> successor_map(const std::vector<NecklaceClass>& classes) {
  std::vector<int> next;
  next.reserve(classes.size());
  std::vector<int> indegree(classes.size(), 0);
  for (const auto& c : classes) {
    const NecklaceClass image(transform_T(c.canonical()));
    const auto it = std::lower_bound(classes.begin(), classes.end(), image);
    if (it == classes.end() || *it != image) {
      throw ConsistencyError("T left the enumerated classes at " + c.canonical().to_string());
    }
    const int j = static_cast<int>(it - classes.begin());
    next.push_back(j);
    ++indegree[j];
  }
  for (int d : indegree) {
    if (d != 1) throw ConsistencyError("T is not a permutation of necklace classes");
  }
  return next;
}

// Length of the cycle through each class.
std::vector<int> cycle_lengths(const std::vector<int>& next) {
  std::vector<int> length(next.size(), 0);
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (length[i] != 0) continue;
    int len = 1;
    for (int j = next[i]; j != static_cast<int>(i); j = next[j]) ++len;
    int j = static_cast<int>(i);
    do {
      length[j] = len;
      j = next[j];
    } while (j != static_cast<int>(i));
  }
  return length;
}

}  // namespace

CycleDecomposition cycle_decomposition(int k, int n, int bound) {
  const auto classes = enumerate_necklaces(k, n, bound);
  const auto length = cycle_lengths(successor_map(classes));
  CycleDecomposition out;
  std::map<int, int> members;
  for (int len : length) ++members[len];
  for (const auto& [len, count] : members) out.cycles[len] = count / len;
  return out;
}

long g_value(int i, int n, int bound) {
  if (i < 1 || 4 * i > n) throw InputError("g needs 1 <= i <= n/4");
  long g = 1;
  for (const auto& [len, count] : cycle_decomposition(i, n, bound).cycles) g = std::lcm(g, static_cast<long>(len));
  return g;
}

CyclePeriodReport verify_cycle_periods(int n_max, int bound) {
  check_bound(n_max, bound);
  CyclePeriodReport report;
  report.n_max = n_max;
  for (int n = 4; n <= n_max; n += 2) {
    for (int k = 1; 4 * k <= n; ++k) {
      const auto classes = enumerate_necklaces(k, n, bound);
      const auto length = cycle_lengths(successor_map(classes));
      report.classes_checked += static_cast<long>(classes.size());
      std::map<int, bool> reported;
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if ((n - 3 * k) % length[i] == 0 || reported[length[i]]) continue;
        reported[length[i]] = true;
        report.failures.push_back({k, n, length[i], classes[i].canonical()});
      }
    }
  }
  return report;
}

Pattern map_U(const Necklace& nk) {
  require_valid(nk);
  const int n = nk.n();
  if (n > Pattern::kMaxLength) throw ResourceError("necklace too long for a pattern");
  std::uint64_t top = 0, bottom = 0;
  const auto& s = nk.stones();
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i) {
    const int a = s[i].pos;
    const int d = nk.gap(i);
    if (faces_next(nk, i)) {
      for (int j = 0; j < d; ++j) bottom |= std::uint64_t{1} << mod(a + j, n);
      if (d == 3) continue;
      const int p = s[i].vec, q = -s[(i + 1) % m].vec;
      for (int j = p; j <= d - 1 - q; j += 2) top |= std::uint64_t{1} << mod(a + j, n);
    } else {
      for (int j = 1; j < d; j += 2) bottom |= std::uint64_t{1} << mod(a + j, n);
    }
  }
  return Pattern(n, top, bottom);
}

Necklace map_Q(const Pattern& p) {
  if (!is_proper(p) || !is_reducible(p)) throw InputError("map_Q needs a reducible proper pattern");
  const int n = p.length();
  const auto groups = row_groups(p.bottom(), n);
  std::vector<Stone> stones;
  for (const auto& g : groups) {
    if (g.length == n) throw InputError("map_Q needs at least one bottom-row block");
    if (g.length == 1) continue;
    int left = 1, right = 1;
    if (g.length > 3) {
      left = 0;
      while (!p.top(g.start + left)) ++left;
      right = 0;
      while (!p.top(g.start + g.length - 1 - right)) ++right;
    }
    stones.push_back({g.start, left});
    stones.push_back({g.start + g.length, -right});
  }
  if (stones.empty()) throw InputError("map_Q needs at least one bottom-row block");
  Necklace nk(n, std::move(stones));
  if (!is_valid(nk)) throw ConsistencyError("map_Q produced an invalid necklace from " + p.to_string());
  return nk;
}

Pattern map_S(const Pattern& p) {
  if (!is_proper(p)) throw InputError("map_S needs a proper pattern");
  Pattern out = p;
  if (p.top() == 0) return out;
  for (const auto& g : row_groups(p.top(), p.length())) {
    if (g.length >= 3) out = op_N(out, g.start + g.length / 2);
  }
  return out;
}

CorrespondenceReport check_correspondence(int n_max, int bound) {
  check_bound(n_max, bound);
  CorrespondenceReport report;
  report.n_max = n_max;
  for (int n = 4; n <= n_max; n += 2) {
    for (int k = 1; 4 * k <= n; ++k) {
      for (const auto& c : enumerate_necklaces(k, n, bound)) {
        const Necklace& nk = c.canonical();
        ++report.classes_checked;
        const Pattern u = map_U(nk);
        const auto fail = [&](const std::string& what) {
          report.failures.push_back(what + " at " + nk.to_string() + " (U = " + u.to_string() + ")");
        };
        if (!is_proper(u) || !is_reducible(u)) {
          fail("U is not reducible proper");
          continue;
        }
        if (mu(u) != k) fail("mu(U) != k");
        if (NecklaceClass(map_Q(u)) != c) fail("Q(U(N)) != N");
        const Pattern lhs = map_U(transform_T(nk));
        const Pattern rhs = map_S(op_R(u).pattern);
        if (PatternClass(lhs) != PatternClass(rhs)) {
          fail("U(T(N)) = " + lhs.to_string() + " but S(U(N)^R) = " + rhs.to_string());
        }
      }
    }
  }
  return report;
}

IntPoly necklace_denominator_bound(int n, int k, int bound) {
  if (n <= 0 || n % 2 != 0) throw InputError("necklace circumference must be even and positive");
  IntPoly out = (n / 2) % 2 == 0 ? IntPoly{1, 0, -1} : IntPoly{1, 0, 1};
  for (int i = 1; i <= k; ++i) {
    const long g = g_value(i, n, bound);
    out *= IntPoly{1} - IntPoly::monomial(1, static_cast<int>(2 * g));
  }
  return out;
}

nlohmann::json to_json(const Necklace& nk) {
  nlohmann::json stones = nlohmann::json::array();
  for (const auto& s : nk.stones()) stones.push_back({{"pos", s.pos}, {"vec", s.vec}});
  return {{"n", nk.n()}, {"stones", stones}};
}

std::string to_dot(int k, int n, int bound) {
  const auto classes = enumerate_necklaces(k, n, bound);
  const auto next = successor_map(classes);
  std::ostringstream out;
  out << "digraph necklaces_k" << k << "_n" << n << " {\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "  " << i << " [label=\"" << classes[i].canonical().to_string() << "\"];\n";
  }
  for (std::size_t i = 0; i < classes.size(); ++i) out << "  " << i << " -> " << next[i] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hsq
