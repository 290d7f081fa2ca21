#include "hsq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

#include "hsq/errors.hpp"

namespace hsq {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw InputError("negative monomial degree");
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

BigInt IntPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : BigInt(0);
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k, BigInt(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<BigInt> out(coeffs_);
  for (auto& c : out) c = -c;
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& c, const IntPoly& p) {
  std::vector<BigInt> out(p.coeffs_);
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  IntPoly parse() {
    if (s_.empty()) fail();
    IntPoly p = expression();
    if (pos_ != s_.size()) fail();
    return p;
  }

 private:
  [[noreturn]] void fail() const { throw InputError("cannot parse polynomial '" + s_ + "'"); }
  bool peek(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  IntPoly expression() {
    IntPoly total;
    bool first = true;
    while (pos_ < s_.size() && !peek(')')) {
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail();
      }
      total += BigInt(sign) * term();
      first = false;
    }
    if (first) fail();
    return total;
  }

  // Juxtaposed factors multiply: "2(1-t)(1+t^2)^2".
  IntPoly term() {
    IntPoly product = factor();
    while (peek('(')) product *= factor();
    return product;
  }

  int exponent() {
    const std::size_t e = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == e) fail();
    return std::stoi(s_.substr(e, pos_ - e));
  }

  IntPoly factor() {
    if (peek('(')) {
      ++pos_;
      IntPoly inner = expression();
      if (!peek(')')) fail();
      ++pos_;
      IntPoly out{1};
      int power = 1;
      if (peek('^')) {
        ++pos_;
        power = exponent();
      }
      for (int i = 0; i < power; ++i) out *= inner;
      return out;
    }
    BigInt coeff = 1;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const bool has_digits = pos_ > start;
    if (has_digits) coeff = BigInt(s_.substr(start, pos_ - start));
    if (peek('*')) ++pos_;
    int power = 0;
    if (peek('t')) {
      ++pos_;
      power = 1;
      if (peek('^')) {
        ++pos_;
        power = exponent();
      }
    } else if (!has_digits) {
      fail();
    }
    return IntPoly::monomial(coeff, power);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

// Long division; nullopt as soon as a leading coefficient does not divide.
std::optional<PolyDivision> try_divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  const BigInt& lead = b.coeffs().back();
  const int dq = a.degree() - db;
  std::vector<BigInt> quot(std::max(dq + 1, 0));
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
    quot[k - db] = std::move(q);
  }
  return PolyDivision{IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const BigInt lead = b.leading();
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(a.degree() - b.degree() + 1));
  return divrem(scale * a, b).remainder;
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

PolyDivision divrem(const IntPoly& a, const IntPoly& b) {
  auto result = try_divrem(a, b);
  if (!result) throw InputError("division is not exact over the integers");
  return std::move(*result);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  auto result = try_divrem(a, b);
  if (!result || !result->remainder.is_zero()) return std::nullopt;
  return std::move(result->quotient);
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

int totient(int d) {
  if (d < 1) throw InputError("totient needs d >= 1");
  int result = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

const IntPoly& cyclotomic(int d) {
  if (d < 1) throw InputError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, d) - IntPoly{1};
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = divrem(p, cyclotomic(e)).quotient;
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(d, std::move(p)).first->second;
}

bool CycloFactorization::fully_cyclotomic() const {
  return remainder.degree() == 0 && abs(remainder.leading()) == 1;
}

CycloFactorization factor_cyclotomic(const IntPoly& p) {
  CycloFactorization out{{}, p};
  if (p.is_zero()) return out;
  const long limit = 2L * p.degree() * p.degree() + 2;
  for (int d = 1; d <= limit && out.remainder.degree() > 0; ++d) {
    if (totient(d) > out.remainder.degree()) continue;
    int mult = 0;
    while (auto q = divide_exact(out.remainder, cyclotomic(d))) {
      out.remainder = std::move(*q);
      ++mult;
    }
    if (mult) out.factors.emplace_back(d, mult);
  }
  return out;
}

RationalGF::RationalGF(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw InputError("zero denominator");
  if (num.is_zero()) {
    den = IntPoly{1};
  } else {
    const IntPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = *divide_exact(num, g);
      den = *divide_exact(den, g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  normalize_units();
}

RationalGF RationalGF::from_coprime(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw InputError("zero denominator");
  RationalGF out;
  const bool zero = num.is_zero();
  out.num_ = std::move(num);
  out.den_ = zero ? IntPoly{1} : std::move(den);
  out.normalize_units();
  return out;
}

void RationalGF::normalize_units() {
  if (den_.coeff(0) == 0) throw InputError("denominator vanishes at t = 0: " + den_.to_string());
  BigInt c = den_.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), num_.content().get_mpz_t());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    auto scale = [&](const IntPoly& p) {
      std::vector<BigInt> out(p.coeffs());
      for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      return IntPoly(std::move(out));
    };
    num_ = scale(num_);
    den_ = scale(den_);
  }
}

std::string RationalGF::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string RationalGF::to_factored_string() const {
  std::string top = num_.leading() < 0 ? "-(" + (-num_).to_string() + ")" : num_.to_string();
  if (den_ == IntPoly{1}) return top;
  const auto f = factor_cyclotomic(den_);
  std::string bottom;
  if (f.remainder != IntPoly{1}) {
    bottom = f.remainder.degree() == 0 ? f.remainder.to_string() : "(" + f.remainder.to_string() + ")";
  }
  for (auto [d, e] : f.factors) {
    bottom += "Phi_" + std::to_string(d) + "(t)";
    if (e > 1) bottom += "^" + std::to_string(e);
  }
  return top + " / " + bottom;
}

std::vector<BigInt> series_expand(const RationalGF& gf, int terms) {
  if (terms < 0) throw InputError("negative number of series terms");
  const IntPoly& den = gf.den();
  const BigInt d0 = den.coeff(0);
  std::vector<BigInt> out(terms);
  for (int k = 0; k < terms; ++k) {
    BigInt acc = gf.num().coeff(k);
    for (int j = 1; j <= std::min(k, den.degree()); ++j) acc -= den.coeffs()[j] * out[k - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t())) {
      throw InputError("series has non-integer coefficients");
    }
    mpz_divexact(out[k].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

namespace {

IntPoly clear_denominators(const std::vector<BigRational>& coeffs, const BigInt& scale) {
  std::vector<BigInt> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    BigRational scaled = c * scale;
    out.push_back(scaled.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace

FitResult fit_recurrence(const std::vector<BigInt>& seq) {
  const int total = static_cast<int>(seq.size());
  std::vector<BigRational> c{1};
  std::vector<BigRational> b{1};
  int length = 0;
  int gap = 1;
  BigRational last = 1;
  for (int n = 0; n < total; ++n) {
    BigRational d = seq[n];
    for (int i = 1; i <= length && i < static_cast<int>(c.size()); ++i) d += c[i] * seq[n - i];
    if (d == 0) {
      ++gap;
      continue;
    }
    const BigRational coef = d / last;
    std::vector<BigRational> next = c;
    if (next.size() < b.size() + gap) next.resize(b.size() + gap, BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) next[i + gap] -= coef * b[i];
    if (2 * length <= n) {
      b = std::move(c);
      length = n + 1 - length;
      last = d;
      gap = 1;
    } else {
      ++gap;
    }
    c = std::move(next);
  }

  FitResult result{FitStatus::kInconclusive, std::nullopt, length};
  if (total < 2 * length + 4) return result;

  c.resize(length + 1, BigRational(0));
  std::vector<BigRational> num(length, BigRational(0));
  for (int k = 0; k < length; ++k) {
    for (int j = 0; j <= k; ++j) num[k] += c[j] * seq[k - j];
  }
  BigInt scale = 1;
  for (const auto* v : {&c, &num}) {
    for (const auto& x : *v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  }
  RationalGF gf(clear_denominators(num, scale), clear_denominators(c, scale));
  if (series_expand(gf, total) != seq) return result;
  result.status = FitStatus::kFound;
  result.gf = std::move(gf);
  return result;
}

}  // namespace hsq
