#include "holomatch/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace holomatch {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v >= kMin64 && v <= kMax64; }

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  u128 mag = abs128(v);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  mpz_class z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (v < 0) z = -z;
  return z;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  *this = canonical(std::move(c));
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return {};
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits64(num) && fits64(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::canonical(mpq_class q) {
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return {mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t k = 0;
    if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  auto to_z = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  std::size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class d = to_z(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(to_z(num), d));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits64(s)) return Rational(static_cast<long long>(s));
      return Rational::from_wide(s, 1);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::canonical(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (a.big_) return Rational::canonical(-*a.big_);
  if (a.num_ == std::numeric_limits<std::int64_t>::min())
    return Rational::from_wide(-static_cast<i128>(a.num_), a.den_);
  Rational r;
  r.num_ = -a.num_;
  r.den_ = a.den_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (!a.big_ && !b.big_) {
    i128 n = static_cast<i128>(a.num_) * b.num_;
    if (a.den_ == 1 && b.den_ == 1) {
      if (fits64(n)) return Rational(static_cast<long long>(n));
      return Rational::from_wide(n, 1);
    }
    return Rational::from_wide(n, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::canonical(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_,
                               static_cast<i128>(a.den_) * b.num_);
  }
  return Rational::canonical(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Scalar operator+(const Scalar& x, const Scalar& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

// Basis {1, i, √2, i√2}: i² = −1, (√2)² = 2, (i√2)² = −2, i·(i√2) = −√2, √2·(i√2) = 2i.
Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const bool xr = x.b_.is_zero() && x.c_.is_zero() && x.d_.is_zero();
  const bool yr = y.b_.is_zero() && y.c_.is_zero() && y.d_.is_zero();
  if (xr) return {x.a_ * y.a_, x.a_ * y.b_, x.a_ * y.c_, x.a_ * y.d_};
  if (yr) return {y.a_ * x.a_, y.a_ * x.b_, y.a_ * x.c_, y.a_ * x.d_};
  const Rational two(2);
  Rational one = x.a_ * y.a_ - x.b_ * y.b_ + two * (x.c_ * y.c_ - x.d_ * y.d_);
  Rational im = x.a_ * y.b_ + x.b_ * y.a_ + two * (x.c_ * y.d_ + x.d_ * y.c_);
  Rational r2 = x.a_ * y.c_ + x.c_ * y.a_ - (x.b_ * y.d_ + x.d_ * y.b_);
  Rational ir2 = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
  return {std::move(one), std::move(im), std::move(r2), std::move(ir2)};
}

// With x = u + v√2 (u, v ∈ ℚ(i)), x·(u − v√2) = u² − 2v² =: N ∈ ℚ(i), and N = 0 iff x = 0.
Scalar Scalar::inverse() const {
  const Rational two(2);
  Rational n1 = a_ * a_ - b_ * b_ - two * (c_ * c_ - d_ * d_);
  Rational n2 = two * (a_ * b_) - Rational(4) * (c_ * d_);
  Rational norm = n1 * n1 + n2 * n2;
  if (norm.is_zero()) throw DivisionByZero();
  Scalar conj_root{a_, b_, -c_, -d_};
  Scalar inv_n{n1 / norm, -n2 / norm, 0, 0};
  return conj_root * inv_n;
}

std::string Scalar::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& r, const char* suffix) {
    if (r.is_zero()) return;
    Rational mag = r.sign() < 0 ? -r : r;
    if (first) {
      if (r.sign() < 0) os << '-';
    } else {
      os << (r.sign() < 0 ? " - " : " + ");
    }
    os << mag.str() << suffix;
    first = false;
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "r2");
  term(d_, "ir2");
  if (first) return "0";
  return os.str();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const auto ch = static_cast<unsigned char>(text[k]);
    // U+2212 MINUS SIGN
    if (ch == 0xE2 && k + 2 < text.size() && static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x92) {
      s.push_back('-');
      k += 2;
      continue;
    }
    if (!std::isspace(ch)) s.push_back(static_cast<char>(ch));
  }
  if (s.empty()) throw ParseError("empty scalar literal");

  Rational parts[4];
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    bool saw_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') negative = !negative;
      saw_sign = true;
      ++pos;
    }
    if (!first && !saw_sign)
      throw ParseError("expected '+' or '-' between terms in '" + std::string(text) + "'");
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    std::string_view coeff(s.data() + start, pos - start);
    int slot = 0;
    if (s.compare(pos, 3, "ir2") == 0) {
      slot = 3;
      pos += 3;
    } else if (s.compare(pos, 2, "r2") == 0) {
      slot = 2;
      pos += 2;
    } else if (pos < s.size() && s[pos] == 'i') {
      slot = 1;
      pos += 1;
    }
    if (coeff.empty() && slot == 0)
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    Rational value = coeff.empty() ? Rational(1) : Rational::parse(coeff);
    if (negative) value = -value;
    parts[slot] += value;
    first = false;
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace holomatch
