#include "modhyp/rational.hpp"

#include <algorithm>
#include <charconv>

#include "modhyp/errors.hpp"

namespace modhyp {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticOverflow("rational product exceeds 128 bits");
  return out;
}

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticOverflow("rational sum exceeds 128 bits");
  return out;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Compares a/b with c/d for b, d > 0 via continued-fraction expansion.
std::strong_ordering compare_fractions(i128 a, i128 b, i128 c, i128 d) {
  bool flipped = false;
  for (;;) {
    const i128 qa = floor_div(a, b), qc = floor_div(c, d);
    if (qa != qc) {
      auto ord = qa <=> qc;
      return flipped ? 0 <=> ord : ord;
    }
    a -= qa * b;
    c -= qc * d;
    // Both remainders now in [0, denominator).
    if (a == 0 || c == 0) {
      auto ord = (a == 0 && c == 0) ? std::strong_ordering::equal
                 : a == 0           ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
      return flipped ? 0 <=> ord : ord;
    }
    // a/b vs c/d with both in (0,1): compare reciprocals b/a vs d/c, reversed.
    std::swap(a, b);
    std::swap(c, d);
    flipped = !flipped;
  }
}

}  // namespace

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw InvalidArgument("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw InvalidArgument("rational: reciprocal of zero");
  return Rational(den_, num_);
}

long double Rational::to_long_double() const noexcept {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Rational::to_string() const { return modhyp::to_string(num_) + "/" + modhyp::to_string(den_); }

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    i64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw InvalidArgument("rational: cannot parse '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational operator*(const Rational& l, const Rational& r) {
  const i128 g1 = gcd128(l.num_, r.den_);
  const i128 g2 = gcd128(r.num_, l.den_);
  const i128 n1 = g1 ? l.num_ / g1 : 0, d2 = g1 ? r.den_ / g1 : r.den_;
  const i128 n2 = g2 ? r.num_ / g2 : 0, d1 = g2 ? l.den_ / g2 : l.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator+(const Rational& l, const Rational& r) {
  const i128 g = gcd128(l.den_, r.den_);
  const i128 lcm = checked_mul(l.den_ / g, r.den_);
  return Rational(checked_add(checked_mul(l.num_, lcm / l.den_), checked_mul(r.num_, lcm / r.den_)), lcm);
}

Rational operator-(const Rational& l, const Rational& r) { return l + Rational(-r.num_, r.den_); }

std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
  return compare_fractions(l.num_, l.den_, r.num_, r.den_);
}

std::string to_decimal(const Rational& r, int digits) {
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool neg = r.num() < 0;
  const i128 num = neg ? -r.num() : r.num();
  const i128 whole = num / r.den();
  const i128 rem = num % r.den();
  // rem * scale may overflow for huge denominators; fall back to long double there.
  i128 frac;
  i128 tmp;
  if (!__builtin_mul_overflow(rem, scale, &tmp)) {
    frac = tmp / r.den();
    if (tmp % r.den() >= r.den() - tmp % r.den()) ++frac;
  } else {
    frac = static_cast<i128>(static_cast<long double>(rem) / static_cast<long double>(r.den()) *
                                 static_cast<long double>(scale) + 0.5L);
  }
  i128 w = whole;
  if (frac >= scale) {
    frac -= scale;
    ++w;
  }
  std::string fs = to_string(frac);
  if (static_cast<int>(fs.size()) < digits) fs.insert(0, digits - fs.size(), '0');
  std::string out = (neg && (w != 0 || frac != 0) ? "-" : "") + to_string(w);
  if (digits > 0) out += "." + fs;
  return out;
}

}  // namespace modhyp
