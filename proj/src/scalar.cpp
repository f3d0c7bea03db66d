#include "torva/scalar.hpp"

#include <cctype>
#include <sstream>

namespace torva {

namespace {

bool square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(Rational rat, Rational rad, long disc)
    : rat_(std::move(rat)), rad_(std::move(rad)), disc_(disc) {
  if (rad_ == 0) {
    disc_ = 0;
  } else {
    if (!square_free(disc_))
      throw DomainError("discriminant must be a square-free integer >= 2, got " +
                        std::to_string(disc));
  }
}

Scalar Scalar::sqrt_of(long disc) { return Scalar(Rational(0), Rational(1), disc); }

long Scalar::merge_disc(long a, long b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b)
    throw ModeMismatch("mixed scalar modes: sqrt(" + std::to_string(a) + ") vs sqrt(" +
                       std::to_string(b) + ")");
  return a;
}

int Scalar::sign() const {
  const int sa = rat_.sign();
  const int sb = rad_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare rat_^2 with rad_^2 * D exactly.
  const Rational lhs = rat_ * rat_;
  const Rational rhs = rad_ * rad_ * disc_;
  if (lhs == rhs) return 0;  // impossible for square-free D >= 2, kept for safety
  const bool rational_dominates = lhs > rhs;
  return rational_dominates ? sa : sb;
}

Scalar Scalar::operator+(const Scalar& o) const {
  const long d = merge_disc(disc_, o.disc_);
  return Scalar(rat_ + o.rat_, rad_ + o.rad_, d);
}

Scalar Scalar::operator-(const Scalar& o) const {
  const long d = merge_disc(disc_, o.disc_);
  return Scalar(rat_ - o.rat_, rad_ - o.rad_, d);
}

Scalar Scalar::operator*(const Scalar& o) const {
  const long d = merge_disc(disc_, o.disc_);
  return Scalar(rat_ * o.rat_ + rad_ * o.rad_ * d, rat_ * o.rad_ + rad_ * o.rat_, d);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DomainError("scalar division by zero");
  const long d = merge_disc(disc_, o.disc_);
  // 1/(a+b*sqrt(D)) = (a-b*sqrt(D))/(a^2-b^2 D); the norm is nonzero for
  // square-free D since sqrt(D) is irrational.
  const Rational norm = o.rat_ * o.rat_ - o.rad_ * o.rad_ * d;
  const Rational ia = o.rat_ / norm;
  const Rational ib = -o.rad_ / norm;
  return *this * Scalar(ia, ib, d);
}

namespace {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  std::string out = rational_to_string(rat_);
  if (rad_ != 0) {
    const Rational mag = rad_ < 0 ? Rational(-rad_) : rad_;
    out += (rad_ < 0 ? "-" : "+");
    out += rational_to_string(mag) + "*sqrt(" + std::to_string(disc_) + ")";
  }
  return out;
}

namespace {

// Parses "p" or "p/q" starting at pos; advances pos.
Rational parse_rational(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
    ++digits;
  }
  if (digits == 0) throw ParseError("expected integer in scalar literal '" + s + "'");
  BigInt num(s.substr(start, pos - start));
  BigInt den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart) throw ParseError("expected denominator in scalar literal '" + s + "'");
    den = BigInt(s.substr(dstart, pos - dstart));
    if (den == 0) throw ParseError("zero denominator in scalar literal '" + s + "'");
  }
  return Rational(num, den);
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar literal");

  size_t pos = 0;
  Rational rat = parse_rational(s, pos);
  if (pos == s.size()) return Scalar(rat);

  if (s[pos] != '+' && s[pos] != '-')
    throw ParseError("malformed scalar literal '" + text + "'");
  const bool neg = s[pos] == '-';
  ++pos;
  Rational rad = parse_rational(s, pos);
  if (neg) rad = -rad;
  const std::string tail = "*sqrt(";
  if (s.compare(pos, tail.size(), tail) != 0)
    throw ParseError("malformed scalar literal '" + text + "'");
  pos += tail.size();
  size_t dstart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dstart || pos >= s.size() || s[pos] != ')' || pos + 1 != s.size())
    throw ParseError("malformed scalar literal '" + text + "'");
  const long disc = std::stol(s.substr(dstart, pos - dstart));
  return Scalar(rat, rad, disc);
}

Scalar dot(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  Scalar acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Scalar dot(const IntVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  Scalar acc;
  for (size_t i = 0; i < a.size(); ++i) acc += Scalar(a[i]) * b[i];
  return acc;
}

BigInt dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw InternalError("dot: dimension mismatch");
  BigInt acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ScalarVec to_scalars(const IntVec& v) {
  ScalarVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::string vec_to_string(const ScalarVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::string vec_to_string(const IntVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

}  // namespace torva
