#include "torva/value_group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace torva {

ValueGroup ValueGroup::whole_field(long disc) {
  ValueGroup g;
  g.whole_field_ = true;
  g.disc_ = disc;
  return g;
}

ValueGroup ValueGroup::with_generators(std::vector<Scalar> gens, long session_disc) {
  if (gens.empty()) throw DomainError("value group needs at least one generator");
  ValueGroup g;
  g.whole_field_ = false;
  g.disc_ = session_disc;
  g.gens_ = std::move(gens);
  for (const auto& s : g.gens_)
    if (s.disc() != 0) {
      if (g.disc_ != 0 && g.disc_ != s.disc())
        throw ModeMismatch("value group generators mix discriminants");
      g.disc_ = s.disc();
    }
  return g;
}

bool ValueGroup::contains(const Scalar& x) const {
  if (x.disc() != 0 && disc_ != 0 && x.disc() != disc_)
    throw ModeMismatch("scalar mode differs from value group mode");
  if (whole_field_) {
    if (x.disc() != 0 && disc_ == 0)
      throw ModeMismatch("irrational scalar tested against a rational whole-field group");
    return true;
  }
  if (x.disc() != 0 && disc_ == 0)
    throw ModeMismatch("irrational scalar tested against a rational value group");

  // Clear denominators across x and the generators, then solve
  // sum n_i g_i = x over the integers in the basis {1, sqrt(D)}.
  BigInt den = boost::multiprecision::denominator(x.rational_part());
  den = lcm(den, boost::multiprecision::denominator(x.radical_part()));
  for (const auto& g : gens_) {
    den = lcm(den, boost::multiprecision::denominator(g.rational_part()));
    den = lcm(den, boost::multiprecision::denominator(g.radical_part()));
  }
  auto scaled = [&den](const Rational& r) -> BigInt {
    const Rational v = r * Rational(den);
    return boost::multiprecision::numerator(v);
  };
  const bool radical_mode = disc_ != 0;
  const int rows = radical_mode ? 2 : 1;
  IntMatrix a(rows, static_cast<int>(gens_.size()));
  for (int j = 0; j < static_cast<int>(gens_.size()); ++j) {
    a.at(0, j) = scaled(gens_[j].rational_part());
    if (radical_mode) a.at(1, j) = scaled(gens_[j].radical_part());
  }
  IntVec b(rows);
  b[0] = scaled(x.rational_part());
  if (radical_mode) b[1] = scaled(x.radical_part());
  return solve_integer(a, b).has_value();
}

bool ValueGroup::is_discrete_cyclic() const {
  return !whole_field_ && gens_.size() == 1 && gens_[0].is_rational() && gens_[0].sign() > 0;
}

std::string ValueGroup::describe() const {
  if (whole_field_) return "all";
  std::string out;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out;
}

}  // namespace torva
