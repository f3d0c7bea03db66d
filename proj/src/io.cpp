#include "torva/io.hpp"

#include <algorithm>
#include <sstream>

#include "torva/errors.hpp"
#include "torva/intlin.hpp"

namespace torva {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    size_t a = raw.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(a, b - a + 1)});
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Scalar parse_scalar_checked(const std::string& text, long disc, int line) {
  Scalar s;
  try {
    s = Scalar::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()), line);
  }
  if (s.disc() != 0 && s.disc() != disc)
    throw ParseError("scalar uses sqrt(" + std::to_string(s.disc()) +
                         ") but the header fixes a different field",
                     line);
  return s;
}

struct Header {
  ToricContext ctx;
  size_t next = 0;  // first non-header line index
  std::optional<int> count;  // points/gens declared count, when present
};

void apply_field(ToricContext& ctx, const std::string& spec, int line) {
  if (spec == "Q") {
    ctx.disc = 0;
    return;
  }
  const std::string tag = "Qsqrt";
  if (spec.rfind(tag, 0) == 0) {
    std::string num = spec.substr(tag.size());
    if (!num.empty() && num[0] == ':') num = num.substr(1);
    try {
      ctx.disc = std::stol(num);
    } catch (...) {
      throw ParseError("malformed field specifier '" + spec + "'", line);
    }
    if (ctx.disc < 2) throw ParseError("field discriminant must be >= 2", line);
    return;
  }
  throw ParseError("unknown field '" + spec + "'", line);
}

void apply_gamma(ToricContext& ctx, const std::string& spec, int line) {
  if (spec == "all") {
    ctx.gamma = ValueGroup::whole_field(ctx.disc);
    return;
  }
  std::vector<Scalar> gens;
  std::string item;
  std::istringstream in(spec);
  while (std::getline(in, item, ',')) {
    std::string trimmed;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) throw ParseError("empty value-group generator", line);
    gens.push_back(parse_scalar_checked(trimmed, ctx.disc, line));
  }
  if (gens.empty()) throw ParseError("value group needs generators or 'all'", line);
  ctx.gamma = ValueGroup::with_generators(std::move(gens), ctx.disc);
}

Header parse_header(const std::vector<Line>& lines, const std::string& kind,
                    const HeaderOverrides& ov) {
  if (lines.empty()) throw ParseError("empty file");
  {
    const auto magic = split_ws(lines[0].text);
    if (magic.size() != 3 || magic[0] != "torva" || magic[1] != kind || magic[2] != "1")
      throw ParseError("expected 'torva " + kind + " 1' on the first line", lines[0].number);
  }
  Header h;
  std::string field_spec = "Q";
  std::string gamma_spec = "all";
  std::string valuation_spec = "dense";
  bool have_rank = false;
  size_t i = 1;
  for (; i < lines.size(); ++i) {
    const std::string& t = lines[i].text;
    const size_t sp = t.find_first_of(" \t");
    const std::string key = sp == std::string::npos ? t : t.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : t.substr(t.find_first_not_of(" \t", sp));
    if (key == "field") {
      field_spec = rest;
    } else if (key == "gamma") {
      gamma_spec = rest;
    } else if (key == "rank") {
      try {
        h.ctx.rank = std::stoi(rest);
      } catch (...) {
        throw ParseError("malformed rank", lines[i].number);
      }
      if (h.ctx.rank < 1) throw ParseError("rank must be positive", lines[i].number);
      have_rank = true;
    } else if (key == "valuation") {
      valuation_spec = rest;
    } else if (key == "points" || key == "gens") {
      try {
        h.count = std::stoi(rest);
      } catch (...) {
        throw ParseError("malformed " + key + " count", lines[i].number);
      }
      ++i;
      break;
    } else if (key == "cone" || key == "t0") {
      break;
    } else {
      throw ParseError("unknown header key '" + key + "'", lines[i].number);
    }
  }
  if (!have_rank) throw ParseError("missing 'rank' header");
  if (ov.field) field_spec = *ov.field;
  apply_field(h.ctx, field_spec, lines[0].number);
  if (ov.gamma) gamma_spec = *ov.gamma;
  apply_gamma(h.ctx, gamma_spec, lines[0].number);
  if (valuation_spec == "dense")
    h.ctx.discrete = false;
  else if (valuation_spec == "discrete")
    h.ctx.discrete = true;
  else
    throw ParseError("valuation must be 'dense' or 'discrete'");
  if (ov.discrete) h.ctx.discrete = *ov.discrete;
  h.next = i;
  return h;
}

// Parses "m1 ... mn | value" returning the lattice part and the raw value
// token (scalar literal or "inf").
std::pair<IntVec, std::string> parse_data_line(const Line& line, int n) {
  const size_t bar = line.text.find('|');
  if (bar == std::string::npos) throw ParseError("missing '|' separator", line.number);
  const auto head = split_ws(line.text.substr(0, bar));
  auto tail = split_ws(line.text.substr(bar + 1));
  if (static_cast<int>(head.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " lattice coordinates", line.number);
  if (tail.size() != 1) throw ParseError("expected one value after '|'", line.number);
  IntVec m(head.size());
  for (size_t k = 0; k < head.size(); ++k) {
    try {
      m[k] = BigInt(head[k]);
    } catch (...) {
      throw ParseError("malformed integer '" + head[k] + "'", line.number);
    }
  }
  return {std::move(m), tail[0]};
}

}  // namespace

FanDocument parse_fan_file(const std::string& text, const HeaderOverrides& ov) {
  const auto lines = significant_lines(text);
  Header h = parse_header(lines, "fan", ov);
  std::vector<GammaCone> cones;
  std::vector<GammaIneq> current;
  bool in_cone = false;
  bool t_zero = false;
  auto flush = [&]() {
    if (!in_cone) return;
    GammaCone cone =
        GammaCone::checked(h.ctx.rank, std::move(current), h.ctx.gamma);
    if (t_zero) cone = GammaCone::inherited(h.ctx.rank, cone.inequalities(), true);
    const auto adm = cone.admissible();
    if (!adm.first)
      throw AdmissibilityError("cone " + std::to_string(cones.size()) +
                               " contains the line through " + vec_to_string(*adm.second));
    cones.push_back(std::move(cone));
    current.clear();
    t_zero = false;
  };
  for (size_t i = h.next; i < lines.size(); ++i) {
    if (lines[i].text == "cone") {
      flush();
      in_cone = true;
      continue;
    }
    if (!in_cone) throw ParseError("data before the first 'cone' block", lines[i].number);
    if (lines[i].text == "t0") {
      t_zero = true;
      continue;
    }
    auto [m, value] = parse_data_line(lines[i], h.ctx.rank);
    current.push_back({std::move(m), parse_scalar_checked(value, h.ctx.disc, lines[i].number)});
  }
  flush();
  if (cones.empty()) throw ParseError("no cones");
  return {h.ctx, GammaFan::from_cones(h.ctx.rank, std::move(cones))};
}

ConfigDocument parse_config_file(const std::string& text, const HeaderOverrides& ov) {
  const auto lines = significant_lines(text);
  Header h = parse_header(lines, "config", ov);
  if (!h.count) throw ParseError("missing 'points' count");
  std::vector<IntVec> weights;
  std::vector<std::optional<Scalar>> heights;
  for (size_t i = h.next; i < lines.size(); ++i) {
    auto [m, value] = parse_data_line(lines[i], h.ctx.rank);
    weights.push_back(std::move(m));
    if (value == "inf")
      heights.push_back(std::nullopt);
    else
      heights.push_back(parse_scalar_checked(value, h.ctx.disc, lines[i].number));
  }
  if (static_cast<int>(weights.size()) != *h.count)
    throw ParseError("declared " + std::to_string(*h.count) + " points, found " +
                     std::to_string(weights.size()));
  return {h.ctx,
          make_weighted_config(h.ctx.rank, std::move(weights), std::move(heights), h.ctx.gamma)};
}

IdealDocument parse_ideal_file(const std::string& text, const HeaderOverrides& ov) {
  const auto lines = significant_lines(text);
  Header h = parse_header(lines, "ideal", ov);
  if (!h.count) throw ParseError("missing 'gens' count");
  std::vector<MonomialDatum> elems;
  for (size_t i = h.next; i < lines.size(); ++i) {
    auto [m, value] = parse_data_line(lines[i], h.ctx.rank);
    elems.push_back({std::move(m), parse_scalar_checked(value, h.ctx.disc, lines[i].number)});
  }
  if (static_cast<int>(elems.size()) != *h.count)
    throw ParseError("declared " + std::to_string(*h.count) + " generators, found " +
                     std::to_string(elems.size()));
  return {h.ctx, make_semigroup_gens(h.ctx.rank, std::move(elems), h.ctx.gamma)};
}

namespace {

std::string ineq_line(const GammaIneq& q) {
  std::string out;
  for (const auto& x : q.m) out += x.str() + " ";
  out += "| " + q.c.to_string();
  return out;
}

}  // namespace

std::string serialize_fan(const GammaFan& fan, const ToricContext& ctx) {
  std::ostringstream out;
  out << "torva fan 1\n";
  out << "field " << (ctx.disc == 0 ? std::string("Q") : "Qsqrt " + std::to_string(ctx.disc))
      << "\n";
  out << "gamma " << ctx.gamma.describe() << "\n";
  out << "rank " << ctx.rank << "\n";
  out << "valuation " << (ctx.discrete ? "discrete" : "dense") << "\n";
  for (const auto& cone : fan.maximal_cones()) {
    out << "cone\n";
    if (cone.in_t_boundary()) out << "t0\n";
    const HCone& hc = cone.as_cone();
    std::vector<size_t> keep;
    for (int i : hc.facet_indices())
      if (i < static_cast<int>(cone.inequalities().size())) keep.push_back(size_t(i));
    for (int i : hc.equality_indices())
      if (i < static_cast<int>(cone.inequalities().size())) keep.push_back(size_t(i));
    std::vector<std::string> body;
    for (size_t i : keep) {
      const GammaIneq& q = cone.inequalities()[i];
      bool pure_t = true;
      for (const auto& x : q.m)
        if (x != 0) pure_t = false;
      if (pure_t) continue;  // implied by the ambient t >= 0 or the t0 marker
      body.push_back(ineq_line(q));
    }
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
    for (const auto& l : body) out << l << "\n";
  }
  return out.str();
}

bool same_session(const ToricContext& a, const ToricContext& b) {
  return a.rank == b.rank && a.disc == b.disc && a.discrete == b.discrete &&
         a.gamma.describe() == b.gamma.describe();
}

BigInt scalar_floor(const Scalar& x) {
  if (x.is_rational()) {
    const BigInt num = boost::multiprecision::numerator(x.rational_part());
    const BigInt den = boost::multiprecision::denominator(x.rational_part());
    BigInt q = num / den;
    if (num - q * den < 0) q -= 1;
    return q;
  }
  // |a + b*sqrt(D)| <= |a| + |b|*D gives an integer window; binary search
  // with exact comparisons.
  const Rational bound = boost::multiprecision::abs(x.rational_part()) +
                         boost::multiprecision::abs(x.radical_part()) * x.disc() + 1;
  BigInt lo = -(boost::multiprecision::numerator(bound) /
                boost::multiprecision::denominator(bound)) - 1;
  BigInt hi = -lo;
  while (lo < hi) {
    const BigInt mid = lo + (hi - lo + 1) / 2;
    if (Scalar(Rational(mid)) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace torva
