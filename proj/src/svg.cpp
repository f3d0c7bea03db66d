#include "torva/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "torva/errors.hpp"
#include "torva/io.hpp"

namespace torva {

namespace {

constexpr int kSize = 600;

// Fixed-point decimal with three digits, computed exactly.
std::string px(const Scalar& v) {
  const BigInt milli = scalar_floor(v * Scalar(1000));
  BigInt whole = milli / 1000;
  BigInt frac = milli % 1000;
  if (frac < 0) {
    frac += 1000;
    whole -= 1;
  }
  std::string f = frac.str();
  while (f.size() < 3) f = "0" + f;
  return whole.str() + "." + f;
}

struct Mapper {
  Scalar b;
  Scalar to_x(const Scalar& x) const { return (x + b) / (b * Scalar(2)) * Scalar(kSize); }
  Scalar to_y(const Scalar& y) const {
    return Scalar(kSize) - (y + b) / (b * Scalar(2)) * Scalar(kSize);
  }
};

// Counterclockwise order around an interior point, by exact half-plane
// classification and cross products.
void sort_polygon(std::vector<ScalarVec>& verts) {
  if (verts.size() < 3) return;
  ScalarVec c(2, Scalar(0));
  for (const auto& v : verts) {
    c[0] += v[0];
    c[1] += v[1];
  }
  const Scalar k(static_cast<long>(verts.size()));
  c[0] = c[0] / k;
  c[1] = c[1] / k;
  auto half = [&c](const ScalarVec& v) {
    const Scalar dy = v[1] - c[1];
    if (dy.sign() != 0) return dy.sign() > 0 ? 0 : 1;
    return (v[0] - c[0]).sign() > 0 ? 0 : 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const ScalarVec& u, const ScalarVec& v) {
    const int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    const Scalar cross = (u[0] - c[0]) * (v[1] - c[1]) - (u[1] - c[1]) * (v[0] - c[0]);
    if (cross.sign() != 0) return cross.sign() > 0;
    return u < v;
  });
}

}  // namespace

std::string render_slice_svg(const GammaFan& fan, const Scalar& level) {
  if (fan.rank() != 2) throw DomainError("svg rendering supports rank 2 only");
  if (level.sign() < 0) throw DomainError("slice level must be nonnegative");

  std::vector<HPolyhedron> slices;
  for (const auto& cone : fan.maximal_cones()) {
    HPolyhedron p = cone.slice(level);
    if (!p.is_empty()) slices.push_back(std::move(p));
  }
  Scalar maxc(1);
  for (const auto& p : slices)
    for (const auto& v : p.vertices())
      for (const auto& x : v)
        if (x.abs() > maxc) maxc = x.abs();
  const Mapper map{maxc * Scalar(2)};

  std::vector<HPolyhedron::Ineq> box;
  for (int axis = 0; axis < 2; ++axis)
    for (int sign = -1; sign <= 1; sign += 2) {
      ScalarVec normal(2, Scalar(0));
      normal[size_t(axis)] = Scalar(sign);
      box.push_back({std::move(normal), map.b});
    }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  out << "<rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
  out << "<line x1=\"0\" y1=\"" << kSize / 2 << "\" x2=\"" << kSize << "\" y2=\"" << kSize / 2
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << kSize / 2 << "\" y1=\"0\" x2=\"" << kSize / 2 << "\" y2=\"" << kSize
      << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";

  std::set<std::string> labels;
  for (const auto& p : slices) {
    auto ineqs = p.inequalities();
    ineqs.insert(ineqs.end(), box.begin(), box.end());
    const HPolyhedron clipped(2, std::move(ineqs));
    if (clipped.is_empty()) continue;
    auto verts = clipped.vertices();
    if (verts.size() < 2) continue;
    sort_polygon(verts);
    out << "<polygon points=\"";
    for (size_t i = 0; i < verts.size(); ++i) {
      if (i) out << " ";
      out << px(map.to_x(verts[i][0])) << "," << px(map.to_y(verts[i][1]));
    }
    out << "\" fill=\"#ccccee\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const auto& v : p.vertices()) {
      const std::string text = "(" + v[0].to_string() + ", " + v[1].to_string() + ")";
      const std::string entry = "<text x=\"" + px(map.to_x(v[0]) + Scalar(4)) + "\" y=\"" +
                                px(map.to_y(v[1]) - Scalar(4)) +
                                "\" font-size=\"12\" font-family=\"monospace\">" + text +
                                "</text>\n";
      labels.insert(entry);
    }
  }
  for (const auto& l : labels) out << l;
  out << "</svg>\n";
  return out.str();
}

}  // namespace torva
