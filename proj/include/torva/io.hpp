#pragma once

#include <optional>
#include <string>

#include "torva/blowup.hpp"
#include "torva/fan.hpp"
#include "torva/projective.hpp"

namespace torva {

// Command-line overrides for file headers, applied before semantic
// validation.
struct HeaderOverrides {
  std::optional<std::string> field;      // "Q" or "Qsqrt:D"
  std::optional<std::string> gamma;      // "all" or "g1,g2,..."
  std::optional<bool> discrete;
};

struct FanDocument {
  ToricContext ctx;
  GammaFan fan;
};

struct ConfigDocument {
  ToricContext ctx;
  WeightedConfig cfg;
};

struct IdealDocument {
  ToricContext ctx;
  SemigroupGens gens;
};

FanDocument parse_fan_file(const std::string& text, const HeaderOverrides& ov = {});
ConfigDocument parse_config_file(const std::string& text, const HeaderOverrides& ov = {});
IdealDocument parse_ideal_file(const std::string& text, const HeaderOverrides& ov = {});

// Canonical serialization: fixed header order, cones sorted by canonical
// key, each cone reduced to its essential inequalities in sorted order.
// parse -> serialize -> parse is the identity on canonical files.
std::string serialize_fan(const GammaFan& fan, const ToricContext& ctx);

bool same_session(const ToricContext& a, const ToricContext& b);

// Exact integer floor of a scalar.
BigInt scalar_floor(const Scalar& x);

}  // namespace torva
