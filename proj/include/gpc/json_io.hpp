#pragma once

#include "gpc/channel.hpp"
#include "gpc/geometry.hpp"
#include "gpc/montecarlo.hpp"
#include "gpc/mub.hpp"
#include "gpc/regions.hpp"
#include "gpc/volume.hpp"

#include <json.hpp>

namespace gpc {

// Exact values are written as "p/q" strings; *_decimal fields carry a
// 20-significant-digit approximation for reading only.

nlohmann::json to_json(const SurdValue& s);
nlohmann::json to_json(const AffineExpr& e);
nlohmann::json to_json(const BoundChain& c);
nlohmann::json to_json(const ChamberSet& s);
nlohmann::json to_json(const VolumeResult& v);
nlohmann::json to_json(const RatioRow& r);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const McEstimate& e, const SurdValue& exact);
nlohmann::json to_json(const UnbiasedReport& r);
nlohmann::json classification_json(const ChannelSpec& c);

SurdValue surd_from_json(const nlohmann::json& j);
// Reads ["p/q", ...] (strings or integers) into rationals.
std::vector<Rational> rationals_from_json(const nlohmann::json& j);

}  // namespace gpc
