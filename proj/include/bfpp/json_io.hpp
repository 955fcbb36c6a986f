#pragma once

#include "bfpp/contraction.hpp"
#include "bfpp/witness.hpp"

#include <json.hpp>

#include <string>

namespace bfpp {

/// Malformed input artifact (bad JSON, bad schema, bad rational literal).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Json = nlohmann::json;

// Rationals travel as canonical strings "num/den".
Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j, const std::string& where);

Json finset_json(const FinSet& s);
FinSet finset_from_json(const Json& j, const std::string& where);

// {"breakpoints": [["t","v"], ...]}
Json map_json(const PiecewiseAffineMap& f);
PiecewiseAffineMap map_from_json(const Json& j);
PiecewiseAffineMap load_map(const std::string& path);
void save_map(const PiecewiseAffineMap& f, const std::string& path);

// {"q": ..., "n": ..., "x_n": ..., "bound": ...}
Json certificate_json(const FixedPointCertificate& c);

Json stage_certificate_json(const StageCertificate& c);
StageCertificate stage_certificate_from_json(const Json& j);

/// History file: array of {"skeleton": [...], "radius": "...",
/// "certificate": {...}|null}; entry 0 is the initial hull. The writer
/// streams directly so large histories serialize fast and byte-stably.
void save_history(const History& h, const std::string& path);
History load_history(const std::string& path);
Json history_json(const History& h);
History history_from_json(const Json& j);

}  // namespace bfpp
