#pragma once

#include <string>

#include <json.hpp>

#include "stieltjes/certify.hpp"
#include "stieltjes/measure.hpp"

namespace stieltjes {

// Order-preserving JSON document; all serializers emit keys in a fixed order
// so output is byte-for-byte deterministic.
using Json = nlohmann::ordered_json;

// Rationals travel as canonical strings ("p" or "p/q"); series and
// coefficient lists as arrays of such strings.  Readers also accept plain
// JSON integers where a rational is expected.

Json to_json(const MomentSequence& a);        // {"moments": [...]}
Json to_json(const SCoefficients& s);         // {"c": ..., "alphas": [...], "terminated": ...}
Json to_json(const JCoefficients& j);         // {"gammas": [...], "betas": [...]}
Json to_json(const TruncatedSeries& f);       // [...]
Json to_json(const GSequence& g);             // [...]
Json to_json(const CertVerdict& v);           // {"status", "witness_g", "refutation_index", "detail"}
Json to_json(const GZeroInterval& iv);        // {"lower", "upper_bound_lo", "upper_bound_hi", "tolerance"}
Json to_json(const DiscreteMeasure& mu);      // {"atoms": [...], "weights": [...]}
Json to_json(const HankelReport& h);          // {"dets_H", "dets_Hshift", "psd"}

MomentSequence moment_sequence_from_json(const Json& j);
SCoefficients s_coefficients_from_json(const Json& j);
JCoefficients j_coefficients_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);
GSequence g_sequence_from_json(const Json& j);
CertVerdict verdict_from_json(const Json& j);
GZeroInterval interval_from_json(const Json& j);
DiscreteMeasure measure_from_json(const Json& j);
HankelReport hankel_from_json(const Json& j);

// Canonical rendering: two-space indent, trailing newline.
std::string dump_json(const Json& j);

}  // namespace stieltjes
