#pragma once

// JSON encodings. Field order is fixed (ordered_json) so identical inputs
// serialize byte-identically. Big integers travel as decimal strings.

#include "json.hpp"

#include "surdbits/bigint.hpp"
#include "surdbits/boxes.hpp"
#include "surdbits/expansion.hpp"
#include "surdbits/findiff.hpp"
#include "surdbits/surd.hpp"

namespace surdbits {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json nat_json(const Nat& v);
Json surd_json(const QuadraticSurd& x);

/// {"s":...} when omega is lambda(s), otherwise {"surd":{...}}; then "flips".
Json pair_json(const PerturbationPair& pair);

Json frequency_json(const FrequencyPoint& p);
Json report_json(const DifferenceReport& rep, const PerturbationPair& pair);

}  // namespace surdbits
