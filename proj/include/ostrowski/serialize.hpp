#pragma once

#include <json.hpp>

#include "ostrowski/contfrac.hpp"
#include "ostrowski/ostrowski_int.hpp"
#include "ostrowski/ostrowski_real.hpp"

namespace ostrowski {

using Json = nlohmann::ordered_json;

Json to_json(const QuadraticNumber& x);
Json to_json(const ContinuedFraction& cf);
// {system, word, value}
Json to_json(const OstrowskiInt& x);
// {preamble, cycle, approximate}; cycle is null when finite.
Json to_json(const DigitSeq& x);

OstrowskiInt ostrowski_int_from_json(const Json& j, const SystemPtr& sys);
// Accepts the object form or a plain MSD-first word string.  Throws
// ParseError on malformed input.
DigitSeq digit_seq_from_json(const Json& j, const SystemPtr& sys);

}  // namespace ostrowski
