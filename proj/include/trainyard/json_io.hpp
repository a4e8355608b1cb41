#pragma once

#include <json.hpp>

#include "trainyard/counts.hpp"
#include "trainyard/expansion.hpp"
#include "trainyard/integer.hpp"
#include "trainyard/structure.hpp"

namespace trainyard {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers; larger ones become
/// decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const CountSeq& seq);
CountSeq count_seq_from_json(const Json& j);

/// {"kind":"finite","rods":"[...]"} | {"kind":"arith",...} | {"kind":"trains",...}
/// | {"kind":"counts","values":[...]}
Json to_json(const RodSource& src);
RodSource rod_source_from_json(const Json& j);

Json to_json(const Expansion& e);
Json to_json(const PeriodReport& p);
Json to_json(const std::vector<OneExpansion>& hits);
Json to_json(const std::vector<ScalingHit>& hits);
Json to_json(const LucasReport& r);
Json to_json(const BorweinTable& t);

}  // namespace trainyard
