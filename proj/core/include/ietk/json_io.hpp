#ifndef IETK_JSON_IO_HPP
#define IETK_JSON_IO_HPP

#include <json.hpp>

#include "ietk/iet.hpp"
#include "ietk/rauzy.hpp"
#include "ietk/targets.hpp"

namespace ietk {

using Json = nlohmann::json;

/// {"perm":[2,1],"lengths":["5/8","3/8"]}
Json iet_to_json(const Iet& t);
Iet iet_from_json(const Json& j);

/// [["lo","hi"], ...] with ExactNumber strings.
Json interval_set_to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const Json& j);

/// {"family":"harmonic","c":"1/10"}, {"family":"power","c":...,"s":...},
/// {"family":"log_harmonic","c":...}, {"family":"blocked","r":2,"base":{...}},
/// {"family":"rigid","n":["2","31"]}, {"family":"explicit","values":[...]}.
Json target_sequence_to_json(const TargetSequence& seq);
TargetSequence target_sequence_from_json(const Json& j);

/// Steps as "abba..." string, matrix as row-major integer arrays, the
/// induced Iet inline.
Json rv_record_to_json(const RvRecord& rec);

}  // namespace ietk

#endif
