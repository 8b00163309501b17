#include "ietk/json_io.hpp"

#include "ietk/errors.hpp"

namespace ietk {

namespace {

ExactNumber num_from(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a number string");
  return ExactNumber::parse(j.get<std::string>());
}

}  // namespace

Json iet_to_json(const Iet& t) {
  Json lengths = Json::array();
  for (const auto& l : t.lengths()) lengths.push_back(l.str());
  return Json{{"perm", t.permutation().images()}, {"lengths", lengths}};
}

Iet iet_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("perm") || !j.contains("lengths"))
    throw ParseError("iet needs 'perm' and 'lengths'");
  std::vector<int> images = j.at("perm").get<std::vector<int>>();
  std::vector<ExactNumber> lengths;
  for (const auto& l : j.at("lengths")) lengths.push_back(num_from(l));
  if (images.size() != lengths.size())
    throw ParseError("perm and lengths disagree on d");
  return Iet(std::move(lengths), Permutation(std::move(images)));
}

Json interval_set_to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& iv : s.intervals())
    out.push_back(Json::array({iv.lo.str(), iv.hi.str()}));
  return out;
}

IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("interval set must be an array of pairs");
  std::vector<Interval> parts;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError("interval must be a [lo, hi] pair");
    parts.push_back({num_from(pair[0]), num_from(pair[1])});
  }
  return IntervalSet::from(std::move(parts));
}

Json target_sequence_to_json(const TargetSequence& seq) {
  switch (seq.family()) {
    case TargetSequence::Family::Harmonic:
      return Json{{"family", "harmonic"}, {"c", seq.c().str()}};
    case TargetSequence::Family::Power:
      return Json{{"family", "power"}, {"c", seq.c().str()}, {"s", seq.s()}};
    case TargetSequence::Family::LogHarmonic:
      return Json{{"family", "log_harmonic"}, {"c", seq.c().str()}};
    case TargetSequence::Family::Blocked:
      return Json{{"family", "blocked"},
                  {"r", seq.r()},
                  {"base", target_sequence_to_json(seq.base())}};
    case TargetSequence::Family::Rigid: {
      Json n = Json::array();
      for (const auto& v : seq.rigid_n()) n.push_back(v.str());
      return Json{{"family", "rigid"}, {"n", n}};
    }
    case TargetSequence::Family::Explicit: {
      Json vals = Json::array();
      for (const auto& v : seq.values()) vals.push_back(v.str());
      return Json{{"family", "explicit"}, {"values", vals}};
    }
  }
  throw Error("unreachable");
}

TargetSequence target_sequence_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw ParseError("sequence needs a 'family'");
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "harmonic") return TargetSequence::harmonic(num_from(j.at("c")));
  if (fam == "power")
    return TargetSequence::power(num_from(j.at("c")), j.at("s").get<long>());
  if (fam == "log_harmonic")
    return TargetSequence::log_harmonic(num_from(j.at("c")));
  if (fam == "blocked")
    return TargetSequence::blocked(target_sequence_from_json(j.at("base")),
                                   j.at("r").get<long>());
  if (fam == "rigid") {
    std::vector<Int> n;
    for (const auto& v : j.at("n")) n.push_back(Int(v.get<std::string>()));
    return TargetSequence::rigid(std::move(n));
  }
  if (fam == "explicit") {
    std::vector<ExactNumber> vals;
    for (const auto& v : j.at("values")) vals.push_back(num_from(v));
    return TargetSequence::explicit_list(std::move(vals));
  }
  throw ParseError("unknown sequence family '" + fam + "'");
}

Json rv_record_to_json(const RvRecord& rec) {
  std::string steps;
  for (RvStep s : rec.steps) steps += rv_letter(s);
  Json matrix = Json::array();
  for (int i = 1; i <= rec.matrix.d(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= rec.matrix.d(); ++j)
      row.push_back(rec.matrix.at(i, j).convert_to<long long>());
    matrix.push_back(row);
  }
  return Json{{"steps", steps},
              {"matrix", matrix},
              {"induced", iet_to_json(rec.induced)},
              {"interval_length", rec.interval_length.str()}};
}

}  // namespace ietk
