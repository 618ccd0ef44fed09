#include "ostrowski/serialize.hpp"

namespace ostrowski {

namespace {

std::vector<Digit> digit_list(const Json& j, const char* field) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(field) + " must be an array of digits");
  std::vector<Digit> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, std::string(field) + " holds a non-digit");
    out.push_back(v.get<Digit>());
  }
  return out;
}

}  // namespace

Json to_json(const QuadraticNumber& x) { return x.to_string(); }

Json to_json(const ContinuedFraction& cf) {
  Json j;
  Json pre = Json::array();
  for (const auto& a : cf.preperiod) pre.push_back(a.get_str());
  Json per = Json::array();
  for (const auto& a : cf.period) per.push_back(a.get_str());
  j["preperiod"] = std::move(pre);
  j["period"] = std::move(per);
  j["xi"] = cf.xi();
  j["nu"] = cf.nu();
  j["mu"] = cf.mu().get_str();
  j["text"] = cf.to_string();
  return j;
}

Json to_json(const OstrowskiInt& x) {
  Json j;
  j["system"] = x.system()->alpha().to_string();
  j["word"] = x.word();
  j["value"] = ost_decode(x).get_str();
  return j;
}

Json to_json(const DigitSeq& x) {
  Json j;
  j["preamble"] = x.preamble();
  j["cycle"] = x.is_finite() ? Json(nullptr) : Json(x.cycle());
  j["approximate"] = x.approximate();
  return j;
}

OstrowskiInt ostrowski_int_from_json(const Json& j, const SystemPtr& sys) {
  if (j.is_string()) return OstrowskiInt::parse(sys, j.get<std::string>());
  if (!j.is_object() || !j.contains("word") || !j["word"].is_string()) {
    throw Error(ErrorCode::ParseError, "expected {\"word\": ...}");
  }
  return OstrowskiInt::parse(sys, j["word"].get<std::string>());
}

DigitSeq digit_seq_from_json(const Json& j, const SystemPtr& sys) {
  if (j.is_string()) return DigitSeq(sys, parse_word(j.get<std::string>(), sys->mu()));
  if (!j.is_object() || !j.contains("preamble")) throw Error(ErrorCode::ParseError, "expected {\"preamble\": ...}");
  std::vector<Digit> cycle;
  if (j.contains("cycle") && !j["cycle"].is_null()) cycle = digit_list(j["cycle"], "cycle");
  const bool approximate = j.value("approximate", false);
  return DigitSeq(sys, digit_list(j["preamble"], "preamble"), std::move(cycle), approximate);
}

}  // namespace ostrowski
