#include "ecassoc/serialize.hpp"

#include "ecassoc/error.hpp"

namespace ecassoc {

namespace {

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) raise(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& err) {
    raise(ErrorCode::ParseError, std::string("bad value for '") + key + "': " + err.what());
  }
}

Json failure_to_json(const SweepFailure& f) {
  return Json{{"curve", f.curve}, {"triple", f.triple}, {"error", f.error}, {"certificate", f.certificate}};
}

SweepFailure failure_from_json(const Json& j) {
  return {get_field<std::string>(j, "curve"), get_field<std::array<std::string, 3>>(j, "triple"),
          get_field<std::string>(j, "error"), get_field<std::string>(j, "certificate")};
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    checks.push_back(Json{{"name", c.name}, {"claim", c.claim}, {"witnesses", c.witnesses}, {"pass", c.pass}});
  }
  Json children = Json::array();
  for (const auto& child : cert.children) children.push_back(certificate_to_json(child));
  return Json{
      {"field", cert.field},
      {"curve", cert.curve},
      {"triple", cert.triple},
      {"path", std::string(path_name(cert.path))},
      {"case_or_lemma", cert.case_or_lemma ? Json(*cert.case_or_lemma) : Json(nullptr)},
      {"checks", std::move(checks)},
      {"patterns", cert.patterns},
      {"swap_pr", cert.swap_pr},
      {"children", std::move(children)},
      {"verdict", cert.verdict},
  };
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.field = get_field<std::string>(j, "field");
  cert.curve = get_field<std::string>(j, "curve");
  cert.triple = get_field<std::array<std::string, 3>>(j, "triple");
  const auto path = path_from_name(get_field<std::string>(j, "path"));
  if (!path) raise(ErrorCode::ParseError, "unknown certificate path '" + j.at("path").get<std::string>() + "'");
  cert.path = *path;
  if (!j.contains("case_or_lemma")) raise(ErrorCode::ParseError, "missing key 'case_or_lemma'");
  if (!j.at("case_or_lemma").is_null()) cert.case_or_lemma = get_field<int>(j, "case_or_lemma");
  for (const auto& c : get_field<Json>(j, "checks")) {
    cert.checks.push_back({get_field<std::string>(c, "name"), get_field<std::string>(c, "claim"),
                           get_field<std::map<std::string, std::string>>(c, "witnesses"), get_field<bool>(c, "pass")});
  }
  cert.patterns = get_field<std::vector<std::string>>(j, "patterns");
  cert.swap_pr = get_field<bool>(j, "swap_pr");
  for (const auto& child : get_field<Json>(j, "children")) cert.children.push_back(certificate_from_json(child));
  cert.verdict = get_field<bool>(j, "verdict");
  return cert;
}

Json report_to_json(const SweepReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(failure_to_json(f));
  return Json{
      {"field", report.field},
      {"curves_tested", report.curves_tested},
      {"triples_tested", report.triples_tested},
      {"histogram", report.histogram},
      {"nodes", report.nodes},
      {"patterns", report.patterns},
      {"prop1_zero_xy2", report.prop1_zero_xy2},
      {"failures", std::move(failures)},
      {"certificate_digest", report.certificate_digest},
  };
}

SweepReport report_from_json(const Json& j) {
  SweepReport r;
  r.field = get_field<std::string>(j, "field");
  r.curves_tested = get_field<std::uint64_t>(j, "curves_tested");
  r.triples_tested = get_field<std::uint64_t>(j, "triples_tested");
  r.histogram = get_field<std::map<std::string, std::uint64_t>>(j, "histogram");
  r.nodes = get_field<std::map<std::string, std::uint64_t>>(j, "nodes");
  r.patterns = get_field<std::map<std::string, std::uint64_t>>(j, "patterns");
  r.prop1_zero_xy2 = get_field<std::uint64_t>(j, "prop1_zero_xy2");
  for (const auto& f : get_field<Json>(j, "failures")) r.failures.push_back(failure_from_json(f));
  r.certificate_digest = get_field<std::string>(j, "certificate_digest");
  return r;
}

Json sweep_document(const std::vector<SweepReport>& reports) {
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  return Json{{"reports", std::move(list)}, {"unattained_patterns", unattained_patterns(reports)}};
}

Json axiom_report_to_json(const AxiomReport& report) {
  return Json{
      {"field", report.field},
      {"curve", report.curve},
      {"points", report.points},
      {"identity_checks", report.identity_checks},
      {"inverse_checks", report.inverse_checks},
      {"commutativity_checks", report.commutativity_checks},
      {"associativity_checks", report.associativity_checks},
  };
}

Json rational_check_to_json(const RationalSpotCheck& check) {
  Json failures = Json::array();
  for (const auto& f : check.failures) failures.push_back(failure_to_json(f));
  return Json{
      {"curve", check.curve},
      {"points", check.points},
      {"triples", check.triples},
      {"histogram", check.histogram},
      {"failures", std::move(failures)},
      {"axioms", axiom_report_to_json(check.axioms)},
  };
}

std::string canonical_dump(const Json& j) { return j.dump(2); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& err) {
    raise(ErrorCode::ParseError, std::string("malformed JSON: ") + err.what());
  }
}

}  // namespace ecassoc
