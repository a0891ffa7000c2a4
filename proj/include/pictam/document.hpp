#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pictam/fincat.hpp"
#include "pictam/gamma.hpp"
#include "pictam/picard.hpp"
#include "pictam/tamsamani.hpp"

namespace pictam {

using Json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

struct Provenance {
  std::string generator;
  std::uint64_t seed = 0;
  Json bounds = Json::object();
};

// kind is one of category, picard, gamma-groupoid, multisimplicial, verdict.
struct Document {
  std::string kind;
  int version = kDocumentVersion;
  Json payload;
  Provenance provenance;
};

Json document_to_json(const Document& d);
// Schema problems raise InputError naming the offending JSON pointer.
Document document_from_json(const Json& j);
Document parse_document(const std::string& text);
// Sorted keys, compact, one trailing newline.
std::string serialize_document(const Document& d);
Document make_document(std::string kind, Json payload, Provenance provenance);

// Ids in payloads are positions in the object and morphism lists.
Json category_payload(const FinCategory& c);
CatPtr category_from_payload(const Json& j, const std::string& at = "/payload");

Json picard_payload(const PicardCategory& p);
PicPtr picard_from_payload(const Json& j, const std::string& at = "/payload");

Json gamma_payload(const GammaGroupoid& a);
GammaPtr gamma_from_payload(const Json& j, const std::string& at = "/payload");

Json multisimplicial_payload(const MultiSimplicialSet& x);
MSSPtr multisimplicial_from_payload(const Json& j, const std::string& at = "/payload");

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string witness;
  Json result;  // null when there is nothing beyond pass/fail
};
// Checks sorted by name; "ok" is the conjunction.
Json verdict_payload(std::vector<CheckResult> checks);
std::vector<CheckResult> verdict_checks(const Json& payload, const std::string& at = "/payload");
CheckResult check_from_report(const std::string& name, const ValidationReport& r);
CheckResult check_from_verdict(const std::string& name, const Verdict& v);

}  // namespace pictam
