#include <doctest.h>

#include <random>

#include "pictam/document.hpp"
#include "pictam/generators.hpp"
#include "pictam/ktheory.hpp"
#include "pictam/suite.hpp"

using namespace pictam;

namespace {

Provenance prov() { return Provenance{"unit test", 5, Json{{"enumeration", 1e6}}}; }

std::string round_trip(const std::string& text) { return serialize_document(parse_document(text)); }

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

Json corrupted_pentagon() {
  auto p = std::make_shared<PicardCategory>(*corpus_instance("split(0,Z/2,0)"));
  p->assoc[0] = split_morphism(*p, 0, 1);
  p->split.reset();
  p->label = "bent-associator";
  return document_to_json(make_document("picard", picard_payload(*p), prov()));
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documents round-trip byte for byte") {
    std::vector<Document> docs;
    docs.push_back(make_document("category", category_payload(*codiscrete_category({"a", "b"})), prov()));
    docs.push_back(make_document("picard", picard_payload(*corpus_instance("split(Z/2,Z/2,beta)")), prov()));
    docs.push_back(make_document("gamma-groupoid", gamma_payload(*capped_monoid_gamma(2)), prov()));
    docs.push_back(make_document("multisimplicial", multisimplicial_payload(nerve_of(*cyclic_group_category(2), 2)),
                                 prov()));
    docs.push_back(make_document("verdict", verdict_payload({{"b", true, "", Json()}, {"a", false, "w", Json(3)}}),
                                 prov()));
    for (const auto& d : docs) {
      CAPTURE(d.kind);
      auto text = serialize_document(d);
      CHECK(text.back() == '\n');
      CHECK(round_trip(text) == text);
      CHECK(document_to_json(parse_document(text)) == document_to_json(d));
    }
  }

  TEST_CASE("verdicts are sorted by name") {
    auto v = verdict_payload({{"z", true, "", Json()}, {"a", true, "", Json()}, {"m", false, "x", Json()}});
    auto checks = verdict_checks(v);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].name == "a");
    CHECK(checks[2].name == "z");
    CHECK(v["ok"] == false);
    CHECK(verdict_payload({})["ok"] == true);
  }

  TEST_CASE("generated models survive serialization and validate again") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      auto text = serialize_document(make_document("picard", picard_payload(*p), prov()));
      auto q = picard_from_payload(parse_document(text).payload);
      CHECK(validate_picard(*q).ok());
      CHECK(picard_payload(*q) == picard_payload(*p));
      auto k = k_theory(p, 2);
      auto g = gamma_from_payload(gamma_payload(*k.gamma));
      CHECK(validate_gamma(*g).ok());
      CHECK(gamma_payload(*g) == gamma_payload(*k.gamma));
    }
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
      auto c = random_category(rng, 4);
      auto d = category_from_payload(category_payload(*c));
      CHECK(validate_category(*d).ok());
      CHECK(category_payload(*d) == category_payload(*c));
    }
    for (const auto& x : generated_multisimplicial(2, 4)) {
      auto y = multisimplicial_from_payload(multisimplicial_payload(*x));
      CHECK(validate_structure(*y).ok());
      CHECK(multisimplicial_payload(*y) == multisimplicial_payload(*x));
    }
  }

  TEST_CASE("missing symmetry component names the pair") {
    auto j = document_to_json(make_document("picard", picard_payload(*corpus_instance("split(Z/2,0,0)")), prov()));
    auto& sym = j["payload"]["symmetry"];
    for (std::size_t i = 0; i < sym.size(); ++i)
      if (sym[i][0] == 1 && sym[i][1] == 0) {
        sym.erase(i);
        break;
      }
    auto msg = error_of([&] { picard_from_payload(document_from_json(j).payload); });
    CHECK(msg == "/payload/symmetry: symmetry component missing for (1,0)");
  }

  TEST_CASE("schema and parse errors carry positions") {
    auto msg = error_of([] { parse_document("{\"kind\": \"picard\",, }"); });
    CHECK(msg.find("parse error at byte") == 0);
    auto j = document_to_json(make_document("category", category_payload(*terminal_category()), prov()));
    j["kind"] = "spectrum";
    CHECK(error_of([&] { document_from_json(j); }).find("/kind") == 0);
    j["kind"] = "category";
    j["payload"]["morphisms"][0][1] = 7;
    CHECK(error_of([&] { category_from_payload(j["payload"]); }).find("/payload/morphisms/0/1") == 0);
  }

  TEST_CASE("config parsing") {
    auto c = suite_config_from_json(Json::object());
    CHECK(c.checks == suite_groups());
    CHECK(c.corpus == corpus_names());
    CHECK(c.eta_samples == 200);
    CHECK_THROWS_AS(suite_config_from_json(Json{{"sed", 1}}), InputError);
    CHECK_THROWS_AS(suite_config_from_json(Json{{"checks", {"everything"}}}), InputError);
    CHECK_THROWS_AS(suite_config_from_json(Json{{"corpus", {"split(Z/4,0,0)"}}}), InputError);
    CHECK_THROWS_AS(suite_config_from_json(Json{{"seed", -1}}), InputError);
    CHECK_THROWS_AS(suite_config_from_json(Json{{"picard_inputs", {"no/such/file.json"}}}), InputError);
  }

  TEST_CASE("empty check list passes with an empty verdict") {
    auto r = run_suite(suite_config_from_json(Json{{"checks", Json::array()}}));
    CHECK(r.exit_code == 0);
    CHECK(r.verdict.kind == "verdict");
    CHECK(r.verdict.payload["checks"].empty());
    CHECK(r.verdict.payload["ok"] == true);
  }

  TEST_CASE("corrupted pentagon fails with an axiom witness") {
    Json cfg{{"checks", Json::array()}, {"picard_inputs", Json::array({corrupted_pentagon()})}};
    auto r = run_suite(suite_config_from_json(cfg));
    CHECK(r.exit_code == 1);
    auto checks = verdict_checks(r.verdict.payload);
    REQUIRE(checks.size() == 1);
    CHECK(checks[0].name == "inputs/0/bent-associator/valid");
    CHECK_FALSE(checks[0].ok);
    CHECK(checks[0].witness.find("pentagon at (0,0,0,0)") != std::string::npos);
  }

  TEST_CASE("suite on the beta model passes and is deterministic") {
    Json cfg{{"seed", 3}, {"corpus", {"split(Z/2,Z/2,beta)"}},
             {"checks", {"picard", "very-special", "comparison", "picardization"}}};
    auto a = run_suite(suite_config_from_json(cfg));
    auto b = run_suite(suite_config_from_json(cfg));
    for (const auto& c : verdict_checks(a.verdict.payload)) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.ok);
    }
    CHECK(a.exit_code == 0);
    CHECK(serialize_document(a.verdict) == serialize_document(b.verdict));
  }

  TEST_CASE("corruption sweep") {
    auto out = corruption_sweep(*corpus_instance("split(Z/2,Z/2,beta)"));
    CHECK(out.components == 16);
    CHECK(out.missed == 0);
    CHECK(out.same_endpoint == 15);
    CHECK(out.wrong_endpoint == 1);
    CHECK(out.valid_alternatives == std::vector<std::string>{"symmetry(1,1)"});
  }
}
