// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pictam/document.hpp"
#include "pictam/generators.hpp"
#include "pictam/suite.hpp"

using namespace pictam;

namespace {

constexpr std::uint64_t kSeed = 20261015;

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Timed {
  std::vector<CheckResult> checks;
  double seconds = 0;
};

Timed run(const std::vector<std::string>& corpus, const std::vector<std::string>& groups) {
  SuiteConfig c;
  c.seed = kSeed;
  c.corpus = corpus;
  c.checks = groups;
  auto t0 = std::chrono::steady_clock::now();
  auto r = run_suite(c);
  Timed out;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.checks = verdict_checks(r.verdict.payload);
  return out;
}

// Runs the group once per corpus instance, failing on any failed check or
// an instance slower than the limit.
Outcome per_instance(const std::string& group, double limit,
                     const std::function<std::string(const CheckResult&)>& extra = {}) {
  Outcome o;
  double worst = 0;
  std::size_t checks = 0;
  for (const auto& name : corpus_names()) {
    auto t = run({name}, {group});
    worst = std::max(worst, t.seconds);
    if (t.checks.empty()) {
      o.ok = false;
      o.note = name + ": no checks ran";
      return o;
    }
    for (const auto& c : t.checks) {
      ++checks;
      std::string problem = c.ok ? (extra ? extra(c) : "") : c.witness;
      if (!problem.empty() && o.ok) {
        o.ok = false;
        o.note = c.name + ": " + problem;
      }
    }
    if (t.seconds > limit && o.ok) {
      o.ok = false;
      o.note = name + " took " + std::to_string(t.seconds) + " s";
    }
  }
  if (o.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu checks, slowest instance %.2f s (limit %.0f s)", checks, worst, limit);
    o.note = buf;
  }
  return o;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> fn;
  };
  std::vector<Criterion> criteria{
      {1, "Picard validation and single-component corruption",
       [] {
         return per_instance("picard", 1.0, [](const CheckResult& c) -> std::string {
           if (ends_with(c.name, "/corruption") && c.result.value("components", 0) == 0) return "no components swept";
           return "";
         });
       }},
      {2, "K-theory is very special with the group of objects as pi0 monoid",
       [] { return per_instance("very-special", 30.0); }},
      {3, "2-nerve and underlying simplicial K-theory are one-object Tamsamani 2-groupoids",
       [] { return per_instance("tamsamani", 30.0); }},
      {4, "U F = id, eta natural isomorphism, U natural over Delta",
       [] {
         return per_instance("comparison", 120.0, [](const CheckResult& c) -> std::string {
           if (ends_with(c.name, "/eta_sampled") && c.result.value("draws", 0) < 200) return "fewer than 200 draws";
           return "";
         });
       }},
      {5, "picardization, zeta levelwise equivalence and zeta naturality",
       [] {
         return per_instance("picardization", 120.0, [](const CheckResult& c) -> std::string {
           if (ends_with(c.name, "/zeta_naturality") && c.result["morphisms"].size() < 3)
             return "fewer than 3 morphisms";
           return "";
         });
       }},
      {6, "structural checks",
       [] {
         auto t = run({}, {"structural"});
         Outcome o;
         for (const auto& c : t.checks)
           if (!c.ok && o.ok) o = {false, c.name + ": " + c.witness};
         if (t.checks.size() < 7 && o.ok) o = {false, "expected at least 7 structural checks"};
         if (t.seconds > 60 && o.ok) o = {false, "took " + std::to_string(t.seconds) + " s"};
         if (o.ok) {
           char buf[96];
           std::snprintf(buf, sizeof buf, "%zu checks in %.2f s (limit 60 s)", t.checks.size(), t.seconds);
           o.note = buf;
         }
         return o;
       }},
      {7, "identical verdict documents for identical seeds",
       [] {
         auto c = suite_config_from_json(Json{{"seed", kSeed}});
         auto a = serialize_document(run_suite(c).verdict);
         auto b = serialize_document(run_suite(c).verdict);
         if (a != b) return Outcome{false, "verdict documents differ"};
         auto checks = verdict_checks(parse_document(a).payload);
         for (const auto& g : suite_groups()) {
           bool seen = false;
           for (const auto& ch : checks) seen = seen || ch.name.rfind(g + "/", 0) == 0;
           if (!seen) return Outcome{false, "group " + g + " missing from the full suite"};
         }
         return Outcome{true, std::to_string(checks.size()) + " checks, " + std::to_string(a.size()) +
                                  " bytes, full suite twice"};
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("criterion %d %s  %s  [%s]\n", c.id, o.ok ? "PASS" : "FAIL", c.title, o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
