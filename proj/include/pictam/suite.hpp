#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pictam/document.hpp"
#include "pictam/picard.hpp"

namespace pictam {

// Check groups, one per acceptance criterion 1..6.
const std::vector<std::string>& suite_groups();

struct SuiteConfig {
  std::uint64_t seed = 0;
  double bound = 1e6;
  int eta_samples = 200;
  int category_pairs = 50;
  int truncation_instances = 20;
  int two_category_instances = 6;
  std::vector<std::string> corpus;  // instance labels
  std::vector<std::string> checks;  // group names
  std::vector<Document> picard_inputs;
};

// Missing keys take defaults (all groups, whole corpus); unknown keys, group
// names or corpus labels raise InputError. String entries of picard_inputs
// are paths resolved against base_dir.
SuiteConfig suite_config_from_json(const Json& j, const std::string& base_dir = ".");

struct SuiteResult {
  Document verdict;
  int exit_code = 0;
};
SuiteResult run_suite(const SuiteConfig& config);

// Every single-component replacement of an associator, unitor or symmetry
// component of p; each must be rejected by validate_picard with a violation
// belonging to that component.
struct CorruptionOutcome {
  int components = 0;
  int same_endpoint = 0;  // detected with a replacement of matching endpoints
  int wrong_endpoint = 0;
  int missed = 0;
  std::string first_miss;
  // Components where every replacement with matching endpoints is again a
  // valid Picard structure, so only a wrong-endpoint replacement corrupts.
  std::vector<std::string> valid_alternatives;
};
CorruptionOutcome corruption_sweep(const PicardCategory& p);

}  // namespace pictam
