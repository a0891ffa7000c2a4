#include "pictam/common.hpp"

namespace pictam {

void ValidationReport::add(const std::string& condition, const std::string& witness) {
  for (auto& v : violations_) {
    if (v.condition == condition) {
      ++v.count;
      return;
    }
  }
  violations_.push_back({condition, witness, 1});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations_) {
    std::string c = prefix.empty() ? v.condition : prefix + "." + v.condition;
    bool found = false;
    for (auto& mine : violations_) {
      if (mine.condition == c) {
        mine.count += v.count;
        found = true;
        break;
      }
    }
    if (!found) violations_.push_back({c, v.witness, v.count});
  }
}

bool ValidationReport::has(const std::string& condition) const {
  for (const auto& v : violations_)
    if (v.condition == condition) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations_) {
    if (!out.empty()) out += "; ";
    out += v.condition + " at " + v.witness;
    if (v.count > 1) out += " (+" + std::to_string(v.count - 1) + " more)";
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace pictam
