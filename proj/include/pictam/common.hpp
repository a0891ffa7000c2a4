#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pictam {

using Id = std::int32_t;
inline constexpr Id kNone = -1;

// Malformed input: dangling identifiers, schema errors, rank mismatches.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced data that violates an invariant the theory
// guarantees. Always a bug signal.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Refusal to run an exhaustive search above the configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate(estimate) {}
  double estimate;
};

struct Violation {
  std::string condition;
  std::string witness;
  std::size_t count = 1;
};

// One entry per violated condition; the first witness found is kept and
// later occurrences are only counted.
class ValidationReport {
 public:
  void add(const std::string& condition, const std::string& witness);
  void merge(const ValidationReport& other, const std::string& prefix = "");

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  bool has(const std::string& condition) const;
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return ok; }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

struct VecHash {
  std::size_t operator()(const std::vector<Id>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Id x : v) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pictam
