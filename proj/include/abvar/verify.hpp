#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

namespace abvar {

class UnknownIdentity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IdentityReport {
  std::string identity;
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// "exhaustive" when every basis class was checked, otherwise "random".
  std::string mode;
  /// Planned instances: basis classes or random draws.
  std::size_t instances = 0;
  /// Instances on which every equality held.
  std::size_t verified = 0;
  /// Individual equalities evaluated.
  std::size_t checks = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

/// Names accepted by verifyIdentity, in report order.
const std::vector<std::string>& identityNames();

/// Runs the named identity for dimension n. Single-argument identities
/// sweep the whole basis when it has at most 64 elements and otherwise
/// draw `trials` random classes; identities over several inputs always use
/// `trials` seeded random instances.
IdentityReport verifyIdentity(const std::string& name, int n, int trials, std::uint64_t seed);

/// One line, e.g. "inversion n=1 seed=0: PASS (4/4 basis classes, 8 checks)", plus a
/// counterexample line on failure.
std::string formatText(const IdentityReport& report);
nlohmann::ordered_json toJson(const IdentityReport& report);

/// Seeded draws shared by the harness and the tests. Values are reduced
/// modulo the range instead of going through std distributions, whose
/// output differs between standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace abvar
