// Copyright 2026 The gheap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace gheap {

enum class CheckMode { exhaustive, sampled };

inline const char* to_string(CheckMode m) {
  return m == CheckMode::exhaustive ? "exhaustive" : "sampled";
}

/// Outcome of one named check. `witness` is the lexicographically least
/// failing tuple, in the variable order of the identity being checked,
/// and is empty when the check passed.
struct CheckResult {
  std::string name;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t checked = 0;
  bool pass = true;
  std::vector<int> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add_pass(std::string name, CheckMode mode, std::uint64_t checked) {
    checks.push_back({std::move(name), mode, checked, true, {}, {}});
  }

  void add_fail(std::string name, CheckMode mode, std::uint64_t checked,
                std::vector<int> witness, std::string detail) {
    checks.push_back({std::move(name), mode, checked, false,
                      std::move(witness), std::move(detail)});
  }

  void merge(const ValidationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

inline std::string witness_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const CheckResult& c) {
  os << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ["
     << to_string(c.mode) << ", " << c.checked << " tuples]";
  if (!c.pass) {
    os << " witness=" << witness_string(c.witness);
    if (!c.detail.empty()) os << " " << c.detail;
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const ValidationReport& r) {
  for (const auto& c : r.checks) os << c << '\n';
  return os;
}

}  // namespace gheap
