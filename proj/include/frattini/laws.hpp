#pragma once

#include <cstdint>
#include <string>

namespace frattini {

/// Outcome of one exhaustively checked law.  A failing law carries the first
/// counterexample in deterministic element order, so reruns reproduce it.
struct LawCheck {
  LawCheck() = default;
  explicit LawCheck(std::string name) : law(std::move(name)) {}

  std::string law;
  bool passed = true;
  std::uint64_t cases_checked = 0;
  std::uint64_t cases_skipped = 0;
  std::string witness;      // empty when passed
  std::string skip_reason;  // empty unless part of the law did not apply

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

}  // namespace frattini
