#pragma once

#include <string>

namespace hessec {

enum class Verdict { PASS, FAIL, SKIPPED };

// One verification clause or audit with a human- and machine-readable account
// of the numbers that decided it.
struct ClauseResult {
  Verdict verdict = Verdict::SKIPPED;
  std::string evidence;
};

struct CountCheck {
  std::string what;
  long long expected = 0;
  long long found = 0;
};

}  // namespace hessec
