#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "hessec/audits.hpp"
#include "hessec/flexes.hpp"
#include "hessec/hessecurve.hpp"

namespace hessec {

inline constexpr const char* kToolVersion = "hessec 1.0.0";
inline constexpr const char* kSchema = "hessec/1";

using Json = nlohmann::ordered_json;

// One parsed invocation.  Everything that influences the result lives here;
// `out_path` and `quiet` only steer where the two output streams go.
struct RunConfig {
  std::string subcommand;  // verify | hesse | flexes | singular-fibers | hyperflexes | audit
  int d = 0;
  uint64_t seed = 0;
  uint64_t prime = 0;  // 0 = derive from the seed
  bool long_run = false;
  bool quiet = false;
  std::string out_path;
  std::string cache_path;
  std::string f0_text, f1_text;  // hesse
  std::string t_text;            // flexes: member parameter, decimal or "inf"
  std::string range_text;        // audit: "a..b"
};

// A finished run: the JSON document (stdout or --out), the human summary
// (stderr), and the process exit code.  The document is byte-identical across
// identical invocations except for the top-level "timings" object.
struct Report {
  Json doc;
  std::string summary;
  std::string overall;  // PASS | FAIL | INDETERMINATE
  int exit_code = 0;    // 0 PASS, 1 FAIL, 2 could not decide, 3 bad input
};

const char* verdict_name(Verdict v);

// Exit code for an error escaping a command: genericity/capacity exhaustion
// and census mismatches ask for a reseed (2), malformed input is 3, anything
// else surfaces as a verification failure (1).
int exit_for(Err e);

// Decimal-residue strings: an extension element prints as a polynomial in
// the generator "a" with canonical decimal coefficients ("3 + 5*a + 7*a^2",
// degree-1 extensions collapse to a plain residue), the modulus as the monic
// polynomial it is.
std::string elem_str(const ExtField& K, const ExtField::Elem& e);
std::string modulus_str(const ExtField& K);

Json field_json(const ExtField& K);
Json value_json(const AlgValue& a);
Json point_json(const AlgPoint& P);
Json param_json(const PrimeField& F, Param t);
Json clause_json(const ClauseResult& c);
Json count_json(const CountCheck& c);
Json theorem_json(const PrimeField& F, const TheoremReport& r);
Json census_json(const Census& c, long long expected);
Json expected_counts_json(const ExpectedCounts& c);

// All four closed-form audits at one degree, with a row-level verdict.
Json audit_row_json(long long d);

// Final serialization: 2-space indent, trailing newline, UTF-8.
std::string render_json(const Json& doc);

// Dispatch on cfg.subcommand; never throws (errors become reports).
Report run_command(const RunConfig& cfg);

}  // namespace hessec
