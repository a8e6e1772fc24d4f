#include "hessec/report.hpp"

#include <sstream>

namespace hessec {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::SKIPPED: return "SKIPPED";
  }
  return "FAIL";
}

int exit_for(Err e) {
  switch (e) {
    case Err::GenericityExhausted:
    case Err::CensusCountMismatch:
    case Err::ExtensionTooLarge:
      return 2;
    case Err::NotPrime:
    case Err::TooSmall:
    case Err::BadCharacteristic:
    case Err::SyntaxError:
    case Err::NotHomogeneous:
    case Err::DegreeMismatch:
    case Err::DegreeTooSmall:
    case Err::ZeroInput:
    case Err::ConstantInput:
    case Err::FieldMismatch:
    case Err::DegeneratePencil:
    case Err::BadInput:
      return 3;
    default:
      return 1;
  }
}

namespace {

// "c" | "c*a" | "c*a^k", suppressing unit coefficients on positive powers
void append_term(std::ostringstream& os, bool& first, uint64_t c, size_t k) {
  if (c == 0) return;
  if (!first) os << " + ";
  first = false;
  if (k == 0) {
    os << c;
    return;
  }
  if (c != 1) os << c << "*";
  os << "a";
  if (k > 1) os << "^" << k;
}

}  // namespace

std::string elem_str(const ExtField& K, const ExtField::Elem& e) {
  std::vector<uint64_t> res = K.canonical(e);
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < res.size(); ++k) append_term(os, first, res[k], k);
  if (first) os << 0;
  return os.str();
}

std::string modulus_str(const ExtField& K) {
  const PrimeField& b = K.base();
  std::ostringstream os;
  os << "a";
  if (K.degree() > 1) os << "^" << K.degree();
  const auto& low = K.modulus_low();
  bool first = false;
  for (size_t k = low.size(); k-- > 0;) append_term(os, first, b.to_u64(low[k]), k);
  return os.str();
}

Json field_json(const ExtField& K) {
  Json j;
  j["degree"] = K.degree();
  j["modulus"] = modulus_str(K);
  return j;
}

Json value_json(const AlgValue& a) {
  Json j;
  j["value"] = elem_str(a.K, a.v);
  j["field"] = field_json(a.K);
  return j;
}

Json point_json(const AlgPoint& P) {
  Json j;
  j["x"] = elem_str(P.K, P.x);
  j["y"] = elem_str(P.K, P.y);
  j["z"] = elem_str(P.K, P.z);
  j["field"] = field_json(P.K);
  return j;
}

Json param_json(const PrimeField& F, Param t) {
  return Json(t.infinite ? "infinity" : std::to_string(F.to_u64(t.v)));
}

Json clause_json(const ClauseResult& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  j["evidence"] = c.evidence;
  return j;
}

Json count_json(const CountCheck& c) {
  Json j;
  j["what"] = c.what;
  j["expected"] = c.expected;
  j["found"] = c.found;
  return j;
}

Json theorem_json(const PrimeField& F, const TheoremReport& r) {
  Json j;
  j["degree"] = r.d;
  j["clause_i"] = clause_json(r.clause_i);
  j["clause_ii"] = clause_json(r.clause_ii);
  j["clause_iii"] = clause_json(r.clause_iii);
  j["counts"] = Json::array();
  for (const auto& c : r.counts) j["counts"].push_back(count_json(c));
  j["fibers"] = Json::array();
  for (const auto& fd : r.fibers) {
    Json f;
    f["t"] = param_json(F, fd.t);
    f["total"] = fd.total;
    f["contacts"] = Json::array();
    for (const auto& ct : fd.contacts) {
      Json c;
      c["point"] = point_json(ct.pt);
      c["order"] = ct.order;
      c["base"] = ct.base;
      f["contacts"].push_back(c);
    }
    j["fibers"].push_back(f);
  }
  return j;
}

Json census_json(const Census& c, long long expected) {
  Json j;
  j["expected"] = expected;
  j["found"] = (long long)c.records.size();
  j["complete"] = c.complete;
  j["records"] = Json::array();
  for (const auto& rec : c.records) {
    Json r;
    r["t"] = value_json(rec.t);
    r["point"] = point_json(rec.pt);
    r["tangent_mult"] = rec.tangent_mult;
    j["records"].push_back(r);
  }
  return j;
}

Json expected_counts_json(const ExpectedCounts& c) {
  Json j;
  j["d"] = c.d;
  j["deg_hesse"] = c.deg_hesse;
  j["genus"] = c.genus;
  j["flexes"] = c.flexes;
  j["nodes"] = c.nodes;
  j["hyperflex"] = c.hyperflex;
  j["base"] = c.base;
  return j;
}

Json audit_row_json(long long d) {
  Json j;
  j["d"] = d;
  j["expected_counts"] = expected_counts_json(expected_counts(d));
  ClauseResult rows[4] = {counts_audit(d), adjunction_audit(d), hurwitz_audit(d),
                          delta_audit(d)};
  const char* names[4] = {"counts", "adjunction", "covering", "delta"};
  bool all = true;
  for (int i = 0; i < 4; ++i) {
    j[names[i]] = clause_json(rows[i]);
    all = all && rows[i].verdict == Verdict::PASS;
  }
  j["verdict"] = all ? "PASS" : "FAIL";
  return j;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace hessec
