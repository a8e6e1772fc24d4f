#include <cctype>

#include "hessec/mpoly.hpp"

namespace hessec {

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip();
    return s[i++];
  }
  [[noreturn]] void bad(const std::string& what) {
    fail(Err::SyntaxError, what + " at position " + std::to_string(i));
  }
  uint64_t integer(uint64_t cap) {
    skip();
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) bad("expected integer");
    uint64_t v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      v = v * 10 + (uint64_t)(s[i] - '0');
      if (v > cap) bad("integer too large");
      ++i;
    }
    return v;
  }
};

}  // namespace

Form parse_form(const PrimeField& f, const std::string& src, int expect_deg) {
  Scanner sc{src};
  struct RawTerm {
    PrimeField::Elem coeff;
    int a, b, c;
  };
  std::vector<RawTerm> terms;

  bool first = true;
  while (true) {
    if (sc.done()) {
      if (first) sc.bad("empty input");
      break;
    }
    bool negative = false;
    if (!first) {
      char op = sc.take();
      if (op == '+') {
        negative = false;
      } else if (op == '-') {
        negative = true;
      } else {
        sc.bad("expected '+' or '-'");
      }
    } else if (sc.peek() == '-') {
      sc.take();
      negative = true;
    }
    first = false;

    RawTerm t{f.one(), 0, 0, 0};
    bool any_factor = false;
    while (true) {
      char ch = sc.peek();
      if (std::isdigit((unsigned char)ch)) {
        // fold digits in the field so arbitrarily large literals reduce mod p
        PrimeField::Elem v = f.zero();
        PrimeField::Elem ten = f.from_u64(10);
        sc.skip();
        while (sc.i < src.size() && std::isdigit((unsigned char)src[sc.i])) {
          v = f.add(f.mul(v, ten), f.from_u64((uint64_t)(src[sc.i] - '0')));
          ++sc.i;
        }
        int e = 1;
        if (sc.peek() == '^') {
          sc.take();
          e = (int)sc.integer(1u << 16);
        }
        t.coeff = f.mul(t.coeff, f.pow_u64(v, (uint64_t)e));
      } else if (ch == 'x' || ch == 'y' || ch == 'z') {
        sc.take();
        int e = 1;
        if (sc.peek() == '^') {
          sc.take();
          e = (int)sc.integer(1u << 16);
        }
        if (ch == 'x') t.a += e;
        else if (ch == 'y') t.b += e;
        else t.c += e;
      } else {
        sc.bad("expected coefficient or variable");
      }
      any_factor = true;
      if (sc.peek() == '*') {
        sc.take();
        continue;
      }
      break;
    }
    if (!any_factor) sc.bad("empty term");
    if (negative) t.coeff = f.neg(t.coeff);
    terms.push_back(t);
  }

  // homogeneity on syntactic exponents
  int deg = terms[0].a + terms[0].b + terms[0].c;
  for (auto& t : terms)
    if (t.a + t.b + t.c != deg) fail(Err::NotHomogeneous, "terms of unequal total degree");

  bool all_zero = true;
  for (auto& t : terms)
    if (!f.is_zero(t.coeff)) all_zero = false;
  if (all_zero) {
    // a literal zero adapts to the expected degree rather than clashing with it
    return form_zero(f, expect_deg >= 0 ? expect_deg : deg);
  }
  if (expect_deg >= 0 && deg != expect_deg)
    fail(Err::DegreeMismatch, "form degree " + std::to_string(deg) + ", expected " +
                                  std::to_string(expect_deg));

  Form g = form_zero(f, deg);
  for (auto& t : terms)
    form_add_term(g, Mono{(uint16_t)t.a, (uint16_t)t.b, (uint16_t)t.c}, t.coeff);
  return g;
}

std::string print_form(const Form& g) {
  if (g.zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = g.t.rbegin(); it != g.t.rend(); ++it) {
    const Mono& m = it->first;
    uint64_t c = g.f.to_u64(it->second);
    if (!first) out += '+';
    first = false;
    std::vector<std::string> parts;
    bool bare_mono = m.a || m.b || m.c;
    if (c != 1 || !bare_mono) parts.push_back(std::to_string(c));
    auto var = [&](char name, uint16_t e) {
      if (!e) return;
      std::string s(1, name);
      if (e >= 2) s += "^" + std::to_string(e);
      parts.push_back(s);
    };
    var('x', m.a);
    var('y', m.b);
    var('z', m.c);
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) out += '*';
      out += parts[i];
    }
  }
  return out;
}

}  // namespace hessec
