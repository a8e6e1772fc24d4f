#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hessec/fields.hpp"
#include "hessec/upoly.hpp"

using namespace hessec;

namespace {

template <class Fn>
Err thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::BadInput;  // sentinel misuse: caller asserts a specific code
}

}  // namespace

TEST_CASE("prime field policy") {
  CHECK_NOTHROW(make_prime_field(2305843009213693951ull));  // 2^61 - 1
  CHECK(thrown_code([] { make_prime_field(4); }) == Err::NotPrime);
  CHECK(thrown_code([] { make_prime_field(2305843009213693953ull); }) == Err::NotPrime);
  CHECK(thrown_code([] { make_prime_field(7); }) == Err::TooSmall);
  CHECK(thrown_code([] { make_prime_field(2147483647ull); }) == Err::TooSmall);  // keeps 2^31-1 out
  CHECK(thrown_code([] { make_prime_field(2); }) == Err::BadCharacteristic);
  CHECK(thrown_code([] { make_prime_field(3); }) == Err::BadCharacteristic);
  // composite beyond the word bound still reports compositeness first
  CHECK(thrown_code([] { make_prime_field((1ull << 63) + 9); }) == Err::NotPrime);
  CHECK(thrown_code([] { make_prime_field(18446744073709551557ull); }) == Err::BadInput);
}

TEST_CASE("primality testing") {
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(!is_probable_prime(0));
  CHECK(!is_probable_prime(1));
  CHECK(!is_probable_prime(561));                    // Carmichael
  CHECK(!is_probable_prime(341));                    // 2-pseudoprime
  CHECK(is_probable_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK(!is_probable_prime(2305843009213693951ull * 3));
  CHECK(is_probable_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK(!is_probable_prime(3825123056546413051ull));  // strong pseudoprime to bases 2..23
}

TEST_CASE("derived primes") {
  for (uint64_t seed : {0ull, 1ull, 42ull, 0xdeadbeefull}) {
    uint64_t p1 = derive_prime(seed);
    uint64_t p2 = derive_prime(seed);
    CHECK(p1 == p2);  // deterministic
    CHECK(is_probable_prime(p1));
    CHECK(p1 > (1ull << 61));
    CHECK(p1 < (1ull << 62));
  }
  CHECK(derive_prime(0) != derive_prime(1));
}

TEST_CASE("montgomery representation round trip") {
  PrimeField F = make_prime_field(derive_prime(7));
  Rng rng(99);
  for (int i = 0; i < 10000; ++i) {
    uint64_t v = rng.next() % F.p;
    CHECK(F.to_u64(F.from_u64(v)) == v);
  }
  CHECK(F.to_u64(F.one()) == 1);
  CHECK(F.to_u64(F.zero()) == 0);
}

TEST_CASE("small field arithmetic oracle") {
  PrimeField F7 = PrimeField::unchecked(7);
  CHECK(F7.to_u64(F7.inv(F7.from_u64(3))) == 5);  // 3*5 = 15 = 1 mod 7
  CHECK(F7.to_u64(F7.add(F7.from_u64(5), F7.from_u64(4))) == 2);
  CHECK(F7.to_u64(F7.mul(F7.from_u64(5), F7.from_u64(4))) == 6);
  CHECK(F7.to_u64(F7.neg(F7.from_u64(2))) == 5);
  CHECK(F7.to_u64(F7.sub(F7.from_u64(1), F7.from_u64(5))) == 3);
  CHECK(F7.to_u64(F7.from_i64(-6)) == 1);
  CHECK(F7.to_u64(F7.pow_u64(F7.from_u64(3), 6)) == 1);  // Fermat
  CHECK(thrown_code([&] { F7.inv(F7.zero()); }) == Err::DivisionByZero);
}

TEST_CASE("prime field axioms, randomized") {
  PrimeField F = make_prime_field(derive_prime(3));
  Rng rng(12345);
  for (int i = 0; i < 10000; ++i) {
    auto a = F.rand_elem(rng), b = F.rand_elem(rng), c = F.rand_elem(rng);
    CHECK(F.eq(F.add(a, b), F.add(b, a)));
    CHECK(F.eq(F.mul(a, b), F.mul(b, a)));
    CHECK(F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
    CHECK(F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
    CHECK(F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
    CHECK(F.eq(F.sub(a, b), F.add(a, F.neg(b))));
    if (!F.is_zero(a)) CHECK(F.eq(F.mul(a, F.inv(a)), F.one()));
  }
}

TEST_CASE("canonical extension modulus") {
  PrimeField F5 = PrimeField::unchecked(5);
  ExtField K = make_extension(F5, 2);
  // enumeration order: x^2, x^2+1 (reducible: 2^2=-1), then x^2+2 (irreducible)
  REQUIRE(K.degree() == 2);
  std::vector<uint64_t> low;
  for (auto c : K.modulus_low()) low.push_back(F5.to_u64(c));
  CHECK(low == std::vector<uint64_t>{2, 0});
}

TEST_CASE("extension arithmetic in F_25") {
  PrimeField F5 = PrimeField::unchecked(5);
  ExtField K = make_extension(F5, 2);  // alpha^2 = -2 = 3
  auto a = K.gen();
  CHECK(K.canonical(K.mul(a, a)) == std::vector<uint64_t>{3, 0});
  CHECK(K.canonical(K.frobenius(a)) == std::vector<uint64_t>{0, 4});  // alpha^5 = 9 alpha
  CHECK(K.eq(K.frobenius(K.frobenius(a)), a));
  CHECK(K.eq(K.pow_u64(a, 24), K.one()));  // |F_25^*| = 24
  BigUint e = BigUint::pow_u64(5, 2);
  e.sub_u64(1);
  CHECK(K.eq(K.pow_big(a, e), K.one()));
  CHECK(thrown_code([&] { K.inv(K.zero()); }) == Err::DivisionByZero);
}

TEST_CASE("extension field axioms and inverses, randomized") {
  PrimeField F = make_prime_field(derive_prime(11));
  for (uint32_t k : {2u, 3u, 5u}) {
    ExtField K = make_extension(F, k);
    Rng rng(777 + k);
    for (int i = 0; i < 400; ++i) {
      auto a = K.rand_elem(rng), b = K.rand_elem(rng), c = K.rand_elem(rng);
      CHECK(K.eq(K.mul(a, b), K.mul(b, a)));
      CHECK(K.eq(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c))));
      CHECK(K.eq(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c))));
      if (!K.is_zero(a)) CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
      // Frobenius is a ring homomorphism fixing the base
      CHECK(K.eq(K.frobenius(K.mul(a, b)), K.mul(K.frobenius(a), K.frobenius(b))));
      CHECK(K.eq(K.frobenius(K.add(a, b)), K.add(K.frobenius(a), K.frobenius(b))));
    }
    // order-k Frobenius is the identity
    auto a = K.rand_elem(rng);
    auto s = a;
    for (uint32_t j = 0; j < k; ++j) s = K.frobenius(s);
    CHECK(K.eq(s, a));
    // base elements are fixed
    auto be = K.embed_base(F.from_u64(12345));
    CHECK(K.eq(K.frobenius(be), be));
  }
}

TEST_CASE("degree-1 wrapper matches the base field") {
  PrimeField F = make_prime_field(derive_prime(5));
  ExtField K = wrap_base(F);
  CHECK(K.degree() == 1);
  Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    auto a = F.rand_elem(rng), b = F.rand_elem(rng);
    auto ea = K.embed_base(a), eb = K.embed_base(b);
    CHECK(K.canonical(K.mul(ea, eb)) == std::vector<uint64_t>{F.to_u64(F.mul(a, b))});
    CHECK(K.canonical(K.add(ea, eb)) == std::vector<uint64_t>{F.to_u64(F.add(a, b))});
    if (!F.is_zero(a)) CHECK(K.canonical(K.inv(ea)) == std::vector<uint64_t>{F.to_u64(F.inv(a))});
  }
}

TEST_CASE("rng determinism and child independence") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  // children depend on the root seed, not on the parent's consumption point
  Rng c(42);
  Rng child_before = c.child("stream");
  for (int i = 0; i < 17; ++i) c.next();
  Rng child_after = c.child("stream");
  CHECK(child_before.next() == child_after.next());
  CHECK(Rng(42).child("a").next() != Rng(42).child("b").next());
  CHECK(Rng(42).child("a", 0).next() != Rng(42).child("a", 1).next());
}

TEST_CASE("biguint basics") {
  BigUint b = BigUint::pow_u64(5, 30);  // 5^30 needs > 64 bits
  CHECK(b.bits() == 70);
  BigUint c = BigUint::from_u64(1);
  for (int i = 0; i < 30; ++i) c.mul_u64(5);
  CHECK(c.w == b.w);
  CHECK(c.bit(0) == 1);  // 5^30 is odd
  BigUint d = BigUint::pow_u64(2, 64);
  d.sub_u64(1);
  CHECK(d.bits() == 64);
  d.shr1();
  CHECK(d.bits() == 63);
}

TEST_CASE("canonical rendering") {
  CHECK(canonical_to_string({5}) == "5");
  CHECK(canonical_to_string({0, 4}) == "0,4");
}
