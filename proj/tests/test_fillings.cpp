#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "lensfill/fillings.hpp"

using namespace lensfill;

namespace {

LensSpace lens(long p, long q) { return make_lens(Int(p), Int(q)); }

bool is_square_free(long p) {
  for (long d = 2; d * d <= p; ++d)
    if (p % (d * d) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("lens space validation") {
  CHECK_THROWS_AS(make_lens(Int(4), Int(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_lens(Int(3), Int(3)), std::invalid_argument);
  CHECK_THROWS_AS(make_lens(Int(3), Int(0)), std::invalid_argument);
  CHECK_THROWS_AS(make_lens(Int(3), Int(5)), std::invalid_argument);
}

TEST_CASE("lens_canonical on the worked examples, idempotent, classifying") {
  CHECK(lens_canonical(lens(9, 7)) == lens(9, 4));
  CHECK(lens_canonical(lens(9, 2)) == lens(9, 2));
  CHECK(lens_canonical(lens(2, 1)) == lens(2, 1));
  CHECK(lens_canonical(lens(9, 5)) == lens(9, 2));

  for (long p = 2; p <= 100; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      LensSpace c = lens_canonical(lens(p, q));
      REQUIRE(lens_canonical(c) == c);
      Int qinv;
      mpz_invert(qinv.get_mpz_t(), Int(q).get_mpz_t(), Int(p).get_mpz_t());
      REQUIRE(lens_canonical(LensSpace{p, qinv}) == c);
    }
}

TEST_CASE("fillings of L(4,1): the exceptional pair") {
  auto fs = fillings_of(lens(4, 1));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].cap == Tuple{2, 2, 2});
  CHECK(fs[0].tuple == ZeroTuple{1, 2, 1});
  CHECK(fs[0].b2 == 1);
  CHECK(fs[0].pi1 == 1);
  CHECK(!fs[0].extremal.has_value());
  CHECK(fs[1].tuple == ZeroTuple{2, 1, 2});
  CHECK(fs[1].b2 == 0);
  CHECK(fs[1].pi1 == 2);
  REQUIRE(fs[1].extremal.has_value());
  CHECK(*fs[1].extremal == ExtremalForm{1, 2, 1});
}

TEST_CASE("fillings of L(9,2): simply connected one and the rational ball") {
  auto fs = fillings_of(lens(9, 2));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].cap == Tuple{2, 2, 2, 3});
  CHECK(fs[0].tuple == ZeroTuple{1, 2, 2, 1});
  CHECK(fs[0].b2 == 2);
  CHECK(fs[0].pi1 == 1);
  CHECK(fs[1].tuple == ZeroTuple{2, 2, 1, 3});
  CHECK(fs[1].b2 == 0);
  CHECK(fs[1].pi1 == 3);
  REQUIRE(fs[1].extremal.has_value());
  // d/c = value of (2,2) = 3/2; L(1*9, 1*3*2 - 1) = L(9,5) which is L(9,2)
  CHECK(*fs[1].extremal == ExtremalForm{1, 3, 2});
}

TEST_CASE("fillings of L(5,1): unique, from cap (2,2,2,2)") {
  auto fs = fillings_of(lens(5, 1));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].cap == Tuple{2, 2, 2, 2});
  CHECK(fs[0].tuple == ZeroTuple{1, 2, 2, 1});
  CHECK(fs[0].b2 == 1);  // sum(cap - tuple) - 1
  CHECK(fs[0].pi1 == 1);
}

TEST_CASE("fillings of L(8,3)") {
  auto fs = fillings_of(lens(8, 3));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].cap == Tuple{2, 3, 2});
  CHECK(fs[0].tuple == ZeroTuple{1, 2, 1});
  CHECK(fs[0].b2 == 2);
  CHECK(fs[0].pi1 == 1);
  CHECK(fs[1].tuple == ZeroTuple{2, 1, 2});
  CHECK(fs[1].b2 == 1);
  CHECK(fs[1].pi1 == 2);
  REQUIRE(fs[1].extremal.has_value());
  CHECK(*fs[1].extremal == ExtremalForm{2, 2, 1});
}

TEST_CASE("pi1_order on the worked examples") {
  CHECK(pi1_order(Tuple{2, 2, 2}, {2, 1, 2}) == 2);
  CHECK(pi1_order(Tuple{2, 2, 2}, {1, 2, 1}) == 1);
  CHECK(pi1_order(Tuple{2, 2, 2, 3}, {2, 2, 1, 3}) == 3);
  CHECK_THROWS_AS(pi1_order(Tuple{2, 2}, {1, 2, 1}), std::invalid_argument);
}

TEST_CASE("L(p,1) has a unique filling except for p = 4") {
  for (long p = 2; p <= 30; ++p) {
    auto fs = fillings_of(lens(p, 1));
    REQUIRE(fs.size() == (p == 4 ? 2u : 1u));
  }
}

TEST_CASE("L(p,p-1) is filled once, by the standard plumbing") {
  for (long p = 2; p <= 30; ++p) {
    auto fs = fillings_of(lens(p, p - 1));
    REQUIRE(fs.size() == 1);
    REQUIRE(fs[0].cap == Tuple{p});
    REQUIRE(fs[0].tuple == ZeroTuple{0});
    REQUIRE(fs[0].b2 == p - 1);
    REQUIRE(fs[0].pi1 == 1);
  }
}

TEST_CASE("per-filling bounds and identities over a small sweep") {
  for (long p = 2; p <= 80; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      LensSpace L = lens(p, q);
      Int len = cf_len(make_fraction(L.p, L.q));
      for (const Filling& f : fillings_of(L)) {
        REQUIRE(!f.strict.empty());
        REQUIRE(f.b2 >= 0);
        REQUIRE(f.b2 <= len);  // second Betti number never exceeds len(p/q)
        // len(p/q) - b2 = sum(tuple - 2) + 2
        REQUIRE(len - f.b2 == cf_U(f.tuple) + 2);
        // |pi1| and |pi1|^2 divide p
        Int dsq = f.pi1 * f.pi1;
        REQUIRE(mpz_divisible_p(L.p.get_mpz_t(), f.pi1.get_mpz_t()));
        REQUIRE(mpz_divisible_p(L.p.get_mpz_t(), dsq.get_mpz_t()));
        if (is_square_free(p)) REQUIRE(f.pi1 == 1);
        // an interior strict index forces |pi1| to divide the flanking dets
        std::span<const int> s(f.tuple.data(), f.tuple.size());
        for (std::size_t i : f.strict) {
          if (i == 0 || i + 1 == f.tuple.size()) continue;
          Int pre = tridiag_det(s.first(i));
          Int suf = tridiag_det(s.subspan(i + 1));
          REQUIRE(pre == suf);
          REQUIRE(mpz_divisible_p(pre.get_mpz_t(), f.pi1.get_mpz_t()));
        }
      }
    }
}

TEST_CASE("the two presentations of a lens space have matching filling data") {
  for (long p = 2; p <= 100; ++p)
    for (long q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      Int qinv;
      mpz_invert(qinv.get_mpz_t(), Int(q).get_mpz_t(), Int(p).get_mpz_t());
      if (qinv < q) continue;  // handle each unordered pair once
      std::multiset<std::pair<Int, Int>> a, b;
      for (const Filling& f : fillings_of(lens(p, q))) a.emplace(f.b2, f.pi1);
      for (const Filling& f : fillings_of(LensSpace{p, qinv})) b.emplace(f.b2, f.pi1);
      REQUIRE(a == b);
    }
}

TEST_CASE("fibonacci and fib_level") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(6) == 8);
  CHECK(fibonacci(10) == 55);
  CHECK_THROWS_AS(fibonacci(0), std::domain_error);

  CHECK(fib_level(Int(1)) == 0);
  CHECK(fib_level(Int(2)) == 1);
  CHECK(fib_level(Int(3)) == 2);
  CHECK(fib_level(Int(4)) == 2);
  CHECK(fib_level(Int(5)) == 3);
  CHECK(fib_level(Int(8)) == 4);
  CHECK_THROWS_AS(fib_level(Int(0)), std::domain_error);

  for (long l = 0; l <= 20; ++l) {
    CHECK(fib_level(fibonacci(l + 2)) == (l == 0 ? 0 : l));
  }
}

TEST_CASE("extremal form of a huge plumbing-filled lens space") {
  // L(p, p-1) with p beyond 64 bits: cap is the single entry (p).
  Int p("36893488147419103232");  // 2^65
  auto fs = fillings_of(LensSpace{p, p - 1});
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].b2 == p - 1);
  CHECK(fs[0].pi1 == 1);
}
