#pragma once

// Minimal symplectic fillings of lens spaces, up to diffeomorphism, via the
// admissible-tuple classification: L(p,q) fillings correspond to admissible
// zero tuples n dominated entrywise by the canonical expansion of p/(p-q).
// Each filling carries its second Betti number, the order of its (cyclic)
// fundamental group, and, for the extremal shape, the (n, d, c) presentation
// with L(p,q) homeomorphic to L(n d^2, n d c - 1).

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lensfill/rationals.hpp"
#include "lensfill/tridiag.hpp"
#include "lensfill/zero_tuples.hpp"

namespace lensfill {

// Oriented lens space L(p,q), p > q >= 1 coprime.
struct LensSpace {
  Int p;
  Int q;
};

inline bool operator==(const LensSpace& a, const LensSpace& b) {
  return a.p == b.p && a.q == b.q;
}

inline void validate_lens(const LensSpace& lens) {
  if (lens.q < 1 || lens.p <= lens.q)
    throw std::invalid_argument("lens space requires p > q >= 1");
  if (gcd(lens.p, lens.q) != 1)
    throw std::invalid_argument("lens space requires gcd(p, q) = 1");
}

inline LensSpace make_lens(Int p, Int q) {
  LensSpace lens{std::move(p), std::move(q)};
  validate_lens(lens);
  return lens;
}

// Canonical form under orientation-preserving homeomorphism:
// L(p, q) ~ L(p, q') iff q' = q or q q' = 1 mod p, so take the smaller of
// q and its inverse mod p.
inline LensSpace lens_canonical(const LensSpace& lens) {
  Int qinv;
  if (!mpz_invert(qinv.get_mpz_t(), lens.q.get_mpz_t(), lens.p.get_mpz_t()))
    throw std::logic_error("lens_canonical: q has no inverse mod p");
  return {lens.p, std::min(lens.q, qinv)};
}

// Orientation reversal: -L(p, q) = L(p, p - q).
inline LensSpace lens_reversed(const LensSpace& lens) {
  return {lens.p, lens.p - lens.q};
}

// (n, d, c) with the underlying lens space homeomorphic to L(n d^2, n d c - 1),
// d = |pi_1| and n - 1 = b_2.
struct ExtremalForm {
  Int n;
  Int d;
  Int c;
};

inline bool operator==(const ExtremalForm& a, const ExtremalForm& b) {
  return a.n == b.n && a.d == b.d && a.c == b.c;
}

struct Filling {
  LensSpace lens;
  Tuple cap;        // canonical expansion of p/(p-q)
  ZeroTuple tuple;  // admissible zero tuple with tuple[i] <= cap[i]
  Int b2;
  Int pi1;                         // order of the cyclic fundamental group
  std::vector<std::size_t> strict;  // 0-based indices with cap[i] > tuple[i]
  std::optional<ExtremalForm> extremal;
};

// Order of the fundamental group: gcd over the strict indices i (0-based) of
// the convergent numerator of the length-i prefix of the zero tuple, with
// gcd(0, x) = x.  There is always at least one strict index, since the cap
// evaluates to p/(p-q) > 1 while the tuple evaluates to 0.
inline Int pi1_order(const Tuple& cap, const ZeroTuple& t) {
  if (cap.size() != t.size())
    throw std::invalid_argument("pi1_order: cap and tuple lengths differ");
  auto conv = convergents(t);
  Int d = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (cap[i] > t[i]) d = gcd(d, conv[i].first);
  return d;
}

// For a non-simply-connected filling whose cap exceeds the tuple at exactly
// one index j: n = b2 + 1 and d/c = value of the tuple prefix before j.  The
// underlying lens space must then agree with L(n d^2, n d c - 1) up to
// orientation-preserving homeomorphism; a mismatch is an internal error, not
// bad input.  Everything else maps to nullopt.
inline std::optional<ExtremalForm> extremal_form(const Filling& f) {
  if (f.strict.size() != 1 || f.pi1 <= 1) return std::nullopt;
  const std::size_t j = f.strict.front();  // j >= 1: a strict first index would force pi1 = 1
  auto prefix = cf_eval(std::span<const int>(f.tuple.data(), j));
  if (!prefix || *prefix <= 1)
    throw std::logic_error("extremal_form: prefix value must be a fraction > 1");
  ExtremalForm e{f.b2 + 1, prefix->get_num(), prefix->get_den()};
  if (e.d != f.pi1)
    throw std::logic_error("extremal_form: prefix numerator disagrees with |pi1|");
  LensSpace model = make_lens(e.n * e.d * e.d, e.n * e.d * e.c - 1);
  if (!(lens_canonical(model) == lens_canonical(f.lens)))
    throw std::logic_error("extremal_form: filling does not present L(n d^2, n d c - 1)");
  return e;
}

// All minimal symplectic fillings of L(p,q), one per admissible zero tuple
// under the cap, ordered lexicographically by tuple.  b2 = sum(cap - tuple) - 1.
inline std::vector<Filling> fillings_of(const LensSpace& lens) {
  validate_lens(lens);
  Tuple cap = hj_expand(make_fraction(lens.p, lens.p - lens.q));
  std::vector<Filling> out;
  for (ZeroTuple& t : enumerate_bounded(cap)) {
    Filling f;
    f.lens = lens;
    f.cap = cap;
    f.tuple = std::move(t);
    Int total = 0;
    for (std::size_t i = 0; i < cap.size(); ++i) {
      Int gap = cap[i] - f.tuple[i];
      if (gap > 0) f.strict.push_back(i);
      total += gap;
    }
    f.b2 = total - 1;
    f.pi1 = pi1_order(cap, f.tuple);
    f.extremal = extremal_form(f);
    out.push_back(std::move(f));
  }
  return out;
}

// Fibonacci numbers with F_1 = F_2 = 1.
inline Int fibonacci(long n) {
  if (n < 1) throw std::domain_error("fibonacci: index must be >= 1");
  Int a = 1, b = 1;  // F_1, F_2
  for (long i = 3; i <= n; ++i) {
    Int c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return n == 1 ? a : b;
}

// Largest l >= 0 with F_{l+2} <= d.
inline long fib_level(const Int& d) {
  if (d < 1) throw std::domain_error("fib_level: d must be >= 1");
  long l = 0;
  Int f2 = 1, f3 = 2;  // F_{l+2}, F_{l+3}
  while (f3 <= d) {
    Int next = f2 + f3;
    f2 = std::move(f3);
    f3 = std::move(next);
    ++l;
  }
  return l;
}

}  // namespace lensfill
