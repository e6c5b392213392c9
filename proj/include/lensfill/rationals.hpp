#pragma once

// Exact Hirzebruch-Jung continued fraction calculus over GMP integers and
// rationals.
//
// Conventions used throughout:
//
//   [x_1,...,x_k]^- = x_1 - 1/(x_2 - 1/(... - 1/x_k))
//
// Every rational p/q > 1 (p, q coprime) has a unique such expansion with all
// coefficients >= 2.  Values of arbitrary tuples are computed through the
// convergent recurrence
//
//   p_i = x_i p_{i-1} - p_{i-2},   q_i = x_i q_{i-1} - q_{i-2},
//   (p_0, q_0) = (1, 0),           (p_1, q_1) = (x_1, 1),
//
// which is total: nested evaluation can divide by zero on tuples whose value
// is perfectly well defined (zero tuples being the important case), the
// recurrence never does.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lensfill {

using Int = mpz_class;
using Fraction = mpq_class;  // kept canonical: reduced, positive denominator
using Tuple = std::vector<Int>;

// p/q in lowest terms with positive denominator. q = 0 is rejected; signs are
// normalized, so make_fraction(-6, -4) = 3/2.
inline Fraction make_fraction(const Int& p, const Int& q) {
  if (q == 0) throw std::domain_error("make_fraction: zero denominator");
  Fraction f(p, q);
  f.canonicalize();
  return f;
}

inline Int ceil_div(const Int& n, const Int& d) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// The unique expansion p/q = [a_1,...,a_k]^- with every a_i >= 2.
// Greedy: a = ceil(n/d), remainder a - n/d = r/d, recurse on its inverse d/r.
inline Tuple hj_expand(const Fraction& f) {
  if (f <= 1) throw std::domain_error("hj_expand: fraction must be > 1");
  Int n = f.get_num();
  Int d = f.get_den();
  Tuple out;
  while (true) {
    Int a = ceil_div(n, d);
    out.push_back(a);
    Int r = a * d - n;  // 0 <= r < d
    if (r == 0) break;
    n = d;
    d = std::move(r);
  }
  return out;
}

using Convergent = std::pair<Int, Int>;  // (p_i, q_i)

// All convergents of [x_1,...,x_k]^-, seed (p_0, q_0) = (1, 0) included, so
// the result has k+1 entries.  Works on any integral entry type.
template <typename E>
std::vector<Convergent> convergents(std::span<const E> t) {
  std::vector<Convergent> out;
  out.reserve(t.size() + 1);
  Int p0 = 0, q0 = -1;  // virtual (p_{-1}, q_{-1}) makes the recurrence uniform
  Int p1 = 1, q1 = 0;
  out.emplace_back(p1, q1);
  for (const E& x : t) {
    Int p = x * p1 - p0;
    Int q = x * q1 - q0;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p);
    q1 = std::move(q);
    out.emplace_back(p1, q1);
  }
  return out;
}

template <typename E>
std::vector<Convergent> convergents(const std::vector<E>& t) {
  return convergents(std::span<const E>(t.data(), t.size()));
}

// Value of [x_1,...,x_k]^-.  nullopt encodes an infinite value (q_k = 0);
// finite values may be zero or negative.  The empty tuple is p_0/q_0 = 1/0,
// infinite.
template <typename E>
std::optional<Fraction> cf_eval(std::span<const E> t) {
  Int p0 = 0, q0 = -1;
  Int p1 = 1, q1 = 0;
  for (const E& x : t) {
    Int p = x * p1 - p0;
    Int q = x * q1 - q0;
    p0 = std::move(p1);
    q0 = std::move(q1);
    p1 = std::move(p);
    q1 = std::move(q);
  }
  if (q1 == 0) return std::nullopt;
  return make_fraction(p1, q1);
}

template <typename E>
std::optional<Fraction> cf_eval(const std::vector<E>& t) {
  return cf_eval(std::span<const E>(t.data(), t.size()));
}

inline bool is_zero_value(const std::optional<Fraction>& v) {
  return v.has_value() && *v == 0;
}

// Sum of (x_i - 2) over a tuple.
template <typename E>
Int cf_U(std::span<const E> t) {
  Int s = 0;
  for (const E& x : t) s += x - 2;
  return s;
}

template <typename E>
Int cf_U(const std::vector<E>& t) {
  return cf_U(std::span<const E>(t.data(), t.size()));
}

// Sum of (x_i - 1) over a tuple.
template <typename E>
Int cf_V(std::span<const E> t) {
  Int s = 0;
  for (const E& x : t) s += x - 1;
  return s;
}

template <typename E>
Int cf_V(const std::vector<E>& t) {
  return cf_V(std::span<const E>(t.data(), t.size()));
}

// len, U, V of a rational > 1, read off its canonical expansion.
// V = len + U always.
inline long cf_len(const Fraction& f) {
  return static_cast<long>(hj_expand(f).size());
}

inline Int cf_U(const Fraction& f) { return cf_U(hj_expand(f)); }

inline Int cf_V(const Fraction& f) { return cf_V(hj_expand(f)); }

// S bumps the leading coefficient: S([a_1, a_2, ...]) = [a_1+1, a_2, ...].
inline Fraction op_S(const Fraction& f) {
  if (f <= 1) throw std::domain_error("op_S: fraction must be > 1");
  return make_fraction(f.get_num() + f.get_den(), f.get_den());
}

// T prepends a 2: T([a_1, ...]) = [2, a_1, ...].
inline Fraction op_T(const Fraction& f) {
  if (f <= 1) throw std::domain_error("op_T: fraction must be > 1");
  return make_fraction(2 * f.get_num() - f.get_den(), f.get_num());
}

// The unique word w over {S, T} with w(2/1) = f, written outermost first:
// "STS" means S(T(S(2/1))).  Inversion: f > 2 is an S image, 1 < f < 2 a T
// image, f = 2 terminates.  The word has length V(f) - 1, with U(f) letters S
// and len(f) - 1 letters T.
inline std::string st_decompose(const Fraction& f) {
  if (f <= 1) throw std::domain_error("st_decompose: fraction must be > 1");
  Int n = f.get_num();
  Int d = f.get_den();
  std::string word;
  while (!(d == 1 && n == 2)) {
    if (n > 2 * d) {
      word += 'S';  // undo S: (p, q) -> (p - q, q)
      n -= d;
    } else {
      word += 'T';  // undo T: (p, q) -> (q, 2q - p)
      Int next_d = 2 * d - n;
      n = std::move(d);
      d = std::move(next_d);
    }
  }
  return word;
}

// Applies an S/T word (outermost letter first) to `base`.
inline Fraction st_apply(const std::string& word, Fraction base = Fraction(2)) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'S': base = op_S(base); break;
      case 'T': base = op_T(base); break;
      default: throw std::invalid_argument("st_apply: word must be over {S, T}");
    }
  }
  return base;
}

}  // namespace lensfill
