#pragma once

// Brute-force verification sweeps: every coprime pair p > q >= 1 up to a
// bound, every filling, every inequality, plus the two equality censuses and
// the Fibonacci extremality check on S/T words.  Sweeps deliberately visit
// all residues q (not just canonical forms) and aggregate by canonical form
// afterwards, which exercises the homeomorphism classifier for free.
//
// A report with a nonempty violation list is a falsification witness; the
// expected outcome everywhere is zero violations.

#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "lensfill/fillings.hpp"
#include "lensfill/rationals.hpp"
#include "lensfill/zero_tuples.hpp"

namespace lensfill {

struct Witness {
  Int p;
  Int q;
  ZeroTuple tuple;  // empty when the witness is not tied to one filling
  std::string detail;
};

struct ScanReport {
  std::string check;
  long bound = 0;
  long long checked = 0;  // (lens space, filling) pairs or fractions examined
  std::vector<Witness> violations;      // must stay empty
  std::vector<Witness> equality_cases;  // extremal/census members, one line each
  bool ok() const { return violations.empty(); }
};

namespace detail {

template <typename E>
std::string tuple_str(const std::vector<E>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

inline std::string lens_str(const Int& p, const Int& q) {
  std::ostringstream os;
  os << "L(" << p << ',' << q << ')';
  return os.str();
}

// Per-p result buckets; merging in increasing p keeps every report identical
// across worker counts.
struct Chunk {
  long long checked = 0;
  std::vector<Witness> violations;
  std::vector<Witness> equality;
  std::vector<std::tuple<Int, Int, long>> hits;  // census pairs (canonical p, q, parameter)
};

template <typename Fn>  // void fn(long p, long q, Chunk&)
std::vector<Chunk> sweep_pairs(long p_max, int jobs, Fn fn) {
  if (p_max < 2) throw std::domain_error("sweep: p_max must be >= 2");
  long workers = jobs < 1 ? 1 : jobs;
  if (workers > p_max - 1) workers = p_max - 1;
  std::vector<Chunk> chunks(static_cast<std::size_t>(p_max) + 1);
  auto work = [&](long first) {
    for (long p = first; p <= p_max; p += workers)
      for (long q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) fn(p, q, chunks[static_cast<std::size_t>(p)]);
  };
  if (workers == 1) {
    work(2);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (long w = 0; w < workers; ++w) threads.emplace_back(work, 2 + w);
    for (auto& t : threads) t.join();
  }
  return chunks;
}

inline void merge_chunks(std::vector<Chunk>& chunks, ScanReport& r) {
  for (Chunk& c : chunks) {
    r.checked += c.checked;
    for (Witness& w : c.violations) r.violations.push_back(std::move(w));
    for (Witness& w : c.equality) r.equality_cases.push_back(std::move(w));
  }
}

inline const Int& fib_cached(long n) {
  thread_local std::vector<Int> fs{0, 1, 1};  // fs[i] = F_i, slot 0 unused
  while (static_cast<long>(fs.size()) <= n)
    fs.push_back(fs[fs.size() - 1] + fs[fs.size() - 2]);
  return fs[static_cast<std::size_t>(n)];
}

}  // namespace detail

// For every filling: |pi1|^2 divides p and b2 <= p/|pi1|^2 - 1.  Equality
// cases are collected (they feed the d^2 census).
inline ScanReport verify_divisibility_bound(long p_max, int jobs = 1) {
  ScanReport r;
  r.check = "thm-divisibility";
  r.bound = p_max;
  auto chunks = detail::sweep_pairs(p_max, jobs, [](long p, long q, detail::Chunk& c) {
    LensSpace lens{p, q};
    for (const Filling& f : fillings_of(lens)) {
      ++c.checked;
      Int dsq = f.pi1 * f.pi1;
      std::ostringstream os;
      os << detail::lens_str(lens.p, lens.q) << " n=" << detail::tuple_str(f.tuple)
         << " |pi1|=" << f.pi1 << " b2=" << f.b2;
      if (!mpz_divisible_p(lens.p.get_mpz_t(), dsq.get_mpz_t())) {
        os << ": |pi1|^2 does not divide p";
        c.violations.push_back({lens.p, lens.q, f.tuple, os.str()});
        continue;
      }
      Int bound = lens.p / dsq - 1;
      if (f.b2 > bound) {
        os << " exceeds p/|pi1|^2 - 1 = " << bound;
        c.violations.push_back({lens.p, lens.q, f.tuple, os.str()});
      } else if (f.b2 == bound) {
        os << " = p/|pi1|^2 - 1";
        c.equality.push_back({lens.p, lens.q, f.tuple, os.str()});
      }
    }
  });
  detail::merge_chunks(chunks, r);
  return r;
}

// For every filling: b2 <= len(p/q) - l where F_{l+2} <= |pi1| < F_{l+3},
// and the sharper integral form F_{len - b2 + 2} >= |pi1|.
inline ScanReport verify_length_bound(long p_max, int jobs = 1) {
  ScanReport r;
  r.check = "thm-length";
  r.bound = p_max;
  auto chunks = detail::sweep_pairs(p_max, jobs, [](long p, long q, detail::Chunk& c) {
    LensSpace lens{p, q};
    for (const Filling& f : fillings_of(lens)) {
      ++c.checked;
      Int len = cf_U(f.cap) + 1;  // len(p/q) = U(p/(p-q)) + 1
      long level = fib_level(f.pi1);
      Int gap = len - f.b2;
      std::ostringstream os;
      os << detail::lens_str(lens.p, lens.q) << " n=" << detail::tuple_str(f.tuple)
         << " |pi1|=" << f.pi1 << " b2=" << f.b2 << " len=" << len;
      if (gap < level) {
        os << ": b2 > len - " << level;
        c.violations.push_back({lens.p, lens.q, f.tuple, os.str()});
        continue;
      }
      if (!gap.fits_slong_p() || detail::fib_cached(gap.get_si() + 2) < f.pi1) {
        os << ": F_(len-b2+2) < |pi1|";
        c.violations.push_back({lens.p, lens.q, f.tuple, os.str()});
      } else if (gap == level && level >= 1) {
        os << " = len - " << level;
        c.equality.push_back({lens.p, lens.q, f.tuple, os.str()});
      }
    }
  });
  detail::merge_chunks(chunks, r);
  return r;
}

namespace detail {

using CensusKey = std::tuple<Int, Int, long>;  // canonical (p, q), parameter d or l

// Annotates a census set difference, probing the orientation-reversed lens
// space on the other side so a mirror-only match is flagged explicitly.
inline void census_diff(const std::set<CensusKey>& left, const std::set<CensusKey>& right,
                        const char* param, const char* msg_missing_from_right,
                        ScanReport& r) {
  for (const CensusKey& k : left) {
    if (right.count(k)) continue;
    const auto& [p, q, d] = k;
    LensSpace rev = lens_canonical(lens_reversed(LensSpace{p, q}));
    bool mirror = right.count({rev.p, rev.q, d}) > 0;
    std::ostringstream os;
    os << lens_str(p, q) << " " << param << "=" << d << ": " << msg_missing_from_right;
    if (mirror) os << " (matches only after orientation reversal)";
    r.violations.push_back({p, q, {}, os.str()});
  }
}

}  // namespace detail

// Census of equality in the divisibility bound: the (canonical lens space, d)
// pairs attaining |pi1| = d and b2 = p/d^2 - 1 in the sweep must equal the
// family {L(n d^2, n d c - 1) : n >= 1, 1 <= c <= d, gcd(c, d) = 1} with
// n d^2 <= p_max, and each pair is attained by exactly one tuple per
// presentation of the lens space.
inline ScanReport equality_census_d2(long p_max, int jobs = 1) {
  ScanReport r;
  r.check = "census-d2";
  r.bound = p_max;
  auto chunks = detail::sweep_pairs(p_max, jobs, [](long p, long q, detail::Chunk& c) {
    LensSpace lens{p, q};
    std::map<Int, ZeroTuple> attained;  // d -> first attaining tuple here
    for (const Filling& f : fillings_of(lens)) {
      ++c.checked;
      Int dsq = f.pi1 * f.pi1;
      if (!mpz_divisible_p(lens.p.get_mpz_t(), dsq.get_mpz_t())) continue;
      if (f.b2 != lens.p / dsq - 1) continue;
      LensSpace canon = lens_canonical(lens);
      c.hits.emplace_back(canon.p, canon.q, f.pi1.get_si());
      auto [it, fresh] = attained.emplace(f.pi1, f.tuple);
      if (!fresh) {
        std::ostringstream os;
        os << detail::lens_str(lens.p, lens.q) << ": tuples " << detail::tuple_str(it->second)
           << " and " << detail::tuple_str(f.tuple) << " both attain |pi1|=" << f.pi1
           << " with b2 = p/d^2 - 1 (expected a unique tuple)";
        c.violations.push_back({lens.p, lens.q, f.tuple, os.str()});
      }
    }
  });

  std::set<detail::CensusKey> swept;
  for (detail::Chunk& c : chunks) {
    r.checked += c.checked;
    for (Witness& w : c.violations) r.violations.push_back(std::move(w));
    for (auto& h : c.hits) swept.insert(h);
  }

  std::set<detail::CensusKey> family;
  std::map<detail::CensusKey, std::string> family_label;
  for (long d = 1; d * d <= p_max; ++d)
    for (long n = 1; n * d * d <= p_max; ++n) {
      long p = n * d * d;
      if (p < 2) continue;
      for (long cc = 1; cc <= d; ++cc) {
        if (std::gcd(cc, d) != 1) continue;
        long q = n * d * cc - 1;
        if (q < 1) continue;
        LensSpace canon = lens_canonical(LensSpace{p, q});
        detail::CensusKey key{canon.p, canon.q, d};
        family.insert(key);
        std::ostringstream os;
        os << "n=" << n << " d=" << d << " c=" << cc << " -> L(" << p << ',' << q << ')';
        auto [it, fresh] = family_label.emplace(key, os.str());
        if (!fresh) it->second += "; " + os.str();
      }
    }

  detail::census_diff(swept, family, "d", "equality filling outside the L(n d^2, n d c - 1) family", r);
  detail::census_diff(family, swept, "d", "family member with no equality filling in the sweep", r);

  for (const detail::CensusKey& k : family) {
    if (!swept.count(k)) continue;
    const auto& [p, q, d] = k;
    std::ostringstream os;
    os << detail::lens_str(p, q) << " d=" << d << " [" << family_label[k] << "]";
    r.equality_cases.push_back({p, q, {}, os.str()});
  }
  return r;
}

// Census of equality in the length bound: the (canonical lens space, l) pairs
// with a non-simply-connected filling attaining |pi1| = F_{l+2} and
// b2 = len(p/q) - l must equal {L(n F_{l+2}^2, n F_l F_{l+2} - 1) : n, l >= 1}.
inline ScanReport equality_census_fib(long p_max, int jobs = 1) {
  ScanReport r;
  r.check = "census-fib";
  r.bound = p_max;
  auto chunks = detail::sweep_pairs(p_max, jobs, [](long p, long q, detail::Chunk& c) {
    LensSpace lens{p, q};
    for (const Filling& f : fillings_of(lens)) {
      ++c.checked;
      if (f.pi1 < 2) continue;
      long level = fib_level(f.pi1);
      if (detail::fib_cached(level + 2) != f.pi1) continue;  // |pi1| not a Fibonacci number
      Int len = cf_U(f.cap) + 1;
      if (len - f.b2 != level) continue;
      LensSpace canon = lens_canonical(lens);
      c.hits.emplace_back(canon.p, canon.q, level);
    }
  });

  std::set<detail::CensusKey> swept;
  for (detail::Chunk& c : chunks) {
    r.checked += c.checked;
    for (Witness& w : c.violations) r.violations.push_back(std::move(w));
    for (auto& h : c.hits) swept.insert(h);
  }

  std::set<detail::CensusKey> family;
  std::map<detail::CensusKey, std::string> family_label;
  for (long level = 1;; ++level) {
    Int f2 = fibonacci(level + 2);
    if (f2 * f2 > p_max) break;
    Int fl = fibonacci(level);
    for (long n = 1; n * f2 * f2 <= p_max; ++n) {
      Int p = n * f2 * f2;
      Int q = n * fl * f2 - 1;
      LensSpace canon = lens_canonical(LensSpace{p, q});
      detail::CensusKey key{canon.p, canon.q, level};
      family.insert(key);
      std::ostringstream os;
      os << "n=" << n << " F_(l+2)=" << f2 << " -> L(" << p << ',' << q << ')';
      family_label.emplace(key, os.str());
    }
  }

  detail::census_diff(swept, family, "l", "equality filling outside the L(n F^2, n F_l F - 1) family", r);
  detail::census_diff(family, swept, "l", "family member with no equality filling in the sweep", r);

  for (const detail::CensusKey& k : family) {
    if (!swept.count(k)) continue;
    const auto& [p, q, level] = k;
    std::ostringstream os;
    os << detail::lens_str(p, q) << " l=" << level << " [" << family_label[k] << "]";
    r.equality_cases.push_back({p, q, {}, os.str()});
  }
  return r;
}

// For each word length: all p/q with V(p/q) = L (one per S/T word applied to
// 2/1) have p <= F_{L+2}, with the maximum attained exactly by F_{L+2}/F_L
// and F_{L+2}/F_{L+1}.  Also re-derives V through the expansion as a cross
// check on the word construction.
inline ScanReport verify_fibonacci_extremal(int l_max) {
  if (l_max < 1) throw std::domain_error("verify_fibonacci_extremal: l_max must be >= 1");
  ScanReport r;
  r.check = "fibonacci";
  r.bound = l_max;
  std::vector<Fraction> level{Fraction(2)};
  for (int L = 1; L <= l_max; ++L) {
    Int max_p = 0;
    std::set<Fraction> maximizers;
    for (const Fraction& f : level) {
      ++r.checked;
      if (cf_V(f) != L) {
        std::ostringstream os;
        os << f << " reached by a word of length " << (L - 1) << " but V = " << cf_V(f);
        r.violations.push_back({f.get_num(), f.get_den(), {}, os.str()});
      }
      if (f.get_num() > max_p) {
        max_p = f.get_num();
        maximizers = {f};
      } else if (f.get_num() == max_p) {
        maximizers.insert(f);
      }
    }
    Int expected = fibonacci(L + 2);
    std::set<Fraction> expected_set{make_fraction(expected, fibonacci(L)),
                                    make_fraction(expected, fibonacci(L + 1))};
    if (max_p != expected) {
      std::ostringstream os;
      os << "V=" << L << ": max numerator " << max_p << " != F_" << (L + 2) << " = " << expected;
      r.violations.push_back({max_p, 1, {}, os.str()});
    } else if (maximizers != expected_set) {
      std::ostringstream os;
      os << "V=" << L << ": maximizer set differs from {F_(L+2)/F_L, F_(L+2)/F_(L+1)}:";
      for (const Fraction& f : maximizers) os << ' ' << f;
      r.violations.push_back({max_p, 1, {}, os.str()});
    } else {
      std::ostringstream os;
      os << "V=" << L << ": max p = " << max_p << " = F_" << (L + 2) << ", attained by";
      for (const Fraction& f : maximizers) os << ' ' << f;
      r.equality_cases.push_back({max_p, 1, {}, os.str()});
    }
    if (L < l_max) {
      std::vector<Fraction> next;
      next.reserve(2 * level.size());
      for (const Fraction& f : level) {
        next.push_back(op_S(f));
        next.push_back(op_T(f));
      }
      level = std::move(next);
    }
  }
  return r;
}

// The four complement identities relating p/q and p/(p-q):
//   V = V',  len = U' + 1,  len + len' = V + 1,  U + U' = V - 1.
inline ScanReport verify_cf_identities(long p_max, int jobs = 1) {
  ScanReport r;
  r.check = "identities";
  r.bound = p_max;
  auto chunks = detail::sweep_pairs(p_max, jobs, [](long p, long q, detail::Chunk& c) {
    ++c.checked;
    Tuple a = hj_expand(make_fraction(p, q));
    Tuple b = hj_expand(make_fraction(p, p - q));
    Int len_a = a.size(), len_b = b.size();
    Int u_a = cf_U(a), u_b = cf_U(b);
    Int v_a = len_a + u_a, v_b = len_b + u_b;
    auto fail = [&](const char* what) {
      std::ostringstream os;
      os << p << '/' << q << ": " << what << " (len=" << len_a << " U=" << u_a
         << " len'=" << len_b << " U'=" << u_b << ')';
      c.violations.push_back({p, q, {}, os.str()});
    };
    if (v_a != v_b) fail("V(p/q) != V(p/(p-q))");
    if (len_a != u_b + 1) fail("len(p/q) != U(p/(p-q)) + 1");
    if (len_a + len_b != v_a + 1) fail("len + len' != V + 1");
    if (u_a + u_b != v_a - 1) fail("U + U' != V - 1");
  });
  detail::merge_chunks(chunks, r);
  return r;
}

}  // namespace lensfill
