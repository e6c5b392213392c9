#pragma once

// Admissible zero tuples: non-negative integer tuples whose tridiagonal form
// is positive semidefinite of rank exactly k-1 and whose continued fraction
// value is 0.  They are exactly the tuples reachable from (0) by blow-ups,
// which is what the enumeration below generates and what the primary
// admissibility oracle inverts.
//
// Entries are machine ints: a length-k admissible zero tuple has every entry
// <= k-1 (each blow-up adds an entry 1 and increments at most two neighbours
// by one, starting from (0)).

#include <cstddef>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "lensfill/rationals.hpp"
#include "lensfill/tridiag.hpp"

namespace lensfill {

using ZeroTuple = std::vector<int>;

// Default bound for unconstrained enumeration; the length-14 level already
// holds C_13 = 742900 tuples.
inline constexpr int kZeroTupleEnumMax = 14;

// Contraction at an entry equal to 1:
//   interior j: delete position j, decrement both neighbours,
//   j last:     delete position j, decrement the new last entry,
//   j first:    delete position j, decrement the new first entry.
// j is 0-based.
inline ZeroTuple blow_down(const ZeroTuple& t, std::size_t j) {
  const std::size_t k = t.size();
  if (k < 2) throw std::invalid_argument("blow_down: tuple must have length >= 2");
  if (j >= k || t[j] != 1) throw std::invalid_argument("blow_down: entry at index must be 1");
  ZeroTuple out;
  out.reserve(k - 1);
  out.assign(t.begin(), t.begin() + j);
  out.insert(out.end(), t.begin() + j + 1, t.end());
  if (j == 0) {
    out.front() -= 1;
  } else if (j == k - 1) {
    out.back() -= 1;
  } else {
    out[j - 1] -= 1;
    out[j] -= 1;
  }
  return out;
}

// Inverse move: insert a 1 at slot j (0 = before the first entry, k = after
// the last) and increment the flanking entries that exist.
inline ZeroTuple blow_up(const ZeroTuple& t, std::size_t j) {
  const std::size_t k = t.size();
  if (j > k) throw std::out_of_range("blow_up: slot out of range");
  ZeroTuple out = t;
  if (j > 0) out[j - 1] += 1;
  if (j < k) out[j] += 1;
  out.insert(out.begin() + j, 1);
  return out;
}

// Primary admissibility oracle: blow down at the smallest index carrying a 1
// until the tuple is a singleton; admissible zero tuples end at (0).
// Total: the length strictly decreases, and a tuple with no entry 1 (or a
// negative entry, which only arises from non-admissible inputs) fails.
//
// A blow-down only touches the two neighbours of the removed entry, so the
// smallest index carrying a 1 never jumps left past them.  Keeping the
// entries in a left-stack / right-stack zipper with the cursor at the
// leftmost unscanned entry makes the whole reduction O(k): the cursor
// retreats one step per blow-down and otherwise only advances.
inline bool is_admissible_zero(const ZeroTuple& t) {
  if (t.empty()) return false;
  std::vector<int> left;  // scanned entries, none equal to 1
  std::vector<int> right(t.rbegin(), t.rend());  // cursor entry at back()
  left.reserve(t.size());
  while (true) {
    if (left.size() + right.size() == 1) {
      return (right.empty() ? left.back() : right.back()) == 0;
    }
    if (right.empty()) return false;  // no entry 1 remains
    if (right.back() != 1) {
      left.push_back(right.back());
      right.pop_back();
      continue;
    }
    right.pop_back();  // blow down at the cursor
    if (left.empty()) {
      right.back() -= 1;
    } else if (right.empty()) {
      left.back() -= 1;
      right.push_back(left.back());
      left.pop_back();
    } else {
      left.back() -= 1;
      right.back() -= 1;
      right.push_back(left.back());
      left.pop_back();
    }
  }
}

// Independent oracle for the same predicate: value 0 and PSD of rank >= k-1.
// The two must agree; tests check this exhaustively on small tuples.
inline bool is_admissible_zero_psd(const ZeroTuple& t) {
  if (t.empty()) return false;
  for (int x : t)
    if (x < 0) return false;
  return is_zero_value(cf_eval(t)) && tridiag_psd_rank_at_least(t, t.size() - 1);
}

// All admissible zero tuples of length k, lexicographically sorted: the
// blow-up closure of (0), deduplicated and memoized per length.  There are
// C_{k-1} of them (Catalan).  The cache is a deque so references returned
// earlier stay valid when later calls extend it.
inline const std::vector<ZeroTuple>& enumerate_zero_tuples(int k, int k_max = kZeroTupleEnumMax) {
  if (k < 1 || k > k_max)
    throw std::out_of_range("enumerate_zero_tuples: length out of range");
  static std::mutex mu;
  static std::deque<std::vector<ZeroTuple>> levels;
  std::scoped_lock lock(mu);
  if (levels.empty()) {
    levels.push_back({});  // unused length-0 slot
    levels.push_back({ZeroTuple{0}});
  }
  while (static_cast<int>(levels.size()) <= k) {
    std::set<ZeroTuple> next;
    for (const ZeroTuple& t : levels.back())
      for (std::size_t slot = 0; slot <= t.size(); ++slot)
        next.insert(blow_up(t, slot));
    levels.emplace_back(next.begin(), next.end());
  }
  return levels[static_cast<std::size_t>(k)];
}

// All admissible zero tuples n of the same length as `cap` with n_i <= cap_i,
// in lexicographic order.  cap must be a canonical expansion (entries >= 2).
//
// Iterative depth-first search over the digits, carrying the convergent
// numerators alpha_i of the chosen prefix.  The window of viable digits at
// each position is pinned down by three facts about admissible zero tuples
// (all inherited along the blow-up closure, and cross-checked by tests
// against the unconstrained enumeration):
//
//   * every entry is <= k-1, so huge caps do not widen the search,
//   * alpha_i >= 1 for i < k (leading principal minors of a PSD form whose
//     rank is k-1 stay positive before the end), giving a lower digit bound,
//   * alpha_i <= (k-i) alpha_{i-1}, i.e. the suffix value alpha_{i-1}/alpha_i
//     never drops below 1/(suffix length), giving an upper cutoff.
//
// A leaf needs alpha_k = 0 right after alpha_{k-1} = 1, so the last digit is
// solved directly instead of searched.  Every accepted leaf is still
// confirmed with is_admissible_zero.
inline std::vector<ZeroTuple> enumerate_bounded(const Tuple& cap) {
  const std::size_t k = cap.size();
  if (k == 0) throw std::invalid_argument("enumerate_bounded: empty cap");
  for (const Int& b : cap)
    if (b < 2) throw std::invalid_argument("enumerate_bounded: cap entries must be >= 2");

  std::vector<ZeroTuple> out;
  if (k == 1) {
    out.push_back(ZeroTuple{0});
    return out;
  }

  ZeroTuple digits(k, 0);
  // alpha[i+1] = convergent numerator of the prefix of length i; alpha[0] is
  // the virtual numerator of the length-(-1) prefix.
  std::vector<Int> alpha(k + 2);
  alpha[0] = 0;
  alpha[1] = 1;
  std::vector<long> next_digit(k, 1);
  const long entry_limit = static_cast<long>(k) - 1;

  std::size_t pos = 0;
  while (true) {
    const Int& a_prev = alpha[pos];
    const Int& a_cur = alpha[pos + 1];
    long hi = entry_limit;
    if (cap[pos] < hi) hi = cap[pos].get_si();
    bool descended = false;

    if (pos + 1 == k) {
      if (next_digit[pos] == 1 && a_cur == 1 && a_prev >= 1 && a_prev <= hi) {
        digits[pos] = static_cast<int>(a_prev.get_si());
        if (is_admissible_zero(digits)) out.push_back(digits);
      }
    } else {
      const unsigned long remaining = k - pos - 1;
      long lo = next_digit[pos];
      {
        Int first_valid = a_prev / a_cur + 1;  // smallest n with n a_cur - a_prev >= 1
        if (first_valid > lo) lo = first_valid > hi ? hi + 1 : first_valid.get_si();
      }
      for (long n = lo; n <= hi; ++n) {
        Int a_next = n * a_cur - a_prev;
        if (a_next > remaining * a_cur) break;  // monotone in n
        digits[pos] = static_cast<int>(n);
        alpha[pos + 2] = std::move(a_next);
        next_digit[pos] = n + 1;
        next_digit[pos + 1] = 1;
        ++pos;
        descended = true;
        break;
      }
    }

    if (!descended) {
      next_digit[pos] = 1;
      if (pos == 0) break;
      --pos;
    }
  }
  return out;
}

}  // namespace lensfill
