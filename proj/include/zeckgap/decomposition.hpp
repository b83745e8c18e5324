#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "zeckgap/rng.hpp"
#include "zeckgap/sequence.hpp"

namespace zeckgap {

/// The legal decomposition z = b_{l_1} + ... + b_{l_k} with nondecreasing
/// summand indices (repeats occur for families whose legal digits exceed 1;
/// never for Fibonacci, where consecutive indices differ by at least 2).
struct Decomposition {
  BigInt value;
  std::vector<std::uint32_t> indices;  // l_1 <= ... <= l_k

  std::size_t k() const { return indices.size(); }

  /// Invokes fn(gap) for each of the k-1 gaps l_j - l_{j-1}, low to high.
  template <class Fn>
  void for_each_gap(Fn&& fn) const {
    for (std::size_t j = 1; j < indices.size(); ++j) {
      fn(indices[j] - indices[j - 1]);
    }
  }
};

/// Greedy decomposition: repeatedly subtract the largest term not exceeding
/// the remainder. For positive linear recurrences this is the generalized
/// Zeckendorf legal decomposition; for Fibonacci the result never contains
/// consecutive indices. Writes into `out` without allocating when its
/// capacity suffices.
inline void greedy_decompose_into(Sequence& seq, const BigInt& z, Decomposition& out) {
  if (z <= 0) throw ConfigError("greedy_decompose: z must be positive");
  out.value = z;
  out.indices.clear();
  BigInt remainder = z;
  while (remainder > 0) {
    const std::uint32_t i = seq.largest_index_leq(remainder);
    if (i == 0) {
      throw ConfigError("greedy_decompose: family '" + seq.spec().name +
                        "' cannot represent " + remainder.str() + " (b_1 > remainder)");
    }
    out.indices.push_back(i);
    remainder -= seq.term_cached(i);
  }
  std::reverse(out.indices.begin(), out.indices.end());
}

inline Decomposition greedy_decompose(Sequence& seq, const BigInt& z) {
  Decomposition d;
  greedy_decompose_into(seq, z, d);
  return d;
}

/// Sum of the indexed terms; the inverse of greedy_decompose on legal input.
inline BigInt recompose(Sequence& seq, const Decomposition& d) {
  if (d.indices.empty()) throw ConfigError("recompose: decomposition must have k >= 1");
  BigInt sum = 0;
  std::uint32_t prev = 0;
  for (std::uint32_t i : d.indices) {
    if (i == 0) throw ConfigError("recompose: indices are 1-based");
    if (i < prev) throw ConfigError("recompose: indices must be nondecreasing");
    prev = i;
    sum += seq.term(i);
  }
  return sum;
}

struct EnumerationOptions {
  /// Hard cap on |I_n| for full enumeration; larger intervals must be sampled.
  std::uint64_t budget = 10'000'000;
};

namespace detail {

/// Ascending walk over the Zeckendorf digit strings of [b_m, b_{m+1}) for the
/// Fibonacci family: leading index m is forced, the rest is every subset of
/// {1..m-2} with no two adjacent indices, visited in increasing value order.
/// Avoids per-z greedy work entirely.
template <class Visitor>
void fibonacci_interval_walk(Sequence& seq, std::uint32_t m, Visitor&& visit) {
  seq.warm_up(m + 1);
  std::vector<std::uint32_t> desc = {m};  // current indices, descending
  BigInt cur = seq.term_cached(m);
  Decomposition scratch;
  auto emit = [&]() {
    scratch.value = cur;
    scratch.indices.assign(desc.rbegin(), desc.rend());
    visit(static_cast<const Decomposition&>(scratch));
  };
  auto rec = [&](auto&& self, std::int64_t i) -> void {
    if (i <= 0) {
      emit();
      return;
    }
    self(self, i - 1);  // strings without index i: values [0, F_i)
    desc.push_back(static_cast<std::uint32_t>(i));
    cur += seq.term_cached(static_cast<std::uint32_t>(i));
    self(self, i - 2);  // strings with index i: values [F_i, F_{i+1})
    cur -= seq.term_cached(static_cast<std::uint32_t>(i));
    desc.pop_back();
  };
  rec(rec, static_cast<std::int64_t>(m) - 2);
}

}  // namespace detail

/// Streams the decomposition of every z in I_n exactly once, in ascending z
/// order, into visit(const Decomposition&). The reference passed to the
/// visitor is reused between calls; copy it to retain. Fibonacci with a
/// consecutive interval takes the digit-string walk; other families fall
/// back to per-z greedy decomposition.
///
/// Throws BudgetError when |I_n| exceeds opts.budget; use sample_interval
/// for such n.
template <class Visitor>
void for_each_in_interval(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n,
                          Visitor&& visit, const EnumerationOptions& opts = {}) {
  const Interval iv = interval(seq, ispec, n);
  if (iv.hi - iv.lo > opts.budget) {
    throw BudgetError("enumerate: |I_" + std::to_string(n) + "| = " +
                      BigInt(iv.hi - iv.lo).str() + " exceeds the budget of " +
                      std::to_string(opts.budget) + "; use sample_interval instead");
  }
  if (is_fibonacci_shaped(seq.spec()) && ispec.is_consecutive()) {
    detail::fibonacci_interval_walk(seq, iv.lo_index, visit);
    return;
  }
  seq.warm_up(iv.hi_index + 1);
  Decomposition scratch;
  for (BigInt z = iv.lo; z < iv.hi; ++z) {
    greedy_decompose_into(seq, z, scratch);
    visit(static_cast<const Decomposition&>(scratch));
  }
}

/// Materialized convenience for small intervals and tests.
inline std::vector<Decomposition> enumerate_interval(Sequence& seq, const IntervalSpec& ispec,
                                                     std::uint32_t n,
                                                     const EnumerationOptions& opts = {}) {
  std::vector<Decomposition> out;
  for_each_in_interval(seq, ispec, n, [&](const Decomposition& d) { out.push_back(d); }, opts);
  return out;
}

/// Streams `count` decompositions of independently uniform z in I_n.
/// Deterministic for a fixed seed.
template <class Visitor>
void sample_interval(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n,
                     std::uint64_t count, std::uint64_t seed, Visitor&& visit) {
  if (count == 0) throw ConfigError("sample_interval: count must be >= 1");
  const Interval iv = interval(seq, ispec, n);
  seq.warm_up(iv.hi_index + 1);
  const BigInt range = iv.hi - iv.lo;
  std::mt19937_64 rng(seed);
  Decomposition scratch;
  for (std::uint64_t s = 0; s < count; ++s) {
    const BigInt z = iv.lo + uniform_below(rng, range);
    greedy_decompose_into(seq, z, scratch);
    visit(static_cast<const Decomposition&>(scratch));
  }
}

/// Splits a sampling run of `count` draws across `workers` threads. Worker w
/// draws the block [count*w/W, count*(w+1)/W) with seed derive_seed(seed, w);
/// worker accumulators merge in worker order, so the aggregate is a pure
/// function of (seed, workers). Acc needs a default constructor and
/// merge(const Acc&).
template <class Acc, class VisitFn>
Acc parallel_sample_reduce(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n,
                           std::uint64_t count, std::uint64_t seed, unsigned workers,
                           VisitFn&& visit_one) {
  if (count == 0) throw ConfigError("sample: count must be >= 1");
  workers = std::max(1u, workers);
  const Interval iv = interval(seq, ispec, n);
  seq.warm_up(iv.hi_index + 1);  // all threads read the warmed table only
  std::vector<Acc> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    if (begin == end) continue;
    pool.emplace_back([&, w, begin, end]() {
      sample_interval(seq, ispec, n, end - begin, derive_seed(seed, w),
                      [&](const Decomposition& d) { visit_one(partial[w], d); });
    });
  }
  for (auto& t : pool) t.join();
  Acc total;
  for (Acc& p : partial) total.merge(p);
  return total;
}

struct UniquenessViolation {
  std::uint64_t z = 0;
  std::uint64_t count = 0;  // number of legal decompositions found (!= 1)
};

struct UniquenessReport {
  std::uint64_t z_max = 0;
  std::string rule;
  std::uint64_t total_checked = 0;
  std::vector<UniquenessViolation> violations;

  bool ok() const { return violations.empty(); }
};

namespace detail {

inline std::vector<std::uint64_t> small_terms_leq(Sequence& seq, std::uint64_t z_max) {
  std::vector<std::uint64_t> terms;
  for (std::uint32_t i = 1;; ++i) {
    const BigInt& t = seq.term(i);
    if (t > z_max) break;
    terms.push_back(t.convert_to<std::uint64_t>());
  }
  return terms;
}

}  // namespace detail

/// Counts, for every z <= z_max, the legal decompositions of z by exhaustive
/// search under the family's digit-legality rule, independent of the greedy
/// path. Supported rules: Fibonacci (subsets with no two consecutive
/// indices) and base-B (digit multiplicities 0..B-1). Other positive linear
/// recurrences have no rule stated here beyond "equals the greedy output",
/// so they are rejected rather than guessed at.
inline UniquenessReport verify_uniqueness(Sequence& seq, std::uint64_t z_max) {
  if (z_max < 1) throw ConfigError("verify_uniqueness: z_max must be >= 1");
  if (z_max > 10'000'000) {
    throw BudgetError("verify_uniqueness: z_max above 1e7 is not tractable");
  }
  UniquenessReport report;
  report.z_max = z_max;
  std::vector<std::uint32_t> counts(z_max + 1, 0);
  const std::vector<std::uint64_t> terms = detail::small_terms_leq(seq, z_max);

  if (is_fibonacci_shaped(seq.spec())) {
    report.rule = "nonconsecutive-indices";
    // Every nonempty subset of indices with pairwise distance >= 2 and sum <= z_max.
    auto rec = [&](auto&& self, std::size_t max_idx, std::uint64_t sum) -> void {
      for (std::size_t i = max_idx; i-- > 0;) {
        const std::uint64_t s = sum + terms[i];
        if (s > z_max) continue;
        ++counts[s];
        if (i >= 2) self(self, i - 1, s);
      }
    };
    rec(rec, terms.size(), 0);
  } else if (is_base_shaped(seq.spec())) {
    report.rule = "digit-expansion";
    const std::uint64_t digit_max = (seq.spec().coefficients[0] - 1).convert_to<std::uint64_t>();
    auto rec = [&](auto&& self, std::size_t max_idx, std::uint64_t sum) -> void {
      for (std::size_t i = max_idx; i-- > 0;) {
        std::uint64_t s = sum;
        for (std::uint64_t mult = 1; mult <= digit_max; ++mult) {
          s += terms[i];
          if (s > z_max) break;
          ++counts[s];
          if (i >= 1) self(self, i, s);
        }
      }
    };
    rec(rec, terms.size(), 0);
  } else {
    throw ConfigError("verify_uniqueness: no independent legality rule is known for "
                      "family '" + seq.spec().name +
                      "'; only fibonacci and base<B> are supported");
  }

  report.total_checked = z_max;
  for (std::uint64_t z = 1; z <= z_max; ++z) {
    if (counts[z] != 1) report.violations.push_back({z, counts[z]});
  }
  return report;
}

}  // namespace zeckgap
