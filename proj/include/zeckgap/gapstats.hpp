#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>

#include "zeckgap/decomposition.hpp"

namespace zeckgap {

/// Mergeable census of gap lengths pooled over a stream of decompositions.
/// Values with k = 1 contribute no gaps and are tallied separately; merging
/// partial histograms by pointwise addition is order-independent.
struct GapHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;  // gap length -> occurrences
  std::uint64_t total_gaps = 0;                   // sum (k(z) - 1)
  std::uint64_t decompositions = 0;               // stream elements seen
  std::uint64_t singletons = 0;                   // elements with k = 1

  void add(const Decomposition& d) {
    ++decompositions;
    if (d.k() < 2) {
      ++singletons;
      return;
    }
    d.for_each_gap([&](std::uint32_t g) { ++counts[g]; });
    total_gaps += d.k() - 1;
  }

  void merge(const GapHistogram& other) {
    for (const auto& [g, c] : other.counts) counts[g] += c;
    total_gaps += other.total_gaps;
    decompositions += other.decompositions;
    singletons += other.singletons;
  }
};

/// Discrete probability measure on gap lengths g >= 0. Masses are exact
/// rationals when built from an enumeration census; measures built from
/// sampled streams keep the empirical sample fractions but are flagged as
/// estimates.
struct GapMeasure {
  std::map<std::uint32_t, BigRat> masses;
  std::uint64_t total_gaps = 0;  // k(z)-1 for an individual measure, N_gaps for an average
  bool exact = true;

  static GapMeasure from_histogram(const GapHistogram& hist, bool exact_census) {
    if (hist.total_gaps == 0) {
      throw NoGapsError("gap measure: no gaps in stream (all k(z) = 1)");
    }
    GapMeasure m;
    m.total_gaps = hist.total_gaps;
    m.exact = exact_census;
    for (const auto& [g, c] : hist.counts) {
      m.masses.emplace(g, BigRat(c, hist.total_gaps));
    }
    return m;
  }

  /// Synthetic measure from floating-point masses (self-tests, references).
  static GapMeasure from_probabilities(const std::map<std::uint32_t, double>& probs) {
    GapMeasure m;
    m.exact = false;
    double sum = 0;
    for (const auto& [g, p] : probs) {
      if (p < 0) throw ConfigError("gap measure: negative mass");
      if (p > 0) m.masses.emplace(g, BigRat(p));
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("gap measure: masses must sum to 1");
    return m;
  }

  BigRat mass(std::uint32_t g) const {
    auto it = masses.find(g);
    return it == masses.end() ? BigRat(0) : it->second;
  }

  double prob(std::uint32_t g) const { return to_double(mass(g)); }

  std::uint32_t support_max() const {
    return masses.empty() ? 0 : masses.rbegin()->first;
  }
};

/// P_n(g) / P(g): probability of a gap of length g, zero off the support.
inline double gap_probability(const GapMeasure& m, std::uint32_t g) { return m.prob(g); }

/// Spacing gap measure of one z: mass 1/(k-1) on each gap l_j - l_{j-1}.
/// Values with a single summand have no gaps and raise NoGapsError.
inline GapMeasure individual_gap_measure(const Decomposition& d) {
  if (d.k() < 2) {
    throw NoGapsError("individual_gap_measure: k(z) = 1 for z = " + d.value.str());
  }
  GapHistogram hist;
  hist.add(d);
  return GapMeasure::from_histogram(hist, true);
}

/// Average spacing gap measure of a stream: pooled gap counts over N_gaps.
/// Equals the (k(z)-1)-weighted mean of the individual measures.
template <class DecompRange>
GapMeasure average_gap_measure(const DecompRange& decomps) {
  GapHistogram hist;
  for (const Decomposition& d : decomps) hist.add(d);
  return GapMeasure::from_histogram(hist, true);
}

/// Average gap measure of I_n by full enumeration.
inline GapMeasure average_gap_measure(Sequence& seq, const IntervalSpec& ispec,
                                      std::uint32_t n, const EnumerationOptions& opts = {}) {
  GapHistogram hist;
  for_each_in_interval(seq, ispec, n, [&](const Decomposition& d) { hist.add(d); }, opts);
  return GapMeasure::from_histogram(hist, true);
}

/// Exact indicator counts over I_n.
///
/// one_gap[(i, g)] is X_{i,i+g}(n): the number of z whose decomposition uses
/// b_i and b_{i+g} with no summand strictly between, i.e. (i, i+g) is an
/// adjacent summand pair of z. two_gap[(j1, g1, j2, g2)] counts z for which
/// both (j1, j1+g1) and (j2, j2+g2) are adjacent summand pairs, keyed in
/// position order (j1 < j2 whenever indices are distinct, as in Fibonacci);
/// this is the pair census the variance expansion sums. N_gaps is the full
/// gap total regardless of g_max.
struct GapCountTable {
  std::uint32_t n = 0;
  std::uint32_t g_max = 0;
  std::uint64_t interval_size = 0;
  std::uint64_t n_gaps = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> one_gap;
  std::map<std::array<std::uint32_t, 4>, std::uint64_t> two_gap;

  void merge(const GapCountTable& other) {
    if (other.n != n || other.g_max != g_max) {
      throw ConfigError("GapCountTable::merge: incompatible tables");
    }
    interval_size += other.interval_size;
    n_gaps += other.n_gaps;
    for (const auto& [k, v] : other.one_gap) one_gap[k] += v;
    for (const auto& [k, v] : other.two_gap) two_gap[k] += v;
  }
};

/// One enumeration pass over I_n accumulating exact one-gap counts for
/// g <= g_max and two-gap counts for every unordered pair of gaps with both
/// lengths <= g_max. pair_limit caps the number of distinct two-gap keys.
/// Pass g_max = 0 to default to 2n (the support never reaches c2*n+d2).
inline GapCountTable count_gaps(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n,
                                std::uint32_t g_max = 0, std::uint64_t pair_limit = 1u << 20,
                                const EnumerationOptions& opts = {}) {
  GapCountTable table;
  table.n = n;
  table.g_max = g_max == 0 ? 2 * n : g_max;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gaps;  // (start index, length)
  for_each_in_interval(
      seq, ispec, n,
      [&](const Decomposition& d) {
        ++table.interval_size;
        if (d.k() < 2) return;
        table.n_gaps += d.k() - 1;
        gaps.clear();
        for (std::size_t j = 1; j < d.indices.size(); ++j) {
          gaps.emplace_back(d.indices[j - 1], d.indices[j] - d.indices[j - 1]);
        }
        for (const auto& [start, g] : gaps) {
          if (g <= table.g_max) ++table.one_gap[{start, g}];
        }
        for (std::size_t a = 0; a < gaps.size(); ++a) {
          if (gaps[a].second > table.g_max) continue;
          for (std::size_t b = a + 1; b < gaps.size(); ++b) {
            if (gaps[b].second > table.g_max) continue;
            const std::array<std::uint32_t, 4> key = {gaps[a].first, gaps[a].second,
                                                      gaps[b].first, gaps[b].second};
            auto [it, inserted] = table.two_gap.try_emplace(key, 0);
            if (inserted && table.two_gap.size() > pair_limit) {
              throw BudgetError("count_gaps: two-gap table exceeds pair_limit=" +
                                std::to_string(pair_limit) + "; lower g_max");
            }
            ++it->second;
          }
        }
      },
      opts);
  return table;
}

}  // namespace zeckgap
