#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zeckgap/core.hpp"

namespace zeckgap {

/// A positive linear recurrence b_{n+L} = c_1 b_{n+L-1} + ... + c_L b_n with
/// nonnegative integer coefficients (c_1 > 0, c_L > 0) and strictly
/// increasing positive initial terms. These constraints guarantee that the
/// generated terms are positive and strictly increasing from the first
/// recurrence-produced term onward.
struct SequenceSpec {
  std::string name;
  std::vector<BigInt> coefficients;  // c_1 .. c_L
  std::vector<BigInt> initial_terms;  // b_1 .. b_L

  std::size_t order() const { return coefficients.size(); }

  void validate() const {
    const std::size_t L = coefficients.size();
    if (L == 0) throw ConfigError("sequence '" + name + "': empty coefficient list");
    if (initial_terms.size() != L) {
      throw ConfigError("sequence '" + name + "': need exactly " + std::to_string(L) +
                        " initial terms");
    }
    for (const BigInt& c : coefficients) {
      if (c < 0) throw ConfigError("sequence '" + name + "': negative coefficient");
    }
    if (coefficients.front() <= 0) {
      throw ConfigError("sequence '" + name + "': leading coefficient must be positive");
    }
    if (coefficients.back() <= 0) {
      throw ConfigError("sequence '" + name +
                        "': trailing coefficient must be positive (reduce the order)");
    }
    if (L == 1 && coefficients.front() < 2) {
      throw ConfigError("sequence '" + name +
                        "': order-1 recurrences need a coefficient >= 2 to grow");
    }
    for (std::size_t i = 0; i < L; ++i) {
      if (initial_terms[i] <= 0) {
        throw ConfigError("sequence '" + name + "': initial terms must be positive");
      }
      if (i > 0 && initial_terms[i] <= initial_terms[i - 1]) {
        throw ConfigError("sequence '" + name +
                          "': initial terms must be strictly increasing");
      }
    }
  }
};

/// Fibonacci with the Zeckendorf normalization F_1 = 1, F_2 = 2.
inline SequenceSpec fibonacci_spec() {
  return SequenceSpec{"fibonacci", {1, 1}, {1, 2}};
}

inline SequenceSpec tribonacci_spec() {
  return SequenceSpec{"tribonacci", {1, 1, 1}, {1, 2, 4}};
}

/// b_{n+1} = B * b_n starting from 1, i.e. b_n = B^{n-1}.
inline SequenceSpec base_spec(const BigInt& base) {
  if (base < 2) throw ConfigError("base must be >= 2");
  return SequenceSpec{"base" + base.str(), {base}, {1}};
}

inline bool is_fibonacci_shaped(const SequenceSpec& spec) {
  return spec.order() == 2 && spec.coefficients[0] == 1 && spec.coefficients[1] == 1 &&
         spec.initial_terms[0] == 1 && spec.initial_terms[1] == 2;
}

inline bool is_base_shaped(const SequenceSpec& spec) {
  return spec.order() == 1 && spec.initial_terms[0] == 1;
}

/// Shipped family lookup: "fibonacci", "tribonacci", "base<B>" (e.g. base10).
inline SequenceSpec family_from_name(const std::string& name) {
  if (name == "fibonacci") return fibonacci_spec();
  if (name == "tribonacci") return tribonacci_spec();
  if (name.rfind("base", 0) == 0 && name.size() > 4) {
    std::string digits = name.substr(4);
    if (!digits.empty() && digits.front() == '-') digits.erase(0, 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; })) {
      return base_spec(BigInt(digits));
    }
  }
  throw ConfigError("unknown family '" + name +
                    "' (shipped: fibonacci, tribonacci, base<B>)");
}

/// Dominant root of x^L - c_1 x^{L-1} - ... - c_L, located by bisection on
/// the monotone rescaling f(x) = 1 - sum c_j x^{-j} over [1, 1 + max c_j].
/// Accurate to at least 12 significant digits.
inline double dominant_root(const SequenceSpec& spec) {
  spec.validate();
  std::vector<double> c(spec.coefficients.size());
  double cmax = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = to_double(spec.coefficients[j]);
    cmax = std::max(cmax, c[j]);
  }
  auto f = [&](double x) {
    double s = 0.0, xp = 1.0;
    for (double cj : c) {
      xp *= x;
      s += cj / xp;
    }
    return 1.0 - s;
  };
  double lo = 1.0, hi = 1.0 + cmax;
  // f(lo) < 0 because sum c_j >= 2; f(hi) > 0 because sum (1+M)^-j < 1/M.
  constexpr int kMaxIter = 500;
  int it = 0;
  while (hi - lo > 1e-14 * hi && it++ < kMaxIter) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  if (hi - lo > 1e-13 * hi) {
    throw NumericError("dominant_root: bisection did not converge for '" + spec.name + "'");
  }
  return 0.5 * (lo + hi);
}

/// Term generator with an append-only memo table. Build is single-writer;
/// after warm_up() to a top index, term_cached() reads are safe to share
/// across concurrent readers.
class Sequence {
 public:
  explicit Sequence(SequenceSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    terms_ = spec_.initial_terms;
  }

  const SequenceSpec& spec() const { return spec_; }

  /// b_i, 1-based. Grows the memo table as needed.
  const BigInt& term(std::uint32_t i) {
    if (i == 0) throw ConfigError("term index must be >= 1");
    if (i > terms_.size()) extend_to(i);
    return terms_[i - 1];
  }

  /// b_i without growing the table; requires i <= warmed_max().
  const BigInt& term_cached(std::uint32_t i) const {
    if (i == 0 || i > terms_.size()) {
      throw ConfigError("term_cached: index " + std::to_string(i) + " not warmed");
    }
    return terms_[i - 1];
  }

  std::uint32_t warmed_max() const { return static_cast<std::uint32_t>(terms_.size()); }

  void warm_up(std::uint32_t max_index) {
    if (max_index > terms_.size()) extend_to(max_index);
  }

  /// Largest index i with b_i <= value; 0 when value < b_1.
  std::uint32_t largest_index_leq(const BigInt& value) {
    if (value < terms_.front()) return 0;
    while (terms_.back() <= value) extend_to(static_cast<std::uint32_t>(terms_.size() + 1));
    auto it = std::upper_bound(terms_.begin(), terms_.end(), value);
    return static_cast<std::uint32_t>(it - terms_.begin());
  }

  double dominant_root() const {
    if (!(root_ > 0)) root_ = zeckgap::dominant_root(spec_);
    return root_;
  }

 private:
  void extend_to(std::uint32_t i) {
    const std::size_t L = spec_.order();
    while (terms_.size() < i) {
      BigInt next = 0;
      const std::size_t m = terms_.size();
      for (std::size_t j = 0; j < L; ++j) {
        next += spec_.coefficients[j] * terms_[m - 1 - j];
      }
      terms_.push_back(std::move(next));
    }
  }

  SequenceSpec spec_;
  std::vector<BigInt> terms_;
  mutable double root_ = 0.0;
};

/// Interval constants (c1, d1, c2, d2) defining I_n = [b_{c1 n + d1}, b_{c2 n + d2}).
/// Construction computes the smallest n_min >= 1 such that for every
/// n >= n_min the low index is >= 1 and the interval is nonempty, and rejects
/// constant tuples for which no such n_min exists.
class IntervalSpec {
 public:
  IntervalSpec(std::int64_t c1, std::int64_t d1, std::int64_t c2, std::int64_t d2)
      : c1_(c1), d1_(d1), c2_(c2), d2_(d2) {
    if (c1 < 0) throw ConfigError("interval: c1 must be nonnegative");
    if (c2 < c1 || (c2 == c1 && d2 <= d1)) {
      throw ConfigError("interval: upper index must eventually exceed lower index");
    }
    std::int64_t n = 1;
    if (c1 == 0) {
      if (d1 < 1) throw ConfigError("interval: lower index c1*n+d1 never reaches 1");
    } else {
      n = std::max(n, ceil_div(1 - d1, c1));
    }
    if (c2 > c1) n = std::max(n, ceil_div(1 - (d2 - d1), c2 - c1));
    n_min_ = static_cast<std::uint32_t>(n);
  }

  /// Classical default I_n = [b_n, b_{n+1}).
  IntervalSpec() : IntervalSpec(1, 0, 1, 1) {}

  std::int64_t c1() const { return c1_; }
  std::int64_t d1() const { return d1_; }
  std::int64_t c2() const { return c2_; }
  std::int64_t d2() const { return d2_; }
  std::uint32_t n_min() const { return n_min_; }

  std::uint32_t lo_index(std::uint32_t n) const {
    require(n);
    return static_cast<std::uint32_t>(c1_ * n + d1_);
  }
  std::uint32_t hi_index(std::uint32_t n) const {
    require(n);
    return static_cast<std::uint32_t>(c2_ * n + d2_);
  }

  /// True when I_n is a run of consecutive terms [b_m, b_{m+1}).
  bool is_consecutive() const { return c1_ == c2_ && d2_ == d1_ + 1; }

 private:
  void require(std::uint32_t n) const {
    if (n < n_min_) {
      throw ConfigError("interval: n=" + std::to_string(n) + " is below n_min=" +
                        std::to_string(n_min_));
    }
  }
  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a > 0 ? (a + b - 1) / b : a / b;
  }

  std::int64_t c1_, d1_, c2_, d2_;
  std::uint32_t n_min_;
};

struct Interval {
  std::uint32_t lo_index = 0;
  std::uint32_t hi_index = 0;
  BigInt lo;  // b_{lo_index}, inclusive
  BigInt hi;  // b_{hi_index}, exclusive
};

inline Interval interval(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n) {
  Interval iv;
  iv.lo_index = ispec.lo_index(n);
  iv.hi_index = ispec.hi_index(n);
  seq.warm_up(iv.hi_index);
  iv.lo = seq.term_cached(iv.lo_index);
  iv.hi = seq.term_cached(iv.hi_index);
  return iv;
}

inline BigInt interval_size(Sequence& seq, const IntervalSpec& ispec, std::uint32_t n) {
  Interval iv = interval(seq, ispec, n);
  return iv.hi - iv.lo;
}

}  // namespace zeckgap
