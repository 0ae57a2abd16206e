#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bsdecomp/degree_sequence.hpp"
#include "bsdecomp/diagram.hpp"
#include "bsdecomp/koszul.hpp"

namespace bsdecomp::testing {

/// Koszul table by enumerating all 2^n subsets.
inline Diagram koszul_by_subsets(const std::vector<int>& e) {
  Diagram::Entries out;
  const std::size_t n = e.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int i = 0, j = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        ++i;
        j += e[k];
      }
    }
    out[Cell{i, j}] += Rational(1);
  }
  return Diagram(std::move(out));
}

/// Dense quadruple loop over both supports, indexed by position rather than
/// through the sparse map.
inline Diagram convolve_dense(const Diagram& a, const Diagram& b) {
  std::vector<std::pair<Cell, Rational>> xs(a.entries().begin(), a.entries().end());
  std::vector<std::pair<Cell, Rational>> ys(b.entries().begin(), b.entries().end());
  Diagram::Entries out;
  for (int i = 0; i <= a.width() + b.width(); ++i) {
    for (const auto& [ca, va] : xs) {
      for (const auto& [cb, vb] : ys) {
        if (ca.i + cb.i == i) out[Cell{i, ca.j + cb.j}] += va * vb;
      }
    }
  }
  return Diagram(std::move(out));
}

/// pure(d) entry at column i, computed as a product of unit fractions.
inline Rational pure_entry(const std::vector<int>& d, std::size_t i) {
  Rational v(1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k != i) v /= Rational(d[i] > d[k] ? d[i] - d[k] : d[k] - d[i]);
  }
  return v;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int max_abs = 9) {
    int num = 0;
    while (num == 0) num = uniform(-max_abs, max_abs);
    return Rational(num, uniform(1, max_abs));
  }

  Diagram diagram(int max_entries = 6, int max_i = 3, int j_lo = -4, int j_hi = 8) {
    Diagram::Entries out;
    const int count = uniform(0, max_entries);
    for (int k = 0; k < count; ++k) out[Cell{uniform(0, max_i), uniform(j_lo, j_hi)}] = rational();
    return Diagram(std::move(out));
  }

  DegreeSequence degree_sequence(int max_len, int lo, int hi) {
    const int len = uniform(1, std::min(max_len, hi - lo + 1));
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng_);
    pool.resize(static_cast<std::size_t>(len));
    std::sort(pool.begin(), pool.end());
    return DegreeSequence(pool);
  }

  OrderedSet ordered_set(int max_size, int max_value) {
    std::vector<int> v(static_cast<std::size_t>(uniform(0, max_size)));
    for (int& x : v) x = uniform(1, max_value);
    return OrderedSet(v);
  }

  CIType ci_type(int max_codim, int max_degree, int min_codim = 0) {
    std::vector<int> e(static_cast<std::size_t>(uniform(min_codim, max_codim)));
    for (int& x : e) x = uniform(1, max_degree);
    return CIType(e);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bsdecomp::testing
