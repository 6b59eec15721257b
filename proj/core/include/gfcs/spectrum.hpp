#pragma once

// Flat-band energy levels and the degeneracy scan.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gfcs/states.hpp"

namespace gfcs::verify {

/// 4 E_{l,m} / prefactor = (2m - 2l - 1)(2m + 2l + 1), exact.
std::int64_t spectrum_quarters(int l, int m);

/// E_{l,m} = prefactor (m - l - 1/2)(m + l + 1/2)
double spectrum(int l, int m, const states::ModelConstants& constants = {});

bool is_prime(std::int64_t n);

struct LevelCounterexample {
  std::int64_t quarters = 0;  // 4E / prefactor
  bool prime = false;
  std::vector<std::pair<int, int>> states;  // (l, m) sharing the level
};

struct DegeneracyScan {
  int l_min = 0, l_max = 0, m_min = 0, m_max = 0;
  /// level (in quarters of the prefactor) -> (l, m) pairs, in scan order
  std::map<std::int64_t, std::vector<std::pair<int, int>>> levels;
  /// multiplicity -> number of levels
  std::map<std::size_t, std::size_t> multiplicity_histogram;
  std::vector<LevelCounterexample> counterexamples;
  bool claim_holds = true;

  std::string verdict() const;
};

/// Enumerates l in [l_min, l_max], m in [m_min, m_max] and tests "single level iff
/// (2m-2l-1)(2m+2l+1) is prime, two-fold otherwise".
DegeneracyScan degeneracy_scan(int l_min, int l_max, int m_min, int m_max);

/// Symmetric range |l|, |m| <= range.
DegeneracyScan degeneracy_scan(int range);

}  // namespace gfcs::verify
