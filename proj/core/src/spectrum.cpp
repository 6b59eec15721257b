#include "gfcs/spectrum.hpp"

#include <sstream>

#include "gfcs/errors.hpp"

namespace gfcs::verify {

std::int64_t spectrum_quarters(int l, int m) {
  const std::int64_t a = 2LL * m - 2LL * l - 1;
  const std::int64_t b = 2LL * m + 2LL * l + 1;
  return a * b;
}

double spectrum(int l, int m, const states::ModelConstants& constants) {
  constants.validate();
  return constants.spectrum_prefactor * static_cast<double>(spectrum_quarters(l, m)) / 4.0;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

DegeneracyScan degeneracy_scan(int l_min, int l_max, int m_min, int m_max) {
  if (l_min > l_max || m_min > m_max) throw DomainError("degeneracy_scan: empty range");
  DegeneracyScan scan;
  scan.l_min = l_min;
  scan.l_max = l_max;
  scan.m_min = m_min;
  scan.m_max = m_max;
  for (int l = l_min; l <= l_max; ++l) {
    for (int m = m_min; m <= m_max; ++m) scan.levels[spectrum_quarters(l, m)].emplace_back(l, m);
  }
  for (const auto& [q, members] : scan.levels) {
    ++scan.multiplicity_histogram[members.size()];
    const bool prime = is_prime(q);
    const bool ok = prime ? members.size() == 1 : members.size() == 2;
    if (!ok) scan.counterexamples.push_back({q, prime, members});
  }
  scan.claim_holds = scan.counterexamples.empty();
  return scan;
}

DegeneracyScan degeneracy_scan(int range) {
  if (range < 0) throw DomainError("degeneracy_scan: range >= 0");
  return degeneracy_scan(-range, range, -range, range);
}

std::string DegeneracyScan::verdict() const {
  std::ostringstream os;
  os << "l in [" << l_min << "," << l_max << "], m in [" << m_min << "," << m_max << "]: " << levels.size()
     << " distinct levels; ";
  if (claim_holds) {
    os << "claim holds (prime <-> non-degenerate, otherwise two-fold)";
    return os.str();
  }
  os << "claim refuted, " << counterexamples.size() << " counterexample levels";
  std::size_t shown = 0;
  for (const auto& c : counterexamples) {
    if (shown++ == 3) break;
    os << "; 4E=" << c.quarters << (c.prime ? " (prime)" : "") << " x" << c.states.size() << " {";
    for (std::size_t i = 0; i < c.states.size() && i < 4; ++i) {
      os << (i ? " " : "") << "(" << c.states[i].first << "," << c.states[i].second << ")";
    }
    if (c.states.size() > 4) os << " ...";
    os << "}";
  }
  return os.str();
}

}  // namespace gfcs::verify
