#pragma once

// Truncated Fock-space algebra: labelled coefficient series and ladder operators
// defined by their matrix elements.

#include <complex>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfcs::fock {

enum class Family { SHO, Sphere, CalogeroSutherland, Landau, FlatBandEven, FlatBandOdd };

std::string_view to_string(Family f);

/// Basis ket label. Index meaning per family:
///   SHO (n, 0); Sphere (l, m); CalogeroSutherland (n, 0); Landau (n, m) with m >= -n;
///   FlatBand (l, m) of the associated Bessel function B_{l,m}.
struct QuantumLabel {
  Family family = Family::SHO;
  int first = 0;
  int second = 0;

  auto operator<=>(const QuantumLabel&) const = default;
};

/// Family constraints: Sphere l >= |m|; Landau n >= 0 and m >= -n; SHO/CS n >= 0.
bool is_valid(const QuantumLabel& label);

std::string to_string(const QuantumLabel& label);

/// Model parameters carried along with a series (only the relevant ones are read).
struct FamilyParams {
  double lambda = 1.0;        // Calogero-Sutherland coupling
  double beta = 1.0;          // flat-band field strength
  double landau_scale = 1.0;  // M omega / (2 hbar)
  int m = 0;                  // Sphere / Landau sector
  int k = 0;                  // flat-band sequence
  bool bessel_printed_norm = false;  // flat-band basis with the printed a_{l,m} prefactor
};

struct Term {
  QuantumLabel label;
  std::complex<double> coefficient;
};

/// Ordered, finite superposition of basis kets. Terms are kept sorted by label and
/// labels are unique. `normalization` is the factor already applied to the defining
/// (unnormalised) coefficients; 1 when none was applied.
class CoefficientSeries {
 public:
  CoefficientSeries() = default;
  CoefficientSeries(Family family, std::vector<Term> terms, int truncation_order,
                    FamilyParams params = {}, double normalization = 1.0);

  Family family() const noexcept { return family_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  int truncation_order() const noexcept { return truncation_; }
  const FamilyParams& params() const noexcept { return params_; }
  double normalization() const noexcept { return normalization_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Coefficient at `label`, zero when absent.
  std::complex<double> coefficient(const QuantumLabel& label) const;

  /// sum |c|^2
  double norm_squared() const;

  /// Copy rescaled to unit norm; `normalization` is multiplied accordingly.
  CoefficientSeries normalized() const;

 private:
  Family family_ = Family::SHO;
  std::vector<Term> terms_;
  int truncation_ = 0;
  FamilyParams params_{};
  double normalization_ = 1.0;
};

/// alpha * a + beta * b over the union of labels.
CoefficientSeries combine(std::complex<double> alpha, const CoefficientSeries& a,
                          std::complex<double> beta, const CoefficientSeries& b);

enum class Direction { Lower, Raise, Diagonal };

struct LadderSpec {
  std::string name;
  Family family = Family::SHO;
  Direction direction = Direction::Lower;
  /// Non-negative matrix element <shift(label)| op |label>.
  std::function<double(const QuantumLabel&)> matrix_element;
  /// Target label, or nullopt when the image leaves the valid label set.
  std::function<std::optional<QuantumLabel>(const QuantumLabel&)> label_shift;
};

/// Image of `s` under `op`. Lowering reduces the truncation order by one (the image of
/// the top retained label is exact, the label above it would need the missing next term).
/// Kets mapped outside the valid label set contribute zero.
CoefficientSeries ladder_apply(const LadderSpec& op, const CoefficientSeries& s);

/// max |(op s - eigenvalue s)(label)| over every label except the top retained label of s.
double eigen_residual(const LadderSpec& op, const CoefficientSeries& s, std::complex<double> eigenvalue);

/// sum conj(c1) c2 over shared labels.
std::complex<double> inner_product(const CoefficientSeries& s1, const CoefficientSeries& s2);

// Ladder operators of the models.
namespace ladders {

LadderSpec sho_lower();   // a |n> = sqrt(n) |n-1>
LadderSpec sho_raise();   // a+ |n> = sqrt(n+1) |n+1>

LadderSpec su11_lower(double lambda);     // J- |n> = sqrt(n (n+lambda-1/2)) |n-1>
LadderSpec su11_raise(double lambda);     // J+ |n> = sqrt((n+1)(n+lambda+1/2)) |n+1>
LadderSpec su11_diagonal(double lambda);  // J3 |n> = (n + lambda/2 + 1/4) |n>

LadderSpec landau_a();       // a |n,m> = sqrt(n) |n-1,m+1>
LadderSpec landau_a_dag();   // a+ |n,m> = sqrt(n+1) |n+1,m-1>
LadderSpec landau_b();       // b |n,m> = sqrt(n+m) |n,m-1>
LadderSpec landau_b_dag();   // b+ |n,m> = sqrt(n+m+1) |n,m+1>

}  // namespace ladders

}  // namespace gfcs::fock
