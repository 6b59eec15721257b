#include "gfcs/fock.hpp"

#include <algorithm>
#include <cmath>

#include "gfcs/errors.hpp"

namespace gfcs::fock {

namespace {

using cplx = std::complex<double>;

void sort_and_merge(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.label < b.label; });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().label == t.label) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(t);
    }
  }
  terms = std::move(merged);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SHO: return "sho";
    case Family::Sphere: return "sphere";
    case Family::CalogeroSutherland: return "calogero-sutherland";
    case Family::Landau: return "landau";
    case Family::FlatBandEven: return "flatband-even";
    case Family::FlatBandOdd: return "flatband-odd";
  }
  return "unknown";
}

bool is_valid(const QuantumLabel& label) {
  switch (label.family) {
    case Family::SHO:
    case Family::CalogeroSutherland:
      return label.first >= 0;
    case Family::Sphere:
      return label.first >= 0 && std::abs(label.second) <= label.first;
    case Family::Landau:
      return label.first >= 0 && label.second >= -label.first;
    case Family::FlatBandEven:
    case Family::FlatBandOdd:
      return true;
  }
  return false;
}

std::string to_string(const QuantumLabel& label) {
  return std::string(to_string(label.family)) + "(" + std::to_string(label.first) + "," +
         std::to_string(label.second) + ")";
}

CoefficientSeries::CoefficientSeries(Family family, std::vector<Term> terms, int truncation_order,
                                     FamilyParams params, double normalization)
    : family_(family),
      terms_(std::move(terms)),
      truncation_(truncation_order),
      params_(params),
      normalization_(normalization) {
  for (const auto& t : terms_) {
    if (t.label.family != family_) throw DomainError("CoefficientSeries: label family mismatch");
    if (!is_valid(t.label)) throw DomainError("CoefficientSeries: invalid label " + to_string(t.label));
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
      throw DomainError("CoefficientSeries: non-finite coefficient at " + to_string(t.label));
    }
  }
  sort_and_merge(terms_);
}

cplx CoefficientSeries::coefficient(const QuantumLabel& label) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), label,
                             [](const Term& t, const QuantumLabel& l) { return t.label < l; });
  if (it != terms_.end() && it->label == label) return it->coefficient;
  return 0.0;
}

double CoefficientSeries::norm_squared() const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += std::norm(t.coefficient);
  return acc;
}

CoefficientSeries CoefficientSeries::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0)) throw DomainError("CoefficientSeries: cannot normalise the zero vector");
  const double scale = 1.0 / std::sqrt(n2);
  CoefficientSeries out = *this;
  for (auto& t : out.terms_) t.coefficient *= scale;
  out.normalization_ *= scale;
  return out;
}

CoefficientSeries combine(cplx alpha, const CoefficientSeries& a, cplx beta, const CoefficientSeries& b) {
  if (a.family() != b.family()) throw DomainError("combine: family mismatch");
  std::vector<Term> terms;
  terms.reserve(a.size() + b.size());
  for (const auto& t : a.terms()) terms.push_back({t.label, alpha * t.coefficient});
  for (const auto& t : b.terms()) terms.push_back({t.label, beta * t.coefficient});
  return CoefficientSeries(a.family(), std::move(terms),
                           std::min(a.truncation_order(), b.truncation_order()), a.params());
}

CoefficientSeries ladder_apply(const LadderSpec& op, const CoefficientSeries& s) {
  if (op.family != s.family()) throw DomainError("ladder_apply: operator " + op.name + " does not act on this family");
  std::vector<Term> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) {
    const auto target = op.label_shift(t.label);
    if (!target || !is_valid(*target)) continue;
    const double me = op.matrix_element(t.label);
    if (me == 0.0) continue;
    out.push_back({*target, me * t.coefficient});
  }
  int truncation = s.truncation_order();
  if (op.direction == Direction::Lower) truncation = std::max(0, truncation - 1);
  if (op.direction == Direction::Raise) truncation += 1;
  return CoefficientSeries(s.family(), std::move(out), truncation, s.params());
}

double eigen_residual(const LadderSpec& op, const CoefficientSeries& s, cplx eigenvalue) {
  if (s.empty()) return 0.0;
  const auto image = ladder_apply(op, s);
  const auto diff = combine(1.0, image, -eigenvalue, s);
  const QuantumLabel top = s.terms().back().label;
  double worst = 0.0;
  for (const auto& t : diff.terms()) {
    if (t.label == top) continue;
    worst = std::max(worst, std::abs(t.coefficient));
  }
  return worst;
}

cplx inner_product(const CoefficientSeries& s1, const CoefficientSeries& s2) {
  if (s1.family() != s2.family()) throw DomainError("inner_product: family mismatch");
  cplx acc = 0.0;
  auto it1 = s1.terms().begin();
  auto it2 = s2.terms().begin();
  while (it1 != s1.terms().end() && it2 != s2.terms().end()) {
    if (it1->label < it2->label) {
      ++it1;
    } else if (it2->label < it1->label) {
      ++it2;
    } else {
      acc += std::conj(it1->coefficient) * it2->coefficient;
      ++it1;
      ++it2;
    }
  }
  return acc;
}

namespace ladders {

namespace {

LadderSpec make(std::string name, Family family, Direction dir,
                std::function<double(const QuantumLabel&)> me, int d_first, int d_second) {
  LadderSpec op;
  op.name = std::move(name);
  op.family = family;
  op.direction = dir;
  op.matrix_element = std::move(me);
  op.label_shift = [d_first, d_second](const QuantumLabel& l) -> std::optional<QuantumLabel> {
    QuantumLabel out{l.family, l.first + d_first, l.second + d_second};
    if (!is_valid(out)) return std::nullopt;
    return out;
  };
  return op;
}

double safe_sqrt(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

}  // namespace

LadderSpec sho_lower() {
  return make("a", Family::SHO, Direction::Lower,
              [](const QuantumLabel& l) { return safe_sqrt(l.first); }, -1, 0);
}

LadderSpec sho_raise() {
  return make("a+", Family::SHO, Direction::Raise,
              [](const QuantumLabel& l) { return std::sqrt(l.first + 1.0); }, +1, 0);
}

LadderSpec su11_lower(double lambda) {
  return make("J-", Family::CalogeroSutherland, Direction::Lower,
              [lambda](const QuantumLabel& l) { return safe_sqrt(l.first * (l.first + lambda - 0.5)); },
              -1, 0);
}

LadderSpec su11_raise(double lambda) {
  return make("J+", Family::CalogeroSutherland, Direction::Raise,
              [lambda](const QuantumLabel& l) {
                return safe_sqrt((l.first + 1.0) * (l.first + lambda + 0.5));
              },
              +1, 0);
}

LadderSpec su11_diagonal(double lambda) {
  return make("J3", Family::CalogeroSutherland, Direction::Diagonal,
              [lambda](const QuantumLabel& l) { return l.first + 0.5 * lambda + 0.25; }, 0, 0);
}

LadderSpec landau_a() {
  return make("a", Family::Landau, Direction::Lower,
              [](const QuantumLabel& l) { return safe_sqrt(l.first); }, -1, +1);
}

LadderSpec landau_a_dag() {
  return make("a+", Family::Landau, Direction::Raise,
              [](const QuantumLabel& l) { return std::sqrt(l.first + 1.0); }, +1, -1);
}

LadderSpec landau_b() {
  return make("b", Family::Landau, Direction::Lower,
              [](const QuantumLabel& l) { return safe_sqrt(l.first + l.second); }, 0, -1);
}

LadderSpec landau_b_dag() {
  return make("b+", Family::Landau, Direction::Raise,
              [](const QuantumLabel& l) { return std::sqrt(l.first + l.second + 1.0); }, 0, +1);
}

}  // namespace ladders

}  // namespace gfcs::fock
