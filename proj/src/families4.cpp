#include "pme/families4.hpp"

#include <cmath>
#include <stdexcept>

#include "pme/errors.hpp"
#include "pme/planar.hpp"

namespace pme {

namespace {

constexpr int kA0000 = 0, kA0011 = 3, kA0101 = 5, kA0110 = 6, kA0111 = 7;
constexpr int kA1001 = 9, kA1010 = 10, kA1011 = 11, kA1100 = 12, kA1101 = 13;
constexpr int kA1110 = 14, kA1111 = 15;

struct GaugePosition {
  int index;
  const char* name;
};

constexpr GaugePosition kGauge[] = {
    {8, "alpha_1000"}, {4, "alpha_0100"}, {2, "alpha_0010"}, {1, "alpha_0001"}};

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

PureState state_from_halved(const std::array<Complex, 16>& alpha) {
  ComplexVector amps(16);
  for (int i = 0; i < 16; ++i) amps(i) = 0.5 * alpha[i];
  return PureState(4, 2, std::move(amps));
}

// True when every coefficient outside `support` (gauge slots aside, which the
// caller has already vetted) is below tol in magnitude.
bool matches_support(const std::array<Complex, 16>& alpha,
                     std::initializer_list<int> support, double tol) {
  std::array<bool, 16> allowed{};
  for (const int i : support) allowed[i] = true;
  for (const GaugePosition& g : kGauge) allowed[g.index] = true;
  for (int i = 0; i < 16; ++i) {
    if (!allowed[i] && std::abs(alpha[i]) > tol) return false;
  }
  return true;
}

}  // namespace

FourQubitCoefficients FourQubitCoefficients::from_state(const PureState& s) {
  if (s.sites() != 4 || s.local_dim() != 2) {
    throw std::invalid_argument("coefficient extraction requires a 4-qubit state");
  }
  FourQubitCoefficients c;
  for (int i = 0; i < 16; ++i) c.alpha[i] = 2.0 * s.amp(i);
  return c;
}

std::pair<ComplexMatrix, ComplexMatrix> uw_matrices(const FourQubitCoefficients& c) {
  ComplexMatrix u(4, 4), w(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const Complex a = c.alpha[8 * i + 4 * j + 2 * k + l];
          u(2 * i + j, 2 * k + l) = a;
          w(2 * l + i, 2 * j + k) = a;
        }
      }
    }
  }
  return {u, w};
}

PureState family_a(double theta, const Eigen::Matrix2cd& u) {
  if (unitarity_deviation(u) > kUnitaryTol) {
    throw std::invalid_argument("family A block must be unitary within tolerance");
  }
  std::array<Complex, 16> alpha{};
  alpha[kA0000] = 1.0;
  alpha[kA1010] = unit_phase(theta);
  alpha[kA0101] = u(0, 0);
  alpha[kA0111] = u(0, 1);
  alpha[kA1101] = u(1, 0);
  alpha[kA1111] = u(1, 1);
  return state_from_halved(alpha);
}

PureState family_b(double phi, double alpha_, double beta, double gamma, double delta) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  std::array<Complex, 16> alpha{};
  alpha[kA0000] = c * unit_phase(alpha_);
  alpha[kA1111] = c * unit_phase(-alpha_);
  alpha[kA0101] = c * unit_phase(beta);
  alpha[kA1010] = c * unit_phase(-beta);
  alpha[kA0011] = s * unit_phase(gamma);
  alpha[kA1100] = -s * unit_phase(-gamma);
  alpha[kA0110] = s * unit_phase(delta);
  alpha[kA1001] = -s * unit_phase(-delta);
  return state_from_halved(alpha);
}

PureState psi_zero(double beta) {
  std::array<Complex, 16> alpha{};
  alpha[kA0000] = 1.0;
  alpha[kA1111] = 1.0;
  alpha[kA0101] = unit_phase(beta);
  alpha[kA1010] = unit_phase(-beta);
  return state_from_halved(alpha);
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::FamilyA: return "FamilyA";
    case FamilyTag::FamilyAShifted: return "FamilyA-shifted";
    case FamilyTag::FamilyB: return "FamilyB";
    case FamilyTag::Intersection: return "Intersection";
    case FamilyTag::PmeUnclassified: return "PME-unclassified";
    case FamilyTag::NotPme: return "NotPME";
  }
  return "NotPME";
}

FamilyClass classify_four_qubit(const PureState& s, double tol) {
  if (s.sites() != 4 || s.local_dim() != 2) {
    throw std::invalid_argument("classifier requires a 4-qubit state");
  }
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("classifier requires a normalized state");
  }
  const PureState canon = global_phase_canonical(s);
  const FourQubitCoefficients coeff = FourQubitCoefficients::from_state(canon);
  const std::array<Complex, 16>& alpha = coeff.alpha;
  for (const GaugePosition& g : kGauge) {
    if (std::abs(alpha[g.index]) > tol) {
      throw GaugeError(std::string("state is outside the canonical gauge: ") +
                           g.name + " is nonzero",
                       g.name);
    }
  }

  if (!verify_pme(canon, tol).overall_pass) {
    return {FamilyTag::NotPme, {}, {}};
  }

  if (matches_support(alpha, {kA0000, kA0101, kA1010, kA1111}, tol)) {
    FamilyClass out{FamilyTag::Intersection, {}, {}};
    out.angles["beta"] = std::arg(alpha[kA0101]);
    return out;
  }

  if (std::abs(alpha[kA1100]) <= tol) {
    if (std::abs(alpha[kA0111]) > tol &&
        matches_support(alpha, {kA0000, kA0101, kA0111, kA1010, kA1101, kA1111}, tol)) {
      FamilyClass out{FamilyTag::FamilyA, {}, {}};
      out.angles["theta"] = std::arg(alpha[kA1010]);
      Eigen::Matrix2cd block;
      block << alpha[kA0101], alpha[kA0111], alpha[kA1101], alpha[kA1111];
      out.block = block;
      return out;
    }
    if (std::abs(alpha[kA0111]) <= tol &&
        matches_support(alpha, {kA0000, kA0101, kA1010, kA1011, kA1110, kA1111}, tol)) {
      // family A after cyclically relabeling the ring by one site
      FamilyClass out{FamilyTag::FamilyAShifted, {}, {}};
      out.angles["theta"] = std::arg(alpha[kA0101]);
      Eigen::Matrix2cd block;
      block << alpha[kA1010], alpha[kA1110], alpha[kA1011], alpha[kA1111];
      out.block = block;
      return out;
    }
    return {FamilyTag::PmeUnclassified, {}, {}};
  }

  if (std::abs(alpha[kA0011]) > tol &&
      matches_support(alpha, {kA0000, kA0011, kA0101, kA0110, kA1001, kA1010,
                              kA1100, kA1111}, tol)) {
    FamilyClass out{FamilyTag::FamilyB, {}, {}};
    out.angles["phi"] = std::atan2(std::abs(alpha[kA0011]), std::abs(alpha[kA0000]));
    out.angles["alpha"] = std::arg(alpha[kA0000]);
    out.angles["beta"] = std::arg(alpha[kA0101]);
    out.angles["gamma"] = std::arg(alpha[kA0011]);
    out.angles["delta"] = std::arg(alpha[kA0110]);
    return out;
  }

  return {FamilyTag::PmeUnclassified, {}, {}};
}

}  // namespace pme
