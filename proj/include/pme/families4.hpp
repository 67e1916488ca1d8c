#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "pme/state.hpp"

namespace pme {

// Coefficients alpha_ijkl of a 4-qubit state relative to the 1/2-normalized
// expansion: amplitude(i,j,k,l) = alpha_ijkl / 2, so sum |alpha|^2 = 4 for a
// normalized state. alpha[8i + 4j + 2k + l] = alpha_ijkl.
struct FourQubitCoefficients {
  std::array<Complex, 16> alpha{};

  static FourQubitCoefficients from_state(const PureState& s);
};

// The two 4x4 matrices whose simultaneous unitarity characterizes 4-qubit
// PME states in the canonical gauge:
//   U(2i + j, 2k + l) = alpha_ijkl
//   W(2l + i, 2j + k) = alpha_ijkl
std::pair<ComplexMatrix, ComplexMatrix> uw_matrices(const FourQubitCoefficients& c);

// 1/2 [ |0000> + e^{i theta} |1010>
//       + u(0,0)|0101> + u(0,1)|0111> + u(1,0)|1101> + u(1,1)|1111> ]
// PME for every theta and every single-qubit unitary u.
PureState family_a(double theta, const Eigen::Matrix2cd& u);

// cos(phi)/2 [ e^{i alpha}|0000> + e^{-i alpha}|1111>
//              + e^{i beta}|0101> + e^{-i beta}|1010> ]
// + sin(phi)/2 [ e^{i gamma}|0011> - e^{-i gamma}|1100>
//                + e^{i delta}|0110> - e^{-i delta}|1001> ]
PureState family_b(double phi, double alpha, double beta, double gamma, double delta);

// 1/2 [ |0000> + |1111> + e^{i beta}|0101> + e^{-i beta}|1010> ],
// the intersection of the two families.
PureState psi_zero(double beta);

enum class FamilyTag {
  FamilyA,
  FamilyAShifted,  // family A after a one-site cyclic relabeling
  FamilyB,
  Intersection,
  PmeUnclassified,
  NotPme,
};

std::string to_string(FamilyTag tag);

struct FamilyClass {
  FamilyTag tag = FamilyTag::NotPme;
  std::map<std::string, double> angles;       // recovered angle parameters
  std::optional<Eigen::Matrix2cd> block;      // recovered 2x2 unitary block
};

// Classifies a normalized 4-qubit state by its support pattern. Requires the
// canonical gauge (alpha_1000 = alpha_0100 = alpha_0010 = alpha_0001 = 0)
// and throws GaugeError naming the offending coefficient otherwise.
FamilyClass classify_four_qubit(const PureState& s, double tol = kDefaultTol);

}  // namespace pme
