#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace pme {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = std::int64_t;

inline constexpr double kDefaultTol = 1e-10;    // verification verdicts
inline constexpr double kUnitaryTol = 1e-10;    // unitarity of gate inputs
inline constexpr double kAmpThreshold = 1e-12;  // amplitude treated as zero
inline constexpr double kNormTol = 1e-8;        // accepted norm drift on load

// dim^exp as a 64-bit index; guards against dense-vector blowup.
Index pow_index(int dim, int exp);

// Mixed-radix packing. Site 0 is the most significant digit, so for
// dim = 2, sites = 3, digits (1,0,1) pack to index 5.
Index pack_digits(int sites, int dim, const std::vector<int>& digits);
std::vector<int> unpack_digits(int sites, int dim, Index index);

// Dense pure state of `sites` qudits, each of local dimension `dim`.
// Immutable after construction; operations return new states.
class PureState {
 public:
  PureState(int sites, int dim, ComplexVector amps);

  int sites() const { return sites_; }
  int local_dim() const { return dim_; }
  Index size() const { return amps_.size(); }
  const ComplexVector& amps() const { return amps_; }
  Complex amp(Index index) const;
  double norm() const { return amps_.norm(); }

 private:
  int sites_;
  int dim_;
  ComplexVector amps_;
};

PureState basis_state(int sites, int dim, const std::vector<int>& digits);

PureState tensor_product(const PureState& a, const PureState& b);

// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const PureState& a, const PureState& b);

// |<a|b>|^2 / (<a|a><b|b>)
double fidelity(const PureState& a, const PureState& b);

// Applies a dim^k x dim^k unitary to the listed sites, which must be
// distinct; the listed order is the digit order of the unitary's index.
PureState apply_local_unitary(const PureState& s, const std::vector<int>& sites,
                              const ComplexMatrix& u);

// Rescales by a global phase so the first nonzero amplitude is real positive.
PureState global_phase_canonical(const PureState& s);

// max-abs entry of U*U - I; +inf for a non-square matrix.
double unitarity_deviation(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kUnitaryTol);

}  // namespace pme
