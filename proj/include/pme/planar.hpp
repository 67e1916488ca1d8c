#pragma once

#include <string>
#include <vector>

#include "pme/state.hpp"

namespace pme {

// Connected window of a ring of n sites together with its complement.
// `window` lists sites in ring order from `start`; `complement` lists the
// remaining sites in ascending order.
struct Partition {
  int n = 0;
  int start = 0;
  int length = 0;
  std::vector<int> window;
  std::vector<int> complement;
};

Partition cyclic_window(int n, int start, int length);

// Arbitrary (not necessarily connected) subset split, for subset-wise checks.
struct SubsetPartition {
  int n = 0;
  std::vector<int> subset;      // as given
  std::vector<int> complement;  // ascending
};

SubsetPartition subset_partition(int n, const std::vector<int>& subset);

// Coefficient matrix of the state across a bipartition: entry (row, col) is
// the amplitude whose window digits pack to `col` (window order) and whose
// complement digits pack to `row` (complement order).
ComplexMatrix coefficient_matrix(const PureState& s,
                                 const std::vector<int>& window,
                                 const std::vector<int>& complement);
ComplexMatrix coefficient_matrix(const PureState& s, const Partition& p);
ComplexMatrix coefficient_matrix(const PureState& s, const SubsetPartition& p);

// Reduced state of the window block, computed as M^dagger M from the
// coefficient matrix. Trace equals the squared norm of the input.
ComplexMatrix reduced_density(const PureState& s, const Partition& p);
ComplexMatrix reduced_density(const PureState& s, const SubsetPartition& p);

struct CheckVerdict {
  bool pass = false;
  double deviation = 0.0;
};

// Entrywise max-abs distance from I/D, D the matrix dimension.
CheckVerdict is_maximally_mixed(const ComplexMatrix& rho, double tol = kDefaultTol);

// Whether M is proportional to an isometry: forms the Gram matrix on the
// smaller side and measures relative max-abs distance from scale * I.
// A zero matrix fails with infinite deviation.
CheckVerdict is_proportional_isometry(const ComplexMatrix& m, double tol = kDefaultTol);

struct PartitionCheck {
  std::string where;
  double deviation = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<PartitionCheck> checks;
  bool overall_pass = false;
  double tolerance = kDefaultTol;

  double max_deviation() const;
};

// PME check: every cyclic window of floor(n/2) sites must be maximally mixed.
VerificationReport verify_pme(const PureState& s, double tol = kDefaultTol);

// AME check: every subset of floor(n/2) sites must be maximally mixed.
// Dense subset enumeration is guarded at n <= 12.
VerificationReport verify_ame(const PureState& s, double tol = kDefaultTol);

}  // namespace pme
