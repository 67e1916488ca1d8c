#pragma once

#include <vector>

#include "pme/planar.hpp"
#include "pme/state.hpp"

namespace pme {

// Bipartition transfer unitary u of a PME state across a half window:
// amplitudes factor as amp = u(row, col) / sqrt(D) with col the window
// digits (ring order) and row the complement digits (ascending order).
struct TransferUnitary {
  Partition partition;
  ComplexMatrix u;
};

// Requires |window| == n/2 and a PME state; throws VerificationError with the
// offending deviation otherwise.
TransferUnitary extract_transfer_unitary(const PureState& s, const Partition& p,
                                         double tol = kDefaultTol);

// The target of the teleportation setup: digit K on the window sites paired
// with the same digit K on the complement sites, uniformly weighted.
PureState canonical_max_entangled(const Partition& p, int d);

// Applies the adjoint transfer unitary on the complement block, mapping the
// resource to canonical_max_entangled(p, d) across the bipartition.
PureState teleport_setup(const PureState& s, const Partition& p,
                         double tol = kDefaultTol);

// Secret sharing over a PME resource of 2n qudits. The distributor holds
// site `distributor_site`; the other 2n - 1 sites are the players, renumbered
// by dropping the distributor and keeping ascending order.
struct QssShares {
  int n_half = 0;
  int d = 2;
  int distributor_site = 0;
  PureState encoded;   // 2n - 1 player qudits
  PureState resource;  // original resource, kept for decoding
};

// Index of a resource site within the encoded player register.
int encoded_site_index(const QssShares& shares, int resource_site);

// Projects the distributor's qudit onto the secret (times sqrt(d), which
// restores the norm for a PME resource) and removes it from the register.
QssShares qss_encode(const PureState& resource, int distributor_site,
                     const ComplexVector& secret, double tol = kDefaultTol);

struct QssRecovery {
  ComplexVector recovered;     // phase-canonical d-vector
  double fidelity = 0.0;       // purity of the recovery site's reduced state
  int recovery_site = 0;       // resource-ring site where the secret lands
  std::vector<int> sub_window; // connected arc actually used for decoding
};

// Recovers the secret on a window of at least n adjacent players (adjacency
// on the player ring, i.e. the resource ring with the distributor excised).
// An oversized window decodes via its leftmost valid sub-arc, scanning
// clockwise from the distributor. Throws AuthorizationError for windows the
// access structure does not authorize.
QssRecovery qss_decode(const QssShares& shares,
                       const std::vector<int>& recovery_window,
                       double tol = kDefaultTol);

// Player arcs (resource-site labels, arc order) that must carry no secret
// information: those fitting with the distributor inside a single half
// window of the resource ring.
std::vector<std::vector<int>> unauthorized_arcs(int n_half, int distributor_site);

// Checks that every unauthorized arc of the encoded state is maximally mixed
// regardless of the secret.
VerificationReport security_report(const QssShares& shares, double tol = kDefaultTol);

}  // namespace pme
