#pragma once

#include <cstdint>
#include <vector>

#include "pme/state.hpp"

namespace pme {

// Controlled-power gate Lambda(U): |i>|j> -> |i> U^i |j> on a qudit pair.
struct Gate {
  int control = 0;
  int target = 0;
  ComplexMatrix u;  // d x d unitary
};

Gate controlled_power_gate(int control, int target, const ComplexMatrix& u);

// Dense d^2 x d^2 matrix of Lambda(U), control as the most significant digit.
ComplexMatrix controlled_power_matrix(const ComplexMatrix& u);

struct Circuit {
  int n_sites = 0;
  int d = 2;
  std::vector<Gate> gates;  // applied in listed order
};

PureState apply_circuit(const PureState& s, const Circuit& c);

// Reversed gate order with each unitary replaced by its adjoint.
Circuit inverted(const Circuit& c);

// (|0...0> + ... + |d-1...d-1>) / sqrt(d) on `sites` qudits.
PureState ghz(int sites, int dim);

// Maximally entangled pair sum_i |ii> / sqrt(d).
PureState bell_pair(int dim);

// n = 2 * half qudits in the pairing sum_I |I>|I> / sqrt(d^half): each site k
// of the first half is maximally entangled with site k + half.
PureState dimerized_bell(int half, int dim);

// Entangling circuit on the dimerized pairing: controlled-power gates between
// consecutive second-half sites, one per unitary in `us` (half - 1 of them).
// The two orderings differ only when the unitaries fail to commute.
Circuit psi_circuit(int half, int dim, const std::vector<ComplexMatrix>& us);
Circuit xi_circuit(int half, int dim, const std::vector<ComplexMatrix>& us);

PureState circuit_psi(int half, int dim, const std::vector<ComplexMatrix>& us);
PureState circuit_xi(int half, int dim, const std::vector<ComplexMatrix>& us);

// Haar-distributed unitary from a seeded generator; deterministic per seed.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

// Normalized state with iid Gaussian amplitudes; deterministic per seed.
PureState random_state(int sites, int dim, std::uint64_t seed);

}  // namespace pme
