#include "pme/circuits.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace pme {

namespace {

// Uniform in [0, 1) from the generator's top 53 bits; avoids the
// implementation-defined std::normal_distribution so seeds reproduce
// identically across standard libraries.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex complex_gaussian(std::mt19937_64& rng) {
  double u1 = 0.0;
  do {
    u1 = uniform53(rng);
  } while (u1 == 0.0);
  const double u2 = uniform53(rng);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

void check_gate_dim(const Circuit& c) {
  for (const Gate& g : c.gates) {
    if (g.control < 0 || g.control >= c.n_sites || g.target < 0 ||
        g.target >= c.n_sites) {
      throw std::invalid_argument("gate site outside the circuit register");
    }
    if (g.u.rows() != c.d || g.u.cols() != c.d) {
      throw std::invalid_argument("gate unitary does not match the circuit dimension");
    }
  }
}

std::vector<Gate> dimer_chain_gates(int half, int dim,
                                    const std::vector<ComplexMatrix>& us,
                                    bool descending) {
  if (half < 1) throw std::invalid_argument("half count must be at least 1");
  if (static_cast<int>(us.size()) != half - 1) {
    throw std::invalid_argument("expected half - 1 unitaries");
  }
  std::vector<Gate> gates;
  if (descending) {
    for (int k = half - 1; k >= 1; --k) {
      gates.push_back(controlled_power_gate(half + k - 1, half + k, us[k - 1]));
    }
  } else {
    for (int k = 1; k <= half - 1; ++k) {
      gates.push_back(controlled_power_gate(half + k - 1, half + k, us[k - 1]));
    }
  }
  for (const Gate& g : gates) {
    if (g.u.rows() != dim) {
      throw std::invalid_argument("chain unitary does not match the local dimension");
    }
  }
  return gates;
}

}  // namespace

Gate controlled_power_gate(int control, int target, const ComplexMatrix& u) {
  if (control == target) {
    throw std::invalid_argument("control and target must be distinct sites");
  }
  if (control < 0 || target < 0) {
    throw std::invalid_argument("gate sites must be nonnegative");
  }
  if (u.rows() != u.cols() || u.rows() < 2) {
    throw std::invalid_argument("gate unitary must be square with dimension >= 2");
  }
  if (unitarity_deviation(u) > kUnitaryTol) {
    throw std::invalid_argument("gate matrix is not unitary within tolerance");
  }
  return Gate{control, target, u};
}

ComplexMatrix controlled_power_matrix(const ComplexMatrix& u) {
  const int d = static_cast<int>(u.rows());
  if (u.cols() != d || d < 2) {
    throw std::invalid_argument("gate unitary must be square with dimension >= 2");
  }
  ComplexMatrix lambda = ComplexMatrix::Zero(Index{d} * d, Index{d} * d);
  ComplexMatrix power = ComplexMatrix::Identity(d, d);
  for (int i = 0; i < d; ++i) {
    lambda.block(i * d, i * d, d, d) = power;
    power = power * u;
  }
  return lambda;
}

PureState apply_circuit(const PureState& s, const Circuit& c) {
  if (c.n_sites != s.sites() || c.d != s.local_dim()) {
    throw std::invalid_argument("circuit register does not match the state");
  }
  check_gate_dim(c);
  PureState out = s;
  for (const Gate& g : c.gates) {
    out = apply_local_unitary(out, {g.control, g.target}, controlled_power_matrix(g.u));
  }
  return out;
}

Circuit inverted(const Circuit& c) {
  Circuit inv;
  inv.n_sites = c.n_sites;
  inv.d = c.d;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    inv.gates.push_back(Gate{it->control, it->target, it->u.adjoint()});
  }
  return inv;
}

PureState ghz(int sites, int dim) {
  ComplexVector amps = ComplexVector::Zero(pow_index(dim, sites));
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int g = 0; g < dim; ++g) {
    amps(pack_digits(sites, dim, std::vector<int>(sites, g))) = w;
  }
  return PureState(sites, dim, std::move(amps));
}

PureState bell_pair(int dim) { return dimerized_bell(1, dim); }

PureState dimerized_bell(int half, int dim) {
  if (half < 1) throw std::invalid_argument("half count must be at least 1");
  const Index block = pow_index(dim, half);
  ComplexVector amps = ComplexVector::Zero(block * block);
  const double w = 1.0 / std::sqrt(static_cast<double>(block));
  for (Index i = 0; i < block; ++i) amps(i * block + i) = w;
  return PureState(2 * half, dim, std::move(amps));
}

Circuit psi_circuit(int half, int dim, const std::vector<ComplexMatrix>& us) {
  Circuit c;
  c.n_sites = 2 * half;
  c.d = dim;
  c.gates = dimer_chain_gates(half, dim, us, /*descending=*/true);
  return c;
}

Circuit xi_circuit(int half, int dim, const std::vector<ComplexMatrix>& us) {
  Circuit c;
  c.n_sites = 2 * half;
  c.d = dim;
  c.gates = dimer_chain_gates(half, dim, us, /*descending=*/false);
  return c;
}

PureState circuit_psi(int half, int dim, const std::vector<ComplexMatrix>& us) {
  return apply_circuit(dimerized_bell(half, dim), psi_circuit(half, dim, us));
}

PureState circuit_xi(int half, int dim, const std::vector<ComplexMatrix>& us) {
  return apply_circuit(dimerized_bell(half, dim), xi_circuit(half, dim, us));
}

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::mt19937_64 rng(seed);
  ComplexMatrix g(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) g(r, c) = complex_gaussian(rng);
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;  // makes the factorization R-positive
  }
  return q;
}

PureState random_state(int sites, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexVector amps(pow_index(dim, sites));
  for (Index i = 0; i < amps.size(); ++i) amps(i) = complex_gaussian(rng);
  const double norm = amps.norm();
  if (norm == 0.0) throw std::runtime_error("degenerate random draw");
  return PureState(sites, dim, amps / norm);
}

}  // namespace pme
