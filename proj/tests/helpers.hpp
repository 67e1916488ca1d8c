#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "pme/circuits.hpp"
#include "pme/families4.hpp"
#include "pme/planar.hpp"
#include "pme/state.hpp"

// Independent oracles and utilities shared by the test suites. These
// deliberately re-derive quantities from first principles rather than calling
// the implementations under test.
namespace testutil {

using pme::Complex;
using pme::ComplexMatrix;
using pme::ComplexVector;
using pme::Index;
using pme::PureState;

// Textbook partial trace onto `sites`: rho[k, k'] = sum over the other
// sites' assignments of psi(k, rest) * conj(psi(k', rest)).
inline ComplexMatrix brute_force_reduced(const PureState& s,
                                         const std::vector<int>& sites) {
  const int n = s.sites();
  const int d = s.local_dim();
  const int m = static_cast<int>(sites.size());
  std::vector<char> listed(n, 0);
  for (const int site : sites) listed[site] = 1;
  std::vector<int> rest_sites;
  for (int site = 0; site < n; ++site) {
    if (!listed[site]) rest_sites.push_back(site);
  }

  Index sub_dim = 1;
  for (int i = 0; i < m; ++i) sub_dim *= d;
  Index rest_dim = 1;
  for (size_t i = 0; i < rest_sites.size(); ++i) rest_dim *= d;

  const auto compose = [&](Index sub, Index rest) {
    std::vector<int> digits(n, 0);
    for (int t = m - 1; t >= 0; --t) {
      digits[sites[t]] = static_cast<int>(sub % d);
      sub /= d;
    }
    for (int t = static_cast<int>(rest_sites.size()) - 1; t >= 0; --t) {
      digits[rest_sites[t]] = static_cast<int>(rest % d);
      rest /= d;
    }
    Index idx = 0;
    for (int site = 0; site < n; ++site) idx = idx * d + digits[site];
    return idx;
  };

  ComplexMatrix rho = ComplexMatrix::Zero(sub_dim, sub_dim);
  for (Index k = 0; k < sub_dim; ++k) {
    for (Index kp = 0; kp < sub_dim; ++kp) {
      Complex acc{};
      for (Index rest = 0; rest < rest_dim; ++rest) {
        acc += s.amp(compose(k, rest)) * std::conj(s.amp(compose(kp, rest)));
      }
      rho(k, kp) = acc;
    }
  }
  return rho;
}

template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

// Deterministic uniform draws for test parameters.
class ParamRng {
 public:
  explicit ParamRng(std::uint64_t seed) : rng_(seed) {}
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double angle() { return 2.0 * std::numbers::pi * uniform(); }
  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

// Relabels sites by a cyclic rotation: the output digit at site t is the
// input digit at site (t - by) mod n.
inline PureState cyclic_shift(const PureState& s, int by) {
  const int n = s.sites();
  const int d = s.local_dim();
  ComplexVector out = ComplexVector::Zero(s.size());
  for (Index idx = 0; idx < s.size(); ++idx) {
    const std::vector<int> digits = pme::unpack_digits(n, d, idx);
    std::vector<int> shifted(n);
    for (int t = 0; t < n; ++t) shifted[t] = digits[((t - by) % n + n) % n];
    out(pme::pack_digits(n, d, shifted)) = s.amp(idx);
  }
  return PureState(n, d, out);
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

// Direct product-formula evaluation of the two entangling-chain states on
// 2 * half qudits. For first-half digits I and second-half digits M:
//   descending chain: amp = d^{-half/2} delta(m_0, i_0)
//                           prod_k <m_k| us[k-1]^{i_{k-1}} |i_k>
//   ascending chain:  amp = d^{-half/2} delta(m_0, i_0)
//                           prod_k <m_k| us[k-1]^{m_{k-1}} |i_k>
inline PureState oracle_chain(int half, int d, const std::vector<ComplexMatrix>& us,
                              bool descending) {
  std::vector<std::vector<ComplexMatrix>> powers;  // powers[g][e] = us[g]^e
  for (const ComplexMatrix& u : us) {
    std::vector<ComplexMatrix> p{ComplexMatrix::Identity(d, d)};
    for (int e = 1; e < d; ++e) p.push_back(p.back() * u);
    powers.push_back(std::move(p));
  }
  Index block = 1;
  for (int i = 0; i < half; ++i) block *= d;
  const double w = 1.0 / std::sqrt(static_cast<double>(block));
  ComplexVector amps = ComplexVector::Zero(block * block);
  for (Index fi = 0; fi < block; ++fi) {
    std::vector<int> i_digits(half);
    Index rest = fi;
    for (int t = half - 1; t >= 0; --t) {
      i_digits[t] = static_cast<int>(rest % d);
      rest /= d;
    }
    for (Index mi = 0; mi < block; ++mi) {
      std::vector<int> m_digits(half);
      rest = mi;
      for (int t = half - 1; t >= 0; --t) {
        m_digits[t] = static_cast<int>(rest % d);
        rest /= d;
      }
      if (m_digits[0] != i_digits[0]) continue;
      Complex amp = w;
      for (int k = 1; k < half; ++k) {
        const int expo = descending ? i_digits[k - 1] : m_digits[k - 1];
        amp *= powers[k - 1][expo](m_digits[k], i_digits[k]);
      }
      amps(fi * block + mi) = amp;
    }
  }
  return PureState(2 * half, d, amps);
}

// A deterministic fleet of PME states used by protocol and sweep tests.
struct FleetEntry {
  std::string name;
  PureState state;
};

inline std::vector<FleetEntry> pme_fleet() {
  // note ghz(n, d) stops being planar maximally entangled past n = 3
  std::vector<FleetEntry> fleet;
  fleet.push_back({"ghz(3,2)", pme::ghz(3, 2)});
  fleet.push_back({"ghz(3,3)", pme::ghz(3, 3)});
  fleet.push_back({"dimer(2,2)", pme::dimerized_bell(2, 2)});
  fleet.push_back({"dimer(3,3)", pme::dimerized_bell(3, 3)});
  fleet.push_back({"family_a", pme::family_a(1.234, pme::random_unitary(2, 7))});
  fleet.push_back({"family_b", pme::family_b(0.3, 0.1, 0.2, 0.4, 0.5)});
  fleet.push_back({"psi(2,3)", pme::circuit_psi(2, 3,
                   {pme::random_unitary(3, 11)})});
  fleet.push_back({"xi(3,2)", pme::circuit_xi(3, 2,
                   {pme::random_unitary(2, 21), pme::random_unitary(2, 22)})});
  return fleet;
}

}  // namespace testutil
