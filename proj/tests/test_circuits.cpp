#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "pme/circuits.hpp"
#include "pme/planar.hpp"

using namespace pme;
using testutil::max_abs_diff;
using testutil::oracle_chain;

namespace {

std::vector<ComplexMatrix> haar_chain(int count, int d, std::uint64_t seed) {
  std::vector<ComplexMatrix> us;
  for (int i = 0; i < count; ++i) us.push_back(random_unitary(d, seed + i));
  return us;
}

std::vector<ComplexMatrix> diagonal_chain(int count, int d, std::uint64_t seed) {
  testutil::ParamRng rng(seed);
  std::vector<ComplexMatrix> us;
  for (int i = 0; i < count; ++i) {
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) u(j, j) = std::polar(1.0, rng.angle());
    us.push_back(u);
  }
  return us;
}

}  // namespace

TEST_CASE("controlled_power_matrix blocks are iterated powers") {
  SUBCASE("qubit flip gives CNOT") {
    const ComplexMatrix cnot = controlled_power_matrix(testutil::pauli_x());
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = expected(2, 3) = expected(3, 2) = 1.0;
    CHECK(max_abs_diff(cnot, expected) < 1e-15);
  }
  SUBCASE("qutrit blocks are I, u, u^2") {
    const ComplexMatrix u = random_unitary(3, 8);
    const ComplexMatrix lam = controlled_power_matrix(u);
    CHECK(max_abs_diff(lam.block(0, 0, 3, 3), ComplexMatrix::Identity(3, 3)) <
          1e-15);
    CHECK(max_abs_diff(lam.block(3, 3, 3, 3), u) < 1e-15);
    CHECK(max_abs_diff(lam.block(6, 6, 3, 3), ComplexMatrix(u * u)) < 1e-15);
    CHECK(lam.block(0, 3, 3, 3).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("the controlled gate stays unitary up to dimension 4") {
    for (int d = 2; d <= 4; ++d) {
      CHECK(unitarity_deviation(controlled_power_matrix(random_unitary(d, 60 + d))) <
            1e-12);
    }
  }
}

TEST_CASE("controlled flip turns a plus state into a Bell pair") {
  ComplexVector amps = ComplexVector::Zero(4);
  amps(0) = amps(2) = 1.0 / std::sqrt(2.0);  // (|0> + |1>) tensor |0>
  const PureState plus_zero(2, 2, amps);
  Circuit c{2, 2, {controlled_power_gate(0, 1, testutil::pauli_x())}};
  const PureState out = apply_circuit(plus_zero, c);
  CHECK(max_abs_diff(out.amps(), bell_pair(2).amps()) < 1e-15);
}

TEST_CASE("gate construction validates its input") {
  CHECK_THROWS_AS(controlled_power_gate(1, 1, testutil::pauli_x()),
                  std::invalid_argument);
  ComplexMatrix notu = ComplexMatrix::Identity(2, 2) * 1.5;
  CHECK_THROWS_AS(controlled_power_gate(0, 1, notu), std::invalid_argument);
  CHECK_THROWS_AS(apply_circuit(bell_pair(2), Circuit{3, 2, {}}),
                  std::invalid_argument);
  Circuit outside{2, 2, {{0, 5, testutil::pauli_x()}}};
  CHECK_THROWS_AS(apply_circuit(bell_pair(2), outside), std::invalid_argument);
}

TEST_CASE("reference state constructors") {
  SUBCASE("ghz") {
    const PureState g = ghz(3, 2);
    CHECK(std::abs(g.amp(0) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
    CHECK(std::abs(g.amp(7) - Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-15);
    CHECK(std::abs(g.amp(3)) == 0.0);
  }
  SUBCASE("bell_pair at d = 3") {
    const PureState b = bell_pair(3);
    for (const Index idx : {0, 4, 8}) {
      CHECK(std::abs(b.amp(idx) - Complex{1.0 / std::sqrt(3.0), 0.0}) < 1e-15);
    }
    CHECK(b.norm() == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("dimerized_bell(2, 2)") {
    const PureState dimer = dimerized_bell(2, 2);
    for (const Index idx : {0, 5, 10, 15}) {
      CHECK(std::abs(dimer.amp(idx) - Complex{0.5, 0.0}) < 1e-15);
    }
  }
  SUBCASE("ghz(2, d) equals bell_pair(d)") {
    for (int d = 2; d <= 4; ++d) {
      CHECK(max_abs_diff(ghz(2, d).amps(), bell_pair(d).amps()) < 1e-15);
    }
  }
}

TEST_CASE("chain circuits match the closed-form amplitudes") {
  for (int half = 1; half <= 4; ++half) {
    for (int d = 2; d <= 3; ++d) {
      for (int rep = 0; rep < 2; ++rep) {
        const std::uint64_t seed = 1000 + 100 * half + 10 * d + rep;
        const auto us = haar_chain(half - 1, d, seed);
        INFO("half=" << half << " d=" << d << " rep=" << rep);
        const PureState psi = circuit_psi(half, d, us);
        const PureState xi = circuit_xi(half, d, us);
        CHECK(max_abs_diff(psi.amps(), oracle_chain(half, d, us, true).amps()) <
              1e-12);
        CHECK(max_abs_diff(xi.amps(), oracle_chain(half, d, us, false).amps()) <
              1e-12);
      }
    }
  }
}

TEST_CASE("chain circuits produce planar maximally entangled states") {
  for (int half = 1; half <= 3; ++half) {
    for (int d = 2; d <= 3; ++d) {
      const auto us = haar_chain(half - 1, d, 4000 + 10 * half + d);
      CHECK(verify_pme(circuit_psi(half, d, us)).overall_pass);
      CHECK(verify_pme(circuit_xi(half, d, us)).overall_pass);
    }
  }
}

TEST_CASE("the two gate orders agree exactly for commuting unitaries") {
  for (int half = 2; half <= 4; ++half) {
    const auto us = diagonal_chain(half - 1, 3, 7000 + half);
    const PureState psi = circuit_psi(half, 3, us);
    const PureState xi = circuit_xi(half, 3, us);
    CHECK(max_abs_diff(psi.amps(), xi.amps()) < 1e-13);
  }
}

TEST_CASE("the two gate orders differ for generic unitaries") {
  // one gate (half = 2) is order-insensitive; three sites and up are not
  const auto one = haar_chain(1, 2, 8801);
  CHECK(max_abs_diff(circuit_psi(2, 2, one).amps(), circuit_xi(2, 2, one).amps()) <
        1e-13);
  for (int half = 3; half <= 4; ++half) {
    for (int d = 2; d <= 3; ++d) {
      const auto us = haar_chain(half - 1, d, 8810 + 10 * half + d);
      const double f = fidelity(circuit_psi(half, d, us), circuit_xi(half, d, us));
      INFO("half=" << half << " d=" << d << " fidelity=" << f);
      CHECK(f < 1.0 - 1e-6);
    }
  }
}

TEST_CASE("an inverted circuit undoes the original") {
  const auto us = haar_chain(2, 3, 9100);
  const Circuit c = psi_circuit(3, 3, us);
  const PureState s = random_state(6, 3, 9101);
  const PureState round = apply_circuit(apply_circuit(s, c), inverted(c));
  CHECK(max_abs_diff(round.amps(), s.amps()) < 1e-12);
}

TEST_CASE("chain constructors validate the unitary count") {
  CHECK_THROWS_AS(circuit_psi(3, 2, haar_chain(1, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(circuit_xi(1, 2, haar_chain(1, 2, 1)), std::invalid_argument);
}

TEST_CASE("random_unitary is deterministic and Haar-shaped") {
  const ComplexMatrix a = random_unitary(4, 12345);
  const ComplexMatrix b = random_unitary(4, 12345);
  CHECK(max_abs_diff(a, b) == 0.0);
  CHECK(unitarity_deviation(a) < 1e-12);
  const ComplexMatrix c = random_unitary(4, 12346);
  CHECK(max_abs_diff(a, c) > 1e-3);
  CHECK(std::abs(std::abs(random_unitary(1, 5)(0, 0)) - 1.0) < 1e-14);
}

TEST_CASE("random_state is deterministic and normalized") {
  const PureState a = random_state(3, 3, 777);
  const PureState b = random_state(3, 3, 777);
  CHECK(max_abs_diff(a.amps(), b.amps()) == 0.0);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.sites() == 3);
  CHECK(a.local_dim() == 3);
}
