#include "pme/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pme/errors.hpp"

namespace pme {

namespace {

// Length of the shortest connected resource-ring arc covering `sites`.
int minimal_arc_span(int n, std::vector<int> sites) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  const int m = static_cast<int>(sites.size());
  int max_gap = 0;
  for (int i = 0; i < m; ++i) {
    const int next = sites[(i + 1) % m] + (i + 1 == m ? n : 0);
    max_gap = std::max(max_gap, next - sites[i]);
  }
  return n - max_gap + 1;
}

}  // namespace

TransferUnitary extract_transfer_unitary(const PureState& s, const Partition& p,
                                         double tol) {
  if (p.n != s.sites()) {
    throw std::invalid_argument("partition does not match the state");
  }
  if (p.length * 2 != p.n) {
    throw std::invalid_argument("transfer unitary requires |window| == n/2");
  }
  const VerificationReport rep = verify_pme(s, tol);
  if (!rep.overall_pass) {
    throw VerificationError("state is not planar maximally entangled",
                            rep.max_deviation());
  }
  const Index block = pow_index(s.local_dim(), p.length);
  ComplexMatrix u = std::sqrt(static_cast<double>(block)) * coefficient_matrix(s, p);
  const double dev = unitarity_deviation(u);
  if (dev > tol) {
    throw VerificationError("extracted transfer matrix is not unitary", dev);
  }
  return {p, std::move(u)};
}

PureState canonical_max_entangled(const Partition& p, int d) {
  if (p.length * 2 != p.n) {
    throw std::invalid_argument("canonical pair requires |window| == n/2");
  }
  const Index block = pow_index(d, p.length);
  ComplexVector amps = ComplexVector::Zero(pow_index(d, p.n));
  const double w = 1.0 / std::sqrt(static_cast<double>(block));
  for (Index k = 0; k < block; ++k) {
    std::vector<int> digits(p.n, 0);
    Index rest = k;
    for (int t = p.length - 1; t >= 0; --t) {
      const int g = static_cast<int>(rest % d);
      digits[p.window[t]] = g;
      digits[p.complement[t]] = g;
      rest /= d;
    }
    amps(pack_digits(p.n, d, digits)) = w;
  }
  return PureState(p.n, d, std::move(amps));
}

PureState teleport_setup(const PureState& s, const Partition& p, double tol) {
  const TransferUnitary tu = extract_transfer_unitary(s, p, tol);
  return apply_local_unitary(s, p.complement, tu.u.adjoint());
}

int encoded_site_index(const QssShares& shares, int resource_site) {
  if (resource_site < 0 || resource_site >= shares.resource.sites() ||
      resource_site == shares.distributor_site) {
    throw std::invalid_argument("not a player site");
  }
  return resource_site - (resource_site > shares.distributor_site ? 1 : 0);
}

QssShares qss_encode(const PureState& resource, int distributor_site,
                     const ComplexVector& secret, double tol) {
  const int n2 = resource.sites();
  const int d = resource.local_dim();
  if (n2 % 2 != 0) {
    throw std::invalid_argument("resource must have an even number of sites");
  }
  if (distributor_site < 0 || distributor_site >= n2) {
    throw std::invalid_argument("distributor site out of range");
  }
  if (secret.size() != d) {
    throw std::invalid_argument("secret must be a length-d vector");
  }
  if (std::abs(secret.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("secret must be normalized");
  }
  const VerificationReport rep = verify_pme(resource, tol);
  if (!rep.overall_pass) {
    throw VerificationError("resource is not planar maximally entangled",
                            rep.max_deviation());
  }

  const double root_d = std::sqrt(static_cast<double>(d));
  ComplexVector encoded = ComplexVector::Zero(pow_index(d, n2 - 1));
  for (Index idx = 0; idx < resource.size(); ++idx) {
    const Complex a = resource.amp(idx);
    if (a == Complex{}) continue;
    const std::vector<int> digits = unpack_digits(n2, d, idx);
    Index enc = 0;
    for (int site = 0; site < n2; ++site) {
      if (site != distributor_site) enc = enc * d + digits[site];
    }
    encoded(enc) += root_d * secret(digits[distributor_site]) * a;
  }
  return QssShares{n2 / 2, d, distributor_site,
                   PureState(n2 - 1, d, std::move(encoded)), resource};
}

QssRecovery qss_decode(const QssShares& shares,
                       const std::vector<int>& recovery_window, double tol) {
  const int n = shares.n_half;
  const int n2 = 2 * n;
  const int d = shares.d;
  const int a = shares.distributor_site;

  std::vector<char> in_window(n2, 0);
  for (const int site : recovery_window) {
    if (site < 0 || site >= n2) {
      throw std::invalid_argument("recovery site out of range");
    }
    if (site == a) {
      throw std::invalid_argument("distributor site cannot be a recovery player");
    }
    if (in_window[site]++) {
      throw std::invalid_argument("repeated site in recovery window");
    }
  }
  if (static_cast<int>(recovery_window.size()) < n) {
    throw AuthorizationError("recovery window has fewer than n players");
  }

  // The window must be one arc of the player ring (the resource ring with
  // the distributor excised).
  int transitions = 0;
  for (int t = 1; t <= n2 - 1; ++t) {
    const int site = (a + t) % n2;
    const int prev = (a + (t == 1 ? n2 - 1 : t - 1)) % n2;
    if (in_window[site] && !in_window[prev]) ++transitions;
  }
  if (transitions > 1) {
    throw AuthorizationError("recovery window is not connected on the player ring");
  }

  // Leftmost authorized sub-arc, scanning clockwise from the distributor.
  int sub_start = -1;
  for (int t = 1; t <= n2 - 1 && sub_start < 0; ++t) {
    const int start = (a + t) % n2;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int site = (start + i) % n2;
      ok = site != a && in_window[site];
    }
    if (ok) sub_start = start;
  }
  if (sub_start < 0) {
    throw AuthorizationError(
        "recovery window contains no connected run of n players");
  }

  std::vector<int> sub_window(n);
  for (int i = 0; i < n; ++i) sub_window[i] = (sub_start + i) % n2;

  // Complementary half window; it contains the distributor by construction.
  const Partition p = cyclic_window(n2, (sub_start + n) % n2, n);
  const TransferUnitary tu = extract_transfer_unitary(shares.resource, p, tol);

  std::vector<int> enc_sites;
  for (const int site : p.complement) {
    enc_sites.push_back(encoded_site_index(shares, site));
  }
  const PureState decoded =
      apply_local_unitary(shares.encoded, enc_sites, tu.u.adjoint());

  // The distributor's window position tells which complement site inherits
  // the secret once the transfer unitary is undone.
  int slot = -1;
  for (int t = 0; t < n; ++t) {
    if (p.window[t] == a) slot = t;
  }
  const int landing = p.complement[slot];
  const int enc_landing = encoded_site_index(shares, landing);

  // Reduced state of the landing qudit, by direct contraction over the rest.
  const int enc_sites_total = n2 - 1;
  ComplexMatrix m = ComplexMatrix::Zero(d, pow_index(d, enc_sites_total - 1));
  for (Index idx = 0; idx < decoded.size(); ++idx) {
    const std::vector<int> digits = unpack_digits(enc_sites_total, d, idx);
    Index rest = 0;
    for (int site = 0; site < enc_sites_total; ++site) {
      if (site != enc_landing) rest = rest * d + digits[site];
    }
    m(digits[enc_landing], rest) = decoded.amp(idx);
  }
  const ComplexMatrix rho = m * m.adjoint();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigensolver failed on the recovery density matrix");
  }
  const double purity = solver.eigenvalues()(d - 1);
  ComplexVector recovered = solver.eigenvectors().col(d - 1);
  for (Index i = 0; i < recovered.size(); ++i) {
    if (std::abs(recovered(i)) > kAmpThreshold) {
      recovered *= std::conj(recovered(i) / std::abs(recovered(i)));
      break;
    }
  }
  return QssRecovery{std::move(recovered), purity, landing, std::move(sub_window)};
}

std::vector<std::vector<int>> unauthorized_arcs(int n_half, int distributor_site) {
  const int n2 = 2 * n_half;
  if (n_half < 1) throw std::invalid_argument("half count must be at least 1");
  if (distributor_site < 0 || distributor_site >= n2) {
    throw std::invalid_argument("distributor site out of range");
  }
  std::vector<std::vector<int>> arcs;
  for (int size = 1; size <= n_half - 1; ++size) {
    for (int pos = 0; pos < n2 - 1; ++pos) {
      std::vector<int> arc(size);
      for (int i = 0; i < size; ++i) {
        arc[i] = (distributor_site + 1 + (pos + i) % (n2 - 1)) % n2;
      }
      std::vector<int> with_distributor = arc;
      with_distributor.push_back(distributor_site);
      if (minimal_arc_span(n2, with_distributor) <= n_half) {
        arcs.push_back(std::move(arc));
      }
    }
  }
  return arcs;
}

VerificationReport security_report(const QssShares& shares, double tol) {
  VerificationReport report;
  report.tolerance = tol;
  report.overall_pass = true;
  for (const std::vector<int>& arc :
       unauthorized_arcs(shares.n_half, shares.distributor_site)) {
    std::vector<int> enc_arc;
    for (const int site : arc) enc_arc.push_back(encoded_site_index(shares, site));
    const SubsetPartition sp = subset_partition(shares.encoded.sites(), enc_arc);
    const CheckVerdict verdict =
        is_maximally_mixed(reduced_density(shares.encoded, sp), tol);
    std::string where = "arc[";
    for (size_t i = 0; i < arc.size(); ++i) {
      if (i) where += ',';
      where += std::to_string(arc[i]);
    }
    where += ']';
    report.checks.push_back({std::move(where), verdict.deviation, verdict.pass});
    report.overall_pass = report.overall_pass && verdict.pass;
  }
  return report;
}

}  // namespace pme
