#include "pme/planar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "pme/errors.hpp"

namespace pme {

namespace {

std::string site_list(const std::vector<int>& sites) {
  std::ostringstream os;
  for (size_t i = 0; i < sites.size(); ++i) {
    if (i) os << ',';
    os << sites[i];
  }
  return os.str();
}

}  // namespace

Partition cyclic_window(int n, int start, int length) {
  if (n < 2) throw std::invalid_argument("ring needs at least 2 sites");
  if (start < 0 || start >= n) throw std::invalid_argument("window start out of range");
  if (length < 1 || length >= n) {
    throw std::invalid_argument("window length must be in [1, n)");
  }
  Partition p;
  p.n = n;
  p.start = start;
  p.length = length;
  std::vector<char> in_window(n, 0);
  for (int i = 0; i < length; ++i) {
    const int site = (start + i) % n;
    p.window.push_back(site);
    in_window[site] = 1;
  }
  for (int site = 0; site < n; ++site) {
    if (!in_window[site]) p.complement.push_back(site);
  }
  return p;
}

SubsetPartition subset_partition(int n, const std::vector<int>& subset) {
  if (n < 2) throw std::invalid_argument("ring needs at least 2 sites");
  if (subset.empty() || static_cast<int>(subset.size()) >= n) {
    throw std::invalid_argument("subset size must be in [1, n)");
  }
  std::vector<char> in_subset(n, 0);
  for (const int site : subset) {
    if (site < 0 || site >= n) throw std::invalid_argument("subset site out of range");
    if (in_subset[site]++) throw std::invalid_argument("repeated site in subset");
  }
  SubsetPartition p;
  p.n = n;
  p.subset = subset;
  for (int site = 0; site < n; ++site) {
    if (!in_subset[site]) p.complement.push_back(site);
  }
  return p;
}

ComplexMatrix coefficient_matrix(const PureState& s,
                                 const std::vector<int>& window,
                                 const std::vector<int>& complement) {
  if (static_cast<int>(window.size() + complement.size()) != s.sites()) {
    throw std::invalid_argument("partition must cover every site exactly once");
  }
  const int d = s.local_dim();
  ComplexMatrix m = ComplexMatrix::Zero(pow_index(d, static_cast<int>(complement.size())),
                                        pow_index(d, static_cast<int>(window.size())));
  for (Index idx = 0; idx < s.size(); ++idx) {
    const std::vector<int> digits = unpack_digits(s.sites(), d, idx);
    Index row = 0;
    for (const int site : complement) row = row * d + digits[site];
    Index col = 0;
    for (const int site : window) col = col * d + digits[site];
    m(row, col) = s.amp(idx);
  }
  return m;
}

ComplexMatrix coefficient_matrix(const PureState& s, const Partition& p) {
  if (p.n != s.sites()) throw std::invalid_argument("partition does not match the state");
  return coefficient_matrix(s, p.window, p.complement);
}

ComplexMatrix coefficient_matrix(const PureState& s, const SubsetPartition& p) {
  if (p.n != s.sites()) throw std::invalid_argument("partition does not match the state");
  return coefficient_matrix(s, p.subset, p.complement);
}

ComplexMatrix reduced_density(const PureState& s, const Partition& p) {
  const ComplexMatrix m = coefficient_matrix(s, p);
  return m.adjoint() * m;
}

ComplexMatrix reduced_density(const PureState& s, const SubsetPartition& p) {
  const ComplexMatrix m = coefficient_matrix(s, p);
  return m.adjoint() * m;
}

CheckVerdict is_maximally_mixed(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("density matrix must be square");
  }
  const double dim = static_cast<double>(rho.rows());
  const ComplexMatrix target = ComplexMatrix::Identity(rho.rows(), rho.rows()) / dim;
  const double deviation = (rho - target).cwiseAbs().maxCoeff();
  return {deviation <= tol, deviation};
}

CheckVerdict is_proportional_isometry(const ComplexMatrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("matrix must be nonempty");
  }
  const ComplexMatrix gram =
      m.rows() >= m.cols() ? (m.adjoint() * m).eval() : (m * m.adjoint()).eval();
  const double dim = static_cast<double>(gram.rows());
  const double scale = gram.trace().real() / dim;
  if (!(scale > 0.0)) {
    return {false, std::numeric_limits<double>::infinity()};
  }
  const ComplexMatrix target = scale * ComplexMatrix::Identity(gram.rows(), gram.rows());
  const double deviation = (gram - target).cwiseAbs().maxCoeff() / scale;
  return {deviation <= tol, deviation};
}

double VerificationReport::max_deviation() const {
  double worst = 0.0;
  for (const PartitionCheck& check : checks) worst = std::max(worst, check.deviation);
  return worst;
}

VerificationReport verify_pme(const PureState& s, double tol) {
  const int n = s.sites();
  if (n < 2) throw std::invalid_argument("PME check needs at least 2 sites");
  VerificationReport report;
  report.tolerance = tol;
  report.overall_pass = true;
  const int length = n / 2;
  for (int start = 0; start < n; ++start) {
    const Partition p = cyclic_window(n, start, length);
    const CheckVerdict verdict = is_maximally_mixed(reduced_density(s, p), tol);
    report.checks.push_back({"window[" + site_list(p.window) + "]",
                             verdict.deviation, verdict.pass});
    report.overall_pass = report.overall_pass && verdict.pass;
  }
  return report;
}

VerificationReport verify_ame(const PureState& s, double tol) {
  const int n = s.sites();
  if (n < 2) throw std::invalid_argument("AME check needs at least 2 sites");
  if (n > 12) throw ResourceError("AME subset enumeration is guarded at n <= 12");
  VerificationReport report;
  report.tolerance = tol;
  report.overall_pass = true;
  const int k = n / 2;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    const SubsetPartition p = subset_partition(n, subset);
    const CheckVerdict verdict = is_maximally_mixed(reduced_density(s, p), tol);
    report.checks.push_back({"subset[" + site_list(subset) + "]",
                             verdict.deviation, verdict.pass});
    report.overall_pass = report.overall_pass && verdict.pass;

    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return report;
}

}  // namespace pme
