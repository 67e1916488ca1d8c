#include "pme/state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "pme/errors.hpp"

namespace pme {

namespace {

// Dense vectors are capped near 2^40 entries; anything bigger is a mistake.
constexpr Index kMaxDenseSize = Index{1} << 40;

}  // namespace

Index pow_index(int dim, int exp) {
  if (dim < 1 || exp < 0) {
    throw std::invalid_argument("pow_index requires dim >= 1 and exp >= 0");
  }
  Index out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kMaxDenseSize / dim) {
      throw ResourceError("dimension overflows the dense representation");
    }
    out *= dim;
  }
  return out;
}

Index pack_digits(int sites, int dim, const std::vector<int>& digits) {
  if (static_cast<int>(digits.size()) != sites) {
    throw std::invalid_argument("digit count must equal the site count");
  }
  Index index = 0;
  for (int s = 0; s < sites; ++s) {
    const int g = digits[s];
    if (g < 0 || g >= dim) {
      throw std::invalid_argument("digit out of range for local dimension");
    }
    index = index * dim + g;
  }
  return index;
}

std::vector<int> unpack_digits(int sites, int dim, Index index) {
  if (index < 0 || index >= pow_index(dim, sites)) {
    throw std::invalid_argument("basis index out of range");
  }
  std::vector<int> digits(sites);
  for (int s = sites - 1; s >= 0; --s) {
    digits[s] = static_cast<int>(index % dim);
    index /= dim;
  }
  return digits;
}

PureState::PureState(int sites, int dim, ComplexVector amps)
    : sites_(sites), dim_(dim), amps_(std::move(amps)) {
  if (sites_ < 1) throw std::invalid_argument("state needs at least one site");
  if (dim_ < 2) throw std::invalid_argument("local dimension must be at least 2");
  if (amps_.size() != pow_index(dim_, sites_)) {
    throw std::invalid_argument("amplitude vector length must be dim^sites");
  }
}

Complex PureState::amp(Index index) const {
  if (index < 0 || index >= amps_.size()) {
    throw std::invalid_argument("basis index out of range");
  }
  return amps_(index);
}

PureState basis_state(int sites, int dim, const std::vector<int>& digits) {
  ComplexVector amps = ComplexVector::Zero(pow_index(dim, sites));
  amps(pack_digits(sites, dim, digits)) = 1.0;
  return PureState(sites, dim, std::move(amps));
}

PureState tensor_product(const PureState& a, const PureState& b) {
  if (a.local_dim() != b.local_dim()) {
    throw std::invalid_argument("tensor factors must share a local dimension");
  }
  const Index bsize = b.size();
  ComplexVector amps(a.size() * bsize);
  for (Index i = 0; i < a.size(); ++i) {
    amps.segment(i * bsize, bsize) = a.amp(i) * b.amps();
  }
  return PureState(a.sites() + b.sites(), a.local_dim(), std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.sites() != b.sites() || a.local_dim() != b.local_dim()) {
    throw std::invalid_argument("inner product requires matching shapes");
  }
  return a.amps().dot(b.amps());  // Eigen dot conjugates the left factor
}

double fidelity(const PureState& a, const PureState& b) {
  const double na2 = a.amps().squaredNorm();
  const double nb2 = b.amps().squaredNorm();
  if (na2 == 0.0 || nb2 == 0.0) {
    throw std::invalid_argument("fidelity of a zero state is undefined");
  }
  const Complex ip = inner_product(a, b);
  return std::norm(ip) / (na2 * nb2);
}

PureState apply_local_unitary(const PureState& s, const std::vector<int>& sites,
                              const ComplexMatrix& u) {
  const int n = s.sites();
  const int d = s.local_dim();
  const int m = static_cast<int>(sites.size());
  if (m == 0) throw std::invalid_argument("no sites given");
  std::vector<char> listed(n, 0);
  for (const int site : sites) {
    if (site < 0 || site >= n) throw std::invalid_argument("site index out of range");
    if (listed[site]++) throw std::invalid_argument("repeated site in unitary application");
  }
  const Index sub_dim = pow_index(d, m);
  if (u.rows() != sub_dim || u.cols() != sub_dim) {
    throw std::invalid_argument("unitary must be dim^k x dim^k for k listed sites");
  }
  if (unitarity_deviation(u) > kUnitaryTol) {
    throw std::invalid_argument("matrix is not unitary within tolerance");
  }

  // Offset of each sub-pattern within the full index, listed order as digits.
  const auto pattern_offsets = [d](const std::vector<Index>& strides) {
    Index count = 1;
    for (size_t i = 0; i < strides.size(); ++i) count *= d;
    std::vector<Index> offsets(count, 0);
    for (Index p = 0; p < count; ++p) {
      Index rest = p;
      for (int t = static_cast<int>(strides.size()) - 1; t >= 0; --t) {
        offsets[p] += (rest % d) * strides[t];
        rest /= d;
      }
    }
    return offsets;
  };

  std::vector<Index> sub_strides(m);
  for (int t = 0; t < m; ++t) sub_strides[t] = pow_index(d, n - 1 - sites[t]);
  std::vector<int> rest_sites;
  for (int site = 0; site < n; ++site) {
    if (!listed[site]) rest_sites.push_back(site);
  }
  std::vector<Index> rest_strides(rest_sites.size());
  for (size_t t = 0; t < rest_sites.size(); ++t) {
    rest_strides[t] = pow_index(d, n - 1 - rest_sites[t]);
  }

  const std::vector<Index> sub_offsets = pattern_offsets(sub_strides);
  const std::vector<Index> rest_offsets = pattern_offsets(rest_strides);

  ComplexVector out(s.size());
  ComplexVector block(sub_dim);
  for (const Index base : rest_offsets) {
    for (Index a = 0; a < sub_dim; ++a) block(a) = s.amps()(base + sub_offsets[a]);
    const ComplexVector mapped = u * block;
    for (Index b = 0; b < sub_dim; ++b) out(base + sub_offsets[b]) = mapped(b);
  }
  return PureState(n, d, std::move(out));
}

PureState global_phase_canonical(const PureState& s) {
  for (Index i = 0; i < s.size(); ++i) {
    const Complex a = s.amp(i);
    if (std::abs(a) > kAmpThreshold) {
      const Complex phase = a / std::abs(a);
      return PureState(s.sites(), s.local_dim(), s.amps() * std::conj(phase));
    }
  }
  throw std::invalid_argument("cannot fix the phase of a zero state");
}

double unitarity_deviation(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return unitarity_deviation(u) <= tol;
}

}  // namespace pme
