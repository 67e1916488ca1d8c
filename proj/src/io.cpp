#include "pme/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pme {

namespace {

std::runtime_error parse_error(const std::string& detail) {
  return std::runtime_error("state file: " + detail);
}

// Strips comments and returns the next line with any content.
bool next_content_line(std::istream& is, std::string& line) {
  while (std::getline(is, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string token;
    if (probe >> token) return true;
  }
  return false;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return is;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

}  // namespace

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_state(std::ostream& os, const PureState& s) {
  os << "d " << s.local_dim() << "\n";
  os << "n " << s.sites() << "\n";
  for (Index i = 0; i < s.size(); ++i) {
    const Complex a = s.amp(i);
    if (a == Complex{}) continue;
    os << i << ' ' << format_double(a.real()) << ' ' << format_double(a.imag())
       << "\n";
  }
}

PureState parse_state(std::istream& is) {
  std::string line;
  int dim = 0;
  int sites = 0;
  {
    if (!next_content_line(is, line)) throw parse_error("missing 'd' header");
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key >> dim) || key != "d" || dim < 2) {
      throw parse_error("first header must be 'd <dim>' with dim >= 2");
    }
  }
  {
    if (!next_content_line(is, line)) throw parse_error("missing 'n' header");
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key >> sites) || key != "n" || sites < 1) {
      throw parse_error("second header must be 'n <sites>' with sites >= 1");
    }
  }
  const Index size = pow_index(dim, sites);
  ComplexVector amps = ComplexVector::Zero(size);
  Index previous = -1;
  while (next_content_line(is, line)) {
    std::istringstream ls(line);
    Index index = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> index >> re >> im)) {
      throw parse_error("amplitude lines must read '<index> <re> <im>'");
    }
    std::string extra;
    if (ls >> extra) throw parse_error("trailing token '" + extra + "'");
    if (index < 0 || index >= size) throw parse_error("basis index out of range");
    if (index <= previous) {
      throw parse_error("basis indices must be strictly increasing");
    }
    previous = index;
    amps(index) = Complex{re, im};
  }
  PureState s(sites, dim, std::move(amps));
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw parse_error("state norm " + format_double(s.norm()) +
                      " is outside tolerance of 1");
  }
  return s;
}

void save_state(const std::string& path, const PureState& s) {
  std::ofstream os = open_output(path);
  write_state(os, s);
  if (!os) throw std::runtime_error("failed while writing " + path);
}

PureState load_state(const std::string& path) {
  std::ifstream is = open_input(path);
  return parse_state(is);
}

void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << m.rows() << ' ' << m.cols() << "\n";
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << format_double(m(r, c).real()) << ' ' << format_double(m(r, c).imag());
    }
    os << "\n";
  }
}

ComplexMatrix parse_matrix(std::istream& is) {
  Index rows = 0;
  Index cols = 0;
  if (!(is >> rows >> cols) || rows < 1 || cols < 1) {
    throw std::runtime_error("matrix file: header must be '<rows> <cols>'");
  }
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      double re = 0.0;
      double im = 0.0;
      if (!(is >> re >> im)) {
        throw std::runtime_error("matrix file: too few entries");
      }
      m(r, c) = Complex{re, im};
    }
  }
  return m;
}

void save_matrix(const std::string& path, const ComplexMatrix& m) {
  std::ofstream os = open_output(path);
  write_matrix(os, m);
  if (!os) throw std::runtime_error("failed while writing " + path);
}

ComplexMatrix load_matrix(const std::string& path) {
  std::ifstream is = open_input(path);
  return parse_matrix(is);
}

ComplexVector load_vector(const std::string& path) {
  std::ifstream is = open_input(path);
  std::vector<double> values;
  double v = 0.0;
  while (is >> v) values.push_back(v);
  if (values.empty() || values.size() % 2 != 0) {
    throw std::runtime_error("vector file: expected '<re> <im>' pairs");
  }
  ComplexVector out(values.size() / 2);
  for (size_t i = 0; i < values.size() / 2; ++i) {
    out(static_cast<Index>(i)) = Complex{values[2 * i], values[2 * i + 1]};
  }
  return out;
}

}  // namespace pme
