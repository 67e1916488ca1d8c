#pragma once

#include <iosfwd>
#include <string>

#include "pme/state.hpp"

namespace pme {

// Formats a double with enough digits to round-trip exactly.
std::string format_double(double value);

// State file: header lines "d <dim>" and "n <sites>", then one line
// "<index> <re> <im>" per nonzero amplitude in increasing index order.
// '#' starts a comment; blank lines are ignored. The loader enforces
// normalization within kNormTol.
void write_state(std::ostream& os, const PureState& s);
PureState parse_state(std::istream& is);

void save_state(const std::string& path, const PureState& s);
PureState load_state(const std::string& path);

// Matrix file: header "<rows> <cols>", then row-major "<re> <im>" pairs.
void write_matrix(std::ostream& os, const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::istream& is);

void save_matrix(const std::string& path, const ComplexMatrix& m);
ComplexMatrix load_matrix(const std::string& path);

// Vector file: whitespace-separated "<re> <im>" pairs, length inferred.
ComplexVector load_vector(const std::string& path);

}  // namespace pme
