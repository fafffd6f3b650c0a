#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "lattice_euclid/matrix.hpp"

namespace lattice_euclid::io {

/// Malformed matrix text. `line` is 1-based; 0 means "no particular line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

// Text format:
//   n m
//   n lines of m decimal integers
// Lines starting with '#' and blank lines are ignored anywhere. A matrix with
// m = 0 has no data lines at all.

IntMat parse_matrix(std::istream& in);
IntMat parse_matrix_string(const std::string& text);
IntMat read_matrix_file(const std::string& path);

void print_matrix(std::ostream& out, const IntMat& M);
std::string format_matrix(const IntMat& M);

/// Rational matrix as an integer numerator matrix followed by one line with
/// the common denominator.
void print_scaled_matrix(std::ostream& out, const RatMat& M);

}  // namespace lattice_euclid::io
