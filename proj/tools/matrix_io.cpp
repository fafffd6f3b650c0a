#include "matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lattice_euclid/exact_linalg.hpp"

namespace lattice_euclid::io {
namespace {

bool is_blank_or_comment(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

std::size_t parse_size(const std::string& token, std::size_t line) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(line, "expected a non-negative dimension, got '" + token + "'");
    try {
        return std::stoul(token);
    } catch (const std::exception&) {
        throw ParseError(line, "dimension out of range: '" + token + "'");
    }
}

}  // namespace

IntMat parse_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_data_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!is_blank_or_comment(line)) return true;
        }
        return false;
    };

    if (!next_data_line()) throw ParseError(line_no + 1, "missing 'n m' header");
    const auto header = tokens(line);
    if (header.size() != 2) throw ParseError(line_no, "header must be exactly 'n m'");
    const std::size_t n = parse_size(header[0], line_no);
    const std::size_t m = parse_size(header[1], line_no);

    IntMat M(n, m);
    for (std::size_t i = 0; i < n && m > 0; ++i) {
        if (!next_data_line())
            throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, found " +
                                              std::to_string(i));
        const auto row = tokens(line);
        if (row.size() != m)
            throw ParseError(line_no, "expected " + std::to_string(m) + " entries, found " +
                                          std::to_string(row.size()));
        for (std::size_t j = 0; j < m; ++j)
            if (!parse_int(row[j], M(i, j)))
                throw ParseError(line_no, "not an integer: '" + row[j] + "'");
    }
    if (next_data_line()) throw ParseError(line_no, "unexpected data after the last row");
    return M;
}

IntMat parse_matrix_string(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

IntMat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_matrix(in);
}

void print_matrix(std::ostream& out, const IntMat& M) {
    out << M.rows() << ' ' << M.cols() << '\n';
    if (M.cols() == 0) return;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out << ' ';
            out << M(i, j).get_str();
        }
        out << '\n';
    }
}

std::string format_matrix(const IntMat& M) {
    std::ostringstream out;
    print_matrix(out, M);
    return out.str();
}

void print_scaled_matrix(std::ostream& out, const RatMat& M) {
    const Int mu = lcm_denominators(M.entries());
    IntMat numerators(M.rows(), M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (std::size_t i = 0; i < M.rows(); ++i) numerators(i, j) = Rat(M(i, j) * Rat(mu)).get_num();
    print_matrix(out, numerators);
    out << mu.get_str() << '\n';
}

}  // namespace lattice_euclid::io
