#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lattice_euclid/matrix.hpp"
#include "lattice_euclid/oracle.hpp"

namespace test_helpers {

using namespace lattice_euclid;

inline IntMat mat(const std::vector<std::vector<Int>>& rows) { return IntMat::from_rows(rows); }

inline IntVec vec(const std::vector<Int>& v) { return v; }

inline Rat q(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline IntMat random_matrix(std::size_t n, std::size_t m, std::int64_t bound, std::uint64_t seed,
                            bool rank_full = false) {
    return random_instance(InstanceParams{n, m, bound, rank_full, seed});
}

/// Nonsingular square matrix drawn with the instance generator.
inline IntMat random_nonsingular(std::size_t n, std::int64_t bound, std::uint64_t seed) {
    return random_matrix(n, n, bound, seed, true);
}

inline IntVec random_vector(std::size_t n, std::int64_t bound, std::mt19937_64& gen) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntVec v(n);
    for (auto& a : v) a = dist(gen);
    return v;
}

inline bool canonical(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_num() == r.get_num() && c.get_den() == r.get_den() && r.get_den() > 0;
}

}  // namespace test_helpers
