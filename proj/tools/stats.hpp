#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "lattice_euclid/euclid_core.hpp"

namespace lattice_euclid::cli {

enum class Variant { basic, inverse, solution, rowwise };

const std::vector<Variant>& all_variants();
std::string variant_name(Variant v);
/// Throws std::invalid_argument for an unknown name.
Variant parse_variant(const std::string& name);
BasisResult run_variant(Variant v, const IntMat& A, const RunOptions& options = {});

struct RunStats {
    std::string variant;
    std::size_t n = 0, m = 0, rank = 0;
    std::size_t exchanges = 0, discards = 0;
    Int det_initial, det_final;
    Int max_abs_entry_output;
    Int coefficient_bound;
    std::vector<Int> det_trajectory;
    std::chrono::microseconds wall_time{0};
};

RunStats collect_stats(Variant v, const IntMat& A, const BasisResult& result,
                       std::chrono::microseconds wall_time = {});

/// JSON object without the wall time, so identical runs give identical text.
nlohmann::json stats_to_json(const RunStats& s);

std::string csv_header();
std::string csv_row(std::size_t trial, std::uint64_t seed, const RunStats& s);

}  // namespace lattice_euclid::cli
