#include "stats.hpp"

#include <sstream>
#include <stdexcept>

#include "lattice_euclid/euclid_fast.hpp"

namespace lattice_euclid::cli {

const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> variants{Variant::basic, Variant::inverse, Variant::solution,
                                               Variant::rowwise};
    return variants;
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::basic: return "basic";
        case Variant::inverse: return "inverse";
        case Variant::solution: return "solution";
        case Variant::rowwise: return "rowwise";
    }
    return "unknown";
}

Variant parse_variant(const std::string& name) {
    for (auto v : all_variants())
        if (variant_name(v) == name) return v;
    throw std::invalid_argument("unknown variant '" + name + "'");
}

BasisResult run_variant(Variant v, const IntMat& A, const RunOptions& options) {
    switch (v) {
        case Variant::basic: return basic_basis(A, options);
        case Variant::inverse: return inverse_variant_basis(A, options);
        case Variant::solution: return solution_variant_basis(A, options);
        case Variant::rowwise: return rowwise_variant_basis(A, options);
    }
    throw std::invalid_argument("unknown variant");
}

RunStats collect_stats(Variant v, const IntMat& A, const BasisResult& result,
                       std::chrono::microseconds wall_time) {
    RunStats s;
    s.variant = variant_name(v);
    s.n = A.rows();
    s.m = A.cols();
    s.rank = result.rank();
    s.exchanges = result.exchanges;
    s.discards = result.discards;
    s.det_initial = result.det_trajectory.empty() ? Int(1) : result.det_trajectory.front();
    s.det_final = result.det_trajectory.empty() ? Int(1) : result.det_trajectory.back();
    s.max_abs_entry_output = result.max_abs_entry;
    s.coefficient_bound = coefficient_bound(A.rows(), max_abs_entry(A));
    s.det_trajectory = result.det_trajectory;
    s.wall_time = wall_time;
    return s;
}

nlohmann::json stats_to_json(const RunStats& s) {
    nlohmann::json trajectory = nlohmann::json::array();
    for (const auto& d : s.det_trajectory) trajectory.push_back(d.get_str());
    return {
        {"variant", s.variant},
        {"n", s.n},
        {"m", s.m},
        {"rank", s.rank},
        {"exchanges", s.exchanges},
        {"discards", s.discards},
        {"det_initial", s.det_initial.get_str()},
        {"det_final", s.det_final.get_str()},
        {"max_abs_entry_output", s.max_abs_entry_output.get_str()},
        {"coefficient_bound", s.coefficient_bound.get_str()},
        {"det_trajectory", trajectory},
    };
}

std::string csv_header() {
    return "trial,seed,variant,n,m,rank,exchanges,discards,det_initial,det_final,"
           "max_abs_entry_output,coefficient_bound,wall_time_us";
}

std::string csv_row(std::size_t trial, std::uint64_t seed, const RunStats& s) {
    std::ostringstream out;
    out << trial << ',' << seed << ',' << s.variant << ',' << s.n << ',' << s.m << ',' << s.rank
        << ',' << s.exchanges << ',' << s.discards << ',' << s.det_initial.get_str() << ','
        << s.det_final.get_str() << ',' << s.max_abs_entry_output.get_str() << ','
        << s.coefficient_bound.get_str() << ',' << s.wall_time.count();
    return out.str();
}

}  // namespace lattice_euclid::cli
