#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lattice_euclid/exact_linalg.hpp"
#include "lattice_euclid/extensions.hpp"
#include "lattice_euclid/oracle.hpp"
#include "matrix_io.hpp"
#include "stats.hpp"

namespace lattice_euclid::cli {
namespace {

bool trace_enabled() {
    const char* level = std::getenv("LATTICE_EUCLID_LOG");
    return level != nullptr && std::string(level) == "trace";
}

RunOptions trace_options(std::ostream& err) {
    RunOptions options;
    if (trace_enabled()) {
        options.on_exchange = [&err](const StepView& view) {
            const auto& r = view.record;
            err << "step " << r.step << ": i=" << r.pivot_row + 1 << " j=" << r.source + 1
                << " factor=" << r.factor.get_str() << " det=" << r.det_after.get_str() << '\n';
        };
    }
    return options;
}

// initial_basis * Y = basis, solved on the pivot rows.
RatMat transform_of(const BasisResult& result) {
    if (result.transform) return *result.transform;
    const auto rows = std::span<const std::size_t>(result.pivot_rows);
    return solve_system(select_rows(result.initial_basis, rows), select_rows(result.basis, rows));
}

struct BasisArgs {
    std::string variant = "basic";
    std::string file;
    std::string stats_path;
    bool emit_transform = false;
};

int cmd_basis(const BasisArgs& args, std::ostream& out, std::ostream& err) {
    const Variant variant = parse_variant(args.variant);
    const IntMat A = io::read_matrix_file(args.file);
    const BasisResult result = run_variant(variant, A, trace_options(err));
    io::print_matrix(out, result.basis);
    if (args.emit_transform) io::print_scaled_matrix(out, transform_of(result));
    if (!args.stats_path.empty()) {
        std::ofstream stats(args.stats_path);
        if (!stats) throw io::ParseError(0, "cannot write '" + args.stats_path + "'");
        stats << stats_to_json(collect_stats(variant, A, result)).dump(2) << '\n';
    }
    return kOk;
}

int cmd_det(const std::string& file, std::ostream& out, std::ostream& err) {
    const IntMat B = io::read_matrix_file(file);
    if (!B.is_square()) {
        err << "error: det needs a square matrix, got " << B.rows() << "x" << B.cols() << '\n';
        return kInputError;
    }
    const DeterminantRun run = lattice_determinant_run(B);
    if (trace_enabled()) {
        for (const auto& r : run.trace)
            err << "step " << r.step << ": i=" << r.pivot_row + 1 << " j=" << r.source + 1
                << " factor=" << r.factor.get_str() << " det=" << r.det_after.get_str() << '\n';
    }
    out << run.det.get_str() << '\n';
    return kOk;
}

int cmd_dioph(const std::string& file, const std::string& rhs_file, std::ostream& out,
              std::ostream& err) {
    const IntMat A = io::read_matrix_file(file);
    const IntMat b = io::read_matrix_file(rhs_file);
    if (b.cols() != 1 || b.rows() != A.rows()) {
        err << "error: right-hand side must be " << A.rows() << "x1, got " << b.rows() << "x"
            << b.cols() << '\n';
        return kInputError;
    }
    std::optional<IntVec> x;
    try {
        x = diophantine_solve(A, b.col(0), trace_options(err));
    } catch (const SpanMismatch&) {
        err << "note: right-hand side is outside the rational column span\n";
    }
    if (!x) {
        out << "INFEASIBLE\n";
        return kNegative;
    }
    io::print_matrix(out, IntMat::from_columns(A.cols(), {*x}));
    return kOk;
}

int cmd_check(const std::string& f1, const std::string& f2, std::ostream& out, std::ostream& err) {
    const IntMat A1 = io::read_matrix_file(f1);
    const IntMat A2 = io::read_matrix_file(f2);
    if (A1.rows() != A2.rows()) {
        err << "error: row counts differ (" << A1.rows() << " vs " << A2.rows() << ")\n";
        return kInputError;
    }
    const bool equal = lattice_equal(A1, A2);
    out << (equal ? "EQUAL" : "NOT EQUAL") << '\n';
    return equal ? kOk : kNegative;
}

struct BenchArgs {
    InstanceParams params;
    std::size_t trials = 10;
    std::size_t jobs = 1;
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    // Each trial is independent and seeded by seed + trial; rows are printed
    // in trial order whatever the thread count.
    std::vector<std::string> rows(args.trials);
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto run_trials = [&] {
        for (std::size_t t = next++; t < args.trials; t = next++) {
            InstanceParams p = args.params;
            p.seed = args.params.seed + t;
            const IntMat A = random_instance(p);
            std::string block;
            for (auto v : all_variants()) {
                const auto start = std::chrono::steady_clock::now();
                const BasisResult result = run_variant(v, A);
                const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - start);
                block += csv_row(t, p.seed, collect_stats(v, A, result, elapsed)) + '\n';
            }
            rows[t] = std::move(block);
        }
    };
    auto worker = [&] {
        try {
            run_trials();
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(args.jobs, args.trials));
    std::vector<std::jthread> pool;
    for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
    worker();
    pool.clear();
    if (failure) std::rethrow_exception(failure);

    out << csv_header() << '\n';
    for (const auto& r : rows) out << r;
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice bases from integer generators by a generalized Euclidean algorithm"};
    app.require_subcommand(1);

    BasisArgs basis_args;
    auto* basis = app.add_subcommand("basis", "Compute a basis of the lattice spanned by the columns of FILE");
    basis->add_option("--alg", basis_args.variant, "Variant")
        ->check(CLI::IsMember({"basic", "inverse", "solution", "rowwise"}));
    basis->add_option("FILE", basis_args.file, "Generator matrix")->required();
    basis->add_option("--stats-json", basis_args.stats_path, "Write run statistics as JSON to PATH");
    basis->add_flag("--emit-transform", basis_args.emit_transform,
                    "Also print Y (initial basis * Y = basis) as numerators plus a denominator line");

    std::string det_file;
    auto* det = app.add_subcommand("det", "Determinant of a square matrix via the exchange factors");
    det->add_option("FILE", det_file)->required();

    std::string dioph_file, dioph_rhs;
    auto* dioph = app.add_subcommand(
        "dioph",
        "Integral solution of A x = b; keeping the transform U costs an extra factor of about m "
        "per exchange over plain basis computation");
    dioph->add_option("FILE", dioph_file)->required();
    dioph->add_option("RHSFILE", dioph_rhs, "n x 1 right-hand side")->required();

    std::string hnf_file;
    auto* hnf_cmd = app.add_subcommand("hnf", "Column-style Hermite normal form (reference oracle)");
    hnf_cmd->add_option("FILE", hnf_file)->required();

    InstanceParams gen_params;
    auto* gen = app.add_subcommand("gen", "Print a seeded random instance");
    gen->add_option("--n", gen_params.n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--m", gen_params.m)->required();
    gen->add_option("--bound", gen_params.bound)->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_params.seed)->required();
    gen->add_flag("--rank-full", gen_params.rank_full);

    std::string check_a, check_b;
    auto* check = app.add_subcommand("check", "Print EQUAL when both files generate the same lattice");
    check->add_option("FILE1", check_a)->required();
    check->add_option("FILE2", check_b)->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "CSV of run statistics for every variant on random instances");
    bench->add_option("--seed", bench_args.params.seed)->required();
    bench->add_option("--trials", bench_args.trials)->required();
    bench->add_option("--n", bench_args.params.n)->required()->check(CLI::PositiveNumber);
    bench->add_option("--m", bench_args.params.m)->required();
    bench->add_option("--bound", bench_args.params.bound)->required()->check(CLI::PositiveNumber);
    bench->add_flag("--rank-full", bench_args.params.rank_full);
    bench->add_option("--jobs", bench_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*basis) return cmd_basis(basis_args, out, err);
        if (*det) return cmd_det(det_file, out, err);
        if (*dioph) return cmd_dioph(dioph_file, dioph_rhs, out, err);
        if (*hnf_cmd) {
            io::print_matrix(out, hnf(io::read_matrix_file(hnf_file)));
            return kOk;
        }
        if (*gen) {
            io::print_matrix(out, random_instance(gen_params));
            return kOk;
        }
        if (*check) return cmd_check(check_a, check_b, out, err);
        if (*bench) return cmd_bench(bench_args, out);
    } catch (const io::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ExhaustedRetries& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const LatticeError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kInputError;
}

}  // namespace lattice_euclid::cli
