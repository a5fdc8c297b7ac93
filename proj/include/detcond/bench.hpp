#pragma once

// Cost and coefficient-growth measurements for the condensation algorithm and
// the oracle methods over a seeded integer corpus.

#include "detcond/matrix.hpp"
#include "detcond/random.hpp"
#include "detcond/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace detcond {

enum class BenchMethod { condensation, bareiss, gauss_rational, cofactor };

BenchMethod parse_bench_method(std::string_view name);
std::string_view to_string(BenchMethod method);

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::size_t trials_per_size = 1;
    std::int64_t entry_bound = 9;
    std::uint64_t seed = 0;
    std::vector<BenchMethod> methods;
    ScalarKind scalar = ScalarKind::integer;  // integer or rational
};

/// Reads a JSON config (see docs/bench.md). Throws std::invalid_argument on
/// unknown keys, bad values, or methods incompatible with the sizes.
BenchConfig parse_bench_config(std::string_view json_text);

/// Throws std::invalid_argument when the config cannot be run.
void validate(const BenchConfig& cfg);

struct CorpusMatrix {
    std::size_t n = 0;
    std::size_t trial = 0;
    Matrix<Integer> matrix;
};

/// One child generator per matrix, split from SplitMix64(seed) in order of
/// (size as listed, trial ascending).
std::vector<CorpusMatrix> generate_corpus(const BenchConfig& cfg);

struct BenchRecord {
    BenchMethod method = BenchMethod::condensation;
    std::size_t n = 0;
    std::size_t trial = 0;
    ScalarKind scalar_kind = ScalarKind::integer;
    std::uint64_t wall_time_ns = 0;
    std::uint64_t multiplications = 0;  // including pivot-power products
    std::uint64_t subtractions = 0;
    std::uint64_t divisions = 0;
    // Largest entry bit length of each condensed matrix, in execution order.
    // Filled for Integer condensation runs only.
    std::vector<std::size_t> max_bit_length_per_level;
    std::string result_digest;
};

/// Runs every method on every corpus matrix. Throws MethodDisagreement when
/// two methods return different values for the same matrix.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Comma-separated report with header
///   method,n,trial,scalar_kind,wall_ns,mults,subs,divs,max_bits_level_1..K,digest
/// where K is the largest level count among the records.
std::string format_report(const std::vector<BenchRecord>& records);

/// Parses a report produced by format_report(), checking it against the
/// documented column layout. Throws ParseError on any deviation.
std::vector<BenchRecord> parse_report(std::string_view text);

struct GrowthRow {
    std::size_t n = 0;
    std::size_t level = 0;
    std::size_t median_bits = 0;  // lower median over trials
};

/// Per-size, per-level median of max_bit_length_per_level over Integer
/// condensation records. Throws std::invalid_argument when there are none.
std::vector<GrowthRow> growth_report(const std::vector<BenchRecord>& records);

/// "n,level,median_bits" rows with that header.
std::string format_growth(const std::vector<GrowthRow>& rows);

struct BareissGrowth {
    std::vector<std::size_t> stage_max_bits;  // one entry per elimination stage
    double hadamard_bits = 0.0;               // log2 of the Hadamard bound
};

/// Max entry bit length after each Bareiss stage and log2 of
/// prod_i max(1, ||row_i||_2), which bounds every minor of the matrix.
BareissGrowth bareiss_growth(const Matrix<Integer>& m);

}  // namespace detcond
