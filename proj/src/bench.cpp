#include "detcond/bench.hpp"

#include "detcond/condense.hpp"
#include "detcond/error.hpp"
#include "detcond/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace detcond {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
auto timed(std::uint64_t& elapsed_ns, F&& f) {
    const auto start = Clock::now();
    auto out = f();
    elapsed_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
    return out;
}

void fill_counts(BenchRecord& r, const OpCounts& c) {
    r.multiplications = c.total_multiplications();
    r.subtractions = c.subtractions;
    r.divisions = c.divisions;
}

std::vector<std::size_t> level_bits(const DetResult<Integer>& result) {
    std::vector<std::size_t> bits;
    for (const auto& entry : result.trace) {
        const auto* step = std::get_if<CondensationStep<Integer>>(&entry);
        if (!step) continue;
        std::size_t widest = 0;
        for (const auto& x : step->condensed.entries()) widest = std::max(widest, bit_length(x));
        bits.push_back(widest);
    }
    return bits;
}

template <Scalar S>
BenchRecord run_method(BenchMethod method, const Matrix<S>& m, const CorpusMatrix& source) {
    BenchRecord r;
    r.method = method;
    r.n = source.n;
    r.trial = source.trial;
    r.scalar_kind = S::kind;
    OpCounts counts;
    switch (method) {
        case BenchMethod::condensation: {
            const auto result = timed(r.wall_time_ns, [&] {
                return det_condensation(m, CondensationOptions{PivotStrategy::first_nonzero, false});
            });
            counts = result.op_counts;
            r.result_digest = to_text(result.value);
            if constexpr (S::kind == ScalarKind::integer) {
                // Second, untimed pass with the trace on to measure growth.
                r.max_bit_length_per_level = level_bits(det_condensation(m));
            }
            break;
        }
        case BenchMethod::bareiss:
            r.result_digest = to_text(timed(r.wall_time_ns, [&] { return det_bareiss(m, &counts); }));
            break;
        case BenchMethod::cofactor:
            r.result_digest = to_text(timed(r.wall_time_ns, [&] { return det_cofactor(m, &counts); }));
            break;
        case BenchMethod::gauss_rational: {
            Matrix<Rational> q;
            if constexpr (S::kind == ScalarKind::rational) {
                q = m;
            } else {
                q = map_entries(m, [](const S& x) { return Rational(x); });
            }
            r.result_digest = to_text(timed(r.wall_time_ns, [&] { return det_gauss_rational(q, &counts); }));
            break;
        }
    }
    fill_counts(r, counts);
    return r;
}

std::uint64_t parse_u64(std::string_view s, const char* column, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(std::string("report: column '") + column + "' is not a non-negative integer", line, 0);
    }
    return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

constexpr std::string_view fixed_leading_columns[] = {"method", "n",    "trial", "scalar_kind",
                                                      "wall_ns", "mults", "subs",  "divs"};

}  // namespace

BenchMethod parse_bench_method(std::string_view name) {
    if (name == "condensation") return BenchMethod::condensation;
    if (name == "bareiss") return BenchMethod::bareiss;
    if (name == "gauss-rational") return BenchMethod::gauss_rational;
    if (name == "cofactor") return BenchMethod::cofactor;
    throw std::invalid_argument("unknown bench method '" + std::string(name) + "'");
}

std::string_view to_string(BenchMethod method) {
    switch (method) {
        case BenchMethod::condensation: return "condensation";
        case BenchMethod::bareiss: return "bareiss";
        case BenchMethod::gauss_rational: return "gauss-rational";
        case BenchMethod::cofactor: return "cofactor";
    }
    return "unknown";
}

void validate(const BenchConfig& cfg) {
    if (cfg.entry_bound < 1) throw std::invalid_argument("entry_bound must be positive");
    if (cfg.methods.empty()) throw std::invalid_argument("methods must not be empty");
    if (cfg.scalar == ScalarKind::floating) {
        throw std::invalid_argument("bench runs on exact scalars only (integer or rational)");
    }
    const bool cofactor =
        std::find(cfg.methods.begin(), cfg.methods.end(), BenchMethod::cofactor) != cfg.methods.end();
    for (const auto n : cfg.sizes) {
        if (n == 0) throw std::invalid_argument("sizes must be positive");
        if (cofactor && n > cofactor_max_order) {
            throw std::invalid_argument("cofactor requested for size " + std::to_string(n) + " > " +
                                        std::to_string(cofactor_max_order));
        }
    }
}

BenchConfig parse_bench_config(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bench config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("bench config must be a JSON object");
    static const std::set<std::string> known = {"sizes", "trials_per_size", "entry_bound",
                                                "seed",  "methods",         "scalar"};
    for (const auto& [key, _] : doc.items()) {
        if (!known.contains(key)) throw std::invalid_argument("unknown bench config key '" + key + "'");
    }
    BenchConfig cfg;
    try {
        for (const auto& n : doc.at("sizes")) {
            if (!n.is_number_unsigned()) throw std::invalid_argument("sizes must be positive integers");
            cfg.sizes.push_back(n.get<std::size_t>());
        }
        if (doc.contains("trials_per_size")) {
            if (!doc["trials_per_size"].is_number_unsigned()) {
                throw std::invalid_argument("trials_per_size must be a non-negative integer");
            }
            cfg.trials_per_size = doc["trials_per_size"].get<std::size_t>();
        }
        if (doc.contains("entry_bound")) {
            if (!doc["entry_bound"].is_number_integer()) throw std::invalid_argument("entry_bound must be an integer");
            cfg.entry_bound = doc["entry_bound"].get<std::int64_t>();
        }
        if (doc.contains("seed")) {
            if (!doc["seed"].is_number_unsigned()) throw std::invalid_argument("seed must be a non-negative integer");
            cfg.seed = doc["seed"].get<std::uint64_t>();
        }
        const auto& methods = doc.at("methods");
        if (!methods.is_array()) throw std::invalid_argument("methods must be an array");
        for (const auto& m : methods) {
            if (!m.is_string()) throw std::invalid_argument("methods must be strings");
            cfg.methods.push_back(parse_bench_method(m.get<std::string>()));
        }
        if (doc.contains("scalar")) cfg.scalar = parse_scalar_kind(doc["scalar"].get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bench config: ") + e.what());
    }
    validate(cfg);
    return cfg;
}

std::vector<CorpusMatrix> generate_corpus(const BenchConfig& cfg) {
    SplitMix64 root(cfg.seed);
    std::vector<CorpusMatrix> corpus;
    for (const auto n : cfg.sizes) {
        for (std::size_t trial = 0; trial < cfg.trials_per_size; ++trial) {
            auto child = root.split();
            corpus.push_back({n, trial, random_integer_matrix(child, n, cfg.entry_bound)});
        }
    }
    return corpus;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    validate(cfg);
    std::vector<BenchRecord> records;
    for (const auto& item : generate_corpus(cfg)) {
        const std::size_t first = records.size();
        for (const auto method : cfg.methods) {
            if (cfg.scalar == ScalarKind::integer) {
                records.push_back(run_method(method, item.matrix, item));
            } else {
                const auto q = map_entries(item.matrix, [](const Integer& x) { return Rational(x); });
                records.push_back(run_method(method, q, item));
            }
        }
        for (std::size_t i = first + 1; i < records.size(); ++i) {
            if (records[i].result_digest != records[first].result_digest) {
                throw MethodDisagreement("n=" + std::to_string(item.n) + " trial=" + std::to_string(item.trial) +
                                         ": " + std::string(to_string(records[first].method)) + " gave " +
                                         records[first].result_digest + " but " +
                                         std::string(to_string(records[i].method)) + " gave " +
                                         records[i].result_digest);
            }
        }
    }
    return records;
}

std::string format_report(const std::vector<BenchRecord>& records) {
    std::size_t levels = 0;
    for (const auto& r : records) levels = std::max(levels, r.max_bit_length_per_level.size());

    std::ostringstream out;
    for (const auto column : fixed_leading_columns) out << column << ',';
    for (std::size_t level = 1; level <= levels; ++level) out << "max_bits_level_" << level << ',';
    out << "digest\n";
    for (const auto& r : records) {
        out << to_string(r.method) << ',' << r.n << ',' << r.trial << ',' << to_string(r.scalar_kind) << ','
            << r.wall_time_ns << ',' << r.multiplications << ',' << r.subtractions << ',' << r.divisions << ',';
        for (std::size_t level = 0; level < levels; ++level) {
            if (level < r.max_bit_length_per_level.size()) out << r.max_bit_length_per_level[level];
            out << ',';
        }
        out << r.result_digest << '\n';
    }
    return out.str();
}

std::vector<BenchRecord> parse_report(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.empty()) throw ParseError("report: missing header row");

    const auto header = split_commas(lines.front());
    constexpr std::size_t fixed = std::size(fixed_leading_columns);
    if (header.size() < fixed + 1) throw ParseError("report: header has too few columns", 1, 0);
    for (std::size_t c = 0; c < fixed; ++c) {
        if (header[c] != fixed_leading_columns[c]) {
            throw ParseError("report: expected column '" + std::string(fixed_leading_columns[c]) + "'", 1, c + 1);
        }
    }
    const std::size_t levels = header.size() - fixed - 1;
    for (std::size_t level = 1; level <= levels; ++level) {
        if (header[fixed + level - 1] != "max_bits_level_" + std::to_string(level)) {
            throw ParseError("report: expected column 'max_bits_level_" + std::to_string(level) + "'", 1,
                             fixed + level);
        }
    }
    if (header.back() != "digest") throw ParseError("report: last column must be 'digest'", 1, header.size());

    std::vector<BenchRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        const auto cells = split_commas(lines[i]);
        if (cells.size() != header.size()) {
            throw ParseError("report: row has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(header.size()),
                             line, 0);
        }
        BenchRecord r;
        try {
            r.method = parse_bench_method(cells[0]);
            r.scalar_kind = parse_scalar_kind(cells[3]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("report: ") + e.what(), line, 0);
        }
        r.n = parse_u64(cells[1], "n", line);
        r.trial = parse_u64(cells[2], "trial", line);
        r.wall_time_ns = parse_u64(cells[4], "wall_ns", line);
        r.multiplications = parse_u64(cells[5], "mults", line);
        r.subtractions = parse_u64(cells[6], "subs", line);
        r.divisions = parse_u64(cells[7], "divs", line);
        bool gap = false;
        for (std::size_t level = 0; level < levels; ++level) {
            const auto cell = cells[fixed + level];
            if (cell.empty()) {
                gap = true;
                continue;
            }
            if (gap) throw ParseError("report: level columns must be a contiguous prefix", line, fixed + level + 1);
            r.max_bit_length_per_level.push_back(parse_u64(cell, "max_bits_level", line));
        }
        r.result_digest = std::string(cells.back());
        try {
            (void)Rational::parse(r.result_digest);
        } catch (const ParseError&) {
            throw ParseError("report: digest is not an exact scalar", line, header.size());
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<GrowthRow> growth_report(const std::vector<BenchRecord>& records) {
    std::map<std::size_t, std::map<std::size_t, std::vector<std::size_t>>> samples;
    for (const auto& r : records) {
        if (r.method != BenchMethod::condensation || r.scalar_kind != ScalarKind::integer) continue;
        auto& by_level = samples[r.n];
        for (std::size_t level = 0; level < r.max_bit_length_per_level.size(); ++level) {
            by_level[level + 1].push_back(r.max_bit_length_per_level[level]);
        }
    }
    if (samples.empty()) throw std::invalid_argument("no integer condensation records");

    std::vector<GrowthRow> rows;
    for (auto& [n, by_level] : samples) {
        for (auto& [level, bits] : by_level) {
            if (bits.empty()) continue;
            std::sort(bits.begin(), bits.end());
            rows.push_back({n, level, bits[(bits.size() - 1) / 2]});
        }
    }
    return rows;
}

std::string format_growth(const std::vector<GrowthRow>& rows) {
    std::ostringstream out;
    out << "n,level,median_bits\n";
    for (const auto& r : rows) out << r.n << ',' << r.level << ',' << r.median_bits << '\n';
    return out.str();
}

BareissGrowth bareiss_growth(const Matrix<Integer>& m) {
    BareissGrowth out;
    for (std::size_t i = 1; i <= m.rows(); ++i) {
        mpz_class norm2 = 0;
        for (const auto& x : m.row(i)) norm2 += x.value() * x.value();
        const double squared = std::max(1.0, norm2.get_d());
        out.hadamard_bits += 0.5 * std::log2(squared);
    }
    (void)det_bareiss<Integer>(m, nullptr, [&](const Matrix<Integer>& working, std::size_t) {
        std::size_t widest = 0;
        for (const auto& x : working.entries()) widest = std::max(widest, bit_length(x));
        out.stage_max_bits.push_back(widest);
    });
    return out;
}

}  // namespace detcond
