#include "detcond/bench.hpp"
#include "detcond/error.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace detcond;

namespace {

BenchConfig small_config() {
    BenchConfig cfg;
    cfg.sizes = {3, 4};
    cfg.trials_per_size = 1;
    cfg.entry_bound = 9;
    cfg.seed = 7;
    cfg.methods = {BenchMethod::condensation, BenchMethod::bareiss, BenchMethod::cofactor};
    return cfg;
}

}  // namespace

TEST(BenchConfig, Parse) {
    const auto cfg = parse_bench_config(
        R"({"sizes":[3,4],"trials_per_size":2,"entry_bound":5,"seed":11,"methods":["condensation","gauss-rational"]})");
    EXPECT_EQ(cfg.sizes, (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(cfg.trials_per_size, 2u);
    EXPECT_EQ(cfg.entry_bound, 5);
    EXPECT_EQ(cfg.seed, 11u);
    EXPECT_EQ(cfg.methods, (std::vector<BenchMethod>{BenchMethod::condensation, BenchMethod::gauss_rational}));
    EXPECT_EQ(cfg.scalar, ScalarKind::integer);
}

TEST(BenchConfig, Rejections) {
    EXPECT_THROW(parse_bench_config(R"({"sizes":[3],"methods":["condensation"],"colour":1})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config(R"({"sizes":[3],"methods":["lu"]})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config(R"({"sizes":[3],"methods":[]})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config(R"({"sizes":[11],"methods":["cofactor"]})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config(R"({"sizes":[3],"methods":["bareiss"],"scalar":"float"})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config(R"({"sizes":[3],"methods":["bareiss"],"seed":-1})"), std::invalid_argument);
    EXPECT_THROW(parse_bench_config("[1,2"), std::invalid_argument);
}

TEST(Bench, SixRecordsWithMatchingDigests) {
    const auto records = run_bench(small_config());
    ASSERT_EQ(records.size(), 6u);
    std::map<std::size_t, std::string> digest_by_n;
    for (const auto& r : records) {
        auto [it, inserted] = digest_by_n.emplace(r.n, r.result_digest);
        if (!inserted) {
            EXPECT_EQ(it->second, r.result_digest);
        }
        if (r.method == BenchMethod::condensation) {
            EXPECT_EQ(r.max_bit_length_per_level.size(), r.n - 2);
        }
    }
}

TEST(Bench, ZeroTrialsIsEmpty) {
    auto cfg = small_config();
    cfg.trials_per_size = 0;
    const auto records = run_bench(cfg);
    EXPECT_TRUE(records.empty());
    EXPECT_TRUE(parse_report(format_report(records)).empty());
    EXPECT_THROW(growth_report(records), std::invalid_argument);
}

TEST(Bench, CorpusIsReproducible) {
    auto cfg = small_config();
    cfg.sizes = {5, 6};
    cfg.trials_per_size = 4;
    const auto a = generate_corpus(cfg);
    const auto b = generate_corpus(cfg);
    ASSERT_EQ(a.size(), 8u);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].matrix, b[i].matrix);
    cfg.seed += 1;
    EXPECT_NE(generate_corpus(cfg)[0].matrix, a[0].matrix);
}

TEST(Bench, FirstLevelBitsAreSmall) {
    auto cfg = small_config();
    cfg.sizes = {6};
    cfg.trials_per_size = 10;
    cfg.methods = {BenchMethod::condensation};
    for (const auto& r : run_bench(cfg)) {
        // |a11 a_ij - a1j ai1| <= 2 * 81 = 162 < 2^8.
        ASSERT_FALSE(r.max_bit_length_per_level.empty());
        EXPECT_LE(r.max_bit_length_per_level.front(), 8u);
    }
}

TEST(Bench, RationalScalarRuns) {
    auto cfg = small_config();
    cfg.scalar = ScalarKind::rational;
    cfg.methods.push_back(BenchMethod::gauss_rational);
    const auto records = run_bench(cfg);
    EXPECT_EQ(records.size(), 8u);
    for (const auto& r : records) EXPECT_EQ(r.scalar_kind, ScalarKind::rational);
}

TEST(BenchReport, RoundTrip) {
    const auto records = run_bench(small_config());
    const auto text = format_report(records);
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "method,n,trial,scalar_kind,wall_ns,mults,subs,divs,max_bits_level_1,max_bits_level_2,digest");
    const auto parsed = parse_report(text);
    ASSERT_EQ(parsed.size(), records.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        EXPECT_EQ(parsed[i].method, records[i].method);
        EXPECT_EQ(parsed[i].n, records[i].n);
        EXPECT_EQ(parsed[i].multiplications, records[i].multiplications);
        EXPECT_EQ(parsed[i].max_bit_length_per_level, records[i].max_bit_length_per_level);
        EXPECT_EQ(parsed[i].result_digest, records[i].result_digest);
    }
}

TEST(BenchReport, RejectsWrongSchema) {
    EXPECT_THROW(parse_report("method,n,trial\ncondensation,3,0\n"), ParseError);
    EXPECT_THROW(parse_report("method,n,trial,scalar_kind,wall_ns,mults,subs,divs,digest\ncondensation,x,0,integer,1,1,1,1,5\n"),
                 ParseError);
}

TEST(Growth, MediansPerLevel) {
    auto cfg = small_config();
    cfg.sizes = {5};
    cfg.trials_per_size = 5;
    cfg.methods = {BenchMethod::condensation};
    const auto rows = growth_report(run_bench(cfg));
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].n, 5u);
        EXPECT_EQ(rows[i].level, i + 1);
    }
    EXPECT_EQ(format_growth(rows).substr(0, 19), "n,level,median_bits");
}

TEST(Growth, BareissStagesStayUnderHadamard) {
    auto cfg = small_config();
    cfg.sizes = {8};
    cfg.trials_per_size = 5;
    for (const auto& c : generate_corpus(cfg)) {
        const auto g = bareiss_growth(c.matrix);
        EXPECT_GT(g.hadamard_bits, 0.0);
        for (const auto bits : g.stage_max_bits) EXPECT_LE(static_cast<double>(bits), g.hadamard_bits + 1.0);
    }
}
