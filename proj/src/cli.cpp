#include "detcond/cli.hpp"

#include "detcond/bench.hpp"
#include "detcond/condense.hpp"
#include "detcond/error.hpp"
#include "detcond/matrix_io.hpp"
#include "detcond/oracle.hpp"
#include "detcond/random.hpp"
#include "detcond/trace_io.hpp"
#include "detcond/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace detcond {

namespace {

struct DetOptions {
    std::string file;
    std::string method = "condense";
    std::string scalar = "rational";
    std::string pivot = "first-nonzero";
    std::string trace_path;
    bool counts = false;
};

struct VerifyOptions {
    std::string file;
    std::string scalar = "rational";
    double tolerance = 1e-9;
    std::size_t random_order = 0;
    std::uint64_t seed = 0;
    std::int64_t bound = 9;
};

struct BenchOptions {
    std::string config;
    std::string out_path;
    std::string growth_path;
    std::optional<std::uint64_t> seed;
};

template <class F>
int with_scalar_kind(ScalarKind kind, F&& f) {
    switch (kind) {
        case ScalarKind::rational: return f.template operator()<Rational>();
        case ScalarKind::integer: return f.template operator()<Integer>();
        case ScalarKind::floating: return f.template operator()<Float>();
    }
    return exit_internal_error;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot write '" + path + "'");
    file << contents;
    if (!file) throw std::invalid_argument("failed writing '" + path + "'");
}

void print_counts(std::ostream& out, const OpCounts& c) {
    out << "multiplications " << c.multiplications << '\n'
        << "pivot_power_multiplications " << c.pivot_power_multiplications << '\n'
        << "subtractions " << c.subtractions << '\n'
        << "divisions " << c.divisions << '\n';
}

int cmd_det(const DetOptions& opt, std::ostream& out) {
    const auto method = opt.method;
    if (method != "condense" && method != "cofactor" && method != "bareiss" && method != "gauss") {
        throw std::invalid_argument("unknown method '" + method + "' (condense, cofactor, bareiss, gauss)");
    }
    if (!opt.trace_path.empty() && method != "condense") {
        throw std::invalid_argument("--trace is only available with --method condense");
    }
    const auto strategy = parse_pivot_strategy(opt.pivot);
    const auto text = read_matrix_file(opt.file);

    return with_scalar_kind(parse_scalar_kind(opt.scalar), [&]<Scalar S>() {
        const Matrix<S> m = to_matrix<S>(text);
        require_square(m, "det");
        OpCounts counts;
        if (method == "condense") {
            const auto result = det_condensation(m, CondensationOptions{strategy, true});
            out << to_text(result.value) << '\n';
            counts = result.op_counts;
            if (!opt.trace_path.empty()) {
                write_file(opt.trace_path, trace_to_json(m.rows(), strategy, result).dump(2) + "\n");
            }
        } else if (method == "cofactor") {
            out << to_text(det_cofactor(m, &counts)) << '\n';
        } else if (method == "bareiss") {
            out << to_text(det_bareiss(m, &counts)) << '\n';
        } else {
            if constexpr (S::kind == ScalarKind::floating) {
                throw std::invalid_argument("--method gauss requires an exact scalar kind");
            } else {
                Matrix<Rational> q;
                if constexpr (S::kind == ScalarKind::rational) {
                    q = m;
                } else {
                    q = map_entries(m, [](const S& x) { return Rational(x); });
                }
                out << to_text(det_gauss_rational(q, &counts)) << '\n';
            }
        }
        if (opt.counts) print_counts(out, counts);
        return int{exit_ok};
    });
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    std::optional<TextMatrix> text;
    if (opt.random_order == 0) {
        if (opt.file.empty()) throw std::invalid_argument("verify needs a matrix file or --random N");
        text = read_matrix_file(opt.file);
    }
    return with_scalar_kind(parse_scalar_kind(opt.scalar), [&]<Scalar S>() {
        Matrix<S> m;
        if (text) {
            m = to_matrix<S>(*text);
        } else {
            SplitMix64 rng(opt.seed);
            const auto generated = random_integer_matrix(rng, opt.random_order, opt.bound);
            if constexpr (S::kind == ScalarKind::integer) {
                m = generated;
            } else if constexpr (S::kind == ScalarKind::rational) {
                m = map_entries(generated, [](const Integer& x) { return Rational(x); });
            } else {
                m = map_entries(generated, [](const Integer& x) { return Float(x.value().get_d()); });
            }
            out << "matrix (seed " << opt.seed << "):\n" << format_matrix(m);
        }
        require_square(m, "verify");
        if (m.rows() < 3) throw std::invalid_argument("verify needs a matrix of order at least 3");

        bool all_passed = true;
        for (const auto& report : verify_identities(m, opt.tolerance)) {
            all_passed = all_passed && report.passed();
            out << (report.passed() ? "PASS " : "FAIL ") << report.name << ": " << report.checked << " checked";
            if (report.skipped > 0) out << ", " << report.skipped << " skipped (zero pivot)";
            out << ", worst residual " << report.worst;
            if (!report.passed()) out << ", " << report.failed << " failed, first at " << report.first_failure;
            out << '\n';
        }
        return int{all_passed ? exit_ok : exit_identity_failed};
    });
}

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    std::ifstream in(opt.config, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open bench config '" + opt.config + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    BenchConfig cfg = parse_bench_config(buffer.str());
    if (opt.seed) cfg.seed = *opt.seed;

    const auto records = run_bench(cfg);
    const auto report = format_report(records);
    if (opt.out_path.empty()) {
        out << report;
    } else {
        write_file(opt.out_path, report);
        out << "wrote " << records.size() << " records to " << opt.out_path << '\n';
    }
    if (!opt.growth_path.empty()) write_file(opt.growth_path, format_growth(growth_report(records)));
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinants by first-row condensation, with reference oracles"};
    app.name("detcond");
    app.require_subcommand(1);

    DetOptions det;
    auto* det_cmd = app.add_subcommand("det", "Print the determinant of a matrix file");
    det_cmd->add_option("file", det.file, "Matrix file (plain rows or JSON)")->required();
    det_cmd->add_option("--method", det.method, "condense | cofactor | bareiss | gauss")->capture_default_str();
    det_cmd->add_option("--scalar", det.scalar, "rational | integer | float")->capture_default_str();
    det_cmd->add_option("--pivot", det.pivot, "first-nonzero | max-magnitude")->capture_default_str();
    det_cmd->add_option("--trace", det.trace_path, "Write the condensation trace (JSON) to this path");
    det_cmd->add_flag("--counts", det.counts, "Also print operation counts");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check the condensation identities on a matrix");
    verify_cmd->add_option("file", verify.file, "Matrix file (plain rows or JSON)");
    verify_cmd->add_option("--scalar", verify.scalar, "rational | integer | float")->capture_default_str();
    verify_cmd->add_option("--tolerance", verify.tolerance, "Relative tolerance for float residuals")
        ->capture_default_str();
    verify_cmd->add_option("--random", verify.random_order, "Verify a seeded random integer matrix of this order");
    verify_cmd->add_option("--seed", verify.seed, "Seed for --random")->capture_default_str();
    verify_cmd->add_option("--bound", verify.bound, "Entry bound for --random")->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the benchmark corpus and write the report");
    bench_cmd->add_option("config", bench.config, "Bench config (JSON)")->required();
    bench_cmd->add_option("--out", bench.out_path, "Report path (default: standard output)");
    bench_cmd->add_option("--growth", bench.growth_path, "Also write the growth table to this path");
    bench_cmd->add_option("--seed", bench.seed, "Override the config seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "detcond: " << e.what() << '\n';
        return exit_user_error;
    }

    try {
        if (det_cmd->parsed()) return cmd_det(det, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        return cmd_bench(bench, out);
    } catch (const ParseError& e) {
        err << "detcond: parse error: " << e.what() << '\n';
        return exit_user_error;
    } catch (const InexactDivision& e) {
        err << "detcond: internal error, please report: " << e.what() << '\n';
        return exit_internal_error;
    } catch (const MethodDisagreement& e) {
        err << "detcond: internal error, methods disagree: " << e.what() << '\n';
        return exit_internal_error;
    } catch (const std::invalid_argument& e) {
        err << "detcond: " << e.what() << '\n';
        return exit_user_error;
    } catch (const std::out_of_range& e) {
        err << "detcond: " << e.what() << '\n';
        return exit_user_error;
    } catch (const std::domain_error& e) {
        err << "detcond: " << e.what() << '\n';
        return exit_user_error;
    }
}

}  // namespace detcond
