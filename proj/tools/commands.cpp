#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "bench.hpp"
#include "tnn/errors.hpp"
#include "tnn/io.hpp"
#include "tnn/lacunary.hpp"
#include "tnn/limits.hpp"
#include "tnn/minors.hpp"
#include "tnn/recognition.hpp"
#include "tnn/reduction.hpp"

namespace tnn::cli {

namespace {

using io::Json;

enum class Format { Json, Text };

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

void print_grid(std::ostream& out, const Matrix& m) {
    for (int i = 1; i <= m.rows(); ++i) {
        for (int a = 1; a <= m.cols(); ++a) out << (a > 1 ? " " : "") << m(i, a);
        out << '\n';
    }
}

Json sequence_json(const LacunarySequence& s) {
    Json pts = Json::array();
    for (const GridIndex& g : s.points) pts.push_back({g.row, g.col});
    return pts;
}

std::string sequence_text(const LacunarySequence& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < s.points.size(); ++k) os << (k ? "," : "") << s.points[k];
    os << ')';
    return os.str();
}

int cmd_classify(const std::string& matrix_path, Format fmt, std::ostream& out) {
    const Matrix m = io::read_matrix_file(matrix_path);
    const CellAssignment cell = classify(m);
    if (fmt == Format::Json) {
        emit(out, io::classification_to_json(cell));
    } else {
        out << "tnn: " << (cell.is_tnn ? "yes" : "no") << '\n';
        if (cell.diagram) out << "diagram:\n" << cell.diagram->to_ascii();
        out << "t-matrix:\n";
        print_grid(out, cell.t_matrix);
    }
    return cell.is_tnn ? kExitAffirmative : kExitNegative;
}

int cmd_test(const std::string& matrix_path, const std::string& diagram_path, const std::string& scheme_path,
             Format fmt, std::ostream& out) {
    const Matrix m = io::read_matrix_file(matrix_path);
    const CauchonDiagram c = io::read_diagram_file(diagram_path);
    const CellMinorScheme scheme = scheme_path.empty() ? build_scheme(c) : io::read_scheme_file(scheme_path);
    if (scheme.diagram() != c) {
        throw DomainError("scheme file belongs to a different diagram");
    }
    if (m.rows() != c.rows() || m.cols() != c.cols()) {
        throw DomainError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          " but the diagram is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
    }
    const MembershipReport report = membership_test(m, scheme);
    if (fmt == Format::Json) {
        emit(out, io::report_to_json(report));
    } else {
        for (const BoxCheck& b : report.boxes) {
            out << b.box << ' ' << b.spec << " = " << b.value << " (expected " << to_string(b.expected) << ") "
                << (b.pass ? "ok" : "FAIL") << '\n';
        }
        out << "verdict: " << (report.verdict ? "in cell" : "not in cell") << " (" << report.minors_evaluated
            << " minors)\n";
    }
    return report.verdict ? kExitAffirmative : kExitNegative;
}

int cmd_census(int m, int p, bool det_stats, Format fmt, std::ostream& out) {
    const DiagramCensus c = census(m, p, det_stats);
    if (fmt == Format::Json) {
        Json doc{{"total", c.total_diagrams}};
        if (c.det_vanishing) doc["detVanishing"] = *c.det_vanishing;
        emit(out, doc);
    } else {
        out << "total: " << c.total_diagrams << '\n';
        if (c.det_vanishing) out << "detVanishing: " << *c.det_vanishing << '\n';
    }
    return kExitAffirmative;
}

int cmd_representative(const std::string& diagram_path, const std::optional<std::uint64_t>& seed, Format fmt,
                       std::ostream& out) {
    const CauchonDiagram c = io::read_diagram_file(diagram_path);
    Matrix m;
    if (seed) {
        std::mt19937_64 rng(*seed);
        m = random_representative(c, rng);
    } else {
        m = representative(c);
    }
    if (fmt == Format::Json) {
        emit(out, io::matrix_to_json(m));
    } else {
        print_grid(out, m);
    }
    return kExitAffirmative;
}

int cmd_scheme(const std::string& diagram_path, Format fmt, std::ostream& out) {
    const CellMinorScheme scheme = build_scheme(io::read_diagram_file(diagram_path));
    if (fmt == Format::Json) {
        emit(out, io::scheme_to_json(scheme));
    } else {
        for (const auto& e : scheme.entries()) {
            out << e.box << ' ' << e.spec << ' ' << sequence_text(e.sequence) << ' '
                << (scheme.diagram().is_black(e.box) ? "zero" : "positive") << '\n';
        }
    }
    return kExitAffirmative;
}

int cmd_lacunary(const std::string& diagram_path, int j, int beta, bool all, Format fmt, std::ostream& out) {
    const CauchonDiagram c = io::read_diagram_file(diagram_path);
    std::vector<LacunarySequence> seqs;
    if (all) {
        seqs = all_lacunary_from(c, j, beta);
    } else {
        seqs.push_back(lacunary_from(c, j, beta));
    }
    if (fmt == Format::Json) {
        Json list = Json::array();
        for (const auto& s : seqs) list.push_back({{"sequence", sequence_json(s)}, {"minor", s.minor_spec().to_string()}});
        emit(out, Json{{"box", {j, beta}}, {"sequences", std::move(list)}});
    } else {
        for (const auto& s : seqs) out << sequence_text(s) << ' ' << s.minor_spec() << '\n';
    }
    return kExitAffirmative;
}

int cmd_minors(const std::string& matrix_path, const std::string& kind, Format fmt, std::ostream& out) {
    const Matrix m = io::read_matrix_file(matrix_path);
    std::vector<MinorSpec> specs;
    if (kind == "final") {
        specs = final_minor_specs(m.rows(), m.cols());
    } else if (kind == "initial") {
        specs = initial_minor_specs(m.rows(), m.cols());
    } else {
        require_cells_within(m.rows(), m.cols(), kMaxOracleCells, "minors --kind all");
        specs = all_minor_specs(m.rows(), m.cols());
    }
    Json list = Json::array();
    for (const MinorSpec& s : specs) {
        const Rational v = minor(m, s);
        if (fmt == Format::Json) {
            list.push_back({{"minor", s.to_string()}, {"value", v.to_string()}});
        } else {
            out << s << ' ' << v << '\n';
        }
    }
    if (fmt == Format::Json) emit(out, Json{{"kind", kind}, {"minors", std::move(list)}});
    return kExitAffirmative;
}

int cmd_bench(int n, int trials, std::uint64_t seed, Format fmt, std::ostream& out) {
    const BenchResult r = run_bench(n, trials, seed);
    if (fmt == Format::Json) {
        emit(out, Json{{"n", r.n},
                       {"trials", r.trials},
                       {"countsExact", r.counts_exact},
                       {"scheme", {{"minorsPerTrial", r.scheme_minors_per_trial}, {"seconds", r.scheme_seconds}}},
                       {"allMinors", {{"minorsPerTrial", r.oracle_minors_per_trial}, {"seconds", r.oracle_seconds}}},
                       {"speedup", r.speedup()}});
    } else {
        out << std::left << std::setw(12) << "method" << std::setw(16) << "minors/trial" << "seconds\n";
        out << std::setw(12) << "scheme" << std::setw(16) << r.scheme_minors_per_trial << r.scheme_seconds << '\n';
        out << std::setw(12) << "all-minors" << std::setw(16) << r.oracle_minors_per_trial << r.oracle_seconds << '\n';
        out << "speedup: " << r.speedup() << "x over " << r.trials << " trials at n=" << r.n << '\n';
    }
    return r.counts_exact ? kExitAffirmative : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact recognition of totally nonnegative matrix cells"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string matrix_path;
    std::string diagram_path;
    std::string scheme_path;
    std::string kind = "all";
    int m = 0;
    int p = 0;
    int j = 0;
    int beta = 0;
    int trials = 5;
    std::uint64_t bench_seed = 1;
    std::uint64_t seed = 0;
    bool det_stats = false;
    bool all = false;

    auto* classify_cmd = app.add_subcommand("classify", "Decide total nonnegativity and the cell of a matrix");
    classify_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required();

    auto* test_cmd = app.add_subcommand("test", "Run the m*p-minor membership test for a cell");
    test_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    test_cmd->add_option("diagram", diagram_path, "Diagram ASCII file")->required();
    test_cmd->add_option("--scheme", scheme_path, "Scheme JSON overriding lacunary sequences");

    auto* census_cmd = app.add_subcommand("census", "Count Cauchon diagrams (nonempty cells)");
    census_cmd->add_option("m", m, "Rows")->required()->check(CLI::PositiveNumber);
    census_cmd->add_option("p", p, "Columns")->required()->check(CLI::PositiveNumber);
    census_cmd->add_flag("--det-stats", det_stats, "Also count cells on which the determinant vanishes");

    auto* rep_cmd = app.add_subcommand("representative", "Print a matrix in the cell of a diagram");
    rep_cmd->add_option("diagram", diagram_path, "Diagram ASCII file")->required();
    auto* seed_opt = rep_cmd->add_option("--random-seed", seed, "Random positive t-values from this seed");

    auto* scheme_cmd = app.add_subcommand("scheme", "Print the default minor scheme of a diagram");
    scheme_cmd->add_option("diagram", diagram_path, "Diagram ASCII file")->required();

    auto* lac_cmd = app.add_subcommand("lacunary", "Lacunary sequences starting at a box");
    lac_cmd->add_option("diagram", diagram_path, "Diagram ASCII file")->required();
    lac_cmd->add_option("row", j, "Row of the starting box")->required();
    lac_cmd->add_option("col", beta, "Column of the starting box")->required();
    lac_cmd->add_flag("--all", all, "List every lacunary sequence from the box");

    auto* minors_cmd = app.add_subcommand("minors", "Evaluate minors of a matrix");
    minors_cmd->add_option("matrix", matrix_path, "Matrix JSON file")->required();
    minors_cmd->add_option("--kind", kind, "Which minors")->check(CLI::IsMember({"all", "final", "initial"}));

    auto* bench_cmd = app.add_subcommand("bench", "Time the m*p-minor test against all minors");
    bench_cmd->add_option("n", m, "Matrix size")->required()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--trials", trials, "Random cell representatives")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "Random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitAffirmative;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitAffirmative;
    } catch (const CLI::ParseError& e) {
        err << "tnn: " << e.what() << '\n';
        return kExitInputError;
    }

    const Format fmt = format == "text" ? Format::Text : Format::Json;
    try {
        if (classify_cmd->parsed()) return cmd_classify(matrix_path, fmt, out);
        if (test_cmd->parsed()) return cmd_test(matrix_path, diagram_path, scheme_path, fmt, out);
        if (census_cmd->parsed()) return cmd_census(m, p, det_stats, fmt, out);
        if (rep_cmd->parsed()) {
            std::optional<std::uint64_t> s;
            if (seed_opt->count() > 0) s = seed;
            return cmd_representative(diagram_path, s, fmt, out);
        }
        if (scheme_cmd->parsed()) return cmd_scheme(diagram_path, fmt, out);
        if (lac_cmd->parsed()) return cmd_lacunary(diagram_path, j, beta, all, fmt, out);
        if (minors_cmd->parsed()) return cmd_minors(matrix_path, kind, fmt, out);
        if (bench_cmd->parsed()) return cmd_bench(m, trials, bench_seed, fmt, out);
    } catch (const InternalInconsistency& e) {
        err << "tnn: internal inconsistency: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "tnn: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace tnn::cli
