#include "zres_cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ios>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zres/greedy.hpp"
#include "zres/multihomo.hpp"
#include "zres/subdivision.hpp"

namespace zres::cli {

namespace {

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(xs[k]);
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::uint64_t predicted_size(const Target& target) {
    if (const auto* multi = std::get_if<MultiHomoSystem>(&target.spec)) return predicted_size_multihomo(*multi);
    return predicted_size_zonotope(std::get<ZonotopeSpec>(target.spec).system);
}

std::vector<std::int64_t> mixed_counts(const std::vector<GreedyPoint>& closure, int n) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n + 1), 0);
    for (const auto& g : closure)
        if (g.mixed) ++counts[static_cast<std::size_t>(g.content.poly)];
    return counts;
}

/// Points of B tallied by type function (box type function of the embedded point).
std::map<TypeFunction, std::uint64_t> tally_cells(const Construction& c) {
    std::map<TypeFunction, std::uint64_t> cells;
    c.for_each_point([&](const LatticePoint& b) { ++cells[type_function_of(b, c.box_system())]; });
    return cells;
}

struct CheckLine {
    std::string name;
    enum class State { Pass, Fail, Skip } state = State::Pass;
    std::string detail;
};

void print_check(std::ostream& out, const CheckLine& c) {
    static const char* const labels[] = {"pass", "fail", "skip"};
    out << "check " << c.name << ' ' << labels[static_cast<int>(c.state)];
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
}

}  // namespace

Target make_target(const SystemSpec& spec) {
    if (const auto* multi = std::get_if<MultiHomoSystem>(&spec)) return Target{spec, multihomo_construction(*multi), 1};
    const auto& zono = std::get<ZonotopeSpec>(spec);
    return Target{spec, Construction::zonotope(zono.system), zono.exponent};
}

void check_size_guardrail(const Target& target, bool force) {
    const std::uint64_t size = target.construction.box().size();
    if (size > kMaxLatticePoints && !force)
        throw SpecError(SpecError::Kind::Invalid, "lattice has " + std::to_string(size) + " points, more than " +
                                                      std::to_string(kMaxLatticePoints) + "; pass --force to proceed");
}

int cmd_sizes(const Target& target, std::ostream& out, std::ostream& err) {
    const Construction& c = target.construction;
    const int n = c.rank();
    const auto closure = greedy_closure(c);
    const std::uint64_t b_size = c.point_count();
    const std::uint64_t predicted = predicted_size(target);

    out << "kind=" << (target.multihomogeneous() ? "multihomogeneous" : "zonotope") << " n=" << n << '\n';
    out << "|B|=" << b_size << " |G|=" << closure.size() << '\n';
    out << "predicted=" << predicted << '\n';
    out << "mixed_points=" << join(mixed_counts(closure, n)) << '\n';
    out << "mixed_volumes=" << join(mixed_volumes(c)) << '\n';
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(6)
          << (b_size ? static_cast<double>(closure.size()) / static_cast<double>(b_size) : 0.0);
    out << "ratio=" << ratio.str() << '\n';
    if (target.exponent != 1) out << "exponent=" << target.exponent << " (resultant of the normalized box system to this power)\n";

    if (predicted != closure.size()) {
        err << "internal error: predicted size " << predicted << " differs from closure size " << closure.size() << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int cmd_subdivision(const Target& target, std::ostream& out) {
    const Construction& c = target.construction;
    const ZonotopeSystem& box = c.box_system();
    const int n = c.rank();
    const auto cells = tally_cells(c);

    std::vector<TypeFunction> listed;
    std::optional<Embedding> emb;
    if (const auto* multi = std::get_if<MultiHomoSystem>(&target.spec)) {
        // Every monotone type function is listed, empty ones included.
        emb = embed(*multi).embedding;
        for (const auto& phi : all_type_functions(n))
            if (is_valid_group_typefn(phi, *emb)) listed.push_back(phi);
        out << "coordinates=embedded\n";
    } else {
        for (const auto& [phi, count] : cells) listed.push_back(phi);
    }

    std::uint64_t occupied = 0, mixed = 0, greedy = 0;
    for (const auto& phi : listed) {
        const TypeVector t = type_vector_of(phi, n);
        const auto it = cells.find(phi);
        const std::uint64_t count = it == cells.end() ? 0 : it->second;
        const RowContent rc = row_content_of_cell(phi, box);
        occupied += count > 0;
        mixed += is_mixed(t);
        greedy += is_greedy(t);
        out << "phi=" << to_string(phi) << " t=" << to_string(t) << " points=" << count;
        if (emb) out << " predicted=" << cell_binomial_count(phi, std::get<MultiHomoSystem>(target.spec), *emb);
        out << " mixed=" << yes_no(is_mixed(t)) << " greedy=" << yes_no(is_greedy(t)) << " row=" << rc.poly << ":("
            << rc.vertex.to_string() << ")\n";
    }
    out << "cells=" << listed.size();
    if (emb) out << " occupied=" << occupied;
    out << " mixed=" << mixed << " greedy=" << greedy << '\n';
    return kExitOk;
}

int cmd_matrix(const Target& target, const MatrixOptions& options, std::ostream& out, std::ostream& err) {
    const Construction& c = target.construction;
    const auto points = options.full ? c.points() : points_of(greedy_closure(c));
    SymbolicMatrix m = build_matrix(points, c);
    if (options.principal) m = principal_submatrix(m);

    if (options.out_path.empty()) {
        export_matrix(m, options.format, out);
        return kExitOk;
    }
    std::ofstream file(options.out_path);
    if (!file) {
        err << "IoError: cannot open '" << options.out_path << "' for writing\n";
        return kExitIo;
    }
    export_matrix(m, options.format, file);
    file.flush();
    if (!file) {
        err << "IoError: write to '" << options.out_path << "' failed\n";
        return kExitIo;
    }
    return kExitOk;
}

int cmd_verify(const Target& target, const VerifyOptions& options, std::ostream& out) {
    using State = CheckLine::State;
    const Construction& c = target.construction;
    const int n = c.rank();
    const auto closure = greedy_closure(c);
    const auto closure_points = points_of(closure);
    std::vector<CheckLine> checks;

    out << "closure_size=" << closure.size() << '\n';
    out << "lattice_size=" << c.point_count() << '\n';

    // Cells partition B: the per-cell point counts add up to |B| and match
    // the cell-size formula.
    {
        const auto cells = tally_cells(c);
        std::uint64_t total = 0;
        bool formula_ok = true;
        std::string bad;
        const auto* multi = std::get_if<MultiHomoSystem>(&target.spec);
        std::optional<Embedding> emb;
        if (multi) emb = embed(*multi).embedding;
        for (const auto& [phi, count] : cells) {
            total += count;
            const std::uint64_t expected =
                multi ? (is_valid_group_typefn(phi, *emb) ? cell_binomial_count(phi, *multi, *emb) : 0)
                      : cell_size(phi, c.box_system());
            if (expected != count && formula_ok) {
                formula_ok = false;
                bad = "cell " + to_string(phi) + " holds " + std::to_string(count) + ", expected " +
                      std::to_string(expected);
            }
        }
        if (multi) {
            // Monotone cells that the enumeration never reached must be empty.
            for (const auto& phi : all_type_functions(n))
                if (is_valid_group_typefn(phi, *emb) && !cells.count(phi) &&
                    cell_binomial_count(phi, *multi, *emb) != 0 && formula_ok) {
                    formula_ok = false;
                    bad = "cell " + to_string(phi) + " is empty but predicted nonempty";
                }
        }
        const bool ok = formula_ok && total == c.point_count();
        checks.push_back({"partition", ok ? State::Pass : State::Fail,
                          ok ? std::to_string(cells.size()) + " cells" : bad});
    }

    {
        const bool ok = closure_points == greedy_predicate_set(c);
        checks.push_back({"closure_equals_predicate", ok ? State::Pass : State::Fail, ""});
    }
    {
        const std::uint64_t predicted = predicted_size(target);
        const bool ok = predicted == closure.size();
        checks.push_back({"predicted_equals_closure", ok ? State::Pass : State::Fail,
                          "predicted " + std::to_string(predicted)});
    }
    {
        const auto escape = find_escape(c);
        checks.push_back({"no_escape", escape ? State::Fail : State::Pass,
                          escape ? "(" + escape->first.to_string() + ") reaches (" + escape->second.to_string() + ")"
                                 : ""});
    }
    if (c.point_count() <= options.max_full_points) {
        const SymbolicMatrix full = build_matrix(c.points(), c);
        const std::set<LatticePoint> in_g(closure_points.begin(), closure_points.end());
        std::string bad;
        for (std::size_t r = 0; r < full.size() && bad.empty(); ++r) {
            if (!in_g.count(full.point(r))) continue;
            for (const auto& e : full.row(r))
                if (!in_g.count(full.point(e.col))) {
                    bad = "entry (" + full.point(r).to_string() + ") x (" + full.point(e.col).to_string() + ")";
                    break;
                }
        }
        checks.push_back({"block_triangular", bad.empty() ? State::Pass : State::Fail, bad});
    } else {
        checks.push_back({"block_triangular", State::Skip, "full matrix larger than the limit"});
    }
    {
        const auto counts = mixed_counts(closure, n);
        const auto volumes = mixed_volumes(c);
        const bool ok = counts == volumes;
        checks.push_back({"mixed_volume", ok ? State::Pass : State::Fail,
                          "counts " + join(counts) + " volumes " + join(volumes)});
    }

    const QuotientReport report = verify_quotient(c, options.quotient);
    out << "prime=" << report.prime << " trials=" << report.trials << " seed=" << report.seed << '\n';
    out << "greedy_matrix=" << report.greedy_size << " greedy_principal=" << report.greedy_principal_size << '\n';
    if (report.orientation_sign)
        out << "orientation_sign=" << (report.orientation_sign > 0 ? "+1" : "-1") << '\n';
    for (const auto& tally : report.checks) {
        CheckLine line{tally.name, State::Pass, ""};
        if (tally.skipped) {
            line.state = State::Skip;
            line.detail = tally.skip_reason;
        } else {
            line.state = tally.ok() ? State::Pass : State::Fail;
            line.detail = std::to_string(tally.passed) + "/" + std::to_string(tally.passed + tally.failed);
        }
        checks.push_back(line);
    }
    if (!report.singular_e_seeds.empty())
        out << "singular_e_trials=" << report.singular_e_seeds.size() << '\n';

    nlohmann::ordered_json summary;
    if (const auto* zono = std::get_if<ZonotopeSpec>(&target.spec)) {
        const DegreeAudit audit = degree_audit(zono->system);
        out << "degree_total=" << audit.computed_total;
        if (audit.reference) {
            out << " table=" << *audit.reference << (audit.diverges ? " DIVERGES (table value not adopted)" : " agrees");
            summary["degree"] = {{"computed", audit.computed_total},
                                 {"table", *audit.reference},
                                 {"diverges", audit.diverges}};
        } else {
            summary["degree"] = {{"computed", audit.computed_total}};
        }
        out << '\n';
    }

    for (const auto& check : checks) print_check(out, check);

    bool ok = true;
    nlohmann::ordered_json failed = nlohmann::json::array();
    nlohmann::ordered_json per_check = nlohmann::ordered_json::object();
    for (const auto& check : checks) {
        if (check.state == State::Fail) {
            ok = false;
            failed.push_back(check.name);
        }
        per_check[check.name] = check.state == State::Pass ? "pass" : check.state == State::Fail ? "fail" : "skip";
    }
    nlohmann::ordered_json seeds = nlohmann::ordered_json::object();
    for (const auto& tally : report.checks)
        if (!tally.failing_seeds.empty()) seeds[tally.name] = tally.failing_seeds;

    nlohmann::ordered_json line;
    line["ok"] = ok;
    line["closure_size"] = closure.size();
    line["failed"] = failed;
    line["checks"] = per_check;
    line["failing_seeds"] = seeds;
    line["singular_e_seeds"] = report.singular_e_seeds;
    line["orientation_sign"] = report.orientation_sign;
    for (auto& [key, value] : summary.items()) line[key] = value;
    out << "summary " << line.dump() << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse resultant matrices for zonotope and multihomogeneous systems", "zres"};
    app.require_subcommand(1);

    std::string spec_path;
    bool force = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("spec", spec_path, "System spec file (JSON)")->required();
        sub->add_flag("--force", force, "Allow lattices with more than 10^7 points");
    };

    auto* sizes = app.add_subcommand("sizes", "Lattice, closure and predicted matrix sizes");
    add_common(sizes);
    auto* subdivision = app.add_subcommand("subdivision", "List the cells of the mixed subdivision");
    add_common(subdivision);

    auto* matrix = app.add_subcommand("matrix", "Export the greedy or full matrix");
    add_common(matrix);
    MatrixOptions matrix_options;
    std::string format = "triplet";
    bool greedy_flag = false;
    auto* greedy_opt = matrix->add_flag("--greedy", greedy_flag, "Greedy closure rows (default)");
    matrix->add_flag("--full", matrix_options.full, "All points of B")->excludes(greedy_opt);
    matrix->add_flag("--principal", matrix_options.principal, "Only the principal submatrix E");
    matrix->add_option("--format", format, "triplet or dense")->capture_default_str();
    matrix->add_option("--out", matrix_options.out_path, "Output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Run structural and randomized quotient checks");
    add_common(verify);
    VerifyOptions verify_options;
    auto& q = verify_options.quotient;
    verify->add_option("--prime", q.prime, "Prime modulus below 2^32")->capture_default_str();
    verify->add_option("--trials", q.trials, "Random specializations")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    verify->add_option("--seed", q.seed, "Master seed")->capture_default_str();
    verify->add_option("--threads", q.threads, "Worker threads (0: hardware concurrency)")->capture_default_str();
    verify->add_option("--max-dense", q.max_dense, "Largest matrix given to dense elimination")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitSpecError;
    }

    try {
        const Target target = make_target(load_spec(spec_path));
        check_size_guardrail(target, force);
        if (*sizes) return cmd_sizes(target, out, err);
        if (*subdivision) return cmd_subdivision(target, out);
        if (*matrix) {
            matrix_options.format = parse_export_format(format);
            return cmd_matrix(target, matrix_options, out, err);
        }
        const PrimeField field_check(q.prime);
        return cmd_verify(target, verify_options, out);
    } catch (const SpecError& e) {
        err << e.what() << '\n';
        return kExitSpecError;
    } catch (const std::ios_base::failure& e) {
        err << "IoError: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.kind() == ErrorKind::Internal ? kExitVerifyFailed : kExitSpecError;
    }
}

}  // namespace zres::cli
