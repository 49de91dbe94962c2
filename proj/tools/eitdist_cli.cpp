#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "eitdist/bounds.hpp"
#include "eitdist/eigensolve.hpp"
#include "eitdist/format.hpp"
#include "eitdist/oracle.hpp"

using namespace eitdist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNotConverged = 3;

// Flat table shared by the CSV and JSON writers. Cells are preformatted so
// both formats emit identical 17-significant-digit floats.
struct Table {
    std::string schema;                 // "# eitdist <name> v1"
    std::vector<std::string> comments;  // extra '#' lines (CSV only)
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<bool> quoted; // per column, JSON strings vs raw literals
};

std::string cell(double v) { return fmt17(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(bool v) { return v ? "true" : "false"; }

void write_csv(std::ostream& os, const Table& t) {
    os << t.schema << '\n';
    for (const auto& c : t.comments) os << "# " << c << '\n';
    for (size_t j = 0; j < t.columns.size(); ++j)
        os << t.columns[j] << (j + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (size_t j = 0; j < row.size(); ++j)
            os << row[j] << (j + 1 < row.size() ? "," : "\n");
}

void write_json(std::ostream& os, const Table& t) {
    os << "[";
    for (size_t i = 0; i < t.rows.size(); ++i) {
        os << (i == 0 ? "\n" : ",\n") << "  {";
        for (size_t j = 0; j < t.columns.size(); ++j) {
            if (j > 0) os << ", ";
            os << '"' << t.columns[j] << "\": ";
            bool quote = j < t.quoted.size() && t.quoted[j];
            if (quote) os << '"' << t.rows[i][j] << '"';
            else os << t.rows[i][j];
        }
        os << "}";
    }
    os << "\n]\n";
}

void emit(const Table& t, const std::string& format, const std::string& out) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output path: " + out);
        os = &file;
    }
    if (format == "json") write_json(*os, t);
    else write_csv(*os, t);
}

Complex parse_center(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw std::invalid_argument("cannot parse center: " + text);
    if (is >> comma) {
        if (comma != ',' || !(is >> im))
            throw std::invalid_argument("cannot parse center: " + text);
    }
    std::string rest;
    if (is >> rest) throw std::invalid_argument("cannot parse center: " + text);
    return Complex(re, im);
}

OperatorKind parse_kind(const std::string& kind, bool full = false) {
    if (kind == "dn") return OperatorKind::DnDiff;
    if (kind == "nd") return full ? OperatorKind::NdFull : OperatorKind::NdDiff;
    throw std::invalid_argument("kind must be dn or nd");
}

std::vector<double> parse_grid(const std::string& text) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':')
        throw std::invalid_argument("grid must be start:stop:step");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        double v = start + i * step;
        if (v > stop + step / 2) break;
        grid.push_back(v);
    }
    if (grid.empty()) throw std::invalid_argument("grid is empty");
    return grid;
}

// Shared geometry/solver options.
struct Options {
    std::string center_text = "0";
    double radius = 0.0;
    double contrast = 0.0;
    std::string kind = "dn";
    int top = 5;
    double tol = 1e-12;
    int truncation = 0; // 0 = adaptive up to the default cap
    std::string format = "csv";
    std::string out;
    int threads = 0;
    bool strict = false;
    bool verify = false;

    Complex center() const { return parse_center(center_text); }
    Inclusion inclusion() const { return Inclusion(center(), radius, contrast); }
    int n_max() const { return truncation > 0 ? truncation : 4096; }
    int thread_count() const {
        if (threads > 0) return threads;
        unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }
};

void add_geometry_flags(CLI::App* cmd, Options& opt, bool contrast_required) {
    cmd->add_option("--center", opt.center_text, "Inclusion center, \"re\" or \"re,im\"");
    cmd->add_option("--radius", opt.radius, "Inclusion radius")->required();
    auto* c = cmd->add_option("--contrast", opt.contrast, "Conductivity contrast A");
    if (contrast_required) c->required();
}

void add_solver_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--kind", opt.kind, "Operator kind: dn or nd")
        ->check(CLI::IsMember({"dn", "nd"}));
    cmd->add_option("--tol", opt.tol, "Convergence tolerance");
    cmd->add_option("--truncation", opt.truncation, "Truncation cap (0 = adaptive)");
}

void add_output_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opt.out, "Output path (default: stdout)");
}

double oracle_norm_for(const Inclusion& inc, OperatorKind kind, bool* converged) {
    const int K = 64;
    const int M = oracle_grid_size(K);
    DiskOracle oracle(inc, M);
    auto op = [&](const BoundaryFunction& f) {
        if (kind == OperatorKind::DnDiff) return oracle.apply_dn_diff(f, K).value;
        return oracle.apply_nd(f, K, kind).value;
    };
    auto res = norm_by_power_iteration(op, M, 600, 12345,
                                       kind != OperatorKind::DnDiff);
    if (converged) *converged = res.converged;
    return res.norm;
}

int cmd_map(const Options& opt) {
    Inclusion inc(opt.center(), opt.radius, 0.0);
    MobiusParam mp = to_concentric(inc);
    Table t;
    t.schema = "# eitdist map v1";
    t.columns = {"C_re", "C_im", "R", "a_re", "a_im", "rho", "zeta", "r"};
    t.rows.push_back({cell(inc.center().real()), cell(inc.center().imag()),
                      cell(inc.radius()), cell(mp.a.real()), cell(mp.a.imag()),
                      cell(mp.rho), cell(mp.zeta), cell(mp.r)});
    emit(t, opt.format, opt.out);
    return kExitOk;
}

int cmd_spectrum(const Options& opt) {
    Inclusion inc = opt.inclusion();
    OperatorKind kind = parse_kind(opt.kind);
    if (opt.top < 1) throw std::invalid_argument("--top must be at least 1");
    SpectrumResult res = compute_spectrum(inc, kind, opt.top, opt.tol, opt.n_max());

    Table t;
    t.schema = "# eitdist spectrum v1";
    t.comments.push_back("kind=" + std::string(kind_name(kind)) +
                         " N_used=" + std::to_string(res.N_used) +
                         " converged=" + cell(res.converged) +
                         " residual=" + fmt17(res.residual));
    t.columns = {"k", "eigenvalue", "N_used", "converged"};
    double oracle_norm = 0.0;
    bool oracle_converged = false;
    if (opt.verify) {
        oracle_norm = oracle_norm_for(inc, kind, &oracle_converged);
        t.columns.push_back("oracle_norm");
        t.columns.push_back("oracle_converged");
    }
    for (size_t i = 0; i < res.eigenvalues.size(); ++i) {
        std::vector<std::string> row{cell(static_cast<int>(i)),
                                     cell(res.eigenvalues[i]), cell(res.N_used),
                                     cell(res.converged)};
        if (opt.verify) {
            row.push_back(cell(oracle_norm));
            row.push_back(cell(oracle_converged));
        }
        t.rows.push_back(std::move(row));
    }
    emit(t, opt.format, opt.out);
    if (opt.strict && (!res.converged || (opt.verify && !oracle_converged)))
        return kExitNotConverged;
    return kExitOk;
}

int cmd_matrix(const Options& opt) {
    Inclusion inc = opt.inclusion();
    OperatorKind kind = parse_kind(opt.kind);
    int N = opt.truncation > 0 ? opt.truncation : 16;
    auto mat = build_operator(inc, N, kind);

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!opt.out.empty()) {
        file.open(opt.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output path: " + opt.out);
        os = &file;
    }
    mat.write_text(*os);

    if (opt.verify) {
        const int K = 48;
        DiskOracle oracle(inc, oracle_grid_size(K));
        int span = std::min(N, 8);
        double worst = 0.0;
        for (int m = -span; m <= span; ++m)
            for (int n = -span; n <= span; ++n) {
                Complex reference;
                if (kind == OperatorKind::DnDiff) {
                    reference = oracle.dn_matrix_entry(m, n, K);
                } else {
                    if (m == 0 || n == 0) continue;
                    reference = oracle.nd_matrix_entry(m, n, K, kind);
                }
                worst = std::max(worst, std::abs(mat.entry(m, n) - reference));
            }
        std::cerr << "verify: max entry deviation " << fmt17(worst) << "\n";
        if (opt.strict && worst > 1e-8) return kExitNotConverged;
    }
    return kExitOk;
}

int cmd_eigenfunction(const Options& opt, int grid) {
    Inclusion inc = opt.inclusion();
    OperatorKind kind = parse_kind(opt.kind);
    if (opt.top < 1) throw std::invalid_argument("--top must be at least 1");
    SpectrumResult res = compute_spectrum(inc, kind, opt.top, opt.tol, opt.n_max());
    EigenfunctionTrace trace = eigenfunction_trace(res, opt.top - 1, grid);

    Table t;
    t.schema = "# eitdist eigenfunction v1";
    t.comments.push_back("kind=" + std::string(kind_name(kind)) +
                         " k=" + std::to_string(opt.top) +
                         " eigenvalue=" + fmt17(res.eigenvalues.at(
                             static_cast<size_t>(opt.top - 1))) +
                         " N_used=" + std::to_string(res.N_used) +
                         " converged=" + cell(res.converged));
    t.columns = {"theta", "re", "im", "abs"};
    for (size_t j = 0; j < trace.theta.size(); ++j)
        t.rows.push_back({cell(trace.theta[j]), cell(trace.values[j].real()),
                          cell(trace.values[j].imag()),
                          cell(std::abs(trace.values[j]))});
    emit(t, opt.format, opt.out);
    if (opt.strict && !res.converged) return kExitNotConverged;
    return kExitOk;
}

int cmd_sweep(const Options& opt, const std::string& var, const std::string& grid_text) {
    OperatorKind kind = parse_kind(opt.kind);
    std::vector<double> grid = parse_grid(grid_text);
    Table t;
    bool all_converged = true;

    if (var == "rho") {
        auto reports = verify_bounds(opt.radius, opt.contrast, grid, kind, opt.tol,
                                     opt.thread_count());
        t.schema = "# eitdist sweep v1";
        t.comments.push_back("var=rho kind=" + std::string(kind_name(kind)) +
                             " r=" + fmt17(opt.radius) + " A=" + fmt17(opt.contrast));
        t.columns = {"rho",   "concentric_norm", "nonconcentric_norm", "ratio",
                     "lower", "upper",           "in_bounds",          "converged"};
        for (const auto& rep : reports) {
            all_converged = all_converged && rep.converged;
            t.rows.push_back({cell(rep.rho), cell(rep.concentric_norm),
                              cell(rep.nonconcentric_norm), cell(rep.ratio),
                              cell(rep.lower), cell(rep.upper), cell(rep.in_bounds),
                              cell(rep.converged)});
        }
    } else {
        auto reports = verify_fixed_size(opt.radius, opt.contrast, grid, kind, opt.top,
                                         opt.tol, opt.thread_count());
        t.schema = "# eitdist sweep v1";
        t.comments.push_back("var=center kind=" + std::string(kind_name(kind)) +
                             " R=" + fmt17(opt.radius) + " A=" + fmt17(opt.contrast));
        t.columns = {"c", "rho_small", "norm", "bound_ok", "converged"};
        for (int i = 0; i < opt.top; ++i)
            t.columns.push_back("lambda_" + std::to_string(i + 1));
        for (const auto& rep : reports) {
            all_converged = all_converged && rep.converged;
            std::vector<std::string> row{cell(rep.c), cell(rep.rho_small),
                                         cell(rep.norm), cell(rep.bound_ok),
                                         cell(rep.converged)};
            for (int i = 0; i < opt.top; ++i)
                row.push_back(cell(static_cast<size_t>(i) < rep.leading.size()
                                       ? rep.leading[static_cast<size_t>(i)]
                                       : 0.0));
            t.rows.push_back(std::move(row));
        }
    }
    emit(t, opt.format, opt.out);
    if (opt.strict && !all_converged) return kExitNotConverged;
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    Inclusion inc = opt.inclusion();
    OperatorKind kind = parse_kind(opt.kind);
    NormResult matrix = operator_norm(inc, kind, opt.tol, opt.n_max());
    bool oracle_converged = false;
    double oracle = oracle_norm_for(inc, kind, &oracle_converged);
    double rel = std::abs(oracle - matrix.value) / std::max(matrix.value, 1e-300);
    bool agree = rel <= 1e-6;

    Table t;
    t.schema = "# eitdist verify v1";
    t.columns = {"kind",        "matrix_norm",      "oracle_norm", "rel_diff",
                 "matrix_converged", "oracle_converged", "agree"};
    t.quoted = {true, false, false, false, false, false, false};
    t.rows.push_back({kind_name(kind), cell(matrix.value), cell(oracle), cell(rel),
                      cell(matrix.converged), cell(oracle_converged), cell(agree)});
    emit(t, opt.format, opt.out);
    if (opt.strict && (!matrix.converged || !oracle_converged || !agree))
        return kExitNotConverged;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguishability of a circular conductivity inclusion in the unit disk"};
    app.require_subcommand(1);

    Options opt;
    std::string sweep_var = "rho";
    std::string sweep_grid;
    int grid_size = 512;

    auto* map = app.add_subcommand("map", "Moebius parameters of the concentric image");
    add_geometry_flags(map, opt, false);
    add_output_flags(map, opt);

    auto* spectrum = app.add_subcommand("spectrum", "Leading eigenvalues of the boundary-map difference");
    add_geometry_flags(spectrum, opt, true);
    add_solver_flags(spectrum, opt);
    add_output_flags(spectrum, opt);
    spectrum->add_option("--top", opt.top, "Number of leading eigenvalues");
    spectrum->add_flag("--verify", opt.verify, "Append the oracle power-iteration norm");

    auto* matrix = app.add_subcommand("matrix", "Export the truncated operator matrix");
    add_geometry_flags(matrix, opt, true);
    add_solver_flags(matrix, opt);
    matrix->add_option("--out", opt.out, "Output path (default: stdout)");
    matrix->add_flag("--verify", opt.verify, "Check entries against the quadrature oracle");

    auto* eigenfunction = app.add_subcommand("eigenfunction", "Boundary trace of a leading eigenfunction");
    add_geometry_flags(eigenfunction, opt, true);
    add_solver_flags(eigenfunction, opt);
    add_output_flags(eigenfunction, opt);
    eigenfunction->add_option("--top", opt.top, "Eigenfunction index (1 = leading)");
    eigenfunction->add_option("--grid", grid_size, "Trace grid size");

    auto* sweep = app.add_subcommand("sweep", "Bound-verification parameter sweep");
    sweep->add_option("--radius", opt.radius, "Fixed concentric radius r (rho sweep) or inclusion radius R (center sweep)")->required();
    sweep->add_option("--contrast", opt.contrast, "Conductivity contrast A")->required();
    add_solver_flags(sweep, opt);
    add_output_flags(sweep, opt);
    sweep->add_option("--var", sweep_var, "Sweep variable")
        ->check(CLI::IsMember({"rho", "center"}));
    sweep->add_option("--grid", sweep_grid, "Grid as start:stop:step")->required();
    sweep->add_option("--top", opt.top, "Leading eigenvalues per center-sweep row");
    sweep->add_option("--threads", opt.threads, "Worker count (default: logical CPUs)")
        ->envname("EIT_DISTING_THREADS");

    auto* verify = app.add_subcommand("verify", "Cross-check the matrix norm against the oracle");
    add_geometry_flags(verify, opt, true);
    add_solver_flags(verify, opt);
    add_output_flags(verify, opt);

    for (auto* cmd : {map, spectrum, matrix, eigenfunction, sweep, verify})
        cmd->add_flag("--strict", opt.strict, "Exit 3 on any non-converged point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (map->parsed()) return cmd_map(opt);
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (matrix->parsed()) return cmd_matrix(opt);
        if (eigenfunction->parsed()) return cmd_eigenfunction(opt, grid_size);
        if (sweep->parsed()) return cmd_sweep(opt, sweep_var, sweep_grid);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
