// dnamat: exact construction and analysis of DNA matrices.
//
// Subcommands: build, det, nullspace, table, verify, bench. All output
// is exact (rationals as "num/den" strings, polynomials in canonical
// form); no number is ever printed as a float. Exit codes: 0 success,
// 1 property or verification failure, 2 usage error.

#include <dnamat/dnamat.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using dnamat::BiPoly;
using dnamat::EvalPoint;
using dnamat::HyperbolaPoint;
using dnamat::PolyMatrix;
using dnamat::Rational;
using dnamat::RatMatrix;
using dnamat::RatVector;

enum class Format { text, json, csv, latex };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "latex") return Format::latex;
    throw UsageError("unknown format '" + name + "'");
}

Rational parse_rational(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("invalid rational for " + flag + ": '" + text + "'");
    }
}

// ---- point selection shared by build/det/nullspace ----

struct PointArgs {
    std::string t;
    std::string alpha;
    std::string beta;
    bool off_hyperbola = false;
};

void add_point_flags(CLI::App* cmd, PointArgs& args, bool with_off_switch = true) {
    cmd->add_option("--t", args.t,
                    "hyperbola parameter t (rational, e.g. 2 or 5/2); "
                    "selects alpha=(t^2+1)/2t, beta=(t^2-1)/2t");
    cmd->add_option("--alpha", args.alpha, "explicit alpha (rational)");
    cmd->add_option("--beta", args.beta, "explicit beta (rational)");
    if (with_off_switch)
        cmd->add_flag("--off-hyperbola", args.off_hyperbola,
                      "allow alpha^2 - beta^2 != 1");
}

std::optional<EvalPoint> resolve_point(const PointArgs& args) {
    const bool has_t = !args.t.empty();
    const bool has_ab = !args.alpha.empty() || !args.beta.empty();
    if (has_t && has_ab)
        throw UsageError("give either --t or --alpha/--beta, not both");
    if (has_t) {
        const Rational t = parse_rational(args.t, "--t");
        if (t.is_zero()) throw UsageError("--t must be nonzero");
        const HyperbolaPoint pt = dnamat::hyperbola_point(t);
        return EvalPoint{pt.alpha(), pt.beta()};
    }
    if (has_ab) {
        if (args.alpha.empty() || args.beta.empty())
            throw UsageError("--alpha and --beta must be given together");
        const Rational alpha = parse_rational(args.alpha, "--alpha");
        const Rational beta = parse_rational(args.beta, "--beta");
        if (!args.off_hyperbola && alpha * alpha - beta * beta != Rational(1))
            throw UsageError("alpha^2 - beta^2 != 1; pass --off-hyperbola to evaluate anyway");
        return EvalPoint{alpha, beta};
    }
    return std::nullopt;
}

EvalPoint require_point(const PointArgs& args, const std::string& cmd) {
    auto pt = resolve_point(args);
    if (!pt) throw UsageError(cmd + " needs an evaluation point (--t or --alpha/--beta)");
    return *pt;
}

// ---- rendering helpers ----

std::string display_poly(const BiPoly& f, Format format, bool unicode) {
    const std::string plain = f.to_string();
    if (!unicode) return plain;
    std::string out;
    for (char c : plain) {
        if (c == 'a')
            out += format == Format::latex ? "\\alpha" : "\u03b1";
        else if (c == 'b')
            out += format == Format::latex ? "\\beta" : "\u03b2";
        else
            out += c;
    }
    return out;
}

std::string latex_rational(const Rational& r) {
    if (r.den() == 1) return r.num().get_str();
    std::string out;
    if (r.sign() < 0) out += '-';
    out += "\\frac{" + dnamat::Int(abs(r.num())).get_str() + "}{" + r.den().get_str() + "}";
    return out;
}

// display width in code points (alpha/beta are multi-byte in UTF-8)
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string vector_text(const RatVector& v) {
    std::string out = "(";
    for (int i = 1; i <= v.size(); ++i) {
        if (i > 1) out += ", ";
        out += v(i).to_string();
    }
    return out + ")";
}

nlohmann::json vector_json(const RatVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 1; i <= v.size(); ++i) arr.push_back(v(i).to_string());
    return arr;
}

nlohmann::json point_json(const EvalPoint& pt) {
    return {{"alpha", pt.alpha.to_string()}, {"beta", pt.beta.to_string()}};
}

void print_grid(const std::vector<std::vector<std::string>>& cells, Format format) {
    if (format == Format::csv) {
        for (const auto& row : cells) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? "," : "") << csv_cell(row[j]);
            std::cout << "\n";
        }
        return;
    }
    if (format == Format::latex) {
        std::cout << "\\begin{pmatrix}\n";
        for (const auto& row : cells) {
            std::cout << "  ";
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " & " : "") << row[j];
            std::cout << " \\\\\n";
        }
        std::cout << "\\end{pmatrix}\n";
        return;
    }
    // text: align columns
    std::vector<size_t> width(cells.empty() ? 0 : cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], display_width(row[j]));
    for (const auto& row : cells) {
        std::cout << "[ ";
        for (size_t j = 0; j < row.size(); ++j) {
            std::cout << row[j] << std::string(width[j] - display_width(row[j]), ' ');
            if (j + 1 < row.size()) std::cout << "  ";
        }
        std::cout << " ]\n";
    }
}

bool color_enabled() {
    return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

// ---- subcommands ----

struct BuildOpts {
    int n = 0;
    PointArgs point;
    Format format = Format::text;
    bool unicode = false;
};

int run_build(const BuildOpts& opt) {
    if (opt.n < 0) throw UsageError("--n must be >= 0");
    const PolyMatrix sym = dnamat::build_dna(opt.n);
    const auto point = resolve_point(opt.point);

    if (!point) {
        if (opt.format == Format::json) {
            std::cout << dnamat::matrix_to_json(sym).dump(2) << "\n";
            return 0;
        }
        std::vector<std::vector<std::string>> cells(sym.order());
        for (int i = 1; i <= sym.order(); ++i)
            for (int j = 1; j <= sym.order(); ++j)
                cells[i - 1].push_back(display_poly(sym(i, j), opt.format, opt.unicode));
        print_grid(cells, opt.format);
        return 0;
    }

    const RatMatrix m = dnamat::eval_matrix(sym, point->alpha, point->beta);
    if (opt.format == Format::json) {
        std::cout << dnamat::matrix_to_json(m, point).dump(2) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> cells(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j)
            cells[i - 1].push_back(opt.format == Format::latex ? latex_rational(m(i, j))
                                                               : m(i, j).to_string());
    print_grid(cells, opt.format);
    return 0;
}

struct DetOpts {
    int n = 0;
    PointArgs point;
    std::string strategy = "bareiss";
    Format format = Format::text;
};

int run_det(const DetOpts& opt) {
    if (opt.n < 0) throw UsageError("--n must be >= 0");
    if (opt.strategy != "bareiss" && opt.strategy != "centro" && opt.strategy != "both")
        throw UsageError("--strategy must be bareiss, centro, or both");
    const EvalPoint pt = require_point(opt.point, "det");
    const RatMatrix m = dnamat::eval_matrix(dnamat::build_dna(opt.n), pt.alpha, pt.beta);

    std::optional<Rational> plain, split;
    if (opt.strategy != "centro") plain = dnamat::det_bareiss(m);
    if (opt.strategy != "bareiss") {
        if (!dnamat::is_centrosymmetric(m))
            throw UsageError("evaluated matrix is not centrosymmetric; use --strategy bareiss");
        split = dnamat::det_centro(m);
    }
    const bool agree = !plain || !split || *plain == *split;

    switch (opt.format) {
        case Format::json: {
            nlohmann::json doc{{"n", opt.n}, {"point", point_json(pt)},
                               {"strategy", opt.strategy}};
            if (plain) doc["bareiss"] = plain->to_string();
            if (split) doc["centro"] = split->to_string();
            doc["determinant"] = (plain ? *plain : *split).to_string();
            if (opt.strategy == "both") doc["agree"] = agree;
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "strategy,determinant\n";
            if (plain) std::cout << "bareiss," << csv_cell(plain->to_string()) << "\n";
            if (split) std::cout << "centro," << csv_cell(split->to_string()) << "\n";
            break;
        }
        case Format::latex:
            std::cout << latex_rational(plain ? *plain : *split) << "\n";
            break;
        case Format::text:
            if (opt.strategy == "both") {
                std::cout << "bareiss: " << *plain << "\n";
                std::cout << "centro:  " << *split << "\n";
                std::cout << "agree:   " << (agree ? "yes" : "NO") << "\n";
            } else {
                std::cout << (plain ? *plain : *split) << "\n";
            }
            break;
    }
    return agree ? 0 : 1;
}

struct NullspaceOpts {
    int n = 0;
    PointArgs point;
    Format format = Format::text;
};

std::string invariant_form(int n) {
    std::string s = "a(x^2-y^2)";
    if (n / 2 > 1) s += "^" + std::to_string(n / 2);
    return s;
}

int run_nullspace(const NullspaceOpts& opt) {
    if (opt.n < 0) throw UsageError("--n must be >= 0");
    const EvalPoint pt = require_point(opt.point, "nullspace");
    const RatMatrix m = dnamat::eval_matrix(dnamat::build_dna(opt.n), pt.alpha, pt.beta);
    const dnamat::KernelBasis basis = dnamat::kernel(m);

    const bool even = opt.n % 2 == 0 && opt.n >= 2;
    std::optional<RatVector> expected;
    if (even) expected = dnamat::binomial_null_vector(opt.n);
    const bool matches = expected && basis.vectors.size() == 1 &&
                         basis.vectors[0] == *expected;

    switch (opt.format) {
        case Format::json: {
            nlohmann::json doc{{"n", opt.n},
                               {"point", point_json(pt)},
                               {"kernel_dimension", basis.vectors.size()},
                               {"rank", basis.rank}};
            nlohmann::json arr = nlohmann::json::array();
            for (const RatVector& v : basis.vectors) arr.push_back(vector_json(v));
            doc["basis"] = std::move(arr);
            if (expected) {
                doc["expected_vector"] = vector_json(*expected);
                doc["matches_expected"] = matches;
                doc["invariant_form"] = invariant_form(opt.n);
            }
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "index,component\n";
            if (!basis.vectors.empty())
                for (int i = 1; i <= basis.vectors[0].size(); ++i)
                    std::cout << i << "," << csv_cell(basis.vectors[0](i).to_string())
                              << "\n";
            break;
        }
        case Format::latex: {
            if (basis.vectors.empty()) {
                std::cout << "\\{0\\}\n";
            } else {
                for (const RatVector& v : basis.vectors) {
                    std::cout << "\\begin{pmatrix} ";
                    for (int i = 1; i <= v.size(); ++i)
                        std::cout << (i > 1 ? " & " : "") << latex_rational(v(i));
                    std::cout << " \\end{pmatrix}\n";
                }
            }
            break;
        }
        case Format::text: {
            std::cout << "kernel dimension: " << basis.vectors.size() << "\n";
            for (const RatVector& v : basis.vectors)
                std::cout << "basis vector: " << vector_text(v) << "\n";
            if (expected) {
                std::cout << "alternating binomial vector: " << vector_text(*expected)
                          << "\n";
                std::cout << "matches: " << (matches ? "yes" : "NO") << "\n";
                std::cout << "invariant form: " << invariant_form(opt.n) << "\n";
            }
            break;
        }
    }
    return 0;
}

struct TableOpts {
    int max_degree = 10;
    std::string t = "2";
    Format format = Format::text;
};

struct TableRow {
    int degree;
    Rational det;
    std::optional<RatVector> null_vector;
    std::optional<std::string> invariant;
};

int run_table(const TableOpts& opt) {
    if (opt.max_degree < 1) throw UsageError("--max-degree must be >= 1");
    const Rational t = parse_rational(opt.t, "--t");
    if (t.is_zero()) throw UsageError("--t must be nonzero");
    const HyperbolaPoint pt = dnamat::hyperbola_point(t);
    if (pt.degenerate())
        throw UsageError("--t = +-1 gives the degenerate point beta = 0");

    std::vector<TableRow> rows;
    for (int n = 1; n <= opt.max_degree; ++n) {
        const RatMatrix m = dnamat::eval_matrix(dnamat::build_dna(n), pt);
        TableRow row{n, dnamat::det_bareiss(m), std::nullopt, std::nullopt};
        if (row.det.is_zero()) {
            const dnamat::KernelBasis basis = dnamat::kernel(m);
            if (basis.vectors.size() != 1) {
                std::cerr << "error: kernel dimension " << basis.vectors.size()
                          << " at degree " << n << ", expected 1\n";
                return 1;
            }
            row.null_vector = basis.vectors[0];
            row.invariant = invariant_form(n);
        }
        rows.push_back(std::move(row));
    }

    switch (opt.format) {
        case Format::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const TableRow& row : rows) {
                nlohmann::json r{{"degree", row.degree},
                                 {"determinant", row.det.to_string()}};
                r["null_vector"] =
                    row.null_vector ? vector_json(*row.null_vector) : nlohmann::json();
                r["invariant_form"] =
                    row.invariant ? nlohmann::json(*row.invariant) : nlohmann::json();
                arr.push_back(std::move(r));
            }
            nlohmann::json doc{{"t", t.to_string()},
                               {"point", point_json({pt.alpha(), pt.beta()})},
                               {"rows", std::move(arr)}};
            std::cout << doc.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            std::cout << "degree,determinant,null_vector,invariant_form\n";
            for (const TableRow& row : rows) {
                std::cout << row.degree << "," << csv_cell(row.det.to_string()) << ",";
                std::cout << (row.null_vector ? csv_cell(vector_text(*row.null_vector))
                                              : std::string())
                          << ",";
                std::cout << (row.invariant ? *row.invariant : std::string()) << "\n";
            }
            break;
        }
        case Format::latex: {
            std::cout << "\\begin{tabular}{c|c|c|c}\n";
            std::cout << "degree & determinant & null vector & invariant \\\\ \\hline\n";
            for (const TableRow& row : rows) {
                std::cout << row.degree << " & " << latex_rational(row.det) << " & ";
                if (row.null_vector) {
                    std::cout << "(";
                    for (int i = 1; i <= row.null_vector->size(); ++i)
                        std::cout << (i > 1 ? ", " : "")
                                  << latex_rational((*row.null_vector)(i));
                    std::cout << ")";
                } else {
                    std::cout << "-";
                }
                std::cout << " & " << (row.invariant ? "$" + *row.invariant + "$" : "-")
                          << " \\\\\n";
            }
            std::cout << "\\end{tabular}\n";
            break;
        }
        case Format::text: {
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"degree", "determinant", "null vector", "invariant"});
            for (const TableRow& row : rows)
                cells.push_back(
                    {std::to_string(row.degree), row.det.to_string(),
                     row.null_vector ? vector_text(*row.null_vector) : "-",
                     row.invariant ? *row.invariant : "-"});
            std::vector<size_t> width(4, 0);
            for (const auto& row : cells)
                for (size_t j = 0; j < 4; ++j) width[j] = std::max(width[j], row[j].size());
            for (const auto& row : cells) {
                for (size_t j = 0; j < 4; ++j) {
                    std::cout << row[j] << std::string(width[j] - row[j].size(), ' ');
                    std::cout << (j + 1 < 4 ? "  " : "");
                }
                std::cout << "\n";
            }
            break;
        }
    }
    return 0;
}

struct VerifyOpts {
    int max_n = 12;
    std::vector<std::string> t_values;
    std::string mutate = "none";
    Format format = Format::text;
};

int run_verify_cmd(const VerifyOpts& opt) {
    if (opt.max_n < 0) throw UsageError("--max-n must be >= 0");
    dnamat::VerifyOptions lib_opt;
    lib_opt.max_n = opt.max_n;

    if (!opt.t_values.empty()) {
        lib_opt.points.clear();
        for (const std::string& text : opt.t_values) {
            const Rational t = parse_rational(text, "--t");
            if (t.is_zero() || t == Rational(1) || t == Rational(-1))
                throw UsageError("verify points need t outside {0, 1, -1}");
            lib_opt.points.push_back(dnamat::hyperbola_point(t));
        }
    }

    lib_opt.mutation = dnamat::EntryMutation::none;
    if (opt.mutate != "none") {
        bool found = false;
        for (dnamat::EntryMutation m : dnamat::all_mutations())
            if (dnamat::mutation_name(m) == opt.mutate) {
                lib_opt.mutation = m;
                found = true;
            }
        if (!found) {
            std::string names = "none";
            for (dnamat::EntryMutation m : dnamat::all_mutations())
                names += ", " + dnamat::mutation_name(m);
            throw UsageError("unknown mutation '" + opt.mutate + "' (choices: " + names + ")");
        }
    }

    const dnamat::VerifyReport report = dnamat::run_verify(lib_opt);

    if (opt.format == Format::json) {
        nlohmann::json suites = nlohmann::json::array();
        for (const auto& s : report.suites) {
            nlohmann::json row{{"name", s.name}, {"scope", s.scope}, {"pass", s.pass}};
            if (!s.pass) row["counterexample"] = s.counterexample;
            suites.push_back(std::move(row));
        }
        nlohmann::json doc{{"max_n", opt.max_n},
                           {"mutation", dnamat::mutation_name(lib_opt.mutation)},
                           {"all_pass", report.all_pass()},
                           {"suites", std::move(suites)}};
        std::cout << doc.dump(2) << "\n";
    } else if (opt.format == Format::csv) {
        std::cout << "suite,scope,pass,counterexample\n";
        for (const auto& s : report.suites)
            std::cout << csv_cell(s.name) << "," << csv_cell(s.scope) << ","
                      << (s.pass ? "true" : "false") << "," << csv_cell(s.counterexample)
                      << "\n";
    } else {
        const bool color = opt.format == Format::text && color_enabled();
        const char* green = color ? "\033[32m" : "";
        const char* red = color ? "\033[31m" : "";
        const char* reset = color ? "\033[0m" : "";
        size_t name_width = 0, scope_width = 0;
        for (const auto& s : report.suites) {
            name_width = std::max(name_width, s.name.size());
            scope_width = std::max(scope_width, s.scope.size());
        }
        for (const auto& s : report.suites) {
            std::cout << s.name << std::string(name_width - s.name.size(), ' ') << "  "
                      << s.scope << std::string(scope_width - s.scope.size(), ' ') << "  "
                      << (s.pass ? green : red) << (s.pass ? "pass" : "FAIL") << reset
                      << "\n";
            if (!s.pass) std::cout << "    counterexample: " << s.counterexample << "\n";
        }
        std::cout << (report.all_pass() ? "all checks passed" : "verification FAILED")
                  << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

struct BenchOpts {
    int max_n = 12;
    std::string t = "2";
    Format format = Format::text;
};

int run_bench(const BenchOpts& opt) {
    if (opt.max_n < 1) throw UsageError("--max-n must be >= 1");
    const Rational t = parse_rational(opt.t, "--t");
    if (t.is_zero()) throw UsageError("--t must be nonzero");
    const HyperbolaPoint pt = dnamat::hyperbola_point(t);

    using clock = std::chrono::steady_clock;
    nlohmann::json json_rows = nlohmann::json::array();
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "order", "bareiss_us", "bareiss_bits", "centro_us",
                     "centro_bits", "agree"});

    bool all_agree = true;
    for (int n = 1; n <= opt.max_n; ++n) {
        const RatMatrix m = dnamat::eval_matrix(dnamat::build_dna(n), pt);

        dnamat::DetStats plain_stats;
        const auto t0 = clock::now();
        const Rational plain = dnamat::det_bareiss(m, &plain_stats);
        const auto t1 = clock::now();
        dnamat::DetStats split_stats;
        const Rational split = dnamat::det_centro(m, &split_stats);
        const auto t2 = clock::now();

        const auto us = [](auto d) {
            return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
        };
        const bool agree = plain == split;
        all_agree = all_agree && agree;

        cells.push_back({std::to_string(n), std::to_string(n + 1),
                         std::to_string(us(t1 - t0)), std::to_string(plain_stats.max_bits),
                         std::to_string(us(t2 - t1)), std::to_string(split_stats.max_bits),
                         agree ? "yes" : "NO"});
        json_rows.push_back({{"n", n},
                             {"order", n + 1},
                             {"bareiss_us", us(t1 - t0)},
                             {"bareiss_max_bits", plain_stats.max_bits},
                             {"centro_us", us(t2 - t1)},
                             {"centro_max_bits", split_stats.max_bits},
                             {"determinant", plain.to_string()},
                             {"agree", agree}});
    }

    if (opt.format == Format::json) {
        std::cout << nlohmann::json{{"t", t.to_string()}, {"rows", json_rows}}.dump(2)
                  << "\n";
    } else if (opt.format == Format::csv) {
        for (const auto& row : cells) {
            for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
            std::cout << "\n";
        }
    } else {
        std::vector<size_t> width(cells[0].size(), 0);
        for (const auto& row : cells)
            for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
        for (const auto& row : cells) {
            for (size_t j = 0; j < row.size(); ++j)
                std::cout << row[j] << std::string(width[j] - row[j].size(), ' ')
                          << (j + 1 < row.size() ? "  " : "");
            std::cout << "\n";
        }
    }
    return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact DNA matrix toolkit: construction, determinants, kernels, "
                 "and self-verification"};
    app.require_subcommand(1);

    std::string format_name = "text";

    BuildOpts build_opts;
    CLI::App* build = app.add_subcommand("build", "construct a matrix (symbolic or evaluated)");
    build->add_option("--n", build_opts.n, "polynomial degree (matrix order is n+1)")
        ->required();
    add_point_flags(build, build_opts.point);
    build->add_flag("--unicode", build_opts.unicode, "print alpha/beta symbols in text and latex");
    build->add_option("--format", format_name, "text, json, csv, or latex");

    DetOpts det_opts;
    CLI::App* det = app.add_subcommand("det", "exact determinant at a point");
    det->add_option("--n", det_opts.n, "polynomial degree")->required();
    add_point_flags(det, det_opts.point);
    det->add_option("--strategy", det_opts.strategy, "bareiss, centro, or both");
    det->add_option("--format", format_name, "text, json, csv, or latex");

    NullspaceOpts null_opts;
    CLI::App* nullspace = app.add_subcommand("nullspace", "exact kernel basis at a point");
    nullspace->add_option("--n", null_opts.n, "polynomial degree")->required();
    add_point_flags(nullspace, null_opts.point);
    nullspace->add_option("--format", format_name, "text, json, csv, or latex");

    TableOpts table_opts;
    CLI::App* table = app.add_subcommand(
        "table", "determinant/null-vector table for degrees 1..max");
    table->add_option("--max-degree", table_opts.max_degree, "last degree (default 10)");
    table->add_option("--t", table_opts.t, "hyperbola parameter (default 2)");
    table->add_option("--format", format_name, "text, json, csv, or latex");

    VerifyOpts verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "run every structural check");
    verify->add_option("--max-n", verify_opts.max_n, "sweep degrees up to this (default 12)");
    verify->add_option("--t", verify_opts.t_values,
                       "hyperbola parameters for point checks (repeatable)");
    verify->add_option("--mutate", verify_opts.mutate,
                       "run against a deliberately corrupted entry formula (self-test)");
    verify->add_option("--format", format_name, "text, json, or csv");

    BenchOpts bench_opts;
    CLI::App* bench = app.add_subcommand("bench", "compare determinant strategies");
    bench->add_option("--max-n", bench_opts.max_n, "sweep degrees up to this (default 12)");
    bench->add_option("--t", bench_opts.t, "hyperbola parameter (default 2)");
    bench->add_option("--format", format_name, "text, json, or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Format format = parse_format(format_name);
        build_opts.format = det_opts.format = null_opts.format = format;
        table_opts.format = verify_opts.format = bench_opts.format = format;

        if (app.got_subcommand(build)) return run_build(build_opts);
        if (app.got_subcommand(det)) return run_det(det_opts);
        if (app.got_subcommand(nullspace)) return run_nullspace(null_opts);
        if (app.got_subcommand(table)) return run_table(table_opts);
        if (app.got_subcommand(verify)) return run_verify_cmd(verify_opts);
        if (app.got_subcommand(bench)) return run_bench(bench_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
