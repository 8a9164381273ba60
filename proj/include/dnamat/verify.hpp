#pragma once

// Composite self-verification: every structural statement the library
// makes about DNA matrices, bundled into one report for the CLI and CI.
//
// The file also hosts the mutation harness. Each EntryMutation nudges a
// single binomial index inside the entry formula; running the suites
// against a mutated builder must fail, which demonstrates the checks
// are not vacuous.

#include <dnamat/binomial.hpp>
#include <dnamat/dna.hpp>
#include <dnamat/hyperbola.hpp>
#include <dnamat/linalg.hpp>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace dnamat {

enum class EntryMutation {
    none,
    weight_shift,    // C(j-1, s)       -> C(j-1, s+1)
    span_shift,      // C(n-j+1, i-j+s) -> C(n-j+2, i-j+s)
    diag_col_shift,  // C(j-r, i)       -> C(j-r, i+1)
    diag_row_shift,  // C(j, r)         -> C(j+1, r)
};

inline const std::array<EntryMutation, 4>& all_mutations() {
    static const std::array<EntryMutation, 4> m = {
        EntryMutation::weight_shift, EntryMutation::span_shift,
        EntryMutation::diag_col_shift, EntryMutation::diag_row_shift};
    return m;
}

inline std::string mutation_name(EntryMutation m) {
    switch (m) {
        case EntryMutation::none: return "none";
        case EntryMutation::weight_shift: return "weight-shift";
        case EntryMutation::span_shift: return "span-shift";
        case EntryMutation::diag_col_shift: return "diag-col-shift";
        case EntryMutation::diag_row_shift: return "diag-row-shift";
    }
    return "?";
}

// Copy of the closed-form entry with one binomial index perturbed.
// Terms whose exponents escape the [0, n] window under a mutation are
// dropped; the resulting matrix still differs from the honest one.
inline BiPoly dna_entry_mutated(int n, int i, int j, EntryMutation mutation) {
    if (mutation == EntryMutation::none) return dna_entry(n, i, j);
    detail::check_entry_args(n, i, j);
    BiPoly f;
    for (int s = 0; s <= j - 1; ++s) {
        const long s_index = mutation == EntryMutation::weight_shift ? s + 1 : s;
        const long span_upper = mutation == EntryMutation::span_shift ? n - j + 2 : n - j + 1;
        const Int c = binomial(j - 1, s_index) * binomial(span_upper, i - j + s);
        if (c == 0) continue;
        const int eb = i - j + 2 * s;
        if (eb < 0 || eb > n) continue;
        f.add_term(Monomial{n - eb, eb}, c);
    }
    Int diag(0);
    for (int r = 0; r <= j - 1; ++r) {
        const long col_index = mutation == EntryMutation::diag_col_shift ? i + 1 : i;
        const long row_upper = mutation == EntryMutation::diag_row_shift ? j + 1 : j;
        const Int term = binomial(j - r, col_index) * binomial(row_upper, r);
        diag += r % 2 == 0 ? Int(-term) : term;
    }
    f.add_term(Monomial{0, 0}, diag);
    return f;
}

inline PolyMatrix build_dna_mutated(int n, EntryMutation mutation) {
    if (mutation == EntryMutation::none) return build_dna(n);
    PolyMatrix m(n + 1);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j) m(i, j) = dna_entry_mutated(n, i, j, mutation);
    return m;
}

struct SuiteResult {
    SuiteResult(std::string suite_name, std::string suite_scope)
        : name(std::move(suite_name)), scope(std::move(suite_scope)) {}

    std::string name;
    std::string scope;
    bool pass = true;
    std::string counterexample;  // first failure, with full context
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool all_pass() const {
        for (const SuiteResult& s : suites)
            if (!s.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_n = 12;
    std::vector<HyperbolaPoint> points = {hyperbola_point(Rational(2)),
                                          hyperbola_point(Rational(3)),
                                          hyperbola_point(Rational(5, 2))};
    EntryMutation mutation = EntryMutation::none;
};

namespace detail {

inline std::string points_scope(const VerifyOptions& opt) {
    return "n <= " + std::to_string(opt.max_n) + " at " +
           std::to_string(opt.points.size()) + " hyperbola points";
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyOptions& opt) {
    VerifyReport report;
    const int max_n = opt.max_n;
    const auto builder = [&](int n) { return build_dna_mutated(n, opt.mutation); };

    // cache the matrices; every suite below walks the same family
    std::vector<PolyMatrix> family;
    family.reserve(max_n + 1);
    for (int n = 0; n <= max_n; ++n) family.push_back(builder(n));

    {
        SuiteResult s{"p-Stifel relation",
                      "n <= " + std::to_string(max_n) + ", k in [-2, n+2], p in [0, n]"};
        for (int n = 0; n <= max_n && s.pass; ++n)
            for (int k = -2; k <= n + 2 && s.pass; ++k)
                for (int p = 0; p <= n; ++p)
                    if (p_stifel_rhs(n, k, p) != binomial(n, k)) {
                        s.pass = false;
                        s.counterexample = "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                           ", p=" + std::to_string(p) + ": sum=" +
                                           to_string(p_stifel_rhs(n, k, p)) + ", binomial=" +
                                           to_string(binomial(n, k));
                        break;
                    }
        report.suites.push_back(std::move(s));
    }

    {
        const int max_i = max_n + 5;
        SuiteResult s{"alternating diagonal sum",
                      "j in [1, " + std::to_string(max_n) + "], i in [0, " +
                          std::to_string(max_i) + "]"};
        for (int j = 1; j <= max_n && s.pass; ++j)
            for (int i = 0; i <= max_i; ++i) {
                const Int expected = i == j ? Int(-1) : Int(0);
                if (alternating_diag_sum(j, i) != expected) {
                    s.pass = false;
                    s.counterexample = "j=" + std::to_string(j) + ", i=" + std::to_string(i) +
                                       ": sum=" + to_string(alternating_diag_sum(j, i));
                    break;
                }
            }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"oracle equivalence", "n <= " + std::to_string(max_n)};
        for (int n = 0; n <= max_n && s.pass; ++n) {
            const PolyMatrix oracle = build_oracle(n);
            for (int i = 1; i <= n + 1 && s.pass; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    if (family[n](i, j) != oracle(i, j)) {
                        s.pass = false;
                        s.counterexample = "n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                                           ", j=" + std::to_string(j) + ": built " +
                                           family[n](i, j).to_string() + ", invariance expansion gives " +
                                           oracle(i, j).to_string();
                        break;
                    }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"fast-path agreement", "n <= " + std::to_string(max_n)};
        for (int n = 0; n <= max_n && s.pass; ++n) {
            const PolyMatrix fast = build_dna(n, EntryFormula::fast);
            for (int i = 1; i <= n + 1 && s.pass; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    if (family[n](i, j) != fast(i, j)) {
                        s.pass = false;
                        s.counterexample = "n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                                           ", j=" + std::to_string(j) + ": closed form " +
                                           family[n](i, j).to_string() + ", fast form " +
                                           fast(i, j).to_string();
                        break;
                    }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"centrosymmetry", "n <= " + std::to_string(max_n)};
        for (int n = 0; n <= max_n && s.pass; ++n) {
            const PolyMatrix& m = family[n];
            for (int i = 1; i <= n + 1 && s.pass; ++i)
                for (int j = 1; j <= n + 1; ++j)
                    if (m(i, j) != m(n + 2 - i, n + 2 - j)) {
                        s.pass = false;
                        s.counterexample = "n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                                           ", j=" + std::to_string(j) + ": " +
                                           m(i, j).to_string() + " vs mirrored " +
                                           m(n + 2 - i, n + 2 - j).to_string();
                        break;
                    }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"column sums", "n <= " + std::to_string(max_n)};
        const BiPoly a_plus_b = BiPoly::term(1, 1, 0) + BiPoly::term(1, 0, 1);
        for (int n = 0; n <= max_n && s.pass; ++n) {
            const BiPoly expected = pow(a_plus_b, n) - BiPoly::constant(1);
            for (int col = 1; col <= n + 1; ++col) {
                const BiPoly sum = column_sum(family[n], col);
                if (sum != expected) {
                    s.pass = false;
                    s.counterexample = "n=" + std::to_string(n) + ", column " +
                                       std::to_string(col) + ": sum " + sum.to_string() +
                                       ", expected " + expected.to_string();
                    break;
                }
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"homogeneity", "n <= " + std::to_string(max_n)};
        for (int n = 0; n <= max_n && s.pass; ++n)
            for (int i = 1; i <= n + 1 && s.pass; ++i)
                for (int j = 1; j <= n + 1; ++j) {
                    BiPoly h = family[n](i, j);
                    if (i == j) h += BiPoly::constant(1);
                    if (!h.homogeneous(n)) {
                        s.pass = false;
                        s.counterexample = "n=" + std::to_string(n) + ", i=" + std::to_string(i) +
                                           ", j=" + std::to_string(j) +
                                           ": entry plus diagonal unit is " + h.to_string();
                        break;
                    }
                }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"determinant parity and kernel", detail::points_scope(opt)};
        for (int n = 1; n <= max_n && s.pass; ++n) {
            const bool even = n % 2 == 0;
            for (const HyperbolaPoint& pt : opt.points) {
                const RatMatrix m = eval_matrix(family[n], pt);
                const Rational det = det_bareiss(m);
                const KernelBasis basis = kernel(m);
                const int dim = static_cast<int>(basis.vectors.size());
                bool ok = even == det.is_zero();
                if (ok)
                    ok = even ? (dim == 1 && basis.vectors[0] == binomial_null_vector(n))
                              : dim == 0;
                if (!ok) {
                    s.pass = false;
                    s.counterexample = "n=" + std::to_string(n) + " at (" +
                                       pt.alpha().to_string() + ", " + pt.beta().to_string() +
                                       "): det=" + det.to_string() +
                                       ", kernel dim=" + std::to_string(dim);
                    break;
                }
            }
        }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"determinant cross-paths", detail::points_scope(opt)};
        for (int n = 0; n <= max_n && s.pass; ++n)
            for (const HyperbolaPoint& pt : opt.points) {
                const RatMatrix m = eval_matrix(family[n], pt);
                if (!is_centrosymmetric(m)) {
                    s.pass = false;
                    s.counterexample = "n=" + std::to_string(n) +
                                       ": evaluated matrix is not centrosymmetric";
                    break;
                }
                const Rational plain = det_bareiss(m);
                const Rational split = det_centro(m);
                if (plain != split) {
                    s.pass = false;
                    s.counterexample = "n=" + std::to_string(n) + " at (" +
                                       pt.alpha().to_string() + ", " + pt.beta().to_string() +
                                       "): bareiss " + plain.to_string() + ", centro " +
                                       split.to_string();
                    break;
                }
            }
        report.suites.push_back(std::move(s));
    }

    {
        SuiteResult s{"symbolic null reduction", "even n <= " + std::to_string(max_n)};
        for (int n = 2; n <= max_n && s.pass; n += 2) {
            const std::vector<BiPoly> product =
                matrix_vector_product(family[n], binomial_null_coeffs(n));
            for (size_t k = 0; k < product.size(); ++k) {
                const HyperbolaReduced r = reduce_mod_hyperbola(product[k]);
                if (!r.is_zero()) {
                    s.pass = false;
                    s.counterexample = "n=" + std::to_string(n) + ", component " +
                                       std::to_string(k + 1) + " reduces to " +
                                       r.to_bipoly().to_string();
                    break;
                }
            }
        }
        report.suites.push_back(std::move(s));
    }

    return report;
}

}  // namespace dnamat
