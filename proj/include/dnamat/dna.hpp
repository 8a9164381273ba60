#pragma once

// Construction of DNA matrices: the order-(n+1) matrix family whose
// entries are homogeneous degree-n polynomials in (a, b), with 1
// subtracted on the diagonal. Two independent construction routes are
// provided and must agree entrywise:
//
//   * dna_entry / build_dna  - the closed-form entry, a pair of binomial
//     sums. The second sum collapses to -1 exactly on the diagonal,
//     which EntryFormula::fast exploits; EntryFormula::closed_form keeps
//     the literal sum so the collapse stays testable.
//
//   * build_oracle           - the same matrix recovered from first
//     principles: expand (a*x + b*y)^(n-i) * (b*x + a*y)^i - x^(n-i)*y^i
//     symbolically and read off the coefficient array of the resulting
//     linear system in the polynomial coefficients. Row r carries the
//     coefficient of x^(n-r+1)*y^(r-1); column c multiplies the unknown
//     attached to x^(n-c+1)*y^(c-1).
//
// Also here: the structural predicates (column sums, centrosymmetry via
// matrix.hpp), the alternating-binomial null vector of even-degree
// matrices, and its point-free verification modulo the hyperbola
// relation.

#include <dnamat/binomial.hpp>
#include <dnamat/bipoly.hpp>
#include <dnamat/hyperbola.hpp>
#include <dnamat/matrix.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace dnamat {

enum class EntryFormula { closed_form, fast };

namespace detail {

inline void check_entry_args(int n, int i, int j) {
    if (n < 0) throw std::invalid_argument("dna_entry: n must be >= 0");
    if (i < 1 || i > n + 1 || j < 1 || j > n + 1)
        throw std::out_of_range("dna_entry: indices must lie in [1, n+1]");
}

// The homogeneous part of entry (i, j): the double-binomial sum over s.
inline BiPoly entry_homogeneous_part(int n, int i, int j) {
    BiPoly f;
    for (int s = 0; s <= j - 1; ++s) {
        const Int c = binomial(j - 1, s) * binomial(n - j + 1, i - j + s);
        if (c == 0) continue;
        const int eb = i - j + 2 * s;  // in [0, n] whenever c != 0
        f.add_term(Monomial{n - eb, eb}, c);
    }
    return f;
}

}  // namespace detail

inline BiPoly dna_entry(int n, int i, int j,
                        EntryFormula formula = EntryFormula::closed_form) {
    detail::check_entry_args(n, i, j);
    BiPoly f = detail::entry_homogeneous_part(n, i, j);
    if (formula == EntryFormula::closed_form)
        f.add_term(Monomial{0, 0}, alternating_diag_sum(j, i));
    else if (i == j)
        f.add_term(Monomial{0, 0}, Int(-1));
    return f;
}

inline PolyMatrix build_dna(int n, EntryFormula formula = EntryFormula::closed_form) {
    if (n < 0) throw std::invalid_argument("build_dna: n must be >= 0");
    PolyMatrix m(n + 1);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= n + 1; ++j)
            m(i, j) = dna_entry(n, i, j, formula);
    return m;
}

// Independent rebuild from the invariance equation; see the file header.
// Binomial powers are expanded directly rather than through dna_entry's
// index arithmetic, so the two paths share no formula.
inline PolyMatrix build_oracle(int n) {
    if (n < 0) throw std::invalid_argument("build_oracle: n must be >= 0");
    PolyMatrix m(n + 1);
    for (int c = 1; c <= n + 1; ++c) {
        const int upper = n - c + 1;  // exponent of (a*x + b*y)
        const int lower = c - 1;      // exponent of (b*x + a*y)
        for (int r = 1; r <= n + 1; ++r) {
            BiPoly entry;
            for (int u = 0; u <= r - 1; ++u) {
                const int v = r - 1 - u;
                const Int coeff = binomial(upper, u) * binomial(lower, v);
                if (coeff == 0) continue;
                entry.add_term(Monomial{(upper - u) + v, u + (lower - v)}, coeff);
            }
            if (r == c) entry.add_term(Monomial{0, 0}, Int(-1));
            m(r, c) = entry;
        }
    }
    return m;
}

inline BiPoly column_sum(const PolyMatrix& m, int col) {
    if (col < 1 || col > m.order())
        throw std::out_of_range("column_sum: column out of range");
    BiPoly acc;
    for (int i = 1; i <= m.order(); ++i) acc += m(i, col);
    return acc;
}

// Null vector of the even-degree matrices: entries of Pascal row n/2
// with alternating signs in the odd slots, zeros in the even slots.
inline std::vector<Int> binomial_null_coeffs(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("binomial_null_coeffs: n must be even and >= 2");
    std::vector<Int> v(static_cast<size_t>(n) + 1, Int(0));
    for (int k = 1; k <= n / 2 + 1; ++k) {
        Int c = binomial(n / 2, k - 1);
        v[2 * (k - 1)] = (k % 2 == 1) ? c : -c;
    }
    return v;
}

inline RatVector binomial_null_vector(int n) {
    const std::vector<Int> coeffs = binomial_null_coeffs(n);
    RatVector v(n + 1);
    for (int i = 1; i <= n + 1; ++i) v(i) = Rational(coeffs[i - 1]);
    return v;
}

inline RatMatrix eval_matrix(const PolyMatrix& m, const Rational& alpha,
                             const Rational& beta) {
    RatMatrix r(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = 1; j <= m.order(); ++j)
            r(i, j) = m(i, j).eval(alpha, beta);
    return r;
}

inline RatMatrix eval_matrix(const PolyMatrix& m, const HyperbolaPoint& pt) {
    return eval_matrix(m, pt.alpha(), pt.beta());
}

inline std::vector<BiPoly> matrix_vector_product(const PolyMatrix& m,
                                                 const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.order())
        throw std::invalid_argument("matrix_vector_product: size mismatch");
    std::vector<BiPoly> out(static_cast<size_t>(m.order()));
    for (int i = 1; i <= m.order(); ++i) {
        BiPoly acc;
        for (int j = 1; j <= m.order(); ++j) acc += m(i, j) * v[j - 1];
        out[i - 1] = acc;
    }
    return out;
}

// Point-free form of the null-vector statement: A_n * v, reduced modulo
// b^2 = a^2 - 1, must vanish componentwise. The unreduced products are
// genuinely nonzero polynomials; only the quotient kills them.
inline std::vector<HyperbolaReduced> symbolic_null_check(int n) {
    const std::vector<Int> coeffs = binomial_null_coeffs(n);  // validates n
    const std::vector<BiPoly> product = matrix_vector_product(build_dna(n), coeffs);
    std::vector<HyperbolaReduced> out;
    out.reserve(product.size());
    for (const BiPoly& f : product) out.push_back(reduce_mod_hyperbola(f));
    return out;
}

}  // namespace dnamat
