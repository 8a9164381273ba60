#pragma once

// Extended binomial coefficients and the two combinatorial identities
// behind the DNA entry formula.
//
// binomial(p, q) is 0 whenever p < q or q < 0, and the standard value
// otherwise. A negative upper index is rejected: no index combination in
// the matrix construction produces one, so there is nothing to extend.
//
// p_stifel_rhs and alternating_diag_sum are deliberately computed by
// literal summation. They exist to be *tested against* their closed
// forms (binomial(n, k) and -delta_{ij} respectively), so simplifying
// them here would make those identity suites vacuous.

#include <dnamat/rational.hpp>

#include <stdexcept>
#include <vector>

// Rows of the memoized Pascal triangle; results are identical with any cap.
#ifndef DNAMAT_PASCAL_ROWS
#define DNAMAT_PASCAL_ROWS 256
#endif

namespace dnamat {

namespace detail {

inline const std::vector<std::vector<Int>>& pascal_table() {
    static const std::vector<std::vector<Int>> table = [] {
        std::vector<std::vector<Int>> t(DNAMAT_PASCAL_ROWS);
        for (size_t n = 0; n < t.size(); ++n) {
            t[n].resize(n + 1, Int(1));
            for (size_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

}  // namespace detail

inline Int binomial(long p, long q) {
    if (p < 0) throw std::invalid_argument("binomial: negative upper index");
    if (q < 0 || q > p) return Int(0);
    const auto& table = detail::pascal_table();
    if (static_cast<size_t>(p) < table.size()) return table[p][q];
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    return r;
}

// sum_{i=0}^{p} C(p, i) * C(n-p, k-(p-i)); equals C(n, k) for 0 <= p <= n.
inline Int p_stifel_rhs(long n, long k, long p) {
    if (n < 0) throw std::invalid_argument("p_stifel_rhs: n must be non-negative");
    if (p < 0 || p > n) throw std::invalid_argument("p_stifel_rhs: requires 0 <= p <= n");
    Int acc(0);
    for (long i = 0; i <= p; ++i) acc += binomial(p, i) * binomial(n - p, k - (p - i));
    return acc;
}

// sum_r (-1)^(r+1) * C(j-r, i) * C(j, r) over the full range r = 0..j
// where the row binomial can be nonzero; equals -1 when i = j and 0
// otherwise. For i >= 1 the r = j term vanishes (C(0, i) = 0), so the
// sum is then identical to the truncation at r = j-1 that the entry
// formula uses; keeping the boundary term makes the identity hold
// uniformly down to i = 0.
inline Int alternating_diag_sum(long j, long i) {
    if (j < 1) throw std::invalid_argument("alternating_diag_sum: requires j >= 1");
    Int acc(0);
    for (long r = 0; r <= j; ++r) {
        Int term = binomial(j - r, i) * binomial(j, r);
        if (r % 2 == 0)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

}  // namespace dnamat
