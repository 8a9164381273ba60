#pragma once

// Reduction modulo the hyperbola relation b^2 = a^2 - 1, plus exact
// rational points on the unit hyperbola a^2 - b^2 = 1.
//
// The quotient ring by (b^2 - a^2 + 1) is a free module of rank two
// over Z[a]: every BiPoly has a unique representative p(a) + b*q(a),
// obtained by substituting b^(2k+r) -> (a^2 - 1)^k * b^r until the
// b-degree drops below two. A polynomial vanishes identically on the
// hyperbola iff both p and q are zero.

#include <dnamat/bipoly.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace dnamat {

// Dense univariate polynomial in `a` with integer coefficients.
// Canonical form: no trailing zero coefficients (zero == empty).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Int v) { return UniPoly(std::vector<Int>{std::move(v)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Int coeff(size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    friend UniPoly operator+(const UniPoly& f, const UniPoly& g) {
        std::vector<Int> r(std::max(f.c_.size(), g.c_.size()), Int(0));
        for (size_t k = 0; k < f.c_.size(); ++k) r[k] += f.c_[k];
        for (size_t k = 0; k < g.c_.size(); ++k) r[k] += g.c_[k];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const UniPoly& f, const UniPoly& g) {
        if (f.is_zero() || g.is_zero()) return UniPoly();
        std::vector<Int> r(f.c_.size() + g.c_.size() - 1, Int(0));
        for (size_t i = 0; i < f.c_.size(); ++i)
            for (size_t j = 0; j < g.c_.size(); ++j)
                r[i + j] += f.c_[i] * g.c_[j];
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc;  // Horner
        for (size_t k = c_.size(); k-- > 0;)
            acc = acc * x + Rational(c_[k]);
        return acc;
    }

private:
    std::vector<Int> c_;  // c_[k] * a^k

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// p(a) + b*q(a): the canonical representative modulo b^2 - a^2 + 1.
struct HyperbolaReduced {
    UniPoly p;
    UniPoly q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    friend bool operator==(const HyperbolaReduced&, const HyperbolaReduced&) = default;

    BiPoly to_bipoly() const {
        BiPoly f;
        for (size_t k = 0; k < p.coeffs().size(); ++k)
            f.add_term(Monomial{static_cast<int>(k), 0}, p.coeffs()[k]);
        for (size_t k = 0; k < q.coeffs().size(); ++k)
            f.add_term(Monomial{static_cast<int>(k), 1}, q.coeffs()[k]);
        return f;
    }

    Rational eval(const Rational& alpha, const Rational& beta) const {
        return p.eval(alpha) + beta * q.eval(alpha);
    }
};

inline HyperbolaReduced reduce_mod_hyperbola(const BiPoly& f) {
    // substitution weights (a^2 - 1)^k, built by repeated multiplication
    int max_k = 0;
    for (const auto& [m, c] : f.terms())
        if (m.eb / 2 > max_k) max_k = m.eb / 2;
    std::vector<UniPoly> weight(max_k + 1);
    weight[0] = UniPoly::constant(1);
    const UniPoly relation(std::vector<Int>{Int(-1), Int(0), Int(1)});  // a^2 - 1
    for (int k = 1; k <= max_k; ++k) weight[k] = weight[k - 1] * relation;

    UniPoly p, q;
    for (const auto& [m, c] : f.terms()) {
        // c * a^ea * (a^2 - 1)^(eb/2), i.e. the weight shifted up by ea
        std::vector<Int> coeffs(static_cast<size_t>(m.ea), Int(0));
        for (const Int& w : weight[m.eb / 2].coeffs()) coeffs.push_back(c * w);
        UniPoly contribution{std::move(coeffs)};
        if (m.eb % 2 == 0)
            p = p + contribution;
        else
            q = q + contribution;
    }
    return HyperbolaReduced{std::move(p), std::move(q)};
}

// Exact rational point with alpha^2 - beta^2 = 1.
class HyperbolaPoint {
public:
    HyperbolaPoint(Rational alpha, Rational beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (alpha_ * alpha_ - beta_ * beta_ != Rational(1))
            throw std::invalid_argument("HyperbolaPoint: alpha^2 - beta^2 != 1");
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    // beta == 0 is the identity rotation; the determinant/kernel
    // statements all assume this is false.
    bool degenerate() const { return beta_.is_zero(); }

private:
    Rational alpha_;
    Rational beta_;
};

// Rational parametrization alpha = (t^2+1)/(2t), beta = (t^2-1)/(2t).
// t = +-1 gives the degenerate point (+-1, 0) and is permitted; t = 0 is not.
inline HyperbolaPoint hyperbola_point(const Rational& t) {
    if (t.is_zero()) throw std::invalid_argument("hyperbola_point: t must be nonzero");
    const Rational t2 = t * t;
    const Rational two_t = Rational(2) * t;
    return HyperbolaPoint((t2 + Rational(1)) / two_t, (t2 - Rational(1)) / two_t);
}

}  // namespace dnamat
