#pragma once

// Sparse bivariate polynomials over arbitrary-precision integers.
//
// A BiPoly is a finite map from exponent pairs (ea, eb) to nonzero
// integer coefficients, representing  sum c * a^ea * b^eb  in the two
// formal variables `a` and `b`. The map is kept canonical (no zero
// coefficient is ever stored), so two polynomials are equal exactly
// when their term maps are equal, and the zero polynomial is the empty
// map.
//
// Terms are ordered by total degree descending, ties broken by the
// exponent of `a` descending. That order drives both storage and the
// canonical string form, e.g. "a^2 + b^2 - 1".

#include <dnamat/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dnamat {

struct Monomial {
    int ea = 0;
    int eb = 0;

    int degree() const { return ea + eb; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded order: higher total degree first, then higher a-exponent.
struct TermOrder {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() > y.degree();
        return x.ea > y.ea;
    }
};

class BiPoly {
public:
    using TermMap = std::map<Monomial, Int, TermOrder>;

    BiPoly() = default;

    static BiPoly constant(Int c) { return term(std::move(c), 0, 0); }

    static BiPoly term(Int c, int ea, int eb) {
        if (ea < 0 || eb < 0)
            throw std::invalid_argument("BiPoly: negative exponent");
        BiPoly f;
        if (c != 0) f.terms_.emplace(Monomial{ea, eb}, std::move(c));
        return f;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    Int coeff(int ea, int eb) const {
        auto it = terms_.find(Monomial{ea, eb});
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Total degree; -1 for the zero polynomial.
    int total_degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    // True when nonzero and every term has the given total degree.
    bool homogeneous(int degree) const {
        if (terms_.empty()) return false;
        for (const auto& [m, c] : terms_)
            if (m.degree() != degree) return false;
        return true;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    friend BiPoly operator-(const BiPoly& f) {
        BiPoly r;
        for (const auto& [m, c] : f.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend BiPoly operator+(const BiPoly& f, const BiPoly& g) {
        BiPoly r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }

    friend BiPoly operator-(const BiPoly& f, const BiPoly& g) {
        BiPoly r = f;
        for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
        return r;
    }

    friend BiPoly operator*(const BiPoly& f, const BiPoly& g) {
        BiPoly r;
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_)
                r.add_term(Monomial{mf.ea + mg.ea, mf.eb + mg.eb}, cf * cg);
        return r;
    }

    friend BiPoly operator*(const BiPoly& f, const Int& c) {
        BiPoly r;
        if (c == 0) return r;
        for (const auto& [m, cf] : f.terms_) r.terms_.emplace(m, cf * c);
        return r;
    }
    friend BiPoly operator*(const Int& c, const BiPoly& f) { return f * c; }

    BiPoly& operator+=(const BiPoly& g) { return *this = *this + g; }
    BiPoly& operator-=(const BiPoly& g) { return *this = *this - g; }
    BiPoly& operator*=(const BiPoly& g) { return *this = *this * g; }

    // Exact substitution a := alpha, b := beta.
    Rational eval(const Rational& alpha, const Rational& beta) const {
        int max_a = 0, max_b = 0;
        for (const auto& [m, c] : terms_) {
            if (m.ea > max_a) max_a = m.ea;
            if (m.eb > max_b) max_b = m.eb;
        }
        std::vector<Rational> pa(max_a + 1), pb(max_b + 1);
        pa[0] = Rational(1);
        for (int k = 1; k <= max_a; ++k) pa[k] = pa[k - 1] * alpha;
        pb[0] = Rational(1);
        for (int k = 1; k <= max_b; ++k) pb[k] = pb[k - 1] * beta;
        Rational acc;
        for (const auto& [m, c] : terms_)
            acc += Rational(c) * pa[m.ea] * pb[m.eb];
        return acc;
    }

    // Canonical form invariant; exercised directly by the test suite.
    bool is_canonical() const {
        for (const auto& [m, c] : terms_)
            if (c == 0 || m.ea < 0 || m.eb < 0) return false;
        return true;
    }

    std::string to_string() const;
    static BiPoly parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& f) {
        return os << f.to_string();
    }

private:
    TermMap terms_;
};

inline BiPoly pow(const BiPoly& base, unsigned exp) {
    BiPoly r = BiPoly::constant(1);
    for (unsigned k = 0; k < exp; ++k) r *= base;
    return r;
}

// ---- canonical string form ----
//
// term  := [-]coeff | [-][coeff] apart [bpart] | [-][coeff] bpart
// apart := 'a' ['^' digits]
// bpart := 'b' ['^' digits]
//
// Terms appear in the canonical order joined by " + " or " - "; a
// magnitude-1 coefficient is dropped in front of a variable part.

inline std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        Int mag = negative ? Int(-c) : c;
        const bool has_vars = m.ea > 0 || m.eb > 0;
        if (!has_vars || mag != 1) out += mag.get_str();
        if (m.ea > 0) {
            out += 'a';
            if (m.ea > 1) out += '^' + std::to_string(m.ea);
        }
        if (m.eb > 0) {
            out += 'b';
            if (m.eb > 1) out += '^' + std::to_string(m.eb);
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("BiPoly: " + what + " at position " +
                                    std::to_string(pos) + " in '" + std::string(s) + "'");
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    bool try_consume(std::string_view token) {
        if (s.substr(pos, token.size()) != token) return false;
        pos += token.size();
        return true;
    }

    // digits -> non-negative integer (exponents stay small)
    int parse_small_number() {
        size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected digits");
        if (pos - start > 6) fail("exponent too large");
        return std::stoi(std::string(s.substr(start, pos - start)));
    }

    Int parse_magnitude() {
        size_t start = pos;
        while (!done() && peek() >= '0' && peek() <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return Int(std::string(s.substr(start, pos - start)));
    }

    int parse_exponent() {  // after a variable letter
        if (!done() && peek() == '^') {
            ++pos;
            int e = parse_small_number();
            if (e < 0) fail("negative exponent");
            return e;
        }
        return 1;
    }

    void parse_term(BiPoly& acc, bool negate) {
        Int mag(1);
        bool any = false;
        if (!done() && peek() >= '0' && peek() <= '9') {
            mag = parse_magnitude();
            any = true;
        }
        int ea = 0, eb = 0;
        if (!done() && peek() == 'a') {
            ++pos;
            ea = parse_exponent();
            any = true;
        }
        if (!done() && peek() == 'b') {
            ++pos;
            eb = parse_exponent();
            any = true;
        }
        if (!any) fail("expected a term");
        acc.add_term(Monomial{ea, eb}, negate ? Int(-mag) : mag);
    }

    BiPoly run() {
        BiPoly acc;
        if (s.empty()) fail("empty input");
        if (s == "0") return acc;
        bool negate = try_consume("-");
        parse_term(acc, negate);
        while (!done()) {
            if (try_consume(" + "))
                parse_term(acc, false);
            else if (try_consume(" - "))
                parse_term(acc, true);
            else
                fail("expected ' + ' or ' - '");
        }
        return acc;
    }
};

}  // namespace detail

inline BiPoly BiPoly::parse(std::string_view s) {
    return detail::PolyParser{s}.run();
}

}  // namespace dnamat
