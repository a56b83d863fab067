#pragma once

// Division, gcd, resultants and squarefreeness for the exact polynomial
// kernel.
//
// The multivariate gcd uses primitive-part recursion on the last variable
// present, with subresultant pseudo-remainder sequences in the main variable.
// Resultants are Sylvester determinants (p's coefficient rows first,
// descending coefficients), evaluated by fraction-free Bareiss elimination.

#include "delpezzo/polynomial.hpp"

#include <optional>
#include <vector>

namespace delpezzo {

// Single-divisor division in grlex order; returns the quotient iff the
// division is exact.
inline std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial q(p.variables());
    Polynomial r = p;
    const auto [de, dc] = d.leading_term();
    while (!r.is_zero()) {
        const auto [re, rc] = r.leading_term();
        Exponents diff(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) {
            diff[i] = re[i] - de[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Polynomial t = Polynomial::monomial(p.variables(), std::move(diff), rc / dc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

inline Polynomial divide_exact(const Polynomial& p, const Polynomial& d) {
    auto q = try_divide(p, d);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

inline bool divides(const Polynomial& d, const Polynomial& p) {
    if (p.is_zero()) return true;
    return try_divide(p, d).has_value();
}

// Substitutes a rational value for one variable; result keeps the variable
// list, with that variable no longer occurring.
inline Polynomial substitute_value(const Polynomial& p, std::size_t var, const Rational& val) {
    Polynomial::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        for (int k = 0; k < e[var]; ++k) coeff *= val;
        if (coeff == 0) continue;
        Exponents ne = e;
        ne[var] = 0;
        auto [it, inserted] = out.try_emplace(std::move(ne), coeff);
        if (!inserted) it->second += coeff;
    }
    return Polynomial(p.variables(), std::move(out));
}

namespace detail {

// Leading coefficient wrt one variable, as a polynomial free of it.
inline Polynomial lc_in(const Polynomial& p, std::size_t v) {
    return p.coefficient_of(v, p.degree_in(v));
}

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A rem B, reducing in v.
inline Polynomial prem(const Polynomial& A, const Polynomial& B, std::size_t v) {
    int db = B.degree_in(v);
    if (db < 0) throw std::domain_error("pseudo-remainder by zero");
    Polynomial lb = lc_in(B, v);
    Polynomial R = A;
    int steps_allowed = A.degree_in(v) - db + 1;
    int steps = 0;
    while (!R.is_zero() && R.degree_in(v) >= db) {
        int dr = R.degree_in(v);
        Polynomial lr = lc_in(R, v);
        Exponents shift(R.variables().size(), 0);
        shift[v] = dr - db;
        Polynomial xs = Polynomial::monomial(R.variables(), shift, 1);
        R = R * lb - lr * xs * B;
        ++steps;
    }
    // Normalize to the exact classical prem power.
    for (; steps < steps_allowed; ++steps) R = R * lb;
    return R;
}

Polynomial gcd_impl(const Polynomial& p, const Polynomial& q);

inline Polynomial content_in(const Polynomial& p, std::size_t v) {
    Polynomial c(p.variables());
    for (int k = 0; k <= p.degree_in(v); ++k) {
        Polynomial coeff = p.coefficient_of(v, k);
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff : gcd_impl(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

inline Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
    return divide_exact(p, content_in(p, v));
}

// Subresultant PRS gcd of A, B primitive wrt v. Returns a primitive gcd.
inline Polynomial subresultant_gcd(Polynomial A, Polynomial B, std::size_t v) {
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    if (B.degree_in(v) == 0) return Polynomial::constant(A.variables(), 1);
    Polynomial g = Polynomial::constant(A.variables(), 1);
    Polynomial h = g;
    while (true) {
        int delta = A.degree_in(v) - B.degree_in(v);
        Polynomial R = prem(A, B, v);
        if (R.is_zero()) return primitive_part_in(B, v);
        if (R.degree_in(v) == 0) return Polynomial::constant(A.variables(), 1);
        A = B;
        B = divide_exact(R, g * h.pow(delta));
        g = lc_in(A, v);
        if (delta > 0) h = divide_exact(g.pow(delta), h.pow(delta - 1));
    }
}

inline Polynomial gcd_impl(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    if (p.is_constant() || q.is_constant()) return Polynomial::constant(p.variables(), 1);
    // Last variable occurring in either argument.
    std::size_t v = p.variables().size();
    for (std::size_t i = p.variables().size(); i-- > 0;) {
        if (p.involves(i) || q.involves(i)) {
            v = i;
            break;
        }
    }
    if (!p.involves(v)) return gcd_impl(p, content_in(q, v));
    if (!q.involves(v)) return gcd_impl(q, content_in(p, v));
    Polynomial cp = content_in(p, v);
    Polynomial cq = content_in(q, v);
    Polynomial c = gcd_impl(cp, cq);
    Polynomial gp = subresultant_gcd(divide_exact(p, cp), divide_exact(q, cq), v);
    return c * gp;
}

}  // namespace detail

namespace detail {

// Scales to coprime integer coefficients with positive leading coefficient.
inline Polynomial make_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        Int d = denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    Polynomial out = p * (Rational(den_lcm) / Rational(num_gcd));
    if (out.leading_term().second < 0) out = -out;
    return out;
}

}  // namespace detail

// Greatest common divisor, primitive, normalized to leading coefficient 1
// under grlex. gcd(0, q) is the normalized q; gcd(0, 0) = 0.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
    if (p.variables() != q.variables()) throw std::invalid_argument("variable-list mismatch");
    Polynomial g = detail::gcd_impl(p, q);
    if (g.is_zero()) return g;
    return g * (Rational(1) / g.leading_term().second);
}

// Integer-primitive gcd for internal pipelines: avoids the monic
// normalization that spreads rational denominators through every
// downstream coefficient operation.
inline Polynomial gcd_primitive(const Polynomial& p, const Polynomial& q) {
    if (p.variables() != q.variables()) throw std::invalid_argument("variable-list mismatch");
    Polynomial a = p.is_zero() ? p : detail::make_primitive(p);
    Polynomial b = q.is_zero() ? q : detail::make_primitive(q);
    Polynomial g = detail::gcd_impl(a, b);
    if (g.is_zero()) return g;
    return detail::make_primitive(g);
}

// True iff p has no repeated factor: for every variable v, gcd(p, dp/dv)
// must be free of v.
inline bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefreeness of the zero polynomial");
    for (std::size_t v = 0; v < p.variables().size(); ++v) {
        if (!p.involves(v)) continue;
        Polynomial g = gcd(p, p.derivative(v));
        if (g.degree_in(v) > 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Determinants and resultants.

// Fraction-free Bareiss determinant of a square matrix of polynomials.
inline Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m,
                                      const std::vector<std::string>& vars) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(vars, 1);
    int sign = 1;
    Polynomial prev = Polynomial::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(vars);  // singular
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = Polynomial(vars);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

// Sylvester matrix wrt the given variable: p's coefficient rows first,
// coefficients in descending order.
inline std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                                             std::size_t v) {
    int dp = p.degree_in(v);
    int dq = q.degree_in(v);
    if (dp < 1 || dq < 1) throw std::invalid_argument("resultant requires positive degree in the variable");
    const auto& vars = p.variables();
    std::size_t n = static_cast<std::size_t>(dp + dq);
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(vars)));
    for (int row = 0; row < dq; ++row)
        for (int k = 0; k <= dp; ++k) m[row][row + k] = p.coefficient_of(v, dp - k);
    for (int row = 0; row < dp; ++row)
        for (int k = 0; k <= dq; ++k) m[dq + row][row + k] = q.coefficient_of(v, dq - k);
    return m;
}

namespace detail {

// Bivariate resultants by evaluation and Newton interpolation: evaluate the
// second variable at rational nodes where neither leading coefficient drops,
// take cheap constant-entry determinants, interpolate the result.
inline Polynomial resultant_bivariate(const Polynomial& p, const Polynomial& q, std::size_t v,
                                      std::size_t u) {
    const auto& vars = p.variables();
    int dpv = p.degree_in(v), dqv = q.degree_in(v);
    int dpu = p.degree_in(u), dqu = q.degree_in(u);
    int bound = dqv * dpu + dpv * dqu;
    Polynomial lp = lc_in(p, v), lq = lc_in(q, v);

    std::vector<Rational> nodes;
    std::vector<Rational> values;
    for (long t = 0; static_cast<int>(nodes.size()) <= bound; ++t) {
        Rational u0 = (t % 2 == 0) ? Rational(t / 2) : Rational(-(t / 2 + 1));
        if (substitute_value(lp, u, u0).is_zero()) continue;
        if (substitute_value(lq, u, u0).is_zero()) continue;
        Polynomial pe = substitute_value(p, u, u0);
        Polynomial qe = substitute_value(q, u, u0);
        Polynomial r = bareiss_determinant(sylvester_matrix(pe, qe, v), vars);
        nodes.push_back(u0);
        values.push_back(r.constant_term());
    }

    // Newton divided differences
    const std::size_t n = nodes.size();
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    Polynomial acc(vars);
    Polynomial basis = Polynomial::constant(vars, 1);
    Polynomial uvar = Polynomial::variable(vars, u);
    for (std::size_t i = 0; i < n; ++i) {
        acc = acc + basis * dd[i];
        if (i + 1 < n) basis = basis * (uvar - Polynomial::constant(vars, nodes[i]));
    }
    return acc;
}

}  // namespace detail

inline Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t v) {
    if (p.variables() != q.variables()) throw std::invalid_argument("variable-list mismatch");
    // variables genuinely involved besides v
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
        if (i == v) continue;
        if (p.involves(i) || q.involves(i)) others.push_back(i);
    }
    if (others.size() == 1 && (p.degree_in(v) + q.degree_in(v)) > 4)
        return detail::resultant_bivariate(p, q, v, others.front());
    return bareiss_determinant(sylvester_matrix(p, q, v), p.variables());
}

inline Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var) {
    return resultant(p, q, p.var_index(var));
}

// ---------------------------------------------------------------------------
// Univariate rational roots (for the singular-point search).

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;  // root, multiplicity
    Polynomial cofactor;                          // leftover after dividing roots out
};

namespace detail {

inline std::vector<Int> divisors_up_to_cap(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> primes;
    Int m = n;
    for (Int d = 2; d * d <= m && d < 1000000; ++d) {
        while (m % d == 0) {
            primes.push_back(d);
            m /= d;
        }
    }
    if (m > 1) primes.push_back(m);  // may be composite past the cap; divisors then incomplete
    std::vector<Int> divs{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t count = j - i;
        std::vector<Int> next;
        for (const Int& d : divs) {
            Int pk = 1;
            for (std::size_t k = 0; k <= count; ++k) {
                next.push_back(d * pk);
                pk *= primes[i];
            }
        }
        divs = std::move(next);
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

}  // namespace detail

// All rational roots of a polynomial univariate in variable v, with
// multiplicities, plus the rootless cofactor.
inline RationalRoots rational_roots(const Polynomial& p, std::size_t v) {
    for (std::size_t i = 0; i < p.variables().size(); ++i)
        if (i != v && p.involves(i)) throw std::invalid_argument("polynomial is not univariate in the variable");
    RationalRoots out;
    out.cofactor = p;
    if (p.is_zero() || p.is_constant()) return out;

    Polynomial work = p;
    // Root at zero.
    int zero_mult = 0;
    while (!work.is_zero() && work.constant_term() == 0 && work.involves(v)) {
        Exponents e(p.variables().size(), 0);
        e[v] = 1;
        work = divide_exact(work, Polynomial::monomial(p.variables(), e, 1));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

    // Clear denominators to an integer polynomial.
    Int den_lcm = 1;
    for (const auto& [e, c] : work.terms()) {
        Int d = denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    Polynomial ip = work * Rational(den_lcm);

    if (ip.degree_in(v) >= 1) {
        Int a0 = numerator(ip.constant_term());
        Int an = numerator(detail::lc_in(ip, v).constant_term());
        auto ps = detail::divisors_up_to_cap(a0);
        auto qs = detail::divisors_up_to_cap(an);
        std::vector<Rational> candidates;
        for (const Int& pp : ps)
            for (const Int& qq : qs) {
                Rational r = Rational(pp) / Rational(qq);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rational& r : candidates) {
            int mult = 0;
            while (substitute_value(work, v, r).is_zero() && work.involves(v)) {
                // divide by (x - r)
                Exponents e(p.variables().size(), 0);
                e[v] = 1;
                Polynomial lin = Polynomial::monomial(p.variables(), e, 1) -
                                 Polynomial::constant(p.variables(), r);
                work = divide_exact(work, lin);
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
        }
    }
    out.cofactor = work;
    return out;
}

}  // namespace delpezzo
