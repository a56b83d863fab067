#pragma once

#include "delpezzo/poly_algebra.hpp"
#include "delpezzo/polynomial.hpp"

#include <random>
#include <vector>

namespace testutil {

using delpezzo::Polynomial;
using delpezzo::Rational;

// Deterministic random polynomial: up to `max_terms` monomials, exponents
// below `max_exp`, small rational coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                              int max_terms = 5, int max_exp = 4, bool allow_zero = true) {
    std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<int> coefd(-6, 6);
    std::uniform_int_distribution<int> dend(1, 4);
    Polynomial acc(vars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        delpezzo::Exponents e(vars.size());
        for (auto& x : e) x = expd(rng);
        int num = coefd(rng);
        if (num == 0) continue;
        Rational c = Rational(num) / Rational(dend(rng));
        acc = acc + Polynomial::monomial(vars, e, c);
    }
    return acc;
}

// Cofactor-expansion determinant: the independent oracle for Bareiss.
inline Polynomial cofactor_determinant(const std::vector<std::vector<Polynomial>>& m,
                                       const std::vector<std::string>& vars) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(vars, 1);
    if (n == 1) return m[0][0];
    Polynomial det(vars);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * cofactor_determinant(minor, vars);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace testutil
