#pragma once

// Weighted projective space numerics: weight-vector hygiene, monomial bases,
// quasi-smoothness on the affine cone, and the adjunction invariants K², g.

#include "delpezzo/poly_algebra.hpp"
#include "delpezzo/polynomial.hpp"

#include <optional>
#include <vector>

namespace delpezzo {

struct WeightedSpace {
    std::vector<int> weights;

    explicit WeightedSpace(std::vector<int> w) : weights(std::move(w)) {
        if (weights.size() < 2) throw std::invalid_argument("weighted space needs at least two coordinates");
        for (int x : weights)
            if (x < 1) throw std::invalid_argument("weights must be positive");
    }

    std::size_t dimension_plus_one() const { return weights.size(); }

    // Well-formed: every n-subset of the n+1 weights is coprime.
    bool is_well_formed() const {
        for (std::size_t skip = 0; skip < weights.size(); ++skip) {
            Int g = 0;
            for (std::size_t i = 0; i < weights.size(); ++i) {
                if (i == skip) continue;
                g = boost::multiprecision::gcd(g, Int(weights[i]));
            }
            if (g > 1) return false;
        }
        return true;
    }
};

// Common weighted degree of all terms, or nullopt if terms disagree (or p = 0).
inline std::optional<long> weighted_degree(const WeightedSpace& space, const Polynomial& p) {
    if (p.variables().size() != space.weights.size())
        throw std::invalid_argument("polynomial arity does not match the weight vector");
    std::optional<long> deg;
    for (const auto& [e, c] : p.terms()) {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * space.weights[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

struct WeightedForm {
    WeightedSpace space;
    Polynomial poly;
    long degree;

    WeightedForm(WeightedSpace s, Polynomial p, long d)
        : space(std::move(s)), poly(std::move(p)), degree(d) {
        auto wd = weighted_degree(space, poly);
        if (!wd || *wd != degree) throw std::invalid_argument("polynomial is not homogeneous of the stated weighted degree");
    }
};

// All exponent vectors e with e·w = d, leading grlex term first.
inline std::vector<Exponents> monomial_basis(const WeightedSpace& space, long d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<Exponents> out;
    Exponents current(space.weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long remaining) -> void {
        if (i + 1 == space.weights.size()) {
            if (remaining % space.weights[i] == 0) {
                current[i] = static_cast<int>(remaining / space.weights[i]);
                out.push_back(current);
                current[i] = 0;
            }
            return;
        }
        for (long k = 0; k * space.weights[i] <= remaining; ++k) {
            current[i] = static_cast<int>(k);
            self(self, i + 1, remaining - k * space.weights[i]);
        }
        current[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
        return GrlexLess{}(b, a);  // descending
    });
    return out;
}

struct SingularStratum {
    std::vector<std::size_t> coordinates;  // indices spanning the stratum
    int order;                             // cyclic group order
};

// Coordinate strata with non-trivial isotropy: subsets S with gcd(w_S) > 1,
// maximal among subsets sharing that gcd.
inline std::vector<SingularStratum> singular_strata(const WeightedSpace& space) {
    if (!space.is_well_formed()) throw std::invalid_argument("ill-formed weighted space");
    const std::size_t n = space.weights.size();
    std::vector<SingularStratum> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) g = boost::multiprecision::gcd(g, Int(space.weights[i]));
        if (g <= 1) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j) {
            if (mask & (1u << j)) continue;
            Int g2 = boost::multiprecision::gcd(g, Int(space.weights[j]));
            if (g2 == g) maximal = false;
        }
        if (!maximal) continue;
        SingularStratum s;
        s.order = static_cast<int>(g);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.coordinates.push_back(i);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const SingularStratum& a, const SingularStratum& b) {
        return a.coordinates < b.coordinates;
    });
    return out;
}

// Quasi-smoothness of {F = 0} at a point given on the affine cone (the chart
// coordinate set to 1). True iff some cone partial derivative is nonzero.
inline bool quasi_smooth_at(const WeightedForm& F, std::size_t chart, const AffinePoint& pt) {
    const auto& poly = F.poly;
    if (pt.size() != poly.variables().size()) throw std::invalid_argument("point arity mismatch");
    if (chart >= pt.size() || pt[chart] != 1)
        throw std::invalid_argument("chart coordinate must be set to 1");
    if (poly.evaluate(pt) != 0) throw std::invalid_argument("point does not lie on the hypersurface");
    for (std::size_t v = 0; v < poly.variables().size(); ++v) {
        if (poly.derivative(v).evaluate(pt) != 0) return true;
    }
    return false;
}

struct AdjunctionInvariants {
    Rational k_square;
    Rational g;  // K² + 1
};

// K² of a quasi-smooth complete intersection of the given degrees:
// (Πd)(Σw − Σd)² / Πw. Exposed for one or two degrees.
inline AdjunctionInvariants k_square(const WeightedSpace& space, const std::vector<long>& degrees) {
    if (degrees.empty() || degrees.size() > 2)
        throw std::invalid_argument("k_square supports hypersurfaces and 2-element complete intersections");
    long sum_w = 0;
    for (int w : space.weights) sum_w += w;
    long sum_d = 0;
    Rational prod_d = 1;
    for (long d : degrees) {
        sum_d += d;
        prod_d *= d;
    }
    long amplitude = sum_w - sum_d;
    if (amplitude <= 0) throw std::domain_error("anti-canonical degree is not ample: sum of weights must exceed sum of degrees");
    Rational prod_w = 1;
    for (int w : space.weights) prod_w *= w;
    Rational k2 = prod_d * Rational(amplitude) * Rational(amplitude) / prod_w;
    return {k2, k2 + 1};
}

struct GenusSystemInvariants {
    long dim_cg;  // 3g - 3
    long cg2;     // 4g - 4
    long dim_dg;  // g
    long dg2;     // 2g - 2
};

inline GenusSystemInvariants genus_system_invariants(long g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    return {3 * g - 3, 4 * g - 4, g, 2 * g - 2};
}

}  // namespace delpezzo
