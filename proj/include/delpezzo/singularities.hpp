#pragma once

// Exact classification of isolated singularity germs.
//
// Plane-curve germs are recognized through multiplicity, Milnor number and
// the root profile of the degree-3 tangent cone; surface double points are
// reduced by exact square splitting; the index-2 quotient rules turn an
// A(2n+1) center into K(n).
//
// The intersection-multiplicity engine is the classical recursive reduction
// for plane curves: swap to order the restrictions to {y=0}, cancel leading
// x-terms, split off coordinate factors.

#include "delpezzo/poly_algebra.hpp"
#include "delpezzo/polynomial.hpp"

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

struct SingularityType {
    enum class Tag { Smooth, A, D, E, K, NotSimple, NonIsolated, Undetermined };

    Tag tag = Tag::Smooth;
    int index = 0;                  // n of A(n)/D(n)/E(n)/K(n); truncation order for Undetermined
    std::optional<long> milnor{};   // stored when the classifier computed it

    static SingularityType smooth() { return {Tag::Smooth, 0, std::nullopt}; }
    static SingularityType A(int n, std::optional<long> mu = std::nullopt) {
        if (n < 1) throw std::invalid_argument("A(n) requires n >= 1");
        return {Tag::A, n, mu};
    }
    static SingularityType D(int n, std::optional<long> mu = std::nullopt) {
        if (n < 4) throw std::invalid_argument("D(n) requires n >= 4");
        return {Tag::D, n, mu};
    }
    static SingularityType E(int n, std::optional<long> mu = std::nullopt) {
        if (n < 6 || n > 8) throw std::invalid_argument("E(n) requires n in {6,7,8}");
        return {Tag::E, n, mu};
    }
    static SingularityType K(int n) {
        if (n < 1) throw std::invalid_argument("K(n) requires n >= 1");
        return {Tag::K, n, std::nullopt};
    }
    static SingularityType not_simple() { return {Tag::NotSimple, 0, std::nullopt}; }
    static SingularityType non_isolated() { return {Tag::NonIsolated, 0, std::nullopt}; }
    static SingularityType undetermined(int order) { return {Tag::Undetermined, order, std::nullopt}; }

    bool is_ade() const { return tag == Tag::A || tag == Tag::D || tag == Tag::E; }
    bool operator==(const SingularityType& o) const { return tag == o.tag && index == o.index; }
    bool operator!=(const SingularityType& o) const { return !(*this == o); }

    std::string str() const {
        switch (tag) {
            case Tag::Smooth: return "smooth";
            case Tag::A: return "A" + std::to_string(index);
            case Tag::D: return "D" + std::to_string(index);
            case Tag::E: return "E" + std::to_string(index);
            case Tag::K: return "K" + std::to_string(index);
            case Tag::NotSimple: return "not_simple";
            case Tag::NonIsolated: return "non_isolated";
            case Tag::Undetermined: return "undetermined@" + std::to_string(index);
        }
        return "?";
    }
};

// A polynomial germ at the origin, in 2 or 3 variables.
struct Germ {
    Polynomial poly;

    explicit Germ(Polynomial p) : poly(std::move(p)) {
        std::size_t n = poly.variables().size();
        if (n != 2 && n != 3) throw std::invalid_argument("germ must have 2 or 3 variables");
        if (poly.constant_term() != 0) throw std::invalid_argument("germ must vanish at the origin");
    }
};

// Lowest total degree of a term; 1 means the germ is smooth at the origin.
inline long multiplicity(const Germ& f) {
    if (f.poly.is_zero()) throw std::domain_error("multiplicity of the zero germ");
    return f.poly.order();
}

constexpr long kInfinity = std::numeric_limits<long>::max();

namespace detail {

// ord_x of a polynomial that only involves variable x (index vx).
inline long order_in(const Polynomial& p, std::size_t vx) {
    long best = -1;
    for (const auto& [e, c] : p.terms()) {
        if (best < 0 || e[vx] < best) best = e[vx];
    }
    return best;
}

// Scales to coprime integer coefficients. The intersection number is
// invariant under unit scaling; without this the reduction loop grows
// coefficients exponentially.
inline Polynomial scale_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        Int d = denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    return p * (Rational(den_lcm) / Rational(num_gcd));
}

inline long intersection_multiplicity_impl(Polynomial p, Polynomial q) {
    // both bivariate over the same list {x, y}
    const std::size_t vx = 0, vy = 1;
    if (p.is_zero() || q.is_zero()) return kInfinity;
    if (p.constant_term() != 0 || q.constant_term() != 0) return 0;
    // a common component through the origin means an infinite intersection
    // number; one away from the origin contributes nothing and is divided out
    // (the reduction loop below preserves coprimality, which is also what
    // guarantees its termination)
    Polynomial g = gcd_primitive(p, q);
    if (!g.is_constant()) {
        if (g.constant_term() == 0) return kInfinity;
        p = divide_exact(p, g);
        q = divide_exact(q, g);
    }
    long acc = 0;
    while (true) {
        if (p.is_zero() || q.is_zero()) return kInfinity;
        if (p.constant_term() != 0 || q.constant_term() != 0) return acc;
        Polynomial a = substitute_value(p, vy, 0);
        Polynomial b = substitute_value(q, vy, 0);
        if (a.is_zero() && b.is_zero()) return kInfinity;  // y divides both
        if (a.is_zero()) {
            // p = y * p'; I(y, q) = ord_x q(x, 0)
            Exponents e(p.variables().size(), 0);
            e[vy] = 1;
            p = divide_exact(p, Polynomial::monomial(p.variables(), e, 1));
            acc += order_in(b, vx);
            continue;
        }
        if (b.is_zero()) {
            Exponents e(p.variables().size(), 0);
            e[vy] = 1;
            q = divide_exact(q, Polynomial::monomial(q.variables(), e, 1));
            acc += order_in(a, vx);
            continue;
        }
        if (a.degree_in(vx) > b.degree_in(vx)) {
            std::swap(p, q);
            std::swap(a, b);
        }
        // cancel b's leading x-term with a's
        int da = a.degree_in(vx), db = b.degree_in(vx);
        Rational la = a.coefficient_of(vx, da).constant_term();
        Rational lb = b.coefficient_of(vx, db).constant_term();
        Exponents shift(p.variables().size(), 0);
        shift[vx] = db - da;
        q = scale_primitive(q * la - p * lb * Polynomial::monomial(p.variables(), shift, 1));
    }
}

}  // namespace detail

// Local intersection number of two bivariate germs at the origin;
// kInfinity when they share a component through it.
inline long intersection_multiplicity(const Germ& f, const Germ& g) {
    if (f.poly.variables().size() != 2 || g.poly.variables().size() != 2)
        throw std::invalid_argument("intersection multiplicity needs bivariate germs");
    if (f.poly.variables() != g.poly.variables()) throw std::invalid_argument("variable-list mismatch");
    return detail::intersection_multiplicity_impl(f.poly, g.poly);
}

// Raw version used on partial derivatives (which need not vanish at 0).
inline long intersection_multiplicity_raw(const Polynomial& p, const Polynomial& q) {
    return detail::intersection_multiplicity_impl(p, q);
}

// Milnor number of a bivariate germ: I(f_x, f_y); kInfinity <=> non-isolated.
inline long milnor_number(const Germ& f) {
    if (f.poly.variables().size() != 2) throw std::invalid_argument("milnor number needs a bivariate germ");
    return intersection_multiplicity_raw(f.poly.derivative(std::size_t(0)), f.poly.derivative(std::size_t(1)));
}

namespace detail {

// Number of distinct projective roots of a nonzero binary form c(x, y).
inline int distinct_binary_roots(const Polynomial& form) {
    // dehomogenize in x; track the root at infinity (y | form)
    const std::size_t vx = 0, vy = 1;
    int deg = static_cast<int>(form.total_degree());
    Polynomial r = substitute_value(form, vy, 1);
    int finite_deg = r.degree_in(vx);
    int at_infinity = deg - finite_deg;  // multiplicity of (1:0)
    int distinct = at_infinity > 0 ? 1 : 0;
    if (finite_deg >= 1) {
        Polynomial g = gcd(r, r.derivative(vx));
        distinct += finite_deg - g.degree_in(vx);
    } else {
        // form = c*y^deg, only the infinite root
    }
    return distinct;
}

}  // namespace detail

// ADE recognition for plane-curve germs.
inline SingularityType classify_curve_germ(const Germ& f) {
    if (f.poly.variables().size() != 2) throw std::invalid_argument("curve germ must be bivariate");
    if (f.poly.is_zero()) throw std::domain_error("zero germ");
    long mult = multiplicity(f);
    if (mult == 1) return SingularityType::smooth();
    long mu = milnor_number(f);
    if (mu == kInfinity) return SingularityType::non_isolated();
    if (mult == 2) return SingularityType::A(static_cast<int>(mu), mu);
    if (mult == 3) {
        Polynomial cone = f.poly.homogeneous_part(3);
        int distinct = detail::distinct_binary_roots(cone);
        if (distinct == 3) {
            if (mu != 4) throw std::logic_error("triple-point germ with three distinct tangents must have milnor number 4");
            return SingularityType::D(4, mu);
        }
        if (distinct == 2) return SingularityType::D(static_cast<int>(mu), mu);
        // triple tangent line
        if (mu >= 6 && mu <= 8) return SingularityType::E(static_cast<int>(mu), mu);
        return SingularityType::not_simple();
    }
    return SingularityType::not_simple();
}

// ---------------------------------------------------------------------------
// Surface double points via exact square splitting.

namespace detail {

// Elementary unimodular changes x_i <- x_i + x_j, tried in a fixed order
// until the quadratic part acquires a nonzero pure square.
inline std::optional<std::size_t> pure_square_variable(const Polynomial& p,
                                                       const std::vector<std::size_t>& active) {
    for (std::size_t v : active) {
        Exponents e(p.variables().size(), 0);
        e[v] = 2;
        auto it = p.terms().find(e);
        if (it != p.terms().end()) return v;
    }
    return std::nullopt;
}

inline Polynomial apply_shear(const Polynomial& p, std::size_t i, std::size_t j) {
    // x_i -> x_i + x_j
    std::map<std::string, Polynomial> b;
    b.emplace(p.variables()[i],
              Polynomial::variable(p.variables(), i) + Polynomial::variable(p.variables(), j));
    return p.substitute(b).with_variables(p.variables());
}

}  // namespace detail

struct SurfaceClassification {
    SingularityType type;
    int squares_split = 0;   // rank of the quadratic part
    bool truncated = false;  // whether terms above the cutoff were dropped
};

// Splitting-lemma reduction of a trivariate germ, truncated at total order N.
inline SurfaceClassification classify_surface_double_point_full(const Germ& f, int order_n = 16) {
    if (f.poly.variables().size() != 3) throw std::invalid_argument("surface germ must be trivariate");
    if (f.poly.is_zero()) throw std::domain_error("zero germ");
    if (order_n < 6) throw std::invalid_argument("truncation order too small");
    SurfaceClassification out;
    if (multiplicity(f) == 1) {
        out.type = SingularityType::smooth();
        return out;
    }

    Polynomial work = f.poly;
    std::vector<std::size_t> active{0, 1, 2};
    bool truncated = false;

    while (!active.empty()) {
        Polynomial quad = work.homogeneous_part(2);
        if (quad.is_zero()) break;
        // ensure a pure square exists among the active variables
        auto sq = detail::pure_square_variable(quad, active);
        if (!sq) {
            bool found = false;
            for (std::size_t i : active) {
                for (std::size_t j : active) {
                    if (i == j) continue;
                    Polynomial sheared = detail::apply_shear(work, i, j);
                    if (detail::pure_square_variable(sheared.homogeneous_part(2), active)) {
                        work = sheared;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) throw std::logic_error("no shear exposes a square in a nonzero quadratic form");
            sq = detail::pure_square_variable(work.homogeneous_part(2), active);
        }
        std::size_t u = *sq;
        Exponents ue(work.variables().size(), 0);
        ue[u] = 2;
        Rational c = work.terms().at(ue);

        // kill the u-linear coefficient order by order
        while (true) {
            Polynomial b = work.coefficient_of(u, 1);
            if (b.is_zero()) break;
            if (b.order() + 1 > order_n) {
                truncated = true;
                break;
            }
            Polynomial s = b * (Rational(-1) / (2 * c));
            std::map<std::string, Polynomial> sub;
            sub.emplace(work.variables()[u], Polynomial::variable(work.variables(), u) + s);
            work = work.substitute(sub).with_variables(work.variables());
            truncated |= work.truncate_above(order_n);
        }

        // residual: drop everything involving u (the u-block is unit * u^2)
        Polynomial::TermMap residual;
        for (const auto& [e, coeff] : work.terms()) {
            if (e[u] == 0) residual.emplace(e, coeff);
        }
        work = Polynomial(work.variables(), std::move(residual));
        active.erase(std::find(active.begin(), active.end(), u));
        ++out.squares_split;
    }

    out.truncated = truncated;
    const int remaining = static_cast<int>(active.size());

    if (remaining == 0) {
        out.type = SingularityType::A(1, 1);
        return out;
    }
    if (remaining == 3) {
        // multiplicity >= 3 is never simple; a repeated factor is the only
        // non-isolation we certify here
        out.type = is_squarefree(f.poly) ? SingularityType::not_simple() : SingularityType::non_isolated();
        return out;
    }
    if (remaining == 1) {
        if (work.is_zero()) {
            out.type = truncated ? SingularityType::undetermined(order_n) : SingularityType::non_isolated();
            return out;
        }
        long m = work.order();  // lowest exponent of the single remaining variable
        out.type = SingularityType::A(static_cast<int>(m - 1), m - 1);
        return out;
    }
    // remaining == 2: classify the residual plane-curve germ
    if (work.is_zero()) {
        out.type = truncated ? SingularityType::undetermined(order_n) : SingularityType::non_isolated();
        return out;
    }
    std::vector<std::string> curve_vars{work.variables()[active[0]], work.variables()[active[1]]};
    Polynomial::TermMap curve_terms;
    for (const auto& [e, coeff] : work.terms()) {
        curve_terms.emplace(Exponents{e[active[0]], e[active[1]]}, coeff);
    }
    Germ residual_germ(Polynomial(curve_vars, std::move(curve_terms)));
    SingularityType t = classify_curve_germ(residual_germ);
    if (truncated) {
        // A/D/E results below the determinacy bound are reliable; anything
        // else on a truncated residual is not.
        bool reliable = t.is_ade() && t.milnor && *t.milnor + 2 <= order_n;
        if (t.tag == SingularityType::Tag::NotSimple && residual_germ.poly.order() >= 4) reliable = true;
        if (!reliable) {
            out.type = SingularityType::undetermined(order_n);
            return out;
        }
    }
    out.type = t;
    return out;
}

inline SingularityType classify_surface_double_point(const Germ& f, int order_n = 16) {
    return classify_surface_double_point_full(f, order_n).type;
}

// Classifies a 2- or 3-variable germ by arity.
inline SingularityType classify_germ(const Germ& f, int order_n = 16) {
    return f.poly.variables().size() == 2 ? classify_curve_germ(f)
                                          : classify_surface_double_point(f, order_n);
}

// ---------------------------------------------------------------------------
// Index-2 quotient rules.

// Quotient of an A(2n+1) double point by the central symmetry: K(n).
// Anything else at a symmetry center violates the symmetric-center law.
inline SingularityType central_symmetry_quotient(const SingularityType& t) {
    if (t.tag != SingularityType::Tag::A || t.index % 2 == 0)
        throw std::invalid_argument("central-symmetry quotient is defined for A(odd) only, got " + t.str());
    return SingularityType::K(t.index / 2);
}

// The cyclic quotient 1/4(1,1) is the n = 1 case.
inline SingularityType quarter_one_one_quotient() { return SingularityType::K(1); }

// ---------------------------------------------------------------------------
// Symmetric-center verdict.

inline bool is_even_in_variable(const Polynomial& p, std::size_t v) {
    for (const auto& [e, c] : p.terms())
        if (e[v] % 2 != 0) return false;
    return true;
}

// Every term of even total degree, i.e. invariant under x -> -x.
inline bool is_centrally_symmetric(const Polynomial& p) {
    for (const auto& [e, c] : p.terms())
        if (Polynomial::total_degree(e) % 2 != 0) return false;
    return true;
}

struct SymmetricCenterVerdict {
    bool pass;
    SingularityType type;
};

// PASS iff the germ classifies as A(odd). The germ must be symmetric: even
// in its last variable, or centrally symmetric (the form the symmetry center
// of a double cover actually has).
inline SymmetricCenterVerdict check_symmetric_center(const Germ& f, int order_n = 16) {
    std::size_t last = f.poly.variables().size() - 1;
    if (!is_even_in_variable(f.poly, last) && !is_centrally_symmetric(f.poly))
        throw std::invalid_argument("germ is not symmetric");
    if (multiplicity(f) < 2) throw std::invalid_argument("germ is not singular at the origin");
    SingularityType t = classify_germ(f, order_n);
    bool pass = t.tag == SingularityType::Tag::A && t.index % 2 == 1;
    return {pass, t};
}

// ---------------------------------------------------------------------------
// Rational singular-point search on projective hypersurfaces.

struct ClassifiedPoint {
    std::vector<Rational> point;  // projective coordinates
    SingularityType type;
};

struct SingularScan {
    bool reduced = true;      // false: non-reduced input, NonIsolated globally
    bool complete = true;     // false when eliminants kept non-rational factors
    std::vector<ClassifiedPoint> points;
    std::vector<std::string> unclassified_factors;
    std::vector<std::string> notes;
};

// Zero-set-preserving reduction: divides out repeated factors (the gcd of p
// with all its partials), keeping every irreducible factor once.
inline Polynomial squarefree_reduction(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return p;
    Polynomial g = detail::scale_primitive(p);
    Polynomial base = g;
    for (std::size_t v = 0; v < p.variables().size(); ++v) {
        if (!p.involves(v)) continue;
        g = gcd_primitive(g, base.derivative(v));
        if (g.is_constant()) return base;
    }
    return detail::scale_primitive(divide_exact(base, g));
}

namespace detail {

// Solves a zero-dimensional affine system over Q by resultant cascades plus
// rational-root extraction. Extraneous candidates are filtered by direct
// evaluation. Sets `complete = false` whenever an eliminant keeps a factor
// without rational roots, or the elimination degenerates.
//
// Degrees are kept in check by scaling eliminants primitive, replacing them
// by their squarefree reductions (same zero set), and forming only a capped
// star of pairwise resultants per level: any subset of resultants still
// yields a candidate superset, and candidates are verified afterwards.
struct AffineSolver {
    // star resultants against the smallest pivot only: small x big stays
    // cheap, big x big pairs are what blow the cascade up
    static constexpr std::size_t kMaxResultantsPerLevel = 16;

    const std::vector<std::string>& vars;
    std::vector<std::string>* factors;
    std::vector<std::string>* notes;
    bool complete = true;

    void solve(const std::vector<Polynomial>& system, std::vector<std::size_t> unknowns,
               std::vector<std::vector<Rational>>& out, std::vector<Rational>& partial) {
        // drop zero polynomials and duplicates; a nonzero constant kills the branch
        std::vector<Polynomial> sys;
        std::set<std::string> seen;
        for (const auto& p0 : system) {
            if (p0.is_zero()) continue;
            if (p0.is_constant()) return;
            Polynomial p = squarefree_reduction(scale_primitive(p0));
            if (seen.insert(p.str()).second) sys.push_back(std::move(p));
        }
        if (unknowns.empty()) {
            out.push_back(partial);
            return;
        }
        if (sys.empty()) {
            complete = false;
            if (notes) notes->push_back("underdetermined system: positive-dimensional candidate set");
            return;
        }
        std::size_t v = unknowns.back();
        std::vector<std::size_t> rest(unknowns.begin(), unknowns.end() - 1);

        if (rest.empty()) {
            // univariate stage: common rational roots of the whole system
            Polynomial g = sys.front();
            for (std::size_t i = 1; i < sys.size(); ++i) g = gcd_primitive(g, sys[i]);
            if (g.is_constant() && !g.is_zero()) return;
            auto roots = rational_roots(g, v);
            if (roots.cofactor.degree_in(v) >= 1) {
                complete = false;
                if (factors) factors->push_back(roots.cofactor.str());
            }
            for (const auto& [r, m] : roots.roots) {
                partial[v] = r;
                out.push_back(partial);
            }
            partial[v] = 0;
            return;
        }

        // eliminate v
        std::vector<Polynomial> with_v, without_v;
        for (const auto& p : sys) (p.involves(v) ? with_v : without_v).push_back(p);
        if (with_v.empty()) {
            complete = false;
            if (notes) notes->push_back("variable unconstrained by the system: positive-dimensional candidate set");
            return;
        }
        std::sort(with_v.begin(), with_v.end(), [&](const Polynomial& a, const Polynomial& b) {
            if (a.degree_in(v) != b.degree_in(v)) return a.degree_in(v) < b.degree_in(v);
            return a.terms().size() < b.terms().size();
        });

        // a v-free content of the pivot would put a spurious common factor
        // into every star resultant; split the variety on it instead
        {
            Polynomial cont = content_in(with_v.front(), v);
            if (!cont.is_constant()) {
                std::vector<Polynomial> branch_zero = without_v;
                for (std::size_t i = 1; i < with_v.size(); ++i) branch_zero.push_back(with_v[i]);
                branch_zero.push_back(cont);
                solve(branch_zero, unknowns, out, partial);
                std::vector<Polynomial> branch_cofactor = without_v;
                branch_cofactor.push_back(divide_exact(with_v.front(), cont));
                for (std::size_t i = 1; i < with_v.size(); ++i) branch_cofactor.push_back(with_v[i]);
                solve(branch_cofactor, unknowns, out, partial);
                return;
            }
        }
        // a common factor of everything involving v makes all resultants
        // vanish; split the variety into the factor's zero set and the
        // cofactor system
        if (with_v.size() >= 2) {
            Polynomial g = with_v.front();
            for (std::size_t i = 1; i < with_v.size() && !g.is_constant(); ++i)
                g = gcd_primitive(g, with_v[i]);
            if (!g.is_constant() && !g.is_zero()) {
                std::vector<Polynomial> branch_zero = without_v;
                branch_zero.push_back(g);
                solve(branch_zero, unknowns, out, partial);
                std::vector<Polynomial> branch_cofactor = without_v;
                for (const auto& p : with_v) branch_cofactor.push_back(divide_exact(p, g));
                solve(branch_cofactor, unknowns, out, partial);
                return;
            }
        }
        std::vector<Polynomial> reduced = without_v;
        if (with_v.size() >= 2) {
            bool any = false;
            for (std::size_t pivot = 0; pivot < with_v.size() && !any; ++pivot) {
                std::size_t added = 0;
                for (std::size_t j = 0; j < with_v.size() && added < kMaxResultantsPerLevel; ++j) {
                    if (j == pivot) continue;
                    Polynomial r = resultant(with_v[pivot], with_v[j], v);
                    if (!r.is_zero()) {
                        reduced.push_back(squarefree_reduction(scale_primitive(r)));
                        any = true;
                        ++added;
                    }
                }
            }
            if (!any && without_v.empty()) {
                complete = false;
                if (notes) notes->push_back("degenerate elimination: all resultants vanish");
                return;
            }
        } else if (with_v.size() == 1 && without_v.empty()) {
            complete = false;
            if (notes) notes->push_back("underdetermined system: positive-dimensional candidate set");
            return;
        }

        std::vector<std::vector<Rational>> projected;
        solve(reduced, rest, projected, partial);

        for (auto& base : projected) {
            // back-substitute and solve for v
            std::vector<Polynomial> fibre;
            for (const auto& p : sys) {
                Polynomial q = p;
                for (std::size_t r : rest) q = substitute_value(q, r, base[r]);
                fibre.push_back(q);
            }
            bool all_zero = true;
            for (const auto& q : fibre)
                if (!q.is_zero()) all_zero = false;
            if (all_zero) {
                complete = false;
                if (notes) notes->push_back("positive-dimensional fibre during back-substitution");
                continue;
            }
            Polynomial g(vars);
            for (const auto& q : fibre) g = g.is_zero() ? q : gcd_primitive(g, q);
            if (g.is_constant() && !g.is_zero()) continue;
            if (!g.involves(v)) continue;  // inconsistent unless zero, handled above
            auto roots = rational_roots(g, v);
            if (roots.cofactor.degree_in(v) >= 1) {
                complete = false;
                if (factors) factors->push_back(roots.cofactor.str());
            }
            for (const auto& [r, m] : roots.roots) {
                auto full = base;
                full[v] = r;
                out.push_back(full);
            }
        }
    }
};

}  // namespace detail

// All rational singular points of the projective hypersurface {F = 0} in P^2
// or P^3 (3 or 4 homogeneous variables), each classified. Charts are scanned
// from the last coordinate backwards with the usual disjoint decomposition.
inline SingularScan find_rational_singular_points(const Polynomial& F, int order_n = 16) {
    const std::size_t n = F.variables().size();
    if (n != 3 && n != 4) throw std::invalid_argument("singular scan expects 3 or 4 homogeneous variables");
    SingularScan scan;
    if (F.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!is_squarefree(F)) {
        scan.reduced = false;
        scan.notes.push_back("input has a repeated factor: singular locus is non-isolated");
        return scan;
    }

    for (std::size_t chart = n; chart-- > 0;) {
        // chart: x_chart = 1, x_j = 0 for j > chart
        Polynomial f = F;
        for (std::size_t j = chart + 1; j < n; ++j) f = substitute_value(f, j, 0);
        f = substitute_value(f, chart, 1);

        std::vector<std::size_t> unknowns;
        for (std::size_t j = 0; j < chart; ++j) unknowns.push_back(j);

        if (unknowns.empty()) {
            // single point (1:0:...:0)
            std::vector<Rational> ptv(n, Rational(0));
            ptv[chart] = 1;
            AffinePoint apt(ptv);
            if (F.evaluate(apt) == 0) {
                bool singular = true;
                for (std::size_t j = 0; j < n && singular; ++j)
                    if (F.derivative(j).evaluate(apt) != 0) singular = false;
                if (singular) scan.points.push_back({ptv, SingularityType::smooth()});
            }
            continue;
        }
        if (f.is_zero()) {
            scan.notes.push_back("hypersurface contains a coordinate subspace boundary; chart skipped");
            scan.complete = false;
            continue;
        }

        // all partials of F restricted to the chart; the true singular points
        // satisfy every one of them, extraneous candidates get filtered below
        std::vector<Polynomial> system{f};
        for (std::size_t j : unknowns) system.push_back(f.derivative(j));
        for (std::size_t j = 0; j < n; ++j) {
            if (std::find(unknowns.begin(), unknowns.end(), j) != unknowns.end()) continue;
            Polynomial d = F.derivative(j);
            for (std::size_t k = chart + 1; k < n; ++k) d = substitute_value(d, k, 0);
            d = substitute_value(d, chart, 1);
            system.push_back(d);
        }

        detail::AffineSolver solver{F.variables(), &scan.unclassified_factors, &scan.notes};
        std::vector<std::vector<Rational>> sols;
        std::vector<Rational> partial(n, Rational(0));
        solver.solve(system, unknowns, sols, partial);
        if (!solver.complete) scan.complete = false;
        std::sort(sols.begin(), sols.end());
        sols.erase(std::unique(sols.begin(), sols.end()), sols.end());

        for (const auto& s : sols) {
            // verify (extraneous resultant candidates are dropped here)
            std::vector<Rational> affine(n, Rational(0));
            for (std::size_t j : unknowns) affine[j] = s[j];
            affine[chart] = 1;
            bool ok = F.evaluate(AffinePoint(affine)) == 0;
            for (std::size_t j = 0; j < n && ok; ++j)
                if (F.derivative(j).evaluate(AffinePoint(affine)) != 0) ok = false;
            if (!ok) continue;
            scan.points.push_back({affine, SingularityType::smooth()});
        }
    }

    // classify each found point on its chart germ
    for (auto& cp : scan.points) {
        std::size_t chart = 0;
        for (std::size_t j = n; j-- > 0;)
            if (cp.point[j] != 0) {
                chart = j;
                break;
            }
        Polynomial f = F;
        f = substitute_value(f, chart, 1);
        std::vector<std::string> germ_vars;
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < n; ++j)
            if (j != chart) {
                germ_vars.push_back(F.variables()[j]);
                keep.push_back(j);
            }
        Polynomial::TermMap tm;
        for (const auto& [e, c] : f.terms()) {
            Exponents ne;
            for (std::size_t j : keep) ne.push_back(e[j]);
            tm.emplace(std::move(ne), c);
        }
        Polynomial chart_poly(germ_vars, std::move(tm));
        std::vector<Rational> shift;
        for (std::size_t j : keep) shift.push_back(cp.point[j]);
        Germ germ(chart_poly.translate_to_origin(AffinePoint(shift)));
        cp.type = classify_germ(germ, order_n);
    }
    return scan;
}

}  // namespace delpezzo
