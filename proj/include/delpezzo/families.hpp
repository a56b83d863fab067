#pragma once

// End-to-end verifiers for the theorem families. Each verifier checks every
// hypothesis of its theorem on a candidate equation and reports the del Pezzo
// invariants (g, K², k, index, Du Val configuration).
//
// Conventions shared by the verifiers:
//  * the "check" polynomial lives in ordinary projective space, obtained by
//    substituting the weight-m coordinate with a power of a fresh variable;
//  * singular points are searched at rational points (plus user-supplied
//    candidates); the report carries a completeness flag that goes false when
//    eliminants keep factors without rational roots;
//  * symmetric pairs of singular points are stored both doubled (as found)
//    and once per orbit.

#include "delpezzo/dynkin.hpp"
#include "delpezzo/poly_parse.hpp"
#include "delpezzo/singularities.hpp"
#include "delpezzo/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delpezzo {

// Raised when the classifier contradicts the symmetric-center law: an
// A(even)/D/E germ at a symmetry center signals bad input or a classifier
// fault, never a legitimate report.
struct ContradictionAlarm : std::logic_error {
    explicit ContradictionAlarm(const std::string& what) : std::logic_error(what) {}
};

enum class FamilyId { G2_P1123, G3A_P1144, G3B_P1112, G4_CI_P11112, G6C_P1114, HIGHER_CONE };

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::G2_P1123: return "g2";
        case FamilyId::G3A_P1144: return "g3a";
        case FamilyId::G3B_P1112: return "g3b";
        case FamilyId::G4_CI_P11112: return "g4";
        case FamilyId::G6C_P1114: return "quintic";
        case FamilyId::HIGHER_CONE: return "higher_cone";
    }
    throw std::logic_error("bad family id");
}

struct FamilyInfo {
    FamilyId id;
    std::vector<int> weights;
    std::vector<long> degrees;  // empty for the cone family
    long k_square;
    long g;
    std::string index2_locus;
};

// Static family table, cross-validated against the adjunction formula.
inline const std::vector<FamilyInfo>& family_catalog() {
    static const std::vector<FamilyInfo> table = [] {
        std::vector<FamilyInfo> t{
            {FamilyId::G2_P1123, {1, 1, 2, 3}, {6}, 1, 2,
             "K_k over the cone vertex when the sextic branch passes through the center"},
            {FamilyId::G3A_P1144, {1, 1, 4, 4}, {8}, 2, 3,
             "two K_1 points over (0:0:1), the only family with two index-2 points"},
            {FamilyId::G3B_P1112, {1, 1, 1, 2}, {4}, 2, 3,
             "K_n at (0:0:0:1) exactly when the quartic passes through it"},
            {FamilyId::G4_CI_P11112, {1, 1, 1, 1, 2}, {2, 3}, 3, 4,
             "index 2 iff the substituted quadric is singular; otherwise a cubic surface"},
            {FamilyId::G6C_P1114, {1, 1, 1, 4}, {5}, 5, 6,
             "one K_1 at the vertex (0:0:0:1) of the ambient"},
            {FamilyId::HIGHER_CONE, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2}, {}, 9, 10,
             "cone over a rational normal quartic curve; the only case with g = 10"},
        };
        for (const auto& f : t) {
            if (f.degrees.empty()) continue;
            auto inv = k_square(WeightedSpace(f.weights), f.degrees);
            if (inv.k_square != f.k_square || inv.g != f.g)
                throw std::logic_error("family catalog disagrees with the adjunction formula");
        }
        return t;
    }();
    return table;
}

inline const FamilyInfo& family_info(FamilyId id) {
    for (const auto& f : family_catalog())
        if (f.id == id) return f;
    throw std::logic_error("family missing from catalog");
}

// ---------------------------------------------------------------------------
// Symmetry detection and unfolding.

enum class Parity { Even, Odd, Mixed };

inline Parity detect_symmetry(const Polynomial& p, std::size_t v) {
    bool all_even = true, all_odd = true;
    for (const auto& [e, c] : p.terms()) {
        if (e[v] % 2 == 0) all_odd = false;
        else all_even = false;
    }
    if (all_even) return Parity::Even;
    if (all_odd) return Parity::Odd;
    return Parity::Mixed;
}

inline Parity detect_symmetry(const WeightedForm& F, const std::string& var) {
    return detect_symmetry(F.poly, F.poly.var_index(var));
}

// Replaces v^2 by a fresh weight-doubled variable; only valid for even forms.
inline WeightedForm desymmetrize(const WeightedForm& F, const std::string& var,
                                 std::string fresh_name = "") {
    std::size_t v = F.poly.var_index(var);
    if (detect_symmetry(F.poly, v) != Parity::Even)
        throw std::invalid_argument("form is not even in " + var);
    if (fresh_name.empty()) fresh_name = var + "2";
    std::vector<std::string> new_vars = F.poly.variables();
    new_vars[v] = fresh_name;
    Polynomial::TermMap tm;
    for (const auto& [e, c] : F.poly.terms()) {
        Exponents ne = e;
        ne[v] = e[v] / 2;
        tm.emplace(std::move(ne), c);
    }
    std::vector<int> new_weights = F.space.weights;
    new_weights[v] *= 2;
    return WeightedForm(WeightedSpace(new_weights), Polynomial(new_vars, std::move(tm)), F.degree);
}

// ---------------------------------------------------------------------------
// Reports.

struct PointRecord {
    std::vector<Rational> point;
    SingularityType type;
    std::string location;  // "center", "interior", "symmetry_line"
};

struct FamilyReport {
    FamilyId family;
    bool pass = false;
    std::string failed_condition;  // empty on pass
    long k_square = 0;
    long g = 0;
    int k = 0;
    int index = 1;
    std::optional<SingularityType> center_type;  // germ type of the check equation at the center
    std::optional<SingularityType> index2_type;  // the quotient K(k), when k >= 1
    int index2_point_count = 0;                  // number of index-2 points on the surface
    ConfigName duval_config;                     // per-family convention (see README)
    ConfigName duval_config_orbits;              // one entry per symmetry orbit
    bool complete = true;
    std::vector<std::string> unclassified_factors;
    std::vector<std::string> notes;
    std::vector<PointRecord> points;
};

namespace detail {

// Renames the variables of F to a,b,c,... and raises the last ("heavy")
// variable to the given power: the check polynomial in ordinary projective
// space.
inline Polynomial plain_check_polynomial(const Polynomial& F, int power) {
    static const std::vector<std::string> plain{"a", "b", "c", "d", "e"};
    const auto& vars = F.variables();
    if (vars.size() > plain.size()) throw std::invalid_argument("too many variables");
    std::map<std::string, Polynomial> bind;
    std::vector<std::string> out_vars(plain.begin(), plain.begin() + vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Exponents e(out_vars.size(), 0);
        e[i] = (i + 1 == vars.size()) ? power : 1;
        bind.emplace(vars[i], Polynomial::monomial(out_vars, e, 1));
    }
    return F.substitute(bind).with_variables(out_vars);
}

inline FamilyReport fail(FamilyReport r, const std::string& condition) {
    r.pass = false;
    r.failed_condition = condition;
    return r;
}

inline std::string point_str(const std::vector<Rational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ":";
        s += p[i].str();
    }
    return s + ")";
}

// Splits scan points into center / symmetry-hyperplane / interior, checking
// that interior points come in mirror pairs along the last coordinate.
struct SplitPoints {
    std::vector<ClassifiedPoint> center;
    std::vector<ClassifiedPoint> on_hyperplane;   // last coordinate zero
    std::vector<ClassifiedPoint> interior;        // last coordinate nonzero
};

inline SplitPoints split_scan_points(const std::vector<ClassifiedPoint>& pts) {
    SplitPoints out;
    const std::size_t n = pts.empty() ? 0 : pts.front().point.size();
    for (const auto& cp : pts) {
        bool is_center = cp.point.back() != 0;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (cp.point[i] != 0) is_center = false;
        if (is_center)
            out.center.push_back(cp);
        else if (cp.point.back() == 0)
            out.on_hyperplane.push_back(cp);
        else
            out.interior.push_back(cp);
    }
    return out;
}

// Builds the doubled and orbit configuration names from classified points.
// Interior points pair (x : ... : c) <-> (x : ... : -c); hyperplane points
// are their own orbit.
struct ConfigPair {
    ConfigName found;   // every scanned point once
    ConfigName orbits;  // one per symmetry orbit
};

inline ConfigPair configs_from_points(const SplitPoints& sp, std::vector<std::string>* notes) {
    ConfigPair out;
    std::set<std::size_t> used;
    for (std::size_t i = 0; i < sp.interior.size(); ++i) {
        const auto& cp = sp.interior[i];
        if (!cp.type.is_ade()) continue;
        char letter = cp.type.tag == SingularityType::Tag::A   ? 'A'
                      : cp.type.tag == SingularityType::Tag::D ? 'D'
                                                               : 'E';
        out.found.add(letter, cp.type.index);
        if (used.count(i)) continue;
        used.insert(i);
        // mirror point: negating the last coordinate and renormalizing the
        // chart coordinate back to 1 negates all the others instead
        auto mirror = cp.point;
        for (std::size_t j = 0; j + 1 < mirror.size(); ++j) mirror[j] = -mirror[j];
        bool found_mirror = false;
        for (std::size_t j = i + 1; j < sp.interior.size(); ++j) {
            if (used.count(j)) continue;
            if (sp.interior[j].point == mirror) {
                used.insert(j);
                found_mirror = true;
                if (!(sp.interior[j].type == cp.type) && notes)
                    notes->push_back("mirror points with different classifications at " + point_str(cp.point));
                break;
            }
        }
        if (!found_mirror && notes)
            notes->push_back("interior singular point without its mirror at " + point_str(cp.point) +
                             " (mirror has non-rational normalization)");
        out.orbits.add(letter, cp.type.index);
    }
    for (const auto& cp : sp.on_hyperplane) {
        if (!cp.type.is_ade()) continue;
        char letter = cp.type.tag == SingularityType::Tag::A   ? 'A'
                      : cp.type.tag == SingularityType::Tag::D ? 'D'
                                                               : 'E';
        out.found.add(letter, cp.type.index);
        out.orbits.add(letter, cp.type.index);
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// g = 2: sextic branch data in P(1,1,2).

// Verifies the hypotheses on G of weighted degree 6 in P(1,1,2): the plane
// sextic G(a,b,c^2) must be reduced, have at most a double point at (0:0:1)
// of type A(odd), no singularities on the symmetry line {c=0}, and only
// simple singularities elsewhere.
inline FamilyReport verify_g2(const Polynomial& G, int order_n = 16) {
    FamilyReport r;
    r.family = FamilyId::G2_P1123;
    r.k_square = 1;
    r.g = 2;
    if (G.variables().size() != 3) throw std::invalid_argument("g2 expects a polynomial in three variables");
    WeightedSpace p112({1, 1, 2});
    auto wd = weighted_degree(p112, G);
    if (!wd || *wd != 6) return detail::fail(r, "not homogeneous of weighted degree 6 in P(1,1,2)");

    Polynomial sextic = detail::plain_check_polynomial(G, 2);
    if (!is_squarefree(sextic)) return detail::fail(r, "sextic is not reduced");

    SingularScan scan = find_rational_singular_points(sextic, order_n);
    r.complete = scan.complete;
    r.unclassified_factors = scan.unclassified_factors;
    for (const auto& n : scan.notes) r.notes.push_back(n);

    auto sp = detail::split_scan_points(scan.points);
    for (const auto& cp : scan.points) {
        std::string loc = "interior";
        if (!sp.center.empty() && cp.point == sp.center.front().point) loc = "center";
        else if (cp.point.back() == 0) loc = "symmetry_line";
        r.points.push_back({cp.point, cp.type, loc});
    }

    for (const auto& cp : scan.points)
        if (!cp.type.is_ade())
            return detail::fail(r, "non-simple singularity (" + cp.type.str() + ") at " +
                                       detail::point_str(cp.point));
    for (const auto& cp : sp.on_hyperplane)
        return detail::fail(r, "singularity on the symmetry line {c=0} at " + detail::point_str(cp.point));

    // complete check over the closure: a singular point on {c=0} is a common
    // root of the two binary forms dG/dx(a,b,0), dG/dy(a,b,0)
    {
        std::vector<std::string> ab{"a", "b"};
        auto restrict_line = [&](const Polynomial& p) {
            Polynomial q = substitute_value(p, 2, 0);
            Polynomial::TermMap tm;
            for (const auto& [e, c] : q.terms()) tm.emplace(Exponents{e[0], e[1]}, c);
            return Polynomial(ab, std::move(tm));
        };
        Polynomial ga = restrict_line(sextic.derivative(std::size_t(0)));
        Polynomial gb = restrict_line(sextic.derivative(std::size_t(1)));
        bool common_zero;
        if (ga.is_zero() || gb.is_zero())
            common_zero = true;  // a nonzero binary form always has zeros
        else
            common_zero = !gcd(ga, gb).is_constant();
        if (common_zero)
            return detail::fail(r, "singularity on the symmetry line {c=0} (non-rational common zero)");
    }

    // center analysis
    if (!sp.center.empty() || sextic.evaluate(AffinePoint({Rational(0), Rational(0), Rational(1)})) == 0) {
        Polynomial chart = substitute_value(sextic, 2, 1);
        Polynomial::TermMap tm;
        for (const auto& [e, c] : chart.terms()) tm.emplace(Exponents{e[0], e[1]}, c);
        Germ center_germ(Polynomial(std::vector<std::string>{"a", "b"}, std::move(tm)));
        long mult = multiplicity(center_germ);
        if (mult == 1) {
            // smooth branch point at the center: the double cover is branched
            // at the vertex only
            r.center_type = SingularityType::smooth();
            r.k = 0;
            r.index = 1;
            r.notes.push_back("sextic passes smoothly through the center");
        } else {
            if (mult > 2) return detail::fail(r, "center multiplicity exceeds 2");
            SingularityType t = classify_curve_germ(center_germ);
            r.center_type = t;
            if (t.tag != SingularityType::Tag::A || t.index % 2 == 0)
                return detail::fail(r, "center singularity is not A(odd): " + t.str());
            r.k = t.index / 2;  // A(2k+1)
            if (r.k >= 1) {
                r.index = 2;
                r.index2_type = SingularityType::K(r.k);
                r.index2_point_count = 1;
            } else {
                r.index = 1;  // A_1 center: k = 0, still Gorenstein
            }
        }
    } else {
        r.k = 0;
        r.index = 1;
    }

    auto cfg = detail::configs_from_points(sp, &r.notes);
    r.duval_config = cfg.found;
    r.duval_config_orbits = cfg.orbits;
    r.pass = true;
    return r;
}

// ---------------------------------------------------------------------------
// g = 3 (a): octic branch data in P(1,1,4).

inline FamilyReport verify_g3a(const Polynomial& G, int order_n = 16) {
    FamilyReport r;
    r.family = FamilyId::G3A_P1144;
    r.k_square = 2;
    r.g = 3;
    if (G.variables().size() != 3) throw std::invalid_argument("g3a expects a polynomial in three variables");
    WeightedSpace p114({1, 1, 4});
    auto wd = weighted_degree(p114, G);
    if (!wd || *wd != 8) return detail::fail(r, "not homogeneous of weighted degree 8 in P(1,1,4)");

    Polynomial octic = detail::plain_check_polynomial(G, 4);
    if (octic.evaluate(AffinePoint({Rational(0), Rational(0), Rational(1)})) == 0)
        return detail::fail(r, "branch curve passes through the vertex (0:0:1)");
    if (!is_squarefree(octic)) return detail::fail(r, "octic is not reduced");

    SingularScan scan = find_rational_singular_points(octic, order_n);
    r.complete = scan.complete;
    r.unclassified_factors = scan.unclassified_factors;
    for (const auto& n : scan.notes) r.notes.push_back(n);
    auto sp = detail::split_scan_points(scan.points);
    for (const auto& cp : scan.points)
        r.points.push_back({cp.point, cp.type, cp.point.back() == 0 ? "symmetry_line" : "interior"});

    for (const auto& cp : scan.points)
        if (!cp.type.is_ade())
            return detail::fail(r, "non-simple singularity (" + cp.type.str() + ") at " +
                                       detail::point_str(cp.point));

    auto cfg = detail::configs_from_points(sp, &r.notes);
    r.duval_config = cfg.found;
    r.duval_config_orbits = cfg.orbits;

    // the two 1/4(1,1) points over the vertex
    r.k = 2;
    r.index = 2;
    r.index2_type = quarter_one_one_quotient();
    r.index2_point_count = 2;

    // advisory containment in the A_7 subdiagram list
    static const std::set<ConfigName> a7_list = enumerate_ade_subdiagrams(ade_diagram("A_7"));
    if (!a7_list.count(r.duval_config))
        r.notes.push_back("configuration " + r.duval_config.str() + " is outside the A_7 subdiagram list");
    r.pass = true;
    return r;
}

// ---------------------------------------------------------------------------
// g = 3 (b): quartic data in P(1,1,1,2).

inline FamilyReport verify_g3b(const Polynomial& F, int order_n = 16) {
    FamilyReport r;
    r.family = FamilyId::G3B_P1112;
    r.k_square = 2;
    r.g = 3;
    if (F.variables().size() != 4) throw std::invalid_argument("g3b expects a polynomial in four variables");
    WeightedSpace p1112({1, 1, 1, 2});
    auto wd = weighted_degree(p1112, F);
    if (!wd || *wd != 4) return detail::fail(r, "not homogeneous of weighted degree 4 in P(1,1,1,2)");

    Polynomial quartic = detail::plain_check_polynomial(F, 2);
    if (!is_squarefree(quartic)) return detail::fail(r, "quartic is not reduced");

    SingularScan scan = find_rational_singular_points(quartic, order_n);
    r.complete = scan.complete;
    r.unclassified_factors = scan.unclassified_factors;
    for (const auto& n : scan.notes) r.notes.push_back(n);
    auto sp = detail::split_scan_points(scan.points);
    for (const auto& cp : scan.points) {
        std::string loc = "interior";
        bool is_center = true;
        for (std::size_t i = 0; i + 1 < cp.point.size(); ++i)
            if (cp.point[i] != 0) is_center = false;
        if (is_center && cp.point.back() != 0) loc = "center";
        else if (cp.point.back() == 0) loc = "symmetry_hyperplane";
        r.points.push_back({cp.point, cp.type, loc});
    }

    for (const auto& cp : scan.points) {
        bool is_center = cp.point.back() != 0;
        for (std::size_t i = 0; i + 1 < cp.point.size(); ++i)
            if (cp.point[i] != 0) is_center = false;
        if (cp.type.is_ade()) continue;
        return detail::fail(r, std::string(is_center ? "center" : "off-center") +
                                   " singularity is not ADE (" + cp.type.str() + ") at " +
                                   detail::point_str(cp.point));
    }

    // center analysis
    if (quartic.evaluate(AffinePoint({Rational(0), Rational(0), Rational(0), Rational(1)})) == 0) {
        Polynomial chart = substitute_value(quartic, 3, 1);
        Polynomial::TermMap tm;
        for (const auto& [e, c] : chart.terms()) tm.emplace(Exponents{e[0], e[1], e[2]}, c);
        Germ center_germ(Polynomial(std::vector<std::string>{"a", "b", "c"}, std::move(tm)));
        SingularityType t = classify_surface_double_point(center_germ, order_n);
        r.center_type = t;
        if (t.is_ade() && (t.tag != SingularityType::Tag::A || t.index % 2 == 0))
            throw ContradictionAlarm(
                "symmetric quartic with ADE singularities has a non-A(odd) center germ " + t.str() +
                ": bad input or classifier fault");
        if (!t.is_ade())
            return detail::fail(r, "center singularity is not ADE: " + t.str());
        r.k = t.index / 2;  // A(2k+1)
        if (r.k >= 1) {
            r.index = 2;
            r.index2_type = SingularityType::K(r.k);
            r.index2_point_count = 1;
        } else {
            r.index = 1;
            r.notes.push_back("A_1 center germ: k = 0 under the f = 2k+1 convention");
        }
    } else {
        r.k = 0;
        r.index = 1;
    }

    // the center is reported separately and excluded from the Du Val data
    auto cfg = detail::configs_from_points(sp, &r.notes);
    r.duval_config = cfg.found;
    r.duval_config_orbits = cfg.orbits;
    r.pass = true;
    return r;
}

// ---------------------------------------------------------------------------
// g = 4: complete intersection data in P(1,1,1,1,2).

namespace detail {

// Rank of the symmetric matrix of a quadratic form, exact.
inline int quadric_rank(const Polynomial& q) {
    const std::size_t n = q.variables().size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [e, c] : q.terms()) {
        if (Polynomial::total_degree(e) != 2) throw std::invalid_argument("not a quadratic form");
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (int k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx[0] == idx[1]) {
            m[idx[0]][idx[0]] = c;
        } else {
            m[idx[0]][idx[1]] = c / 2;
            m[idx[1]][idx[0]] = c / 2;
        }
    }
    // gaussian elimination over Q
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

// Power-series graph solve: h(vars) = 0 with h(0) = 0 and a unit linear
// coefficient on variable v; returns the series phi(rest) with
// h(v -> phi) = 0 mod total order N.
inline Polynomial graph_series(const Polynomial& h, std::size_t v, int order_n) {
    Exponents ev(h.variables().size(), 0);
    ev[v] = 1;
    auto it = h.terms().find(ev);
    if (it == h.terms().end()) throw std::invalid_argument("no unit linear coefficient on the variable");
    Rational c = it->second;
    Polynomial rest = h - Polynomial::monomial(h.variables(), ev, c);
    Polynomial phi(h.variables());  // starts at 0
    for (int iter = 0; iter <= order_n; ++iter) {
        std::map<std::string, Polynomial> bind;
        bind.emplace(h.variables()[v], phi);
        Polynomial next = rest.substitute(bind).with_variables(h.variables()) * (Rational(-1) / c);
        next.truncate_above(order_n);
        if (next == phi) break;
        phi = next;
    }
    return phi;
}

// Classifies the complete-intersection germ {p = 0, q = 0} at the origin of
// a 4-variable affine chart by eliminating one variable along the smooth
// equation. Returns nullopt when both equations are singular at the origin
// (the germ is not a hypersurface germ, hence never Du Val).
inline std::optional<SingularityType> classify_ci_germ(const Polynomial& p, const Polynomial& q,
                                                       int order_n) {
    auto try_reduce = [&](const Polynomial& smooth, const Polynomial& other)
        -> std::optional<SingularityType> {
        for (std::size_t v = 0; v < smooth.variables().size(); ++v) {
            Exponents ev(smooth.variables().size(), 0);
            ev[v] = 1;
            if (!smooth.terms().count(ev)) continue;
            Polynomial phi = graph_series(smooth, v, order_n);
            std::map<std::string, Polynomial> bind;
            bind.emplace(smooth.variables()[v], phi);
            Polynomial reduced = other.substitute(bind).with_variables(other.variables());
            reduced.truncate_above(order_n);
            // drop the eliminated variable
            std::vector<std::string> rest_vars;
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < other.variables().size(); ++i)
                if (i != v) {
                    rest_vars.push_back(other.variables()[i]);
                    keep.push_back(i);
                }
            Polynomial::TermMap tm;
            for (const auto& [e, c] : reduced.terms()) {
                Exponents ne;
                for (std::size_t i : keep) ne.push_back(e[i]);
                tm.emplace(std::move(ne), c);
            }
            Polynomial germ_poly(rest_vars, std::move(tm));
            if (germ_poly.is_zero()) return SingularityType::non_isolated();
            if (germ_poly.constant_term() != 0)
                throw std::logic_error("graph reduction produced a non-vanishing germ");
            return classify_surface_double_point(Germ(germ_poly), order_n);
        }
        return std::nullopt;
    };
    // prefer eliminating along p
    if (auto t = try_reduce(p, q)) return t;
    if (auto t = try_reduce(q, p)) return t;
    return std::nullopt;
}

// Chart germ of a hypersurface equation at a projective point: substitute
// the chart coordinate by 1, drop it, translate the point to the origin.
inline Polynomial chart_germ_polynomial(const Polynomial& P, const std::vector<Rational>& point,
                                        std::size_t chart) {
    const std::size_t n = P.variables().size();
    Polynomial f = substitute_value(P, chart, 1);
    std::vector<std::string> germ_vars;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (j != chart) {
            germ_vars.push_back(P.variables()[j]);
            keep.push_back(j);
        }
    Polynomial::TermMap tm;
    for (const auto& [e, c] : f.terms()) {
        Exponents ne;
        for (std::size_t j : keep) ne.push_back(e[j]);
        auto [it, inserted] = tm.try_emplace(std::move(ne), c);
        if (!inserted) it->second += c;
    }
    std::vector<Rational> shift;
    for (std::size_t j : keep) shift.push_back(point[j]);
    return Polynomial(germ_vars, std::move(tm)).translate_to_origin(AffinePoint(shift));
}

// CI germ classification at a projective point (normalized: some coordinate
// equals 1 and later ones vanish). nullopt: not a hypersurface germ.
inline std::optional<SingularityType> classify_ci_point(const Polynomial& F2, const Polynomial& G3,
                                                        const std::vector<Rational>& point,
                                                        int order_n) {
    std::size_t chart = 0;
    for (std::size_t j = point.size(); j-- > 0;)
        if (point[j] != 0) {
            chart = j;
            break;
        }
    return classify_ci_germ(chart_germ_polynomial(F2, point, chart),
                            chart_germ_polynomial(G3, point, chart), order_n);
}

}  // namespace detail

// Scan of the singular points of the complete intersection {F2 = 0, G3 = 0}
// in P^4, rational points only, classified through hypersurface reduction.
inline SingularScan ci_singular_scan(const Polynomial& F2, const Polynomial& G3, int order_n = 16) {
    const std::size_t n = F2.variables().size();
    if (n != 5 || G3.variables() != F2.variables())
        throw std::invalid_argument("ci scan expects two polynomials in the same five variables");
    SingularScan scan;

    // jacobian minors
    std::vector<Polynomial> minors;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            minors.push_back(F2.derivative(i) * G3.derivative(j) - F2.derivative(j) * G3.derivative(i));

    for (std::size_t chart = n; chart-- > 0;) {
        auto restrict = [&](Polynomial p) {
            for (std::size_t k = chart + 1; k < n; ++k) p = substitute_value(p, k, 0);
            return substitute_value(p, chart, 1);
        };
        std::vector<std::size_t> unknowns;
        for (std::size_t j = 0; j < chart; ++j) unknowns.push_back(j);

        std::vector<Polynomial> system{restrict(F2), restrict(G3)};
        for (const auto& m : minors) system.push_back(restrict(m));

        if (unknowns.empty()) {
            std::vector<Rational> ptv(n, Rational(0));
            ptv[chart] = 1;
            AffinePoint apt(ptv);
            bool on = F2.evaluate(apt) == 0 && G3.evaluate(apt) == 0;
            if (on) {
                bool singular = true;
                for (const auto& m : minors)
                    if (m.evaluate(apt) != 0) singular = false;
                if (singular) scan.points.push_back({ptv, SingularityType::smooth()});
            }
            continue;
        }
        bool degenerate = false;
        for (auto& p : system)
            if (p.is_zero()) degenerate = true;
        if (degenerate && system[0].is_zero() && system[1].is_zero()) {
            scan.notes.push_back("complete intersection contains a coordinate boundary; chart skipped");
            scan.complete = false;
            continue;
        }

        detail::AffineSolver solver{F2.variables(), &scan.unclassified_factors, &scan.notes};
        std::vector<std::vector<Rational>> sols;
        std::vector<Rational> partial(n, Rational(0));
        solver.solve(system, unknowns, sols, partial);
        if (!solver.complete) scan.complete = false;
        std::sort(sols.begin(), sols.end());
        sols.erase(std::unique(sols.begin(), sols.end()), sols.end());

        for (const auto& s : sols) {
            std::vector<Rational> affine(n, Rational(0));
            for (std::size_t j : unknowns) affine[j] = s[j];
            affine[chart] = 1;
            AffinePoint apt(affine);
            bool ok = F2.evaluate(apt) == 0 && G3.evaluate(apt) == 0;
            for (const auto& m : minors)
                if (ok && m.evaluate(apt) != 0) ok = false;
            if (!ok) continue;
            scan.points.push_back({affine, SingularityType::smooth()});
        }
    }

    // classify through the chart germs
    for (auto& cp : scan.points) {
        auto t = detail::classify_ci_point(F2, G3, cp.point, order_n);
        cp.type = t.value_or(SingularityType::not_simple());
        if (!t) scan.notes.push_back("both equations singular at " + detail::point_str(cp.point) +
                                     ": not a hypersurface germ");
    }
    return scan;
}

// Verifies F of weighted degree 2 and G of weighted degree 3 in
// P(1,1,1,1,2): the substituted complete intersection must have only Du Val
// singularities away from {e=0}; index 2 exactly when the substituted
// quadric is singular.
inline FamilyReport verify_g4(const Polynomial& F, const Polynomial& G,
                              const std::vector<std::vector<Rational>>& extra_points = {},
                              int order_n = 16) {
    FamilyReport r;
    r.family = FamilyId::G4_CI_P11112;
    r.k_square = 3;
    r.g = 4;
    if (F.variables().size() != 5 || G.variables() != F.variables())
        throw std::invalid_argument("g4 expects two polynomials in the same five variables");
    WeightedSpace p11112({1, 1, 1, 1, 2});
    auto wdF = weighted_degree(p11112, F);
    auto wdG = weighted_degree(p11112, G);
    if (!wdF || *wdF != 2) return detail::fail(r, "first equation is not of weighted degree 2");
    if (!wdG || *wdG != 3) return detail::fail(r, "second equation is not of weighted degree 3");

    Polynomial F2 = detail::plain_check_polynomial(F, 2);
    Polynomial G3 = detail::plain_check_polynomial(G, 2);

    if (!gcd(F2, G3).is_constant()) return detail::fail(r, "equations share a component");

    int rank = detail::quadric_rank(F2);
    r.notes.push_back("substituted quadric has rank " + std::to_string(rank));
    r.index = rank <= 4 ? 2 : 1;
    if (rank == 5) r.notes.push_back("smooth quadric: the surface is isomorphic to a cubic surface in P^3");

    // center membership: the e^2 coefficient of F
    Rational alpha = F2.evaluate(AffinePoint(std::vector<Rational>{0, 0, 0, 0, 1}));
    if (alpha != 0 && rank <= 4)
        return detail::fail(r, "singular quadric does not pass through the symmetry center");

    SingularScan scan = ci_singular_scan(F2, G3, order_n);
    r.complete = scan.complete;
    r.unclassified_factors = scan.unclassified_factors;
    for (const auto& n : scan.notes) r.notes.push_back(n);

    // user-supplied candidate points
    for (const auto& pt : extra_points) {
        if (pt.size() != 5) throw std::invalid_argument("candidate points need 5 coordinates");
        AffinePoint apt{pt};
        bool on = F2.evaluate(apt) == 0 && G3.evaluate(apt) == 0;
        if (!on) {
            r.notes.push_back("candidate point " + detail::point_str(pt) + " is not on the intersection");
            continue;
        }
        bool already = false;
        for (const auto& cp : scan.points)
            if (cp.point == pt) already = true;
        if (already) continue;
        bool singular = true;
        for (std::size_t i = 0; i < 5 && singular; ++i)
            for (std::size_t j = i + 1; j < 5 && singular; ++j) {
                Polynomial m = F2.derivative(i) * G3.derivative(j) - F2.derivative(j) * G3.derivative(i);
                if (m.evaluate(apt) != 0) singular = false;
            }
        if (!singular) {
            r.notes.push_back("candidate point " + detail::point_str(pt) + " is a smooth point");
            continue;
        }
        auto t = detail::classify_ci_point(F2, G3, pt, order_n);
        scan.points.push_back({pt, t.value_or(SingularityType::not_simple())});
        if (!t)
            r.notes.push_back("both equations singular at " + detail::point_str(pt) +
                              ": not a hypersurface germ");
    }

    auto sp = detail::split_scan_points(scan.points);
    for (const auto& cp : scan.points) {
        std::string loc = "interior";
        bool is_center = cp.point.back() != 0;
        for (std::size_t i = 0; i + 1 < cp.point.size(); ++i)
            if (cp.point[i] != 0) is_center = false;
        if (is_center) loc = "center";
        else if (cp.point.back() == 0) loc = "hyperplane_e0";
        r.points.push_back({cp.point, cp.type, loc});
    }

    for (const auto& cp : sp.on_hyperplane)
        return detail::fail(r, "singular point on the hyperplane {e=0} at " + detail::point_str(cp.point));

    for (const auto& cp : scan.points) {
        bool is_center = cp.point.back() != 0;
        for (std::size_t i = 0; i + 1 < cp.point.size(); ++i)
            if (cp.point[i] != 0) is_center = false;
        if (is_center) continue;  // handled below
        if (!cp.type.is_ade())
            return detail::fail(r, "non-Du-Val singularity (" + cp.type.str() + ") at " +
                                       detail::point_str(cp.point));
    }

    if (alpha == 0) {
        // center lies on the intersection and is always singular there; the
        // scan must have found it
        if (sp.center.empty())
            return detail::fail(r, "center expected to be singular but was not found by the scan");
        SingularityType t = sp.center.front().type;
        r.center_type = t;
        if (t.is_ade() && (t.tag != SingularityType::Tag::A || t.index % 2 == 0))
            throw ContradictionAlarm("symmetric intersection has a non-A(odd) center germ " + t.str());
        if (!t.is_ade()) return detail::fail(r, "center singularity is not ADE: " + t.str());
        r.k = t.index / 2;  // A(2k+1)
        if (r.k >= 1) {
            r.index = 2;
            r.index2_type = SingularityType::K(r.k);
            r.index2_point_count = 1;
        } else {
            r.index = 1;
            r.notes.push_back(
                "A_1 center germ: k = 0 under the f = 2k+1 convention, though the quadric is singular");
        }
    } else {
        r.k = 0;
    }

    auto cfg = detail::configs_from_points(sp, &r.notes);
    r.duval_config = cfg.found;
    r.duval_config_orbits = cfg.orbits;
    r.pass = true;
    return r;
}

// ---------------------------------------------------------------------------
// g = 6 quintics in P(1,1,1,4).

inline FamilyReport verify_quintic(const Polynomial& F5, int order_n = 16) {
    FamilyReport r;
    r.family = FamilyId::G6C_P1114;
    r.k_square = 5;
    r.g = 6;
    if (F5.variables().size() != 4) throw std::invalid_argument("quintic expects a polynomial in four variables");
    WeightedSpace p1114({1, 1, 1, 4});
    auto wd = weighted_degree(p1114, F5);
    if (!wd || *wd != 5) return detail::fail(r, "not homogeneous of weighted degree 5 in P(1,1,1,4)");

    Polynomial surf = detail::plain_check_polynomial(F5, 4);
    if (!is_squarefree(surf)) return detail::fail(r, "check surface is not reduced");

    // smoothness at the vertex (0:0:0:1); the surface always passes through it
    {
        Polynomial chart = substitute_value(surf, 3, 1);
        Polynomial::TermMap tm;
        for (const auto& [e, c] : chart.terms()) tm.emplace(Exponents{e[0], e[1], e[2]}, c);
        Polynomial germ_poly(std::vector<std::string>{"a", "b", "c"}, std::move(tm));
        if (germ_poly.constant_term() != 0)
            throw std::logic_error("weighted degree 5 forms always vanish at the vertex");
        if (Germ(germ_poly).poly.order() != 1)
            return detail::fail(r, "check surface is singular at (0:0:0:1)");
    }

    SingularScan scan = find_rational_singular_points(surf, order_n);
    r.complete = scan.complete;
    r.unclassified_factors = scan.unclassified_factors;
    for (const auto& n : scan.notes) r.notes.push_back(n);
    auto sp = detail::split_scan_points(scan.points);
    for (const auto& cp : scan.points)
        r.points.push_back({cp.point, cp.type, cp.point.back() == 0 ? "hyperplane_d0" : "interior"});

    for (const auto& cp : scan.points)
        if (!cp.type.is_ade())
            return detail::fail(r, "non-ADE singularity (" + cp.type.str() + ") at " +
                                       detail::point_str(cp.point));

    auto cfg = detail::configs_from_points(sp, &r.notes);
    // the orbit configuration is the one on the weighted quintic itself
    r.duval_config = cfg.orbits;
    r.duval_config_orbits = cfg.orbits;
    r.notes.push_back("check-surface configuration counting every rational point: " + cfg.found.str());

    static const std::set<ConfigName> allowed = enumerate_ade_subdiagrams(ade_diagram("A_4"));
    if (!allowed.count(r.duval_config))
        return detail::fail(r, "configuration " + r.duval_config.str() +
                                   " lies outside the A_4 subdiagram list");

    r.k = 1;
    r.index = 2;
    r.index2_type = quarter_one_one_quotient();
    r.index2_point_count = 1;
    r.pass = true;
    return r;
}

}  // namespace delpezzo
