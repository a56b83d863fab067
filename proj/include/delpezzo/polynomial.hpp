#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// Terms are kept in a map ordered by graded-lexicographic order on the
// exponent vectors; that order is also used for printing and for every
// leading-term normalization, so all outputs are deterministic.

#include "delpezzo/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

using Exponents = std::vector<int>;

// Graded-lexicographic: compare total degree first, then left-to-right
// exponent comparison (earlier variable more significant).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

struct AffinePoint {
    std::vector<Rational> coordinates;

    AffinePoint() = default;
    explicit AffinePoint(std::vector<Rational> c) : coordinates(std::move(c)) {}
    std::size_t size() const { return coordinates.size(); }
    const Rational& operator[](std::size_t i) const { return coordinates[i]; }
};

class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() = default;

    explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    Polynomial(std::vector<std::string> variables, TermMap terms)
        : vars_(std::move(variables)), terms_(std::move(terms)) {
        prune();
    }

    static Polynomial constant(std::vector<std::string> variables, const Rational& c) {
        Polynomial p(std::move(variables));
        if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = c;
        return p;
    }

    static Polynomial variable(std::vector<std::string> variables, std::size_t index) {
        Polynomial p(std::move(variables));
        if (index >= p.vars_.size()) throw std::invalid_argument("variable index out of range");
        Exponents e(p.vars_.size(), 0);
        e[index] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static Polynomial monomial(std::vector<std::string> variables, Exponents exps, const Rational& c) {
        Polynomial p(std::move(variables));
        if (exps.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        if (c != 0) p.terms_[std::move(exps)] = c;
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents(vars_.size(), 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // -1 for the zero polynomial.
    long total_degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.rbegin()->first);
    }

    // Lowest total degree among terms; -1 for zero.
    long order() const {
        long best = -1;
        for (const auto& [e, c] : terms_) {
            long d = total_degree(e);
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    bool involves(std::size_t var) const { return degree_in(var) > 0; }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("unknown variable: " + name);
    }

    // Leading term under grlex.
    std::pair<Exponents, Rational> leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_vars(o);
        Polynomial r(vars_, terms_);
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(e, c);
            if (!inserted) it->second += c;
        }
        r.prune();
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_vars(o);
        Polynomial r(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                auto [it, inserted] = r.terms_.try_emplace(std::move(e), ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        r.prune();
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(vars_);
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int n) const {
        if (n < 0) throw std::invalid_argument("negative power");
        Polynomial r = constant(vars_, 1);
        Polynomial base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= vars_.size()) throw std::invalid_argument("unknown variable index");
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents d = e;
            d[var] -= 1;
            r.terms_[std::move(d)] = c * e[var];
        }
        return r;
    }

    Polynomial derivative(const std::string& name) const { return derivative(var_index(name)); }

    Rational evaluate(const AffinePoint& pt) const {
        if (pt.size() != vars_.size()) throw std::invalid_argument("point arity mismatch");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (int k = 0; k < e[i]; ++k) t *= pt[i];
            }
            acc += t;
        }
        return acc;
    }

    // Substitutes each bound variable by a polynomial; unbound variables pass
    // through. All bindings and the result share one variable list: first the
    // unbound variables of *this (in order), then new variables in order of
    // first appearance over the bindings.
    Polynomial substitute(const std::map<std::string, Polynomial>& bindings) const {
        std::vector<std::string> out_vars;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (!bindings.count(vars_[i])) out_vars.push_back(vars_[i]);
        for (const auto& v : vars_) {
            auto it = bindings.find(v);
            if (it == bindings.end()) continue;
            for (const auto& nv : it->second.variables())
                if (std::find(out_vars.begin(), out_vars.end(), nv) == out_vars.end())
                    out_vars.push_back(nv);
        }
        for (const auto& [name, p] : bindings) {
            (void)p;
            var_index(name);  // throws on a binding for a variable we do not have
        }

        // Images of our variables in the output list.
        std::vector<Polynomial> image;
        image.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = bindings.find(vars_[i]);
            if (it == bindings.end()) {
                std::size_t idx = std::find(out_vars.begin(), out_vars.end(), vars_[i]) - out_vars.begin();
                image.push_back(variable(out_vars, idx));
            } else {
                image.push_back(it->second.with_variables(out_vars));
            }
        }

        Polynomial acc(out_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(out_vars, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) term = term * image[i].pow(e[i]);
            acc = acc + term;
        }
        return acc;
    }

    // Re-expresses the polynomial over a superset variable list.
    Polynomial with_variables(const std::vector<std::string>& new_vars) const {
        std::vector<std::size_t> where(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end()) {
                if (involves(i)) throw std::invalid_argument("variable " + vars_[i] + " missing from target list");
                where[i] = 0;
            } else {
                where[i] = static_cast<std::size_t>(it - new_vars.begin());
            }
        }
        Polynomial r(new_vars);
        for (const auto& [e, c] : terms_) {
            Exponents ne(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) ne[where[i]] += e[i];
            auto [it, inserted] = r.terms_.try_emplace(std::move(ne), c);
            if (!inserted) it->second += c;
        }
        r.prune();
        return r;
    }

    // p(x + pt): germ extraction at a rational point.
    Polynomial translate_to_origin(const AffinePoint& pt) const {
        if (pt.size() != vars_.size()) throw std::invalid_argument("point arity mismatch");
        std::map<std::string, Polynomial> b;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            b.emplace(vars_[i], variable(vars_, i) + constant(vars_, pt[i]));
        }
        return substitute(b);
    }

    // Part of the polynomial of exact total degree d.
    Polynomial homogeneous_part(long d) const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == d) r.terms_[e] = c;
        return r;
    }

    // Drops all terms of total degree > d; returns whether anything was dropped.
    bool truncate_above(long d) {
        bool dropped = false;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (total_degree(it->first) > d) {
                it = terms_.erase(it);
                dropped = true;
            } else {
                ++it;
            }
        }
        return dropped;
    }

    // Coefficient of var^k, as a polynomial over the same variable list.
    Polynomial coefficient_of(std::size_t var, int k) const {
        Polynomial r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Exponents d = e;
            d[var] = 0;
            r.terms_[std::move(d)] = c;
        }
        return r;
    }

    static long total_degree(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0L);
    }

    std::string str() const;

private:
    void require_same_vars(const Polynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("variable-list mismatch");
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// ---------------------------------------------------------------------------
// Printing. Terms in descending grlex order; round-trips through parse().

inline std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || mag != 1) {
            out << mag.str();
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace delpezzo
