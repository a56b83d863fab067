#pragma once

// Exceptional-curve diagrams: typed intersection graphs, K_n minimal and
// right-resolution chains, Gram matrices with exact definiteness tests,
// Du Val / logarithmic parts, ADE subdiagram enumeration and elliptic-pencil
// verification.
//
// Vertex legend: black = -2 curve, transparent = -1, double_transparent = -4,
// crossed = -3.

#include "delpezzo/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace delpezzo {

enum class VertexKind { Black, Transparent, DoubleTransparent, Crossed };

inline int self_intersection_of(VertexKind k) {
    switch (k) {
        case VertexKind::Black: return -2;
        case VertexKind::Transparent: return -1;
        case VertexKind::DoubleTransparent: return -4;
        case VertexKind::Crossed: return -3;
    }
    throw std::logic_error("bad vertex kind");
}

inline VertexKind kind_of_self_intersection(int s) {
    switch (s) {
        case -2: return VertexKind::Black;
        case -1: return VertexKind::Transparent;
        case -4: return VertexKind::DoubleTransparent;
        case -3: return VertexKind::Crossed;
    }
    throw std::invalid_argument("self-intersection " + std::to_string(s) + " has no vertex kind");
}

inline std::string kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Black: return "black";
        case VertexKind::Transparent: return "transparent";
        case VertexKind::DoubleTransparent: return "double_transparent";
        case VertexKind::Crossed: return "crossed";
    }
    return "?";
}

inline VertexKind kind_from_name(const std::string& s) {
    if (s == "black") return VertexKind::Black;
    if (s == "transparent") return VertexKind::Transparent;
    if (s == "double_transparent") return VertexKind::DoubleTransparent;
    if (s == "crossed") return VertexKind::Crossed;
    throw std::invalid_argument("unknown vertex kind: " + s);
}

struct Vertex {
    int id;
    int self_intersection;
    VertexKind kind;
};

struct Edge {
    int a;
    int b;
    int multiplicity = 1;
};

class Diagram {
public:
    Diagram() = default;

    void add_vertex(int id, VertexKind kind) {
        if (index_.count(id)) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
        index_[id] = vertices_.size();
        vertices_.push_back({id, self_intersection_of(kind), kind});
    }

    void add_vertex_self(int id, int self) { add_vertex(id, kind_of_self_intersection(self)); }

    void add_edge(int a, int b, int mult = 1) {
        if (a == b) throw std::invalid_argument("self-loops are not allowed");
        if (!index_.count(a) || !index_.count(b)) throw std::invalid_argument("edge references unknown vertex");
        if (mult < 1) throw std::invalid_argument("edge multiplicity must be positive");
        if (a > b) std::swap(a, b);
        edges_.push_back({a, b, mult});
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return vertices_.size(); }

    bool has_vertex(int id) const { return index_.count(id) > 0; }

    const Vertex& vertex(int id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
        return vertices_[it->second];
    }

    std::size_t position(int id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex id " + std::to_string(id));
        return it->second;
    }

    // total intersection number between two distinct vertices
    int pairing(int a, int b) const {
        if (a > b) std::swap(a, b);
        int sum = 0;
        for (const auto& e : edges_)
            if (e.a == a && e.b == b) sum += e.multiplicity;
        return sum;
    }

    std::vector<int> neighbors(int id) const {
        std::set<int> out;
        for (const auto& e : edges_) {
            if (e.a == id) out.insert(e.b);
            if (e.b == id) out.insert(e.a);
        }
        return {out.begin(), out.end()};
    }

    Diagram induced(const std::vector<int>& ids) const {
        Diagram d;
        for (int id : ids) d.add_vertex(id, vertex(id).kind);
        std::set<int> keep(ids.begin(), ids.end());
        for (const auto& e : edges_)
            if (keep.count(e.a) && keep.count(e.b)) d.add_edge(e.a, e.b, e.multiplicity);
        return d;
    }

    std::vector<std::vector<int>> connected_components() const {
        std::map<int, int> comp;
        int n_comp = 0;
        for (const auto& v : vertices_) {
            if (comp.count(v.id)) continue;
            int c = n_comp++;
            std::vector<int> stack{v.id};
            comp[v.id] = c;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (int nb : neighbors(cur)) {
                    if (!comp.count(nb)) {
                        comp[nb] = c;
                        stack.push_back(nb);
                    }
                }
            }
        }
        std::vector<std::vector<int>> out(n_comp);
        for (const auto& v : vertices_) out[comp[v.id]].push_back(v.id);
        return out;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<int, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// K_n diagrams.

// Minimal resolution of a K_n point: -4 for n=1, [-3]-[-3] for n=2, and two
// -3 ends joined by a chain of n-2 black vertices for n >= 3.
inline Diagram kn_minimal(int n) {
    if (n < 1) throw std::invalid_argument("K_n requires n >= 1");
    Diagram d;
    if (n == 1) {
        d.add_vertex_self(0, -4);
        return d;
    }
    d.add_vertex_self(0, -3);
    for (int i = 1; i + 1 < n; ++i) d.add_vertex_self(i, -2);
    d.add_vertex_self(n - 1, -3);
    for (int i = 0; i + 1 < n; ++i) d.add_edge(i, i + 1);
    return d;
}

// Right resolution, computed by simulating the blow-up of every intersection
// point of kn_minimal: each blow-up drops both endpoints' self-intersection
// by one and inserts a -1 vertex between them.
inline Diagram kn_right_resolution(int n) {
    Diagram min = kn_minimal(n);
    std::map<int, int> self;
    for (const auto& v : min.vertices()) self[v.id] = v.self_intersection;
    struct NewEdge {
        int a, b;
    };
    std::vector<NewEdge> chain_edges;
    int next_id = static_cast<int>(min.size());
    for (const auto& e : min.edges()) {
        for (int k = 0; k < e.multiplicity; ++k) {
            self[e.a] -= 1;
            self[e.b] -= 1;
            int mid = next_id++;
            self[mid] = -1;
            chain_edges.push_back({e.a, mid});
            chain_edges.push_back({mid, e.b});
        }
    }
    // rebuild in chain order: original vertex i sits at position 2i
    Diagram out;
    std::vector<int> order;
    for (int i = 0; i < static_cast<int>(min.size()); ++i) {
        order.push_back(i);
        if (i + 1 < static_cast<int>(min.size())) order.push_back(static_cast<int>(min.size()) + i);
    }
    for (int id : order) out.add_vertex_self(id, self.at(id));
    for (const auto& e : chain_edges) out.add_edge(e.a, e.b);
    return out;
}

// ---------------------------------------------------------------------------
// Gram matrices and negative definiteness.

inline std::vector<std::vector<Int>> gram_matrix(const Diagram& d) {
    const std::size_t n = d.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = d.vertices()[i].self_intersection;
    for (const auto& e : d.edges()) {
        std::size_t i = d.position(e.a), j = d.position(e.b);
        m[i][j] += e.multiplicity;
        m[j][i] += e.multiplicity;
    }
    return m;
}

// Exact sign test on leading principal minors: fraction-free elimination
// whose pivots are the nested minors. Any zero pivot already refutes strict
// definiteness.
inline bool is_negative_definite(const Diagram& d) {
    auto m = gram_matrix(d);
    const std::size_t n = m.size();
    if (n == 0) return true;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Int pivot = m[k][k];  // equals the k+1-st leading principal minor
        bool want_positive = (k % 2 == 1);
        if (pivot == 0) return false;
        if (want_positive != (pivot > 0)) return false;
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = pivot;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Du Val and logarithmic parts.

inline Diagram duv_part(const Diagram& d) {
    std::vector<int> keep;
    for (const auto& v : d.vertices())
        if (v.kind == VertexKind::Black) keep.push_back(v.id);
    return d.induced(keep);
}

// Double-transparent vertices plus the transparent ones tied to two of them
// (counting intersection points, i.e. edge multiplicities).
inline Diagram log_part(const Diagram& d) {
    std::vector<int> keep;
    for (const auto& v : d.vertices()) {
        if (v.kind == VertexKind::DoubleTransparent) {
            keep.push_back(v.id);
        } else if (v.kind == VertexKind::Transparent) {
            int incidences = 0;
            for (const auto& e : d.edges()) {
                int other = -1;
                if (e.a == v.id) other = e.b;
                if (e.b == v.id) other = e.a;
                if (other >= 0 && d.vertex(other).kind == VertexKind::DoubleTransparent)
                    incidences += e.multiplicity;
            }
            if (incidences >= 2) keep.push_back(v.id);
        }
    }
    return d.induced(keep);
}

// C_g intersection numbers from the diagram legend: 0 on black and
// double-transparent vertices, 2 - i on transparent ones where i counts the
// intersection points with double-transparent curves. Crossed vertices only
// occur in minimal (not right) resolutions and are omitted.
inline std::map<int, int> cg_intersections(const Diagram& d) {
    std::map<int, int> out;
    for (const auto& v : d.vertices()) {
        if (v.kind == VertexKind::Black || v.kind == VertexKind::DoubleTransparent) {
            out[v.id] = 0;
        } else if (v.kind == VertexKind::Transparent) {
            int i = 0;
            for (const auto& e : d.edges()) {
                int other = -1;
                if (e.a == v.id) other = e.b;
                if (e.b == v.id) other = e.a;
                if (other >= 0 && d.vertex(other).kind == VertexKind::DoubleTransparent)
                    i += e.multiplicity;
            }
            out[v.id] = 2 - i;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Configuration names.

// A multiset of lettered Dynkin components, e.g. "2A_3 A_1". Canonical order:
// letter A < D < E < K, then descending index.
class ConfigName {
public:
    ConfigName() = default;

    void add(char letter, int index, int count = 1) {
        if (letter != 'A' && letter != 'D' && letter != 'E' && letter != 'K')
            throw std::invalid_argument("configuration letter must be A, D, E or K");
        if (index < 1 || count < 1) throw std::invalid_argument("bad configuration entry");
        counts_[{letter, index}] += count;
    }

    bool empty() const { return counts_.empty(); }

    const std::map<std::pair<char, int>, int>& entries() const { return counts_; }

    std::string str() const {
        if (counts_.empty()) return "∅";
        std::ostringstream out;
        bool first = true;
        // letter ascending, index descending
        std::vector<std::pair<std::pair<char, int>, int>> items(counts_.begin(), counts_.end());
        std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
            if (x.first.first != y.first.first) return x.first.first < y.first.first;
            return x.first.second > y.first.second;
        });
        for (const auto& [key, count] : items) {
            if (!first) out << " ";
            first = false;
            if (count > 1) out << count;
            out << key.first << "_" << key.second;
        }
        return out.str();
    }

    // Each component doubled: the symmetric-pair convention of the fixtures.
    ConfigName doubled() const {
        ConfigName d;
        for (const auto& [key, count] : counts_) d.add(key.first, key.second, 2 * count);
        return d;
    }

    static ConfigName parse(const std::string& text);

    bool operator<(const ConfigName& o) const { return counts_ < o.counts_; }
    bool operator==(const ConfigName& o) const { return counts_ == o.counts_; }

private:
    std::map<std::pair<char, int>, int> counts_;
};

// Accepts "2A_3 A_1", "A3 A1" and "∅"/"empty"; components are
// whitespace-separated tokens of the form [count]Letter[_]index.
inline ConfigName ConfigName::parse(const std::string& text) {
    ConfigName cfg;
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> tokens;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) return cfg;
    if (tokens.size() == 1 && (tokens[0] == "∅" || tokens[0] == "empty")) return cfg;
    for (const std::string& s : tokens) {
        std::size_t i = 0;
        int count = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            count = count * 10 + (s[i++] - '0');
        if (count == 0) count = 1;
        if (i >= s.size()) throw std::invalid_argument("malformed configuration name: " + text);
        char letter = s[i++];
        if (i < s.size() && s[i] == '_') ++i;
        int index = 0;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            index = index * 10 + (s[i++] - '0');
            ++digits;
        }
        if (digits == 0 || i != s.size())
            throw std::invalid_argument("malformed configuration name: " + text);
        cfg.add(letter, index, count);
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// ADE shape recognition and subdiagram enumeration.

namespace detail {

// Chain/fork detection of one connected all-black component. Returns the
// canonical (letter, index) or throws if the shape is not ADE.
inline std::pair<char, int> ade_component_type(const Diagram& comp) {
    const std::size_t n = comp.size();
    if (n == 0) throw std::invalid_argument("empty component");
    for (const auto& v : comp.vertices())
        if (v.kind != VertexKind::Black)
            throw std::invalid_argument("ADE diagrams must consist of black (-2) vertices");
    for (const auto& e : comp.edges())
        if (e.multiplicity != 1) throw std::invalid_argument("ADE diagrams have simple edges");
    // degree profile
    std::map<int, int> degree;
    for (const auto& v : comp.vertices()) degree[v.id] = 0;
    for (const auto& e : comp.edges()) {
        degree[e.a] += 1;
        degree[e.b] += 1;
    }
    if (comp.edges().size() != n - 1) throw std::invalid_argument("ADE diagrams are trees");
    std::vector<int> forks;
    for (const auto& [id, deg] : degree) {
        if (deg > 3) throw std::invalid_argument("vertex degree exceeds 3: not an ADE shape");
        if (deg == 3) forks.push_back(id);
    }
    if (forks.size() > 1) throw std::invalid_argument("more than one fork: not an ADE shape");
    if (forks.empty()) return {'A', static_cast<int>(n)};
    // arm lengths from the fork
    std::vector<int> arms;
    for (int nb : comp.neighbors(forks[0])) {
        int len = 1;
        int prev = forks[0], cur = nb;
        while (true) {
            auto nbs = comp.neighbors(cur);
            int next = -1;
            for (int x : nbs)
                if (x != prev) next = x;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw std::logic_error("fork without three arms");
    if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {'E', arms[2] + 4};
    throw std::invalid_argument("fork arms do not match any ADE shape");
}

}  // namespace detail

// Canonical name of a disjoint union of ADE-shaped black diagrams.
inline ConfigName ade_config_of(const Diagram& d) {
    ConfigName cfg;
    for (const auto& comp_ids : d.connected_components()) {
        auto [letter, index] = detail::ade_component_type(d.induced(comp_ids));
        cfg.add(letter, index);
    }
    return cfg;
}

// All induced subdiagrams up to isomorphism, canonically named; includes ∅.
inline std::set<ConfigName> enumerate_ade_subdiagrams(const Diagram& d) {
    ade_config_of(d);  // validates the shape
    const std::size_t n = d.size();
    if (n > 24) throw std::invalid_argument("diagram too large for subset enumeration");
    std::vector<int> ids;
    for (const auto& v : d.vertices()) ids.push_back(v.id);
    std::set<ConfigName> out;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) subset.push_back(ids[i]);
        out.insert(ade_config_of(d.induced(subset)));
    }
    return out;
}

// Builds the disjoint union of ADE diagrams named by a configuration,
// e.g. "2D_4 A_3". Vertex ids are assigned consecutively.
inline Diagram ade_diagram(const ConfigName& cfg) {
    Diagram d;
    int next = 0;
    auto add_chain = [&](int len) {
        int start = next;
        for (int i = 0; i < len; ++i) d.add_vertex_self(next++, -2);
        for (int i = 0; i + 1 < len; ++i) d.add_edge(start + i, start + i + 1);
        return start;
    };
    for (const auto& [key, count] : cfg.entries()) {
        auto [letter, index] = key;
        for (int c = 0; c < count; ++c) {
            if (letter == 'A') {
                add_chain(index);
            } else if (letter == 'D') {
                if (index < 4) throw std::invalid_argument("D_n requires n >= 4");
                int start = add_chain(index - 1);
                d.add_vertex_self(next, -2);
                d.add_edge(start + 1, next);  // pendant at the second chain vertex
                ++next;
            } else if (letter == 'E') {
                if (index < 6 || index > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
                int start = add_chain(index - 1);
                d.add_vertex_self(next, -2);
                d.add_edge(start + 2, next);  // pendant at the third chain vertex
                ++next;
            } else {
                throw std::invalid_argument("only A/D/E diagrams can be built from a configuration");
            }
        }
    }
    return d;
}

inline Diagram ade_diagram(const std::string& name) { return ade_diagram(ConfigName::parse(name)); }

// ---------------------------------------------------------------------------
// Elliptic pencils.

// True iff E = sum mult(v)·v has E·v = 0 for every vertex of the support and
// E·E = 0, in exact Gram arithmetic.
inline bool elliptic_pencil_check(const Diagram& d, const std::map<int, int>& mult) {
    for (const auto& [id, m] : mult) {
        if (!d.has_vertex(id)) throw std::invalid_argument("multiplicity on unknown vertex " + std::to_string(id));
        if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    }
    auto gram = gram_matrix(d);
    const std::size_t n = d.size();
    std::vector<Int> vec(n, 0);
    for (const auto& [id, m] : mult) vec[d.position(id)] = m;
    std::vector<Int> image(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) image[i] += gram[i][j] * vec[j];
    for (const auto& [id, m] : mult)
        if (image[d.position(id)] != 0) return false;
    Int e2 = 0;
    for (std::size_t i = 0; i < n; ++i) e2 += vec[i] * image[i];
    return e2 == 0;
}

}  // namespace delpezzo
