#include "hecke/quiver.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <sstream>

namespace hecke {

int Quiver::add_node(const std::string& label) {
    int idx = node_index(label);
    if (idx >= 0) return idx;
    nodes_.push_back(label);
    return num_nodes() - 1;
}

int Quiver::node_index(const std::string& label) const {
    auto it = std::find(nodes_.begin(), nodes_.end(), label);
    return it == nodes_.end() ? -1 : static_cast<int>(it - nodes_.begin());
}

void Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& dst) {
    int s = add_node(src);
    int d = add_node(dst);
    add_arrow(name, s, d);
}

void Quiver::add_arrow(const std::string& name, int src, int dst) {
    if (arrow_index(name) >= 0) throw Error(ErrorKind::Parse, "duplicate arrow name '" + name + "'");
    arrows_.push_back({name, src, dst});
}

int Quiver::multiplicity(int src, int dst) const {
    int m = 0;
    for (const auto& a : arrows_)
        if (a.src == src && a.dst == dst) ++m;
    return m;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return static_cast<int>(i);
    return -1;
}

Quiver Quiver::from_adjacency(const std::vector<std::vector<int>>& adj) {
    Quiver q;
    for (size_t i = 0; i < adj.size(); ++i) q.add_node(std::to_string(i + 1));
    int k = 0;
    for (size_t i = 0; i < adj.size(); ++i)
        for (size_t j = 0; j < adj[i].size(); ++j)
            for (int m = 0; m < adj[i][j]; ++m) q.add_arrow("a" + std::to_string(++k), static_cast<int>(i), static_cast<int>(j));
    return q;
}

bool GraphClass::finite() const {
    return family == GraphFamily::A || family == GraphFamily::D || family == GraphFamily::E6 ||
           family == GraphFamily::E7 || family == GraphFamily::E8;
}

bool GraphClass::affine() const { return family != GraphFamily::Neither && !finite(); }

std::string GraphClass::name() const {
    switch (family) {
        case GraphFamily::A: return "A_" + std::to_string(rank);
        case GraphFamily::D: return "D_" + std::to_string(rank);
        case GraphFamily::E6: return "E_6";
        case GraphFamily::E7: return "E_7";
        case GraphFamily::E8: return "E_8";
        case GraphFamily::AffineA: return "~A_" + std::to_string(rank);
        case GraphFamily::AffineD: return "~D_" + std::to_string(rank);
        case GraphFamily::AffineE6: return "~E_6";
        case GraphFamily::AffineE7: return "~E_7";
        case GraphFamily::AffineE8: return "~E_8";
        case GraphFamily::Neither: return "Neither";
    }
    return "Neither";
}

std::string to_string(RepType t) {
    switch (t) {
        case RepType::Semisimple: return "semisimple";
        case RepType::Finite: return "finite";
        case RepType::Tame: return "tame";
        case RepType::Wild: return "wild";
    }
    return "wild";
}

std::string to_string(RadicalSquareZeroType t) {
    switch (t) {
        case RadicalSquareZeroType::FiniteOrUndetermined: return "finite-or-undetermined";
        case RadicalSquareZeroType::TameOrWild: return "tame-or-wild";
        case RadicalSquareZeroType::Wild: return "wild";
    }
    return "wild";
}

namespace {

using Matrix = std::vector<std::vector<int>>;

/// Undirected edge multiplicities off the diagonal, loop counts on it.
Matrix undirected(const Quiver& q) {
    const int n = q.num_nodes();
    Matrix m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const auto& a : q.arrows()) {
        if (a.src == a.dst) {
            ++m[static_cast<size_t>(a.src)][static_cast<size_t>(a.src)];
        } else {
            ++m[static_cast<size_t>(a.src)][static_cast<size_t>(a.dst)];
            ++m[static_cast<size_t>(a.dst)][static_cast<size_t>(a.src)];
        }
    }
    return m;
}

std::vector<int> component_labels(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::queue<int> todo;
        todo.push(s);
        comp[static_cast<size_t>(s)] = c;
        while (!todo.empty()) {
            int u = todo.front();
            todo.pop();
            for (int v = 0; v < n; ++v)
                if (v != u && m[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0 && comp[static_cast<size_t>(v)] < 0) {
                    comp[static_cast<size_t>(v)] = c;
                    todo.push(v);
                }
        }
        ++c;
    }
    return comp;
}

std::vector<Quiver> components(const Quiver& q) {
    auto comp = component_labels(undirected(q));
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<Quiver> out(static_cast<size_t>(count));
    for (int i = 0; i < q.num_nodes(); ++i) out[static_cast<size_t>(comp[static_cast<size_t>(i)])].add_node(q.nodes()[static_cast<size_t>(i)]);
    for (const auto& a : q.arrows())
        out[static_cast<size_t>(comp[static_cast<size_t>(a.src)])].add_arrow(a.name, q.nodes()[static_cast<size_t>(a.src)],
                                                                              q.nodes()[static_cast<size_t>(a.dst)]);
    return out;
}

GraphClass classify_tree(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) deg[static_cast<size_t>(i)] += m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (deg[static_cast<size_t>(i)] > 4) return {};
        if (deg[static_cast<size_t>(i)] >= 3) branch.push_back(i);
    }
    if (branch.empty()) return {GraphFamily::A, n};
    auto neighbours = [&](int u) {
        std::vector<int> r;
        for (int v = 0; v < n; ++v)
            if (v != u && m[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) r.push_back(v);
        return r;
    };
    if (branch.size() == 1) {
        int c = branch[0];
        if (deg[static_cast<size_t>(c)] == 4) return n == 5 ? GraphClass{GraphFamily::AffineD, 4} : GraphClass{};
        std::vector<int> arms;
        for (int start : neighbours(c)) {
            int prev = c, cur = start, len = 1;
            while (deg[static_cast<size_t>(cur)] == 2) {
                for (int nx : neighbours(cur))
                    if (nx != prev) {
                        prev = cur;
                        cur = nx;
                        break;
                    }
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        const int p = arms[0], q = arms[1], r = arms[2];
        if (p == 1 && q == 1) return {GraphFamily::D, n};
        if (p == 1 && q == 2 && r == 2) return {GraphFamily::E6, 6};
        if (p == 1 && q == 2 && r == 3) return {GraphFamily::E7, 7};
        if (p == 1 && q == 2 && r == 4) return {GraphFamily::E8, 8};
        if (p == 2 && q == 2 && r == 2) return {GraphFamily::AffineE6, 6};
        if (p == 1 && q == 3 && r == 3) return {GraphFamily::AffineE7, 7};
        if (p == 1 && q == 2 && r == 5) return {GraphFamily::AffineE8, 8};
        return {};
    }
    if (branch.size() == 2) {
        for (int b : branch) {
            if (deg[static_cast<size_t>(b)] != 3) return {};
            int leaves = 0;
            for (int v : neighbours(b))
                if (deg[static_cast<size_t>(v)] == 1) ++leaves;
            if (leaves != 2) return {};
        }
        return {GraphFamily::AffineD, n - 1};
    }
    return {};
}

bool has_directed_cycle(const Quiver& q) {
    const int n = q.num_nodes();
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const auto& a : q.arrows()) ++indeg[static_cast<size_t>(a.dst)];
    std::vector<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) ready.push_back(i);
    int seen = 0;
    while (!ready.empty()) {
        int u = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto& a : q.arrows())
            if (a.src == u && --indeg[static_cast<size_t>(a.dst)] == 0) ready.push_back(a.dst);
    }
    return seen != n;
}

}  // namespace

GraphClass classify_underlying(const Quiver& q) {
    const int n = q.num_nodes();
    if (n == 0) throw Error(ErrorKind::Disconnected, "quiver has no nodes");
    Matrix m = undirected(q);
    auto comp = component_labels(m);
    if (*std::max_element(comp.begin(), comp.end()) != 0) throw Error(ErrorKind::Disconnected, "underlying graph is not connected");
    int edges = 0;
    bool doubled = false;
    for (int i = 0; i < n; ++i) {
        if (m[static_cast<size_t>(i)][static_cast<size_t>(i)] > 0) return {};
        for (int j = i + 1; j < n; ++j) {
            int k = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (k >= 3) return {};
            if (k == 2) doubled = true;
            edges += k;
        }
    }
    if (doubled) return n == 2 && edges == 2 ? GraphClass{GraphFamily::AffineA, 1} : GraphClass{};
    if (edges == n - 1) return classify_tree(m);
    if (edges == n && n >= 3) {
        for (int i = 0; i < n; ++i) {
            int d = 0;
            for (int j = 0; j < n; ++j) d += m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (d != 2) return {};
        }
        return {GraphFamily::AffineA, n - 1};
    }
    return {};
}

RepType path_algebra_rep_type(const Quiver& q) {
    if (has_directed_cycle(q)) throw Error(ErrorKind::NotAcyclic, "path algebra would be infinite dimensional");
    RepType worst = RepType::Finite;
    for (const auto& c : components(q)) {
        GraphClass g = classify_underlying(c);
        if (g.family == GraphFamily::Neither) return RepType::Wild;
        if (g.affine()) worst = RepType::Tame;
    }
    return worst;
}

Quiver bipartite_double(const Quiver& q) {
    Quiver d;
    for (const auto& label : q.nodes()) d.add_node(label + "'");
    for (const auto& label : q.nodes()) d.add_node(label + "''");
    for (const auto& a : q.arrows()) d.add_arrow(a.name, a.src, q.num_nodes() + a.dst);
    return d;
}

RadicalSquareZeroType radical_square_zero_rep_type(const Quiver& q) {
    auto verdict = RadicalSquareZeroType::FiniteOrUndetermined;
    for (const auto& c : components(bipartite_double(q))) {
        GraphClass g = classify_underlying(c);
        if (g.family == GraphFamily::Neither) return RadicalSquareZeroType::Wild;
        if (g.affine()) verdict = RadicalSquareZeroType::TameOrWild;
    }
    return verdict;
}

long long tits_form(const Quiver& q, const std::vector<long long>& x) {
    if (static_cast<int>(x.size()) != q.num_nodes())
        throw Error(ErrorKind::DimensionMismatch, "vector has " + std::to_string(x.size()) + " entries for " +
                                                      std::to_string(q.num_nodes()) + " nodes");
    long long s = 0;
    for (long long v : x) s += v * v;
    for (const auto& a : q.arrows()) s -= x[static_cast<size_t>(a.src)] * x[static_cast<size_t>(a.dst)];
    return s;
}

namespace {

struct SweepPlan {
    long long total = 1;
    int base = 1;
};

SweepPlan plan_sweep(const Quiver& q, int bound) {
    if (bound < 1) throw Error(ErrorKind::BadConfig, "bound must be at least 1");
    SweepPlan p;
    p.base = bound + 1;
    for (int i = 0; i < q.num_nodes(); ++i) {
        if (p.total > LLONG_MAX / p.base) throw Error(ErrorKind::BadConfig, "sweep box too large");
        p.total *= p.base;
    }
    return p;
}

std::vector<long long> decode(long long idx, int n, int base) {
    std::vector<long long> x(static_cast<size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        x[static_cast<size_t>(i)] = idx % base;
        idx /= base;
    }
    return x;
}

long long form_at(const Quiver& q, long long idx, int base, std::vector<long long>& scratch) {
    const int n = q.num_nodes();
    for (int i = n - 1; i >= 0; --i) {
        scratch[static_cast<size_t>(i)] = idx % base;
        idx /= base;
    }
    long long s = 0;
    for (long long v : scratch) s += v * v;
    for (const auto& a : q.arrows()) s -= scratch[static_cast<size_t>(a.src)] * scratch[static_cast<size_t>(a.dst)];
    return s;
}

TitsSweep finish_sweep(const Quiver& q, const SweepPlan& p, long long first_neg, long long first_zero) {
    TitsSweep r;
    if (first_neg < p.total) {
        r.nonnegative = false;
        r.positive = false;
        r.negative_witness = decode(first_neg, q.num_nodes(), p.base);
    }
    if (first_zero < p.total) {
        r.positive = false;
        r.radical_witness = decode(first_zero, q.num_nodes(), p.base);
    }
    return r;
}

}  // namespace

TitsSweep tits_sweep_serial(const Quiver& q, int bound) {
    SweepPlan p = plan_sweep(q, bound);
    long long first_neg = p.total, first_zero = p.total;
    std::vector<long long> scratch(static_cast<size_t>(q.num_nodes()));
    for (long long idx = 1; idx < p.total; ++idx) {
        long long v = form_at(q, idx, p.base, scratch);
        if (v < 0 && idx < first_neg) first_neg = idx;
        if (v == 0 && idx < first_zero) first_zero = idx;
    }
    return finish_sweep(q, p, first_neg, first_zero);
}

TitsSweep tits_sweep(const Quiver& q, int bound) {
    SweepPlan p = plan_sweep(q, bound);
    long long first_neg = p.total, first_zero = p.total;
    const long long total = p.total;
    const int base = p.base;
#pragma omp parallel reduction(min : first_neg, first_zero)
    {
        std::vector<long long> scratch(static_cast<size_t>(q.num_nodes()));
#pragma omp for schedule(static)
        for (long long idx = 1; idx < total; ++idx) {
            long long v = form_at(q, idx, base, scratch);
            if (v < 0 && idx < first_neg) first_neg = idx;
            if (v == 0 && idx < first_zero) first_zero = idx;
        }
    }
    return finish_sweep(q, p, first_neg, first_zero);
}

NonnegativityResult is_weakly_nonnegative_upto(const Quiver& q, int bound) {
    TitsSweep s = tits_sweep(q, bound);
    NonnegativityResult r;
    r.nonnegative = s.nonnegative;
    if (s.negative_witness) r.witness = *s.negative_witness;
    return r;
}

namespace {

/// Injective node map with target multiplicities at least the pattern's.
std::optional<std::vector<int>> embed(const Matrix& pattern, const Quiver& q) {
    const int k = static_cast<int>(pattern.size());
    const int n = q.num_nodes();
    if (k > n) return std::nullopt;
    Matrix mult(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (const auto& a : q.arrows()) ++mult[static_cast<size_t>(a.src)][static_cast<size_t>(a.dst)];
    std::vector<int> phi;
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::function<bool()> rec = [&]() -> bool {
        const int x = static_cast<int>(phi.size());
        if (x == k) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<size_t>(cand)]) continue;
            bool ok = pattern[static_cast<size_t>(x)][static_cast<size_t>(x)] <= mult[static_cast<size_t>(cand)][static_cast<size_t>(cand)];
            for (int y = 0; y < x && ok; ++y) {
                int py = phi[static_cast<size_t>(y)];
                ok = pattern[static_cast<size_t>(x)][static_cast<size_t>(y)] <= mult[static_cast<size_t>(cand)][static_cast<size_t>(py)] &&
                     pattern[static_cast<size_t>(y)][static_cast<size_t>(x)] <= mult[static_cast<size_t>(py)][static_cast<size_t>(cand)];
            }
            if (!ok) continue;
            phi.push_back(cand);
            used[static_cast<size_t>(cand)] = true;
            if (rec()) return true;
            phi.pop_back();
            used[static_cast<size_t>(cand)] = false;
        }
        return false;
    };
    if (rec()) return phi;
    return std::nullopt;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m[0].size(), std::vector<int>(m.size(), 0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

std::string label_list(const Quiver& q, const std::vector<int>& nodes) {
    std::string s;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) s += ", ";
        s += q.nodes()[static_cast<size_t>(nodes[i])];
    }
    return s;
}

std::optional<WildWitness> cycle_with_incident_edge(const Quiver& q) {
    Matrix m = undirected(q);
    const int n = q.num_nodes();
    for (int v = 0; v < n; ++v) {
        int weight = 0;
        std::vector<int> nbrs;
        for (int u = 0; u < n; ++u) {
            if (u == v || m[static_cast<size_t>(v)][static_cast<size_t>(u)] == 0) continue;
            weight += m[static_cast<size_t>(v)][static_cast<size_t>(u)];
            nbrs.push_back(u);
        }
        const bool loop = m[static_cast<size_t>(v)][static_cast<size_t>(v)] > 0;
        if (weight < 3 && !loop) continue;
        for (size_t a = 0; a < nbrs.size(); ++a) {
            for (size_t b = a + 1; b < nbrs.size(); ++b) {
                // Shortest path nbrs[a] -> nbrs[b] avoiding v closes a cycle of length >= 3.
                std::vector<int> parent(static_cast<size_t>(n), -2);
                std::queue<int> todo;
                parent[static_cast<size_t>(nbrs[a])] = -1;
                todo.push(nbrs[a]);
                while (!todo.empty() && parent[static_cast<size_t>(nbrs[b])] == -2) {
                    int u = todo.front();
                    todo.pop();
                    for (int w = 0; w < n; ++w)
                        if (w != v && w != u && m[static_cast<size_t>(u)][static_cast<size_t>(w)] > 0 &&
                            parent[static_cast<size_t>(w)] == -2) {
                            parent[static_cast<size_t>(w)] = u;
                            todo.push(w);
                        }
                }
                if (parent[static_cast<size_t>(nbrs[b])] == -2) continue;
                std::vector<int> cycle{v};
                std::vector<int> path;
                for (int w = nbrs[b]; w != -1; w = parent[static_cast<size_t>(w)]) path.push_back(w);
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                std::string extra;
                if (loop) {
                    extra = "loop at " + q.nodes()[static_cast<size_t>(v)];
                } else {
                    int other = -1;
                    for (int u : nbrs)
                        if (u != nbrs[a] && u != nbrs[b]) other = u;
                    if (other < 0) other = m[static_cast<size_t>(v)][static_cast<size_t>(nbrs[a])] > 1 ? nbrs[a] : nbrs[b];
                    extra = "edge " + q.nodes()[static_cast<size_t>(v)] + " - " + q.nodes()[static_cast<size_t>(other)];
                }
                return WildWitness{"cycle-with-incident-edge", cycle,
                                   "cycle (" + label_list(q, cycle) + ") with extra " + extra};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<WildWitness> find_wild_pattern(const Quiver& q, bool ext_symmetric) {
    // Sources a, b; sinks c, d; tail t hanging off b.
    const Matrix five = {
        {0, 0, 1, 1, 0},
        {0, 0, 1, 1, 1},
        {0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0},
    };
    if (auto phi = embed(five, q))
        return WildWitness{"two-sources-two-sinks-tail", *phi, "sources (" + label_list(q, {(*phi)[0], (*phi)[1]}) + "), sinks (" +
                                                                   label_list(q, {(*phi)[2], (*phi)[3]}) + "), tail " +
                                                                   q.nodes()[static_cast<size_t>((*phi)[4])]};
    if (auto phi = embed(transpose(five), q))
        return WildWitness{"two-sources-two-sinks-tail", *phi, "reversed orientation: sinks (" +
                                                                   label_list(q, {(*phi)[0], (*phi)[1]}) + "), sources (" +
                                                                   label_list(q, {(*phi)[2], (*phi)[3]}) + "), tail " +
                                                                   q.nodes()[static_cast<size_t>((*phi)[4])]};
    const Matrix loops_out = {{2, 1}, {0, 0}};
    if (auto phi = embed(loops_out, q))
        return WildWitness{"double-loop-arrow", *phi, "two loops at " + q.nodes()[static_cast<size_t>((*phi)[0])] + " and an arrow to " +
                                                          q.nodes()[static_cast<size_t>((*phi)[1])]};
    if (auto phi = embed(transpose(loops_out), q))
        return WildWitness{"double-loop-arrow", *phi, "two loops at " + q.nodes()[static_cast<size_t>((*phi)[0])] +
                                                          " and an arrow from " + q.nodes()[static_cast<size_t>((*phi)[1])]};
    if (ext_symmetric) return cycle_with_incident_edge(q);
    return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
    Quiver q;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        auto arrow = t.find("->");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'name: src -> dst'");
        std::string name = trim(std::string_view(t).substr(0, colon));
        std::string src = trim(std::string_view(t).substr(colon + 1, arrow - colon - 1));
        std::string dst = trim(std::string_view(t).substr(arrow + 2));
        if (name.empty() || src.empty() || dst.empty())
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": empty name or endpoint");
        q.add_arrow(name, src, dst);
    }
    return q;
}

std::string to_text(const Quiver& q) {
    std::string s;
    for (const auto& a : q.arrows())
        s += a.name + ": " + q.nodes()[static_cast<size_t>(a.src)] + " -> " + q.nodes()[static_cast<size_t>(a.dst)] + "\n";
    return s;
}

}  // namespace hecke
