#include "hecke/crystal.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hecke {

void CrystalConfig::validate() const {
    if (e < 2) throw Error(ErrorKind::BadConfig, "e must be at least 2");
    if (f < 0 || 2 * f > e) throw Error(ErrorKind::BadConfig, "f must satisfy 0 <= f <= e/2");
}

bool node_above(const Node& a, const Node& b) {
    static_assert(kNodeOrder == NodeOrder::ComponentThenRow);
    if (a.component != b.component) return a.component < b.component;
    return a.row < b.row;
}

ResidueNodes residue_nodes(const Bipartition& b, int i, const CrystalConfig& cfg) {
    ResidueNodes r;
    for (const auto& n : addable_nodes(b))
        if (residue(n, cfg.e, cfg.f) == i) r.addable.push_back(n);
    for (const auto& n : removable_nodes(b))
        if (residue(n, cfg.e, cfg.f) == i) r.removable.push_back(n);
    std::sort(r.addable.begin(), r.addable.end(), node_above);
    std::sort(r.removable.begin(), r.removable.end(), node_above);
    return r;
}

Signature signature(const Bipartition& b, int i, const CrystalConfig& cfg) {
    ResidueNodes rn = residue_nodes(b, i, cfg);
    std::vector<std::pair<Node, bool>> seq;  // (node, is_addable)
    for (const auto& n : rn.addable) seq.push_back({n, true});
    for (const auto& n : rn.removable) seq.push_back({n, false});
    std::sort(seq.begin(), seq.end(), [](const auto& x, const auto& y) { return node_above(x.first, y.first); });
    Signature sig;
    std::vector<Node> open_removable;
    for (const auto& [n, add] : seq) {
        if (!add) {
            open_removable.push_back(n);
        } else if (!open_removable.empty()) {
            open_removable.pop_back();
        } else {
            sig.conormal.push_back(n);
        }
    }
    sig.normal = std::move(open_removable);
    return sig;
}

std::optional<Bipartition> f_tilde(const Bipartition& b, int i, const CrystalConfig& cfg) {
    Signature s = signature(b, i, cfg);
    if (s.conormal.empty()) return std::nullopt;
    return add_node(b, s.conormal.back());
}

std::optional<Bipartition> e_tilde(const Bipartition& b, int i, const CrystalConfig& cfg) {
    Signature s = signature(b, i, cfg);
    if (s.normal.empty()) return std::nullopt;
    return remove_node(b, s.normal.front());
}

int epsilon(const Bipartition& b, int i, const CrystalConfig& cfg) {
    return static_cast<int>(signature(b, i, cfg).normal.size());
}

int phi(const Bipartition& b, int i, const CrystalConfig& cfg) {
    return static_cast<int>(signature(b, i, cfg).conormal.size());
}

std::vector<int> crystal_path(const Bipartition& b, const CrystalConfig& cfg) {
    cfg.validate();
    std::vector<int> rev;
    Bipartition cur = b;
    while (cur.size() > 0) {
        bool moved = false;
        for (int i = cfg.e - 1; i >= 0; --i) {
            if (auto prev = e_tilde(cur, i, cfg)) {
                rev.push_back(i);
                cur = std::move(*prev);
                moved = true;
                break;
            }
        }
        if (!moved) throw Error(ErrorKind::NotKleshchev, to_string(b));
    }
    return {rev.rbegin(), rev.rend()};
}

bool is_kleshchev(const Bipartition& b, const CrystalConfig& cfg) {
    try {
        crystal_path(b, cfg);
        return true;
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::NotKleshchev) return false;
        throw;
    }
}

std::optional<Bipartition> apply_path(const std::vector<int>& residues, const CrystalConfig& cfg) {
    Bipartition cur;
    for (int i : residues) {
        auto next = f_tilde(cur, i, cfg);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

namespace {

void sort_unique(std::vector<Bipartition>& v) {
    std::sort(v.begin(), v.end(), total_order_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Bipartition> crystal_layer_serial(int n, const CrystalConfig& cfg) {
    cfg.validate();
    std::vector<Bipartition> layer{Bipartition{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<Bipartition> next;
        for (const auto& b : layer)
            for (int i = 0; i < cfg.e; ++i)
                if (auto c = f_tilde(b, i, cfg)) next.push_back(std::move(*c));
        sort_unique(next);
        layer = std::move(next);
    }
    return layer;
}

std::vector<Bipartition> crystal_layer(int n, const CrystalConfig& cfg) {
    cfg.validate();
    std::vector<Bipartition> layer{Bipartition{}};
    for (int k = 1; k <= n; ++k) {
        const long long count = static_cast<long long>(layer.size());
        std::vector<std::vector<Bipartition>> per(layer.size());
#pragma omp parallel for schedule(dynamic, 16)
        for (long long j = 0; j < count; ++j) {
            auto& out = per[static_cast<size_t>(j)];
            for (int i = 0; i < cfg.e; ++i)
                if (auto c = f_tilde(layer[static_cast<size_t>(j)], i, cfg)) out.push_back(std::move(*c));
        }
        std::vector<Bipartition> next;
        for (auto& p : per)
            for (auto& b : p) next.push_back(std::move(b));
        sort_unique(next);
        layer = std::move(next);
    }
    return layer;
}

std::vector<CrystalEdge> crystal_edges_into(int n, const CrystalConfig& cfg) {
    std::vector<CrystalEdge> edges;
    if (n < 1) return edges;
    for (const auto& b : crystal_layer(n - 1, cfg))
        for (int i = 0; i < cfg.e; ++i)
            if (auto c = f_tilde(b, i, cfg)) edges.push_back({b, *c, i});
    std::sort(edges.begin(), edges.end());
    return edges;
}

Bipartition h_involution(const Bipartition& b, const CrystalConfig& cfg) {
    cfg.validate();
    if (cfg.e % 2 != 0 || 2 * cfg.f != cfg.e)
        throw Error(ErrorKind::BadConfig, "the residue-shift involution needs even e and f = e/2");
    std::vector<int> path = crystal_path(b, cfg);
    for (int& i : path) i = (i + cfg.e / 2) % cfg.e;
    auto image = apply_path(path, cfg);
    if (!image) throw Error(ErrorKind::Internal, "shifted path leaves the crystal for " + to_string(b));
    return *image;
}

int count_simples_type_D(int n, const CrystalConfig& cfg) {
    int fixed = 0;
    int moved = 0;
    for (const auto& b : crystal_layer(n, cfg)) {
        if (h_involution(b, cfg) == b) {
            ++fixed;
        } else {
            ++moved;
        }
    }
    return moved / 2 + 2 * fixed;
}

}  // namespace hecke
