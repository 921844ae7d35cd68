#include "hecke/partitions.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace hecke {

Partition::Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
            throw Error(ErrorKind::Parse, "parts must be positive and weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

int Partition::part(int row) const { return row >= 1 && row <= length() ? parts[static_cast<size_t>(row - 1)] : 0; }

Partition Partition::conjugate() const {
    std::vector<int> c;
    int cols = parts.empty() ? 0 : parts[0];
    for (int j = 1; j <= cols; ++j) {
        int k = 0;
        for (int x : parts)
            if (x >= j) ++k;
        c.push_back(k);
    }
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int r = 1; r <= other.length(); ++r)
        if (other.part(r) > part(r)) return false;
    return true;
}

std::vector<int> dominance_chain(const Bipartition& b) {
    const int n = b.size();
    std::vector<int> chain;
    chain.reserve(static_cast<size_t>(2 * n));
    int s = 0;
    for (int k = 1; k <= n; ++k) chain.push_back(s += b.first.part(k));
    for (int k = 1; k <= n; ++k) chain.push_back(s += b.second.part(k));
    return chain;
}

bool dominance_leq(const Bipartition& a, const Bipartition& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::SizeMismatch, to_string(a) + " vs " + to_string(b));
    auto ca = dominance_chain(a);
    auto cb = dominance_chain(b);
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] > cb[i]) return false;
    return true;
}

bool total_order_less(const Bipartition& a, const Bipartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return dominance_chain(a) < dominance_chain(b);
}

Bipartition sharp(const Bipartition& b) { return {b.second, b.first}; }

int residue(const Node& n, int e, int f) {
    int r = n.col - n.row + (n.component == 2 ? f : 0);
    r %= e;
    return r < 0 ? r + e : r;
}

std::vector<Node> addable_nodes(const Bipartition& b) {
    std::vector<Node> out;
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = b.component(c);
        for (int r = 1; r <= p.length() + 1; ++r) {
            int col = p.part(r) + 1;
            if (r == 1 || p.part(r - 1) >= col) out.push_back({c, r, col});
        }
    }
    return out;
}

std::vector<Node> removable_nodes(const Bipartition& b) {
    std::vector<Node> out;
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = b.component(c);
        for (int r = 1; r <= p.length(); ++r)
            if (p.part(r + 1) < p.part(r)) out.push_back({c, r, p.part(r)});
    }
    return out;
}

Bipartition add_node(const Bipartition& b, const Node& n) {
    Bipartition r = b;
    auto& parts = r.component(n.component).parts;
    if (n.row == static_cast<int>(parts.size()) + 1) {
        parts.push_back(1);
    } else {
        parts[static_cast<size_t>(n.row - 1)] += 1;
    }
    return r;
}

Bipartition remove_node(const Bipartition& b, const Node& n) {
    Bipartition r = b;
    auto& parts = r.component(n.component).parts;
    if (--parts[static_cast<size_t>(n.row - 1)] == 0) parts.pop_back();
    return r;
}

std::vector<int> content_multiset(const Bipartition& b, int e, int f) {
    std::vector<int> counts(static_cast<size_t>(e), 0);
    for (int c = 1; c <= 2; ++c) {
        const Partition& p = b.component(c);
        for (int r = 1; r <= p.length(); ++r)
            for (int col = 1; col <= p.part(r); ++col) ++counts[static_cast<size_t>(residue({c, r, col}, e, f))];
    }
    return counts;
}

CoreWeight e_core_and_weight(const Partition& p, int e) {
    if (e < 2) throw Error(ErrorKind::BadConfig, "e must be at least 2");
    // Pad to a multiple of e beads so runner positions are stable.
    int beads = p.length();
    beads += (e - beads % e) % e;
    std::vector<int> on_runner(static_cast<size_t>(e), 0);
    int moves = 0;
    for (int i = 1; i <= beads; ++i) {
        int beta = p.part(i) + beads - i;
        int runner = beta % e;
        int level = beta / e;
        ++on_runner[static_cast<size_t>(runner)];
        moves += level;
    }
    // Each runner's beads pushed to the top occupy levels 0..k-1.
    std::vector<int> core_beta;
    for (int r = 0; r < e; ++r) {
        int k = on_runner[static_cast<size_t>(r)];
        moves -= k * (k - 1) / 2;
        for (int lvl = 0; lvl < k; ++lvl) core_beta.push_back(lvl * e + r);
    }
    std::sort(core_beta.rbegin(), core_beta.rend());
    std::vector<int> parts;
    for (int i = 1; i <= beads; ++i) parts.push_back(core_beta[static_cast<size_t>(i - 1)] - (beads - i));
    return {Partition(std::move(parts)), moves};
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& a : partitions_of(k))
            for (const auto& b : partitions_of(n - k)) out.push_back({a, b});
    return out;
}

Partition hook(int arm_plus_one, int leg) {
    std::vector<int> parts{arm_plus_one};
    for (int i = 0; i < leg; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts[i]);
    }
    return s;
}

std::string to_string(const Bipartition& b) { return "[" + to_string(b.first) + "|" + to_string(b.second) + "]"; }

Partition parse_partition(std::string_view s) {
    std::vector<int> parts;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i == s.size()) return {};
    while (true) {
        skip();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::Parse, "expected a part in '" + std::string(s) + "'");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        parts.push_back(v);
        skip();
        if (i == s.size()) break;
        if (s[i] != ',') throw Error(ErrorKind::Parse, "expected ',' in '" + std::string(s) + "'");
        ++i;
    }
    if (parts.size() == 1 && parts[0] == 0) return {};
    return Partition(std::move(parts));
}

Bipartition parse_bipartition(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string_view::npos || s[b] != '[' || s[e] != ']')
        throw Error(ErrorKind::Parse, "bipartition must look like [2,1|3]: '" + std::string(s) + "'");
    auto inner = s.substr(b + 1, e - b - 1);
    auto bar = inner.find('|');
    if (bar == std::string_view::npos || inner.find('|', bar + 1) != std::string_view::npos)
        throw Error(ErrorKind::Parse, "bipartition needs exactly one '|': '" + std::string(s) + "'");
    return {parse_partition(inner.substr(0, bar)), parse_partition(inner.substr(bar + 1))};
}

}  // namespace hecke
