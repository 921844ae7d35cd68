#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

/// Weakly decreasing sequence of positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p);
    explicit Partition(std::vector<int> p);

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int part(int row) const;  // 1-based, 0 past the end
    Partition conjugate() const;
    bool contains(const Partition& other) const;

    auto operator<=>(const Partition&) const = default;
};

struct Bipartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    const Partition& component(int c) const { return c == 1 ? first : second; }
    Partition& component(int c) { return c == 1 ? first : second; }

    auto operator<=>(const Bipartition&) const = default;
};

/// A box of a bipartition: component in {1,2}, 1-based row and column.
struct Node {
    int component = 1;
    int row = 1;
    int col = 1;

    auto operator<=>(const Node&) const = default;
};

/// Partial-sum chain used for dominance; length 2n, padded.
std::vector<int> dominance_chain(const Bipartition& b);

/// Throws SizeMismatch when |a| != |b|.
bool dominance_leq(const Bipartition& a, const Bipartition& b);

/// Total order refining dominance: lexicographic on the partial-sum chain.
bool total_order_less(const Bipartition& a, const Bipartition& b);

Bipartition sharp(const Bipartition& b);

/// Residue (col - row + offset_c) mod e with offset 0 on component 1 and f on component 2.
int residue(const Node& n, int e, int f);

std::vector<Node> addable_nodes(const Bipartition& b);
std::vector<Node> removable_nodes(const Bipartition& b);
Bipartition add_node(const Bipartition& b, const Node& n);
Bipartition remove_node(const Bipartition& b, const Node& n);

/// Counts of each residue 0..e-1 among the boxes of b.
std::vector<int> content_multiset(const Bipartition& b, int e, int f);

struct CoreWeight {
    Partition core;
    int weight = 0;
};

/// e-core and e-weight via beta numbers on an e-runner abacus.
CoreWeight e_core_and_weight(const Partition& p, int e);

std::vector<Partition> partitions_of(int n);
std::vector<Bipartition> bipartitions_of(int n);

Partition hook(int arm_plus_one, int leg);  // (a, 1^leg)

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& b);
Partition parse_partition(std::string_view s);
/// Grammar: "[2,1|3]", "[|1,1]", "[|]".
Bipartition parse_bipartition(std::string_view s);

}  // namespace hecke
