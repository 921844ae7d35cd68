#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

struct Arrow {
    std::string name;
    int src = 0;
    int dst = 0;
};

/// Finite directed multigraph with labelled nodes; loops allowed.
class Quiver {
public:
    int add_node(const std::string& label);  // returns the existing index if present
    int node_index(const std::string& label) const;  // -1 if absent
    void add_arrow(const std::string& name, const std::string& src, const std::string& dst);
    void add_arrow(const std::string& name, int src, int dst);

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int multiplicity(int src, int dst) const;
    int arrow_index(const std::string& name) const;  // -1 if absent

    /// Adjacency matrix literal, rows are sources; node labels are 1..n.
    static Quiver from_adjacency(const std::vector<std::vector<int>>& adj);

private:
    std::vector<std::string> nodes_;
    std::vector<Arrow> arrows_;
};

enum class GraphFamily { A, D, E6, E7, E8, AffineA, AffineD, AffineE6, AffineE7, AffineE8, Neither };

struct GraphClass {
    GraphFamily family = GraphFamily::Neither;
    int rank = 0;  // n in A_n, D_n, ~A_n, ~D_n; 6,7,8 for the E types

    bool finite() const;
    bool affine() const;
    std::string name() const;  // "A_4", "~D_5", "E_6", "Neither"
    bool operator==(const GraphClass&) const = default;
};

/// Throws Disconnected.
GraphClass classify_underlying(const Quiver& q);

enum class RepType { Semisimple, Finite, Tame, Wild };
std::string to_string(RepType t);

/// Throws NotAcyclic. Componentwise: Wild beats Tame beats Finite.
RepType path_algebra_rep_type(const Quiver& q);

/// Nodes i' (index i) and i'' (index n+i); one arrow i' -> j'' per arrow i -> j.
Quiver bipartite_double(const Quiver& q);

enum class RadicalSquareZeroType { FiniteOrUndetermined, TameOrWild, Wild };
std::string to_string(RadicalSquareZeroType t);
RadicalSquareZeroType radical_square_zero_rep_type(const Quiver& q);

/// Sum of x_i^2 minus sum over arrows i -> j of x_i x_j. Throws DimensionMismatch.
long long tits_form(const Quiver& q, const std::vector<long long>& x);

struct TitsSweep {
    bool positive = true;     // q > 0 on every nonzero box vector
    bool nonnegative = true;  // q >= 0 on the box
    std::optional<std::vector<long long>> negative_witness;  // first in enumeration order
    std::optional<std::vector<long long>> radical_witness;   // first nonzero with q = 0
};

/// Exhaustive sweep over 0 <= x_i <= bound in lexicographic order (last coordinate fastest).
TitsSweep tits_sweep(const Quiver& q, int bound);
TitsSweep tits_sweep_serial(const Quiver& q, int bound);

struct NonnegativityResult {
    bool nonnegative = true;
    std::vector<long long> witness;  // set when !nonnegative
};
NonnegativityResult is_weakly_nonnegative_upto(const Quiver& q, int bound);

struct WildWitness {
    std::string pattern;       // "two-sources-two-sinks-tail", "double-loop-arrow", "cycle-with-incident-edge"
    std::vector<int> nodes;    // embedding of the pattern nodes
    std::string detail;
};

/// First match among: the five-node pattern (either orientation), the double-loop patterns,
/// and (only with ext_symmetric) a cycle of length >= 3 with an incident extra edge.
std::optional<WildWitness> find_wild_pattern(const Quiver& q, bool ext_symmetric);

/// Lines "name: src -> dst"; '#' starts a comment. Throws ParseError.
Quiver parse_quiver(std::string_view text);
std::string to_text(const Quiver& q);

}  // namespace hecke
