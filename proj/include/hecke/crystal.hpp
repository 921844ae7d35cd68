#pragma once

#include "hecke/partitions.hpp"

#include <optional>
#include <vector>

namespace hecke {

/// Level-two crystal with highest weight Lambda_0 + Lambda_f, 0 <= f <= e/2.
struct CrystalConfig {
    int e = 2;
    int f = 0;

    void validate() const;  // throws BadConfig
};

/// Total order of nodes used by every signature computation.
/// Nodes are listed top to bottom: component 1 before component 2, then by row.
enum class NodeOrder { ComponentThenRow };
inline constexpr NodeOrder kNodeOrder = NodeOrder::ComponentThenRow;

/// True when a lies strictly above b in kNodeOrder.
bool node_above(const Node& a, const Node& b);

/// i-addable and i-removable nodes, sorted top to bottom.
struct ResidueNodes {
    std::vector<Node> addable;
    std::vector<Node> removable;
};
ResidueNodes residue_nodes(const Bipartition& b, int i, const CrystalConfig& cfg);

/// Reduced i-signature: an (R, A) pair cancels when R lies above A.
/// Survivors read A...A R...R from top to bottom.
struct Signature {
    std::vector<Node> conormal;  // surviving addable, top to bottom
    std::vector<Node> normal;    // surviving removable, top to bottom
};
Signature signature(const Bipartition& b, int i, const CrystalConfig& cfg);

std::optional<Bipartition> f_tilde(const Bipartition& b, int i, const CrystalConfig& cfg);
std::optional<Bipartition> e_tilde(const Bipartition& b, int i, const CrystalConfig& cfg);
int epsilon(const Bipartition& b, int i, const CrystalConfig& cfg);
int phi(const Bipartition& b, int i, const CrystalConfig& cfg);

bool is_kleshchev(const Bipartition& b, const CrystalConfig& cfg);

/// Residue sequence r_1..r_n with b = f~_{r_n} ... f~_{r_1} of the empty bipartition.
/// Each step removes the good node of the largest residue available.
/// Throws NotKleshchev.
std::vector<int> crystal_path(const Bipartition& b, const CrystalConfig& cfg);

/// Applies f~ for each residue in order, starting at the empty bipartition.
std::optional<Bipartition> apply_path(const std::vector<int>& residues, const CrystalConfig& cfg);

/// Kleshchev bipartitions of size n, in total_order_less order.
std::vector<Bipartition> crystal_layer(int n, const CrystalConfig& cfg);
std::vector<Bipartition> crystal_layer_serial(int n, const CrystalConfig& cfg);

struct CrystalEdge {
    Bipartition from;
    Bipartition to;
    int residue = 0;

    auto operator<=>(const CrystalEdge&) const = default;
};

/// All edges from layer n-1 into layer n.
std::vector<CrystalEdge> crystal_edges_into(int n, const CrystalConfig& cfg);

/// Residue-shift involution on the Kleshchev set for even e and f = e/2.
/// Throws NotKleshchev or BadConfig.
Bipartition h_involution(const Bipartition& b, const CrystalConfig& cfg);

/// Number of simples after restriction to the index-two subalgebra:
/// one per non-trivial h-orbit plus two per fixed point.
int count_simples_type_D(int n, const CrystalConfig& cfg);

}  // namespace hecke
