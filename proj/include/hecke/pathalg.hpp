#pragma once

#include "hecke/exactpoly.hpp"
#include "hecke/quiver.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace hecke {

/// A path stored in traversal order; an empty arrow list is the trivial path at `node`.
struct Path {
    int node = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    auto operator<=>(const Path&) const = default;
};

int path_source(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);
/// Function-order rendering: "mu*alpha" means alpha first. Trivial paths print as "e_<node>".
std::string to_string(const Quiver& q, const Path& p);

/// Integer combination of parallel paths, read as "= 0".
struct Relation {
    std::vector<std::pair<BigInt, Path>> terms;

    bool is_monomial() const { return terms.size() == 1; }
};

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    int nilpotency_bound = 12;
};

/// Adds every path of length n as a monomial relation.
void add_radical_power(AlgebraPresentation& p, int n);

/// Residue-class representatives grouped by (source, target, length).
struct PathBasis {
    std::map<std::tuple<int, int, int>, std::vector<Path>> paths_by_class;
    int nilpotency_index = 0;  // least L with all paths of length L in the ideal

    int dimension() const;
    std::vector<Path> all() const;
};

/// Exact linear algebra over the rationals on the ideal generated by the relations.
/// Throws NotAdmissible or NonParallelRelation.
class Quotient {
public:
    explicit Quotient(const AlgebraPresentation& p);
    ~Quotient();
    Quotient(Quotient&&) noexcept;
    Quotient& operator=(Quotient&&) noexcept;

    const PathBasis& basis() const;
    int dimension() const { return basis().dimension(); }
    bool in_ideal(const Path& p) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

PathBasis quotient_basis(const AlgebraPresentation& p);

struct BiserialReport {
    bool special_biserial = true;
    std::string violation;  // e.g. "(b1) at mu"; empty when satisfied
};

BiserialReport is_special_biserial(const AlgebraPresentation& p);
bool is_string_algebra(const AlgebraPresentation& p);

/// Quiver lines `name: src -> dst`, relation lines `rel: lhs = rhs`,
/// directives `truncate: N` (add all paths of length N) and `bound: N`.
/// Paths are `*`-joined arrow names in function order, with `(..)^k` and `name^k` powers.
AlgebraPresentation parse_presentation(std::string_view text);
Path parse_path(const Quiver& q, std::string_view text);

}  // namespace hecke
