#pragma once

#include "hecke/pathalg.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke {

/// `Southwest` joins x_k and x_{k+1} by an arrow x_{k+1} -> x_k; `Southeast` by x_k -> x_{k+1}.
enum class Direction { Southwest, Southeast };

struct Letter {
    int arrow = 0;
    Direction dir = Direction::Southwest;
    auto operator<=>(const Letter&) const = default;
};

/// Letters read left to right. A word with no letters is the trivial string at `node`.
struct StringWord {
    int node = 0;
    std::vector<Letter> letters;

    int dimension() const { return static_cast<int>(letters.size()) + 1; }
    auto operator<=>(const StringWord&) const = default;
};

/// Quiver nodes visited by the diagram, left to right.
std::vector<int> vertex_nodes(const Quiver& q, const StringWord& w);
/// Reverse the letters and flip every direction.
StringWord mirror(const Quiver& q, const StringWord& w);
/// The smaller of a word and its mirror.
StringWord canonicalize(const Quiver& q, const StringWord& w);

/// A string algebra with its projective and M_alpha strings precomputed.
/// Throws NotStringAlgebra.
class StringAlgebra {
public:
    explicit StringAlgebra(AlgebraPresentation p);

    const AlgebraPresentation& presentation() const { return p_; }
    const Quiver& quiver() const { return p_.quiver; }
    /// True when the path (traversal order) avoids every monomial relation.
    bool survives(const std::vector<int>& traversal) const;
    const std::vector<StringWord>& projectives() const { return projectives_; }
    /// (arrow index, string of P_i / alpha P_i) for each arrow alpha: i -> j.
    const std::vector<std::pair<int, StringWord>>& m_alpha() const { return m_alpha_; }

private:
    std::vector<int> maximal_branch(int arrow) const;

    AlgebraPresentation p_;
    std::vector<std::vector<int>> monomials_;
    std::vector<StringWord> projectives_;
    std::vector<std::pair<int, StringWord>> m_alpha_;
};

bool validate_string(const StringWord& w, const StringAlgebra& a);

/// "Start" is the right end of the word and "end" the left end.
struct PeakDeepFlags {
    bool starts_on_peak = false;
    bool ends_on_peak = false;
    bool starts_in_deep = false;
    bool ends_in_deep = false;
};

PeakDeepFlags peak_deep_flags(const StringWord& w, const StringAlgebra& a);

/// Throws ExcludedModule for projective strings and M_alpha strings.
StringWord ar_translate(const StringWord& w, const StringAlgebra& a);
/// Dimensions of w, tau w, ..., tau^k w.
std::vector<int> dim_orbit(const StringWord& w, const StringAlgebra& a, int k);

struct ComplexityEstimate {
    int complexity = 0;
    std::string note;
};

/// Least s with dims_i <= C (i+1)^(s-1) fitting the observed prefix, plus one.
/// Throws TooFewPoints below six entries.
ComplexityEstimate complexity_estimate(const std::vector<long long>& dims);

/// Letters such as `<nu >beta`; `@node` for a trivial string.
StringWord parse_string(const Quiver& q, std::string_view text);
std::string to_string(const Quiver& q, const StringWord& w);

}  // namespace hecke
