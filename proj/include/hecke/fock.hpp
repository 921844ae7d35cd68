#pragma once

#include "hecke/crystal.hpp"
#include "hecke/exactpoly.hpp"
#include "hecke/partitions.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// Finite combination of bipartitions of one size with Laurent coefficients.
class FockVector {
public:
    using Terms = std::map<Bipartition, LaurentPoly>;

    FockVector() = default;
    static FockVector basis(const Bipartition& b);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LaurentPoly coeff(const Bipartition& b) const;
    void add(const Bipartition& b, const LaurentPoly& c);

    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator*(const LaurentPoly& c, const FockVector& x);
    friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// f_i adds an i-node with weight v^(#addable - #removable i-nodes strictly below it).
FockVector apply_f(const FockVector& x, int i, const CrystalConfig& cfg);
/// e_i removes an i-node with weight v^-(#addable - #removable i-nodes strictly above it).
FockVector apply_e(const FockVector& x, int i, const CrystalConfig& cfg);
/// f_i^m / [m]!; throws NonIntegralQuotient if some coefficient is not divisible.
FockVector divided_f(const FockVector& x, int i, int m, const CrystalConfig& cfg);

/// One factor f_residue^(power) of a monomial; factors apply in list order.
struct DividedPower {
    int residue = 0;
    int power = 1;
    auto operator<=>(const DividedPower&) const = default;
};
using Monomial = std::vector<DividedPower>;

FockVector apply_monomial(const Monomial& m, const CrystalConfig& cfg);
/// Renders as in "f_1 f_0^(2)": leftmost factor applied last.
std::string to_string(const Monomial& m);

struct CanonicalElement {
    Bipartition mu;
    FockVector vec;
    Monomial seed;              // monomial the computation started from
    bool seed_from_g = false;   // seed was f^(m) applied to a smaller canonical element
    bool pure_monomial = false; // no correction terms were needed
};

/// Residue multiset identifying the weight space (block) of a bipartition.
std::vector<int> block_key(const Bipartition& b, const CrystalConfig& cfg);

/// Computes canonical basis elements block by block and caches them.
/// Not thread safe; parallel drivers give each thread its own engine.
class CanonicalBasisEngine {
public:
    explicit CanonicalBasisEngine(const CrystalConfig& cfg);
    ~CanonicalBasisEngine();
    CanonicalBasisEngine(const CanonicalBasisEngine&) = delete;
    CanonicalBasisEngine& operator=(const CanonicalBasisEngine&) = delete;

    const CrystalConfig& config() const;
    /// Throws NotKleshchev.
    const CanonicalElement& element(const Bipartition& mu);
    /// Elements of one block, Kleshchev labels in increasing total order.
    std::vector<CanonicalElement> block(int n, const std::vector<int>& key);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// G(mu) for a single Kleshchev label; throws NotKleshchev.
CanonicalElement canonical_basis(const Bipartition& mu, const CrystalConfig& cfg);

/// Canonical basis of the degree-n part, in increasing total order of labels.
std::vector<CanonicalElement> canonical_basis(int n, const CrystalConfig& cfg);

struct DecompositionMatrix {
    std::vector<Bipartition> rows;  // all bipartitions considered
    std::vector<Bipartition> cols;  // Kleshchev labels
    std::vector<std::vector<LaurentPoly>> polys;  // polys[row][col]

    BigInt entry(size_t r, size_t c) const { return lp_eval_one(polys[r][c]); }
    long row_index(const Bipartition& b) const;
    long col_index(const Bipartition& b) const;
};

/// Rows: bipartitions of n (optionally one block); columns: Kleshchev ones.
/// Blocks are computed in parallel.
DecompositionMatrix decomposition_matrix(int n, const CrystalConfig& cfg, const std::vector<int>* only_block = nullptr);
/// Serial reference used to check the parallel driver.
DecompositionMatrix decomposition_matrix_serial(int n, const CrystalConfig& cfg, const std::vector<int>* only_block = nullptr);

/// Distinct block keys among bipartitions of n, sorted.
std::vector<std::vector<int>> blocks_of(int n, const CrystalConfig& cfg);

}  // namespace hecke
