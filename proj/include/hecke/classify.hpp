#pragma once

#include "hecke/exactpoly.hpp"
#include "hecke/partitions.hpp"
#include "hecke/quiver.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

enum class WeylFamily { A, B, D };

/// `n` is the size parameter of the Hecke algebra: S_n for A, rank n for B and D.
struct WeylFactor {
    WeylFamily family = WeylFamily::A;
    int n = 1;
};

struct WeylSpec {
    std::vector<WeylFactor> factors;
};

/// Weyl-group notation joined by 'x', e.g. "B4xA3xD5"; A_k has n = k + 1. Throws Parse or BadRank.
WeylSpec parse_weyl_type(std::string_view text);
std::string to_string(const WeylSpec& w);

/// Throws BadRank.
IntPoly poincare(const WeylSpec& w);
/// Multiplicity of the e-th cyclotomic polynomial in the Poincare polynomial.
int phi_multiplicity(const WeylSpec& w, int e);

/// "finite (semisimple)" for Semisimple, otherwise the plain type name.
std::string verdict_text(RepType t);

RepType rep_type_A(int n, int e);

struct TwoParamSpec {
    int n = 1;
    int e = 2;
    bool separated = false;  // -Q is not a power of q
    int f = 0;               // otherwise Q = -q^f; any integer, normalized internally
};

/// f reduced into [0, e/2].
int normalize_f(int f, int e);
RepType rep_type_two_param(const TwoParamSpec& s);
/// Throws BadRank.
RepType rep_type_one_param(WeylFamily family, int n, int e);
RepType rep_type_general(const WeylSpec& w, int e);
/// Throws NotACore or BadWeight.
RepType block_rep_type_A(const Partition& core, int n, int e);

/// Number of simples in a non-semisimple block when the algebra is finite and e >= 3.
std::optional<std::vector<int>> finite_block_simple_counts(const TwoParamSpec& s);
std::optional<std::vector<int>> finite_block_simple_counts_A(int n, int e);

/// Names of the results backing each decision, for reporting.
std::vector<std::string> citations_general(const WeylSpec& w);
std::vector<std::string> citations_two_param(const TwoParamSpec& s);

}  // namespace hecke
