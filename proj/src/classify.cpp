#include "hecke/classify.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <cctype>

namespace hecke {

namespace {

void check_e(int e) {
    if (e == 1) throw Error(ErrorKind::BadConfig, "q = 1 (group algebra) is not supported");
    if (e < 2) throw Error(ErrorKind::BadConfig, "e must be at least 2");
}

void check_factor(const WeylFactor& f) {
    if (f.n < 1) throw Error(ErrorKind::BadRank, "rank must be positive");
    if (f.family == WeylFamily::D && f.n < 4) throw Error(ErrorKind::BadRank, "type D needs n >= 4");
}

char family_letter(WeylFamily f) {
    switch (f) {
        case WeylFamily::A: return 'A';
        case WeylFamily::B: return 'B';
        case WeylFamily::D: return 'D';
    }
    return '?';
}

/// Exponents k of the factors (x^k - 1)/(x - 1) making up the Poincare polynomial.
std::vector<int> degrees(const WeylFactor& f) {
    std::vector<int> ks;
    switch (f.family) {
        case WeylFamily::A:
            for (int k = 1; k <= f.n; ++k) ks.push_back(k);
            break;
        case WeylFamily::B:
            for (int k = 1; k <= f.n; ++k) ks.push_back(2 * k);
            break;
        case WeylFamily::D:
            ks.push_back(f.n);
            for (int k = 1; k < f.n; ++k) ks.push_back(2 * k);
            break;
    }
    return ks;
}

RepType separated(int n, int e) {
    if (n < e) return RepType::Semisimple;
    if (e >= 3) return n < 2 * e ? RepType::Finite : RepType::Wild;
    if (n < 4) return RepType::Finite;
    if (n == 4 || n == 5) return RepType::Tame;
    return RepType::Wild;
}

}  // namespace

WeylSpec parse_weyl_type(std::string_view text) {
    WeylSpec w;
    size_t pos = 0;
    auto fail = [&](const std::string& msg) { throw Error(ErrorKind::Parse, msg + " in '" + std::string(text) + "'"); };
    while (true) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) fail("expected a factor");
        WeylFactor f;
        switch (text[pos]) {
            case 'A': f.family = WeylFamily::A; break;
            case 'B': f.family = WeylFamily::B; break;
            case 'D': f.family = WeylFamily::D; break;
            default: fail("expected A, B or D");
        }
        ++pos;
        if (pos < text.size() && text[pos] == '_') ++pos;
        size_t b = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (b == pos || pos - b > 6) fail("expected a rank");
        const int k = std::stoi(std::string(text.substr(b, pos - b)));
        if (k < 1) throw Error(ErrorKind::BadRank, "rank must be positive");
        f.n = f.family == WeylFamily::A ? k + 1 : k;
        check_factor(f);
        w.factors.push_back(f);
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != 'x' && text[pos] != '*') fail("expected 'x' between factors");
        ++pos;
    }
    return w;
}

std::string to_string(const WeylSpec& w) {
    std::string s;
    for (const auto& f : w.factors) {
        if (!s.empty()) s += 'x';
        s += family_letter(f.family);
        s += std::to_string(f.family == WeylFamily::A ? f.n - 1 : f.n);
    }
    return s;
}

IntPoly poincare(const WeylSpec& w) {
    IntPoly r(std::vector<BigInt>{1});
    const IntPoly x_minus_one = IntPoly::x_pow_minus_one(1);
    for (const auto& f : w.factors) {
        check_factor(f);
        for (int k : degrees(f)) r = r * gauss_quotient(IntPoly::x_pow_minus_one(k), x_minus_one);
    }
    return r;
}

int phi_multiplicity(const WeylSpec& w, int e) {
    check_e(e);
    int m = 0;
    for (const auto& f : w.factors) {
        check_factor(f);
        for (int k : degrees(f))
            if (k % e == 0) ++m;
    }
    return m;
}

std::string verdict_text(RepType t) { return t == RepType::Semisimple ? "finite (semisimple)" : to_string(t); }

RepType rep_type_A(int n, int e) {
    check_e(e);
    if (n < 1) throw Error(ErrorKind::BadRank, "n must be positive");
    if (n < e) return RepType::Semisimple;
    if (n < 2 * e) return RepType::Finite;
    if (e == 2 && (n == 4 || n == 5)) return RepType::Tame;
    return RepType::Wild;
}

int normalize_f(int f, int e) {
    check_e(e);
    f %= e;
    if (f < 0) f += e;
    return 2 * f > e ? e - f : f;
}

RepType rep_type_two_param(const TwoParamSpec& s) {
    check_e(s.e);
    if (s.n < 1) throw Error(ErrorKind::BadRank, "n must be positive");
    const int n = s.n, e = s.e;
    if (s.separated) return separated(n, e);
    const int f = normalize_f(s.f, e);
    if (e >= 3) {
        if (n < std::min({e, 2 * f + 4, 2 * e - 2 * f + 4}))
            return f > 0 && n <= std::min(f, e - f) ? RepType::Semisimple : RepType::Finite;
        if (f == 0 && 4 <= n && n < std::min(e, 9)) return RepType::Tame;
        return RepType::Wild;
    }
    if (n == 1) return f == 1 ? RepType::Semisimple : RepType::Finite;
    if (n == 2 || (n == 3 && f == 1)) return RepType::Tame;
    return RepType::Wild;
}

RepType rep_type_one_param(WeylFamily family, int n, int e) {
    check_e(e);
    check_factor({family, n});
    switch (family) {
        case WeylFamily::A: return rep_type_A(n, e);
        case WeylFamily::B:
            // Q = q; -q is a power of q exactly when e is even, namely q^(e/2 + 1).
            if (e % 2 == 1) return rep_type_two_param({n, e, true, 0});
            return rep_type_two_param({n, e, false, e / 2 + 1});
        case WeylFamily::D: {
            if (phi_multiplicity(WeylSpec{{{WeylFamily::D, n}}}, e) == 0) return RepType::Semisimple;
            if (e % 2 == 1) return n < 2 * e ? RepType::Finite : RepType::Wild;
            if (e == 2) return RepType::Wild;
            return n < e ? RepType::Finite : RepType::Wild;
        }
    }
    return RepType::Wild;
}

RepType rep_type_general(const WeylSpec& w, int e) {
    if (w.factors.empty()) throw Error(ErrorKind::BadRank, "no factors");
    const int m = phi_multiplicity(w, e);
    if (m == 0) return RepType::Semisimple;
    if (m < 2) return RepType::Finite;
    if (e == 2 && m == 2) return RepType::Tame;
    return RepType::Wild;
}

RepType block_rep_type_A(const Partition& core, int n, int e) {
    check_e(e);
    if (e_core_and_weight(core, e).weight != 0)
        throw Error(ErrorKind::NotACore, to_string(core) + " is not a " + std::to_string(e) + "-core");
    const int rest = n - core.size();
    if (rest < 0 || rest % e != 0)
        throw Error(ErrorKind::BadWeight, "n - |core| = " + std::to_string(rest) + " is not a nonnegative multiple of " +
                                              std::to_string(e));
    const int w = rest / e;
    if (w == 0) return RepType::Semisimple;
    if (w == 1) return RepType::Finite;
    if (e == 2 && w == 2) return RepType::Tame;
    return RepType::Wild;
}

std::optional<std::vector<int>> finite_block_simple_counts(const TwoParamSpec& s) {
    if (rep_type_two_param(s) != RepType::Finite) return std::nullopt;
    if (s.e == 2) return std::vector<int>{1};
    if (s.separated) return std::vector<int>{s.e - 1};
    const int f = normalize_f(s.f, s.e);
    std::vector<int> r{s.e - f + 1};
    if (f + 1 != s.e - f + 1) r.push_back(f + 1);
    return r;
}

std::optional<std::vector<int>> finite_block_simple_counts_A(int n, int e) {
    if (rep_type_A(n, e) != RepType::Finite) return std::nullopt;
    return std::vector<int>{e == 2 ? 1 : e - 1};
}

std::vector<std::string> citations_general(const WeylSpec& w) {
    std::vector<std::string> c{"Poincare polynomial criterion for classical types"};
    if (w.factors.size() == 1) {
        c.emplace_back("one parameter classification");
        switch (w.factors[0].family) {
            case WeylFamily::A: c.emplace_back("block weight criterion in type A"); break;
            case WeylFamily::B: c.emplace_back("two parameter classification"); break;
            case WeylFamily::D: c.emplace_back("Clifford theory for the index two subalgebra"); break;
        }
    } else {
        c.emplace_back("tensor products of finite and tame factors");
    }
    return c;
}

std::vector<std::string> citations_two_param(const TwoParamSpec& s) {
    if (s.separated) return {"Morita reduction to type A", "separated parameter classification"};
    return {"two parameter classification"};
}

}  // namespace hecke
