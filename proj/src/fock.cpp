#include "hecke/fock.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace hecke {

FockVector FockVector::basis(const Bipartition& b) {
    FockVector x;
    x.terms_[b] = 1;
    return x;
}

LaurentPoly FockVector::coeff(const Bipartition& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? LaurentPoly{} : it->second;
}

void FockVector::add(const Bipartition& b, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

FockVector operator*(const LaurentPoly& c, const FockVector& x) {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [b, a] : x.terms_) r.terms_.emplace(b, c * a);
    return r;
}

FockVector apply_f(const FockVector& x, int i, const CrystalConfig& cfg) {
    FockVector out;
    for (const auto& [b, c] : x.terms()) {
        ResidueNodes rn = residue_nodes(b, i, cfg);
        for (const auto& beta : rn.addable) {
            int exponent = 0;
            for (const auto& a : rn.addable)
                if (node_above(beta, a)) ++exponent;
            for (const auto& r : rn.removable)
                if (node_above(beta, r)) --exponent;
            out.add(add_node(b, beta), c.shifted(exponent));
        }
    }
    return out;
}

FockVector apply_e(const FockVector& x, int i, const CrystalConfig& cfg) {
    FockVector out;
    for (const auto& [b, c] : x.terms()) {
        ResidueNodes rn = residue_nodes(b, i, cfg);
        for (const auto& gamma : rn.removable) {
            int exponent = 0;
            for (const auto& a : rn.addable)
                if (node_above(a, gamma)) ++exponent;
            for (const auto& r : rn.removable)
                if (node_above(r, gamma)) --exponent;
            out.add(remove_node(b, gamma), c.shifted(-exponent));
        }
    }
    return out;
}

FockVector divided_f(const FockVector& x, int i, int m, const CrystalConfig& cfg) {
    FockVector y = x;
    for (int k = 0; k < m; ++k) y = apply_f(y, i, cfg);
    if (m <= 1) return y;
    const LaurentPoly fact = quantum_factorial(m);
    FockVector out;
    for (const auto& [b, c] : y.terms()) {
        try {
            out.add(b, lp_exact_div(c, fact));
        } catch (const Error&) {
            throw Error(ErrorKind::NonIntegralQuotient,
                        "coefficient " + to_string(c) + " of " + to_string(b) + " is not divisible by [" +
                            std::to_string(m) + "]!");
        }
    }
    return out;
}

FockVector apply_monomial(const Monomial& m, const CrystalConfig& cfg) {
    FockVector x = FockVector::basis(Bipartition{});
    for (const auto& step : m) x = divided_f(x, step.residue, step.power, cfg);
    return x;
}

std::string to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (!s.empty()) s += ' ';
        s += "f_" + std::to_string(it->residue);
        if (it->power != 1) s += "^(" + std::to_string(it->power) + ")";
    }
    return s;
}

std::vector<int> block_key(const Bipartition& b, const CrystalConfig& cfg) { return content_multiset(b, cfg.e, cfg.f); }

long DecompositionMatrix::row_index(const Bipartition& b) const {
    auto it = std::find(rows.begin(), rows.end(), b);
    return it == rows.end() ? -1 : static_cast<long>(it - rows.begin());
}

long DecompositionMatrix::col_index(const Bipartition& b) const {
    auto it = std::find(cols.begin(), cols.end(), b);
    return it == cols.end() ? -1 : static_cast<long>(it - cols.begin());
}

namespace {

/// The bar-symmetric c with a - c in vZ[v].
LaurentPoly symmetric_part(const LaurentPoly& a) {
    LaurentPoly c;
    for (const auto& [k, coef] : a.terms()) {
        if (k > 0) break;
        c.add_term(k, coef);
        if (k < 0) c.add_term(-k, coef);
    }
    return c;
}

Monomial extend(const Monomial& m, int i, int power) {
    Monomial r = m;
    if (!r.empty() && r.back().residue == i) {
        r.back().power += power;
    } else {
        r.push_back({i, power});
    }
    return r;
}

/// Residue with the largest epsilon; ties go to the larger residue.
std::pair<int, int> strip_choice(const Bipartition& mu, const CrystalConfig& cfg) {
    int best = -1, m = 0;
    for (int i = cfg.e - 1; i >= 0; --i) {
        const int k = epsilon(mu, i, cfg);
        if (k > m) {
            best = i;
            m = k;
        }
    }
    return {best, m};
}

}  // namespace

struct CanonicalBasisEngine::Impl {
    CrystalConfig cfg;
    std::map<int, std::vector<Bipartition>> layers;
    std::map<Bipartition, CanonicalElement> g;
    std::set<std::pair<int, std::vector<int>>> done_blocks;

    const std::vector<Bipartition>& layer(int n) {
        auto it = layers.find(n);
        if (it == layers.end()) it = layers.emplace(n, crystal_layer_serial(n, cfg)).first;
        return it->second;
    }

    // f_i^(m) G(nu) = G(mu) + sum of a_b G(b) over labels b with epsilon_i(b) > m,
    // where m = epsilon_i(mu) and nu = e~_i^m mu. Taking the largest epsilon and
    // working through the block in decreasing order of it means every such b is known.
    void compute_block(int n, const std::vector<int>& key) {
        if (!done_blocks.insert({n, key}).second) return;
        std::vector<Bipartition> labels;
        for (const auto& b : layer(n))
            if (block_key(b, cfg) == key) labels.push_back(b);
        if (n == 0) {
            CanonicalElement el;
            el.vec = FockVector::basis(Bipartition{});
            el.pure_monomial = true;
            g.emplace(Bipartition{}, std::move(el));
            return;
        }
        std::set<Bipartition> klesh(labels.begin(), labels.end());
        std::vector<std::pair<int, Bipartition>> order;
        for (const auto& mu : labels) order.push_back({strip_choice(mu, cfg).second, mu});
        std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return total_order_less(b.second, a.second);
        });
        for (const auto& [depth, mu] : order) {
            const auto [i, m] = strip_choice(mu, cfg);
            Bipartition nu = mu;
            for (int k = 0; k < m; ++k) nu = *e_tilde(nu, i, cfg);
            const CanonicalElement& gnu = element(nu);
            FockVector x = divided_f(gnu.vec, i, m, cfg);

            CanonicalElement el;
            el.mu = mu;
            el.seed = extend(gnu.seed, i, m);
            el.seed_from_g = !gnu.pure_monomial;
            bool corrected = false;
            // Sweep the support in increasing total order; terms keep appearing above the cursor only.
            std::optional<Bipartition> cursor;
            while (true) {
                std::optional<Bipartition> next;
                for (const auto& [b, c] : x.terms()) {
                    if (cursor && !total_order_less(*cursor, b)) continue;
                    if (total_order_less(mu, b) && c.in_v_zv()) continue;
                    if (!next || total_order_less(b, *next)) next = b;
                }
                if (!next) break;
                cursor = *next;
                const LaurentPoly c = x.coeff(*next);
                if (*next == mu) {
                    if (!(c == LaurentPoly(1)))
                        throw Error(ErrorKind::Internal, "leading coefficient " + to_string(c) + " for " + to_string(mu));
                    continue;
                }
                const bool below = total_order_less(*next, mu);
                if (below && !c.is_bar_invariant())
                    throw Error(ErrorKind::Internal, "coefficient below " + to_string(mu) + " is not bar invariant");
                if (!klesh.count(*next))
                    throw Error(ErrorKind::Internal, "non-Kleshchev label " + to_string(*next) + " left in " + to_string(mu));
                auto gi = g.find(*next);
                if (gi == g.end()) throw Error(ErrorKind::Internal, "missing element for " + to_string(*next));
                x -= (below ? c : symmetric_part(c)) * gi->second.vec;
                corrected = true;
            }
            el.vec = std::move(x);
            el.pure_monomial = gnu.pure_monomial && !corrected;
            g.emplace(mu, std::move(el));
        }
    }

    const CanonicalElement& element(const Bipartition& mu) {
        auto it = g.find(mu);
        if (it != g.end()) return it->second;
        if (!is_kleshchev(mu, cfg)) throw Error(ErrorKind::NotKleshchev, to_string(mu));
        compute_block(mu.size(), block_key(mu, cfg));
        return g.at(mu);
    }
};

CanonicalBasisEngine::CanonicalBasisEngine(const CrystalConfig& cfg) : impl_(std::make_unique<Impl>()) {
    cfg.validate();
    impl_->cfg = cfg;
}

CanonicalBasisEngine::~CanonicalBasisEngine() = default;

const CrystalConfig& CanonicalBasisEngine::config() const { return impl_->cfg; }

const CanonicalElement& CanonicalBasisEngine::element(const Bipartition& mu) { return impl_->element(mu); }

std::vector<CanonicalElement> CanonicalBasisEngine::block(int n, const std::vector<int>& key) {
    impl_->compute_block(n, key);
    std::vector<CanonicalElement> out;
    for (const auto& b : impl_->layer(n))
        if (block_key(b, impl_->cfg) == key) out.push_back(impl_->g.at(b));
    return out;
}

std::vector<std::vector<int>> blocks_of(int n, const CrystalConfig& cfg) {
    std::set<std::vector<int>> keys;
    for (const auto& b : bipartitions_of(n)) keys.insert(block_key(b, cfg));
    return {keys.begin(), keys.end()};
}

std::vector<CanonicalElement> canonical_basis(int n, const CrystalConfig& cfg) {
    CanonicalBasisEngine engine(cfg);
    std::vector<CanonicalElement> out;
    for (const auto& key : blocks_of(n, cfg))
        for (auto& el : engine.block(n, key)) out.push_back(std::move(el));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return total_order_less(a.mu, b.mu); });
    return out;
}

CanonicalElement canonical_basis(const Bipartition& mu, const CrystalConfig& cfg) {
    CanonicalBasisEngine engine(cfg);
    return engine.element(mu);
}

namespace {

DecompositionMatrix assemble(int n, const std::vector<std::vector<int>>& keys,
                             const std::vector<std::vector<CanonicalElement>>& per_block, const CrystalConfig& cfg) {
    DecompositionMatrix d;
    std::set<std::vector<int>> wanted(keys.begin(), keys.end());
    for (const auto& b : bipartitions_of(n))
        if (wanted.count(block_key(b, cfg))) d.rows.push_back(b);
    std::sort(d.rows.begin(), d.rows.end(), total_order_less);
    std::vector<const CanonicalElement*> els;
    for (const auto& blk : per_block)
        for (const auto& el : blk) els.push_back(&el);
    std::sort(els.begin(), els.end(), [](const auto* a, const auto* b) { return total_order_less(a->mu, b->mu); });
    for (const auto* el : els) d.cols.push_back(el->mu);
    std::map<Bipartition, size_t> row_of;
    for (size_t r = 0; r < d.rows.size(); ++r) row_of[d.rows[r]] = r;
    d.polys.assign(d.rows.size(), std::vector<LaurentPoly>(d.cols.size()));
    for (size_t c = 0; c < els.size(); ++c)
        for (const auto& [b, p] : els[c]->vec.terms()) d.polys[row_of.at(b)][c] = p;
    return d;
}

std::vector<std::vector<int>> selected_blocks(int n, const CrystalConfig& cfg, const std::vector<int>* only_block) {
    if (only_block) return {*only_block};
    return blocks_of(n, cfg);
}

}  // namespace

DecompositionMatrix decomposition_matrix_serial(int n, const CrystalConfig& cfg, const std::vector<int>* only_block) {
    cfg.validate();
    auto keys = selected_blocks(n, cfg, only_block);
    CanonicalBasisEngine engine(cfg);
    std::vector<std::vector<CanonicalElement>> per(keys.size());
    for (size_t k = 0; k < keys.size(); ++k) per[k] = engine.block(n, keys[k]);
    return assemble(n, keys, per, cfg);
}

DecompositionMatrix decomposition_matrix(int n, const CrystalConfig& cfg, const std::vector<int>* only_block) {
    cfg.validate();
    auto keys = selected_blocks(n, cfg, only_block);
    std::vector<std::vector<CanonicalElement>> per(keys.size());
    std::optional<Error> failure;
    const long long count = static_cast<long long>(keys.size());
#pragma omp parallel
    {
        CanonicalBasisEngine engine(cfg);
#pragma omp for schedule(dynamic, 1)
        for (long long k = 0; k < count; ++k) {
            try {
                per[static_cast<size_t>(k)] = engine.block(n, keys[static_cast<size_t>(k)]);
            } catch (const Error& err) {
#pragma omp critical(hecke_decomp_error)
                if (!failure) failure = err;
            }
        }
    }
    if (failure) throw *failure;
    return assemble(n, keys, per, cfg);
}

}  // namespace hecke
