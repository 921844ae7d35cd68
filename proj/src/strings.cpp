#include "hecke/strings.hpp"

#include "hecke/error.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace hecke {

namespace {

std::optional<std::vector<int>> try_nodes(const Quiver& q, const StringWord& w) {
    if (w.letters.empty()) {
        if (w.node < 0 || w.node >= q.num_nodes()) return std::nullopt;
        return std::vector<int>{w.node};
    }
    std::vector<int> xs;
    for (const auto& l : w.letters) {
        if (l.arrow < 0 || l.arrow >= static_cast<int>(q.arrows().size())) return std::nullopt;
        const Arrow& a = q.arrows()[static_cast<size_t>(l.arrow)];
        const int left = l.dir == Direction::Southwest ? a.dst : a.src;
        const int right = l.dir == Direction::Southwest ? a.src : a.dst;
        if (xs.empty()) xs.push_back(left);
        if (xs.back() != left) return std::nullopt;
        xs.push_back(right);
    }
    return xs;
}

/// Sets `node` to the leftmost vertex when there are letters.
StringWord make_word(std::vector<Letter> letters, int fallback_node, const Quiver& q) {
    StringWord w{fallback_node, std::move(letters)};
    if (!w.letters.empty()) {
        const Arrow& a = q.arrows()[static_cast<size_t>(w.letters.front().arrow)];
        w.node = w.letters.front().dir == Direction::Southwest ? a.dst : a.src;
    }
    return w;
}

Direction flip(Direction d) { return d == Direction::Southwest ? Direction::Southeast : Direction::Southwest; }

}  // namespace

std::vector<int> vertex_nodes(const Quiver& q, const StringWord& w) {
    auto xs = try_nodes(q, w);
    if (!xs) throw Error(ErrorKind::Parse, "letters do not form a connected diagram");
    return *xs;
}

StringWord mirror(const Quiver& q, const StringWord& w) {
    std::vector<Letter> ls(w.letters.rbegin(), w.letters.rend());
    for (auto& l : ls) l.dir = flip(l.dir);
    return make_word(std::move(ls), w.node, q);
}

StringWord canonicalize(const Quiver& q, const StringWord& w) {
    StringWord m = mirror(q, w);
    return m.letters < w.letters ? m : w;
}

StringAlgebra::StringAlgebra(AlgebraPresentation p) : p_(std::move(p)) {
    if (!is_string_algebra(p_)) throw Error(ErrorKind::NotStringAlgebra, "presentation is not a string algebra");
    for (const auto& r : p_.relations) monomials_.push_back(r.terms.front().second.arrows);
    const Quiver& q = p_.quiver;
    for (int i = 0; i < q.num_nodes(); ++i) {
        std::vector<int> out;
        for (size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrows()[a].src == i) out.push_back(static_cast<int>(a));
        // P_i is a peak at i with one maximal path hanging on each side.
        std::vector<Letter> left, right;
        if (!out.empty()) {
            auto branch = maximal_branch(out[0]);
            for (auto it = branch.rbegin(); it != branch.rend(); ++it) left.push_back({*it, Direction::Southwest});
        }
        if (out.size() > 1)
            for (int a : maximal_branch(out[1])) right.push_back({a, Direction::Southeast});
        std::vector<Letter> both = left;
        both.insert(both.end(), right.begin(), right.end());
        projectives_.push_back(make_word(both, i, q));
        if (!out.empty()) m_alpha_.emplace_back(out[0], make_word(right, i, q));
        if (out.size() > 1) m_alpha_.emplace_back(out[1], make_word(left, i, q));
    }
}

bool StringAlgebra::survives(const std::vector<int>& traversal) const {
    for (const auto& m : monomials_)
        if (std::search(traversal.begin(), traversal.end(), m.begin(), m.end()) != traversal.end()) return false;
    return true;
}

std::vector<int> StringAlgebra::maximal_branch(int arrow) const {
    const Quiver& q = p_.quiver;
    std::vector<int> path{arrow};
    while (true) {
        bool extended = false;
        const int t = q.arrows()[static_cast<size_t>(path.back())].dst;
        for (size_t c = 0; c < q.arrows().size() && !extended; ++c) {
            if (q.arrows()[c].src != t) continue;
            path.push_back(static_cast<int>(c));
            extended = survives(path);
            if (!extended) path.pop_back();
        }
        if (!extended) return path;
    }
}

bool validate_string(const StringWord& w, const StringAlgebra& a) {
    auto xs = try_nodes(a.quiver(), w);
    if (!xs || (*xs)[0] != w.node) return false;
    const auto& ls = w.letters;
    size_t start = 0;
    while (start < ls.size()) {
        size_t end = start;
        while (end < ls.size() && ls[end].dir == ls[start].dir) ++end;
        std::vector<int> traversal;
        for (size_t k = start; k < end; ++k) traversal.push_back(ls[k].arrow);
        if (ls[start].dir == Direction::Southwest) std::reverse(traversal.begin(), traversal.end());
        if (!a.survives(traversal)) return false;
        if (end < ls.size() && ls[end - 1].arrow == ls[end].arrow) return false;
        start = end;
    }
    return true;
}

namespace {

std::optional<StringWord> append(const StringWord& w, Direction d, const StringAlgebra& a) {
    const Quiver& q = a.quiver();
    const int left = vertex_nodes(q, w).front();
    for (size_t c = 0; c < q.arrows().size(); ++c) {
        std::vector<Letter> ls = w.letters;
        ls.push_back({static_cast<int>(c), d});
        StringWord n = make_word(std::move(ls), w.node, q);
        if (validate_string(n, a) && n.node == left) return n;
    }
    return std::nullopt;
}

std::optional<StringWord> prepend(const StringWord& w, Direction d, const StringAlgebra& a) {
    const Quiver& q = a.quiver();
    const int right = vertex_nodes(q, w).back();
    for (size_t c = 0; c < q.arrows().size(); ++c) {
        std::vector<Letter> ls{{static_cast<int>(c), d}};
        ls.insert(ls.end(), w.letters.begin(), w.letters.end());
        StringWord n = make_word(std::move(ls), w.node, q);
        if (validate_string(n, a) && vertex_nodes(q, n).back() == right) return n;
    }
    return std::nullopt;
}

/// One southwest letter on the left, then the longest southeast run before it.
StringWord add_left_hook(const StringWord& w, const StringAlgebra& a) {
    auto n = prepend(w, Direction::Southwest, a);
    if (!n) throw Error(ErrorKind::Internal, "no southwest letter can be added on the left");
    while (auto m = prepend(*n, Direction::Southeast, a)) n = m;
    return *n;
}

/// One southeast letter on the right, then the longest southwest run after it.
StringWord add_right_hook(const StringWord& w, const StringAlgebra& a) {
    auto n = append(w, Direction::Southeast, a);
    if (!n) throw Error(ErrorKind::Internal, "no southeast letter can be added on the right");
    while (auto m = append(*n, Direction::Southwest, a)) n = m;
    return *n;
}

StringWord slice(const StringWord& w, size_t from, size_t to, const Quiver& q) {
    auto xs = vertex_nodes(q, w);
    std::vector<Letter> ls(w.letters.begin() + static_cast<long>(from), w.letters.begin() + static_cast<long>(to));
    return make_word(std::move(ls), xs[from], q);
}

long first_of(const StringWord& w, Direction d) {
    for (size_t k = 0; k < w.letters.size(); ++k)
        if (w.letters[k].dir == d) return static_cast<long>(k);
    return -1;
}

long last_of(const StringWord& w, Direction d) {
    for (size_t k = w.letters.size(); k-- > 0;)
        if (w.letters[k].dir == d) return static_cast<long>(k);
    return -1;
}

}  // namespace

PeakDeepFlags peak_deep_flags(const StringWord& w, const StringAlgebra& a) {
    if (!validate_string(w, a)) throw Error(ErrorKind::Parse, "not a string: " + to_string(a.quiver(), w));
    PeakDeepFlags f;
    f.starts_on_peak = !append(w, Direction::Southwest, a);
    f.ends_on_peak = !prepend(w, Direction::Southeast, a);
    f.starts_in_deep = !append(w, Direction::Southeast, a);
    f.ends_in_deep = !prepend(w, Direction::Southwest, a);
    return f;
}

StringWord ar_translate(const StringWord& w, const StringAlgebra& a) {
    const Quiver& q = a.quiver();
    if (!validate_string(w, a)) throw Error(ErrorKind::Parse, "not a string: " + to_string(q, w));
    const StringWord cw = canonicalize(q, w);
    for (const auto& p : a.projectives())
        if (canonicalize(q, p) == cw) throw Error(ErrorKind::ExcludedModule, to_string(q, w) + " is projective");
    for (const auto& [arrow, m] : a.m_alpha())
        if (canonicalize(q, m) == cw)
            throw Error(ErrorKind::ExcludedModule,
                        to_string(q, w) + " is M_" + q.arrows()[static_cast<size_t>(arrow)].name);

    const PeakDeepFlags f = peak_deep_flags(w, a);
    const size_t n = w.letters.size();
    StringWord out;
    if (f.starts_in_deep && f.ends_in_deep) {
        long i = first_of(w, Direction::Southeast);
        long j = last_of(w, Direction::Southwest);
        if (i < 0 || j < 0 || i >= j) throw Error(ErrorKind::Internal, "hooks overlap in " + to_string(q, w));
        out = slice(w, static_cast<size_t>(i) + 1, static_cast<size_t>(j), q);
    } else if (f.starts_in_deep) {
        long j = last_of(w, Direction::Southwest);
        if (j < 0) throw Error(ErrorKind::Internal, "no hook to delete on the right of " + to_string(q, w));
        StringWord ext = add_left_hook(w, a);
        const size_t added = ext.letters.size() - n;
        out = slice(ext, 0, added + static_cast<size_t>(j), q);
    } else if (f.ends_in_deep) {
        long i = first_of(w, Direction::Southeast);
        if (i < 0) throw Error(ErrorKind::Internal, "no hook to delete on the left of " + to_string(q, w));
        StringWord ext = add_right_hook(w, a);
        out = slice(ext, static_cast<size_t>(i) + 1, ext.letters.size(), q);
    } else {
        out = add_right_hook(add_left_hook(w, a), a);
    }
    if (!validate_string(out, a)) throw Error(ErrorKind::Internal, "translate is not a string: " + to_string(q, out));
    return out;
}

std::vector<int> dim_orbit(const StringWord& w, const StringAlgebra& a, int k) {
    std::vector<int> dims{w.dimension()};
    StringWord cur = w;
    for (int s = 0; s < k; ++s) {
        cur = ar_translate(cur, a);
        dims.push_back(cur.dimension());
    }
    return dims;
}

ComplexityEstimate complexity_estimate(const std::vector<long long>& dims) {
    if (dims.size() < 6) throw Error(ErrorKind::TooFewPoints, "need at least 6 entries, got " + std::to_string(dims.size()));
    for (long long d : dims)
        if (d < 0) throw Error(ErrorKind::Parse, "dimensions must be nonnegative");
    const size_t last = dims.size() - 1;
    const size_t mid = last / 2;
    if (std::all_of(dims.begin() + static_cast<long>(mid), dims.end(), [](long long d) { return d == 0; }))
        return {0, "tail vanishes: projective resolution terminates"};
    std::vector<long long> env(dims.size());
    long long run = 0;
    for (size_t i = 0; i < dims.size(); ++i) env[i] = run = std::max(run, dims[i]);
    if (env[mid] == 0) throw Error(ErrorKind::TooFewPoints, "first half of the sequence is zero");
    // Smallest d with env(last)/env(mid) <= 1.5 * ((last+1)/(mid+1))^d.
    const int max_degree = 64;
    BigInt lhs = BigInt(env[last]) * 2;
    BigInt rhs = BigInt(env[mid]) * 3;
    for (int d = 0; d <= max_degree; ++d) {
        if (lhs <= rhs)
            return {d + 1, "polynomial envelope of degree " + std::to_string(d) + " over " + std::to_string(dims.size()) +
                               " terms"};
        lhs *= static_cast<long long>(mid + 1);
        rhs *= static_cast<long long>(last + 1);
    }
    return {max_degree + 2, "growth exceeds every tested polynomial degree"};
}

StringWord parse_string(const Quiver& q, std::string_view text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto ident = [&] {
        size_t b = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '<' &&
               text[pos] != '>' && text[pos] != '@')
            ++pos;
        return std::string(text.substr(b, pos - b));
    };
    skip();
    if (pos < text.size() && text[pos] == '@') {
        ++pos;
        std::string label = ident();
        skip();
        if (pos != text.size()) throw Error(ErrorKind::Parse, "trailing text after trivial string");
        int node = q.node_index(label);
        if (node < 0) throw Error(ErrorKind::Parse, "unknown node '" + label + "'");
        return StringWord{node, {}};
    }
    std::vector<Letter> ls;
    while (skip(), pos < text.size()) {
        char c = text[pos];
        if (c != '<' && c != '>') throw Error(ErrorKind::Parse, "expected '<' or '>' in '" + std::string(text) + "'");
        ++pos;
        std::string name = ident();
        int a = q.arrow_index(name);
        if (a < 0) throw Error(ErrorKind::Parse, "unknown arrow '" + name + "'");
        ls.push_back({a, c == '<' ? Direction::Southwest : Direction::Southeast});
    }
    if (ls.empty()) throw Error(ErrorKind::Parse, "empty string literal; use @node for a trivial string");
    StringWord w = make_word(std::move(ls), 0, q);
    if (!try_nodes(q, w)) throw Error(ErrorKind::Parse, "letters do not connect in '" + std::string(text) + "'");
    return w;
}

std::string to_string(const Quiver& q, const StringWord& w) {
    if (w.letters.empty()) return "@" + q.nodes()[static_cast<size_t>(w.node)];
    std::string s;
    for (const auto& l : w.letters) {
        if (!s.empty()) s += ' ';
        s += l.dir == Direction::Southwest ? '<' : '>';
        s += q.arrows()[static_cast<size_t>(l.arrow)].name;
    }
    return s;
}

}  // namespace hecke
