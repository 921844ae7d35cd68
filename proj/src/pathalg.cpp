#include "hecke/pathalg.hpp"

#include "hecke/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

int path_source(const Quiver& q, const Path& p) {
    return p.arrows.empty() ? p.node : q.arrows()[static_cast<size_t>(p.arrows.front())].src;
}

int path_target(const Quiver& q, const Path& p) {
    return p.arrows.empty() ? p.node : q.arrows()[static_cast<size_t>(p.arrows.back())].dst;
}

std::string to_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.nodes()[static_cast<size_t>(p.node)];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += '*';
        s += q.arrows()[static_cast<size_t>(*it)].name;
    }
    return s;
}

namespace {

/// Length first, then node, then arrows lexicographically.
struct DegLex {
    bool operator()(const Path& a, const Path& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.node != b.node) return a.node < b.node;
        return a.arrows < b.arrows;
    }
};

using Vec = std::map<Path, Rational, DegLex>;

Path concat(const Path& a, const Path& b) {
    if (a.arrows.empty()) return b;
    Path r = a;
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
}

/// Paths of each length up to max_len, grouped by length.
std::vector<std::vector<Path>> paths_up_to(const Quiver& q, int max_len) {
    std::vector<std::vector<Path>> out(static_cast<size_t>(max_len) + 1);
    for (int i = 0; i < q.num_nodes(); ++i) out[0].push_back(Path{i, {}});
    for (int len = 1; len <= max_len; ++len) {
        for (const auto& p : out[static_cast<size_t>(len) - 1]) {
            const int t = path_target(q, p);
            for (size_t a = 0; a < q.arrows().size(); ++a) {
                if (q.arrows()[a].src != t) continue;
                Path n = p;
                if (n.arrows.empty()) n.node = q.arrows()[a].src;
                n.arrows.push_back(static_cast<int>(a));
                out[static_cast<size_t>(len)].push_back(std::move(n));
            }
        }
    }
    return out;
}

class Echelon {
public:
    /// Reduces v against the stored rows; returns true if v was independent.
    bool insert(Vec v) {
        reduce(v);
        if (v.empty()) return false;
        Rational lead = v.rbegin()->second;
        for (auto& [k, c] : v) c /= lead;
        Path key = v.rbegin()->first;
        rows_.emplace(std::move(key), std::move(v));
        return true;
    }

    void reduce(Vec& v) const {
        while (!v.empty()) {
            bool progressed = false;
            // Scan from the top; stop at the first term with no matching pivot.
            for (auto it = v.rbegin(); it != v.rend(); ++it) {
                auto row = rows_.find(it->first);
                if (row == rows_.end()) continue;
                Rational c = it->second;
                for (const auto& [k, rc] : row->second) {
                    auto [pos, inserted] = v.try_emplace(k, 0);
                    pos->second -= c * rc;
                    if (pos->second == 0) v.erase(pos);
                }
                progressed = true;
                break;
            }
            if (!progressed) return;
        }
    }

    bool is_pivot(const Path& p) const { return rows_.count(p) > 0; }
    size_t rank() const { return rows_.size(); }

private:
    std::map<Path, Vec, DegLex> rows_;
};

void check_relation(const Quiver& q, const Relation& r) {
    if (r.terms.empty()) return;
    const int s = path_source(q, r.terms.front().second);
    const int t = path_target(q, r.terms.front().second);
    for (const auto& [c, p] : r.terms) {
        if (path_source(q, p) != s || path_target(q, p) != t)
            throw Error(ErrorKind::NonParallelRelation, "terms " + to_string(q, r.terms.front().second) + " and " +
                                                            to_string(q, p) + " are not parallel");
        if (p.length() < 2)
            throw Error(ErrorKind::NotAdmissible, "relation term " + to_string(q, p) + " has length below 2");
    }
}

/// Adds x*r*y (traversal x, r, y) for every pair with |x| + |y| in [lo, hi],
/// dropping terms of length >= cutoff when cutoff > 0.
void add_products(Echelon& ech, const Quiver& q, const Relation& r, const std::vector<std::vector<Path>>& paths, int lo,
                  int hi, int cutoff) {
    if (r.terms.empty()) return;
    const int s = path_source(q, r.terms.front().second);
    const int t = path_target(q, r.terms.front().second);
    for (int total = lo; total <= hi; ++total) {
        for (int lx = 0; lx <= total; ++lx) {
            const int ly = total - lx;
            if (lx >= static_cast<int>(paths.size()) || ly >= static_cast<int>(paths.size())) continue;
            for (const auto& x : paths[static_cast<size_t>(lx)]) {
                if (path_target(q, x) != s) continue;
                for (const auto& y : paths[static_cast<size_t>(ly)]) {
                    if (path_source(q, y) != t) continue;
                    Vec v;
                    for (const auto& [c, p] : r.terms) {
                        Path w = concat(concat(x, p), y);
                        if (cutoff > 0 && w.length() >= cutoff) continue;
                        auto [pos, ins] = v.try_emplace(std::move(w), 0);
                        pos->second += Rational(c);
                        if (pos->second == 0) v.erase(pos);
                    }
                    if (!v.empty()) ech.insert(std::move(v));
                }
            }
        }
    }
}

int min_length(const Relation& r) {
    int m = 1 << 20;
    for (const auto& [c, p] : r.terms) m = std::min(m, p.length());
    return m;
}

}  // namespace

int PathBasis::dimension() const {
    int d = 0;
    for (const auto& [k, v] : paths_by_class) d += static_cast<int>(v.size());
    return d;
}

std::vector<Path> PathBasis::all() const {
    std::vector<Path> out;
    for (const auto& [k, v] : paths_by_class) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), DegLex{});
    return out;
}

struct Quotient::Impl {
    const Quiver* quiver = nullptr;
    Quiver owned;
    Echelon ech;
    PathBasis basis;
    int index = 0;
};

Quotient::Quotient(const AlgebraPresentation& p) : impl_(std::make_unique<Impl>()) {
    impl_->owned = p.quiver;
    const Quiver& q = impl_->owned;
    for (const auto& r : p.relations) check_relation(q, r);
    const int bound = std::max(2, p.nilpotency_bound);

    // Dimension of FQ/(I + J^L) for growing L until it stabilizes.
    auto truncated = [&](int L, const std::vector<std::vector<Path>>& paths, Echelon& ech) {
        for (const auto& r : p.relations) {
            const int hi = L - 1 - min_length(r);
            if (hi >= 0) add_products(ech, q, r, paths, 0, hi, L);
        }
        long count = 0;
        for (int len = 0; len < L; ++len) count += static_cast<long>(paths[static_cast<size_t>(len)].size());
        return count - static_cast<long>(ech.rank());
    };

    int M = 0;
    long prev = -1;
    for (int L = 1; L <= bound + 1; ++L) {
        auto paths = paths_up_to(q, L);
        Echelon ech;
        long d = truncated(L, paths, ech);
        if (prev == d) {
            M = L - 1;
            break;
        }
        prev = d;
    }
    if (M == 0)
        throw Error(ErrorKind::NotAdmissible,
                    "quotient dimension did not stabilize within nilpotency bound " + std::to_string(bound));

    // Confirm that every path of length M lies in the ideal itself, without truncation.
    auto paths = paths_up_to(q, std::max(M, bound));
    const auto& targets = paths[static_cast<size_t>(M)];
    if (!targets.empty()) {
        Echelon exact;
        bool all_in = false;
        for (int N = 0; N <= bound && !all_in; ++N) {
            for (const auto& r : p.relations) add_products(exact, q, r, paths, N, N, 0);
            all_in = true;
            for (const auto& w : targets) {
                Vec v{{w, Rational(1)}};
                exact.reduce(v);
                if (!v.empty()) {
                    all_in = false;
                    break;
                }
            }
        }
        if (!all_in)
            throw Error(ErrorKind::NotAdmissible, "paths of length " + std::to_string(M) +
                                                      " are not in the ideal within nilpotency bound " +
                                                      std::to_string(bound));
    }

    auto short_paths = paths_up_to(q, M);
    truncated(M, short_paths, impl_->ech);
    impl_->index = M;
    impl_->basis.nilpotency_index = M;
    for (int len = 0; len < M; ++len)
        for (const auto& w : short_paths[static_cast<size_t>(len)])
            if (!impl_->ech.is_pivot(w))
                impl_->basis.paths_by_class[{path_source(q, w), path_target(q, w), len}].push_back(w);
}

Quotient::~Quotient() = default;
Quotient::Quotient(Quotient&&) noexcept = default;
Quotient& Quotient::operator=(Quotient&&) noexcept = default;

const PathBasis& Quotient::basis() const { return impl_->basis; }

bool Quotient::in_ideal(const Path& p) const {
    if (p.length() >= impl_->index) return true;
    Vec v{{p, Rational(1)}};
    impl_->ech.reduce(v);
    return v.empty();
}

PathBasis quotient_basis(const AlgebraPresentation& p) { return Quotient(p).basis(); }

void add_radical_power(AlgebraPresentation& p, int n) {
    auto paths = paths_up_to(p.quiver, n);
    for (const auto& w : paths[static_cast<size_t>(n)]) p.relations.push_back(Relation{{{BigInt(1), w}}});
}

BiserialReport is_special_biserial(const AlgebraPresentation& p) {
    const Quiver& q = p.quiver;
    Quotient quo(p);
    for (int i = 0; i < q.num_nodes(); ++i) {
        int out = 0, in = 0;
        for (const auto& a : q.arrows()) {
            if (a.src == i) ++out;
            if (a.dst == i) ++in;
        }
        if (out > 2) return {false, "(a1) at node " + q.nodes()[static_cast<size_t>(i)]};
        if (in > 2) return {false, "(a2) at node " + q.nodes()[static_cast<size_t>(i)]};
    }
    const auto& arrows = q.arrows();
    for (size_t a = 0; a < arrows.size(); ++a) {
        int before = 0, after = 0;
        for (size_t b = 0; b < arrows.size(); ++b) {
            if (arrows[b].dst == arrows[a].src &&
                !quo.in_ideal(Path{arrows[b].src, {static_cast<int>(b), static_cast<int>(a)}}))
                ++before;
            if (arrows[b].src == arrows[a].dst &&
                !quo.in_ideal(Path{arrows[a].src, {static_cast<int>(a), static_cast<int>(b)}}))
                ++after;
        }
        if (before > 1) return {false, "(b1) at " + arrows[a].name};
        if (after > 1) return {false, "(b2) at " + arrows[a].name};
    }
    return {};
}

bool is_string_algebra(const AlgebraPresentation& p) {
    for (const auto& r : p.relations)
        if (!r.is_monomial()) return false;
    return is_special_biserial(p).special_biserial;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

class PathParser {
public:
    PathParser(const Quiver& q, std::string_view s) : q_(q), s_(s) {}

    /// Linear combination; an isolated "0" is the empty combination.
    std::vector<std::pair<BigInt, Path>> combination() {
        std::vector<std::pair<BigInt, Path>> out;
        skip();
        if (peek() == '0' && rest_is_zero()) {
            pos_ = s_.size();
            return out;
        }
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                break;
            }
            first = false;
            BigInt c = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = BigInt(number());
                skip();
                if (peek() == '*') ++pos_;
            }
            out.emplace_back(sign * c, product());
            skip();
            if (pos_ >= s_.size()) break;
        }
        if (!done()) fail("unexpected text");
        return out;
    }

    Path whole_path() {
        Path p = product();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return p;
    }

    bool done() {
        skip();
        return pos_ >= s_.size();
    }

private:
    // Returns traversal order.
    Path product() {
        std::vector<Path> factors;
        factors.push_back(factor());
        skip();
        while (peek() == '*') {
            ++pos_;
            factors.push_back(factor());
            skip();
        }
        Path out;
        out.node = -1;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) out = join(out, *it);
        return out;
    }

    Path factor() {
        skip();
        Path base;
        if (peek() == '(') {
            ++pos_;
            base = product();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        } else {
            std::string name = ident();
            int a = q_.arrow_index(name);
            if (a < 0) fail("unknown arrow '" + name + "'");
            base = Path{q_.arrows()[static_cast<size_t>(a)].src, {a}};
        }
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            int k = std::stoi(number());
            if (k < 1) fail("exponent must be positive");
            Path out;
            out.node = -1;
            for (int i = 0; i < k; ++i) out = join(out, base);
            return out;
        }
        return base;
    }

    Path join(const Path& a, const Path& b) {
        if (a.node < 0) return b;
        if (path_target(q_, a) != path_source(q_, b)) fail("arrows do not compose");
        return concat(a, b);
    }

    std::string ident() {
        size_t b = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
            ++pos_;
        if (b == pos_) fail("expected an arrow name");
        return std::string(s_.substr(b, pos_ - b));
    }

    std::string number() {
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected a number");
        return std::string(s_.substr(b, pos_ - b));
    }

    bool rest_is_zero() const { return trim(s_.substr(pos_)) == "0"; }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " in '" + std::string(s_) + "'");
    }

    const Quiver& q_;
    std::string_view s_;
    size_t pos_ = 0;
};

Relation normalize(std::vector<std::pair<BigInt, Path>> terms) {
    std::map<Path, BigInt, DegLex> acc;
    for (auto& [c, p] : terms) acc[p] += c;
    Relation r;
    for (auto& [p, c] : acc)
        if (c != 0) r.terms.emplace_back(c, p);
    return r;
}

}  // namespace

Path parse_path(const Quiver& q, std::string_view text) { return PathParser(q, text).whole_path(); }

AlgebraPresentation parse_presentation(std::string_view text) {
    AlgebraPresentation p;
    std::vector<std::string> quiver_lines;
    std::vector<std::pair<int, std::string>> rel_lines;
    int truncate = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        std::string key = colon == std::string::npos ? "" : trim(std::string_view(t).substr(0, colon));
        std::string value = colon == std::string::npos ? "" : trim(std::string_view(t).substr(colon + 1));
        try {
            if (key == "rel") {
                rel_lines.emplace_back(lineno, value);
            } else if (key == "truncate") {
                truncate = std::stoi(value);
                if (truncate < 2) throw Error(ErrorKind::NotAdmissible, "truncate must be at least 2");
            } else if (key == "bound") {
                p.nilpotency_bound = std::stoi(value);
                if (p.nilpotency_bound < 2) throw Error(ErrorKind::Parse, "bound must be at least 2");
            } else {
                quiver_lines.push_back(t);
            }
        } catch (const std::invalid_argument&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected an integer");
        } catch (const std::out_of_range&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": integer out of range");
        }
    }
    std::string joined;
    for (const auto& l : quiver_lines) joined += l + "\n";
    p.quiver = parse_quiver(joined);
    for (const auto& [no, body] : rel_lines) {
        auto eq = body.find('=');
        std::vector<std::pair<BigInt, Path>> terms = PathParser(p.quiver, body.substr(0, eq)).combination();
        if (eq != std::string::npos) {
            for (auto& [c, w] : PathParser(p.quiver, std::string_view(body).substr(eq + 1)).combination())
                terms.emplace_back(-c, w);
        }
        Relation r = normalize(std::move(terms));
        check_relation(p.quiver, r);
        if (!r.terms.empty()) p.relations.push_back(std::move(r));
    }
    if (truncate > 0) add_radical_power(p, truncate);
    return p;
}

}  // namespace hecke
