#include "hecke/exactpoly.hpp"

#include "hecke/error.hpp"

#include <cctype>
#include <sstream>

namespace hecke {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
    LaurentPoly p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::min_degree() const { return terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

bool LaurentPoly::in_v_zv() const { return terms_.empty() || terms_.begin()->first >= 1; }

bool LaurentPoly::is_bar_invariant() const { return lp_bar(*this) == *this; }

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly lp_bar(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [k, c] : a.terms()) r.add_term(-k, c);
    return r;
}

BigInt lp_eval_one(const LaurentPoly& a) {
    BigInt s = 0;
    for (const auto& [k, c] : a.terms()) s += c;
    return s;
}

LaurentPoly lp_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::NonExactDivision, "division by zero polynomial");
    if (a.is_zero()) return {};
    // Long division from the top degree; the remainder must vanish.
    LaurentPoly rem = a;
    LaurentPoly q;
    const int bmax = b.max_degree();
    const int bmin = b.min_degree();
    const BigInt& lead = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        int top = rem.max_degree();
        if (top - bmax < rem.min_degree() - bmin)
            throw Error(ErrorKind::NonExactDivision, to_string(a) + " by " + to_string(b));
        const BigInt& c = rem.terms().rbegin()->second;
        if (c % lead != 0)
            throw Error(ErrorKind::NonExactDivision, to_string(a) + " by " + to_string(b));
        LaurentPoly t = LaurentPoly::monomial(c / lead, top - bmax);
        q += t;
        rem -= t * b;
    }
    return q;
}

LaurentPoly quantum_int(int m) {
    LaurentPoly r;
    int a = m < 0 ? -m : m;
    for (int k = a - 1; k >= 1 - a; k -= 2) r.add_term(k, m < 0 ? -1 : 1);
    return r;
}

LaurentPoly quantum_factorial(int m) {
    LaurentPoly r = 1;
    for (int k = 2; k <= m; ++k) r *= quantum_int(k);
    return r;
}

namespace {

std::string render_terms(const std::map<int, BigInt>& terms, char var) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << var;
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

class TermParser {
public:
    TermParser(std::string_view s, char var) : s_(s), var_(var) {}

    std::map<int, BigInt> run() {
        std::map<int, BigInt> out;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (!first) {
                if (s_[pos_] == '+') {
                    ++pos_;
                } else if (s_[pos_] == '-') {
                    sign = -1;
                    ++pos_;
                } else {
                    fail("expected '+' or '-'");
                }
                skip();
            }
            if (first && pos_ < s_.size() && s_[pos_] == '-') {
                sign = -1;
                ++pos_;
                skip();
            }
            first = false;
            BigInt c = 1;
            bool have_coeff = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                c = BigInt(digits());
                have_coeff = true;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    skip();
                    if (pos_ >= s_.size() || s_[pos_] != var_) fail("expected variable after '*'");
                }
            }
            int exponent = 0;
            if (pos_ < s_.size() && s_[pos_] == var_) {
                ++pos_;
                exponent = 1;
                skip();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip();
                    int esign = 1;
                    if (pos_ < s_.size() && s_[pos_] == '-') {
                        esign = -1;
                        ++pos_;
                    }
                    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        fail("expected exponent");
                    exponent = esign * std::stoi(digits());
                }
            } else if (!have_coeff) {
                fail("expected a term");
            }
            BigInt v = sign * c;
            auto [it, ins] = out.try_emplace(exponent, v);
            if (!ins) it->second += v;
            if (it->second == 0) out.erase(it);
            skip();
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string digits() {
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    char var_;
    size_t pos_ = 0;
};

}  // namespace

std::string to_string(const LaurentPoly& p) { return render_terms(p.terms(), 'v'); }

LaurentPoly parse_laurent(std::string_view text) {
    if (text.find_first_not_of(" \t") != std::string_view::npos &&
        text.substr(text.find_first_not_of(" \t")) == "0")
        return {};
    LaurentPoly p;
    for (const auto& [k, c] : TermParser(text, 'v').run()) p.add_term(k, c);
    return p;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::x_pow_minus_one(int k) {
    std::vector<BigInt> c(static_cast<size_t>(k) + 1, 0);
    c[0] = -1;
    c[static_cast<size_t>(k)] += 1;
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly gauss_quotient(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::NonExactDivision, "division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
        throw Error(ErrorKind::NonExactDivision, to_string(a) + " by " + to_string(b));
    std::vector<BigInt> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt& lead = bc.back();
    std::vector<BigInt> q(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    for (int d = a.degree() - b.degree(); d >= 0; --d) {
        const BigInt& top = rem[static_cast<size_t>(d + b.degree())];
        if (top % lead != 0) throw Error(ErrorKind::NonExactDivision, to_string(a) + " by " + to_string(b));
        BigInt t = top / lead;
        q[static_cast<size_t>(d)] = t;
        for (size_t j = 0; j < bc.size(); ++j) rem[static_cast<size_t>(d) + j] -= t * bc[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw Error(ErrorKind::NonExactDivision, to_string(a) + " by " + to_string(b));
    return IntPoly(std::move(q));
}

std::string to_string(const IntPoly& p) {
    std::map<int, BigInt> terms;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) terms[static_cast<int>(i)] = p.coeffs()[i];
    return render_terms(terms, 'x');
}

}  // namespace hecke
