#include "noether/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace noether {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
    Monomial m(nvars);
    m.exps_.at(i) = e;
    return m;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

Monomial Monomial::quotient_of(const Monomial& num) const {
    Monomial r = num;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(r.exps_[i], other.exps_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
    const std::size_t n = a.nvars();
    switch (order.kind) {
        case TermOrder::Kind::Lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case TermOrder::Kind::Block: {
            const auto front = std::min<std::size_t>(static_cast<std::size_t>(order.block), n);
            if (int c = grevlex_range(a, b, 0, front); c != 0) return c;
            return grevlex_range(a, b, front, n);
        }
        case TermOrder::Kind::GRevLex:
        default:
            return grevlex_range(a, b, 0, n);
    }
}

Polynomial Polynomial::constant(std::size_t nvars, const BigInt& c, TermOrder order) {
    Polynomial p(nvars, order);
    if (c != 0) p.terms_.push_back({c, Monomial(nvars)});
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i, TermOrder order) {
    Polynomial p(nvars, order);
    p.terms_.push_back({BigInt(1), Monomial::variable(nvars, i)});
    return p;
}

Polynomial Polynomial::monomial(const BigInt& c, Monomial m, TermOrder order) {
    Polynomial p(m.nvars(), order);
    if (c != 0) p.terms_.push_back({c, std::move(m)});
    return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms, TermOrder order) {
    for (const auto& t : terms)
        if (t.mono.nvars() != nvars) throw VariableMismatch("monomial length differs from variable count");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
    Polynomial p(nvars, order);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    p.drop_zeros();
    return p;
}

Polynomial Polynomial::from_sorted_terms(std::size_t nvars, std::vector<Term> terms, TermOrder order) {
    Polynomial p(nvars, order);
    p.terms_ = std::move(terms);
    return p;
}

Term Polynomial::pop_leading() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool Polynomial::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

BigInt Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

Polynomial Polynomial::with_order(TermOrder order) const {
    if (order == order_) return *this;
    return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::prepend_variables(std::size_t extra, TermOrder order) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(extra, 0);
        e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
        ts.push_back({t.coeff, Monomial(std::move(e))});
    }
    return from_terms(nvars_ + extra, std::move(ts), order);
}

Polynomial Polynomial::drop_front_variables(std::size_t count, TermOrder order) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto ex = t.mono.exponents();
        for (std::size_t i = 0; i < count; ++i)
            if (ex[i] != 0) throw VariableMismatch("dropped variable occurs in polynomial");
        ts.push_back({t.coeff, Monomial(std::vector<std::uint32_t>(ex.begin() + count, ex.end()))});
    }
    return from_terms(nvars_ - count, std::move(ts), order);
}

bool Polynomial::uses_variable(std::size_t i) const {
    return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.mono[i] != 0; });
}

void Polynomial::check_compatible(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw VariableMismatch("polynomials have different variable counts");
    if (!(order_ == g.order_)) throw VariableMismatch("polynomials use different term orders");
}

void Polynomial::drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// out = a + sign * c * m * b, all inputs sorted descending.
void merge_into(std::vector<Term>& out, const std::vector<Term>& a, const std::vector<Term>& b,
                const BigInt& c, const Monomial* m, const TermOrder& order) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto scaled = [&](const Term& t) {
        Term s{t.coeff * c, m ? t.mono * *m : t.mono};
        return s;
    };
    while (i < a.size() && j < b.size()) {
        Term tb = scaled(b[j]);
        int cmp = compare(a[i].mono, tb.mono, order);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(std::move(tb));
            ++j;
        } else {
            BigInt s = a[i].coeff + tb.coeff;
            if (s != 0) out.push_back({std::move(s), a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(scaled(b[j]));
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_compatible(g);
    std::vector<Term> out;
    merge_into(out, terms_, g.terms_, BigInt(1), nullptr, order_);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_compatible(g);
    std::vector<Term> out;
    merge_into(out, terms_, g.terms_, BigInt(-1), nullptr, order_);
    terms_ = std::move(out);
    return *this;
}

void Polynomial::sub_mul_term(const BigInt& c, const Monomial& m, const Polynomial& g) {
    check_compatible(g);
    if (c == 0) return;
    std::vector<Term> out;
    BigInt neg = -c;
    merge_into(out, terms_, g.terms_, neg, &m, order_);
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
    *this = *this * g;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.nvars_, f.order_);
    // Accumulate row by row; each row f_i * g is already sorted.
    Polynomial acc(f.nvars_, f.order_);
    std::vector<Term> out;
    for (const auto& t : f.terms_) {
        merge_into(out, acc.terms_, g.terms_, t.coeff, &t.mono, f.order_);
        acc.terms_.swap(out);
    }
    return acc;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    if (f.nvars_ != g.nvars_ || f.terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < f.terms_.size(); ++i)
        if (f.terms_[i].coeff != g.terms_[i].coeff || !(f.terms_[i].mono == g.terms_[i].mono)) return false;
    return true;
}

Polynomial Polynomial::scaled(const BigInt& c) const {
    Polynomial r(nvars_, order_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

Polynomial Polynomial::mul_term(const BigInt& c, const Monomial& m) const {
    Polynomial r(nvars_, order_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1, order_);
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Polynomial Polynomial::positive() const {
    if (!terms_.empty() && terms_.front().coeff < 0) return -*this;
    return *this;
}

BigInt Polynomial::content() const {
    BigInt g = 0;
    for (const auto& t : terms_) g = gcd(g, t.coeff);
    return g;
}

std::size_t Polynomial::hash() const {
    std::size_t h = std::hash<std::size_t>{}(nvars_);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (const auto& t : terms_) {
        mix(std::hash<std::string>{}(t.coeff.get_str(16)));
        for (auto e : t.mono.exponents()) mix(e);
    }
    return h;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial poly_divexact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw InexactDivision("division by zero polynomial");
    if (f.nvars() != g.nvars()) throw VariableMismatch("polynomials have different variable counts");
    Polynomial rem = f.with_order(g.order());
    std::vector<Term> quotient;
    const auto& lt = g.leading_term();
    while (!rem.is_zero()) {
        const Term& t = rem.leading_term();
        if (!lt.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
            throw InexactDivision("divexact: divisor does not divide dividend");
        BigInt q = t.coeff / lt.coeff;
        Monomial m = lt.mono.quotient_of(t.mono);
        quotient.push_back({q, m});
        rem.sub_mul_term(q, m, g);
    }
    return Polynomial::from_terms(f.nvars(), std::move(quotient), f.order());
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names, TermOrder order)
        : text_(text), names_(names), order_(order) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw error("expected '+' or '-'");
            }
            skip_ws();
            Term t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            first = false;
        }
        return Polynomial::from_terms(names_.size(), std::move(terms), order_);
    }

private:
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    ParseError error(const std::string& what) const {
        return ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                          std::string(text_) + "'");
    }

    Term parse_term() {
        Term t{BigInt(1), Monomial(names_.size())};
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coeff *= parse_integer();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t var = parse_variable();
                std::uint32_t e = 1;
                skip_ws();
                if (pos_ < text_.size() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    BigInt ee = parse_integer();
                    if (!ee.fits_uint_p()) throw error("exponent too large");
                    e = static_cast<std::uint32_t>(ee.get_ui());
                }
                t.mono[var] += e;
            } else {
                throw error(std::string("unexpected character '") + c + "'");
            }
            have_factor = true;
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!have_factor) throw error("missing term");
        return t;
    }

    BigInt parse_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw error("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::size_t parse_variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        pos_ = start;
        throw error("unknown variable '" + std::string(name) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    TermOrder order_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names, TermOrder order) {
    return PolyParser(text, names, order).parse();
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        BigInt c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool need_star = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (need_star) os << '*';
            os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
            if (t.mono[i] > 1) os << '^' << t.mono[i];
            need_star = true;
        }
    }
    return os.str();
}

std::string to_string(const Polynomial& f) { return to_string(f, default_variable_names(f.nvars())); }

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

RingPresentation RingPresentation::polynomial_ring(std::size_t k, std::vector<std::string> names) {
    RingPresentation r;
    r.nvars = k;
    r.names = std::move(names);
    return r;
}

std::vector<std::string> RingPresentation::variable_names() const {
    if (names.size() == nvars) return names;
    return default_variable_names(nvars);
}

Polynomial RingPresentation::parse(std::string_view text) const {
    return parse_polynomial(text, variable_names(), order);
}

bool RingPresentation::same_ring(const RingPresentation& other) const {
    return nvars == other.nvars && order == other.order && relations == other.relations;
}

}  // namespace noether
