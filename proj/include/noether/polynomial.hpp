#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace noether {

using BigInt = mpz_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VariableMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by divexact when the divisor does not divide exactly.  A caller bug,
/// never a user-facing condition.
class InexactDivision : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct TermOrder {
    enum class Kind { GRevLex, Lex, Block };
    Kind kind = Kind::GRevLex;
    // Number of leading variables eliminated by a Block order.
    int block = 0;

    static TermOrder grevlex() { return {}; }
    static TermOrder lex() { return {Kind::Lex, 0}; }
    static TermOrder elimination(int front) { return {Kind::Block, front}; }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint32_t e = 1);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    std::span<const std::uint32_t> exponents() const { return exps_; }
    std::uint64_t degree() const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Requires divides(other) to hold for `*this` dividing `num`.
    Monomial quotient_of(const Monomial& num) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Three-way comparison of monomials under `order`: negative when a < b.
int compare(const Monomial& a, const Monomial& b, const TermOrder& order);

struct Term {
    BigInt coeff;
    Monomial mono;
};

/// Polynomial over the integers with terms sorted strictly descending under
/// its term order.  No zero coefficients, no repeated monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars, TermOrder order = {}) : nvars_(nvars), order_(order) {}

    static Polynomial constant(std::size_t nvars, const BigInt& c, TermOrder order = {});
    static Polynomial variable(std::size_t nvars, std::size_t i, TermOrder order = {});
    static Polynomial monomial(const BigInt& c, Monomial m, TermOrder order = {});
    /// Builds from unsorted, possibly repeated terms.
    static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms, TermOrder order = {});
    /// Trusted constructor: terms already strictly descending with nonzero coefficients.
    static Polynomial from_sorted_terms(std::size_t nvars, std::vector<Term> terms, TermOrder order = {});

    std::size_t nvars() const { return nvars_; }
    const TermOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const BigInt& leading_coeff() const { return terms_.front().coeff; }
    std::uint64_t total_degree() const;
    /// Constant term, zero when absent.
    BigInt constant_term() const;

    /// Re-sorts under another order.
    Polynomial with_order(TermOrder order) const;
    /// Same polynomial in nvars + extra variables, new variables placed first.
    Polynomial prepend_variables(std::size_t extra, TermOrder order) const;
    /// Drops the first `count` variables; they must not occur.
    Polynomial drop_front_variables(std::size_t count, TermOrder order) const;
    bool uses_variable(std::size_t i) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    Polynomial& operator*=(const Polynomial& g);
    Polynomial scaled(const BigInt& c) const;
    Polynomial shifted(const Monomial& m) const;
    /// c * m * this
    Polynomial mul_term(const BigInt& c, const Monomial& m) const;
    /// this - c*m*g, the basic reduction step.
    void sub_mul_term(const BigInt& c, const Monomial& m, const Polynomial& g);
    /// Removes and returns the leading term.
    Term pop_leading();
    Polynomial pow(unsigned e) const;
    /// Multiplies by -1 if the leading coefficient is negative.
    Polynomial positive() const;
    /// Content (gcd of coefficients), zero for the zero polynomial.
    BigInt content() const;

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend bool operator==(const Polynomial& f, const Polynomial& g);

    std::size_t hash() const;

private:
    void check_compatible(const Polynomial& g) const;
    void drop_zeros();

    std::size_t nvars_ = 0;
    TermOrder order_{};
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
/// Exact quotient f / g in Z[x]; throws InexactDivision otherwise.
Polynomial poly_divexact(const Polynomial& f, const Polynomial& g);

std::vector<std::string> default_variable_names(std::size_t nvars);

/// Text format `2*x1^2*x2 - 3`.  Whitespace and omitted `^1` / `*1` are fine.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            TermOrder order = {});
std::string to_string(const Polynomial& f, const std::vector<std::string>& names);
std::string to_string(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// R = Z[x1..xk]/J.  Relations are stored as polynomials; ideal code carries
/// them along with every generator list.
struct RingPresentation {
    std::size_t nvars = 0;
    std::vector<Polynomial> relations;
    TermOrder order{};
    std::vector<std::string> names;

    static RingPresentation integers() { return {}; }
    static RingPresentation polynomial_ring(std::size_t k, std::vector<std::string> names = {});

    std::vector<std::string> variable_names() const;
    Polynomial parse(std::string_view text) const;
    Polynomial zero() const { return Polynomial(nvars, order); }
    Polynomial one() const { return Polynomial::constant(nvars, 1, order); }
    Polynomial constant(const BigInt& c) const { return Polynomial::constant(nvars, c, order); }
    Polynomial var(std::size_t i) const { return Polynomial::variable(nvars, i, order); }

    bool same_ring(const RingPresentation& other) const;
};

}  // namespace noether

template <>
struct std::hash<noether::Polynomial> {
    std::size_t operator()(const noether::Polynomial& f) const { return f.hash(); }
};
