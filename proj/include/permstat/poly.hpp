#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permstat {

struct Monomial {
    std::uint32_t p = 0, q = 0, t = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in p, q, t with int64 coefficients. Arithmetic throws std::overflow_error
// instead of wrapping. Terms are kept sorted lexicographically on (e_p, e_q, e_t), zero
// coefficients are never stored, so == is mathematical equality.
class MultiPoly {
public:
    using Coeff = std::int64_t;
    using Terms = std::map<Monomial, Coeff>;

    MultiPoly() = default;
    static MultiPoly constant(Coeff c);
    static MultiPoly monomial(Coeff c, std::uint32_t ep, std::uint32_t eq, std::uint32_t et);
    static MultiPoly one() { return constant(1); }
    static MultiPoly q_power(std::uint32_t e) { return monomial(1, 0, e, 0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Coeff coefficient(Monomial m) const;

    void add_term(Monomial m, Coeff c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(Coeff c) const;
    bool operator==(const MultiPoly&) const = default;

    // -1 for the zero polynomial.
    int degree_p() const;
    int degree_q() const;
    int degree_t() const;

    Coeff evaluate_at_one() const;
    // Dense coefficient list in q after setting p = t = 1, degrees 0..deg_q.
    std::vector<Coeff> q_coefficients() const;

    // "1 + 2*q^2*t + p*q^3"; the zero polynomial prints as "0".
    std::string str() const;
    static MultiPoly parse(std::string_view text);

private:
    Terms terms_;
};

MultiPoly q_int(int n);
MultiPoly q_factorial(int n);
MultiPoly q_binomial(int n, int k);
MultiPoly q_binomial_by_division(int n, int k);

// Exact division of polynomials in q alone; throws if the divisor does not divide.
MultiPoly divide_exact_q(const MultiPoly& num, const MultiPoly& den);

// q^N P(q^-1), t untouched.
MultiPoly reverse_in_q(const MultiPoly& p, int n);
// p^Np q^Nq t^Nt P(1/p, 1/q, 1/t).
MultiPoly reflect(const MultiPoly& poly, int np, int nq, int nt);

struct Substitution {
    enum class Kind { QSquared, TShift, TOne, POne, QOne };
    Kind kind = Kind::QSquared;
    // TShift: t -> q^(num/den) t; every t exponent times num must be divisible by den.
    int num = 0;
    int den = 1;

    static Substitution q_squared() { return {Kind::QSquared, 0, 1}; }
    static Substitution t_shift(int a, int den = 1) { return {Kind::TShift, a, den}; }
    static Substitution t_one() { return {Kind::TOne, 0, 1}; }
    static Substitution p_one() { return {Kind::POne, 0, 1}; }
    static Substitution q_one() { return {Kind::QOne, 0, 1}; }
};

MultiPoly substitute(const MultiPoly& poly, Substitution s);

struct CoefficientProfile {
    bool symmetric = true;
    bool unimodal = true;
    bool log_concave = true;
    // Maximal runs [lo, hi] of zero coefficients strictly between non-zero ones.
    std::vector<std::pair<int, int>> internal_zeros;
};

CoefficientProfile coefficient_profile(const MultiPoly& poly);

namespace checked {
MultiPoly::Coeff add(MultiPoly::Coeff a, MultiPoly::Coeff b);
MultiPoly::Coeff mul(MultiPoly::Coeff a, MultiPoly::Coeff b);
}  // namespace checked

}  // namespace permstat
