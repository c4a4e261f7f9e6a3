#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "piflat/errors.hpp"

namespace piflat {

using ExpVec = std::vector<int>;

/* Graded lexicographic order on exponent vectors: first by total degree,
 * ties broken lexicographically with index 0 most significant. */
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

int total_degree(const ExpVec& e);

/* Sparse multivariate polynomial with exact rational coefficients.
 * Terms are kept in a graded-lex ordered map; zero coefficients are never
 * stored.  The number of variables is fixed per value and must agree
 * between operands. */
class MPoly {
public:
    using TermMap = std::map<ExpVec, mpq_class, GradedLexLess>;

    MPoly() : nvars_(0) {}
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const mpq_class& c);
    static MPoly gen(int nvars, int var);
    static MPoly monomial(int nvars, const ExpVec& e, const mpq_class& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /* Value of a constant polynomial (zero polynomial gives 0). */
    mpq_class constant_value() const;

    int degree(int var) const;
    int total_deg() const;
    bool depends_on(int var) const;

    const TermMap& terms() const { return terms_; }
    /* Graded-lex greatest term.  Polynomial must be nonzero. */
    const ExpVec& leading_monomial() const;
    const mpq_class& leading_coeff() const;

    void add_term(const ExpVec& e, const mpq_class& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly mul_scalar(const mpq_class& c) const;
    MPoly pow(int n) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /* Exact quotient this / b; throws InternalError when b does not divide
     * this exactly (callers only request divisions known to be exact). */
    MPoly divide_exact(const MPoly& b) const;
    /* Division attempt; returns false (leaving *q unspecified) when b does
     * not divide this over the rationals. */
    bool try_divide(const MPoly& b, MPoly* q) const;

    /* Greatest common divisor, normalized to integer coefficients with
     * content 1 and positive leading (graded-lex) coefficient.  gcd with 0
     * returns the other argument normalized; gcd(0,0) = 0. */
    static MPoly gcd(const MPoly& a, const MPoly& b);
    static MPoly lcm(const MPoly& a, const MPoly& b);

    /* Rational c such that this = c * P with P integer-primitive and
     * positive leading coefficient.  Zero polynomial gives c = 0. */
    mpq_class signed_content() const;
    /* this / signed_content(); the zero polynomial stays zero. */
    MPoly primitive_normalized() const;

    MPoly substitute(int var, const MPoly& value) const;
    MPoly derivative(int var) const;
    /* Coefficient of x_var^e, with that exponent removed from the result. */
    MPoly coeff_wrt(int var, int e) const;

private:
    void check_vars(const MPoly& o) const;

    int nvars_;
    TermMap terms_;
};

} // namespace piflat
