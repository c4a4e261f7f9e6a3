#pragma once

#include "piflat/context.hpp"
#include "piflat/mpoly.hpp"

namespace piflat {

/* Element of the ground field: a reduced fraction num/den of multivariate
 * polynomials over the generators {t, shift amounts, parameters}.
 *
 * Normal form: gcd(num, den) = 1, den has integer coefficients with content
 * 1 and positive leading (graded-lex) coefficient.  Equality is structural.
 * Supports the shift endomorphisms t -> t - k*tau_i and the derivation
 * d/dt; both commute with each other. */
class FieldElem {
public:
    FieldElem(Ctx ctx, MPoly num, MPoly den);

    static FieldElem zero(const Ctx& ctx);
    static FieldElem one(const Ctx& ctx);
    static FieldElem from_rational(const Ctx& ctx, const mpq_class& c);
    /* Ground generator by index (0 = t, then shift amounts, then params). */
    static FieldElem gen(const Ctx& ctx, int index);
    static FieldElem t(const Ctx& ctx) { return gen(ctx, 0); }

    const Ctx& ctx() const { return ctx_; }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    mpq_class rational_value() const;

    bool depends_on_t() const;
    bool depends_on(int var) const;

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(int n) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /* Apply the shift t -> t - k*tau_i (k may be negative: the inverse
     * shift).  Identity on t-free elements. */
    FieldElem shift(int delay_index, int k = 1) const;
    /* Exact derivative d/dt by the quotient rule. */
    FieldElem derive() const;
    /* Substitute ground generator `var` by a field element (used for
     * parameter bindings).  `var` must not be t or a shift amount. */
    FieldElem substitute_gen(int var, const FieldElem& value) const;

private:
    struct AlreadyReduced {};
    /* Fast-path constructor for num/den already known to be coprime; only
     * rescales den to its canonical integer-primitive form. */
    FieldElem(AlreadyReduced, Ctx ctx, MPoly num, MPoly den);

    Ctx ctx_;
    MPoly num_;
    MPoly den_;
};

} // namespace piflat
