#pragma once

#include "piflat/delta_poly.hpp"

namespace piflat {

/* Element of the fraction field of the delta ring, stored as a left
 * fraction: the value is den^-1 * num.
 *
 * Normal form: den != 0; the common left divisor of (den, num) is removed
 * (skew mode: left-division Euclidean scheme; commutative mode: ordinary
 * gcd); den is scaled so its graded-lex lowest coefficient is exactly 1.
 * A fraction with unit denominator therefore has den == 1 and embeds the
 * polynomial ring.  Equality is structural. */
class DeltaFraction {
public:
    DeltaFraction(DeltaPoly den, DeltaPoly num);

    static DeltaFraction zero(const Ctx& ctx);
    static DeltaFraction one(const Ctx& ctx);
    static DeltaFraction from_poly(const DeltaPoly& p);
    static DeltaFraction from_field(const FieldElem& c);
    static DeltaFraction from_rational(const Ctx& ctx, const mpq_class& c);

    const Ctx& ctx() const { return num_.ctx(); }
    const DeltaPoly& den() const { return den_; }
    const DeltaPoly& num() const { return num_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /* The polynomial value; requires den == 1. */
    const DeltaPoly& poly() const;
    FieldElem to_field() const;

    DeltaFraction operator-() const;
    DeltaFraction operator+(const DeltaFraction& o) const;
    DeltaFraction operator-(const DeltaFraction& o) const;
    DeltaFraction operator*(const DeltaFraction& o) const;
    DeltaFraction operator/(const DeltaFraction& o) const;
    DeltaFraction inverse() const;

    bool operator==(const DeltaFraction& o) const;
    bool operator!=(const DeltaFraction& o) const { return !(*this == o); }

    /* d/dt of the fraction (derivation extended by the quotient rule). */
    DeltaFraction derive() const;

private:
    DeltaPoly den_;
    DeltaPoly num_;

    void reduce();
    /* Reduce a dense single-delay rational pair and build the fraction
     * without re-running the generic reduction. */
    static DeltaFraction dense_make(const Ctx& ctx, std::vector<mpq_class> den,
                                    std::vector<mpq_class> num);
};

} // namespace piflat
