#pragma once

#include <vector>

#include "piflat/delta_fraction.hpp"

namespace piflat {

/* Operator polynomial in the derivative symbol D with fraction-field
 * coefficients on the left: p = sum a_k * D^k.  Multiplication uses the
 * commutation D * a = a * D + derive(a); D commutes with the delay
 * operators.  The leading coefficient of a nonzero polynomial is nonzero;
 * the zero polynomial has an empty coefficient list. */
class OrePoly {
public:
    enum class Side { Left, Right };

    explicit OrePoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static OrePoly zero(const Ctx& ctx) { return OrePoly(ctx); }
    static OrePoly one(const Ctx& ctx);
    /* The derivative operator D itself. */
    static OrePoly derivative_op(const Ctx& ctx);
    static OrePoly from_fraction(const DeltaFraction& c);
    static OrePoly from_poly(const DeltaPoly& p);
    static OrePoly from_field(const FieldElem& c);
    static OrePoly from_rational(const Ctx& ctx, const mpq_class& c);
    static OrePoly monomial(const DeltaFraction& c, int dpow);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<DeltaFraction>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /* D-degree; -1 for the zero polynomial. */
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    const DeltaFraction& leading_coeff() const;
    DeltaFraction coeff(int k) const;
    /* All coefficients are polynomial (denominator 1). */
    bool is_polynomial() const;
    /* D-free and polynomial: usable as a DeltaPoly. */
    DeltaPoly delta_part() const;
    DeltaFraction to_fraction() const;

    OrePoly operator-() const;
    OrePoly operator+(const OrePoly& o) const;
    OrePoly operator-(const OrePoly& o) const;
    OrePoly operator*(const OrePoly& o) const;

    bool operator==(const OrePoly& o) const;
    bool operator!=(const OrePoly& o) const { return !(*this == o); }

    /* Euclidean division: Right gives a = q*b + r, Left gives a = b*q + r,
     * in both cases with deg r < deg b. */
    static void divide(const OrePoly& a, const OrePoly& b, Side side,
                       OrePoly* q, OrePoly* r);

    /* Least common left multiple of all coefficient denominators: the
     * smallest delta polynomial whose left product with this operator is
     * denominator-free. */
    DeltaPoly denominator_clearing() const;
    /* Delta-degree of the denominator-cleared numerator (pivot tie-break
     * key); -1 for the zero polynomial. */
    int cleared_delta_degree() const;

private:
    void trim();
    void set_coeff(int k, const DeltaFraction& c);

    Ctx ctx_;
    std::vector<DeltaFraction> coeffs_;
};

/* lclm helper on polynomials, tolerant of unit arguments. */
DeltaPoly delta_lclm(const DeltaPoly& a, const DeltaPoly& b);

} // namespace piflat
