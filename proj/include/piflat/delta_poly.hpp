#pragma once

#include "piflat/field_elem.hpp"

namespace piflat {

/* Polynomial in the delay operators with ground-field coefficients written
 * on the left: sum of c_e * delta^e over exponent vectors e (one slot per
 * declared delay; no slots when there are no delays).
 *
 * In SkewSingleDelay mode multiplication applies the commutation rule
 * delta * c = shift(c) * delta; in Commutative mode coefficients are
 * t-free and delta commutes with everything. */
struct GcdLclm;

class DeltaPoly {
public:
    using TermMap = std::map<ExpVec, FieldElem, GradedLexLess>;

    explicit DeltaPoly(Ctx ctx) : ctx_(std::move(ctx)) {}

    static DeltaPoly zero(const Ctx& ctx) { return DeltaPoly(ctx); }
    static DeltaPoly one(const Ctx& ctx);
    static DeltaPoly from_field(const FieldElem& c);
    static DeltaPoly from_rational(const Ctx& ctx, const mpq_class& c);
    /* The delay operator with the given index. */
    static DeltaPoly delta(const Ctx& ctx, int delay_index);
    static DeltaPoly monomial(const FieldElem& c, const ExpVec& e);

    const Ctx& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /* Degree-zero nonzero elements: exactly the units of the delta ring. */
    bool is_unit() const;
    bool is_field_constant() const { return is_zero() || is_unit(); }

    /* Total degree in the delay operators. */
    int deg() const;
    FieldElem coeff(const ExpVec& e) const;
    /* Coefficient of delta^k; only for a single delay slot. */
    FieldElem coeff1(int k) const;
    const ExpVec& leading_monomial() const;
    const FieldElem& leading_coeff() const;
    const ExpVec& lowest_monomial() const;
    const FieldElem& lowest_coeff() const;
    /* Conversion of a degree-0 polynomial to its field constant. */
    FieldElem to_field() const;

    void add_term(const ExpVec& e, const FieldElem& c);

    DeltaPoly operator-() const;
    DeltaPoly operator+(const DeltaPoly& o) const;
    DeltaPoly operator-(const DeltaPoly& o) const;
    DeltaPoly operator*(const DeltaPoly& o) const;
    /* Field-element scaling from the chosen side (sides differ in skew
     * mode: right scaling shifts the scalar past the delta powers). */
    DeltaPoly scale_left(const FieldElem& c) const;
    DeltaPoly scale_right(const FieldElem& c) const;
    DeltaPoly pow(int n) const;

    bool operator==(const DeltaPoly& o) const;
    bool operator!=(const DeltaPoly& o) const { return !(*this == o); }

    /* Coefficient-wise d/dt (the derivation commutes with delta). */
    DeltaPoly derive() const;
    /* Apply the shift endomorphism coefficient-wise. */
    DeltaPoly shift_coeffs(int delay_index, int k) const;

    /* Scaled so the graded-lex lowest term has coefficient exactly 1 (the
     * canonical unit representative; matches how these polynomials are
     * printed, lowest term first). */
    DeltaPoly unit_normalized() const;

    /* Right division a = q*b + r with deg r < deg b; single delay slot (or
     * none) only. */
    static void divide_right(const DeltaPoly& a, const DeltaPoly& b,
                             DeltaPoly* q, DeltaPoly* r);
    /* Left division a = b*q + r with deg r < deg b. */
    static void divide_left(const DeltaPoly& a, const DeltaPoly& b,
                            DeltaPoly* q, DeltaPoly* r);

    /* Skew mode: extended right-division Euclidean scheme.  Commutative
     * mode (any number of delays): ordinary polynomial gcd/lcm.  Both g
     * and m are unit-normalized. */
    static GcdLclm gcd_lclm(const DeltaPoly& a, const DeltaPoly& b);

    /* Divide by a unit on the right so the lowest graded-lex coefficient
     * becomes 1 (left divisors are determined up to right units, so this
     * is the canonical-form side for them). */
    DeltaPoly right_unit_normalized() const;

    /* Greatest common left divisor via the left-division Euclidean scheme
     * (used to reduce left fractions); commutative mode reuses gcd. */
    static DeltaPoly gcld(const DeltaPoly& a, const DeltaPoly& b);

    /* Unit c with scale_left(c) primitive: polynomial coefficients whose
     * numerators share no ground factor.  1 for the zero polynomial.
     * Rescaling each Euclidean remainder this way keeps coefficient sizes
     * polynomially bounded instead of compounding across iterations. */
    FieldElem content_unit_left() const;
    /* Same for scale_right(c); the per-term shifts are pulled back so one
     * unit clears every slot.  Right scaling is the side that preserves
     * common left divisors. */
    FieldElem content_unit_right() const;

    /* Least common multiple of the ground denominators of all
     * coefficients (1 for a polynomial with denominator-free entries). */
    MPoly coeff_den_lcm() const;
    /* Lift into one commutative polynomial ring (delay exponents first,
     * ground generators after), scaling by common_den so every coefficient
     * clears; common_den must be divisible by each coefficient
     * denominator.  Commutative mode only. */
    MPoly lift_combined(const MPoly& common_den) const;
    static DeltaPoly from_combined(const Ctx& ctx, const MPoly& p);

private:
    void check_ctx(const DeltaPoly& o) const;
    int slots() const { return ctx_->delay_count(); }
    bool skew() const { return ctx_->mode() == RingMode::SkewSingleDelay; }

    Ctx ctx_;
    TermMap terms_;
};

struct GcdLclm {
    DeltaPoly g;  // greatest common right divisor
    DeltaPoly m;  // least common left multiple, m = u*a = v*b
    DeltaPoly u;
    DeltaPoly v;
};

} // namespace piflat
