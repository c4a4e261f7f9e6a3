#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "piflat/delta_fraction.hpp"
#include "piflat/errors.hpp"
#include "test_support.hpp"

using namespace piflat;
using namespace piflat::test;

namespace {

DeltaPoly dlt(const Ctx& ctx) { return DeltaPoly::delta(ctx, 0); }

DeltaPoly fld(const Ctx&, const FieldElem& c) {
    return DeltaPoly::from_field(c);
}

DeltaPoly rat(const Ctx& ctx, int n) {
    return DeltaPoly::from_rational(ctx, n);
}

/* Random delta polynomial with small random field coefficients. */
DeltaPoly random_delta_poly(const Ctx& ctx, Rng& rng, bool nonzero,
                            int max_deg = 2, int max_terms = 2) {
    bool allow_t = ctx->mode() == RingMode::SkewSingleDelay;
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, max_terms);
    std::uniform_int_distribution<int> dexp(0, max_deg);
    DeltaPoly p = DeltaPoly::zero(ctx);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e(ctx->delay_count(), 0);
        for (int& x : e) x = dexp(rng);
        p.add_term(e, random_field_elem(ctx, rng, allow_t));
    }
    if (nonzero && p.is_zero())
        p.add_term(ExpVec(ctx->delay_count(), 0), FieldElem::one(ctx));
    return p;
}

DeltaFraction random_delta_fraction(const Ctx& ctx, Rng& rng,
                                    bool nonzero = false) {
    DeltaPoly den = random_delta_poly(ctx, rng, true, 1, 2);
    DeltaPoly num = random_delta_poly(ctx, rng, nonzero, 2, 2);
    return DeltaFraction(den, num);
}

} // namespace

TEST_CASE("delay-operator commutation in products") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    FieldElem tau = FieldElem::gen(cx, 1);
    FieldElem k = FieldElem::gen(cx, 2);
    DeltaPoly d = dlt(cx);

    // delta * t = (t - tau) * delta
    CHECK(d * fld(cx, t) == DeltaPoly::monomial(t - tau, {1}));
    // delta^2 * t = (t - 2 tau) * delta^2
    CHECK(d * d * fld(cx, t) ==
          DeltaPoly::monomial(t - tau - tau, {2}));
    // delta * (1/t) = (1/(t - tau)) * delta
    CHECK(d * fld(cx, t.inverse()) ==
          DeltaPoly::monomial((t - tau).inverse(), {1}));
    // parameters are fixed by the shift
    CHECK(d * fld(cx, k) == fld(cx, k) * d);

    // (1 - delta) * delta = delta - delta^2
    DeltaPoly lhs = (rat(cx, 1) - d) * d;
    DeltaPoly expect = DeltaPoly::zero(cx);
    expect.add_term({1}, FieldElem::one(cx));
    expect.add_term({2}, FieldElem::from_rational(cx, -1));
    CHECK(lhs == expect);

    // right scaling shifts per delta power
    CHECK(d.scale_right(t) == DeltaPoly::monomial(t - tau, {1}));
    CHECK((d * d).scale_right(t) == DeltaPoly::monomial(t - tau - tau, {2}));

    Rng rng(101);
    for (int i = 0; i < 30; ++i) {
        FieldElem a = random_field_elem(cx, rng, true);
        CHECK(d * fld(cx, a) == fld(cx, a.shift(0, 1)) * d);
    }
}

TEST_CASE("two-delay operators commute with each other and coefficients") {
    Ctx cx = comm2_ctx();
    DeltaPoly d1 = DeltaPoly::delta(cx, 0);
    DeltaPoly d2 = DeltaPoly::delta(cx, 1);
    FieldElem eta = FieldElem::gen(cx, 3);
    CHECK(d1 * d2 == d2 * d1);
    CHECK(d1 * fld(cx, eta) == fld(cx, eta) * d1);
    CHECK((d1 + d2) * (d1 - d2) == d1 * d1 - d2 * d2);
}

TEST_CASE("product structure: degree additivity and ring axioms") {
    for (const Ctx& cx : {skew_ctx(), comm2_ctx()}) {
        Rng rng(202);
        for (int i = 0; i < 25; ++i) {
            DeltaPoly a = random_delta_poly(cx, rng, true);
            DeltaPoly b = random_delta_poly(cx, rng, true);
            DeltaPoly c = random_delta_poly(cx, rng, false);
            CHECK((a * b).deg() == a.deg() + b.deg());
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((b + c) * a == b * a + c * a);
        }
    }
}

TEST_CASE("coefficient-wise derivation and shift") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    FieldElem tau = FieldElem::gen(cx, 1);
    DeltaPoly p = DeltaPoly::monomial(t, {1}); // t * delta

    CHECK(p.derive() == dlt(cx));
    CHECK(p.shift_coeffs(0, 1) == DeltaPoly::monomial(t - tau, {1}));

    Rng rng(303);
    for (int i = 0; i < 20; ++i) {
        DeltaPoly a = random_delta_poly(cx, rng, false);
        DeltaPoly b = random_delta_poly(cx, rng, false);
        // derivation is additive and shift-compatible coefficient-wise
        CHECK((a + b).derive() == a.derive() + b.derive());
        CHECK(a.shift_coeffs(0, 1).derive() == a.derive().shift_coeffs(0, 1));
        CHECK(a.shift_coeffs(0, 1).shift_coeffs(0, -1) == a);
    }
}

TEST_CASE("right and left euclidean division") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    FieldElem tau = FieldElem::gen(cx, 1);
    FieldElem one = FieldElem::one(cx);
    DeltaPoly d = dlt(cx);

    DeltaPoly q = DeltaPoly::zero(cx), r = DeltaPoly::zero(cx);

    // (delta^2 - delta) / delta: quotient delta - 1, remainder 0
    DeltaPoly::divide_right(d * d - d, d, &q, &r);
    CHECK(q == d - rat(cx, 1));
    CHECK(r.is_zero());

    // delta / delta^2: quotient 0, remainder delta
    DeltaPoly::divide_right(d, d * d, &q, &r);
    CHECK(q.is_zero());
    CHECK(r == d);

    // a = t delta^2 + delta, b = 1 + delta
    DeltaPoly a = DeltaPoly::monomial(t, {2}) + d;
    DeltaPoly b = rat(cx, 1) + d;

    DeltaPoly::divide_right(a, b, &q, &r);
    CHECK(q == DeltaPoly::monomial(t, {1}) + fld(cx, one - t));
    CHECK(r == fld(cx, t - one));
    CHECK(q * b + r == a);

    DeltaPoly ql = DeltaPoly::zero(cx), rl = DeltaPoly::zero(cx);
    DeltaPoly::divide_left(a, b, &ql, &rl);
    CHECK(ql == DeltaPoly::monomial(t + tau, {1}) +
                    fld(cx, one - t - tau - tau));
    CHECK(rl == fld(cx, t + tau + tau - one));
    CHECK(b * ql + rl == a);

    CHECK_THROWS_AS(DeltaPoly::divide_right(a, DeltaPoly::zero(cx), &q, &r),
                    DivisionByZeroError);

    Rng rng(404);
    for (int i = 0; i < 25; ++i) {
        DeltaPoly x = random_delta_poly(cx, rng, false, 3);
        DeltaPoly y = random_delta_poly(cx, rng, true, 2);
        DeltaPoly::divide_right(x, y, &q, &r);
        CHECK(q * y + r == x);
        CHECK(r.deg() < y.deg());
        DeltaPoly::divide_left(x, y, &q, &r);
        CHECK(y * q + r == x);
        CHECK(r.deg() < y.deg());
    }
}

TEST_CASE("division in commutative mode is side-independent") {
    Ctx cx = comm1_ctx();
    Rng rng(505);
    for (int i = 0; i < 25; ++i) {
        DeltaPoly x = random_delta_poly(cx, rng, false, 3);
        DeltaPoly y = random_delta_poly(cx, rng, true, 2);
        DeltaPoly qr = DeltaPoly::zero(cx), rr = DeltaPoly::zero(cx);
        DeltaPoly ql = DeltaPoly::zero(cx), rl = DeltaPoly::zero(cx);
        DeltaPoly::divide_right(x, y, &qr, &rr);
        DeltaPoly::divide_left(x, y, &ql, &rl);
        CHECK(qr == ql);
        CHECK(rr == rl);
        CHECK(qr * y + rr == x);
    }
}

TEST_CASE("normalization scales the lowest coefficient to one") {
    Ctx cx = skew_ctx();
    FieldElem t = FieldElem::t(cx);
    DeltaPoly d = dlt(cx);
    DeltaPoly p = (d * d - d).scale_left(-t); // t delta - t delta^2
    DeltaPoly n = p.unit_normalized();
    CHECK(n == d - d * d);
    CHECK(n.lowest_coeff().is_one());
    CHECK(n.unit_normalized() == n);
}

TEST_CASE("common right divisor and least left multiple: pinned pairs") {
    Ctx cx = skew_ctx();
    DeltaPoly d = dlt(cx);
    DeltaPoly one = rat(cx, 1);

    SUBCASE("coprime pair delta and 1 - delta") {
        auto g = DeltaPoly::gcd_lclm(d, one - d);
        CHECK(g.g == one);
        CHECK(g.m == d - d * d);
        CHECK(g.u == one - d);
        CHECK(g.v == d);
        CHECK(g.u * d == g.m);
        CHECK(g.v * (one - d) == g.m);
    }

    SUBCASE("pair with a common right factor") {
        DeltaPoly a = (one - d) * d;       // delta - delta^2
        DeltaPoly b = (one - d) * d * d;   // delta^2 - delta^3
        auto g = DeltaPoly::gcd_lclm(a, b);
        CHECK(g.g == d - d * d);
        CHECK(g.m == d * d - d * d * d);
        CHECK(g.u == d);
        CHECK(g.v == one);
        DeltaPoly q = DeltaPoly::zero(cx), r = DeltaPoly::zero(cx);
        DeltaPoly::divide_right(a, g.g, &q, &r);
        CHECK(r.is_zero());
        DeltaPoly::divide_right(b, g.g, &q, &r);
        CHECK(r.is_zero());
    }

    SUBCASE("zero arguments are rejected") {
        CHECK_THROWS_AS(DeltaPoly::gcd_lclm(d, DeltaPoly::zero(cx)),
                        DivisionByZeroError);
    }
}

TEST_CASE("common divisor and least multiple in two-delay mode") {
    Ctx cx = comm2_ctx();
    DeltaPoly d1 = DeltaPoly::delta(cx, 0);
    DeltaPoly d2 = DeltaPoly::delta(cx, 1);

    auto g = DeltaPoly::gcd_lclm(d1, d2);
    CHECK(g.g == DeltaPoly::one(cx));
    CHECK(g.m == d1 * d2);
    CHECK(g.u * d1 == g.m);
    CHECK(g.v * d2 == g.m);

    auto h = DeltaPoly::gcd_lclm(d1 * d2, d1 * d1);
    CHECK(h.g == d1);
    CHECK(h.m == d1 * d1 * d2);
    CHECK(h.u * (d1 * d2) == h.m);
    CHECK(h.v * (d1 * d1) == h.m);
}

TEST_CASE("randomized multiple/divisor laws") {
    Ctx cx = skew_ctx();
    Rng rng(606);
    for (int i = 0; i < 20; ++i) {
        DeltaPoly a = random_delta_poly(cx, rng, true, 2, 2);
        DeltaPoly b = random_delta_poly(cx, rng, true, 2, 2);
        auto g = DeltaPoly::gcd_lclm(a, b);
        CHECK(g.u * a == g.m);
        CHECK(g.v * b == g.m);
        CHECK(g.m.lowest_coeff().is_one());
        CHECK(g.m.deg() == a.deg() + b.deg() - g.g.deg());
        DeltaPoly q = DeltaPoly::zero(cx), r = DeltaPoly::zero(cx);
        DeltaPoly::divide_right(a, g.g, &q, &r);
        CHECK(r.is_zero());
        DeltaPoly::divide_right(b, g.g, &q, &r);
        CHECK(r.is_zero());
    }
}

TEST_CASE("common left divisor") {
    Ctx cx = skew_ctx();
    DeltaPoly d = dlt(cx);
    DeltaPoly one = rat(cx, 1);

    CHECK(DeltaPoly::gcld(d * d, d * d * d) == d * d);
    CHECK(DeltaPoly::gcld((one - d) * d, (one - d) * d * d) == d - d * d);
    CHECK(DeltaPoly::gcld(d, one - d) == one);

    Rng rng(707);
    for (int i = 0; i < 15; ++i) {
        DeltaPoly c = random_delta_poly(cx, rng, true, 1, 2);
        DeltaPoly x = random_delta_poly(cx, rng, true, 1, 2);
        DeltaPoly y = random_delta_poly(cx, rng, true, 1, 2);
        DeltaPoly g = DeltaPoly::gcld(c * x, c * y);
        // the common factor c must divide g from the left
        DeltaPoly q = DeltaPoly::zero(cx), r = DeltaPoly::zero(cx);
        DeltaPoly::divide_left(g, c, &q, &r);
        CHECK(r.is_zero());
        // and g left-divides both products
        DeltaPoly::divide_left(c * x, g, &q, &r);
        CHECK(r.is_zero());
        DeltaPoly::divide_left(c * y, g, &q, &r);
        CHECK(r.is_zero());
    }
}

TEST_CASE("fractions embed polynomials and normalize canonically") {
    Ctx cx = skew_ctx();
    DeltaPoly d = dlt(cx);
    DeltaPoly one = rat(cx, 1);

    DeltaFraction p = DeltaFraction::from_poly(one + d);
    CHECK(p.is_polynomial());
    CHECK(p.poly() == one + d);
    CHECK(p.den() == one);

    // ((1-d) d)^{-1} * d reduces to (1-d)^{-1} * 1
    DeltaFraction x((one - d) * d, d);
    CHECK(x.den() == one - d);
    CHECK(x.num() == one);
    CHECK(x == DeltaFraction::from_poly(one - d).inverse());

    // denominator is pinned by its lowest coefficient
    FieldElem t = FieldElem::t(cx);
    DeltaFraction y(DeltaPoly::monomial(t, {1}), one); // (t d)^{-1}
    CHECK(y.den() == d);
    CHECK(y.num() == fld(cx, t.inverse()));

    CHECK_THROWS_AS(DeltaFraction(DeltaPoly::zero(cx), d),
                    DivisionByZeroError);
}

TEST_CASE("fraction arithmetic: pinned values") {
    Ctx cx = skew_ctx();
    DeltaPoly d = dlt(cx);
    DeltaPoly one = rat(cx, 1);
    FieldElem t = FieldElem::t(cx);

    DeltaFraction dinv = DeltaFraction::from_poly(d).inverse();
    CHECK(dinv * dinv == DeltaFraction::from_poly(d * d).inverse());
    CHECK(dinv.inverse() == DeltaFraction::from_poly(d));

    // (1-d)^{-1} + d^{-1} = (d - d^2)^{-1} * 1
    DeltaFraction s = DeltaFraction::from_poly(one - d).inverse() + dinv;
    CHECK(s.den() == d - d * d);
    CHECK(s.num() == one);

    // re-multiplication closes the loop for a skew product
    DeltaFraction z =
        DeltaFraction::from_poly(one - d).inverse() * DeltaFraction::from_field(t);
    CHECK(DeltaFraction::from_poly(one - d) * z == DeltaFraction::from_field(t));

    // commutation survives in the fraction field
    DeltaFraction da = DeltaFraction::from_poly(d) * DeltaFraction::from_field(t);
    FieldElem tau = FieldElem::gen(cx, 1);
    CHECK(da == DeltaFraction::from_field(t - tau) * DeltaFraction::from_poly(d));
}

TEST_CASE("fraction derivation") {
    Ctx cx = skew_ctx();
    DeltaPoly d = dlt(cx);
    DeltaPoly one = rat(cx, 1);
    FieldElem t = FieldElem::t(cx);

    // (d^{-1} t)' = d^{-1} 1
    DeltaFraction x(d, fld(cx, t));
    CHECK(x.derive() == DeltaFraction(d, one));

    // ((1-d)^{-1} (1/t))' = (1-d)^{-1} (-1/t^2)
    DeltaFraction y(one - d, fld(cx, t.inverse()));
    CHECK(y.derive() ==
          DeltaFraction(one - d, fld(cx, -(t * t).inverse())));

    // polynomial embedding derives coefficient-wise
    DeltaPoly p = DeltaPoly::monomial(t * t, {1});
    CHECK(DeltaFraction::from_poly(p).derive() ==
          DeltaFraction::from_poly(p.derive()));

    Rng rng(808);
    for (int i = 0; i < 12; ++i) {
        DeltaFraction a = random_delta_fraction(cx, rng);
        DeltaFraction b = random_delta_fraction(cx, rng);
        CHECK((a + b).derive() == a.derive() + b.derive());
        CHECK((a * b).derive() == a.derive() * b + a * b.derive());
    }
    for (int i = 0; i < 8; ++i) {
        DeltaFraction a = random_delta_fraction(cx, rng, true);
        DeltaFraction ai = a.inverse();
        CHECK(ai.derive() == -(ai * a.derive() * ai));
    }
}

TEST_CASE("randomized fraction field axioms") {
    for (const Ctx& cx : {skew_ctx(), comm2_ctx()}) {
        Rng rng(909);
        for (int i = 0; i < 15; ++i) {
            DeltaFraction x = random_delta_fraction(cx, rng);
            DeltaFraction y = random_delta_fraction(cx, rng);
            DeltaFraction z = random_delta_fraction(cx, rng);
            CHECK(x + y == y + x);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x + y) - y == x);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((y + z) * x == y * x + z * x);
        }
        for (int i = 0; i < 10; ++i) {
            DeltaFraction x = random_delta_fraction(cx, rng, true);
            CHECK(x * x.inverse() == DeltaFraction::one(cx));
            CHECK(x.inverse() * x == DeltaFraction::one(cx));
        }
    }
    Ctx cx = skew_ctx();
    CHECK_THROWS_AS(DeltaFraction::zero(cx).inverse(), DivisionByZeroError);
}

TEST_CASE("commutative fractions agree with naive rational arithmetic") {
    Ctx cx = comm2_ctx();
    Rng rng(1010);
    for (int i = 0; i < 20; ++i) {
        DeltaPoly d1 = random_delta_poly(cx, rng, true, 1, 2);
        DeltaPoly n1 = random_delta_poly(cx, rng, false, 2, 2);
        DeltaPoly d2 = random_delta_poly(cx, rng, true, 1, 2);
        DeltaPoly n2 = random_delta_poly(cx, rng, false, 2, 2);
        DeltaFraction x(d1, n1), y(d2, n2);
        CHECK(x + y == DeltaFraction(d1 * d2, n1 * d2 + d1 * n2));
        CHECK(x * y == DeltaFraction(d1 * d2, n1 * n2));
    }
}
