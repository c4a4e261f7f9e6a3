#include "piflat/delta_fraction.hpp"

#include "piflat/dense_delta.hpp"

namespace piflat {

using detail::QVec;
using detail::ZVec;

DeltaFraction::DeltaFraction(DeltaPoly den, DeltaPoly num)
    : den_(std::move(den)), num_(std::move(num)) {
    check_same_ctx(den_.ctx(), num_.ctx());
    if (den_.is_zero()) throw DivisionByZeroError("zero delta denominator");
    reduce();
}

DeltaFraction DeltaFraction::dense_make(const Ctx& ctx, QVec den, QVec num) {
    DeltaFraction r = zero(ctx);
    if (detail::qv_deg(num) < 0) return r;
    ZVec g;
    if (!detail::int_poly_gcd(detail::primitive_int(den),
                              detail::primitive_int(num), &g))
        return DeltaFraction(detail::from_qvec(ctx, den),
                             detail::from_qvec(ctx, num));
    if (g.size() > 1) {
        QVec gq = detail::to_qvec(g);
        den = detail::q_divide_exact(den, gq);
        num = detail::q_divide_exact(num, gq);
    }
    std::size_t l = 0;
    while (den[l] == 0) ++l;
    if (den[l] != 1) {
        mpq_class inv = 1 / den[l];
        for (auto& c : den)
            if (c != 0) c *= inv;
        for (auto& c : num)
            if (c != 0) c *= inv;
    }
    r.den_ = detail::from_qvec(ctx, den);
    r.num_ = detail::from_qvec(ctx, num);
    return r;
}

void DeltaFraction::reduce() {
    const Ctx& ctx = num_.ctx();
    if (num_.is_zero()) {
        den_ = DeltaPoly::one(ctx);
        return;
    }
    if (den_.is_unit()) {
        // den^-1 is a scalar unit; fold it into the numerator.
        if (!den_.is_one()) {
            num_ = num_.scale_left(den_.to_field().inverse());
            den_ = DeltaPoly::one(ctx);
        }
        return;
    }
    if (ctx->delay_count() == 1) {
        int filt = detail::coprime_filter(den_, num_);
        if (filt == 1) {
            // Certified coprime: only the denominator normalization can
            // still be missing.
            const FieldElem& low = den_.lowest_coeff();
            if (!low.is_one()) {
                FieldElem lam = low.inverse();
                den_ = den_.scale_left(lam);
                num_ = num_.scale_left(lam);
            }
            return;
        }
        if (filt == 0) {
            QVec qd, qn;
            ZVec g;
            if (detail::dense_rational(den_, &qd) &&
                detail::dense_rational(num_, &qn) &&
                detail::int_poly_gcd(detail::primitive_int(qd),
                                     detail::primitive_int(qn), &g)) {
                if (g.size() > 1) {
                    QVec gq = detail::to_qvec(g);
                    qd = detail::q_divide_exact(qd, gq);
                    qn = detail::q_divide_exact(qn, gq);
                }
                std::size_t l = 0;
                while (qd[l] == 0) ++l;
                if (qd[l] != 1) {
                    mpq_class inv = 1 / qd[l];
                    for (auto& c : qd)
                        if (c != 0) c *= inv;
                    for (auto& c : qn)
                        if (c != 0) c *= inv;
                }
                den_ = detail::from_qvec(ctx, qd);
                num_ = detail::from_qvec(ctx, qn);
                return;
            }
            // modular gcd gave up: fall through to the generic scheme
        }
    }
    if (ctx->mode() == RingMode::SkewSingleDelay) {
        DeltaPoly g = DeltaPoly::gcld(den_, num_);
        if (!g.is_unit()) {
            DeltaPoly qd(ctx), qn(ctx), r(ctx);
            DeltaPoly::divide_left(den_, g, &qd, &r);
            if (!r.is_zero()) throw InternalError("left divisor fails to divide");
            DeltaPoly::divide_left(num_, g, &qn, &r);
            if (!r.is_zero()) throw InternalError("left divisor fails to divide");
            den_ = std::move(qd);
            num_ = std::move(qn);
        }
    } else {
        // Commutative: reduce in the combined polynomial ring (both parts
        // first scaled by one common ground denominator, which leaves the
        // fraction value unchanged).
        MPoly cd = MPoly::lcm(den_.coeff_den_lcm(), num_.coeff_den_lcm());
        MPoly d = den_.lift_combined(cd);
        MPoly n = num_.lift_combined(cd);
        MPoly g = MPoly::gcd(d, n);
        if (!g.is_constant()) {
            den_ = DeltaPoly::from_combined(ctx, d.divide_exact(g));
            num_ = DeltaPoly::from_combined(ctx, n.divide_exact(g));
        }
    }
    if (den_.is_unit()) {
        num_ = num_.scale_left(den_.to_field().inverse());
        den_ = DeltaPoly::one(ctx);
        return;
    }
    FieldElem low = den_.lowest_coeff();
    if (!low.is_one()) {
        FieldElem lam = low.inverse();
        den_ = den_.scale_left(lam);
        num_ = num_.scale_left(lam);
    }
}

DeltaFraction DeltaFraction::zero(const Ctx& ctx) {
    return DeltaFraction(DeltaPoly::one(ctx), DeltaPoly::zero(ctx));
}

DeltaFraction DeltaFraction::one(const Ctx& ctx) {
    return DeltaFraction(DeltaPoly::one(ctx), DeltaPoly::one(ctx));
}

DeltaFraction DeltaFraction::from_poly(const DeltaPoly& p) {
    return DeltaFraction(DeltaPoly::one(p.ctx()), p);
}

DeltaFraction DeltaFraction::from_field(const FieldElem& c) {
    return from_poly(DeltaPoly::from_field(c));
}

DeltaFraction DeltaFraction::from_rational(const Ctx& ctx, const mpq_class& c) {
    return from_poly(DeltaPoly::from_rational(ctx, c));
}

const DeltaPoly& DeltaFraction::poly() const {
    if (!is_polynomial())
        throw InternalError("fraction with nontrivial denominator used as polynomial");
    return num_;
}

FieldElem DeltaFraction::to_field() const {
    return poly().to_field();
}

DeltaFraction DeltaFraction::operator-() const {
    DeltaFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

DeltaFraction DeltaFraction::operator+(const DeltaFraction& o) const {
    check_same_ctx(ctx(), o.ctx());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return DeltaFraction(den_, num_ + o.num_);
    if (ctx()->delay_count() == 1) {
        QVec d1, n1, d2, n2;
        ZVec g;
        if (detail::dense_rational(den_, &d1) &&
            detail::dense_rational(num_, &n1) &&
            detail::dense_rational(o.den_, &d2) &&
            detail::dense_rational(o.num_, &n2) &&
            detail::int_poly_gcd(detail::primitive_int(d1),
                                 detail::primitive_int(d2), &g)) {
            QVec gq = detail::to_qvec(g);
            QVec m = detail::q_mul(d1, detail::q_divide_exact(d2, gq));
            QVec sum = detail::q_mul(detail::q_divide_exact(m, d1), n1);
            QVec vn = detail::q_mul(detail::q_divide_exact(m, d2), n2);
            if (vn.size() > sum.size()) sum.resize(vn.size(), mpq_class(0));
            for (std::size_t i = 0; i < vn.size(); ++i) sum[i] += vn[i];
            return dense_make(ctx(), std::move(m), std::move(sum));
        }
    }
    // Bring both over the least common left multiple of the denominators:
    // m = u*d1 = v*d2, so d1^-1 n1 + d2^-1 n2 = m^-1 (u n1 + v n2).
    auto cl = DeltaPoly::gcd_lclm(den_, o.den_);
    return DeltaFraction(cl.m, cl.u * num_ + cl.v * o.num_);
}

DeltaFraction DeltaFraction::operator-(const DeltaFraction& o) const {
    return *this + (-o);
}

DeltaFraction DeltaFraction::operator*(const DeltaFraction& o) const {
    check_same_ctx(ctx(), o.ctx());
    const Ctx& c = ctx();
    if (is_zero() || o.is_zero()) return zero(c);
    if (c->delay_count() == 1) {
        // Single-delay constants commute with sigma, so the product is the
        // plain commutative one whatever the mode.
        QVec d1, n1, d2, n2;
        if (detail::dense_rational(den_, &d1) &&
            detail::dense_rational(num_, &n1) &&
            detail::dense_rational(o.den_, &d2) &&
            detail::dense_rational(o.num_, &n2))
            return dense_make(c, detail::q_mul(d1, d2), detail::q_mul(n1, n2));
    }
    if (c->mode() != RingMode::SkewSingleDelay)
        return DeltaFraction(den_ * o.den_, num_ * o.num_);
    // d1^-1 n1 * d2^-1 n2: rewrite n1 d2^-1 as a left fraction using the
    // Ore condition.  With m = u*n1 = v*d2 one has n1 d2^-1 = u^-1 v, so
    // the product is (u d1)^-1 (v n2).
    if (o.den_.is_one())
        return DeltaFraction(den_, num_ * o.num_);
    auto cl = DeltaPoly::gcd_lclm(num_, o.den_);
    return DeltaFraction(cl.u * den_, cl.v * o.num_);
}

DeltaFraction DeltaFraction::operator/(const DeltaFraction& o) const {
    return *this * o.inverse();
}

DeltaFraction DeltaFraction::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero delta fraction");
    return DeltaFraction(num_, den_);
}

bool DeltaFraction::operator==(const DeltaFraction& o) const {
    return den_ == o.den_ && num_ == o.num_;
}

DeltaFraction DeltaFraction::derive() const {
    // With x = d^-1 n:  d x = n, so  d' x + d x' = n'  and
    // x' = d^-1 (n' - d' x).
    DeltaFraction dx = DeltaFraction(den_, den_.derive()) * *this;
    return DeltaFraction(den_, num_.derive()) - dx;
}

} // namespace piflat
