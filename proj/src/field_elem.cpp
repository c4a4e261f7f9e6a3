#include "piflat/field_elem.hpp"

namespace piflat {

FieldElem::FieldElem(Ctx ctx, MPoly num, MPoly den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    if (!ctx_) throw InternalError("field element without context");
    if (num_.nvars() != ctx_->ground_gens() || den_.nvars() != ctx_->ground_gens())
        throw InternalError("field element polynomial arity mismatch");
    if (den_.is_zero()) throw DivisionByZeroError("zero denominator in ground field");
    if (num_.is_zero()) {
        den_ = MPoly::constant(den_.nvars(), 1);
        return;
    }
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    mpq_class c = den_.signed_content();
    if (c != 1) {
        den_ = den_.primitive_normalized();
        num_ = num_.mul_scalar(mpq_class(1) / c);
    }
}

FieldElem::FieldElem(AlreadyReduced, Ctx ctx, MPoly num, MPoly den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) {
        den_ = MPoly::constant(den_.nvars(), 1);
        return;
    }
    mpq_class c = den_.signed_content();
    if (c != 1) {
        den_ = den_.primitive_normalized();
        num_ = num_.mul_scalar(mpq_class(1) / c);
    }
}

FieldElem FieldElem::zero(const Ctx& ctx) {
    int n = ctx->ground_gens();
    return FieldElem(ctx, MPoly(n), MPoly::constant(n, 1));
}

FieldElem FieldElem::one(const Ctx& ctx) {
    return from_rational(ctx, 1);
}

FieldElem FieldElem::from_rational(const Ctx& ctx, const mpq_class& c) {
    int n = ctx->ground_gens();
    return FieldElem(ctx, MPoly::constant(n, c), MPoly::constant(n, 1));
}

FieldElem FieldElem::gen(const Ctx& ctx, int index) {
    int n = ctx->ground_gens();
    return FieldElem(ctx, MPoly::gen(n, index), MPoly::constant(n, 1));
}

mpq_class FieldElem::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value of nonconstant element");
    return num_.constant_value() / den_.constant_value();
}

bool FieldElem::depends_on_t() const { return depends_on(0); }

bool FieldElem::depends_on(int var) const {
    return num_.depends_on(var) || den_.depends_on(var);
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    r.num_ = -r.num_;
    return r;
}

/* The sum and product below keep both operands reduced throughout (the
 * classical scheme from rational arithmetic): the output is coprime by
 * construction, so no full gcd over the combined numerator/denominator is
 * ever needed. */

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    MPoly g1 = MPoly::gcd(den_, o.den_);
    if (g1.is_one()) {
        return FieldElem(AlreadyReduced{}, ctx_,
                         num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    MPoly t = num_ * o.den_.divide_exact(g1) + o.num_ * den_.divide_exact(g1);
    if (t.is_zero()) return zero(ctx_);
    MPoly g2 = MPoly::gcd(t, g1);
    return FieldElem(AlreadyReduced{}, ctx_, t.divide_exact(g2),
                     den_.divide_exact(g1) * o.den_.divide_exact(g2));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    return *this + (-o);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (is_zero() || o.is_zero()) return zero(ctx_);
    MPoly g1 = MPoly::gcd(num_, o.den_);
    MPoly g2 = MPoly::gcd(o.num_, den_);
    return FieldElem(AlreadyReduced{}, ctx_,
                     num_.divide_exact(g1) * o.num_.divide_exact(g2),
                     den_.divide_exact(g2) * o.den_.divide_exact(g1));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inverse();
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in ground field");
    return FieldElem(AlreadyReduced{}, ctx_, den_, num_);
}

FieldElem FieldElem::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    FieldElem r = one(ctx_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same_ctx(ctx_, o.ctx_);
    return num_ == o.num_ && den_ == o.den_;
}

FieldElem FieldElem::shift(int delay_index, int k) const {
    if (k == 0 || !depends_on_t()) return *this;
    if (delay_index < 0 || delay_index >= ctx_->delay_count())
        throw InternalError("shift with out-of-range delay index");
    int n = ctx_->ground_gens();
    // t -> t - k * tau_i
    MPoly target = MPoly::gen(n, 0) -
                   MPoly::gen(n, 1 + delay_index).mul_scalar(k);
    return FieldElem(ctx_, num_.substitute(0, target), den_.substitute(0, target));
}

FieldElem FieldElem::derive() const {
    MPoly dn = num_.derivative(0);
    MPoly dd = den_.derivative(0);
    return FieldElem(ctx_, dn * den_ - num_ * dd, den_ * den_);
}

FieldElem FieldElem::substitute_gen(int var, const FieldElem& value) const {
    check_same_ctx(ctx_, value.ctx_);
    if (var <= ctx_->delay_count())
        throw InternalError("cannot substitute t or a shift amount");
    auto subst = [&](const MPoly& p) {
        FieldElem acc = zero(ctx_);
        FieldElem pw = one(ctx_);
        int cur = 0;
        for (int e = 0; e <= p.degree(var); ++e) {
            MPoly ce = p.coeff_wrt(var, e);
            if (ce.is_zero()) continue;
            while (cur < e) {
                pw = pw * value;
                ++cur;
            }
            acc = acc + FieldElem(ctx_, ce, MPoly::constant(p.nvars(), 1)) * pw;
        }
        return acc;
    };
    return subst(num_) / subst(den_);
}

} // namespace piflat
