#include "piflat/ore_poly.hpp"

#include "piflat/errors.hpp"

namespace piflat {

OrePoly OrePoly::one(const Ctx& ctx) {
    return from_fraction(DeltaFraction::one(ctx));
}

OrePoly OrePoly::derivative_op(const Ctx& ctx) {
    return monomial(DeltaFraction::one(ctx), 1);
}

OrePoly OrePoly::from_fraction(const DeltaFraction& c) {
    OrePoly p(c.ctx());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

OrePoly OrePoly::from_poly(const DeltaPoly& p) {
    return from_fraction(DeltaFraction::from_poly(p));
}

OrePoly OrePoly::from_field(const FieldElem& c) {
    return from_fraction(DeltaFraction::from_field(c));
}

OrePoly OrePoly::from_rational(const Ctx& ctx, const mpq_class& c) {
    return from_fraction(DeltaFraction::from_rational(ctx, c));
}

OrePoly OrePoly::monomial(const DeltaFraction& c, int dpow) {
    if (dpow < 0) throw InternalError("negative D-power");
    OrePoly p(c.ctx());
    if (c.is_zero()) return p;
    p.coeffs_.assign(static_cast<size_t>(dpow) + 1, DeltaFraction::zero(c.ctx()));
    p.coeffs_.back() = c;
    return p;
}

bool OrePoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_[0].is_one();
}

const DeltaFraction& OrePoly::leading_coeff() const {
    if (is_zero()) throw InternalError("leading coefficient of zero operator");
    return coeffs_.back();
}

DeltaFraction OrePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return DeltaFraction::zero(ctx_);
    return coeffs_[static_cast<size_t>(k)];
}

bool OrePoly::is_polynomial() const {
    for (const auto& c : coeffs_)
        if (!c.is_polynomial()) return false;
    return true;
}

DeltaPoly OrePoly::delta_part() const {
    if (deg() > 0) throw InternalError("operator has positive D-degree");
    if (is_zero()) return DeltaPoly::zero(ctx_);
    return coeffs_[0].poly();
}

DeltaFraction OrePoly::to_fraction() const {
    if (deg() > 0) throw InternalError("operator has positive D-degree");
    if (is_zero()) return DeltaFraction::zero(ctx_);
    return coeffs_[0];
}

void OrePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void OrePoly::set_coeff(int k, const DeltaFraction& c) {
    if (k >= static_cast<int>(coeffs_.size()))
        coeffs_.resize(static_cast<size_t>(k) + 1, DeltaFraction::zero(ctx_));
    coeffs_[static_cast<size_t>(k)] = c;
}

OrePoly OrePoly::operator-() const {
    OrePoly r(ctx_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
    check_same_ctx(ctx_, o.ctx_);
    OrePoly r(ctx_);
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.assign(n, DeltaFraction::zero(ctx_));
    for (size_t i = 0; i < n; ++i) {
        DeltaFraction c = DeltaFraction::zero(ctx_);
        if (i < coeffs_.size()) c = c + coeffs_[i];
        if (i < o.coeffs_.size()) c = c + o.coeffs_[i];
        r.coeffs_[i] = c;
    }
    r.trim();
    return r;
}

OrePoly OrePoly::operator-(const OrePoly& o) const { return *this + (-o); }

OrePoly OrePoly::operator*(const OrePoly& o) const {
    check_same_ctx(ctx_, o.ctx_);
    OrePoly r(ctx_);
    if (is_zero() || o.is_zero()) return r;
    int da = deg(), db = o.deg();
    r.coeffs_.assign(static_cast<size_t>(da + db) + 1, DeltaFraction::zero(ctx_));

    /* Derivative towers of the right factor's coefficients:
     * towers[l][j] = j-th derivative of o.coeffs_[l]. */
    std::vector<std::vector<DeltaFraction>> towers(o.coeffs_.size());
    for (size_t l = 0; l < o.coeffs_.size(); ++l) {
        towers[l].push_back(o.coeffs_[l]);
        for (int j = 1; j <= da; ++j) {
            if (towers[l].back().is_zero()) break;
            towers[l].push_back(towers[l].back().derive());
        }
    }

    /* D^k * b = sum_j binom(k, j) * derive^j(b) * D^(k-j). */
    for (int k = 0; k <= da; ++k) {
        const DeltaFraction& a = coeffs_[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        for (int l = 0; l <= db; ++l) {
            const auto& tower = towers[static_cast<size_t>(l)];
            mpz_class binom = 1;
            for (int j = 0; j <= k; ++j) {
                if (j > 0) {
                    binom *= k - j + 1;
                    binom /= j;
                }
                if (j >= static_cast<int>(tower.size())) break;
                const DeltaFraction& bj = tower[static_cast<size_t>(j)];
                if (bj.is_zero()) continue;
                DeltaFraction term = a * bj;
                if (binom != 1)
                    term = term * DeltaFraction::from_rational(ctx_, mpq_class(binom));
                size_t pos = static_cast<size_t>(k - j + l);
                r.coeffs_[pos] = r.coeffs_[pos] + term;
            }
        }
    }
    r.trim();
    return r;
}

bool OrePoly::operator==(const OrePoly& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
}

void OrePoly::divide(const OrePoly& a, const OrePoly& b, Side side,
                     OrePoly* q, OrePoly* r) {
    check_same_ctx(a.ctx_, b.ctx_);
    if (b.is_zero()) throw DivisionByZeroError("operator division by zero");
    OrePoly quo = OrePoly::zero(a.ctx_);
    OrePoly rem = a;
    DeltaFraction lb_inv = b.leading_coeff().inverse();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int d = rem.deg() - b.deg();
        DeltaFraction c = (side == Side::Right)
                              ? rem.leading_coeff() * lb_inv
                              : lb_inv * rem.leading_coeff();
        OrePoly term = monomial(c, d);
        quo = quo + term;
        rem = (side == Side::Right) ? rem - term * b : rem - b * term;
        if (rem.deg() >= d + b.deg())
            throw InternalError("operator division failed to reduce degree");
    }
    if (q) *q = quo;
    if (r) *r = rem;
}

DeltaPoly delta_lclm(const DeltaPoly& a, const DeltaPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DivisionByZeroError("lclm with zero");
    if (a.is_unit()) return b.unit_normalized();
    if (b.is_unit()) return a.unit_normalized();
    if (a == b) return a.unit_normalized();
    return DeltaPoly::gcd_lclm(a, b).m;
}

DeltaPoly OrePoly::denominator_clearing() const {
    DeltaPoly m = DeltaPoly::one(ctx_);
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        m = delta_lclm(m, c.den());
    }
    return m;
}

int OrePoly::cleared_delta_degree() const {
    if (is_zero()) return -1;
    OrePoly cleared = from_poly(denominator_clearing()) * (*this);
    int d = -1;
    for (const auto& c : cleared.coeffs_) {
        if (c.is_zero()) continue;
        if (!c.is_polynomial())
            throw InternalError("denominator clearing left a fraction");
        d = std::max(d, c.poly().deg());
    }
    return d;
}

} // namespace piflat
