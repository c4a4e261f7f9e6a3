#include "piflat/delta_poly.hpp"

#include "piflat/dense_delta.hpp"

namespace piflat {

namespace {

using detail::QVec;
using detail::ZVec;

/* sigma^k applied to a scalar, honoring the ring mode. */
FieldElem shifted(const FieldElem& c, int k, bool skew_mode) {
    return skew_mode ? c.shift(0, k) : c;
}

/* Deterministic prime sequence starting just above 2^31 (products of two
 * residues then stay below 2^64). */
unsigned long nth_modular_prime(std::size_t i) {
    static std::vector<unsigned long> primes;
    static mpz_class cursor(2147483646);
    while (primes.size() <= i) {
        mpz_nextprime(cursor.get_mpz_t(), cursor.get_mpz_t());
        primes.push_back(cursor.get_ui());
    }
    return primes[i];
}

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned long long>(a) * b) % p);
}

unsigned long pow_mod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    return pow_mod(a % p, p - 2, p);
}

/* Reduce mod p; empty result signals that the leading coefficient
 * vanished (skip that prime). */
std::vector<unsigned long> mod_image(const ZVec& a, unsigned long p) {
    std::vector<unsigned long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    if (out.back() == 0) out.clear();
    return out;
}

/* Monic gcd of dense polynomials over Z/p. */
std::vector<unsigned long> gcd_mod_p(std::vector<unsigned long> a,
                                     std::vector<unsigned long> b,
                                     unsigned long p) {
    auto trim = [](std::vector<unsigned long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        unsigned long binv = inv_mod(b.back(), p);
        for (int k = static_cast<int>(a.size()) - static_cast<int>(b.size());
             k >= 0; --k) {
            unsigned long top = a[k + b.size() - 1];
            if (top == 0) continue;
            unsigned long q = mul_mod(top, binv, p);
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned long s = mul_mod(q, b[j], p);
                a[k + j] = (a[k + j] + p - s) % p;
            }
        }
        trim(a);
        a.swap(b);
    }
    unsigned long lead = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, lead, p);
    return a;
}

/* Exact division test over Z; g must be primitive with positive lead. */
bool z_divides(const ZVec& a, const ZVec& g) {
    if (g.size() > a.size()) return false;
    ZVec r = a;
    mpz_class q;
    for (int k = static_cast<int>(a.size() - g.size()); k >= 0; --k) {
        mpz_class& top = r[k + g.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t()))
            return false;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), g.back().get_mpz_t());
        for (std::size_t j = 0; j < g.size(); ++j) r[k + j] -= q * g[j];
    }
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

} // namespace

namespace detail {

/* Dense helpers for the single-delay rational-constant regime; declared
 * in dense_delta.hpp and shared with the fraction layer.  See there for
 * the rationale. */

int qv_deg(const QVec& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (v[i] != 0) return i;
    return -1;
}

/* View a single-delay polynomial as a dense rational vector; fails when a
 * coefficient involves a ground generator. */
bool dense_rational(const DeltaPoly& p, QVec* out) {
    int d = p.deg();
    out->assign(d + 1, mpq_class(0));
    for (int k = 0; k <= d; ++k) {
        FieldElem c = p.coeff1(k);
        if (c.is_zero()) continue;
        if (!c.is_rational()) return false;
        (*out)[k] = c.rational_value();
    }
    return true;
}

/* Clear denominators and strip integer content; leading coefficient made
 * positive.  Input must be nonzero. */
ZVec primitive_int(const QVec& q) {
    int d = qv_deg(q);
    mpz_class den(1);
    for (int i = 0; i <= d; ++i)
        if (q[i] != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[i].get_den_mpz_t());
    ZVec out(d + 1);
    for (int i = 0; i <= d; ++i)
        if (q[i] != 0) out[i] = q[i].get_num() * mpz_class(den / q[i].get_den());
    mpz_class g(0);
    for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (sgn(out[d]) < 0) g = -g;
    if (g != 1)
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

QVec q_mul(const QVec& a, const QVec& b) {
    QVec out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
    return out;
}

/* Division with remainder over Q. */
void q_divmod(const QVec& a, const QVec& b, QVec* q, QVec* r) {
    int da = qv_deg(a), db = qv_deg(b);
    if (da < db) {
        q->assign(1, mpq_class(0));
        *r = a;
        return;
    }
    r->assign(a.begin(), a.begin() + da + 1);
    q->assign(da - db + 1, mpq_class(0));
    for (int k = da - db; k >= 0; --k) {
        if ((*r)[k + db] == 0) continue;
        (*q)[k] = (*r)[k + db] / b[db];
        for (int j = 0; j <= db; ++j) (*r)[k + j] -= (*q)[k] * b[j];
    }
}

/* Exact quotient over Q; the divisions here are exact by construction. */
QVec q_divide_exact(const QVec& a, const QVec& b) {
    QVec q, r;
    q_divmod(a, b, &q, &r);
    if (qv_deg(a) < qv_deg(b) || qv_deg(r) >= 0)
        throw InternalError("inexact dense quotient in rational gcd path");
    return q;
}

void lowest_one(QVec* v) {
    for (const auto& c : *v)
        if (c != 0) {
            if (c == 1) return;
            mpq_class inv = 1 / c;
            for (auto& x : *v)
                if (x != 0) x *= inv;
            return;
        }
}

QVec to_qvec(const ZVec& z) {
    QVec out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = mpq_class(z[i]);
    return out;
}

DeltaPoly from_qvec(const Ctx& ctx, const QVec& v) {
    DeltaPoly out = DeltaPoly::zero(ctx);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0)
            out.add_term(ExpVec{static_cast<int>(k)},
                         FieldElem::from_rational(ctx, v[k]));
    return out;
}

/* Primitive gcd over Z by small-prime images with CRT lifting; returns
 * false if the prime budget runs out (caller falls back to the generic
 * scheme).  Inputs are primitive with positive leads. */
bool int_poly_gcd(const ZVec& a, const ZVec& b, ZVec* g) {
    if (a.size() == 1 || b.size() == 1) {
        g->assign(1, mpz_class(1));
        return true;
    }
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    ZVec crt;
    mpz_class modulus(0);
    std::size_t best = SIZE_MAX;
    for (std::size_t pi = 0; pi < 64; ++pi) {
        unsigned long p = nth_modular_prime(pi);
        auto ia = mod_image(a, p), ib = mod_image(b, p);
        if (ia.empty() || ib.empty()) continue;
        auto gp = gcd_mod_p(ia, ib, p);
        if (gp.size() == 1) {
            g->assign(1, mpz_class(1));
            return true;
        }
        unsigned long gl = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : gp) c = mul_mod(c, gl, p);
        if (gp.size() < best) {
            best = gp.size();
            modulus = p;
            crt.assign(gp.size(), mpz_class());
            for (std::size_t i = 0; i < gp.size(); ++i) {
                crt[i] = gp[i];
                if (crt[i] * 2 > p) crt[i] -= p;
            }
        } else if (gp.size() > best) {
            continue;  // unlucky prime
        } else {
            unsigned long mp = mpz_fdiv_ui(modulus.get_mpz_t(), p);
            unsigned long mp_inv = inv_mod(mp, p);
            mpz_class next = modulus * p;
            for (std::size_t i = 0; i < crt.size(); ++i) {
                unsigned long r = mpz_fdiv_ui(crt[i].get_mpz_t(), p);
                unsigned long diff = (gp[i] + p - r) % p;
                crt[i] += modulus * mul_mod(diff, mp_inv, p);
                if (crt[i] * 2 > next) crt[i] -= next;
            }
            modulus = next;
        }
        ZVec cand = crt;
        mpz_class cont(0);
        for (const auto& c : cand)
            mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (cont == 0) continue;
        if (sgn(cand.back()) < 0) cont = -cont;
        if (cont != 1)
            for (auto& c : cand)
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
        if (z_divides(a, cand) && z_divides(b, cand)) {
            *g = std::move(cand);
            return true;
        }
    }
    return false;
}

/* Dense mod-p image read straight off the sparse terms (no conversion
 * cost): 0 on success, 1 when the prime divides a coefficient
 * denominator, -1 when a coefficient is not rational. */
static int poly_image(const DeltaPoly& p, unsigned long prime,
                      std::vector<unsigned long>* out) {
    out->assign(p.deg() + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_rational()) return -1;
        mpq_class v = c.rational_value();
        unsigned long dd = mpz_fdiv_ui(v.get_den_mpz_t(), prime);
        if (dd == 0) return 1;
        unsigned long nn = mpz_fdiv_ui(v.get_num_mpz_t(), prime);
        (*out)[e[0]] = mul_mod(nn, inv_mod(dd, prime), prime);
    }
    return 0;
}

int coprime_filter(const DeltaPoly& den, const DeltaPoly& num) {
    if (den.ctx()->delay_count() != 1) return -1;
    for (int attempt = 0; attempt < 3; ++attempt) {
        unsigned long p = nth_modular_prime(attempt);
        std::vector<unsigned long> id, in_;
        int rd = poly_image(den, p, &id);
        if (rd == -1) return -1;
        int rn = poly_image(num, p, &in_);
        if (rn == -1) return -1;
        if (rd == 1 || rn == 1) continue;
        if (id.empty() || in_.empty() || id.back() == 0 || in_.back() == 0)
            continue;  // degree dropped: this prime certifies nothing
        auto g = gcd_mod_p(id, in_, p);
        return g.size() == 1 ? 1 : 0;
    }
    return 0;
}

} // namespace detail

using namespace detail;

namespace {

/* gcd/lclm with cofactors for the dense rational case; false when the
 * modular gcd gave up. */
bool rational_gcd_lclm(const Ctx& ctx, const QVec& qa, const QVec& qb,
                       GcdLclm* out) {
    ZVec g;
    if (!int_poly_gcd(primitive_int(qa), primitive_int(qb), &g)) return false;
    QVec gq = to_qvec(g);
    lowest_one(&gq);
    QVec m = q_mul(qa, q_divide_exact(qb, gq));
    lowest_one(&m);
    out->g = from_qvec(ctx, gq);
    out->m = from_qvec(ctx, m);
    out->u = from_qvec(ctx, q_divide_exact(m, qa));
    out->v = from_qvec(ctx, q_divide_exact(m, qb));
    return true;
}

} // namespace

DeltaPoly DeltaPoly::one(const Ctx& ctx) {
    return from_field(FieldElem::one(ctx));
}

DeltaPoly DeltaPoly::from_field(const FieldElem& c) {
    DeltaPoly p(c.ctx());
    if (!c.is_zero()) p.terms_.emplace(ExpVec(p.slots(), 0), c);
    return p;
}

DeltaPoly DeltaPoly::from_rational(const Ctx& ctx, const mpq_class& c) {
    return from_field(FieldElem::from_rational(ctx, c));
}

DeltaPoly DeltaPoly::delta(const Ctx& ctx, int delay_index) {
    if (delay_index < 0 || delay_index >= ctx->delay_count())
        throw InternalError("delay operator index out of range");
    ExpVec e(ctx->delay_count(), 0);
    e[delay_index] = 1;
    return monomial(FieldElem::one(ctx), e);
}

DeltaPoly DeltaPoly::monomial(const FieldElem& c, const ExpVec& e) {
    DeltaPoly p(c.ctx());
    if (static_cast<int>(e.size()) != p.slots())
        throw InternalError("delta monomial arity mismatch");
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool DeltaPoly::is_one() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0 &&
           terms_.begin()->second.is_one();
}

bool DeltaPoly::is_unit() const {
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

int DeltaPoly::deg() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

FieldElem DeltaPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem::zero(ctx_) : it->second;
}

FieldElem DeltaPoly::coeff1(int k) const {
    if (slots() == 0) {
        if (k != 0) throw InternalError("delta power without declared delays");
        return coeff(ExpVec{});
    }
    if (slots() != 1)
        throw InternalError("single-delay coefficient access on multivariate polynomial");
    return coeff(ExpVec{k});
}

const ExpVec& DeltaPoly::leading_monomial() const {
    if (terms_.empty()) throw InternalError("leading term of zero delta polynomial");
    return terms_.rbegin()->first;
}

const FieldElem& DeltaPoly::leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading term of zero delta polynomial");
    return terms_.rbegin()->second;
}

const ExpVec& DeltaPoly::lowest_monomial() const {
    if (terms_.empty()) throw InternalError("lowest term of zero delta polynomial");
    return terms_.begin()->first;
}

const FieldElem& DeltaPoly::lowest_coeff() const {
    if (terms_.empty()) throw InternalError("lowest term of zero delta polynomial");
    return terms_.begin()->second;
}

FieldElem DeltaPoly::to_field() const {
    if (is_zero()) return FieldElem::zero(ctx_);
    if (deg() != 0)
        throw InternalError("conversion of nonconstant delta polynomial to scalar");
    return terms_.begin()->second;
}

void DeltaPoly::add_term(const ExpVec& e, const FieldElem& c) {
    if (static_cast<int>(e.size()) != slots())
        throw InternalError("delta term arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
    } else {
        FieldElem s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void DeltaPoly::check_ctx(const DeltaPoly& o) const {
    check_same_ctx(ctx_, o.ctx_);
}

DeltaPoly DeltaPoly::operator-() const {
    DeltaPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& o) const {
    check_ctx(o);
    if (slots() == 1 && terms_.size() + o.terms_.size() > 8) {
        QVec qa, qb;
        if (dense_rational(*this, &qa) && dense_rational(o, &qb)) {
            if (qb.size() > qa.size()) qa.resize(qb.size());
            for (std::size_t k = 0; k < qb.size(); ++k) qa[k] += qb[k];
            return from_qvec(ctx_, qa);
        }
    }
    DeltaPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& o) const {
    check_ctx(o);
    if (slots() == 1 && terms_.size() + o.terms_.size() > 8) {
        QVec qa, qb;
        if (dense_rational(*this, &qa) && dense_rational(o, &qb)) {
            if (qb.size() > qa.size()) qa.resize(qb.size());
            for (std::size_t k = 0; k < qb.size(); ++k) qa[k] -= qb[k];
            return from_qvec(ctx_, qa);
        }
    }
    DeltaPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

DeltaPoly DeltaPoly::operator*(const DeltaPoly& o) const {
    check_ctx(o);
    if (slots() == 1 && terms_.size() * o.terms_.size() > 4) {
        QVec qa, qb;
        if (dense_rational(*this, &qa) && dense_rational(o, &qb) &&
            !qa.empty() && !qb.empty() && qv_deg(qa) >= 0 && qv_deg(qb) >= 0)
            return from_qvec(ctx_, q_mul(qa, qb));
    }
    DeltaPoly r(ctx_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(slots());
            for (int i = 0; i < slots(); ++i) e[i] = ea[i] + eb[i];
            // delta^ea * cb = shift(cb) * delta^ea
            FieldElem c = skew() ? ca * cb.shift(0, ea[0]) : ca * cb;
            r.add_term(e, c);
        }
    }
    return r;
}

DeltaPoly DeltaPoly::scale_left(const FieldElem& c) const {
    check_same_ctx(ctx_, c.ctx());
    DeltaPoly r(ctx_);
    if (c.is_zero()) return r;
    if (c.is_rational() && terms_.size() > 2) {
        QVec q;
        if (dense_rational(*this, &q)) {
            mpq_class v = c.rational_value();
            for (auto& x : q) x *= v;
            return from_qvec(ctx_, q);
        }
    }
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

DeltaPoly DeltaPoly::scale_right(const FieldElem& c) const {
    check_same_ctx(ctx_, c.ctx());
    DeltaPoly r(ctx_);
    if (c.is_zero()) return r;
    if (c.is_rational() && terms_.size() > 2) {
        // sigma fixes rational constants, so left and right scaling agree
        QVec q;
        if (dense_rational(*this, &q)) {
            mpq_class v = c.rational_value();
            for (auto& x : q) x *= v;
            return from_qvec(ctx_, q);
        }
    }
    for (const auto& [e, k] : terms_)
        r.terms_.emplace(e, k * (skew() ? c.shift(0, e[0]) : c));
    return r;
}

DeltaPoly DeltaPoly::pow(int n) const {
    if (n < 0) throw InternalError("negative delta polynomial power");
    DeltaPoly r = one(ctx_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool DeltaPoly::operator==(const DeltaPoly& o) const {
    check_ctx(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

DeltaPoly DeltaPoly::derive() const {
    DeltaPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.derive());
    return r;
}

DeltaPoly DeltaPoly::shift_coeffs(int delay_index, int k) const {
    if (!skew() || k == 0) return *this;
    DeltaPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.shift(delay_index, k));
    return r;
}

DeltaPoly DeltaPoly::unit_normalized() const {
    if (is_zero()) return *this;
    const FieldElem& low = lowest_coeff();
    if (low.is_one()) return *this;
    return scale_left(low.inverse());
}

DeltaPoly DeltaPoly::right_unit_normalized() const {
    if (is_zero()) return *this;
    const FieldElem& low = lowest_coeff();
    if (low.is_one()) return *this;
    FieldElem u = low.inverse();
    // this * u scales the lowest term by sigma^e0(u); undo the shift so
    // the lowest coefficient lands exactly on 1.
    if (skew()) u = u.shift(0, -lowest_monomial()[0]);
    return scale_right(u);
}


void DeltaPoly::divide_right(const DeltaPoly& a, const DeltaPoly& b,
                             DeltaPoly* q, DeltaPoly* r) {
    a.check_ctx(b);
    if (b.is_zero()) throw DivisionByZeroError("delta division by zero");
    if (a.slots() > 1)
        throw ModeError("euclidean delta division needs a single delay");
    if (a.slots() == 1 && !a.is_zero()) {
        QVec qa, qb;
        if (dense_rational(a, &qa) && dense_rational(b, &qb)) {
            QVec qq, qr;
            q_divmod(qa, qb, &qq, &qr);
            if (q) *q = from_qvec(a.ctx_, qq);
            if (r) *r = from_qvec(a.ctx_, qr);
            return;
        }
    }
    bool sk = a.skew();
    int db = b.deg();
    FieldElem lb = b.coeff1(db);
    DeltaPoly quot = zero(a.ctx_);
    DeltaPoly rem = a;
    while (!rem.is_zero() && rem.deg() >= db) {
        int dr = rem.deg();
        // (c * delta^(dr-db)) * b has leading coefficient c * sigma^(dr-db)(lb)
        FieldElem c = rem.coeff1(dr) / shifted(lb, dr - db, sk);
        DeltaPoly qt = monomial(c, ExpVec(a.slots(), dr - db));
        quot = quot + qt;
        rem = rem - qt * b;
    }
    if (q) *q = std::move(quot);
    if (r) *r = std::move(rem);
}

void DeltaPoly::divide_left(const DeltaPoly& a, const DeltaPoly& b,
                            DeltaPoly* q, DeltaPoly* r) {
    a.check_ctx(b);
    if (b.is_zero()) throw DivisionByZeroError("delta division by zero");
    if (a.slots() > 1)
        throw ModeError("euclidean delta division needs a single delay");
    if (a.slots() == 1 && !a.is_zero()) {
        QVec qa, qb;
        if (dense_rational(a, &qa) && dense_rational(b, &qb)) {
            QVec qq, qr;
            q_divmod(qa, qb, &qq, &qr);
            if (q) *q = from_qvec(a.ctx_, qq);
            if (r) *r = from_qvec(a.ctx_, qr);
            return;
        }
    }
    bool sk = a.skew();
    int db = b.deg();
    FieldElem lb = b.coeff1(db);
    DeltaPoly quot = zero(a.ctx_);
    DeltaPoly rem = a;
    while (!rem.is_zero() && rem.deg() >= db) {
        int dr = rem.deg();
        // b * (c * delta^(dr-db)) has leading coefficient lb * sigma^db(c)
        FieldElem c = shifted(rem.coeff1(dr) / lb, -db, sk);
        DeltaPoly qt = monomial(c, ExpVec(a.slots(), dr - db));
        quot = quot + qt;
        rem = rem - b * qt;
    }
    if (q) *q = std::move(quot);
    if (r) *r = std::move(rem);
}

namespace {

/* Accumulates the full content of a coefficient list: the polynomial gcd
 * of the numerators scaled by their common rational content (MPoly::gcd
 * alone returns primitive results, which would let pure integer growth
 * through), over the lcm of the denominators. */
struct ContentAcc {
    MPoly num;
    MPoly den;
    mpz_class cnum = 0, cden = 1;

    explicit ContentAcc(int gens) : num(gens), den(MPoly::constant(gens, 1)) {}

    void absorb(const FieldElem& c) {
        num = MPoly::gcd(num, c.num());
        den = MPoly::lcm(den, c.den());
        mpq_class sc = c.num().signed_content();
        mpz_class n = sc.get_num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(cnum.get_mpz_t(), cnum.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(),
                sc.get_den().get_mpz_t());
    }

    FieldElem unit(const Ctx& ctx) const {
        if (num.is_zero()) return FieldElem::one(ctx);
        MPoly full = num.mul_scalar(mpq_class(cnum, cden));
        if (full.is_one() && den.is_one()) return FieldElem::one(ctx);
        return FieldElem(ctx, den, full);
    }
};

} // namespace

FieldElem DeltaPoly::content_unit_left() const {
    ContentAcc acc(ctx_->ground_gens());
    for (const auto& [e, c] : terms_) acc.absorb(c);
    return acc.unit(ctx_);
}

FieldElem DeltaPoly::content_unit_right() const {
    ContentAcc acc(ctx_->ground_gens());
    for (const auto& [e, c] : terms_) {
        FieldElem cc = (skew() && e[0] != 0) ? c.shift(0, -e[0]) : c;
        acc.absorb(cc);
    }
    return acc.unit(ctx_);
}

MPoly DeltaPoly::coeff_den_lcm() const {
    MPoly d = MPoly::constant(ctx_->ground_gens(), 1);
    for (const auto& [e, c] : terms_) d = MPoly::lcm(d, c.den());
    return d;
}

MPoly DeltaPoly::lift_combined(const MPoly& common_den) const {
    int s = slots();
    int g = ctx_->ground_gens();
    MPoly out(s + g);
    for (const auto& [e, c] : terms_) {
        MPoly lifted_num = c.num() * common_den.divide_exact(c.den());
        for (const auto& [ge, gc] : lifted_num.terms()) {
            ExpVec comb(s + g, 0);
            for (int i = 0; i < s; ++i) comb[i] = e[i];
            for (int i = 0; i < g; ++i) comb[s + i] = ge[i];
            out.add_term(comb, gc);
        }
    }
    return out;
}

DeltaPoly DeltaPoly::from_combined(const Ctx& ctx, const MPoly& p) {
    int s = ctx->delay_count();
    int g = ctx->ground_gens();
    MPoly one_den = MPoly::constant(g, 1);
    DeltaPoly out(ctx);
    for (const auto& [e, c] : p.terms()) {
        ExpVec de(s), ge(g);
        for (int i = 0; i < s; ++i) de[i] = e[i];
        for (int i = 0; i < g; ++i) ge[i] = e[s + i];
        out.add_term(de, FieldElem(ctx, MPoly::monomial(g, ge, c), one_den));
    }
    return out;
}

GcdLclm DeltaPoly::gcd_lclm(const DeltaPoly& a, const DeltaPoly& b) {
    a.check_ctx(b);
    if (a.is_zero() || b.is_zero())
        throw DivisionByZeroError("gcd/lclm of a zero delta polynomial");
    const Ctx& ctx = a.ctx_;

    if (ctx->delay_count() == 1) {
        QVec qa, qb;
        if (dense_rational(a, &qa) && dense_rational(b, &qb)) {
            GcdLclm out{zero(ctx), zero(ctx), zero(ctx), zero(ctx)};
            if (rational_gcd_lclm(ctx, qa, qb, &out)) return out;
        }
    }

    if (!a.skew()) {
        // Commutative: ordinary gcd/lcm in the combined polynomial ring.
        MPoly da = a.coeff_den_lcm(), db = b.coeff_den_lcm();
        MPoly A = a.lift_combined(da), B = b.lift_combined(db);
        MPoly G = MPoly::gcd(A, B);
        MPoly M = MPoly::lcm(A, B);
        GcdLclm out{from_combined(ctx, G).unit_normalized(),
                    zero(ctx), zero(ctx), zero(ctx)};
        DeltaPoly m0 = from_combined(ctx, M);
        FieldElem lam = m0.lowest_coeff().inverse();
        MPoly gone = MPoly::constant(ctx->ground_gens(), 1);
        FieldElem fa(ctx, da, gone), fb(ctx, db, gone);
        out.m = m0.scale_left(lam);
        out.u = from_combined(ctx, M.divide_exact(A)).scale_left(lam * fa);
        out.v = from_combined(ctx, M.divide_exact(B)).scale_left(lam * fb);
        return out;
    }

    // Skew: extended Euclidean scheme with right pseudo-division, tracking
    // rows (r, u, v) with r = u * a + v * b.  The last nonzero remainder is
    // the greatest common right divisor; the first vanishing combination
    // gives the least common left multiple.  Instead of dividing over the
    // ground field, each cancellation left-multiplies the working row by
    // the shifted leading coefficient of the divisor, so coefficients stay
    // polynomial; stripping their content after every step keeps them
    // small.  Left scaling preserves the r = u*a + v*b invariant.
    struct Row {
        DeltaPoly r, u, v;
    };
    auto strip = [](Row& w) {
        FieldElem lam = w.r.content_unit_left();
        if (!lam.is_one()) {
            w.r = w.r.scale_left(lam);
            w.u = w.u.scale_left(lam);
            w.v = w.v.scale_left(lam);
        }
    };
    FieldElem la = a.content_unit_left(), lb = b.content_unit_left();
    Row r0{a.scale_left(la), from_field(la), zero(ctx)};
    Row r1{b.scale_left(lb), zero(ctx), from_field(lb)};
    while (!r1.r.is_zero()) {
        Row w = r0;
        int db = r1.r.deg();
        FieldElem blead = r1.r.coeff1(db);
        while (!w.r.is_zero() && w.r.deg() >= db) {
            int dr = w.r.deg();
            // sigma^(dr-db)(blead)*lr matches the lead of (lr d^(dr-db))*r1
            FieldElem lam = shifted(blead, dr - db, true);
            DeltaPoly qt = monomial(w.r.coeff1(dr), ExpVec(1, dr - db));
            w.r = w.r.scale_left(lam) - qt * r1.r;
            w.u = w.u.scale_left(lam) - qt * r1.u;
            w.v = w.v.scale_left(lam) - qt * r1.v;
            strip(w);
        }
        r0 = std::move(r1);
        r1 = std::move(w);
    }
    GcdLclm out{r0.r.unit_normalized(), zero(ctx), zero(ctx), zero(ctx)};
    DeltaPoly m0 = r1.u * a;  // equals -(r1.v * b)
    FieldElem lam = m0.lowest_coeff().inverse();
    out.m = m0.scale_left(lam);
    out.u = r1.u.scale_left(lam);
    out.v = (-r1.v).scale_left(lam);
    return out;
}

DeltaPoly DeltaPoly::gcld(const DeltaPoly& a, const DeltaPoly& b) {
    a.check_ctx(b);
    if (a.is_zero()) return b.right_unit_normalized();
    if (b.is_zero()) return a.right_unit_normalized();
    if (a.ctx_->delay_count() == 1) {
        QVec qa, qb;
        if (dense_rational(a, &qa) && dense_rational(b, &qb)) {
            ZVec g;
            if (int_poly_gcd(primitive_int(qa), primitive_int(qb), &g)) {
                QVec gq = to_qvec(g);
                lowest_one(&gq);
                return from_qvec(a.ctx_, gq);
            }
        }
    }
    if (!a.skew()) return gcd_lclm(a, b).g;
    // Left Euclid with pseudo-division: right-scaling the working
    // remainder by the pulled-back leading coefficient of the divisor
    // keeps every coefficient polynomial, and right units are the side
    // that preserves the common-left-divisor class.  Content is stripped
    // after every cancellation so coefficients stay small.
    DeltaPoly r0 = a.scale_right(a.content_unit_right());
    DeltaPoly r1 = b.scale_right(b.content_unit_right());
    while (!r1.is_zero()) {
        DeltaPoly rem = r0;
        int db = r1.deg();
        FieldElem blead = r1.coeff1(db);
        while (!rem.is_zero() && rem.deg() >= db) {
            int dr = rem.deg();
            // lr*sigma^dr(sigma^(-dr)(blead)) matches the lead of
            // r1 * (sigma^(-db)(lr) d^(dr-db))
            DeltaPoly qt = monomial(shifted(rem.coeff1(dr), -db, true),
                                    ExpVec(1, dr - db));
            rem = rem.scale_right(shifted(blead, -dr, true)) - r1 * qt;
            rem = rem.scale_right(rem.content_unit_right());
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return r0.right_unit_normalized();
}

} // namespace piflat
