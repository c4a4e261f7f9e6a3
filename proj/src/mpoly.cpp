#include "piflat/mpoly.hpp"

#include <algorithm>

namespace piflat {

int total_degree(const ExpVec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    // Same total degree: lexicographic, index 0 most significant.
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

namespace {
/* All coefficient ingress goes through here: GMP rationals constructed as
 * mpq_class(a, b) are not reduced automatically. */
mpq_class canon(mpq_class c) {
    c.canonicalize();
    return c;
}
} // namespace

MPoly MPoly::constant(int nvars, const mpq_class& c) {
    MPoly p(nvars);
    mpq_class cc = canon(c);
    if (cc != 0) p.terms_[ExpVec(nvars, 0)] = cc;
    return p;
}

MPoly MPoly::gen(int nvars, int var) {
    ExpVec e(nvars, 0);
    e.at(var) = 1;
    return monomial(nvars, e, 1);
}

MPoly MPoly::monomial(int nvars, const ExpVec& e, const mpq_class& c) {
    MPoly p(nvars);
    if (static_cast<int>(e.size()) != nvars)
        throw InternalError("monomial exponent arity mismatch");
    mpq_class cc = canon(c);
    if (cc != 0) p.terms_[e] = cc;
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

bool MPoly::is_one() const {
    return is_constant() && constant_value() == 1;
}

mpq_class MPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw InternalError("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

int MPoly::total_deg() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MPoly::depends_on(int var) const {
    for (const auto& [e, c] : terms_)
        if (e.at(var) > 0) return true;
    return false;
}

const ExpVec& MPoly::leading_monomial() const {
    if (terms_.empty()) throw InternalError("leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const mpq_class& MPoly::leading_coeff() const {
    if (terms_.empty()) throw InternalError("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

void MPoly::add_term(const ExpVec& e, const mpq_class& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw InternalError("add_term exponent arity mismatch");
    mpq_class cc = canon(c);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (cc != 0) terms_[e] = cc;
    } else {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

void MPoly::check_vars(const MPoly& o) const {
    if (nvars_ != o.nvars_)
        throw InternalError("polynomial arity mismatch");
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_vars(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_vars(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_vars(o);
    MPoly r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::mul_scalar(const mpq_class& c) const {
    MPoly r(nvars_);
    mpq_class cc = canon(c);
    if (cc == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * cc;
    return r;
}

MPoly MPoly::pow(int n) const {
    if (n < 0) throw InternalError("negative polynomial power");
    MPoly r = constant(nvars_, 1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool MPoly::try_divide(const MPoly& b, MPoly* q) const {
    check_vars(b);
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    MPoly r = *this;
    MPoly quot(nvars_);
    const ExpVec eb = b.leading_monomial();
    const mpq_class cb = b.leading_coeff();
    ExpVec eq(nvars_), e(nvars_);
    while (!r.is_zero()) {
        const ExpVec& er = r.leading_monomial();
        for (int i = 0; i < nvars_; ++i) {
            eq[i] = er[i] - eb[i];
            if (eq[i] < 0) return false;
        }
        mpq_class cq = r.leading_coeff() / cb;
        quot.add_term(eq, cq);
        // r -= (cq x^eq) * b, updating the remainder map in place.
        for (const auto& [e2, c2] : b.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = eq[i] + e2[i];
            r.add_term(e, -(cq * c2));
        }
    }
    if (q) *q = std::move(quot);
    return true;
}

MPoly MPoly::divide_exact(const MPoly& b) const {
    MPoly q;
    if (!try_divide(b, &q)) throw InternalError("inexact polynomial division");
    return q;
}

MPoly MPoly::coeff_wrt(int var, int e) const {
    MPoly r(nvars_);
    for (const auto& [exp, c] : terms_) {
        if (exp[var] == e) {
            ExpVec e2 = exp;
            e2[var] = 0;
            r.add_term(e2, c);
        }
    }
    return r;
}

namespace {

MPoly coeff_of(const MPoly& p, int v, int e) { return p.coeff_wrt(v, e); }

/* Content of p viewed as a univariate polynomial in x_v: the gcd of its
 * coefficient polynomials. */
MPoly content_wrt(const MPoly& p, int v) {
    MPoly c(p.nvars());
    for (int e = 0; e <= p.degree(v); ++e) {
        MPoly ce = coeff_of(p, v, e);
        if (!ce.is_zero()) c = MPoly::gcd(c, ce);
    }
    return c;
}

/* Pseudo-remainder of a by b with respect to x_v.  Each elimination step
 * rescales the working remainder to integer-primitive form; the result is
 * only ever used up to a rational factor, and the damping keeps
 * coefficient bit-growth linear instead of exponential. */
MPoly prem(const MPoly& a, const MPoly& b, int v) {
    int db = b.degree(v);
    MPoly lb = coeff_of(b, v, db);
    MPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        MPoly lr = coeff_of(r, v, dr);
        ExpVec sh(r.nvars(), 0);
        sh[v] = dr - db;
        r = lb * r - lr * MPoly::monomial(r.nvars(), sh, 1) * b;
        r = r.primitive_normalized();
    }
    return r;
}

int smallest_variable(const MPoly& a, const MPoly& b) {
    for (int v = 0; v < a.nvars(); ++v)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return -1;
}

/* Fallback gcd: primitive polynomial remainder sequence, recursing on
 * contents.  Exact on all inputs but slow when coefficients grow. */
MPoly gcd_prs(const MPoly& a, const MPoly& b) {
    int v = smallest_variable(a, b);
    if (v < 0) return MPoly::constant(a.nvars(), 1);
    MPoly ca = content_wrt(a, v);
    MPoly cb = content_wrt(b, v);
    MPoly pa = a.divide_exact(ca).primitive_normalized();
    MPoly pb = b.divide_exact(cb).primitive_normalized();
    MPoly c = MPoly::gcd(ca, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = prem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
        } else {
            pb = r.divide_exact(content_wrt(r, v)).primitive_normalized();
        }
    }
    return (c * pa.divide_exact(content_wrt(pa, v))).primitive_normalized();
}

/* Largest absolute coefficient numerator (inputs are integer polynomials). */
mpz_class height(const MPoly& p) {
    mpz_class h = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_class n = c.get_num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        if (n > h) h = n;
    }
    return h;
}

/* Coefficient-wise balanced residue modulo xi, in (-xi/2, xi/2]. */
MPoly balanced_mod(const MPoly& p, const mpz_class& xi) {
    MPoly r(p.nvars());
    mpz_class half = xi / 2;
    for (const auto& [e, c] : p.terms()) {
        mpz_class m;
        mpz_fdiv_r(m.get_mpz_t(), c.get_num().get_mpz_t(), xi.get_mpz_t());
        if (m > half) m -= xi;
        if (m != 0) r.add_term(e, mpq_class(m));
    }
    return r;
}

/* Bound on the height of any integer divisor of the primitive integer
 * polynomial p (Gelfond-style: generous, cheap to compute). */
mpz_class divisor_height_bound(const MPoly& p) {
    int nu = 0;
    for (int v = 0; v < p.nvars(); ++v) nu += p.degree(v);
    mpz_class b = height(p) + 1;
    b <<= 2 * nu + 2;
    b *= nu + 1;
    return b;
}

/* Heuristic gcd over the integers by evaluation at a large point and
 * balanced-digit reconstruction (the classical scheme: integer contents are
 * split off at every level and combined separately).  The evaluation point
 * exceeds twice the divisor height bound, which makes both outcomes
 * rigorous: a verified nonconstant candidate is the gcd, and a constant
 * residue proves the primitive parts are coprime.  Returns false when no
 * candidate verifies (caller falls back to the remainder-sequence gcd).
 * Operands must have integer coefficients. */
bool gcdheu(const MPoly& a0, const MPoly& b0, MPoly& out) {
    mpq_class ia = a0.signed_content(), ib = b0.signed_content();
    MPoly a = a0.primitive_normalized(), b = b0.primitive_normalized();
    mpz_class cint;
    mpz_gcd(cint.get_mpz_t(), ia.get_num().get_mpz_t(), ib.get_num().get_mpz_t());
    int v = smallest_variable(a, b);
    if (v < 0) {
        out = MPoly::constant(a.nvars(), mpq_class(cint));
        return true;
    }
    mpz_class ba = divisor_height_bound(a), bb = divisor_height_bound(b);
    mpz_class xi = 2 * (ba < bb ? ba : bb) + 3;
    int dbound = std::min(a.degree(v), b.degree(v));
    for (int attempt = 0; attempt < 6; ++attempt) {
        MPoly point = MPoly::constant(a.nvars(), mpq_class(xi));
        MPoly av = a.substitute(v, point);
        MPoly bv = b.substitute(v, point);
        MPoly gamma;
        if (av.is_zero() || bv.is_zero() || !gcdheu(av, bv, gamma)) {
            xi = xi * 73794 / 27011;
            continue;
        }
        // Rebuild a candidate in x_v from the balanced base-xi digits.
        MPoly g(a.nvars());
        bool ok = true;
        for (int i = 0; !gamma.is_zero(); ++i) {
            if (i > dbound) { ok = false; break; }
            MPoly digit = balanced_mod(gamma, xi);
            for (const auto& [e, c] : digit.terms()) {
                ExpVec e2 = e;
                e2[v] = i;
                g.add_term(e2, c);
            }
            gamma = (gamma - digit).mul_scalar(mpq_class(mpz_class(1), xi));
        }
        if (ok && !g.is_zero()) {
            if (g.is_constant()) {
                // Primitive parts are coprime (the true gcd evaluated at xi
                // would exceed the residue we reconstructed from).
                out = MPoly::constant(a.nvars(), mpq_class(cint));
                return true;
            }
            g = g.primitive_normalized();
            if (a.try_divide(g, nullptr) && b.try_divide(g, nullptr)) {
                out = g.mul_scalar(mpq_class(cint));
                return true;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return false;
}

/* Exponent-wise minimum over all terms: the largest monomial dividing p. */
ExpVec monomial_content(const MPoly& p) {
    ExpVec m;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

MPoly strip_monomial(const MPoly& p, const ExpVec& m) {
    MPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec e2 = e;
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= m[i];
        r.add_term(e2, c);
    }
    return r;
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();
    a.check_vars(b);
    if (a.is_constant() || b.is_constant()) return constant(a.nvars(), 1);
    // Split off the common monomial factor first; the cofactors then have a
    // zero minimum exponent in every variable.
    ExpVec ma = monomial_content(a), mb = monomial_content(b);
    ExpVec shared(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) shared[i] = std::min(ma[i], mb[i]);
    MPoly sa = strip_monomial(a, ma).primitive_normalized();
    MPoly sb = strip_monomial(b, mb).primitive_normalized();
    MPoly core;
    if (sa == sb) {
        core = sa;
    } else if (sa.is_constant() || sb.is_constant()) {
        core = constant(a.nvars(), 1);
    } else if (!gcdheu(sa, sb, core)) {
        core = gcd_prs(sa, sb);
    }
    MPoly g = core.primitive_normalized() * monomial(a.nvars(), shared, 1);
    return g;
}

MPoly MPoly::lcm(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly(a.nvars());
    MPoly g = gcd(a, b);
    return (a * b.divide_exact(g)).primitive_normalized();
}

mpq_class MPoly::signed_content() const {
    if (terms_.empty()) return 0;
    mpz_class gnum = 0, glden = 1;
    for (const auto& [e, c] : terms_) {
        mpz_class n = c.get_num(), d = c.get_den();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(glden.get_mpz_t(), glden.get_mpz_t(), d.get_mpz_t());
    }
    mpq_class c(gnum, glden);
    c.canonicalize();
    if (sgn(leading_coeff()) < 0) c = -c;
    return c;
}

MPoly MPoly::primitive_normalized() const {
    if (terms_.empty()) return *this;
    mpq_class c = signed_content();
    MPoly r(nvars_);
    for (const auto& [e, k] : terms_) r.terms_[e] = k / c;
    return r;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    check_vars(value);
    MPoly result(nvars_);
    MPoly power = constant(nvars_, 1);
    int cur = 0;
    int maxd = degree(var);
    for (int e = 0; e <= maxd; ++e) {
        MPoly ce = coeff_of(*this, var, e);
        if (!ce.is_zero()) {
            while (cur < e) {
                power = power * value;
                ++cur;
            }
            result = result + ce * power;
        }
    }
    return result;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * e[var]);
    }
    return r;
}

} // namespace piflat
