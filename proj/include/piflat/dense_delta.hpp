#pragma once

#include <vector>

#include "piflat/delta_poly.hpp"

namespace piflat::detail {

/* Dense helpers for single-delay polynomials with plain rational
 * coefficients.  In that regime the ring is ordinary Q[d] whatever the
 * mode, and the map-of-field-elements representation is far too heavy for
 * the inner loops of matrix reductions, so the fraction and gcd layers
 * drop down to these vectors (index = delta exponent) and convert back
 * once per operation. */

using QVec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

/* Highest index with a nonzero entry, -1 for the zero vector. */
int qv_deg(const QVec& v);

/* View a single-delay polynomial as a dense rational vector; false when a
 * coefficient involves a ground generator. */
bool dense_rational(const DeltaPoly& p, QVec* out);

/* Clear denominators and strip integer content; leading coefficient made
 * positive.  Input must be nonzero. */
ZVec primitive_int(const QVec& q);

/* Primitive gcd over Z by small-prime images with CRT lifting; returns
 * false if the prime budget runs out.  Inputs are primitive with positive
 * leads. */
bool int_poly_gcd(const ZVec& a, const ZVec& b, ZVec* g);

QVec q_mul(const QVec& a, const QVec& b);
void q_divmod(const QVec& a, const QVec& b, QVec* q, QVec* r);
/* Exact quotient over Q; throws InternalError on a nonzero remainder. */
QVec q_divide_exact(const QVec& a, const QVec& b);

/* Scale so the lowest nonzero entry becomes 1. */
void lowest_one(QVec* v);

QVec to_qvec(const ZVec& z);
DeltaPoly from_qvec(const Ctx& ctx, const QVec& v);

/* Certified coprimality probe for a reduced-fraction pair: 1 when den and
 * num are provably coprime (their images modulo a prime stay full degree
 * and have a constant gcd), 0 when nothing can be certified cheaply, -1
 * when the operands are not dense rational at all. */
int coprime_filter(const DeltaPoly& den, const DeltaPoly& num);

} // namespace piflat::detail
