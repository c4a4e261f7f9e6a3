#include "piflat/flatness.hpp"

namespace piflat {

namespace {

TorsionWitness witness_from(TorsionWitness::Source src,
                            const HyperRegularity& h) {
    return TorsionWitness{src, h.witness, h.rank_defect};
}

/* (I_m, 0_{m,n-m}) and (0_{n-m,m} ; I_m) selector blocks. */
OreMatrix left_selector(const Ctx& ctx, int m, int n) {
    return OreMatrix::identity(ctx, n).block(0, 0, m, n);
}

OreMatrix bottom_selector(const Ctx& ctx, int n, int m) {
    return OreMatrix::identity(ctx, n).block(0, n - m, n, m);
}

} // namespace

LinearDelaySystem LinearDelaySystem::make(OreMatrix a, OreMatrix b) {
    check_same_ctx(a.ctx(), b.ctx());
    if (a.rows() != a.cols()) throw DimensionError("state matrix must be square");
    if (b.rows() != a.rows())
        throw DimensionError("input matrix row count must match the state count");
    if (b.cols() > b.rows())
        throw DimensionError("more inputs than states is not supported");
    if (!a.is_polynomial() || !b.is_polynomial())
        throw ModeError("system matrices must have polynomial operator entries");
    Ctx ctx = a.ctx();
    int n = a.rows(), m = b.cols();
    return LinearDelaySystem{std::move(ctx), n, m, std::move(a), std::move(b)};
}

ImplicitRep implicit_representation(const LinearDelaySystem& sys) {
    HyperRegularity hb = is_hyper_regular(sys.B);
    if (!hb.ok)
        throw NotHyperRegularError("input matrix is not hyper-regular",
                                   witness_from(TorsionWitness::Source::B, hb));
    int n = sys.n, m = sys.m;
    // M B N = (I_m ; 0)
    Unimodular M = hb.form.U;
    Unimodular N = hb.form.V;
    OreMatrix MA = M.matrix() * sys.A;
    OreMatrix F = MA.block(m, 0, n - m, n);
    OreMatrix u_from_x = N.matrix() * MA.block(0, 0, m, n);
    return ImplicitRep{std::move(F), std::move(M), std::move(N),
                       std::move(u_from_x)};
}

DeltaPoly clearing_polynomial(const OreMatrix& m) {
    DeltaPoly pi = DeltaPoly::one(m.ctx());
    for (int i = 0; i < m.rows(); ++i) {
        DeltaPoly row = DeltaPoly::one(m.ctx());
        for (int j = 0; j < m.cols(); ++j)
            row = delta_lclm(row, m.at(i, j).denominator_clearing());
        pi = delta_lclm(pi, row);
    }
    return pi;
}

std::variant<FlatCertificate, TorsionWitness>
compute_pi_flat(const LinearDelaySystem& sys) {
    const Ctx& ctx = sys.ctx;
    int n = sys.n, m = sys.m;

    // Step 0: reduce B and form the implicit operator F.
    HyperRegularity hb = is_hyper_regular(sys.B);
    if (!hb.ok) return witness_from(TorsionWitness::Source::B, hb);
    const Unimodular& M = hb.form.U;
    const Unimodular& N = hb.form.V;
    OreMatrix MA = M.matrix() * sys.A;
    OreMatrix F = MA.block(m, 0, n - m, n);

    // Step 1: F must be hyper-regular; its right reduction factor yields Q.
    HyperRegularity hf = is_hyper_regular(F);
    if (!hf.ok) return witness_from(TorsionWitness::Source::F, hf);
    const OreMatrix& Qtilde = hf.form.V.matrix();
    OreMatrix Q = Qtilde * bottom_selector(ctx, n, m);

    // Step 2: input operator R.
    OreMatrix R = N.matrix() * (MA.block(0, 0, m, n) * Q);

    // Step 3: output operator P from Q's reduction, Ptilde*Q*W = (I_m ; 0).
    HyperRegularity hq = is_hyper_regular(Q);
    if (!hq.ok)
        throw InternalError("constructed state operator lost hyper-regularity");
    OreMatrix P = hq.form.V.matrix() *
                  (left_selector(ctx, m, n) * hq.form.U.matrix());

    // Clearing polynomials and their least common multiple.
    DeltaPoly pi_bar = delta_lclm(
        delta_lclm(clearing_polynomial(M.matrix()),
                   clearing_polynomial(N.matrix())),
        clearing_polynomial(Qtilde));
    DeltaPoly pi_P = clearing_polynomial(P);
    DeltaPoly pi_R = clearing_polynomial(R);
    DeltaPoly pi =
        delta_lclm(delta_lclm(pi_bar, pi_P), pi_R).unit_normalized();

    return FlatCertificate{std::move(pi),    std::move(P),
                           std::move(Q),     std::move(R),
                           M.matrix(),       N.matrix(),
                           std::move(F),     Qtilde,
                           std::move(pi_bar), std::move(pi_P),
                           std::move(pi_R)};
}

VerificationReport verify_certificate(const LinearDelaySystem& sys,
                                      const FlatCertificate& cert) {
    const Ctx& ctx = sys.ctx;
    int n = sys.n, m = sys.m;
    VerificationReport rep;
    if (cert.P.rows() != m || cert.P.cols() != n || cert.Q.rows() != n ||
        cert.Q.cols() != m || cert.R.rows() != m || cert.R.cols() != m)
        throw DimensionError("certificate operator shapes do not match the system");

    rep.pq_identity = (cert.P * cert.Q) == OreMatrix::identity(ctx, m);
    if (!rep.pq_identity) rep.details.push_back("P*Q is not the identity");

    // F is recomputed from the system so the check is independent of the
    // certificate's own intermediates.
    ImplicitRep imp = implicit_representation(sys);
    rep.fq_zero = (imp.F * cert.Q).is_zero();
    if (!rep.fq_zero) rep.details.push_back("F*Q is not zero");

    rep.aq_equals_br = (sys.A * cert.Q) == (sys.B * cert.R);
    if (!rep.aq_equals_br) rep.details.push_back("A*Q differs from B*R");

    OrePoly pi = OrePoly::from_poly(cert.pi);
    rep.pi_clears_p = cert.P.scale_left(pi).is_polynomial();
    if (!rep.pi_clears_p) rep.details.push_back("pi*P has a denominator left");
    rep.pi_clears_q = cert.Q.scale_left(pi).is_polynomial();
    if (!rep.pi_clears_q) rep.details.push_back("pi*Q has a denominator left");
    rep.pi_clears_r = cert.R.scale_left(pi).is_polynomial();
    if (!rep.pi_clears_r) rep.details.push_back("pi*R has a denominator left");
    return rep;
}

std::optional<TorsionWitness> torsion_diagnostics(const LinearDelaySystem& sys) {
    HyperRegularity hb = is_hyper_regular(sys.B);
    if (!hb.ok) return witness_from(TorsionWitness::Source::B, hb);
    int n = sys.n, m = sys.m;
    OreMatrix F = (hb.form.U.matrix() * sys.A).block(m, 0, n - m, n);
    HyperRegularity hf = is_hyper_regular(F);
    if (!hf.ok) return witness_from(TorsionWitness::Source::F, hf);
    return std::nullopt;
}

} // namespace piflat
