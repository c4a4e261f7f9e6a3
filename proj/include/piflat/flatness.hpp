#pragma once

#include <string>
#include <variant>

#include "piflat/delta_poly.hpp"
#include "piflat/smith.hpp"

namespace piflat {

/* The system A(delta, D) x = B(delta, D) u with polynomial operator
 * entries, n states and m inputs (m <= n; m = 0 means no inputs). */
struct LinearDelaySystem {
    Ctx ctx;
    int n;
    int m;
    OreMatrix A; // n x n
    OreMatrix B; // n x m

    static LinearDelaySystem make(OreMatrix a, OreMatrix b);
};

/* Evidence that the system module has torsion: a Smith diagonal entry of
 * D-degree >= 1 (stored in `entry`) or a rank defect, found while testing
 * hyper-regularity of B or of the implicit operator F. */
struct TorsionWitness {
    enum class Source { B, F };
    Source source;
    std::optional<OrePoly> entry;
    int rank_defect;
};

struct NotHyperRegularError : Error {
    NotHyperRegularError(const std::string& what, TorsionWitness w)
        : Error(what), witness(std::move(w)) {}
    TorsionWitness witness;
};

/* x-only form of the dynamics: F x = 0 with F = (0, I_{n-m}) M A, where
 * M B N = (I_m ; 0).  u_from_x = N (I_m, 0) M A recovers the input. */
struct ImplicitRep {
    OreMatrix F; // (n-m) x n
    Unimodular M; // n x n
    Unimodular N; // m x m
    OreMatrix u_from_x; // m x n
};

/* The full certificate: y = P x is a pi-flat output with x = Q y,
 * u = R y, together with the construction intermediates and the clearing
 * polynomials that assemble pi. */
struct FlatCertificate {
    DeltaPoly pi;
    OreMatrix P; // m x n
    OreMatrix Q; // n x m
    OreMatrix R; // m x m
    OreMatrix M; // n x n, from B's reduction
    OreMatrix N; // m x m
    OreMatrix F; // (n-m) x n
    OreMatrix Qtilde; // n x n, from F's reduction
    DeltaPoly pi_bar;
    DeltaPoly pi_P;
    DeltaPoly pi_R;
};

struct VerificationReport {
    bool pq_identity = false;    // P*Q = I_m
    bool fq_zero = false;        // F*Q = 0
    bool aq_equals_br = false;   // A*Q = B*R
    bool pi_clears_p = false;    // pi*P polynomial
    bool pi_clears_q = false;    // pi*Q polynomial
    bool pi_clears_r = false;    // pi*R polynomial
    std::vector<std::string> details;

    bool pass() const {
        return pq_identity && fq_zero && aq_equals_br && pi_clears_p &&
               pi_clears_q && pi_clears_r;
    }
};

/* Throws NotHyperRegularError when B is not hyper-regular. */
ImplicitRep implicit_representation(const LinearDelaySystem& sys);

/* Smallest monic delta-polynomial whose left product clears every entry
 * denominator of the matrix. */
DeltaPoly clearing_polynomial(const OreMatrix& m);

/* Decide pi-flatness and construct the certificate; a TorsionWitness
 * result means the system is not pi-flat for any pi. */
std::variant<FlatCertificate, TorsionWitness>
compute_pi_flat(const LinearDelaySystem& sys);

/* Independent re-check of the certificate identities against the system. */
VerificationReport verify_certificate(const LinearDelaySystem& sys,
                                      const FlatCertificate& cert);

/* First hyper-regularity failure, testing B then F; empty when both pass. */
std::optional<TorsionWitness> torsion_diagnostics(const LinearDelaySystem& sys);

} // namespace piflat
