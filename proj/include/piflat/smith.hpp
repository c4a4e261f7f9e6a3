#pragma once

#include <optional>

#include "piflat/matrix.hpp"

namespace piflat {

/* Diagonal reduction U*M*V = (Delta | 0) (wide) or (Delta ; 0) (tall):
 * U, V invertible with tracked inverses, diag the nonzero invariant
 * factors d_1..d_s in increasing divisibility order (d_i right-divides
 * d_{i+1}), each entry monic in D so degree-0 entries are exactly 1. */
struct SmithForm {
    enum class Shape { Wide, Tall };

    Unimodular U; // rows x rows
    Unimodular V; // cols x cols
    std::vector<OrePoly> diag;
    Shape shape;
    int rows;
    int cols;

    int rank() const { return static_cast<int>(diag.size()); }
    /* The rows x cols block form: diag padded with zeros. */
    OreMatrix block() const;
};

SmithForm smith_jacobson(const OreMatrix& m);

/* Hyper-regularity: the diagonal of the Smith form is the full-size
 * identity.  On failure the witness is the first diagonal entry of
 * D-degree >= 1, or absent when the failure is a rank defect. */
struct HyperRegularity {
    bool ok;
    int rank_defect;
    std::optional<OrePoly> witness;
    SmithForm form;
};

HyperRegularity is_hyper_regular(const OreMatrix& m);

/* Exact noncommutative product (order-sensitive). */
inline OreMatrix mat_mul(const OreMatrix& a, const OreMatrix& b) {
    return a * b;
}

} // namespace piflat
