#pragma once

#include <vector>

#include "piflat/ore_poly.hpp"

namespace piflat {

/* Dense matrix over the operator ring.  Zero rows or columns are allowed
 * (they arise for input-free systems and for the m = n edge case). */
class OreMatrix {
public:
    OreMatrix(Ctx ctx, int rows, int cols);

    static OreMatrix identity(const Ctx& ctx, int n);

    const Ctx& ctx() const { return ctx_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    OrePoly& at(int i, int j);
    const OrePoly& at(int i, int j) const;

    bool is_zero() const;
    bool is_identity() const;

    OreMatrix operator-() const;
    OreMatrix operator+(const OreMatrix& o) const;
    OreMatrix operator-(const OreMatrix& o) const;
    OreMatrix operator*(const OreMatrix& o) const;

    /* Entrywise p * M (scalar matrix times M) and M * p. */
    OreMatrix scale_left(const OrePoly& p) const;
    OreMatrix scale_right(const OrePoly& p) const;

    bool operator==(const OreMatrix& o) const;
    bool operator!=(const OreMatrix& o) const { return !(*this == o); }

    OreMatrix block(int row0, int col0, int nrows, int ncols) const;
    static OreMatrix hstack(const OreMatrix& a, const OreMatrix& b);
    static OreMatrix vstack(const OreMatrix& a, const OreMatrix& b);

    /* Every entry has denominator 1. */
    bool is_polynomial() const;

private:
    void check_index(int i, int j) const;

    Ctx ctx_;
    int rows_, cols_;
    std::vector<OrePoly> entries_; // row-major
};

/* One invertible row/column operation.  Left actions act on rows
 * (multiplication by an elementary matrix from the left), right actions on
 * columns (from the right).
 *   Permute(i, j): swap rows/columns i and j.
 *   Scale(i, u):   row i <- u*row i  /  column i <- column i * u,
 *                  u a nonzero D-free operator (a unit of the ring).
 *   AddMul(i, j, p): rows:    row i <- row i + p * row j;
 *                    columns: column j <- column j + column i * p. */
struct ElementaryAction {
    enum class Kind { Permute, Scale, AddMul };
    enum class Side { Left, Right };

    Kind kind;
    Side side;
    int i;
    int j;          // unused for Scale
    OrePoly factor; // Scale unit or AddMul multiplier

    static ElementaryAction permute(Side side, int i, int j);
    static ElementaryAction scale(Side side, int i, const DeltaFraction& u);
    static ElementaryAction add_mul(Side side, int i, int j, const OrePoly& p);

    ElementaryAction inverse() const;
    /* Same elementary matrix applied from the other side (used to update
     * tracked inverses). */
    ElementaryAction mirrored() const;
};

OreMatrix apply_action(const OreMatrix& m, const ElementaryAction& a);

/* Invertible matrix built from a recorded action sequence, with its exact
 * inverse maintained alongside. */
class Unimodular {
public:
    static Unimodular identity(const Ctx& ctx, int n);

    const OreMatrix& matrix() const { return matrix_; }
    const OreMatrix& inverse() const { return inverse_; }
    const std::vector<ElementaryAction>& actions() const { return actions_; }

    /* Compose with one more action: left actions give matrix <- E*matrix,
     * right actions matrix <- matrix*E; the inverse is updated with the
     * mirrored inverse action. */
    void apply(const ElementaryAction& a);

private:
    Unimodular(OreMatrix m, OreMatrix inv)
        : matrix_(std::move(m)), inverse_(std::move(inv)) {}

    OreMatrix matrix_;
    OreMatrix inverse_;
    std::vector<ElementaryAction> actions_;
};

} // namespace piflat
