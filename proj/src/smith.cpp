#include "piflat/smith.hpp"

#include <tuple>

#include "piflat/errors.hpp"

namespace piflat {

namespace {

/* Working state shared by the elimination passes: the matrix being
 * reduced plus the two tracked factors. */
struct Reduction {
    OreMatrix w;
    Unimodular u;
    Unimodular v;
    long budget;

    explicit Reduction(const OreMatrix& m)
        : w(m),
          u(Unimodular::identity(m.ctx(), m.rows())),
          v(Unimodular::identity(m.ctx(), m.cols())) {
        int maxdeg = 0;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                maxdeg = std::max(maxdeg, m.at(i, j).deg());
        budget = static_cast<long>(m.rows() + 1) * (m.cols() + 1) *
                     (maxdeg + 2) * (std::min(m.rows(), m.cols()) + 2) +
                 64;
    }

    void spend() {
        if (--budget < 0)
            throw InternalError("diagonal reduction exceeded its step bound");
    }

    void left(const ElementaryAction& a) {
        w = apply_action(w, a);
        u.apply(a);
    }

    void right(const ElementaryAction& a) {
        w = apply_action(w, a);
        v.apply(a);
    }

    /* Diagonalize position k against the submatrix [k, rlim) x [k, clim):
     * returns false when that submatrix is entirely zero.  On success
     * W(k,k) is nonzero and the rest of row k / column k inside the
     * window is zero. */
    bool eliminate(int k, int rlim, int clim) {
        using Side = ElementaryAction::Side;
        for (;;) {
            spend();
            // Pivot rule: minimal D-degree, then minimal delta-degree of
            // the denominator-cleared numerator, then row, then column.
            std::tuple<int, int, int, int> best_key{};
            int bi = -1, bj = -1;
            for (int i = k; i < rlim; ++i)
                for (int j = k; j < clim; ++j) {
                    const OrePoly& e = w.at(i, j);
                    if (e.is_zero()) continue;
                    std::tuple<int, int, int, int> key{
                        e.deg(), e.cleared_delta_degree(), i, j};
                    if (bi < 0 || key < best_key) {
                        best_key = key;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi < 0) return false;
            if (bi != k) left(ElementaryAction::permute(Side::Left, k, bi));
            if (bj != k) right(ElementaryAction::permute(Side::Right, k, bj));

            // Reduce column k by right division, row k by left division;
            // nonzero remainders have strictly smaller D-degree than the
            // pivot and trigger another pivot selection.
            OrePoly q = OrePoly::zero(w.ctx()), r = OrePoly::zero(w.ctx());
            for (int i = k + 1; i < rlim; ++i) {
                if (w.at(i, k).is_zero()) continue;
                spend();
                OrePoly::divide(w.at(i, k), w.at(k, k), OrePoly::Side::Right,
                                &q, &r);
                if (!q.is_zero())
                    left(ElementaryAction::add_mul(Side::Left, i, k, -q));
            }
            for (int j = k + 1; j < clim; ++j) {
                if (w.at(k, j).is_zero()) continue;
                spend();
                OrePoly::divide(w.at(k, j), w.at(k, k), OrePoly::Side::Left,
                                &q, &r);
                if (!q.is_zero())
                    right(ElementaryAction::add_mul(Side::Right, k, j, -q));
            }

            bool clean = true;
            for (int i = k + 1; clean && i < rlim; ++i)
                clean = w.at(i, k).is_zero();
            for (int j = k + 1; clean && j < clim; ++j)
                clean = w.at(k, j).is_zero();
            if (clean) return true;
        }
    }
};

} // namespace

OreMatrix SmithForm::block() const {
    OreMatrix b(U.matrix().ctx(), rows, cols);
    for (int i = 0; i < rank(); ++i) b.at(i, i) = diag[static_cast<size_t>(i)];
    return b;
}

SmithForm smith_jacobson(const OreMatrix& m) {
    using Side = ElementaryAction::Side;
    const Ctx& ctx = m.ctx();
    int p = m.rows(), q = m.cols();
    Reduction red(m);

    int rank = 0;
    for (int k = 0; k < std::min(p, q); ++k) {
        if (!red.eliminate(k, p, q)) break;
        rank = k + 1;
    }

    // Normalize the divisibility chain: each entry must right-divide the
    // next.  A violation is repaired by folding the pair back into one
    // 2x2 block and re-reducing it, which strictly lowers the earlier
    // entry's degree.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < rank; ++i) {
            OrePoly qq = OrePoly::zero(ctx), rr = OrePoly::zero(ctx);
            OrePoly::divide(red.w.at(i + 1, i + 1), red.w.at(i, i),
                            OrePoly::Side::Right, &qq, &rr);
            if (rr.is_zero()) continue;
            red.spend();
            red.left(ElementaryAction::add_mul(Side::Left, i, i + 1,
                                               OrePoly::one(ctx)));
            if (!red.eliminate(i, i + 2, i + 2))
                throw InternalError("chain repair lost a nonzero block");
            changed = true;
        }
    }

    // Left-scale every diagonal entry monic in D; degree-0 entries
    // become exactly 1.
    for (int i = 0; i < rank; ++i) {
        DeltaFraction lc = red.w.at(i, i).leading_coeff();
        if (!lc.is_one())
            red.left(ElementaryAction::scale(Side::Left, i, lc.inverse()));
    }

    SmithForm out{std::move(red.u),
                  std::move(red.v),
                  {},
                  p <= q ? SmithForm::Shape::Wide : SmithForm::Shape::Tall,
                  p,
                  q};
    for (int i = 0; i < rank; ++i) out.diag.push_back(red.w.at(i, i));
    return out;
}

HyperRegularity is_hyper_regular(const OreMatrix& m) {
    SmithForm form = smith_jacobson(m);
    int want = std::min(m.rows(), m.cols());
    int defect = want - form.rank();
    std::optional<OrePoly> witness;
    bool ok = defect == 0;
    for (const OrePoly& d : form.diag) {
        if (!d.is_one()) {
            ok = false;
            if (!witness && d.deg() >= 1) witness = d;
        }
    }
    return HyperRegularity{ok, defect, std::move(witness), std::move(form)};
}

} // namespace piflat
