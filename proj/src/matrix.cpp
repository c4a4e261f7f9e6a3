#include "piflat/matrix.hpp"

#include "piflat/errors.hpp"

namespace piflat {

OreMatrix::OreMatrix(Ctx ctx, int rows, int cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    entries_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols),
                    OrePoly::zero(ctx_));
}

OreMatrix OreMatrix::identity(const Ctx& ctx, int n) {
    OreMatrix m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = OrePoly::one(ctx);
    return m;
}

void OreMatrix::check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw DimensionError("matrix index out of range");
}

OrePoly& OreMatrix::at(int i, int j) {
    check_index(i, j);
    return entries_[static_cast<size_t>(i) * cols_ + j];
}

const OrePoly& OreMatrix::at(int i, int j) const {
    check_index(i, j);
    return entries_[static_cast<size_t>(i) * cols_ + j];
}

bool OreMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool OreMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const OrePoly& e = at(i, j);
            if (i == j ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

OreMatrix OreMatrix::operator-() const {
    OreMatrix r(ctx_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = -entries_[k];
    return r;
}

OreMatrix OreMatrix::operator+(const OreMatrix& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix sum shape mismatch");
    OreMatrix r(ctx_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k)
        r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

OreMatrix OreMatrix::operator-(const OreMatrix& o) const { return *this + (-o); }

OreMatrix OreMatrix::operator*(const OreMatrix& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (cols_ != o.rows_)
        throw DimensionError("matrix product inner dimension mismatch");
    OreMatrix r(ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            OrePoly s = OrePoly::zero(ctx_);
            for (int k = 0; k < cols_; ++k) {
                const OrePoly& a = at(i, k);
                const OrePoly& b = o.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                s = s + a * b;
            }
            r.at(i, j) = std::move(s);
        }
    return r;
}

OreMatrix OreMatrix::scale_left(const OrePoly& p) const {
    OreMatrix r(ctx_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = p * entries_[k];
    return r;
}

OreMatrix OreMatrix::scale_right(const OrePoly& p) const {
    OreMatrix r(ctx_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * p;
    return r;
}

bool OreMatrix::operator==(const OreMatrix& o) const {
    check_same_ctx(ctx_, o.ctx_);
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (!(entries_[k] == o.entries_[k])) return false;
    return true;
}

OreMatrix OreMatrix::block(int row0, int col0, int nrows, int ncols) const {
    if (row0 < 0 || col0 < 0 || nrows < 0 || ncols < 0 ||
        row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionError("block out of range");
    OreMatrix r(ctx_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
}

OreMatrix OreMatrix::hstack(const OreMatrix& a, const OreMatrix& b) {
    check_same_ctx(a.ctx_, b.ctx_);
    if (a.rows_ != b.rows_) throw DimensionError("hstack row mismatch");
    OreMatrix r(a.ctx_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

OreMatrix OreMatrix::vstack(const OreMatrix& a, const OreMatrix& b) {
    check_same_ctx(a.ctx_, b.ctx_);
    if (a.cols_ != b.cols_) throw DimensionError("vstack column mismatch");
    OreMatrix r(a.ctx_, a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
        for (int i = 0; i < a.rows_; ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i) r.at(a.rows_ + i, j) = b.at(i, j);
    }
    return r;
}

bool OreMatrix::is_polynomial() const {
    for (const auto& e : entries_)
        if (!e.is_polynomial()) return false;
    return true;
}

ElementaryAction ElementaryAction::permute(Side side, int i, int j) {
    if (i == j) throw InternalError("permute needs two distinct indices");
    return {Kind::Permute, side, i, j, OrePoly::zero(nullptr)};
}

ElementaryAction ElementaryAction::scale(Side side, int i,
                                         const DeltaFraction& u) {
    if (u.is_zero()) throw DivisionByZeroError("scale by zero");
    return {Kind::Scale, side, i, -1, OrePoly::from_fraction(u)};
}

ElementaryAction ElementaryAction::add_mul(Side side, int i, int j,
                                           const OrePoly& p) {
    if (i == j) throw InternalError("add_mul needs two distinct indices");
    return {Kind::AddMul, side, i, j, p};
}

ElementaryAction ElementaryAction::inverse() const {
    switch (kind) {
    case Kind::Permute:
        return *this;
    case Kind::Scale:
        return scale(side, i, factor.to_fraction().inverse());
    case Kind::AddMul:
    default:
        return {Kind::AddMul, side, i, j, -factor};
    }
}

ElementaryAction ElementaryAction::mirrored() const {
    ElementaryAction a = *this;
    a.side = side == Side::Left ? Side::Right : Side::Left;
    return a;
}

OreMatrix apply_action(const OreMatrix& m, const ElementaryAction& a) {
    OreMatrix r = m;
    bool left = a.side == ElementaryAction::Side::Left;
    int bound = left ? m.rows() : m.cols();
    auto check = [&](int k) {
        if (k < 0 || k >= bound) throw DimensionError("action index out of range");
    };
    switch (a.kind) {
    case ElementaryAction::Kind::Permute:
        check(a.i);
        check(a.j);
        if (left) {
            for (int c = 0; c < m.cols(); ++c)
                std::swap(r.at(a.i, c), r.at(a.j, c));
        } else {
            for (int rr = 0; rr < m.rows(); ++rr)
                std::swap(r.at(rr, a.i), r.at(rr, a.j));
        }
        break;
    case ElementaryAction::Kind::Scale:
        check(a.i);
        if (a.factor.is_zero() || a.factor.deg() != 0)
            throw InternalError("scale factor must be a D-free unit");
        if (left) {
            for (int c = 0; c < m.cols(); ++c)
                r.at(a.i, c) = a.factor * m.at(a.i, c);
        } else {
            for (int rr = 0; rr < m.rows(); ++rr)
                r.at(rr, a.i) = m.at(rr, a.i) * a.factor;
        }
        break;
    case ElementaryAction::Kind::AddMul:
        check(a.i);
        check(a.j);
        if (left) {
            // row i += p * row j
            for (int c = 0; c < m.cols(); ++c)
                r.at(a.i, c) = m.at(a.i, c) + a.factor * m.at(a.j, c);
        } else {
            // column j += column i * p
            for (int rr = 0; rr < m.rows(); ++rr)
                r.at(rr, a.j) = m.at(rr, a.j) + m.at(rr, a.i) * a.factor;
        }
        break;
    }
    return r;
}

Unimodular Unimodular::identity(const Ctx& ctx, int n) {
    return Unimodular(OreMatrix::identity(ctx, n), OreMatrix::identity(ctx, n));
}

void Unimodular::apply(const ElementaryAction& a) {
    matrix_ = apply_action(matrix_, a);
    inverse_ = apply_action(inverse_, a.inverse().mirrored());
    actions_.push_back(a);
}

} // namespace piflat
