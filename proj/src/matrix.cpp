#include "milnor/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {

namespace {

// floor(a / b) for b > 0
Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_)
        throw Error("matrix index out of range");
    return a_[r * cols_ + c];
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw Error("matrix index out of range");
    return a_[r * cols_ + c];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, c) = -at(r, c);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, dst) += q * at(r, src);
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error("matrix product shape mismatch");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(r, k);
            if (x == 0)
                continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.at(r, c) += x * o.at(k, c);
        }
    return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (v.size() != cols_)
        throw Error("matrix-vector shape mismatch");
    std::vector<Int> out(rows_, Int(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += at(r, c) * v[c];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_)
        throw Error("determinant of a non-square matrix");
    std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix m = *this;
    Int prev(1);
    int sign = 1;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (m.at(p, p) == 0) {
            std::size_t r = p + 1;
            while (r < n && m.at(r, p) == 0)
                ++r;
            if (r == n)
                return 0;
            m.swap_rows(p, r);
            sign = -sign;
        }
        for (std::size_t r = p + 1; r < n; ++r)
            for (std::size_t c = p + 1; c < n; ++c) {
                Int num = m.at(r, c) * m.at(p, p) - m.at(r, p) * m.at(p, c);
                mpz_divexact(m.at(r, c).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(p, p);
    }
    return sign * m.at(n - 1, n - 1);
}

HermiteBasis hnf(const IntMatrix& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    IntMatrix w = a;
    IntMatrix u = IntMatrix::identity(cols);
    std::vector<std::size_t> pivot_rows;
    std::size_t next = 0;  // next pivot column slot

    for (std::size_t row = 0; row < rows && next < cols; ++row) {
        // Euclidean elimination across the active columns of this row.
        while (true) {
            std::size_t best = cols;
            std::size_t count = 0;
            for (std::size_t c = next; c < cols; ++c) {
                if (w.at(row, c) == 0)
                    continue;
                ++count;
                if (best == cols || cmp(abs(w.at(row, c)), abs(w.at(row, best))) < 0)
                    best = c;
            }
            if (count <= 1) {
                if (count == 1 && best != next) {
                    w.swap_cols(next, best);
                    u.swap_cols(next, best);
                }
                break;
            }
            if (w.at(row, best) < 0) {
                w.negate_col(best);
                u.negate_col(best);
            }
            for (std::size_t c = next; c < cols; ++c) {
                if (c == best || w.at(row, c) == 0)
                    continue;
                Int q = floor_div(w.at(row, c), w.at(row, best));
                w.add_col_multiple(c, best, -q);
                u.add_col_multiple(c, best, -q);
            }
        }
        if (w.at(row, next) == 0)
            continue;
        if (w.at(row, next) < 0) {
            w.negate_col(next);
            u.negate_col(next);
        }
        // Reduce earlier pivot columns into [0, pivot) at this row.
        for (std::size_t l = 0; l < next; ++l) {
            Int q = floor_div(w.at(row, l), w.at(row, next));
            w.add_col_multiple(l, next, -q);
            u.add_col_multiple(l, next, -q);
        }
        pivot_rows.push_back(row);
        ++next;
    }

    HermiteBasis out;
    out.pivot_rows = std::move(pivot_rows);
    out.h = IntMatrix(rows, out.pivot_rows.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < out.h.cols(); ++c)
            out.h.at(r, c) = w.at(r, c);
    out.u = std::move(u);
    return out;
}

namespace {

struct SnfOps {
    IntMatrix& s;
    IntMatrix& u;
    IntMatrix& u_inv;
    IntMatrix& v;
    IntMatrix& v_inv;

    void swap_rows(std::size_t a, std::size_t b) {
        s.swap_rows(a, b);
        u.swap_rows(a, b);
        u_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        s.swap_cols(a, b);
        v.swap_cols(a, b);
        v_inv.swap_rows(a, b);
    }
    void negate_row(std::size_t r) {
        s.negate_row(r);
        u.negate_row(r);
        u_inv.negate_col(r);
    }
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
        s.add_row_multiple(dst, src, q);
        u.add_row_multiple(dst, src, q);
        u_inv.add_col_multiple(src, dst, -q);
    }
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
        s.add_col_multiple(dst, src, q);
        v.add_col_multiple(dst, src, q);
        v_inv.add_row_multiple(src, dst, -q);
    }
};

// Diagonalize from position p onward; entries above and left of p are
// assumed already diagonal and are not touched.
void diagonalize_from(SnfOps& ops, std::size_t p_start) {
    IntMatrix& s = ops.s;
    std::size_t rows = s.rows(), cols = s.cols();
    for (std::size_t p = p_start; p < std::min(rows, cols); ++p) {
        // Move the absolutely smallest nonzero of the submatrix to (p, p).
        std::size_t br = rows, bc = cols;
        for (std::size_t r = p; r < rows; ++r)
            for (std::size_t c = p; c < cols; ++c) {
                if (s.at(r, c) == 0)
                    continue;
                if (br == rows || cmp(abs(s.at(r, c)), abs(s.at(br, bc))) < 0) {
                    br = r;
                    bc = c;
                }
            }
        if (br == rows)
            return;  // submatrix is zero
        ops.swap_rows(p, br);
        ops.swap_cols(p, bc);

        while (true) {
            if (s.at(p, p) < 0)
                ops.negate_row(p);
            bool restart = false;
            for (std::size_t r = p + 1; r < rows && !restart; ++r) {
                if (s.at(r, p) == 0)
                    continue;
                Int q = floor_div(s.at(r, p), s.at(p, p));
                ops.add_row_multiple(r, p, -q);
                if (s.at(r, p) != 0) {
                    ops.swap_rows(p, r);  // strictly smaller pivot
                    restart = true;
                }
            }
            if (restart)
                continue;
            for (std::size_t c = p + 1; c < cols && !restart; ++c) {
                if (s.at(p, c) == 0)
                    continue;
                Int q = floor_div(s.at(p, c), s.at(p, p));
                ops.add_col_multiple(c, p, -q);
                if (s.at(p, c) != 0) {
                    ops.swap_cols(p, c);
                    restart = true;
                }
            }
            if (!restart)
                break;
        }
    }
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
    SmithDecomposition d;
    d.s = a;
    d.u = IntMatrix::identity(a.rows());
    d.u_inv = IntMatrix::identity(a.rows());
    d.v = IntMatrix::identity(a.cols());
    d.v_inv = IntMatrix::identity(a.cols());
    SnfOps ops{d.s, d.u, d.u_inv, d.v, d.v_inv};

    diagonalize_from(ops, 0);

    std::size_t diag = std::min(a.rows(), a.cols());
    auto rank_of = [&]() {
        std::size_t r = 0;
        while (r < diag && d.s.at(r, r) != 0)
            ++r;
        return r;
    };

    // Enforce the divisibility chain: a violating pair is merged by pulling
    // the later diagonal entry into the earlier column and re-eliminating.
    bool dirty = true;
    while (dirty) {
        dirty = false;
        std::size_t r = rank_of();
        for (std::size_t i = 0; i + 1 < r; ++i) {
            if (d.s.at(i + 1, i + 1) % d.s.at(i, i) == 0)
                continue;
            ops.add_col_multiple(i, i + 1, Int(1));
            diagonalize_from(ops, i);
            dirty = true;
            break;
        }
    }
    d.rank = rank_of();
    return d;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    out.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        out.push_back(s.at(i, i));
    return out;
}

std::optional<std::vector<Int>> lattice_solve(const IntMatrix& a, const std::vector<Int>& x) {
    if (x.size() != a.rows())
        throw Error("lattice_solve: vector length does not match row count");
    HermiteBasis hb = hnf(a);
    std::vector<Int> residual = x;
    std::vector<Int> z(hb.rank(), Int(0));
    for (std::size_t j = 0; j < hb.rank(); ++j) {
        std::size_t pr = hb.pivot_rows[j];
        const Int& d = hb.h.at(pr, j);
        if (residual[pr] % d != 0)
            return std::nullopt;
        Int q = residual[pr] / d;
        z[j] = q;
        if (q != 0)
            for (std::size_t r = 0; r < a.rows(); ++r)
                residual[r] -= q * hb.h.at(r, j);
    }
    for (const Int& e : residual)
        if (e != 0)
            return std::nullopt;
    std::vector<Int> y(a.cols(), Int(0));
    for (std::size_t j = 0; j < z.size(); ++j)
        if (z[j] != 0)
            for (std::size_t r = 0; r < a.cols(); ++r)
                y[r] += z[j] * hb.u.at(r, j);
    return y;
}

CokernelStructure cokernel_structure(const IntMatrix& a) {
    SmithDecomposition d = snf(a);
    CokernelStructure out;
    out.free_rank = a.rows() - d.rank;
    for (const Int& f : d.invariant_factors())
        if (f > 1)
            out.torsion.push_back(f);
    return out;
}

ReductionWitness reduce_mod_lattice_with_witness(const IntMatrix& a, const std::vector<Int>& x) {
    if (x.size() != a.rows())
        throw Error("reduce_mod_lattice: vector length does not match row count");
    HermiteBasis hb = hnf(a);
    ReductionWitness out;
    out.representative = x;
    std::vector<Int> z(hb.rank(), Int(0));
    for (std::size_t j = 0; j < hb.rank(); ++j) {
        std::size_t pr = hb.pivot_rows[j];
        Int q = floor_div(out.representative[pr], hb.h.at(pr, j));
        z[j] = q;
        if (q != 0)
            for (std::size_t r = 0; r < a.rows(); ++r)
                out.representative[r] -= q * hb.h.at(r, j);
    }
    out.coefficients.assign(a.cols(), Int(0));
    for (std::size_t j = 0; j < z.size(); ++j)
        if (z[j] != 0)
            for (std::size_t r = 0; r < a.cols(); ++r)
                out.coefficients[r] += z[j] * hb.u.at(r, j);
    return out;
}

std::vector<Int> reduce_mod_lattice(const IntMatrix& a, const std::vector<Int>& x) {
    return reduce_mod_lattice_with_witness(a, x).representative;
}

std::vector<Int> reduce_mod_lattice(const HermiteBasis& hb, const std::vector<Int>& x) {
    if (x.size() != hb.h.rows())
        throw Error("reduce_mod_lattice: vector length does not match row count");
    std::vector<Int> rep = x;
    for (std::size_t j = 0; j < hb.rank(); ++j) {
        std::size_t pr = hb.pivot_rows[j];
        Int q = floor_div(rep[pr], hb.h.at(pr, j));
        if (q != 0)
            for (std::size_t r = 0; r < rep.size(); ++r)
                rep[r] -= q * hb.h.at(r, j);
    }
    return rep;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ' ';
            os << m.at(r, c).get_str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace milnor
