#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

using Int = mpz_class;

/// Dense matrix over the integers, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);
    /// row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    /// col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;

    /// Exact determinant (Bareiss fraction-free elimination). Square only.
    Int determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Column-style Hermite data: A * u = [h | 0] with u unimodular, h the
/// pivot columns only. Pivot rows are strictly increasing; each pivot is
/// positive and entries left of it in its row lie in [0, pivot).
struct HermiteBasis {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
};

HermiteBasis hnf(const IntMatrix& a);

/// u * a * v = s with s diagonal, d_1 | d_2 | ... | d_r > 0, rest zero.
/// u_inv and v_inv are tracked alongside, so u_inv * s * v_inv = a exactly.
struct SmithDecomposition {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;
    std::size_t rank = 0;

    std::vector<Int> invariant_factors() const;
};

SmithDecomposition snf(const IntMatrix& a);

/// Solves A*y = x over the integers. nullopt means x is not in the column
/// lattice of A (a definitive negative, not a search failure).
std::optional<std::vector<Int>> lattice_solve(const IntMatrix& a, const std::vector<Int>& x);

struct CokernelStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order

    bool operator==(const CokernelStructure&) const = default;
};

CokernelStructure cokernel_structure(const IntMatrix& a);

/// Canonical representative of x modulo the column lattice of A: pivot-row
/// coordinates are reduced into [0, pivot) by greedy subtraction of Hermite
/// columns. Two vectors reduce equal iff their difference is in the lattice.
std::vector<Int> reduce_mod_lattice(const IntMatrix& a, const std::vector<Int>& x);
std::vector<Int> reduce_mod_lattice(const HermiteBasis& hb, const std::vector<Int>& x);

struct ReductionWitness {
    std::vector<Int> representative;
    std::vector<Int> coefficients;  // representative = x - A * coefficients
};

ReductionWitness reduce_mod_lattice_with_witness(const IntMatrix& a, const std::vector<Int>& x);

std::string to_string(const IntMatrix& m);

}  // namespace milnor
