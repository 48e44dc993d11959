#pragma once

#include <memory>
#include <string>
#include <vector>

#include "milnor/matrix.hpp"
#include "milnor/system.hpp"
#include "milnor/wedge.hpp"

namespace milnor {

/// v_{s,r} = sum_i lk(i,r) X^{[isr]}: the shift of the m/t data caused by a
/// base-point move on component r past component s, or by a torus sum.
WedgeVector indeterminacy_vector(const LinkingMatrix& lk, int s, int r);

/// The quotient of the degree-3 alternating module by the span of all
/// indeterminacy vectors. Depends only on n and the pairwise linking
/// numbers. Normal forms of the relation matrix are cached at construction.
class TotalMilnorQuotient {
public:
    TotalMilnorQuotient(int n, LinkingMatrix lk);

    int components() const { return n_; }
    const LinkingMatrix& linking() const { return lk_; }

    /// Relation matrix V: C(n,3) rows, one column per ordered pair (s,r),
    /// s != r, in lexicographic (s,r) order.
    const IntMatrix& relation_matrix() const { return v_; }
    const HermiteBasis& hermite() const { return hermite_; }
    const SmithDecomposition& smith() const { return smith_; }

    CokernelStructure structure() const;

    /// Canonical coset representative of a wedge element.
    std::vector<Int> reduce(const WedgeVector& w) const;

    /// One integer functional per free factor of the quotient, derived from
    /// the Smith row transform and sign-normalized (first nonzero positive).
    /// Each vanishes on the relation lattice.
    std::vector<std::vector<Int>> free_functionals() const;

private:
    int n_ = 0;
    LinkingMatrix lk_;
    IntMatrix v_;
    HermiteBasis hermite_;
    SmithDecomposition smith_;
};

/// A link's refined triple-linking invariant: the class of m - t in the
/// quotient attached to its linking matrix, held as the canonical
/// representative.
class MilnorClass {
public:
    MilnorClass(std::shared_ptr<const TotalMilnorQuotient> quotient, std::vector<Int> rep);

    const TotalMilnorQuotient& quotient() const { return *quotient_; }
    std::shared_ptr<const TotalMilnorQuotient> quotient_ptr() const { return quotient_; }
    const std::vector<Int>& representative() const { return rep_; }

private:
    std::shared_ptr<const TotalMilnorQuotient> quotient_;
    std::vector<Int> rep_;
};

MilnorClass total_invariant(const SurfaceSystemData& s);
MilnorClass total_invariant(const SurfaceSystemData& s,
                            std::shared_ptr<const TotalMilnorQuotient> quotient);

enum class Comparability { Equal, Distinct, Incomparable };

/// Classes over different linking matrices are incomparable, mirroring the
/// standing same-pairwise-linking hypothesis.
Comparability compare_invariants(const MilnorClass& a, const MilnorClass& b);

/// Throws on incomparable inputs.
bool invariants_equal(const MilnorClass& a, const MilnorClass& b);

struct ClassicalMu {
    long long residue = 0;
    long long modulus = 0;  // gcd of the three pairwise linking numbers; 0 means integer-valued

    bool operator==(const ClassicalMu&) const = default;
};

/// mu(ijk) = (m_ijk - t_ijk) mod gcd(lk_ij, lk_jk, lk_ki), for i < j < k.
ClassicalMu classical_mu(const SurfaceSystemData& s, int i, int j, int k);

/// The 4-component all-ones-linking family: member m has words
/// 2 3 4 2^{-m} 2^{m} / 3 4 1 1^{-m} 3 1^{m} 3^{-1} / 4 1 2 2^{-1} 2 /
/// 1 2 3 and no triple points; its invariant evaluates to m under the
/// rank-one functional.
SurfaceSystemData realize_family(long long m);

enum class ReportFormat { Plain, Tsv };

/// "M = Z^r (+) Z/d1 (+) ...", or "M = 0" for the trivial group.
std::string structure_to_string(const CokernelStructure& st);

std::string invariant_report(const SurfaceSystemData& s, const std::string& name,
                             ReportFormat format = ReportFormat::Plain);

}  // namespace milnor
