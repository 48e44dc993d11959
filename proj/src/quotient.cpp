#include "milnor/quotient.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace milnor {

WedgeVector indeterminacy_vector(const LinkingMatrix& lk, int s, int r) {
    int n = lk.components();
    if (s == r)
        throw Error("indeterminacy vector needs s != r");
    if (s < 1 || r < 1 || s > n || r > n)
        throw Error("indeterminacy vector index out of range");
    WedgeVector v(n);
    for (int i = 1; i <= n; ++i) {
        if (i == s || i == r)
            continue;  // wedge vanishes on repeated indices
        v.add(i, s, r, lk.at(i, r));
    }
    return v;
}

namespace {

Int to_int(long long v) { return Int(static_cast<long>(v)); }

IntMatrix relation_matrix_for(const LinkingMatrix& lk) {
    int n = lk.components();
    std::size_t rows = triple_count(n);
    std::size_t cols = static_cast<std::size_t>(n) * (n - 1);
    IntMatrix v(rows, cols);
    std::size_t col = 0;
    for (int s = 1; s <= n; ++s)
        for (int r = 1; r <= n; ++r) {
            if (s == r)
                continue;
            WedgeVector vec = indeterminacy_vector(lk, s, r);
            for (std::size_t row = 0; row < rows; ++row)
                v.at(row, col) = to_int(vec.raw()[row]);
            ++col;
        }
    return v;
}

std::vector<Int> wedge_to_ints(const WedgeVector& w) {
    std::vector<Int> out;
    out.reserve(w.size());
    for (long long c : w.raw())
        out.push_back(to_int(c));
    return out;
}

}  // namespace

TotalMilnorQuotient::TotalMilnorQuotient(int n, LinkingMatrix lk)
    : n_(n), lk_(std::move(lk)) {
    if (n < 3)
        throw Error("total Milnor quotient needs at least three components");
    if (lk_.components() != n)
        throw Error("linking matrix size does not match component count");
    v_ = relation_matrix_for(lk_);
    hermite_ = hnf(v_);
    smith_ = snf(v_);
}

CokernelStructure TotalMilnorQuotient::structure() const {
    CokernelStructure out;
    out.free_rank = v_.rows() - smith_.rank;
    for (const Int& f : smith_.invariant_factors())
        if (f > 1)
            out.torsion.push_back(f);
    return out;
}

std::vector<Int> TotalMilnorQuotient::reduce(const WedgeVector& w) const {
    if (w.components() != n_)
        throw Error("wedge vector size does not match quotient");
    return reduce_mod_lattice(hermite_, wedge_to_ints(w));
}

std::vector<std::vector<Int>> TotalMilnorQuotient::free_functionals() const {
    // Rows of the Smith row transform past the rank read off the free
    // coordinates of the cokernel; each kills every relation column.
    std::vector<std::vector<Int>> out;
    for (std::size_t r = smith_.rank; r < v_.rows(); ++r) {
        std::vector<Int> f(v_.rows());
        for (std::size_t c = 0; c < v_.rows(); ++c)
            f[c] = smith_.u.at(r, c);
        for (const Int& e : f) {
            if (e == 0)
                continue;
            if (e < 0)
                for (Int& x : f)
                    x = -x;
            break;
        }
        out.push_back(std::move(f));
    }
    return out;
}

MilnorClass::MilnorClass(std::shared_ptr<const TotalMilnorQuotient> quotient,
                         std::vector<Int> rep)
    : quotient_(std::move(quotient)), rep_(std::move(rep)) {
    if (!quotient_)
        throw Error("milnor class needs a quotient");
    if (rep_.size() != triple_count(quotient_->components()))
        throw Error("representative length does not match quotient");
}

MilnorClass total_invariant(const SurfaceSystemData& s) {
    require_valid(s);
    auto q = std::make_shared<const TotalMilnorQuotient>(s.n, linking_matrix(s));
    return total_invariant(s, std::move(q));
}

MilnorClass total_invariant(const SurfaceSystemData& s,
                            std::shared_ptr<const TotalMilnorQuotient> quotient) {
    if (!quotient)
        throw Error("total invariant needs a quotient");
    if (s.n < 3)
        throw Error("total invariant needs at least three components");
    if (quotient->linking() != linking_matrix(s))
        throw Error("quotient linking matrix does not match the system");
    WedgeVector mu = m_vector(s) - t_vector(s);
    return MilnorClass(std::move(quotient), quotient->reduce(mu));
}

Comparability compare_invariants(const MilnorClass& a, const MilnorClass& b) {
    if (a.quotient().components() != b.quotient().components() ||
        !(a.quotient().linking() == b.quotient().linking()))
        return Comparability::Incomparable;
    return a.representative() == b.representative() ? Comparability::Equal
                                                    : Comparability::Distinct;
}

bool invariants_equal(const MilnorClass& a, const MilnorClass& b) {
    Comparability c = compare_invariants(a, b);
    if (c == Comparability::Incomparable)
        throw Error("incomparable: linking numbers differ");
    return c == Comparability::Equal;
}

ClassicalMu classical_mu(const SurfaceSystemData& s, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= s.n))
        throw Error("classical mu needs strictly increasing indices");
    LinkingMatrix lk = linking_matrix(s);
    long long g = std::gcd(std::gcd(std::abs(lk.at(i, j)), std::abs(lk.at(j, k))),
                           std::abs(lk.at(k, i)));
    long long t = 0;
    if (auto it = s.triples.find({i, j, k}); it != s.triples.end())
        t = it->second;
    long long value = m_count(s, i, j, k) - t;
    if (g == 0)
        return ClassicalMu{value, 0};
    long long residue = ((value % g) + g) % g;
    return ClassicalMu{residue, g};
}

namespace {

void append_block(std::vector<Letter>& letters, int index, long long exponent) {
    int sign = exponent >= 0 ? +1 : -1;
    for (long long r = 0; r < std::abs(exponent); ++r)
        letters.push_back(Letter{index, sign});
}

}  // namespace

SurfaceSystemData realize_family(long long m) {
    SurfaceSystemData s;
    s.n = 4;
    {
        std::vector<Letter> w = {{2, 1}, {3, 1}, {4, 1}};
        append_block(w, 2, -m);
        append_block(w, 2, m);
        s.words.emplace_back(std::move(w));
    }
    {
        std::vector<Letter> w = {{3, 1}, {4, 1}, {1, 1}};
        append_block(w, 1, -m);
        w.push_back({3, 1});
        append_block(w, 1, m);
        w.push_back({3, -1});
        s.words.emplace_back(std::move(w));
    }
    s.words.emplace_back(std::vector<Letter>{{4, 1}, {1, 1}, {2, 1}, {2, -1}, {2, 1}});
    s.words.emplace_back(std::vector<Letter>{{1, 1}, {2, 1}, {3, 1}});
    return s;
}

namespace {

bool all_ones_linking(const LinkingMatrix& lk) {
    for (int i = 1; i <= lk.components(); ++i)
        for (int j = 1; j <= lk.components(); ++j)
            if (i != j && lk.at(i, j) != 1)
                return false;
    return true;
}

}  // namespace

std::string structure_to_string(const CokernelStructure& st) {
    std::ostringstream os;
    os << "M = ";
    bool any = false;
    if (st.free_rank > 0) {
        os << "Z^" << st.free_rank;
        any = true;
    }
    for (const Int& d : st.torsion) {
        if (any)
            os << " (+) ";
        os << "Z/" << d.get_str();
        any = true;
    }
    if (!any)
        os << "0";
    return os.str();
}

std::string invariant_report(const SurfaceSystemData& s, const std::string& name,
                             ReportFormat format) {
    require_valid(s);
    if (s.n < 3)
        throw Error("invariant report needs at least three components");
    LinkingMatrix lk = linking_matrix(s);
    auto quotient = std::make_shared<const TotalMilnorQuotient>(s.n, lk);
    MilnorClass cls = total_invariant(s, quotient);
    WedgeVector m = m_vector(s);
    WedgeVector t = t_vector(s);
    CokernelStructure st = quotient->structure();
    auto triples = all_triples(s.n);

    std::ostringstream os;
    if (format == ReportFormat::Tsv) {
        for (int i = 1; i <= s.n; ++i)
            for (int j = i + 1; j <= s.n; ++j)
                os << "lk\t" << i << '\t' << j << "\t0\t" << lk.at(i, j) << '\n';
        for (std::size_t p = 0; p < triples.size(); ++p) {
            auto [i, j, k] = triples[p];
            os << "m\t" << i << '\t' << j << '\t' << k << '\t' << m.raw()[p] << '\n';
        }
        for (std::size_t p = 0; p < triples.size(); ++p) {
            auto [i, j, k] = triples[p];
            os << "t\t" << i << '\t' << j << '\t' << k << '\t' << t.raw()[p] << '\n';
        }
        for (std::size_t p = 0; p < triples.size(); ++p) {
            auto [i, j, k] = triples[p];
            os << "mu\t" << i << '\t' << j << '\t' << k << '\t'
               << cls.representative()[p].get_str() << '\n';
        }
        os << "rank\t0\t0\t0\t" << st.free_rank << '\n';
        for (const Int& d : st.torsion)
            os << "torsion\t0\t0\t0\t" << d.get_str() << '\n';
        if (s.n == 4 && all_ones_linking(lk)) {
            auto fs = quotient->free_functionals();
            if (fs.size() == 1) {
                Int value = 0;
                for (std::size_t p = 0; p < triples.size(); ++p)
                    value += fs[0][p] * to_int(m.raw()[p] - t.raw()[p]);
                os << "f\t0\t0\t0\t" << value.get_str() << '\n';
            }
        }
        return os.str();
    }

    os << "link " << name << '\n';
    os << "components " << s.n << '\n';
    os << "lk:\n";
    for (int i = 1; i <= s.n; ++i) {
        for (int j = 1; j <= s.n; ++j) {
            if (j > 1)
                os << ' ';
            os << (i == j ? 0 : lk.at(i, j));
        }
        os << '\n';
    }
    for (std::size_t p = 0; p < triples.size(); ++p) {
        auto [i, j, k] = triples[p];
        os << "m[" << i << ',' << j << ',' << k << "] = " << m.raw()[p] << '\n';
    }
    for (std::size_t p = 0; p < triples.size(); ++p) {
        auto [i, j, k] = triples[p];
        os << "t[" << i << ',' << j << ',' << k << "] = " << t.raw()[p] << '\n';
    }
    os << structure_to_string(st) << '\n';
    os << "mu =";
    for (const Int& c : cls.representative())
        os << ' ' << c.get_str();
    os << '\n';
    if (s.n == 4 && all_ones_linking(lk)) {
        auto fs = quotient->free_functionals();
        if (fs.size() == 1) {
            Int value = 0;
            for (std::size_t p = 0; p < triples.size(); ++p)
                value += fs[0][p] * to_int(m.raw()[p] - t.raw()[p]);
            os << "f = " << value.get_str() << '\n';
        }
    }
    return os.str();
}

}  // namespace milnor
