#include "milnor/wedge.hpp"

namespace milnor {

std::size_t triple_count(int n) {
    if (n < 0)
        throw Error("negative component count");
    std::size_t m = static_cast<std::size_t>(n);
    return n < 3 ? 0 : m * (m - 1) * (m - 2) / 6;
}

std::size_t triple_index(int n, int i, int j, int k) {
    if (!(1 <= i && i < j && j < k && k <= n))
        throw Error("triple index out of range");
    // Triples before (i,j,k): all with smaller first entry, then smaller
    // second entry, then smaller third.
    std::size_t idx = 0;
    for (int a = 1; a < i; ++a) {
        std::size_t rem = static_cast<std::size_t>(n - a);
        idx += rem * (rem - 1) / 2;
    }
    for (int b = i + 1; b < j; ++b)
        idx += static_cast<std::size_t>(n - b);
    idx += static_cast<std::size_t>(k - j - 1);
    return idx;
}

std::vector<std::array<int, 3>> all_triples(int n) {
    std::vector<std::array<int, 3>> out;
    out.reserve(triple_count(n));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                out.push_back({i, j, k});
    return out;
}

SortedTriple sort_triple(int i, int j, int k) {
    if (i == j || j == k || i == k)
        return SortedTriple{0, 0, 0, 0};
    int v[3] = {i, j, k};
    int sign = 1;
    // Three-element bubble sort; each swap flips the parity.
    for (int pass = 0; pass < 2; ++pass)
        for (int p = 0; p < 2 - pass; ++p)
            if (v[p] > v[p + 1]) {
                std::swap(v[p], v[p + 1]);
                sign = -sign;
            }
    return SortedTriple{v[0], v[1], v[2], sign};
}

WedgeVector::WedgeVector(int n) : n_(n), coeffs_(triple_count(n), 0) {
    if (n < 0)
        throw Error("negative component count");
}

void WedgeVector::check_range(int i, int j, int k) const {
    if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_)
        throw Error("wedge index out of range");
}

long long WedgeVector::coefficient(int i, int j, int k) const {
    check_range(i, j, k);
    SortedTriple t = sort_triple(i, j, k);
    if (t.sign == 0)
        return 0;
    return t.sign * coeffs_[triple_index(n_, t.i, t.j, t.k)];
}

void WedgeVector::add(int i, int j, int k, long long v) {
    check_range(i, j, k);
    SortedTriple t = sort_triple(i, j, k);
    if (t.sign == 0)
        return;  // wedge with a repeated index vanishes
    coeffs_[triple_index(n_, t.i, t.j, t.k)] += t.sign * v;
}

void WedgeVector::set_sorted(int i, int j, int k, long long v) {
    check_range(i, j, k);
    if (!(i < j && j < k))
        throw Error("set_sorted expects i < j < k");
    coeffs_[triple_index(n_, i, j, k)] = v;
}

long long WedgeVector::at_sorted(int i, int j, int k) const {
    check_range(i, j, k);
    if (!(i < j && j < k))
        throw Error("at_sorted expects i < j < k");
    return coeffs_[triple_index(n_, i, j, k)];
}

bool WedgeVector::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

WedgeVector& WedgeVector::operator+=(const WedgeVector& o) {
    if (n_ != o.n_)
        throw Error("wedge vector size mismatch");
    for (std::size_t p = 0; p < coeffs_.size(); ++p)
        coeffs_[p] += o.coeffs_[p];
    return *this;
}

WedgeVector& WedgeVector::operator-=(const WedgeVector& o) {
    if (n_ != o.n_)
        throw Error("wedge vector size mismatch");
    for (std::size_t p = 0; p < coeffs_.size(); ++p)
        coeffs_[p] -= o.coeffs_[p];
    return *this;
}

}  // namespace milnor
