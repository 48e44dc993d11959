#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

/// Number of strictly increasing triples 1 <= i < j < k <= n.
std::size_t triple_count(int n);

/// Position of (i,j,k), i < j < k, in the lexicographic triple order.
std::size_t triple_index(int n, int i, int j, int k);

/// All strictly increasing triples in lexicographic order.
std::vector<std::array<int, 3>> all_triples(int n);

struct SortedTriple {
    int i = 0, j = 0, k = 0;
    int sign = 0;  // parity of the sorting permutation; 0 on a repeated index
};

SortedTriple sort_triple(int i, int j, int k);

/// Element of the degree-3 alternating module on n generators, stored as one
/// coefficient per increasing triple. Lookups with permuted indices pick up
/// the permutation sign; a repeated index reads as 0.
class WedgeVector {
public:
    WedgeVector() = default;
    explicit WedgeVector(int n);

    int components() const { return n_; }
    std::size_t size() const { return coeffs_.size(); }
    const std::vector<long long>& raw() const { return coeffs_; }

    long long coefficient(int i, int j, int k) const;
    void add(int i, int j, int k, long long v);
    void set_sorted(int i, int j, int k, long long v);
    long long at_sorted(int i, int j, int k) const;

    bool is_zero() const;

    WedgeVector& operator+=(const WedgeVector& o);
    WedgeVector& operator-=(const WedgeVector& o);
    friend WedgeVector operator+(WedgeVector a, const WedgeVector& b) { return a += b; }
    friend WedgeVector operator-(WedgeVector a, const WedgeVector& b) { return a -= b; }
    bool operator==(const WedgeVector&) const = default;

private:
    void check_range(int i, int j, int k) const;

    int n_ = 0;
    std::vector<long long> coeffs_;
};

}  // namespace milnor
