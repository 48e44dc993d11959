#pragma once

// Shared test inputs: the worked four-component example link (clasp-words
// 2342^{-1}2 / 3411^{-1}313^{-1} / 4122^{-1}2 / 123), its unbanded variant,
// a Borromean-style system, and random generators.

#include <algorithm>
#include <random>
#include <vector>

#include "milnor/system.hpp"

namespace milnor::testing {

inline CComplexData banded_ccomplex() {
    CComplexData c;
    c.n = 4;
    c.clasps = {
        {"c1", {1, 1}, {2, 3}, +1}, {"c2", {1, 4}, {2, 4}, -1}, {"c3", {1, 5}, {2, 6}, +1},
        {"c4", {1, 2}, {3, 2}, +1}, {"c5", {1, 3}, {4, 1}, +1}, {"c6", {2, 1}, {3, 3}, +1},
        {"c7", {2, 5}, {3, 5}, +1}, {"c8", {2, 7}, {3, 4}, -1}, {"c9", {2, 2}, {4, 2}, +1},
        {"c10", {3, 1}, {4, 3}, +1},
    };
    return c;
}

inline CComplexData unbanded_ccomplex() {
    CComplexData c;
    c.n = 4;
    c.clasps = {
        {"u1", {1, 1}, {2, 3}, +1}, {"u2", {1, 2}, {3, 2}, +1}, {"u3", {1, 3}, {4, 1}, +1},
        {"u4", {2, 1}, {3, 3}, +1}, {"u5", {2, 2}, {4, 2}, +1}, {"u6", {3, 1}, {4, 3}, +1},
    };
    return c;
}

inline SurfaceSystemData borromean_system(long long t123 = 1) {
    SurfaceSystemData s;
    s.n = 3;
    s.words.assign(3, CyclicWord());
    if (t123 != 0)
        s.triples[{1, 2, 3}] = t123;
    return s;
}

inline CComplexData random_ccomplex(std::mt19937& rng, int n, int max_clasps) {
    std::uniform_int_distribution<int> count(0, max_clasps);
    std::uniform_int_distribution<int> comp(1, n);
    std::uniform_int_distribution<int> flip(0, 1);
    CComplexData c;
    c.n = n;
    std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
    int m = count(rng);
    for (int t = 0; t < m; ++t) {
        int i = comp(rng), j = comp(rng);
        if (i == j)
            continue;
        Clasp cl;
        cl.id = "r" + std::to_string(t);
        cl.a = {i, ++ranks[static_cast<std::size_t>(i)]};
        cl.b = {j, ++ranks[static_cast<std::size_t>(j)]};
        cl.sign = flip(rng) ? +1 : -1;
        c.clasps.push_back(std::move(cl));
    }
    return c;
}

/// A different sign-compatible pairing with identical clasp-words: within
/// each (component pair, sign) group the far endpoints are permuted.
inline CComplexData repair_randomly(std::mt19937& rng, const CComplexData& c) {
    CComplexData out = c;
    std::map<std::tuple<int, int, int>, std::vector<std::size_t>> groups;
    for (std::size_t p = 0; p < out.clasps.size(); ++p) {
        Clasp& cl = out.clasps[p];
        if (cl.a.component > cl.b.component)
            std::swap(cl.a, cl.b);
        groups[{cl.a.component, cl.b.component, cl.sign}].push_back(p);
    }
    for (auto& [key, members] : groups) {
        std::vector<ClaspEndpoint> far;
        for (std::size_t p : members)
            far.push_back(out.clasps[p].b);
        std::shuffle(far.begin(), far.end(), rng);
        for (std::size_t q = 0; q < members.size(); ++q)
            out.clasps[members[q]].b = far[q];
    }
    return out;
}

inline SurfaceSystemData random_system(std::mt19937& rng, int n, int max_clasps,
                                       bool with_triples = true) {
    SurfaceSystemData s = to_surface_system(random_ccomplex(rng, n, max_clasps));
    std::uniform_int_distribution<long long> steps(0, 6);
    for (int k = 1; k <= n; ++k)
        s.word(k) = rotate(s.word(k), steps(rng));
    if (with_triples) {
        std::uniform_int_distribution<long long> tv(-2, 2);
        for (const auto& [i, j, k] : all_triples(n)) {
            long long v = tv(rng);
            if (v != 0)
                s.triples[{i, j, k}] = v;
        }
    }
    return s;
}

}  // namespace milnor::testing
