#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "milnor/longitudes.hpp"
#include "milnor/magnus.hpp"

using namespace milnor;
using namespace milnor::testing;

namespace {

FreeWord fw(std::initializer_list<std::pair<int, int>> ls) {
    std::vector<FreeLetter> v;
    for (auto [g, e] : ls)
        v.push_back(FreeLetter{g, e});
    return FreeWord(std::move(v));
}

FreeWord random_free_word(std::mt19937& rng, int n, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, n);
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<FreeLetter> v;
    std::size_t l = len(rng);
    for (std::size_t p = 0; p < l; ++p)
        v.push_back(FreeLetter{gen(rng), flip(rng) ? 1 : -1});
    return FreeWord(std::move(v));
}

// Independent walk along the boundary arcs: cross the first r-1 surfaces on
// the home component, traverse the clasp arc, walk back along the partner.
std::vector<long long> conjugator_oracle(const CComplexData& c, int K, int r) {
    std::vector<long long> v(static_cast<std::size_t>(c.n), 0);
    for (int q = 1; q < r; ++q) {
        ClaspAttachment hit = clasp_at(c, K, q);
        v[static_cast<std::size_t>(hit.partner - 1)] += hit.sign;
    }
    ClaspAttachment arc = clasp_at(c, K, r);
    if (arc.sign < 0) {
        v[static_cast<std::size_t>(K - 1)] += 1;
        v[static_cast<std::size_t>(arc.partner - 1)] -= 1;
    }
    for (int q = arc.partner_rank - 1; q >= 1; --q) {
        ClaspAttachment hit = clasp_at(c, arc.partner, q);
        v[static_cast<std::size_t>(hit.partner - 1)] -= hit.sign;
    }
    return v;
}

}  // namespace

TEST_CASE("magnus images of single letters and cancelling pairs") {
    MagnusSeries g1 = magnus_of_word(FreeWord::generator(1), 3, 2);
    CHECK(g1.constant() == 1);
    CHECK(g1.linear(1) == 1);
    CHECK(g1.linear(2) == 0);
    CHECK(g1.quadratic(1, 1) == 0);

    MagnusSeries e = magnus_of_word(fw({{1, 1}, {1, -1}}), 3, 2);
    CHECK(e == MagnusSeries::one(3, 2));

    MagnusSeries m = magnus_of_word(fw({{1, -1}, {2, 1}}), 2, 2);
    CHECK(m.quadratic(1, 2) == -1);
    CHECK(m.quadratic(1, 1) == 1);
    CHECK(m.linear(1) == -1);

    CHECK_THROWS_AS(magnus_of_word(FreeWord::generator(5), 3, 2), Error);
    CHECK_THROWS_AS(magnus_of_word(FreeWord::generator(1), 3, 4), Error);
}

TEST_CASE("magnus multiplication") {
    MagnusSeries a = magnus_of_word(fw({{1, 1}, {2, -1}, {1, 1}}), 3, 2);
    CHECK(magnus_mul(a, MagnusSeries::one(3, 2)) == a);
    CHECK(magnus_mul(MagnusSeries::one(3, 2), a) == a);

    MagnusSeries x1 = magnus_of_word(FreeWord::generator(1), 2, 2);
    MagnusSeries x2 = magnus_of_word(FreeWord::generator(2), 2, 2);
    MagnusSeries prod = magnus_mul(x1, x2);
    CHECK(prod.quadratic(1, 2) == 1);
    CHECK(prod.quadratic(2, 1) == 0);

    std::mt19937 rng(11001);
    for (int trial = 0; trial < 100; ++trial) {
        for (int degree : {2, 3}) {
            MagnusSeries u = magnus_of_word(random_free_word(rng, 3, 6), 3, degree);
            MagnusSeries v = magnus_of_word(random_free_word(rng, 3, 6), 3, degree);
            MagnusSeries w = magnus_of_word(random_free_word(rng, 3, 6), 3, degree);
            CHECK(magnus_mul(magnus_mul(u, v), w) == magnus_mul(u, magnus_mul(v, w)));
        }
    }
}

TEST_CASE("magnus image matches a naive truncated polynomial expansion") {
    // monomials as generator sequences of length <= 3
    using Mono = std::vector<int>;
    using Poly = std::map<Mono, long long>;
    auto poly_mul = [](const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                if (ma.size() + mb.size() > 3)
                    continue;
                Mono m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                out[m] += ca * cb;
            }
        return out;
    };
    auto poly_of_letter = [](const FreeLetter& l) {
        Poly p;
        p[{}] = 1;
        if (l.exp == +1) {
            p[{l.gen}] = 1;
        } else {
            p[{l.gen}] = -1;
            p[{l.gen, l.gen}] = 1;
            p[{l.gen, l.gen, l.gen}] = -1;
        }
        return p;
    };

    std::mt19937 rng(11013);
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord w = random_free_word(rng, 3, 8);
        Poly expect;
        expect[{}] = 1;
        for (const FreeLetter& l : w.letters())
            expect = poly_mul(expect, poly_of_letter(l));

        MagnusSeries got = magnus_of_word(w, 3, 3);
        CHECK(got.constant() == expect[{}]);
        for (int i = 1; i <= 3; ++i) {
            CHECK(got.linear(i) == expect[Mono{i}]);
            for (int j = 1; j <= 3; ++j) {
                CHECK(got.quadratic(i, j) == expect[Mono{i, j}]);
                for (int k = 1; k <= 3; ++k)
                    CHECK(got.cubic(i, j, k) == expect[Mono{i, j, k}]);
            }
        }
    }
}

TEST_CASE("word image multiplies letter by letter") {
    std::mt19937 rng(11002);
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord u = random_free_word(rng, 4, 8);
        FreeWord v = random_free_word(rng, 4, 8);
        for (int degree : {2, 3})
            CHECK(magnus_of_word(u * v, 4, degree) ==
                  magnus_mul(magnus_of_word(u, 4, degree), magnus_of_word(v, 4, degree)));
    }
}

TEST_CASE("degree-1 line is the exponent sum") {
    std::mt19937 rng(11003);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord w = random_free_word(rng, 4, 10);
        MagnusSeries m = magnus_of_word(w, 4, 2);
        CHECK(m.constant() == 1);
        for (int i = 1; i <= 4; ++i) {
            long long sum = 0;
            for (const FreeLetter& l : w.letters())
                if (l.gen == i)
                    sum += l.exp;
            CHECK(m.linear(i) == sum);
        }
    }
}

TEST_CASE("e_ij_of_word equals the signed pair count") {
    FreeWord w2 = fw({{3, 1}, {4, 1}, {1, 1}, {1, -1}, {3, 1}, {1, 1}, {3, -1}});
    CHECK(e_ij_of_word(w2, 4, 3, 1) == 2);
    CHECK_THROWS_AS(e_ij_of_word(w2, 4, 2, 2), Error);

    std::mt19937 rng(11004);
    for (int trial = 0; trial < 300; ++trial) {
        LinearWord lw_random = [&] {
            std::uniform_int_distribution<std::size_t> len(0, 10);
            std::uniform_int_distribution<int> idx(1, 4);
            std::uniform_int_distribution<int> flip(0, 1);
            std::vector<Letter> v;
            std::size_t l = len(rng);
            for (std::size_t p = 0; p < l; ++p)
                v.push_back(Letter{idx(rng), flip(rng) ? 1 : -1});
            return LinearWord(std::move(v));
        }();
        FreeWord w = to_free_word(lw_random);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                if (i != j)
                    CHECK(e_ij_of_word(w, 4, i, j) == signed_pair_count(lw_random, i, j));
    }
}

TEST_CASE("words in the third lower central term have vanishing pair data") {
    std::mt19937 rng(11005);
    for (int trial = 0; trial < 50; ++trial) {
        FreeWord x = random_free_word(rng, 3, 3);
        FreeWord y = random_free_word(rng, 3, 3);
        FreeWord z = random_free_word(rng, 3, 3);
        FreeWord w = trial % 2 ? commutator(commutator(x, y), z)
                               : commutator(x, commutator(y, z));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j)
                    CHECK(e_ij_of_word(w, 3, i, j) == 0);
    }
}

TEST_CASE("degree-2 conjugation rule") {
    std::mt19937 rng(11006);
    for (int trial = 0; trial < 200; ++trial) {
        FreeWord a = random_free_word(rng, 3, 6);
        FreeWord h = random_free_word(rng, 3, 6);
        MagnusSeries sa = magnus_of_word(a, 3, 2);
        MagnusSeries sh = magnus_of_word(h, 3, 2);
        MagnusSeries shin = magnus_of_word(h.inverse(), 3, 2);
        MagnusSeries conj = magnus_mul(magnus_mul(shin, sa), sh);
        CHECK(conj == magnus_of_word(conjugate(a, h), 3, 2));
        for (int i = 1; i <= 3; ++i) {
            CHECK(conj.linear(i) == sa.linear(i));
            for (int j = 1; j <= 3; ++j)
                CHECK(conj.quadratic(i, j) == sa.quadratic(i, j) +
                                                  sa.linear(i) * sh.linear(j) -
                                                  sh.linear(i) * sa.linear(j));
        }
    }
}

TEST_CASE("f3_equal") {
    FreeWord a = fw({{1, 1}, {2, 1}});
    FreeWord b = fw({{2, 1}, {1, 1}, {1, -1}, {2, -1}, {1, 1}, {2, 1}});
    CHECK(f3_equal(a, b, 2));
    CHECK(!f3_equal(a, fw({{2, 1}, {1, 1}}), 2));

    std::mt19937 rng(11007);
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord u = random_free_word(rng, 3, 8);

        // free insertion of g g^-1
        FreeWord g = random_free_word(rng, 3, 4);
        CHECK(f3_equal(u * g * g.inverse(), u, 3));

        // multiplication by an explicit weight-3 commutator
        FreeWord c3 = commutator(commutator(random_free_word(rng, 3, 3),
                                            random_free_word(rng, 3, 3)),
                                 random_free_word(rng, 3, 3));
        CHECK(f3_equal(u * c3, u, 3));

        // equivalence relation sanity
        FreeWord v = random_free_word(rng, 3, 8);
        CHECK(f3_equal(u, u, 3));
        CHECK(f3_equal(u, v, 3) == f3_equal(v, u, 3));
    }
}

TEST_CASE("commutator calculus identities hold modulo weight three") {
    FreeWord g = commutator(FreeWord::generator(1), FreeWord::generator(2));
    CHECK(commutator_calculus_check(FreeWord::generator(3), g, 3));

    std::mt19937 rng(11008);
    CHECK(commutator_calculus_check(random_free_word(rng, 3, 5), FreeWord(), 3));
    for (int trial = 0; trial < 100; ++trial) {
        FreeWord a = random_free_word(rng, 3, 6);
        FreeWord c = commutator(random_free_word(rng, 3, 4), random_free_word(rng, 3, 4));
        FreeWord d = commutator(random_free_word(rng, 3, 4), random_free_word(rng, 3, 4));
        CHECK(commutator_calculus_check(a, c * d, 3));
    }
}

TEST_CASE("conjugator abelianizations") {
    // first clasp on both sides, positive: everything vanishes
    CComplexData hopf;
    hopf.n = 2;
    hopf.clasps = {{"h", {1, 1}, {2, 1}, +1}};
    CHECK(conjugator_abelianization(hopf, 1, 1) == std::vector<long long>{0, 0});

    // negative first-first clasp
    CComplexData neg;
    neg.n = 3;
    neg.clasps = {{"h", {1, 1}, {2, 1}, -1}};
    CHECK(conjugator_abelianization(neg, 1, 1) == std::vector<long long>{1, -1, 0});
    CHECK(conjugator_abelianization(neg, 2, 1) == std::vector<long long>{-1, 1, 0});

    CComplexData banded = banded_ccomplex();
    for (int k = 1; k <= 4; ++k) {
        SurfaceSystemData s = to_surface_system(banded);
        for (int r = 1; r <= static_cast<int>(s.word(k).size()); ++r)
            CHECK(conjugator_abelianization(banded, k, r) == conjugator_oracle(banded, k, r));
    }

    std::mt19937 rng(11009);
    for (int trial = 0; trial < 60; ++trial) {
        CComplexData c = random_ccomplex(rng, 4, 10);
        SurfaceSystemData s = to_surface_system(c);
        for (int k = 1; k <= 4; ++k)
            for (int r = 1; r <= static_cast<int>(s.word(k).size()); ++r)
                CHECK(conjugator_abelianization(c, k, r) == conjugator_oracle(c, k, r));
    }

    CHECK_THROWS_AS(conjugator_abelianization(hopf, 1, 2), Error);
}

TEST_CASE("longitude words") {
    CComplexData empty;
    empty.n = 3;
    for (int k = 1; k <= 3; ++k)
        CHECK(longitude_word(empty, k).word.empty());

    CComplexData hopf;
    hopf.n = 2;
    hopf.clasps = {{"h", {1, 1}, {2, 1}, +1}};
    CHECK(to_string(longitude_word(hopf, 1).word) == "mu2");
    CHECK(to_string(longitude_word(hopf, 2).word) == "mu1");

    // abelianization of l_K is the linking row of K
    std::mt19937 rng(11010);
    for (int trial = 0; trial < 60; ++trial) {
        CComplexData c = random_ccomplex(rng, 4, 10);
        SurfaceSystemData s = to_surface_system(c);
        LinkingMatrix lk = linking_matrix(s);
        for (int k = 1; k <= 4; ++k) {
            MagnusSeries m = magnus_of_word(longitude_word(c, k).word, 4, 2);
            for (int i = 1; i <= 4; ++i)
                CHECK(m.linear(i) == (i == k ? 0 : lk.at(k, i)));
        }
    }
}

TEST_CASE("longitude pair data matches the clasp-word counts") {
    CComplexData banded = banded_ccomplex();
    CHECK(e_ij_of_word(longitude_word(banded, 3).word, 4, 1, 2) == 3);

    LongitudeCheckReport report = check_longitude_identity(banded);
    CHECK(report.all_match);
    CHECK(report.entries.size() == 24);

    CComplexData empty;
    empty.n = 3;
    CHECK(check_longitude_identity(empty).all_match);

    std::mt19937 rng(11011);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        CComplexData c = random_ccomplex(rng, n, 12);
        CHECK(check_longitude_identity(c).all_match);
    }
}

TEST_CASE("longitude pair data is independent of the pairing") {
    std::mt19937 rng(11012);
    CComplexData banded = banded_ccomplex();
    for (int trial = 0; trial < 5; ++trial) {
        CComplexData re = repair_randomly(rng, banded);
        CHECK(to_surface_system(re).words == to_surface_system(banded).words);
        for (int k = 1; k <= 4; ++k) {
            FreeWord a = longitude_word(banded, k).word;
            FreeWord b = longitude_word(re, k).word;
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j)
                    if (i != j)
                        CHECK(e_ij_of_word(a, 4, i, j) == e_ij_of_word(b, 4, i, j));
        }
    }
}

TEST_CASE("presentation text") {
    CComplexData unlink;
    unlink.n = 3;
    std::string p = emit_presentation(unlink, 3);
    CHECK(p.find("generators: mu1 mu2 mu3") != std::string::npos);
    CHECK(p.find("relator: [mu1, 1]") != std::string::npos);
    CHECK(p.find("relator: [mu3, 1]") != std::string::npos);
    CHECK(p.find("+ all commutators of weight 3") != std::string::npos);

    CComplexData hopf;
    hopf.n = 2;
    hopf.clasps = {{"h", {1, 1}, {2, 1}, +1}};
    std::string hp = emit_presentation(hopf, 3);
    CHECK(hp.find("relator: [mu1, mu2]") != std::string::npos);
    CHECK(hp.find("relator: [mu2, mu1]") != std::string::npos);

    CHECK_THROWS_AS(emit_presentation(hopf, 1), Error);
}
