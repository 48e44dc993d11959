#pragma once

#include <string>
#include <vector>

#include "milnor/error.hpp"
#include "milnor/words.hpp"

namespace milnor {

/// One meridian generator with exponent +-1.
struct FreeLetter {
    int gen = 1;
    int exp = +1;

    bool operator==(const FreeLetter&) const = default;
};

/// Unreduced word in the free group on mu_1, ..., mu_n.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(std::vector<FreeLetter> letters);
    static FreeWord generator(int gen, int exp = +1);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<FreeLetter>& letters() const { return letters_; }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;
    bool operator==(const FreeWord&) const = default;

private:
    std::vector<FreeLetter> letters_;
};

/// [a, b] = a^-1 b^-1 a b
FreeWord commutator(const FreeWord& a, const FreeWord& b);
/// a^g = g^-1 a g
FreeWord conjugate(const FreeWord& a, const FreeWord& g);

/// Word in signed letters reinterpreted as a free-group word.
FreeWord to_free_word(const LinearWord& w);

/// Truncated Magnus image: a noncommutative polynomial 1 + sum c_i X_i +
/// sum c_ij X_i X_j (+ cubic terms at degree 3). The degree-1 line of a
/// word's image is its exponent-sum vector.
class MagnusSeries {
public:
    MagnusSeries(int n, int degree);  // degree in {2, 3}
    static MagnusSeries one(int n, int degree);

    int generators() const { return n_; }
    int degree() const { return degree_; }

    long long constant() const { return c0_; }
    long long linear(int i) const;
    long long quadratic(int i, int j) const;
    long long cubic(int i, int j, int k) const;

    long long& linear_ref(int i);
    long long& quadratic_ref(int i, int j);
    long long& cubic_ref(int i, int j, int k);

    bool operator==(const MagnusSeries&) const = default;

    friend MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);

private:
    int n_ = 0;
    int degree_ = 2;
    long long c0_ = 1;
    std::vector<long long> deg1_;
    std::vector<long long> deg2_;
    std::vector<long long> deg3_;
};

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b);
MagnusSeries magnus_of_word(const FreeWord& w, int n, int degree);

/// X_iX_j coefficient of the degree-2 expansion; equals the signed pair
/// count of the underlying letter sequence. Requires i != j.
long long e_ij_of_word(const FreeWord& w, int n, int i, int j);

/// Equality in F/F_3, decided by the degree-2 Magnus truncation (the
/// truncated expansion is faithful on the free 2-step nilpotent quotient).
bool f3_equal(const FreeWord& a, const FreeWord& b, int n);

/// Checks a^g = a and [a, g*b] = [a, b] in F/F_3 for g in F_2, with b
/// sweeping the generators.
bool commutator_calculus_check(const FreeWord& a, const FreeWord& g, int n);

/// "mu3^-1 mu1 mu2"; the empty word prints as "1".
std::string to_string(const FreeWord& w);
std::string to_string(const MagnusSeries& m);

}  // namespace milnor
