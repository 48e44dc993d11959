#include "milnor/magnus.hpp"

#include <algorithm>
#include <sstream>

namespace milnor {

FreeWord::FreeWord(std::vector<FreeLetter> letters) : letters_(std::move(letters)) {
    for (const FreeLetter& l : letters_) {
        if (l.gen < 1)
            throw Error("generator index must be >= 1");
        if (l.exp != 1 && l.exp != -1)
            throw Error("generator exponent must be +1 or -1");
    }
}

FreeWord FreeWord::generator(int gen, int exp) {
    return FreeWord({FreeLetter{gen, exp}});
}

FreeWord FreeWord::inverse() const {
    std::vector<FreeLetter> out(letters_.rbegin(), letters_.rend());
    for (FreeLetter& l : out)
        l.exp = -l.exp;
    return FreeWord(std::move(out));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<FreeLetter> out = letters_;
    out.insert(out.end(), o.letters_.begin(), o.letters_.end());
    return FreeWord(std::move(out));
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) {
    return a.inverse() * b.inverse() * a * b;
}

FreeWord conjugate(const FreeWord& a, const FreeWord& g) {
    return g.inverse() * a * g;
}

FreeWord to_free_word(const LinearWord& w) {
    std::vector<FreeLetter> out;
    out.reserve(w.size());
    for (const Letter& l : w.letters())
        out.push_back(FreeLetter{l.index, l.sign});
    return FreeWord(std::move(out));
}

MagnusSeries::MagnusSeries(int n, int degree) : n_(n), degree_(degree), c0_(0) {
    if (n < 1)
        throw Error("magnus series needs at least one generator");
    if (degree != 2 && degree != 3)
        throw Error("magnus truncation degree must be 2 or 3");
    std::size_t m = static_cast<std::size_t>(n);
    deg1_.assign(m, 0);
    deg2_.assign(m * m, 0);
    if (degree == 3)
        deg3_.assign(m * m * m, 0);
}

MagnusSeries MagnusSeries::one(int n, int degree) {
    MagnusSeries s(n, degree);
    s.c0_ = 1;
    return s;
}

namespace {

std::size_t idx1(int n, int i) {
    if (i < 1 || i > n)
        throw Error("generator index out of range");
    return static_cast<std::size_t>(i - 1);
}

}  // namespace

long long MagnusSeries::linear(int i) const { return deg1_[idx1(n_, i)]; }

long long MagnusSeries::quadratic(int i, int j) const {
    return deg2_[idx1(n_, i) * n_ + idx1(n_, j)];
}

long long MagnusSeries::cubic(int i, int j, int k) const {
    if (degree_ < 3)
        throw Error("series truncated below degree 3");
    return deg3_[(idx1(n_, i) * n_ + idx1(n_, j)) * n_ + idx1(n_, k)];
}

long long& MagnusSeries::linear_ref(int i) { return deg1_[idx1(n_, i)]; }

long long& MagnusSeries::quadratic_ref(int i, int j) {
    return deg2_[idx1(n_, i) * n_ + idx1(n_, j)];
}

long long& MagnusSeries::cubic_ref(int i, int j, int k) {
    if (degree_ < 3)
        throw Error("series truncated below degree 3");
    return deg3_[(idx1(n_, i) * n_ + idx1(n_, j)) * n_ + idx1(n_, k)];
}

MagnusSeries magnus_mul(const MagnusSeries& a, const MagnusSeries& b) {
    if (a.n_ != b.n_ || a.degree_ != b.degree_)
        throw Error("magnus product shape mismatch");
    int n = a.n_;
    MagnusSeries out(n, a.degree_);
    out.c0_ = a.c0_ * b.c0_;
    for (int i = 1; i <= n; ++i)
        out.linear_ref(i) = a.c0_ * b.linear(i) + a.linear(i) * b.c0_;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.quadratic_ref(i, j) = a.c0_ * b.quadratic(i, j) + a.linear(i) * b.linear(j) +
                                      a.quadratic(i, j) * b.c0_;
    if (a.degree_ == 3)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    out.cubic_ref(i, j, k) = a.c0_ * b.cubic(i, j, k) +
                                             a.linear(i) * b.quadratic(j, k) +
                                             a.quadratic(i, j) * b.linear(k) +
                                             a.cubic(i, j, k) * b.c0_;
    return out;
}

MagnusSeries magnus_of_word(const FreeWord& w, int n, int degree) {
    MagnusSeries acc = MagnusSeries::one(n, degree);
    for (const FreeLetter& l : w.letters()) {
        MagnusSeries g = MagnusSeries::one(n, degree);
        idx1(n, l.gen);
        if (l.exp == +1) {
            g.linear_ref(l.gen) = 1;
        } else {
            // 1 - X + X^2 - X^3 + ..., truncated
            g.linear_ref(l.gen) = -1;
            g.quadratic_ref(l.gen, l.gen) = 1;
            if (degree >= 3)
                g.cubic_ref(l.gen, l.gen, l.gen) = -1;
        }
        acc = magnus_mul(acc, g);
    }
    return acc;
}

long long e_ij_of_word(const FreeWord& w, int n, int i, int j) {
    if (i == j)
        throw Error("e_ij needs distinct indices");
    idx1(n, i);
    idx1(n, j);
    return magnus_of_word(w, n, 2).quadratic(i, j);
}

bool f3_equal(const FreeWord& a, const FreeWord& b, int n) {
    return magnus_of_word(a, n, 2) == magnus_of_word(b, n, 2);
}

bool commutator_calculus_check(const FreeWord& a, const FreeWord& g, int n) {
    if (!f3_equal(conjugate(a, g), a, n))
        return false;
    for (int i = 1; i <= n; ++i) {
        FreeWord b = FreeWord::generator(i);
        if (!f3_equal(commutator(a, g * b), commutator(a, b), n))
            return false;
    }
    return true;
}

std::string to_string(const FreeWord& w) {
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p)
            out += ' ';
        out += "mu" + std::to_string(w.letters()[p].gen);
        if (w.letters()[p].exp < 0)
            out += "^-1";
    }
    return out;
}

std::string to_string(const MagnusSeries& m) {
    std::ostringstream os;
    bool any = false;
    auto term = [&](long long c, const std::string& mono) {
        if (c == 0)
            return;
        if (!any) {
            if (c < 0)
                os << "- ";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1 || mono.empty())
            os << mag;
        if (!mono.empty() && mag != 1)
            os << ' ';
        os << mono;
        any = true;
    };
    term(m.constant(), "");
    int n = m.generators();
    for (int i = 1; i <= n; ++i)
        term(m.linear(i), "X" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            term(m.quadratic(i, j), "X" + std::to_string(i) + "X" + std::to_string(j));
    if (m.degree() >= 3)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    term(m.cubic(i, j, k), "X" + std::to_string(i) + "X" + std::to_string(j) +
                                               "X" + std::to_string(k));
    if (!any)
        os << "0";
    return os.str();
}

}  // namespace milnor
