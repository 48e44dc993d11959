#include "milnor/words.hpp"

#include <algorithm>

namespace milnor {

Letter make_letter(int index, int sign) {
    if (index < 1)
        throw Error("letter index must be >= 1, got " + std::to_string(index));
    if (sign != 1 && sign != -1)
        throw Error("letter sign must be +1 or -1");
    return Letter{index, sign};
}

LinearWord::LinearWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const Letter& l : letters_)
        make_letter(l.index, l.sign);
}

long long signed_count(const LinearWord& w, int r) {
    long long e = 0;
    for (const Letter& l : w.letters())
        if (l.index == r)
            e += l.sign;
    return e;
}

long long signed_pair_count(const LinearWord& w, int r, int s) {
    // Running sum of signs of r-letters seen so far; each s-letter closes
    // all pairs opened before it.
    long long open_r = 0;
    long long e = 0;
    for (const Letter& l : w.letters()) {
        if (l.index == s)
            e += open_r * l.sign;
        if (l.index == r)
            open_r += l.sign;
    }
    return e;
}

LinearWord concat(const LinearWord& u, const LinearWord& v) {
    std::vector<Letter> out = u.letters();
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return LinearWord(std::move(out));
}

CyclicWord::CyclicWord(std::vector<Letter> letters, std::size_t base_offset)
    : letters_(std::move(letters)), base_offset_(base_offset) {
    for (const Letter& l : letters_)
        make_letter(l.index, l.sign);
    if (letters_.empty()) {
        if (base_offset_ != 0)
            throw Error("base offset of an empty cyclic word must be 0");
    } else if (base_offset_ >= letters_.size()) {
        throw Error("base offset out of range");
    }
}

const Letter& CyclicWord::at_cyclic(std::size_t pos) const {
    if (letters_.empty())
        throw Error("cyclic position on empty word");
    return letters_[(base_offset_ + pos) % letters_.size()];
}

LinearWord CyclicWord::linearize() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (std::size_t p = 0; p < letters_.size(); ++p)
        out.push_back(at_cyclic(p));
    return LinearWord(std::move(out));
}

CyclicWord rotate(const CyclicWord& w, long long steps) {
    if (w.empty())
        return w;
    long long len = static_cast<long long>(w.size());
    long long off = (static_cast<long long>(w.base_offset()) + steps % len + len) % len;
    return CyclicWord(w.storage(), static_cast<std::size_t>(off));
}

CyclicWord cancel_adjacent_inverse(const CyclicWord& w, std::size_t pos) {
    if (w.size() < 2)
        throw Error("not an inverse pair: word too short");
    std::size_t len = w.size();
    std::size_t i1 = (w.base_offset() + pos) % len;
    std::size_t i2 = (w.base_offset() + pos + 1) % len;
    if (i1 == i2)
        throw Error("not an inverse pair: positions coincide");
    const Letter& a = w.storage()[i1];
    const Letter& b = w.storage()[i2];
    if (a.index != b.index || a.sign == b.sign)
        throw Error("not an inverse pair at position " + std::to_string(pos));

    std::vector<Letter> out;
    out.reserve(len - 2);
    std::size_t removed_before_offset = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (i == i1 || i == i2) {
            if (i < w.base_offset())
                ++removed_before_offset;
            continue;
        }
        out.push_back(w.storage()[i]);
    }
    std::size_t off = w.base_offset() - removed_before_offset;
    if (out.empty())
        off = 0;
    else
        off %= out.size();
    return CyclicWord(std::move(out), off);
}

bool cyclically_equivalent(const CyclicWord& a, const CyclicWord& b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    std::size_t len = a.size();
    for (std::size_t shift = 0; shift < len; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < len && match; ++i)
            match = a.storage()[i] == b.storage()[(i + shift) % len];
        if (match)
            return true;
    }
    return false;
}

std::string to_string(const Letter& l) {
    std::string s = std::to_string(l.index);
    if (l.sign < 0)
        s += '-';
    return s;
}

std::string to_string(const LinearWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(w[i]);
    }
    return out;
}

Letter parse_letter(const std::string& token) {
    if (token.empty())
        throw Error("empty letter token");
    int sign = +1;
    std::string digits = token;
    if (digits.back() == '-') {
        sign = -1;
        digits.pop_back();
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
        throw Error("bad letter token '" + token + "'");
    long long idx = 0;
    for (char c : digits) {
        idx = idx * 10 + (c - '0');
        if (idx > 1000000)
            throw Error("letter index too large in '" + token + "'");
    }
    return make_letter(static_cast<int>(idx), sign);
}

}  // namespace milnor
