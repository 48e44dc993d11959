#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "milnor/error.hpp"

namespace milnor {

/// A signed letter i^e: component index i >= 1 with sign e = +-1.
struct Letter {
    int index = 1;
    int sign = +1;

    bool operator==(const Letter&) const = default;
};

Letter make_letter(int index, int sign);

/// A finite word in signed letters. Unreduced: repetitions and mixed signs
/// stay as written; there is no free-group cancellation.
class LinearWord {
public:
    LinearWord() = default;
    explicit LinearWord(std::vector<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    bool operator==(const LinearWord&) const = default;

private:
    std::vector<Letter> letters_;
};

/// e_r: signed number of occurrences of the letter r.
long long signed_count(const LinearWord& w, int r);

/// e_rs: sum of eps_i * eps_j over index pairs i < j with w[i] = r^{+-1} and
/// w[j] = s^{+-1}. Defined for r = s as well, but the relation
/// e_rs + e_sr = e_r e_s only holds for r != s.
long long signed_pair_count(const LinearWord& w, int r, int s);

LinearWord concat(const LinearWord& u, const LinearWord& v);

/// A cyclic word with a marked reading start. The letter sequence is stored
/// in a fixed order; base_offset is the storage position where reading
/// begins. Rotation moves the mark, never the letters.
class CyclicWord {
public:
    CyclicWord() = default;
    explicit CyclicWord(std::vector<Letter> letters, std::size_t base_offset = 0);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t base_offset() const { return base_offset_; }
    const std::vector<Letter>& storage() const { return letters_; }

    /// Letter at cyclic position pos, counted from the reading start.
    const Letter& at_cyclic(std::size_t pos) const;

    /// The linear word read from the base point in the positive direction.
    LinearWord linearize() const;

    bool operator==(const CyclicWord&) const = default;

private:
    std::vector<Letter> letters_;
    std::size_t base_offset_ = 0;
};

CyclicWord rotate(const CyclicWord& w, long long steps);

/// Removes the inverse pair at cyclic positions (pos, pos+1 mod len). The
/// two letters must share an index and have opposite signs; the base offset
/// is adjusted so it still marks the same surviving gap.
CyclicWord cancel_adjacent_inverse(const CyclicWord& w, std::size_t pos);

/// True iff one letter sequence is a rotation of the other.
bool cyclically_equivalent(const CyclicWord& a, const CyclicWord& b);

/// Text syntax: a positive letter is its decimal index ("3"), a negative
/// letter carries a '-' suffix ("3-"); words are whitespace-separated.
std::string to_string(const Letter& l);
std::string to_string(const LinearWord& w);
Letter parse_letter(const std::string& token);

}  // namespace milnor
