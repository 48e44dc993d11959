#pragma once

#include <map>
#include <string>
#include <vector>

#include "milnor/wedge.hpp"
#include "milnor/words.hpp"

namespace milnor {

/// One end of a clasp: the component it lies on and its position in the
/// intersection order along that component, counted from the base point.
struct ClaspEndpoint {
    int component = 1;
    int rank = 1;

    bool operator==(const ClaspEndpoint&) const = default;
};

/// A double-point arc joining two components; both endpoints carry the
/// common sign of the clasp.
struct Clasp {
    std::string id;
    ClaspEndpoint a, b;
    int sign = +1;

    bool operator==(const Clasp&) const = default;
};

struct CComplexData {
    int n = 0;
    std::vector<Clasp> clasps;

    bool operator==(const CComplexData&) const = default;
};

struct Diagnostic {
    std::string code;
    std::string message;
};

std::vector<Diagnostic> validate_ccomplex(const CComplexData& c);

/// Symmetric pairwise linking numbers, zero diagonal, 1-based access.
class LinkingMatrix {
public:
    LinkingMatrix() = default;
    explicit LinkingMatrix(int n);

    int components() const { return n_; }
    long long at(int i, int j) const;
    void set(int i, int j, long long v);  // sets both (i,j) and (j,i)

    bool operator==(const LinkingMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<long long> e_;
};

/// General combinatorial presentation: one cyclic intersection word per
/// component plus a table of signed triple-point counts on increasing
/// triples. Zero counts are not stored.
struct SurfaceSystemData {
    int n = 0;
    std::vector<CyclicWord> words;  // words[k-1] belongs to component k
    std::map<std::array<int, 3>, long long> triples;

    const CyclicWord& word(int k) const;
    CyclicWord& word(int k);

    bool operator==(const SurfaceSystemData&) const = default;
};

enum class ValidationMode { General, Strict };

std::vector<Diagnostic> validate_system(const SurfaceSystemData& s,
                                        ValidationMode mode = ValidationMode::General);

/// Throws with joined diagnostics when validation fails.
void require_valid(const SurfaceSystemData& s, ValidationMode mode = ValidationMode::General);
void require_valid(const CComplexData& c);

/// Forgets the clasp pairing: words read off from endpoint ranks and clasp
/// signs, all triple counts zero.
SurfaceSystemData to_surface_system(const CComplexData& c);

LinkingMatrix linking_matrix(const SurfaceSystemData& s);

/// Raw count m_ijk = e_ij(w_k) + e_jk(w_i) + e_ki(w_j) for distinct i,j,k.
/// Cyclic in (i,j,k) but not skew-symmetric.
long long m_count(const SurfaceSystemData& s, int i, int j, int k);

WedgeVector m_vector(const SurfaceSystemData& s);
WedgeVector t_vector(const SurfaceSystemData& s);

struct MoveRecord {
    enum class Kind { Finger, Tube };
    Kind kind = Kind::Finger;
    int component = 0;
    std::size_t position = 0;
    WedgeVector delta_t;  // zero for tube moves
};

/// Moves the base point of one component's word; all other data unchanged.
SurfaceSystemData rotate_word(const SurfaceSystemData& s, int k, long long steps);

/// Swaps the two letters at positions p, p+1 of word k (distinct indices
/// a != b required) and books the created triple point: t += m(after) -
/// m(before), so m - t is unchanged. The pair must not straddle the base
/// point; rotate first if it does.
SurfaceSystemData finger_move(const SurfaceSystemData& s, int k, std::size_t pos);
SurfaceSystemData finger_move(const SurfaceSystemData& s, int k, std::size_t pos,
                              MoveRecord* record);

/// Deletes an adjacent cancelling pair from word k; m and t are unchanged.
/// The pair must not straddle the base point.
SurfaceSystemData tube_move(const SurfaceSystemData& s, int k, std::size_t pos);

/// Adds a parallel torus around component `around` to the surface of
/// `target`: words fixed, t shifted by -orientation * v_{target,around}.
SurfaceSystemData torus_sum(const SurfaceSystemData& s, int target, int around, int orientation);

struct OrderedFormResult {
    SurfaceSystemData system;
    std::vector<MoveRecord> log;
};

/// Sorts every word into the block form 1^{lk(1,k)} ... n^{lk(n,k)} using
/// only finger and tube moves (stable bubble sort by index, cancelling
/// inverse pairs eagerly after each pass). m - t is preserved exactly.
OrderedFormResult ordered_form(const SurfaceSystemData& s);

}  // namespace milnor
