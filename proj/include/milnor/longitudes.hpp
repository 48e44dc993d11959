#pragma once

#include <string>
#include <vector>

#include "milnor/magnus.hpp"
#include "milnor/system.hpp"

namespace milnor {

/// Resolved view of the clasp at rank r on component K.
struct ClaspAttachment {
    int partner = 0;       // component at the far end
    int partner_rank = 0;  // rank of the far endpoint on its component
    int sign = +1;
};

ClaspAttachment clasp_at(const CComplexData& c, int component, int rank);

/// Exponent-sum vector of the word conjugating the r-th meridian factor of
/// component K's longitude: signed partners before rank r on K, minus those
/// before the partner rank on J, plus e_K - e_J for a negative clasp.
std::vector<long long> conjugator_abelianization(const CComplexData& c, int component, int rank);

/// Longitude of one component modulo length-3 commutators, assembled from
/// conjugated meridians. Conjugators are realized canonically as
/// mu_1^{c_1} ... mu_n^{c_n}; the genus loop (a length-3 commutator) is
/// dropped.
struct ComponentLongitude {
    struct Factor {
        int partner = 0;
        int sign = +1;
        std::vector<long long> conjugator;  // abelianization in Z^n
    };
    int component = 0;
    std::vector<Factor> factors;  // rank order 1..m_K
    FreeWord word;
};

ComponentLongitude longitude_word(const CComplexData& c, int component);

/// Cross-check e_ij(l_k) = m_ijk - lk(k,j) * lk(i,j) over all ordered
/// distinct triples.
struct LongitudeCheckReport {
    struct Entry {
        int i = 0, j = 0, k = 0;
        long long expansion = 0;  // e_ij(l_k)
        long long expected = 0;   // m_ijk - lk(k,j) lk(i,j)
    };
    std::vector<Entry> entries;
    bool all_match = true;
};

LongitudeCheckReport check_longitude_identity(const CComplexData& c);

/// Presentation of the link group modulo the k-th lower central series
/// subgroup: generators mu_i, one relator [mu_i, l_i] per component, plus
/// all commutators of weight k. Exact for k <= 4.
std::string emit_presentation(const CComplexData& c, int k);

}  // namespace milnor
