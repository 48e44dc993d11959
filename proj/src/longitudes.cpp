#include "milnor/longitudes.hpp"

#include <cstdlib>
#include <sstream>

namespace milnor {

ClaspAttachment clasp_at(const CComplexData& c, int component, int rank) {
    for (const Clasp& cl : c.clasps) {
        if (cl.a.component == component && cl.a.rank == rank)
            return ClaspAttachment{cl.b.component, cl.b.rank, cl.sign};
        if (cl.b.component == component && cl.b.rank == rank)
            return ClaspAttachment{cl.a.component, cl.a.rank, cl.sign};
    }
    throw Error("no clasp at component " + std::to_string(component) + " rank " +
                std::to_string(rank));
}

namespace {

int clasp_count(const CComplexData& c, int component) {
    int m = 0;
    for (const Clasp& cl : c.clasps)
        m += (cl.a.component == component) + (cl.b.component == component);
    return m;
}

}  // namespace

std::vector<long long> conjugator_abelianization(const CComplexData& c, int component, int rank) {
    require_valid(c);
    if (rank < 1 || rank > clasp_count(c, component))
        throw Error("rank out of range for component " + std::to_string(component));
    ClaspAttachment at = clasp_at(c, component, rank);
    std::vector<long long> v(static_cast<std::size_t>(c.n), 0);
    for (int q = 1; q < rank; ++q) {
        ClaspAttachment prev = clasp_at(c, component, q);
        v[prev.partner - 1] += prev.sign;
    }
    for (int q = 1; q < at.partner_rank; ++q) {
        ClaspAttachment prev = clasp_at(c, at.partner, q);
        v[prev.partner - 1] -= prev.sign;
    }
    if (at.sign < 0) {
        v[component - 1] += 1;
        v[at.partner - 1] -= 1;
    }
    return v;
}

namespace {

FreeWord realize_abelianization(const std::vector<long long>& v) {
    std::vector<FreeLetter> letters;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int exp = v[i] >= 0 ? +1 : -1;
        for (long long r = 0; r < std::llabs(v[i]); ++r)
            letters.push_back(FreeLetter{static_cast<int>(i + 1), exp});
    }
    return FreeWord(std::move(letters));
}

}  // namespace

ComponentLongitude longitude_word(const CComplexData& c, int component) {
    require_valid(c);
    if (c.n < 2)
        throw Error("longitudes need at least two components");
    if (component < 1 || component > c.n)
        throw Error("component index out of range");

    ComponentLongitude out;
    out.component = component;
    int m = clasp_count(c, component);
    for (int r = 1; r <= m; ++r) {
        ClaspAttachment at = clasp_at(c, component, r);
        out.factors.push_back(ComponentLongitude::Factor{
            at.partner, at.sign, conjugator_abelianization(c, component, r)});
    }
    // Factors multiply top rank first; each is h * mu_J^eps * h^-1.
    FreeWord word;
    for (int r = m; r >= 1; --r) {
        const auto& f = out.factors[static_cast<std::size_t>(r - 1)];
        FreeWord h = realize_abelianization(f.conjugator);
        word = word * (h * FreeWord::generator(f.partner, f.sign) * h.inverse());
    }
    out.word = std::move(word);
    return out;
}

LongitudeCheckReport check_longitude_identity(const CComplexData& c) {
    require_valid(c);
    if (c.n < 3)
        throw Error("longitude identity check needs at least three components");
    SurfaceSystemData s = to_surface_system(c);
    LinkingMatrix lk = linking_matrix(s);

    std::vector<FreeWord> ell(static_cast<std::size_t>(c.n));
    for (int k = 1; k <= c.n; ++k)
        ell[k - 1] = longitude_word(c, k).word;

    LongitudeCheckReport report;
    for (int i = 1; i <= c.n; ++i)
        for (int j = 1; j <= c.n; ++j)
            for (int k = 1; k <= c.n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                LongitudeCheckReport::Entry e;
                e.i = i;
                e.j = j;
                e.k = k;
                e.expansion = e_ij_of_word(ell[k - 1], c.n, i, j);
                e.expected = m_count(s, i, j, k) - lk.at(k, j) * lk.at(i, j);
                if (e.expansion != e.expected)
                    report.all_match = false;
                report.entries.push_back(e);
            }
    return report;
}

std::string emit_presentation(const CComplexData& c, int k) {
    if (k < 2)
        throw Error("presentation needs k >= 2");
    require_valid(c);
    std::ostringstream os;
    os << "generators:";
    for (int i = 1; i <= c.n; ++i)
        os << " mu" << i;
    os << '\n';
    os << "# longitude words are exact modulo length-3 commutators;"
          " the genus loop of each surface is omitted\n";
    for (int i = 1; i <= c.n; ++i) {
        ComponentLongitude l = longitude_word(c, i);
        os << "relator: [mu" << i << ", " << to_string(l.word) << "]\n";
    }
    os << "+ all commutators of weight " << k << '\n';
    return os.str();
}

}  // namespace milnor
