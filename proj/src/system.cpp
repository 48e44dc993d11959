#include "milnor/system.hpp"

#include <algorithm>
#include <sstream>

#include "milnor/quotient.hpp"

namespace milnor {

std::vector<Diagnostic> validate_ccomplex(const CComplexData& c) {
    std::vector<Diagnostic> out;
    if (c.n < 1) {
        out.push_back({"component-count", "component count must be >= 1"});
        return out;
    }
    // Ranks on each component must be exactly 1..m_c.
    std::vector<std::vector<std::pair<int, std::string>>> ranks(c.n + 1);
    for (const Clasp& cl : c.clasps) {
        if (cl.sign != 1 && cl.sign != -1)
            out.push_back({"sign", "clasp " + cl.id + ": sign must be + or -"});
        for (const ClaspEndpoint* e : {&cl.a, &cl.b}) {
            if (e->component < 1 || e->component > c.n) {
                out.push_back({"component-range",
                               "clasp " + cl.id + ": component " +
                                   std::to_string(e->component) + " out of range"});
            } else if (e->rank < 1) {
                out.push_back({"rank-range", "clasp " + cl.id + ": rank must be >= 1"});
            } else {
                ranks[e->component].push_back({e->rank, cl.id});
            }
        }
        if (cl.a.component == cl.b.component)
            out.push_back({"self-clasp",
                           "clasp " + cl.id + ": both endpoints on component " +
                               std::to_string(cl.a.component)});
    }
    for (int comp = 1; comp <= c.n; ++comp) {
        auto& rs = ranks[comp];
        std::sort(rs.begin(), rs.end());
        for (std::size_t p = 0; p < rs.size(); ++p) {
            int expected = static_cast<int>(p) + 1;
            if (rs[p].first == expected)
                continue;
            if (p > 0 && rs[p].first == rs[p - 1].first)
                out.push_back({"rank-duplicate",
                               "component " + std::to_string(comp) + ": rank " +
                                   std::to_string(rs[p].first) + " repeated (clasp " +
                                   rs[p].second + ")"});
            else
                out.push_back({"rank-gap",
                               "component " + std::to_string(comp) + ": expected rank " +
                                   std::to_string(expected) + ", found " +
                                   std::to_string(rs[p].first) + " (clasp " + rs[p].second +
                                   ")"});
        }
    }
    return out;
}

LinkingMatrix::LinkingMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0)
        throw Error("negative component count");
}

long long LinkingMatrix::at(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw Error("linking matrix index out of range");
    return e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void LinkingMatrix::set(int i, int j, long long v) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw Error("linking matrix index out of range");
    if (i == j && v != 0)
        throw Error("linking matrix diagonal must stay zero");
    e_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] = v;
    e_[static_cast<std::size_t>(j - 1) * n_ + (i - 1)] = v;
}

const CyclicWord& SurfaceSystemData::word(int k) const {
    if (k < 1 || k > n)
        throw Error("component index out of range");
    return words[static_cast<std::size_t>(k - 1)];
}

CyclicWord& SurfaceSystemData::word(int k) {
    if (k < 1 || k > n)
        throw Error("component index out of range");
    return words[static_cast<std::size_t>(k - 1)];
}

std::vector<Diagnostic> validate_system(const SurfaceSystemData& s, ValidationMode mode) {
    std::vector<Diagnostic> out;
    if (s.n < 1) {
        out.push_back({"component-count", "component count must be >= 1"});
        return out;
    }
    if (s.words.size() != static_cast<std::size_t>(s.n)) {
        out.push_back({"word-count", "expected one word per component"});
        return out;
    }
    for (int k = 1; k <= s.n; ++k) {
        for (const Letter& l : s.word(k).storage()) {
            if (l.index < 1 || l.index > s.n)
                out.push_back({"letter-range",
                               "word " + std::to_string(k) + ": letter index " +
                                   std::to_string(l.index) + " out of range"});
            else if (l.index == k && mode == ValidationMode::Strict)
                out.push_back({"self-letter",
                               "word " + std::to_string(k) + ": letter with its own index"});
        }
    }
    for (const auto& [key, value] : s.triples) {
        auto [i, j, k] = key;
        if (!(1 <= i && i < j && j < k && k <= s.n))
            out.push_back({"triple-key", "triple table key must be strictly increasing and in range"});
        (void)value;
    }
    // lk consistency: e_j(w_i) = e_i(w_j) (both count the (i,j) arcs).
    for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j) {
            long long a = signed_count(s.word(i).linearize(), j);
            long long b = signed_count(s.word(j).linearize(), i);
            if (a != b)
                out.push_back({"linking-consistency",
                               "e_" + std::to_string(j) + "(w_" + std::to_string(i) + ") = " +
                                   std::to_string(a) + " but e_" + std::to_string(i) + "(w_" +
                                   std::to_string(j) + ") = " + std::to_string(b)});
        }
    return out;
}

namespace {

[[noreturn]] void throw_diagnostics(const std::string& what, const std::vector<Diagnostic>& ds) {
    std::ostringstream os;
    os << what << ':';
    for (const Diagnostic& d : ds)
        os << "\n  [" << d.code << "] " << d.message;
    throw Error(os.str());
}

}  // namespace

void require_valid(const SurfaceSystemData& s, ValidationMode mode) {
    auto ds = validate_system(s, mode);
    if (!ds.empty())
        throw_diagnostics("invalid surface system", ds);
}

void require_valid(const CComplexData& c) {
    auto ds = validate_ccomplex(c);
    if (!ds.empty())
        throw_diagnostics("invalid C-complex", ds);
}

SurfaceSystemData to_surface_system(const CComplexData& c) {
    require_valid(c);
    SurfaceSystemData s;
    s.n = c.n;
    std::vector<std::vector<Letter>> letters(c.n + 1);
    for (int comp = 1; comp <= c.n; ++comp) {
        std::size_t m = 0;
        for (const Clasp& cl : c.clasps)
            m += (cl.a.component == comp) + (cl.b.component == comp);
        letters[comp].resize(m);
    }
    for (const Clasp& cl : c.clasps) {
        letters[cl.a.component][cl.a.rank - 1] = Letter{cl.b.component, cl.sign};
        letters[cl.b.component][cl.b.rank - 1] = Letter{cl.a.component, cl.sign};
    }
    for (int comp = 1; comp <= c.n; ++comp)
        s.words.emplace_back(std::move(letters[comp]));
    return s;
}

LinkingMatrix linking_matrix(const SurfaceSystemData& s) {
    require_valid(s);
    LinkingMatrix lk(s.n);
    for (int i = 1; i <= s.n; ++i)
        for (int j = i + 1; j <= s.n; ++j)
            lk.set(i, j, signed_count(s.word(i).linearize(), j));
    return lk;
}

long long m_count(const SurfaceSystemData& s, int i, int j, int k) {
    if (i == j || j == k || i == k)
        throw Error("m_ijk needs three distinct indices");
    return signed_pair_count(s.word(k).linearize(), i, j) +
           signed_pair_count(s.word(i).linearize(), j, k) +
           signed_pair_count(s.word(j).linearize(), k, i);
}

WedgeVector m_vector(const SurfaceSystemData& s) {
    if (s.n < 3)
        throw Error("m vector needs at least three components");
    WedgeVector m(s.n);
    for (const auto& [i, j, k] : all_triples(s.n))
        m.set_sorted(i, j, k, m_count(s, i, j, k));
    return m;
}

WedgeVector t_vector(const SurfaceSystemData& s) {
    if (s.n < 3)
        throw Error("t vector needs at least three components");
    WedgeVector t(s.n);
    for (const auto& [key, value] : s.triples) {
        auto [i, j, k] = key;
        t.set_sorted(i, j, k, value);
    }
    return t;
}

SurfaceSystemData rotate_word(const SurfaceSystemData& s, int k, long long steps) {
    SurfaceSystemData out = s;
    out.word(k) = rotate(out.word(k), steps);
    return out;
}

namespace {

void set_triples_from_wedge(SurfaceSystemData& s, const WedgeVector& t) {
    s.triples.clear();
    for (const auto& [i, j, k] : all_triples(s.n)) {
        long long v = t.at_sorted(i, j, k);
        if (v != 0)
            s.triples[{i, j, k}] = v;
    }
}

// Storage index of cyclic position pos, rejecting the pair that wraps past
// the base gap.
std::size_t interior_pair_index(const CyclicWord& w, std::size_t pos, const char* op) {
    if (w.size() < 2)
        throw Error(std::string(op) + ": word has fewer than two letters");
    if (pos + 1 >= w.size())
        throw Error(std::string(op) + ": pair at position " + std::to_string(pos) +
                    " straddles the base point; rotate the word first");
    return pos;
}

}  // namespace

SurfaceSystemData finger_move(const SurfaceSystemData& s, int k, std::size_t pos) {
    return finger_move(s, k, pos, nullptr);
}

SurfaceSystemData finger_move(const SurfaceSystemData& s, int k, std::size_t pos,
                              MoveRecord* record) {
    const CyclicWord& w = s.word(k);
    std::size_t p = interior_pair_index(w, pos, "finger move");
    Letter a = w.at_cyclic(p);
    Letter b = w.at_cyclic(p + 1);
    if (a.index == b.index)
        throw Error("finger move needs distinct letter indices; use a tube move or reorder elsewhere");

    WedgeVector before = m_vector(s);
    SurfaceSystemData out = s;
    {
        std::vector<Letter> letters = w.storage();
        std::size_t len = letters.size();
        std::swap(letters[(w.base_offset() + p) % len], letters[(w.base_offset() + p + 1) % len]);
        out.word(k) = CyclicWord(std::move(letters), w.base_offset());
    }
    // The created triple point equals the change in m, keeping m - t fixed.
    WedgeVector delta = m_vector(out) - before;
    WedgeVector t = t_vector(s) + delta;
    set_triples_from_wedge(out, t);
    if (record)
        *record = MoveRecord{MoveRecord::Kind::Finger, k, pos, delta};
    return out;
}

SurfaceSystemData tube_move(const SurfaceSystemData& s, int k, std::size_t pos) {
    const CyclicWord& w = s.word(k);
    std::size_t p = interior_pair_index(w, pos, "tube move");
    Letter a = w.at_cyclic(p);
    Letter b = w.at_cyclic(p + 1);
    if (a.index != b.index || a.sign == b.sign)
        throw Error("tube move needs an adjacent pair with equal index and opposite signs");
    SurfaceSystemData out = s;
    out.word(k) = cancel_adjacent_inverse(w, p);
    return out;
}

SurfaceSystemData torus_sum(const SurfaceSystemData& s, int target, int around, int orientation) {
    if (target == around)
        throw Error("torus sum needs distinct target and around components");
    if (orientation != 1 && orientation != -1)
        throw Error("torus sum orientation must be +1 or -1");
    if (s.n < 3)
        throw Error("torus sum needs at least three components");
    LinkingMatrix lk = linking_matrix(s);
    WedgeVector v = indeterminacy_vector(lk, target, around);
    WedgeVector t = t_vector(s);
    for (const auto& [i, j, k] : all_triples(s.n))
        t.set_sorted(i, j, k, t.at_sorted(i, j, k) - orientation * v.at_sorted(i, j, k));
    SurfaceSystemData out = s;
    set_triples_from_wedge(out, t);
    return out;
}

OrderedFormResult ordered_form(const SurfaceSystemData& s) {
    require_valid(s);
    if (s.n < 3)
        throw Error("ordered form needs at least three components");
    OrderedFormResult res;
    res.system = s;
    for (int k = 1; k <= s.n; ++k) {
        bool changed = true;
        std::size_t guard = 0;
        // at most one round per bubble pass plus one per cancelled pair
        const std::size_t limit = 2 * s.word(k).size() + 16;
        while (changed) {
            changed = false;
            if (++guard > limit)
                throw Error("ordered form failed to stabilize");  // unreachable
            // One stable bubble pass by letter index.
            for (std::size_t p = 0; p + 1 < res.system.word(k).size(); ++p) {
                const CyclicWord& w = res.system.word(k);
                if (w.at_cyclic(p).index > w.at_cyclic(p + 1).index) {
                    MoveRecord rec;
                    res.system = finger_move(res.system, k, p, &rec);
                    res.log.push_back(std::move(rec));
                    changed = true;
                }
            }
            // Eagerly cancel adjacent inverse pairs.
            bool cancelled = true;
            while (cancelled) {
                cancelled = false;
                const CyclicWord& w = res.system.word(k);
                for (std::size_t p = 0; p + 1 < w.size(); ++p) {
                    Letter a = w.at_cyclic(p);
                    Letter b = w.at_cyclic(p + 1);
                    if (a.index == b.index && a.sign != b.sign) {
                        res.system = tube_move(res.system, k, p);
                        res.log.push_back(
                            MoveRecord{MoveRecord::Kind::Tube, k, p, WedgeVector(s.n)});
                        cancelled = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace milnor
