// Command-line front end: computes refined triple-linking invariants of
// links presented by clasp-word data, compares them, normalizes words,
// and prints longitude words and nilpotent-quotient presentations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "milnor/linkfile.hpp"
#include "milnor/longitudes.hpp"
#include "milnor/quotient.hpp"

namespace {

constexpr int kExitEqual = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitIncomparable = 4;

struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        throw milnor::Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

milnor::LinkRecord load_link(const std::string& path, const std::string& name) {
    auto records = milnor::parse_link_file(slurp(path));
    const milnor::LinkRecord* rec = milnor::find_link(records, name);
    if (!rec)
        throw NotFound("no link named '" + name + "' in " + path);
    return *rec;
}

milnor::SurfaceSystemData checked_system(const milnor::LinkRecord& rec, bool strict) {
    milnor::SurfaceSystemData s = rec.system();
    auto mode = strict ? milnor::ValidationMode::Strict : milnor::ValidationMode::General;
    auto ds = milnor::validate_system(s, mode);
    if (!ds.empty()) {
        std::ostringstream os;
        os << "link '" << rec.name << "' is invalid:";
        for (const auto& d : ds)
            os << "\n  [" << d.code << "] " << d.message;
        throw milnor::Error(os.str());
    }
    return s;
}

int run_invariant(const std::string& path, const std::string& name, bool strict,
                  const std::string& format) {
    milnor::LinkRecord rec = load_link(path, name);
    milnor::SurfaceSystemData s = checked_system(rec, strict);
    auto fmt = format == "tsv" ? milnor::ReportFormat::Tsv : milnor::ReportFormat::Plain;
    std::cout << milnor::invariant_report(s, rec.name, fmt);
    return kExitEqual;
}

int run_compare(const std::string& path_a, const std::string& name_a,
                const std::string& path_b, const std::string& name_b, bool strict) {
    milnor::SurfaceSystemData a = checked_system(load_link(path_a, name_a), strict);
    milnor::SurfaceSystemData b = checked_system(load_link(path_b, name_b), strict);
    milnor::MilnorClass ca = milnor::total_invariant(a);
    milnor::MilnorClass cb = milnor::total_invariant(b);
    switch (milnor::compare_invariants(ca, cb)) {
        case milnor::Comparability::Incomparable:
            std::cout << "INCOMPARABLE (linking numbers differ)\n";
            return kExitIncomparable;
        case milnor::Comparability::Equal:
            std::cout << "EQUAL in M\n";
            return kExitEqual;
        case milnor::Comparability::Distinct:
            std::cout << "DISTINCT in M\n";
            // a separating free functional, when one exists
            {
                auto fs = ca.quotient().free_functionals();
                for (const auto& f : fs) {
                    milnor::Int va = 0, vb = 0;
                    for (std::size_t p = 0; p < f.size(); ++p) {
                        va += f[p] * ca.representative()[p];
                        vb += f[p] * cb.representative()[p];
                    }
                    if (va != vb) {
                        std::cout << "witness functional value: " << va.get_str() << " vs "
                                  << vb.get_str() << '\n';
                        break;
                    }
                }
            }
            return kExitDistinct;
    }
    return kExitInvalid;
}

int run_normalize(const std::string& path, const std::string& name, bool strict) {
    milnor::LinkRecord rec = load_link(path, name);
    milnor::SurfaceSystemData s = checked_system(rec, strict);
    milnor::OrderedFormResult res = milnor::ordered_form(s);
    std::cout << "link " << rec.name << '\n';
    std::cout << "components " << res.system.n << '\n';
    for (int k = 1; k <= res.system.n; ++k) {
        std::cout << "word " << k << ":";
        if (!res.system.word(k).empty())
            std::cout << ' ' << milnor::to_string(res.system.word(k).linearize());
        std::cout << '\n';
    }
    milnor::WedgeVector t = milnor::t_vector(res.system);
    auto triples = milnor::all_triples(res.system.n);
    for (std::size_t p = 0; p < triples.size(); ++p) {
        auto [i, j, k] = triples[p];
        std::cout << "t[" << i << ',' << j << ',' << k << "] = " << t.raw()[p] << '\n';
    }
    std::cout << "moves: " << res.log.size() << '\n';
    for (const milnor::MoveRecord& mv : res.log) {
        if (mv.kind == milnor::MoveRecord::Kind::Finger) {
            std::cout << "finger " << mv.component << " @" << mv.position;
            bool any = false;
            for (std::size_t p = 0; p < triples.size(); ++p) {
                if (mv.delta_t.raw()[p] == 0)
                    continue;
                auto [i, j, k] = triples[p];
                std::cout << " dt[" << i << ',' << j << ',' << k
                          << "]=" << (mv.delta_t.raw()[p] > 0 ? "+" : "")
                          << mv.delta_t.raw()[p];
                any = true;
            }
            if (!any)
                std::cout << " dt=0";
            std::cout << '\n';
        } else {
            std::cout << "tube " << mv.component << " @" << mv.position << " dt=0\n";
        }
    }
    return kExitEqual;
}

int run_longitudes(const std::string& path, const std::string& name, int degree) {
    milnor::LinkRecord rec = load_link(path, name);
    if (!rec.is_ccomplex())
        throw milnor::Error("link '" + name + "' has no clasp presentation; longitudes need one");
    const milnor::CComplexData& c = rec.ccomplex();
    milnor::require_valid(c);
    std::cout << "link " << rec.name << '\n';
    for (int k = 1; k <= c.n; ++k) {
        milnor::ComponentLongitude l = milnor::longitude_word(c, k);
        std::cout << "l_" << k << " = " << milnor::to_string(l.word) << '\n';
        std::cout << "magnus(l_" << k << ", degree " << degree
                  << ") = " << milnor::to_string(milnor::magnus_of_word(l.word, c.n, degree))
                  << '\n';
    }
    if (c.n >= 3) {
        milnor::LongitudeCheckReport report = milnor::check_longitude_identity(c);
        std::cout << "identity e_ij(l_k) = m_ijk - lk(k,j)*lk(i,j): "
                  << (report.all_match ? "PASS" : "FAIL") << " (" << report.entries.size()
                  << " triples)\n";
        if (!report.all_match) {
            for (const auto& e : report.entries)
                if (e.expansion != e.expected)
                    std::cout << "  (" << e.i << ',' << e.j << ',' << e.k
                              << "): " << e.expansion << " != " << e.expected << '\n';
            return kExitDistinct;
        }
    }
    return kExitEqual;
}

int run_present(const std::string& path, const std::string& name, int k) {
    milnor::LinkRecord rec = load_link(path, name);
    if (!rec.is_ccomplex())
        throw milnor::Error("link '" + name + "' has no clasp presentation");
    std::cout << milnor::emit_presentation(rec.ccomplex(), k);
    return kExitEqual;
}

int run_quotient(int n, const std::string& lk_kind) {
    milnor::LinkingMatrix lk(n);
    if (lk_kind == "ones") {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                lk.set(i, j, 1);
    } else if (lk_kind != "zero") {
        throw milnor::Error("--lk must be 'ones' or 'zero'");
    }
    milnor::TotalMilnorQuotient q(n, lk);
    std::cout << milnor::structure_to_string(q.structure()) << '\n';
    return kExitEqual;
}

int run_realize(long long m, const std::string& out_path) {
    milnor::LinkRecord rec;
    rec.name = "L" + std::to_string(m);
    rec.body = milnor::realize_family(m);
    std::string text = milnor::serialize(std::vector<milnor::LinkRecord>{rec});
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out.good())
            throw milnor::Error("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitEqual;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"refined triple linking numbers from clasp-word data"};
    app.require_subcommand(1);

    std::string file_a, name_a, file_b, name_b;
    std::string format = "plain";
    std::string lk_kind = "zero";
    std::string out_path;
    bool strict = false;
    int degree = 2;
    int weight = 3;
    int n = 3;
    long long m = 0;

    CLI::App* invariant = app.add_subcommand("invariant", "linking matrix, m, t, and the invariant");
    invariant->add_option("file", file_a)->required();
    invariant->add_option("name", name_a)->required();
    invariant->add_option("--format", format)->check(CLI::IsMember({"plain", "tsv"}));
    invariant->add_flag("--strict", strict, "forbid self-letters");

    CLI::App* compare = app.add_subcommand("compare", "decide equality in the total quotient");
    compare->add_option("fileA", file_a)->required();
    compare->add_option("nameA", name_a)->required();
    compare->add_option("fileB", file_b)->required();
    compare->add_option("nameB", name_b)->required();
    compare->add_flag("--strict", strict);

    CLI::App* normalize = app.add_subcommand("normalize", "ordered block form with a move log");
    normalize->add_option("file", file_a)->required();
    normalize->add_option("name", name_a)->required();
    normalize->add_flag("--strict", strict);

    CLI::App* longitudes = app.add_subcommand("longitudes", "longitude words modulo weight-3 commutators");
    longitudes->add_option("file", file_a)->required();
    longitudes->add_option("name", name_a)->required();
    longitudes->add_option("--degree", degree)->check(CLI::IsMember({2, 3}));

    CLI::App* present = app.add_subcommand("present", "nilpotent-quotient presentation");
    present->add_option("file", file_a)->required();
    present->add_option("name", name_a)->required();
    present->add_option("--k", weight, "lower central series depth");

    CLI::App* quotient = app.add_subcommand("quotient", "structure of the value group");
    quotient->add_option("--n", n)->required();
    quotient->add_option("--lk", lk_kind, "ones or zero")->required();

    CLI::App* realize = app.add_subcommand("realize", "emit a family member with functional value m");
    realize->add_option("m", m)->required();
    realize->add_option("--out", out_path, "output path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariant->parsed())
            return run_invariant(file_a, name_a, strict, format);
        if (compare->parsed())
            return run_compare(file_a, name_a, file_b, name_b, strict);
        if (normalize->parsed())
            return run_normalize(file_a, name_a, strict);
        if (longitudes->parsed())
            return run_longitudes(file_a, name_a, degree);
        if (present->parsed())
            return run_present(file_a, name_a, weight);
        if (quotient->parsed())
            return run_quotient(n, lk_kind);
        if (realize->parsed())
            return run_realize(m, out_path);
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}
