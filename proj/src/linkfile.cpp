#include "milnor/linkfile.hpp"

#include <optional>
#include <sstream>

namespace milnor {

const CComplexData& LinkRecord::ccomplex() const {
    if (!is_ccomplex())
        throw Error("link '" + name + "' has no clasp presentation");
    return std::get<CComplexData>(body);
}

SurfaceSystemData LinkRecord::system() const {
    if (is_ccomplex())
        return to_surface_system(std::get<CComplexData>(body));
    return std::get<SurfaceSystemData>(body);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string tok;
    for (char ch : line) {
        if (ch == '#')
            break;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!tok.empty()) {
                out.push_back(tok);
                tok.clear();
            }
        } else {
            tok += ch;
        }
    }
    if (!tok.empty())
        out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

int parse_component(const std::string& tok, int n, int line) {
    long long v = parse_int(tok, line, "a component index");
    if (v < 1 || v > n)
        throw ParseError(line, "component index " + tok + " out of range 1.." +
                                   std::to_string(n));
    return static_cast<int>(v);
}

// "<comp>:<rank>"
ClaspEndpoint parse_endpoint(const std::string& tok, int n, int line) {
    auto colon = tok.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, "expected <component>:<rank>, got '" + tok + "'");
    ClaspEndpoint e;
    e.component = parse_component(tok.substr(0, colon), n, line);
    long long rank = parse_int(tok.substr(colon + 1), line, "a rank");
    if (rank < 1)
        throw ParseError(line, "rank must be >= 1");
    e.rank = static_cast<int>(rank);
    return e;
}

struct Builder {
    std::string name;
    int declared_line = 0;
    int n = -1;
    bool has_clasps = false;
    bool has_words = false;
    CComplexData cc;
    SurfaceSystemData ss;
    std::vector<bool> word_seen;

    LinkRecord finish() const {
        LinkRecord rec;
        rec.name = name;
        if (has_clasps) {
            rec.body = cc;
        } else {
            rec.body = ss;
        }
        return rec;
    }
};

}  // namespace

std::vector<LinkRecord> parse_link_file(const std::string& text) {
    std::vector<LinkRecord> records;
    std::optional<Builder> cur;

    auto flush = [&]() {
        if (cur) {
            if (cur->n < 0)
                throw ParseError(cur->declared_line,
                                 "link '" + cur->name + "' has no components line");
            records.push_back(cur->finish());
            cur.reset();
        }
    };

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty())
            continue;
        const std::string& kw = tok[0];

        if (kw == "link") {
            if (tok.size() != 2)
                throw ParseError(lineno, "usage: link <name>");
            flush();
            cur.emplace();
            cur->name = tok[1];
            cur->declared_line = lineno;
            continue;
        }
        if (!cur)
            throw ParseError(lineno, "'" + kw + "' before any 'link' line");

        if (kw == "components") {
            if (cur->n >= 0)
                throw ParseError(lineno, "duplicate components line");
            if (tok.size() != 2)
                throw ParseError(lineno, "usage: components <n>");
            long long n = parse_int(tok[1], lineno, "a component count");
            if (n < 1 || n > 64)
                throw ParseError(lineno, "component count must be in 1..64");
            cur->n = static_cast<int>(n);
            cur->cc.n = cur->n;
            cur->ss.n = cur->n;
            cur->ss.words.assign(static_cast<std::size_t>(cur->n), CyclicWord());
            cur->word_seen.assign(static_cast<std::size_t>(cur->n), false);
            continue;
        }
        if (cur->n < 0)
            throw ParseError(lineno, "'" + kw + "' before the components line");

        if (kw == "clasp") {
            if (cur->has_words)
                throw ParseError(lineno, "link '" + cur->name +
                                             "' mixes clasp and word stanzas");
            if (tok.size() != 5)
                throw ParseError(lineno, "usage: clasp <id> <c>:<r> <c>:<r> <+|->");
            cur->has_clasps = true;
            Clasp cl;
            cl.id = tok[1];
            cl.a = parse_endpoint(tok[2], cur->n, lineno);
            cl.b = parse_endpoint(tok[3], cur->n, lineno);
            if (tok[4] == "+")
                cl.sign = +1;
            else if (tok[4] == "-")
                cl.sign = -1;
            else
                throw ParseError(lineno, "clasp sign must be + or -");
            cur->cc.clasps.push_back(std::move(cl));
            continue;
        }
        if (kw == "word") {
            if (cur->has_clasps)
                throw ParseError(lineno, "link '" + cur->name +
                                             "' mixes clasp and word stanzas");
            if (tok.size() < 2)
                throw ParseError(lineno, "usage: word <component> <letters...>");
            cur->has_words = true;
            int comp = parse_component(tok[1], cur->n, lineno);
            if (cur->word_seen[static_cast<std::size_t>(comp - 1)])
                throw ParseError(lineno, "duplicate word line for component " +
                                             std::to_string(comp));
            cur->word_seen[static_cast<std::size_t>(comp - 1)] = true;
            std::vector<Letter> letters;
            for (std::size_t p = 2; p < tok.size(); ++p) {
                try {
                    letters.push_back(parse_letter(tok[p]));
                } catch (const Error& e) {
                    throw ParseError(lineno, e.what());
                }
            }
            cur->ss.words[static_cast<std::size_t>(comp - 1)] = CyclicWord(std::move(letters));
            continue;
        }
        if (kw == "triple") {
            if (cur->has_clasps)
                throw ParseError(lineno, "link '" + cur->name +
                                             "' mixes clasp and word stanzas");
            if (tok.size() != 5)
                throw ParseError(lineno, "usage: triple <i> <j> <k> <count>");
            cur->has_words = true;
            int i = parse_component(tok[1], cur->n, lineno);
            int j = parse_component(tok[2], cur->n, lineno);
            int k = parse_component(tok[3], cur->n, lineno);
            if (!(i < j && j < k))
                throw ParseError(lineno, "triple indices must be strictly increasing");
            long long v = parse_int(tok[4], lineno, "a signed count");
            if (cur->ss.triples.count({i, j, k}))
                throw ParseError(lineno, "duplicate triple line");
            if (v != 0)
                cur->ss.triples[{i, j, k}] = v;
            continue;
        }
        throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
    flush();
    return records;
}

std::string serialize(const LinkRecord& record) {
    std::ostringstream os;
    os << "link " << record.name << '\n';
    if (record.is_ccomplex()) {
        const CComplexData& c = std::get<CComplexData>(record.body);
        os << "components " << c.n << '\n';
        for (const Clasp& cl : c.clasps)
            os << "clasp " << cl.id << ' ' << cl.a.component << ':' << cl.a.rank << ' '
               << cl.b.component << ':' << cl.b.rank << ' ' << (cl.sign > 0 ? '+' : '-')
               << '\n';
    } else {
        const SurfaceSystemData& s = std::get<SurfaceSystemData>(record.body);
        os << "components " << s.n << '\n';
        for (int k = 1; k <= s.n; ++k) {
            if (s.word(k).empty())
                continue;
            os << "word " << k << ' ' << to_string(s.word(k).linearize()) << '\n';
        }
        for (const auto& [key, value] : s.triples) {
            if (value == 0)
                continue;
            os << "triple " << key[0] << ' ' << key[1] << ' ' << key[2] << ' ' << value
               << '\n';
        }
    }
    return os.str();
}

std::string serialize(const std::vector<LinkRecord>& records) {
    std::string out;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (i)
            out += '\n';
        out += serialize(records[i]);
    }
    return out;
}

const LinkRecord* find_link(const std::vector<LinkRecord>& records, const std::string& name) {
    for (const LinkRecord& r : records)
        if (r.name == name)
            return &r;
    return nullptr;
}

}  // namespace milnor
