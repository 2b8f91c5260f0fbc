#include "izeta/io.hpp"

#include <fstream>
#include <sstream>

#include "izeta/errors.hpp"

namespace izeta {

namespace {

const char* kHeader = "izeta-resolution v1";

std::string kind_name(StratumKind kind) {
    switch (kind) {
    case StratumKind::Zero: return "zero";
    case StratumKind::Point: return "point";
    case StratumKind::Torus: return "torus";
    case StratumKind::P1: return "p1";
    case StratumKind::Explicit: return "explicit";
    }
    throw Error("unreachable stratum kind");
}

StratumKind kind_from(const std::string& name, long line) {
    if (name == "zero") return StratumKind::Zero;
    if (name == "point") return StratumKind::Point;
    if (name == "torus") return StratumKind::Torus;
    if (name == "p1") return StratumKind::P1;
    if (name == "explicit") return StratumKind::Explicit;
    throw ParseError("resolution file line " + std::to_string(line) +
                     ": unknown stratum kind \"" + name + "\"");
}

void check_id(const std::string& id) {
    if (id.empty() || id.find_first_of(" \t\n#") != std::string::npos)
        throw InputError("component id \"" + id + "\" cannot be serialized");
}

[[noreturn]] void fail(long line, const std::string& what) {
    throw ParseError("resolution file line " + std::to_string(line) + ": " + what);
}

long parse_long(const std::string& tok, long line, const std::string& field) {
    try {
        size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(line, "expected an integer for " + field + ", got \"" + tok + "\"");
    }
}

// Splits off the first word; the remainder keeps internal spacing.
std::pair<std::string, std::string> split_word(const std::string& s) {
    const size_t start = s.find_first_not_of(" \t");
    if (start == std::string::npos) return {"", ""};
    size_t end = s.find_first_of(" \t", start);
    if (end == std::string::npos) end = s.size();
    const size_t rest = s.find_first_not_of(" \t", end);
    return {s.substr(start, end - start),
            rest == std::string::npos ? "" : s.substr(rest)};
}

}  // namespace

std::string save_resolution(const ResolutionData& res) {
    std::ostringstream out;
    out << kHeader << "\n";
    out << "ambient " << res.m << "\n";
    out << "projective " << (res.projective ? "yes" : "no") << "\n";
    out << "region " << res.region.to_string() << "\n";
    for (const Component& c : res.components) {
        check_id(c.id);
        out << "component " << c.id << " N=" << c.N << " nu=" << c.nu << " "
            << (c.is_exceptional ? "exceptional" : "branch") << "\n";
    }
    for (const auto& [ids, st] : res.strata) {
        out << "stratum";
        for (const std::string& id : ids) {
            check_id(id);
            out << " " << id;
        }
        out << "\n";
        out << "  kind " << kind_name(st.kind) << "\n";
        out << "  class " << st.cls_global.to_string() << "\n";
        if (!st.exponents.empty()) {
            out << "  exponents";
            for (long e : st.exponents) out << " " << e;
            out << "\n";
        }
        for (const Puncture& p : st.puncture_data) {
            check_id(p.at);
            out << "  puncture " << p.at << " " << p.e << "\n";
        }
        for (const auto& [alpha, cls] : st.twisted)
            out << "  twisted " << alpha.to_string() << " " << cls.to_string() << "\n";
        out << "end\n";
    }
    out << "total " << res.total_class.to_string() << "\n";
    return out.str();
}

ResolutionData load_resolution(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    long line = 0;

    ResolutionData res;
    bool saw_header = false, saw_ambient = false, saw_total = false;
    Stratum* open = nullptr;  // stratum currently being filled

    while (std::getline(in, raw)) {
        ++line;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto [word, rest] = split_word(raw);
        if (word.empty()) continue;

        if (!saw_header) {
            std::istringstream hdr(raw);
            std::string a, b;
            hdr >> a >> b;
            if (a + " " + b != kHeader)
                fail(line, "expected header \"" + std::string(kHeader) + "\"");
            saw_header = true;
            continue;
        }

        if (open) {
            if (word == "end") {
                open = nullptr;
            } else if (word == "kind") {
                auto [name, extra] = split_word(rest);
                if (name.empty() || !extra.empty()) fail(line, "kind takes one word");
                open->kind = kind_from(name, line);
            } else if (word == "class") {
                try {
                    open->cls_global = EPoly::parse(rest);
                } catch (const ParseError& e) {
                    fail(line, std::string("bad class: ") + e.what());
                }
            } else if (word == "exponents") {
                std::istringstream body(rest);
                std::string tok;
                open->exponents.clear();
                while (body >> tok)
                    open->exponents.push_back(parse_long(tok, line, "exponent"));
            } else if (word == "puncture") {
                auto [at, etok] = split_word(rest);
                auto [ev, extra] = split_word(etok);
                if (at.empty() || ev.empty() || !extra.empty())
                    fail(line, "puncture takes a component id and an exponent");
                open->puncture_data.push_back({at, parse_long(ev, line, "puncture exponent")});
            } else if (word == "twisted") {
                auto [chr, cls] = split_word(rest);
                if (chr.empty() || cls.empty())
                    fail(line, "twisted takes a character and a class");
                try {
                    open->twisted[Character::parse(chr)] = EPoly::parse(cls);
                } catch (const ParseError& e) {
                    fail(line, std::string("bad twisted entry: ") + e.what());
                }
            } else {
                fail(line, "unknown stratum field \"" + word + "\"");
            }
            continue;
        }

        if (word == "ambient") {
            res.m = parse_long(rest, line, "ambient dimension");
            if (res.m < 1) fail(line, "ambient dimension must be positive");
            saw_ambient = true;
        } else if (word == "projective") {
            if (rest == "yes") res.projective = true;
            else if (rest == "no") res.projective = false;
            else fail(line, "projective must be yes or no");
        } else if (word == "region") {
            try {
                res.region = RegionSpec::parse(rest);
            } catch (const ParseError& e) {
                fail(line, e.what());
            }
        } else if (word == "component") {
            std::istringstream body(rest);
            std::string id, ntok, nutok, flag;
            if (!(body >> id >> ntok >> nutok >> flag))
                fail(line, "component takes id N=<int> nu=<int> exceptional|branch");
            std::string extra;
            if (body >> extra) fail(line, "trailing tokens after component record");
            if (ntok.rfind("N=", 0) != 0 || nutok.rfind("nu=", 0) != 0)
                fail(line, "component takes id N=<int> nu=<int> exceptional|branch");
            if (flag != "exceptional" && flag != "branch")
                fail(line, "component flag must be exceptional or branch");
            for (const Component& c : res.components)
                if (c.id == id) fail(line, "duplicate component id \"" + id + "\"");
            res.components.emplace_back(id, parse_long(ntok.substr(2), line, "N"),
                                        parse_long(nutok.substr(3), line, "nu"),
                                        flag == "exceptional");
        } else if (word == "stratum") {
            std::set<std::string> ids;
            std::istringstream body(rest);
            std::string id;
            while (body >> id)
                if (!ids.insert(id).second)
                    fail(line, "repeated component id \"" + id + "\" in stratum");
            if (res.strata.count(ids))
                fail(line, "duplicate stratum for the same component set");
            Stratum st;
            st.I = ids;
            open = &res.strata.emplace(ids, std::move(st)).first->second;
        } else if (word == "total") {
            try {
                res.total_class = EPoly::parse(rest);
            } catch (const ParseError& e) {
                fail(line, std::string("bad total class: ") + e.what());
            }
            saw_total = true;
        } else {
            fail(line, "unknown record \"" + word + "\"");
        }
    }

    if (!saw_header) fail(line, "empty input, expected header");
    if (open) fail(line, "unterminated stratum (missing \"end\")");
    if (!saw_ambient) fail(line, "missing ambient record");
    if (!saw_total) fail(line, "missing total record");

    validate_resolution(res);
    return res;
}

ResolutionData load_resolution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open resolution file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_resolution(buf.str());
}

void save_resolution_file(const ResolutionData& res, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write resolution file \"" + path + "\"");
    out << save_resolution(res);
}

}  // namespace izeta
