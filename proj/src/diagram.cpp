#include "skeinlab/diagram.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

namespace skeinlab {

void BraidWord::validate() const {
    if (strands < 1) throw DiagramError("braid: strand count must be >= 1");
    for (int g : word) {
        if (g == 0 || std::abs(g) >= strands)
            throw DiagramError("braid: letter " + std::to_string(g) + " out of range for B" +
                               std::to_string(strands));
    }
}

void MorseDiagram::validate() const {
    int width = 0;
    for (const auto& s : slices) {
        switch (s.kind) {
            case Slice::Cup:
                if (s.pos < 1 || s.pos > width + 1)
                    throw DiagramError("morse: cup position out of range");
                width += 2;
                break;
            case Slice::Cap:
            case Slice::Pos:
            case Slice::Neg:
                if (s.pos < 1 || s.pos + 1 > width)
                    throw DiagramError("morse: slice position out of range");
                if (s.kind == Slice::Cap) width -= 2;
                break;
        }
    }
    if (width != 0) throw DiagramError("morse: diagram is not closed (final width != 0)");
}

std::size_t MorseDiagram::crossing_count() const {
    std::size_t n = 0;
    for (const auto& s : slices)
        if (s.kind == Slice::Pos || s.kind == Slice::Neg) ++n;
    return n;
}

MorseDiagram braid_closure(const BraidWord& b) {
    b.validate();
    MorseDiagram d;
    const int n = b.strands;
    // Nested cups: after cup@1 .. cup@n the arcs pair position i with 2n+1-i,
    // leaving positions n+1..2n as the braid strands.
    for (int i = 1; i <= n; ++i) d.slices.push_back({Slice::Cup, i});
    for (int g : b.word)
        d.slices.push_back({g > 0 ? Slice::Pos : Slice::Neg, n + std::abs(g)});
    for (int i = n; i >= 1; --i) d.slices.push_back({Slice::Cap, i});
    return d;
}

long local_writhe(const MorseDiagram& d) {
    long w = 0;
    for (const auto& s : d.slices) {
        if (s.kind == Slice::Pos) ++w;
        else if (s.kind == Slice::Neg) --w;
    }
    return w;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x)
            if (find(x) == x) ++c;
        return c;
    }
};

}  // namespace

int component_count(const MorseDiagram& d) {
    d.validate();
    UnionFind uf;
    std::vector<int> cur;  // node id carried by each live strand position
    for (const auto& s : d.slices) {
        const int p = s.pos - 1;
        switch (s.kind) {
            case Slice::Cup: {
                int a = uf.make(), b = uf.make();
                uf.unite(a, b);
                cur.insert(cur.begin() + p, {a, b});
                break;
            }
            case Slice::Cap:
                uf.unite(cur[p], cur[p + 1]);
                cur.erase(cur.begin() + p, cur.begin() + p + 2);
                break;
            case Slice::Pos:
            case Slice::Neg:
                // Both crossing types connect top-left<->bottom-right and
                // top-right<->bottom-left, i.e. the strands swap positions.
                std::swap(cur[p], cur[p + 1]);
                break;
        }
    }
    return uf.classes();
}

MorseDiagram resolve_crossing(const MorseDiagram& d, std::size_t index, Resolution r) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < d.slices.size(); ++i) {
        const Slice& s = d.slices[i];
        if (s.kind != Slice::Pos && s.kind != Slice::Neg) continue;
        if (seen++ != index) continue;
        MorseDiagram out = d;
        switch (r) {
            case Resolution::Switch:
                out.slices[i].kind = (s.kind == Slice::Pos) ? Slice::Neg : Slice::Pos;
                break;
            case Resolution::SmoothId:
                out.slices.erase(out.slices.begin() + i);
                break;
            case Resolution::SmoothCupCap:
                out.slices[i] = {Slice::Cap, s.pos};
                out.slices.insert(out.slices.begin() + i + 1, {Slice::Cup, s.pos});
                break;
        }
        return out;
    }
    throw DiagramError("resolve_crossing: crossing index out of range");
}

// ---------------------------------------------------------------------------
// Text and JSON formats
// ---------------------------------------------------------------------------

std::string format_braid(const BraidWord& b) {
    std::ostringstream os;
    os << "B" << b.strands << ":";
    for (int g : b.word) os << " " << g;
    return os.str();
}

BraidWord parse_braid(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    is >> head;
    if (head.size() < 2 || head.front() != 'B' || head.back() != ':')
        throw DiagramError("braid: expected header like \"B3:\"");
    BraidWord b;
    try {
        b.strands = std::stoi(head.substr(1, head.size() - 2));
    } catch (const std::exception&) {
        throw DiagramError("braid: bad strand count in header");
    }
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            int g = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            b.word.push_back(g);
        } catch (const std::exception&) {
            throw DiagramError("braid: bad letter \"" + tok + "\"");
        }
    }
    b.validate();
    return b;
}

namespace {

const char* slice_token(Slice::Kind k) {
    switch (k) {
        case Slice::Cup: return "cup";
        case Slice::Cap: return "cap";
        case Slice::Pos: return "x+";
        case Slice::Neg: return "x-";
    }
    return "?";
}

Slice::Kind slice_kind(const std::string& t) {
    if (t == "cup") return Slice::Cup;
    if (t == "cap") return Slice::Cap;
    if (t == "x+") return Slice::Pos;
    if (t == "x-") return Slice::Neg;
    throw DiagramError("morse: unknown slice \"" + t + "\"");
}

}  // namespace

std::string format_morse(const MorseDiagram& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& s : d.slices) {
        if (!first) os << " ";
        os << slice_token(s.kind) << "@" << s.pos;
        first = false;
    }
    return os.str();
}

MorseDiagram parse_morse(const std::string& text) {
    MorseDiagram d;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto at = tok.find('@');
        if (at == std::string::npos) throw DiagramError("morse: token missing '@': " + tok);
        Slice s;
        s.kind = slice_kind(tok.substr(0, at));
        try {
            std::size_t used = 0;
            s.pos = std::stoi(tok.substr(at + 1), &used);
            if (at + 1 + used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DiagramError("morse: bad position in token " + tok);
        }
        d.slices.push_back(s);
    }
    d.validate();
    return d;
}

std::string braid_to_json(const BraidWord& b) {
    nlohmann::json j{{"type", "braid"}, {"strands", b.strands}, {"word", b.word}};
    return j.dump();
}

std::string morse_to_json(const MorseDiagram& d) {
    nlohmann::json slices = nlohmann::json::array();
    for (const auto& s : d.slices)
        slices.push_back(nlohmann::json::array({slice_token(s.kind), s.pos}));
    nlohmann::json j{{"type", "morse"}, {"slices", slices}};
    return j.dump();
}

MorseDiagram morse_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw DiagramError(std::string("morse json: ") + e.what());
    }
    if (j.value("type", "") == "braid") {
        BraidWord b;
        b.strands = j.at("strands").get<int>();
        b.word = j.at("word").get<std::vector<int>>();
        return braid_closure(b);
    }
    if (j.value("type", "") != "morse" || !j.contains("slices"))
        throw DiagramError("morse json: expected type \"morse\" with slices");
    MorseDiagram d;
    for (const auto& e : j.at("slices")) {
        if (!e.is_array() || e.size() != 2)
            throw DiagramError("morse json: slice must be [token, pos]");
        d.slices.push_back({slice_kind(e.at(0).get<std::string>()), e.at(1).get<int>()});
    }
    d.validate();
    return d;
}

}  // namespace skeinlab
