#include "u5/io.hpp"

#include <sstream>

namespace u5 {

std::string render_tournament(const Tournament& t) {
    std::string out = "tournament " + std::to_string(t.size()) + "\n";
    for (int u = 0; u < t.size(); ++u) {
        for (int v = 0; v < t.size(); ++v)
            out += (u == v) ? '-' : (t.edge(u, v) ? '1' : '0');
        out += '\n';
    }
    return out;
}

Tournament parse_tournament(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty tournament file");
    const std::string prefix = "tournament ";
    if (line.rfind(prefix, 0) != 0) throw InputError("missing 'tournament <n>' header");
    int n = -1;
    try {
        std::size_t used = 0;
        n = std::stoi(line.substr(prefix.size()), &used);
        if (used != line.size() - prefix.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw InputError("malformed vertex count in header: '" + line + "'");
    }
    if (n < 0) throw InputError("vertex count must be nonnegative");

    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (line.empty() && static_cast<int>(rows.size()) == n) continue; // tolerate one trailing blank
        rows.push_back(line);
    }
    if (static_cast<int>(rows.size()) != n)
        throw InputError("expected " + std::to_string(n) + " matrix rows, found " +
                         std::to_string(rows.size()));
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(rows[static_cast<std::size_t>(u)].size()) != n)
            throw InputError("row " + std::to_string(u) + " must have exactly " + std::to_string(n) +
                             " characters");
        for (int v = 0; v < n; ++v) {
            char c = rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (u == v) {
                if (c != '-') throw InputError("diagonal entry (" + std::to_string(u) + ") must be '-'");
            } else if (c != '0' && c != '1') {
                throw InputError("entry (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") must be '0' or '1'");
            }
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            char a = rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            char b = rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
            if (a == b)
                throw InputError("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") must be oriented exactly one way");
        }
    return Tournament(n, [&](int u, int v) {
        return rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == '1';
    });
}

// --- certificate documents ------------------------------------------------------

namespace {

void render_ints(std::string& out, const std::vector<int>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out += (i ? " " : "");
        out += std::to_string(vals[i]);
    }
}

void render_node(std::string& out, const Certificate& cert, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (const auto* f = cert.as_forbidden()) {
        out += pad + "kind: forbidden-copy\n";
        out += pad + "pattern: U5\n";
        out += pad + "image: ";
        render_ints(out, f->embedding.image);
        out += '\n';
        return;
    }
    if (const auto* c = cert.as_critical()) {
        out += pad + "kind: critical\n";
        out += pad + "family: T\n";
        out += pad + "order: " + std::to_string(c->n) + "\n";
        out += pad + "image: ";
        render_ints(out, c->image);
        out += '\n';
        return;
    }
    if (const auto* p = cert.as_partition()) {
        out += pad + "kind: partition\n";
        for (auto [name, ord] : {std::pair{"x", &p->partition.x}, std::pair{"y", &p->partition.y},
                                 std::pair{"z", &p->partition.z}}) {
            out += pad + name + ":";
            if (!ord->seq.empty()) {
                out += ' ';
                render_ints(out, ord->seq);
            }
            out += '\n';
        }
        return;
    }
    const auto* comp = cert.as_composite();
    out += pad + "kind: composite\n";
    out += pad + "linear: " + std::string(comp->linear ? "true" : "false") + "\n";
    out += pad + "blocks: " + std::to_string(comp->blocks.size()) + "\n";
    for (const auto& b : comp->blocks) {
        out += pad + "block: ";
        render_ints(out, b.to_vector());
        out += '\n';
    }
    out += pad + "quotient:\n";
    render_node(out, *comp->quotient_cert, indent + 1);
    for (std::size_t i = 0; i < comp->block_certs.size(); ++i) {
        out += pad + "child: " + std::to_string(i) + "\n";
        render_node(out, comp->block_certs[i], indent + 1);
    }
}

struct DocLines {
    struct Line {
        int level;
        std::string key;
        std::string value; // after ": " or ":"
    };
    std::vector<Line> lines;
    std::size_t pos = 0;

    bool at_end() const { return pos >= lines.size(); }
    const Line& peek() const { return lines[pos]; }
    const Line& take() { return lines[pos++]; }
};

std::vector<int> parse_ints(const std::string& s, const std::string& what) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InputError("malformed integer '" + tok + "' in " + what);
        }
    }
    return out;
}

int parse_single(const std::string& s, const std::string& what) {
    std::vector<int> vals = parse_ints(s, what);
    if (vals.size() != 1) throw InputError("expected a single integer for " + what);
    return vals[0];
}

std::string expect(DocLines& doc, int level, const std::string& key) {
    if (doc.at_end() || doc.peek().level != level || doc.peek().key != key)
        throw InputError("certificate document: expected '" + key + "' at depth " +
                         std::to_string(level));
    return doc.take().value;
}

Certificate parse_node(DocLines& doc, int level) {
    std::string kind = expect(doc, level, "kind");
    if (kind == "forbidden-copy") {
        std::string pat = expect(doc, level, "pattern");
        if (pat != "U5") throw InputError("unknown forbidden pattern '" + pat + "'");
        Embedding e;
        e.image = parse_ints(expect(doc, level, "image"), "image");
        return Certificate{ForbiddenCopyCert{std::move(e)}};
    }
    if (kind == "critical") {
        std::string family = expect(doc, level, "family");
        if (family != "T") throw InputError("critical certificates carry family T only");
        CriticalCert c;
        std::string n = expect(doc, level, "order");
        c.n = parse_single(n, "order");
        c.image = parse_ints(expect(doc, level, "image"), "image");
        return Certificate{std::move(c)};
    }
    if (kind == "partition") {
        PartitionCert p;
        p.partition.x.seq = parse_ints(expect(doc, level, "x"), "part x");
        p.partition.y.seq = parse_ints(expect(doc, level, "y"), "part y");
        p.partition.z.seq = parse_ints(expect(doc, level, "z"), "part z");
        return Certificate{std::move(p)};
    }
    if (kind == "composite") {
        CompositeCert comp;
        std::string lin = expect(doc, level, "linear");
        if (lin != "true" && lin != "false") throw InputError("linear flag must be true or false");
        comp.linear = lin == "true";
        int count = parse_single(expect(doc, level, "blocks"), "block count");
        if (count < 2) throw InputError("composite requires at least two blocks");
        std::vector<std::vector<int>> members;
        int universe = 0;
        for (int i = 0; i < count; ++i) {
            members.push_back(parse_ints(expect(doc, level, "block"), "block members"));
            if (members.back().empty()) throw InputError("empty block in composite");
            for (std::size_t j = 0; j + 1 < members.back().size(); ++j)
                if (members.back()[j] >= members.back()[j + 1])
                    throw InputError("block members must be strictly ascending");
            universe = std::max(universe, members.back().back() + 1);
        }
        for (const auto& m : members) {
            VertexSet b(universe);
            for (int v : m) {
                if (v < 0) throw InputError("negative vertex label");
                b.insert(v);
            }
            comp.blocks.push_back(std::move(b));
        }
        expect(doc, level, "quotient");
        comp.quotient_cert = std::make_unique<Certificate>(parse_node(doc, level + 1));
        for (int i = 0; i < count; ++i) {
            std::string idx = expect(doc, level, "child");
            if (parse_single(idx, "child index") != i)
                throw InputError("children must appear in order 0.." + std::to_string(count - 1));
            comp.block_certs.push_back(parse_node(doc, level + 1));
        }
        return Certificate{std::move(comp)};
    }
    throw InputError("unknown certificate kind '" + kind + "'");
}

} // namespace

std::string render_certificate(const Certificate& cert) {
    std::string out = "u5cert 1\n";
    render_node(out, cert, 0);
    return out;
}

Certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "u5cert 1")
        throw InputError("missing 'u5cert 1' header");
    DocLines doc;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t spaces = 0;
        while (spaces < line.size() && line[spaces] == ' ') ++spaces;
        if (spaces % 2 != 0) throw InputError("indentation must be a multiple of two spaces");
        std::string body = line.substr(spaces);
        std::size_t colon = body.find(':');
        if (colon == std::string::npos) throw InputError("expected 'key: value' line, got '" + line + "'");
        std::string key = body.substr(0, colon);
        std::string value = colon + 1 < body.size() ? body.substr(colon + 1) : "";
        if (!value.empty() && value.front() == ' ') value = value.substr(1);
        doc.lines.push_back({static_cast<int>(spaces / 2), std::move(key), std::move(value)});
    }
    Certificate cert = parse_node(doc, 0);
    if (!doc.at_end()) throw InputError("trailing content in certificate document");
    return cert;
}

std::string render_dot(const Tournament& t) {
    std::string out = "digraph tournament {\n";
    for (int v = 0; v < t.size(); ++v) out += "  v" + std::to_string(v) + ";\n";
    for (int u = 0; u < t.size(); ++u)
        for (int v = u + 1; v < t.size(); ++v) {
            int w = t.edge(u, v) ? u : v;
            int l = u + v - w;
            out += "  v" + std::to_string(w) + " -> v" + std::to_string(l) + ";\n";
        }
    out += "}\n";
    return out;
}

} // namespace u5
