#include "rmscd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "rmscd/errors.hpp"
#include "rmscd/format.hpp"

namespace rmscd {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

double parse_weight(const std::string& field, int line_no) {
    std::size_t pos = 0;
    double w = 0.0;
    try {
        w = std::stod(field, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric weight '" + field +
                         "'");
    }
    if (pos != field.size() || !std::isfinite(w))
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric weight '" + field +
                         "'");
    if (w <= 0.0)
        throw ParseError("line " + std::to_string(line_no) + ": weight must be positive, got " +
                         field);
    return w;
}

}  // namespace

double Graph::total_weight() const {
    double m = 0.0;
    for (const Edge& e : edges) m += e.w;
    return m;
}

std::vector<double> Graph::weighted_degrees() const {
    std::vector<double> deg(node_names.size(), 0.0);
    for (const Edge& e : edges) {
        deg[e.u] += e.w;
        deg[e.v] += e.w;
    }
    return deg;
}

void Graph::finalize() {
    const int n = num_nodes();
    {
        std::set<std::string> seen;
        for (const std::string& name : node_names)
            if (!seen.insert(name).second) throw DataError("duplicate node name '" + name + "'");
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw DataError("edge endpoint out of range");
        if (e.u == e.v) throw DataError("self-loop survived construction");
        if (e.u > e.v) throw DataError("edge not in canonical u < v orientation");
        if (!(e.w > 0.0)) throw DataError("non-positive edge weight");
        if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v)
            throw DataError("duplicate edge (" + node_names[e.u] + ", " + node_names[e.v] + ")");
    }
    adj.assign(n, {});
    for (const Edge& e : edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
}

Graph fold_directed(std::vector<std::string> node_names, const std::vector<RawEdge>& raw,
                    bool is_weighted) {
    Graph g;
    g.node_names = std::move(node_names);
    g.is_weighted = is_weighted;
    std::map<std::pair<int, int>, double> folded;
    for (const RawEdge& e : raw) {
        if (e.u == e.v) {
            ++g.dropped_self_loops;
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        folded[{key.first, key.second}] += e.w;
    }
    g.edges.reserve(folded.size());
    for (const auto& [pair, w] : folded) g.edges.push_back({pair.first, pair.second, w});
    g.finalize();
    return g;
}

Graph parse_edge_list(std::istream& text, bool directed, bool weighted) {
    struct Line {
        std::string src, dst;
        double w;
    };
    std::vector<Line> lines;
    std::set<std::string> names;
    std::string line;
    int line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields = split_fields(t);
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'src dst [weight]', got " +
                             std::to_string(fields.size()) + " fields");
        double w = 1.0;
        if (fields.size() == 3) {
            double parsed = parse_weight(fields[2], line_no);
            if (weighted) w = parsed;
        }
        names.insert(fields[0]);
        names.insert(fields[1]);
        lines.push_back({fields[0], fields[1], w});
    }

    std::vector<std::string> node_names(names.begin(), names.end());  // lexicographic
    std::unordered_map<std::string, int> id;
    id.reserve(node_names.size());
    for (std::size_t i = 0; i < node_names.size(); ++i) id[node_names[i]] = static_cast<int>(i);

    std::vector<RawEdge> raw;
    raw.reserve(lines.size());
    for (const Line& l : lines) raw.push_back({id[l.src], id[l.dst], l.w});
    // The same pair-summing fold covers both the directed conversion and
    // duplicate undirected lines.
    (void)directed;
    return fold_directed(std::move(node_names), raw, weighted);
}

// ---------------------------------------------------------------------------
// GML subset
// ---------------------------------------------------------------------------

namespace {

struct GmlToken {
    enum Kind { word, str, open, close, eof } kind = eof;
    std::string text;
};

class GmlLexer {
  public:
    explicit GmlLexer(std::istream& in) : in_(in) {}

    GmlToken next() {
        int c;
        while ((c = in_.get()) != EOF && std::isspace(c)) {
        }
        if (c == EOF) return {GmlToken::eof, ""};
        if (c == '[') return {GmlToken::open, "["};
        if (c == ']') return {GmlToken::close, "]"};
        if (c == '"') {
            std::string s;
            while ((c = in_.get()) != EOF && c != '"') s.push_back(static_cast<char>(c));
            if (c == EOF) throw ParseError("gml: unterminated string");
            return {GmlToken::str, s};
        }
        if (c == '#') {  // comment to end of line
            while ((c = in_.get()) != EOF && c != '\n') {
            }
            return next();
        }
        std::string s(1, static_cast<char>(c));
        while ((c = in_.peek()) != EOF && !std::isspace(c) && c != '[' && c != ']') {
            s.push_back(static_cast<char>(in_.get()));
        }
        return {GmlToken::word, s};
    }

  private:
    std::istream& in_;
};

class GmlParser {
  public:
    explicit GmlParser(std::istream& in) : lex_(in) { tok_ = lex_.next(); }

    Graph parse() {
        while (tok_.kind == GmlToken::word && tok_.text != "graph") skip_value_of_key();
        if (tok_.kind != GmlToken::word || tok_.text != "graph")
            throw ParseError("gml: missing 'graph' block");
        advance();
        expect_open("graph");
        parse_graph_body();
        return build();
    }

  private:
    struct GmlNode {
        long id = 0;
        bool has_label = false;
        std::string label;
        bool has_value = false;
        std::string value;
    };
    struct GmlEdge {
        long source = 0, target = 0;
        bool has_source = false, has_target = false;
        double value = 1.0;
        bool has_value = false;
    };

    void advance() { tok_ = lex_.next(); }

    void expect_open(const std::string& what) {
        if (tok_.kind != GmlToken::open) throw ParseError("gml: expected '[' after " + what);
        advance();
    }

    long parse_long(const std::string& what) {
        if (tok_.kind != GmlToken::word) throw ParseError("gml: expected integer for " + what);
        try {
            long v = std::stol(tok_.text);
            advance();
            return v;
        } catch (const std::exception&) {
            throw ParseError("gml: expected integer for " + what + ", got '" + tok_.text + "'");
        }
    }

    double parse_num(const std::string& what) {
        if (tok_.kind != GmlToken::word) throw ParseError("gml: expected number for " + what);
        try {
            double v = std::stod(tok_.text);
            advance();
            return v;
        } catch (const std::exception&) {
            throw ParseError("gml: expected number for " + what + ", got '" + tok_.text + "'");
        }
    }

    // Consumes the value following an unrecognized key: a scalar, a quoted
    // string, or a balanced nested block.
    void skip_value() {
        if (tok_.kind == GmlToken::open) {
            int depth = 1;
            while (depth > 0) {
                advance();
                if (tok_.kind == GmlToken::eof) throw ParseError("gml: unbalanced brackets");
                if (tok_.kind == GmlToken::open) ++depth;
                if (tok_.kind == GmlToken::close) --depth;
            }
            advance();
        } else if (tok_.kind == GmlToken::word || tok_.kind == GmlToken::str) {
            advance();
        } else {
            throw ParseError("gml: dangling key");
        }
    }

    void skip_value_of_key() {
        advance();  // past the key
        skip_value();
    }

    void parse_graph_body() {
        while (true) {
            if (tok_.kind == GmlToken::close) {
                advance();
                return;
            }
            if (tok_.kind == GmlToken::eof) throw ParseError("gml: unbalanced brackets");
            if (tok_.kind != GmlToken::word) throw ParseError("gml: expected key in graph block");
            std::string key = tok_.text;
            if (key == "node") {
                advance();
                expect_open("node");
                parse_node();
            } else if (key == "edge") {
                advance();
                expect_open("edge");
                parse_edge();
            } else if (key == "directed") {
                advance();
                directed_ = parse_num("directed") != 0.0;
            } else {
                skip_value_of_key();
            }
        }
    }

    void parse_node() {
        GmlNode node;
        bool has_id = false;
        while (tok_.kind != GmlToken::close) {
            if (tok_.kind == GmlToken::eof) throw ParseError("gml: unbalanced brackets in node");
            if (tok_.kind != GmlToken::word) throw ParseError("gml: expected key in node block");
            std::string key = tok_.text;
            if (key == "id") {
                advance();
                node.id = parse_long("node id");
                has_id = true;
            } else if (key == "label") {
                advance();
                if (tok_.kind != GmlToken::str && tok_.kind != GmlToken::word)
                    throw ParseError("gml: expected label value");
                node.label = tok_.text;
                node.has_label = true;
                advance();
            } else if (key == "value") {
                advance();
                if (tok_.kind != GmlToken::str && tok_.kind != GmlToken::word)
                    throw ParseError("gml: expected node value");
                node.value = tok_.text;
                node.has_value = true;
                advance();
            } else {
                skip_value_of_key();
            }
        }
        advance();
        if (!has_id) throw ParseError("gml: node block without id");
        nodes_.push_back(std::move(node));
    }

    void parse_edge() {
        GmlEdge edge;
        while (tok_.kind != GmlToken::close) {
            if (tok_.kind == GmlToken::eof) throw ParseError("gml: unbalanced brackets in edge");
            if (tok_.kind != GmlToken::word) throw ParseError("gml: expected key in edge block");
            std::string key = tok_.text;
            if (key == "source") {
                advance();
                edge.source = parse_long("edge source");
                edge.has_source = true;
            } else if (key == "target") {
                advance();
                edge.target = parse_long("edge target");
                edge.has_target = true;
            } else if (key == "value") {
                advance();
                edge.value = parse_num("edge value");
                edge.has_value = true;
            } else {
                skip_value_of_key();
            }
        }
        advance();
        if (!edge.has_source || !edge.has_target)
            throw ParseError("gml: edge block missing source/target");
        edges_.push_back(edge);
    }

    Graph build() {
        std::sort(nodes_.begin(), nodes_.end(),
                  [](const GmlNode& a, const GmlNode& b) { return a.id < b.id; });
        std::unordered_map<long, int> dense;
        dense.reserve(nodes_.size());
        std::vector<std::string> names;
        std::vector<std::map<std::string, std::string>> attrs;
        for (const GmlNode& n : nodes_) {
            if (!dense.emplace(n.id, static_cast<int>(names.size())).second)
                throw ParseError("gml: duplicate node id " + std::to_string(n.id));
            names.push_back(n.has_label ? n.label : std::to_string(n.id));
            std::map<std::string, std::string> a;
            if (n.has_label) a["label"] = n.label;
            if (n.has_value) a["value"] = n.value;
            attrs.push_back(std::move(a));
        }
        bool weighted = false;
        std::vector<RawEdge> raw;
        raw.reserve(edges_.size());
        for (const GmlEdge& e : edges_) {
            auto s = dense.find(e.source);
            auto t = dense.find(e.target);
            if (s == dense.end() || t == dense.end())
                throw ParseError("gml: edge references unknown node id");
            if (e.has_value && !(e.value > 0.0))
                throw ParseError("gml: edge value must be positive");
            weighted = weighted || e.has_value;
            raw.push_back({s->second, t->second, e.value});
        }
        Graph g = fold_directed(std::move(names), raw, weighted);
        g.node_attrs = std::move(attrs);
        return g;
    }

    GmlLexer lex_;
    GmlToken tok_;
    bool directed_ = false;  // informational; the fold is applied either way
    std::vector<GmlNode> nodes_;
    std::vector<GmlEdge> edges_;
};

}  // namespace

Graph parse_gml(std::istream& text) {
    GmlParser parser(text);
    return parser.parse();
}

Graph load_graph_file(const std::string& path, const std::string& format, bool directed,
                      bool weighted) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open graph file: " + path);
    Graph g;
    if (format == "gml") {
        g = parse_gml(in);
        g.is_weighted = weighted;
    } else if (format == "edgelist") {
        g = parse_edge_list(in, directed, weighted);
    } else {
        throw DataError("unknown graph format '" + format + "' (expected gml or edgelist)");
    }
    return g;
}

void write_canonical_edge_list(const Graph& g, std::ostream& out) {
    std::vector<std::pair<std::pair<std::string, std::string>, double>> lines;
    lines.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        std::string a = g.node_names[e.u];
        std::string b = g.node_names[e.v];
        if (b < a) std::swap(a, b);
        lines.push_back({{std::move(a), std::move(b)}, e.w});
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [pair, w] : lines)
        out << pair.first << ' ' << pair.second << ' ' << format_double(w) << '\n';
}

// ---------------------------------------------------------------------------
// Ground truth
// ---------------------------------------------------------------------------

namespace {

GroundTruth densify(const Graph& g, const std::vector<std::string>& raw_labels) {
    GroundTruth t;
    t.labels.resize(raw_labels.size());
    std::map<std::string, int> remap;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] = remap.emplace(raw_labels[i], static_cast<int>(remap.size()));
        t.labels[i] = it->second;
    }
    t.num_communities = static_cast<int>(remap.size());
    (void)g;
    return t;
}

}  // namespace

GroundTruth ground_truth_from_stream(std::istream& text, const Graph& g) {
    std::unordered_map<std::string, int> id;
    for (int i = 0; i < g.num_nodes(); ++i) id[g.node_names[i]] = i;

    std::vector<std::string> raw(g.num_nodes());
    std::vector<bool> seen(g.num_nodes(), false);
    std::string line;
    int line_no = 0;
    while (std::getline(text, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields = split_fields(t);
        if (fields.size() != 2)
            throw ParseError("truth line " + std::to_string(line_no) +
                             ": expected 'node label', got " + std::to_string(fields.size()) +
                             " fields");
        auto it = id.find(fields[0]);
        if (it == id.end())
            throw DataError("truth line " + std::to_string(line_no) + ": unknown node '" +
                            fields[0] + "'");
        if (seen[it->second])
            throw DataError("truth line " + std::to_string(line_no) + ": node '" + fields[0] +
                            "' labeled twice");
        seen[it->second] = true;
        raw[it->second] = fields[1];
    }
    std::string missing;
    for (int i = 0; i < g.num_nodes(); ++i)
        if (!seen[i]) missing += (missing.empty() ? "" : ", ") + g.node_names[i];
    if (!missing.empty()) throw DataError("nodes without ground-truth label: " + missing);
    return densify(g, raw);
}

GroundTruth ground_truth_from_attr(const Graph& g, const std::string& attr) {
    if (g.node_attrs.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DataError("graph carries no per-node attributes");
    std::vector<std::string> raw(g.num_nodes());
    std::string missing;
    for (int i = 0; i < g.num_nodes(); ++i) {
        auto it = g.node_attrs[i].find(attr);
        if (it == g.node_attrs[i].end()) {
            missing += (missing.empty() ? "" : ", ") + g.node_names[i];
            continue;
        }
        raw[i] = it->second;
    }
    if (!missing.empty())
        throw DataError("nodes without attribute '" + attr + "': " + missing);
    return densify(g, raw);
}

GroundTruth load_ground_truth_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open ground-truth file: " + path);
    return ground_truth_from_stream(in, g);
}

}  // namespace rmscd
