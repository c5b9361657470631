#include "sspt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sspt {

namespace {

// Tokenized non-empty lines with line numbers, for error reporting.
struct Lines {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        std::size_t no = 0;
        while (std::getline(in, line)) {
            ++no;
            std::istringstream ls(line);
            std::vector<std::string> tokens;
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) rows.push_back({no, std::move(tokens)});
        }
        line_no = no;
    }

    std::vector<std::string> next(const char* what) {
        if (pos >= rows.size())
            throw ParseError(line_no, std::string("unexpected end of file, expected ") + what);
        line_no = rows[pos].first;
        return rows[pos++].second;
    }

    bool at_end() const { return pos >= rows.size(); }
};

std::uint64_t to_u64(const Lines& ls, const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(ls.line_no, "expected nonnegative integer, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError(ls.line_no, "integer out of range: '" + tok + "'");
    }
}

std::vector<std::string> expect(Lines& ls, const char* keyword, std::size_t min_args) {
    std::vector<std::string> t = ls.next(keyword);
    if (t[0] != keyword)
        throw ParseError(ls.line_no, std::string("expected '") + keyword + "', got '" + t[0] + "'");
    if (t.size() - 1 < min_args)
        throw ParseError(ls.line_no, std::string("'") + keyword + "' needs at least " +
                                         std::to_string(min_args) + " value(s)");
    return t;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    Lines ls(text);
    auto header = expect(ls, "sspt-instance", 1);
    if (to_u64(ls, header[1]) != 1)
        throw ParseError(ls.line_no, "unsupported format version " + header[1]);
    bool directed = to_u64(ls, expect(ls, "directed", 1)[1]) != 0;
    std::uint64_t n = to_u64(ls, expect(ls, "vertices", 1)[1]);
    std::uint64_t source = to_u64(ls, expect(ls, "source", 1)[1]);

    auto term_line = expect(ls, "terminals", 0);
    std::vector<VertexId> terminals;
    for (std::size_t i = 1; i < term_line.size(); ++i)
        terminals.push_back(static_cast<VertexId>(to_u64(ls, term_line[i])));

    std::uint64_t m = to_u64(ls, expect(ls, "edges", 1)[1]);
    std::vector<Edge> edges;
    for (std::uint64_t i = 0; i < m; ++i) {
        auto t = ls.next("edge line");
        if (t.size() != 3) throw ParseError(ls.line_no, "edge line needs: tail head weight");
        std::uint64_t tail = to_u64(ls, t[0]), head = to_u64(ls, t[1]), w = to_u64(ls, t[2]);
        if (tail >= n || head >= n) throw ParseError(ls.line_no, "edge endpoint out of range");
        if (w > kMaxEdgeWeight) throw ParseError(ls.line_no, "edge weight exceeds 2^40");
        edges.push_back({static_cast<VertexId>(tail), static_cast<VertexId>(head), w});
    }

    std::optional<std::vector<Weight>> vw;
    if (!ls.at_end()) {
        auto t = expect(ls, "vertex-weights", 0);
        if (t.size() - 1 != n)
            throw ParseError(ls.line_no, "vertex-weights needs exactly one value per vertex");
        vw.emplace();
        for (std::size_t i = 1; i < t.size(); ++i) vw->push_back(to_u64(ls, t[i]));
    }

    if (source >= n) throw InvariantViolation("source out of range");
    Graph g(n, std::move(edges), directed);
    return Instance(std::move(g), static_cast<VertexId>(source), std::move(terminals),
                    std::move(vw));
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    const Graph& g = inst.graph();
    os << "sspt-instance 1\n";
    os << "directed " << (g.directed() ? 1 : 0) << "\n";
    os << "vertices " << g.vertex_count() << "\n";
    os << "source " << inst.source() << "\n";
    os << "terminals";
    for (VertexId t : inst.terminals()) os << " " << t;
    os << "\n";
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (g.directed() || e.tail < e.head) edges.push_back(e);
    os << "edges " << edges.size() << "\n";
    for (const Edge& e : edges) os << e.tail << " " << e.head << " " << e.weight << "\n";
    if (inst.vertex_weights()) {
        os << "vertex-weights";
        for (Weight w : *inst.vertex_weights()) os << " " << w;
        os << "\n";
    }
    return os.str();
}

ParsedSolution parse_solution(const std::string& text) {
    Lines ls(text);
    auto header = expect(ls, "sspt-solution", 1);
    if (to_u64(ls, header[1]) != 1)
        throw ParseError(ls.line_no, "unsupported format version " + header[1]);
    ParsedSolution sol;
    sol.tree.root = static_cast<VertexId>(to_u64(ls, expect(ls, "root", 1)[1]));
    sol.nt_count = to_u64(ls, expect(ls, "nt-count", 1)[1]);
    sol.nt_weight = to_u64(ls, expect(ls, "nt-weight", 1)[1]);
    std::uint64_t k = to_u64(ls, expect(ls, "tree-edges", 1)[1]);
    for (std::uint64_t i = 0; i < k; ++i) {
        auto t = ls.next("tree edge line");
        if (t.size() != 3) throw ParseError(ls.line_no, "tree edge line needs: parent child weight");
        VertexId parent = static_cast<VertexId>(to_u64(ls, t[0]));
        VertexId child = static_cast<VertexId>(to_u64(ls, t[1]));
        Weight w = to_u64(ls, t[2]);
        if (sol.tree.parent.count(child))
            throw ParseError(ls.line_no, "vertex " + t[1] + " has two parents");
        sol.tree.parent[child] = {parent, w};
    }
    // certificate lines are informational; ignore the rest
    return sol;
}

std::string serialize_solution(const SolutionReport& rep) {
    std::ostringstream os;
    os << "sspt-solution 1\n";
    os << "root " << rep.tree.root << "\n";
    os << "nt-count " << rep.nt_count << "\n";
    os << "nt-weight " << rep.nt_weight << "\n";
    os << "tree-edges " << rep.tree.parent.size() << "\n";
    for (const auto& [child, pe] : rep.tree.parent)
        os << pe.parent << " " << child << " " << pe.weight << "\n";
    const BoundCertificate& c = rep.certificate;
    os << "radius " << c.radius_hops << "\n";
    os << "radius-vsc " << c.radius_hops_vsc << "\n";
    os << "universe " << c.universe_size << "\n";
    os << "cover-size " << c.cover_size << "\n";
    os << "cover-weight " << c.cover_weight << "\n";
    os << "nt-before-expansion " << c.nt_before_expansion << "\n";
    os << "harmonic " << c.harmonic_bound.numerator() << "/" << c.harmonic_bound.denominator()
       << "\n";
    if (!rep.warning.empty()) os << "warning " << rep.warning << "\n";
    return os.str();
}

std::string serialize_sps(const SpSubgraph& sps) {
    std::ostringstream os;
    os << "sspt-sps 1\n";
    os << "source " << sps.source << "\n";
    os << "vertices " << sps.base.vertex_count() << "\n";
    os << "retained";
    for (VertexId v : sps.vertex_set) os << " " << v;
    os << "\n";
    os << "dist";
    for (VertexId v : sps.vertex_set) os << " " << sps.dist.dist[v];
    os << "\n";
    std::vector<Edge> edges = sps.base.edges();
    os << "edges " << edges.size() << "\n";
    for (const Edge& e : edges) os << e.tail << " " << e.head << " " << e.weight << "\n";
    return os.str();
}

SetCoverInstance parse_set_cover(const std::string& text) {
    Lines ls(text);
    auto header = expect(ls, "setcover", 1);
    if (to_u64(ls, header[1]) != 1)
        throw ParseError(ls.line_no, "unsupported format version " + header[1]);
    SetCoverInstance sc;
    sc.universe_size = static_cast<std::uint32_t>(to_u64(ls, expect(ls, "universe", 1)[1]));
    std::uint64_t m = to_u64(ls, expect(ls, "subsets", 1)[1]);
    for (std::uint64_t i = 0; i < m; ++i) {
        auto t = ls.next("subset line");
        SetCoverInstance::Subset sub;
        sub.owner = static_cast<VertexId>(i);
        sub.weight = to_u64(ls, t[0]);
        for (std::size_t j = 1; j < t.size(); ++j) {
            std::uint64_t x = to_u64(ls, t[j]);
            if (x >= sc.universe_size)
                throw ParseError(ls.line_no, "subset member out of universe");
            sub.members.push_back(static_cast<std::uint32_t>(x));
        }
        std::sort(sub.members.begin(), sub.members.end());
        sub.members.erase(std::unique(sub.members.begin(), sub.members.end()),
                          sub.members.end());
        sc.subsets.push_back(std::move(sub));
    }
    return sc;
}

std::string serialize_set_cover(const SetCoverInstance& sc) {
    std::ostringstream os;
    os << "setcover 1\n";
    os << "universe " << sc.universe_size << "\n";
    os << "subsets " << sc.subsets.size() << "\n";
    for (const auto& sub : sc.subsets) {
        os << sub.weight;
        for (std::uint32_t x : sub.members) os << " " << x;
        os << "\n";
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace sspt
