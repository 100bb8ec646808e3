#include "rainbow/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rainbow {

namespace {

bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool is_comment(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return false;
}

// Splits a data line into exactly `want` base-10 non-negative integers.
std::vector<long long> parse_fields(const std::string& line, size_t want, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(lineno, "expected non-negative integer, got '" + tok + "'");
        if (tok.size() > 18) throw ParseError(lineno, "number too large: '" + tok + "'");
        out.push_back(std::stoll(tok));
    }
    if (out.size() != want)
        throw ParseError(lineno, "expected " + std::to_string(want) + " fields, got " +
                                     std::to_string(out.size()));
    return out;
}

// Yields (line number, content) for data lines, skipping comments and blanks.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}
    bool next(std::string& line, int& lineno) {
        while (std::getline(in_, raw_)) {
            ++count_;
            if (is_blank(raw_) || is_comment(raw_)) continue;
            line = raw_;
            lineno = count_;
            return true;
        }
        return false;
    }
    int line_count() const { return count_; }

private:
    std::istream& in_;
    std::string raw_;
    int count_ = 0;
};

}  // namespace

EdgeColoredGraph load_instance(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int lineno = 0;
    if (!reader.next(line, lineno)) throw ParseError(reader.line_count() + 1, "missing 'n m' header");
    auto header = parse_fields(line, 2, lineno);
    long long n = header[0], m = header[1];
    if (n > 100'000'000) throw ParseError(lineno, "vertex count too large");

    std::vector<ColoredEdge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line, lineno))
            throw ParseError(reader.line_count() + 1,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(i));
        auto f = parse_fields(line, 3, lineno);
        if (f[0] >= n || f[1] >= n)
            throw ParseError(lineno, "vertex id out of range for n=" + std::to_string(n));
        if (f[0] == f[1]) throw ParseError(lineno, "self-loop at vertex " + std::to_string(f[0]));
        edges.push_back({static_cast<int>(f[0]), static_cast<int>(f[1]), f[2]});
    }
    if (reader.next(line, lineno)) throw ParseError(lineno, "unexpected data after last edge");
    try {
        return EdgeColoredGraph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line_count(), e.what());
    }
}

EdgeColoredGraph load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_instance(in);
}

void save_instance(const EdgeColoredGraph& g, std::ostream& out,
                   const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const ColoredEdge& e : g.edges()) out << e.u << " " << e.v << " " << e.color << "\n";
}

void save_instance_file(const EdgeColoredGraph& g, const std::string& path,
                        const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_instance(g, out, comments);
}

std::string to_instance_text(const EdgeColoredGraph& g) {
    std::ostringstream ss;
    save_instance(g, ss);
    return ss.str();
}

std::vector<ColoredEdge> load_matching(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int lineno = 0;
    std::vector<ColoredEdge> edges;
    while (reader.next(line, lineno)) {
        auto f = parse_fields(line, 3, lineno);
        if (f[0] == f[1]) throw ParseError(lineno, "self-loop at vertex " + std::to_string(f[0]));
        int u = static_cast<int>(f[0]), v = static_cast<int>(f[1]);
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, f[2]});
    }
    return edges;
}

std::vector<ColoredEdge> load_matching_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_matching(in);
}

}  // namespace rainbow
