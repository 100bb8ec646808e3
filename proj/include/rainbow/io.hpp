#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads the plain text instance format:
///   # optional comment lines anywhere
///   n m
///   u v c        (m lines, 0 <= u,v < n, u != v, c >= 0)
/// Blank lines are ignored. Throws ParseError with a line number on any
/// malformed or invalid content.
EdgeColoredGraph load_instance(std::istream& in);
EdgeColoredGraph load_instance_file(const std::string& path);

/// Writes "n m" followed by edges sorted by (u, v), one per line. Comment
/// lines, if given, are emitted first with a "# " prefix. load o save is the
/// identity, and save o load is byte-idempotent.
void save_instance(const EdgeColoredGraph& g, std::ostream& out,
                   const std::vector<std::string>& comments = {});
void save_instance_file(const EdgeColoredGraph& g, const std::string& path,
                        const std::vector<std::string>& comments = {});
std::string to_instance_text(const EdgeColoredGraph& g);

/// Reads a matching as lines of "u v c" triples ('#' comments and blank lines
/// allowed). Edges are not required to exist in any graph here.
std::vector<ColoredEdge> load_matching(std::istream& in);
std::vector<ColoredEdge> load_matching_file(const std::string& path);

}  // namespace rainbow
