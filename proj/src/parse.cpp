#include "semigraph/parse.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace semigraph {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return tokens;
}

}  // namespace

Semigraph parse_semigraph(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, VertexIndex, std::less<>> index;

  auto intern = [&](const Token& tok, std::size_t line) -> VertexIndex {
    if (tok.text.front() == '#')
      throw ParseError(line, tok.column, "label must not start with '#'");
    if (auto it = index.find(tok.text); it != index.end()) return it->second;
    const auto v = static_cast<VertexIndex>(labels.size());
    labels.push_back(tok.text);
    index.emplace(tok.text, v);
    return v;
  };

  struct PendingEdge {
    std::vector<VertexIndex> verts;
    std::size_t line;
    std::size_t column;
  };
  std::vector<PendingEdge> pending;

  std::size_t line_no = 0;
  std::istringstream lines{std::string(text)};
  std::string raw;
  while (std::getline(lines, raw)) {
    ++line_no;
    auto tokens = tokenize(raw);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;

    if (tokens[0].text == "v") {
      if (tokens.size() < 2)
        throw ParseError(line_no, tokens[0].column, "vertex line needs at least one label");
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (index.contains(tokens[t].text))
          throw ParseError(line_no, tokens[t].column,
                           "duplicate vertex declaration '" + tokens[t].text + "'");
        intern(tokens[t], line_no);
      }
    } else if (tokens[0].text == "e") {
      if (tokens.size() < 3)
        throw ParseError(line_no, tokens[0].column, "an edge needs at least two vertices");
      PendingEdge e{{}, line_no, tokens[0].column};
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        VertexIndex v = intern(tokens[t], line_no);
        for (VertexIndex u : e.verts) {
          if (u == v)
            throw ParseError(line_no, tokens[t].column,
                             "repeated vertex '" + tokens[t].text + "' within an edge");
        }
        e.verts.push_back(v);
      }
      pending.push_back(std::move(e));
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown directive '" + tokens[0].text + "' (expected 'v', 'e' or '#')");
    }
  }

  if (labels.size() < 2) throw ParseError(0, 0, "at least two vertices required (n >= 2)");

  // Duplicate and intersection checks are repeated by the Semigraph
  // constructor; doing them here first attaches line numbers.
  std::vector<Edge> edges;
  std::map<std::vector<VertexIndex>, std::size_t> seen;
  std::map<VertexPair, std::size_t> pair_owner;
  for (std::size_t k = 0; k < pending.size(); ++k) {
    Edge e{pending[k].verts};
    e.canonicalize();
    if (auto it = seen.find(e.vertices()); it != seen.end())
      throw ParseError(pending[k].line, pending[k].column,
                       "duplicate edge (up to reversal) of the edge on line " +
                           std::to_string(pending[it->second].line));
    seen.emplace(e.vertices(), k);
    for (std::size_t a = 0; a + 1 < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        auto [it, inserted] = pair_owner.emplace(make_pair_key(e[a], e[b]), k);
        if (!inserted)
          throw ParseError(pending[k].line, pending[k].column,
                           "two distinct edges may share at most one vertex: this edge and the "
                           "edge on line " +
                               std::to_string(pending[it->second].line) + " share {" +
                               labels[static_cast<std::size_t>(e[a])] + ", " +
                               labels[static_cast<std::size_t>(e[b])] + "}");
      }
    }
    edges.push_back(std::move(e));
  }

  return Semigraph(std::move(labels), std::move(edges));
}

std::string emit_semigraph(const Semigraph& g) {
  std::ostringstream out;
  out << 'v';
  for (const auto& label : g.labels()) out << ' ' << label;
  out << '\n';
  for (const auto& e : g.edges()) {
    out << 'e';
    for (VertexIndex v : e.vertices()) out << ' ' << g.label(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace semigraph
