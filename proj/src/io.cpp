#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperrho/error.hpp"
#include "hyperrho/hypergraph.hpp"

namespace hyperrho {
namespace {

std::vector<long> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw Error(Errc::SyntaxError, "line " + std::to_string(line_no) + ": '" + std::string(line.substr(i, j - i)) +
                                         "' is not an integer");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

UniformHypergraph parse_uhg(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<long>>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, line_no);
    if (!tokens.empty()) rows.emplace_back(line_no, std::move(tokens));
  }
  if (rows.empty()) throw Error(Errc::SyntaxError, "missing 'k n m' header");
  const auto& header = rows.front().second;
  if (header.size() != 3) throw Error(Errc::SyntaxError, "header must be exactly 'k n m'");
  const long k = header[0], n = header[1], m = header[2];
  if (k < 2 || n < 1 || m < 0 || k > 1'000'000 || n > 100'000'000) {
    throw Error(Errc::SyntaxError, "header values out of range");
  }
  if (rows.size() - 1 != static_cast<std::size_t>(m)) {
    throw Error(Errc::SyntaxError, "header announces " + std::to_string(m) + " edges but " +
                                       std::to_string(rows.size() - 1) + " edge lines follow");
  }
  EdgeList edges;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& [no, tokens] = rows[r];
    if (tokens.size() != static_cast<std::size_t>(k)) {
      throw Error(Errc::EdgeWrongSize, "line " + std::to_string(no) + " lists " + std::to_string(tokens.size()) +
                                           " vertices, expected " + std::to_string(k));
    }
    std::vector<Vertex> e;
    for (long t : tokens) {
      if (t < 0 || t >= n) {
        throw Error(Errc::VertexOutOfRange, "line " + std::to_string(no) + ": vertex " + std::to_string(t));
      }
      e.push_back(static_cast<Vertex>(t));
    }
    edges.push_back(std::move(e));
  }
  return UniformHypergraph::build(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

std::string serialize_uhg(const UniformHypergraph& g) {
  std::ostringstream out;
  out << g.k() << ' ' << g.n() << ' ' << g.m() << '\n';
  for (std::size_t e = 0; e < g.m(); ++e) {
    bool first = true;
    for (Vertex v : g.edge(e)) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

UniformHypergraph read_uhg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_uhg(buf.str());
}

}  // namespace hyperrho
