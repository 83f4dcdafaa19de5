#include "connsets/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "connsets/errors.hpp"

namespace connsets {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty string");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside 63..126");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported size header (n > 64)");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) throw ParseError("graph6: vertex count " + std::to_string(n) + " outside [1, 64]");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " body bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = text[pos + k / 6] - 63;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::vector<long long> nums;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError("edge list: bad token '" + tok + "'");
      nums.push_back(value);
    }
  }
  if (nums.size() < 2) throw ParseError("edge list: missing \"n m\" header");
  const long long n = nums[0], m = nums[1];
  if (n < 1 || n > kMaxVertices) throw ParseError("edge list: vertex count outside [1, 64]");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m)
    throw ParseError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string((static_cast<long long>(nums.size()) - 2) / 2) + " edge pairs");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = nums[2 + 2 * i], v = nums[3 + 2 * i];
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const ContractError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

}  // namespace connsets
