#include "oddfactor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace oddfactor {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph parse_edge_list(std::string_view text) {
  int order = -1;
  std::vector<std::uint64_t> seen;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto parts = fields(line);

    if (order < 0) {
      if (parts.size() != 2 || parts[0] != "n" || !to_int(parts[1], order) || order < 0) {
        throw ParseError(line_no, "expected header \"n <count>\"");
      }
      if (order > Graph::kMaxOrder) {
        throw ParseError(line_no, "order " + std::to_string(order) + " exceeds maximum " +
                                      std::to_string(Graph::kMaxOrder));
      }
      seen.assign(static_cast<std::size_t>(order), 0);
      continue;
    }

    int u = 0;
    int v = 0;
    if (parts.size() != 2 || !to_int(parts[0], u) || !to_int(parts[1], v)) {
      throw ParseError(line_no, "expected edge \"<u> <v>\"");
    }
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(order - 1));
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if ((seen[static_cast<std::size_t>(u)] >> v) & 1U) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    seen[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    edges.emplace_back(u, v);
  }
  if (order < 0) throw ParseError(line_no, "missing header \"n <count>\"");
  return Graph(order, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_edge_list(g);
}

}  // namespace oddfactor
