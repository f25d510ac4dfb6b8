#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "resistor/errors.hpp"
#include "resistor/graph.hpp"

namespace resistor {

namespace {

struct RawEdge {
  ExternalId u;
  ExternalId v;
  double w;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

ExternalId parse_id(std::string_view tok, std::size_t line_no) {
  ExternalId value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a nonnegative integer vertex id, got '" + std::string(tok) + "'");
  }
  return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected a numeric weight, got '" + std::string(tok) + "'");
  }
  if (!(value > 0.0)) {
    throw DomainError("line " + std::to_string(line_no) + ": edge weight must be positive");
  }
  return value;
}

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.write(reinterpret_cast<const char*>(bytes), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  unsigned char bytes[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(T))) throw IoError("truncated graph cache");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

constexpr char kMagic[4] = {'R', 'D', 'G', '1'};

}  // namespace

Graph load_edge_list(std::istream& in, bool weighted) {
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    if (tokens.size() < 2) throw ParseError(line_no, "expected 'u v [w]'");
    if (weighted && tokens.size() > 3) throw ParseError(line_no, "too many columns for a weighted edge");
    RawEdge e{parse_id(tokens[0], line_no), parse_id(tokens[1], line_no), 1.0};
    if (weighted && tokens.size() == 3) e.w = parse_weight(tokens[2], line_no);
    raw.push_back(e);
  }
  if (in.bad()) throw IoError("failed while reading edge list");

  std::vector<ExternalId> ids;
  ids.reserve(2 * raw.size());
  for (const RawEdge& e : raw) {
    if (e.u == e.v) continue;
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty()) throw EmptyGraphError("edge list contains no edges");

  auto dense = [&](ExternalId id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) {
    if (e.u == e.v) continue;
    edges.push_back({dense(e.u), dense(e.v), e.w});
  }
  return Graph::largest_component(ids.size(), edges, ids, weighted);
}

Graph load_edge_list_file(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_edge_list(in, weighted);
}

void write_edge_list(std::ostream& out, const Graph& g, bool with_weights) {
  const auto& ids = g.external_ids();
  std::ostringstream buf;
  buf.precision(17);
  for (const Edge& e : g.edges()) {
    buf << ids[e.u] << ' ' << ids[e.v];
    if (with_weights) buf << ' ' << e.weight;
    buf << '\n';
  }
  out << buf.str();
  if (!out) throw IoError("failed to write edge list");
}

void write_binary(std::ostream& out, const Graph& g) {
  out.write(kMagic, 4);
  put<std::uint64_t>(out, g.node_count());
  put<std::uint64_t>(out, g.edge_count());
  for (std::uint64_t o : g.offsets()) put(out, o);
  for (Vertex v : g.neighbor_array()) put<std::uint32_t>(out, v);
  for (double w : g.weight_array()) put(out, w);
  for (ExternalId id : g.external_ids()) put<std::uint64_t>(out, id);
  if (!out) throw IoError("failed to write graph cache");
}

Graph read_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw IoError("not an RDG1 graph cache");
  const auto n = get<std::uint64_t>(in);
  const auto m = get<std::uint64_t>(in);
  Graph g;
  g.offsets_.resize(n + 1);
  for (auto& o : g.offsets_) o = get<std::uint64_t>(in);
  if (g.offsets_.front() != 0 || g.offsets_.back() != 2 * m ||
      !std::is_sorted(g.offsets_.begin(), g.offsets_.end())) {
    throw IoError("graph cache has inconsistent offsets");
  }
  g.neighbors_.resize(2 * m);
  for (auto& v : g.neighbors_) {
    v = get<std::uint32_t>(in);
    if (v >= n) throw IoError("graph cache has out-of-range neighbor");
  }
  g.weights_.resize(2 * m);
  for (auto& w : g.weights_) w = get<double>(in);
  g.external_ids_.resize(n);
  for (auto& id : g.external_ids_) id = get<std::uint64_t>(in);
  g.finalize();
  return g;
}

Graph load_graph(const std::string& path, bool weighted) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".rdg") == 0) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return read_binary(in);
  }
  return load_edge_list_file(path, weighted);
}

}  // namespace resistor
