#include "pathpack/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pathpack {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) {
    throw std::invalid_argument("graph order must be non-negative");
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(words_ * static_cast<std::size_t>(n), 0);
  adj_.resize(static_cast<std::size_t>(n));

  auto set_bit = [this](Vertex u, Vertex v) {
    const auto bit = static_cast<std::size_t>(u) * words_ * 64 + static_cast<std::size_t>(v);
    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  };

  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n = " + std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
    }
    set_bit(u, v);
    set_bit(v, u);
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("graph file: missing header line");
  }
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
      throw std::runtime_error("graph file: malformed header '" + line + "'");
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw std::runtime_error("graph file line " + std::to_string(lineno) + ": malformed edge '" +
                               line + "'");
    }
    if (u < 0 || v >= n || u >= v) {
      throw std::runtime_error("graph file line " + std::to_string(lineno) +
                               ": edge must satisfy 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("graph file: header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph file: ") + e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open graph file '" + path + "'");
  }
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write graph file '" + path + "'");
  }
  write_graph(out, g);
}

}  // namespace pathpack
