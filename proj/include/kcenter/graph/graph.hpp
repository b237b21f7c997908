#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "kcenter/core/error.hpp"
#include "kcenter/core/types.hpp"

namespace kcenter {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Dist w = 1;
};

/// Immutable undirected graph in CSR form. Neighbor lists are sorted by id.
class Graph {
 public:
  Graph() = default;

  std::size_t n() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t m() const noexcept { return targets_.size() / 2; }
  Dist max_weight() const noexcept { return max_weight_; }
  bool weighted() const noexcept { return max_weight_ > 1; }

  std::span<const Vertex> neighbors(Vertex u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::span<const Dist> weights(Vertex u) const noexcept {
    return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  /// Each undirected edge once, with u < v, ordered by (u, v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m());
    for (Vertex u = 0; u < n(); ++u) {
      auto nb = neighbors(u);
      auto ws = weights(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (u < nb[i]) out.push_back({u, nb[i], ws[i]});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Dist> weights_;
  Dist max_weight_ = 1;
};

/// Collects edges and validates them when the graph is built.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n, Dist max_weight = 1) : n_(n), max_weight_(max_weight) {
    require(max_weight >= 1, ErrorCode::InvalidInstance, "weight bound must be >= 1");
  }

  std::size_t n() const noexcept { return n_; }

  /// Appends a fresh vertex and returns its id.
  Vertex add_vertex() { return static_cast<Vertex>(n_++); }

  GraphBuilder& add_edge(Vertex u, Vertex v, Dist w = 1) {
    edges_.push_back({u, v, w});
    return *this;
  }

  /// Adds a path of `len` edges from u to v, creating len - 1 internal vertices.
  /// Returns the internal vertices in order from u to v.
  std::vector<Vertex> add_path(Vertex u, Vertex v, std::size_t len) {
    require(len >= 1, ErrorCode::InvalidArgument, "path length must be >= 1");
    std::vector<Vertex> internal;
    internal.reserve(len - 1);
    Vertex prev = u;
    for (std::size_t i = 1; i < len; ++i) {
      Vertex x = add_vertex();
      internal.push_back(x);
      add_edge(prev, x);
      prev = x;
    }
    add_edge(prev, v);
    return internal;
  }

  Graph build() const {
    std::vector<std::vector<std::pair<Vertex, Dist>>> adj(n_);
    for (const Edge& e : edges_) {
      require(e.u < n_ && e.v < n_, ErrorCode::InvalidInstance,
              "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
      require(e.u != e.v, ErrorCode::InvalidInstance, "self-loop at " + std::to_string(e.u));
      require(e.w >= 1 && e.w <= max_weight_, ErrorCode::InvalidInstance,
              "weight " + std::to_string(e.w) + " outside [1," + std::to_string(max_weight_) + "]");
      adj[e.u].push_back({e.v, e.w});
      adj[e.v].push_back({e.u, e.w});
    }
    Graph g;
    g.max_weight_ = max_weight_;
    g.offsets_.assign(n_ + 1, 0);
    g.targets_.reserve(edges_.size() * 2);
    g.weights_.reserve(edges_.size() * 2);
    for (Vertex u = 0; u < n_; ++u) {
      auto& list = adj[u];
      std::sort(list.begin(), list.end());
      for (std::size_t i = 1; i < list.size(); ++i) {
        require(list[i].first != list[i - 1].first, ErrorCode::InvalidInstance,
                "duplicate edge (" + std::to_string(u) + "," + std::to_string(list[i].first) + ")");
      }
      for (auto [v, w] : list) {
        g.targets_.push_back(v);
        g.weights_.push_back(w);
      }
      g.offsets_[u + 1] = g.targets_.size();
    }
    return g;
  }

 private:
  std::size_t n_;
  Dist max_weight_;
  std::vector<Edge> edges_;
};

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

inline std::vector<std::uint64_t> parse_uints(const std::string& line, std::size_t lineno) {
  std::istringstream ss(line);
  std::vector<std::uint64_t> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      if (tok.front() == '-') throw std::invalid_argument("negative");
      value = std::stoull(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    }
    require(used == tok.size(), ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

}  // namespace detail

/// Reads "n m [M]" followed by m lines "u v [w]". Blank lines and '#' comments are skipped.
inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "missing header line");
  auto header = detail::parse_uints(line, lineno);
  require(header.size() == 2 || header.size() == 3, ErrorCode::ParseError, "header must be 'n m [M]'");
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  const std::uint64_t bound = header.size() == 3 ? header[2] : 1;
  require(n <= kUnreachable, ErrorCode::ParseError, "vertex count too large");
  require(bound >= 1 && bound < kUnreachable, ErrorCode::ParseError, "weight bound must be >= 1");
  GraphBuilder b(n, static_cast<Dist>(bound));
  for (std::uint64_t i = 0; i < m; ++i) {
    require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError,
            "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    auto f = detail::parse_uints(line, lineno);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    require(f.size() == 2 || f.size() == 3, ErrorCode::ParseError, where + "edge must be 'u v [w]'");
    require(f.size() == 3 || bound == 1, ErrorCode::ParseError, where + "weight required when M > 1");
    require(f[0] < n && f[1] < n, ErrorCode::ParseError, where + "vertex out of range");
    const std::uint64_t w = f.size() == 3 ? f[2] : 1;
    require(w >= 1 && w <= bound, ErrorCode::ParseError, where + "weight outside [1,M]");
    b.add_edge(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), static_cast<Dist>(w));
  }
  require(!detail::next_data_line(in, line, lineno), ErrorCode::ParseError,
          "trailing data at line " + std::to_string(lineno));
  try {
    return b.build();
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  return read_graph(in);
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m();
  if (g.weighted()) out << ' ' << g.max_weight();
  out << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.w;
    out << '\n';
  }
}

inline void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::InvalidArgument, "cannot write " + path);
  write_graph(out, g);
}

}  // namespace kcenter
