#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kcenter/core/bitset.hpp"
#include "kcenter/core/error.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter {

inline constexpr std::uint64_t kDefaultPowerBudget = 1'000'000;

/// Bipartite instance (A, B, E); adjacency[b] lists the a-ids adjacent to b, sorted.
struct SetCoverInstance {
  std::size_t a_count = 0;
  std::size_t b_count = 0;
  std::vector<std::vector<std::uint32_t>> adjacency;

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& nb : adjacency) e += nb.size();
    return e;
  }

  /// (a, b) pairs in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(edge_count());
    for (std::uint32_t b = 0; b < b_count; ++b) {
      for (std::uint32_t a : adjacency[b]) out.push_back({a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sorts adjacency lists and checks the instance invariants.
  void normalize() {
    require(adjacency.size() == b_count, ErrorCode::InvalidInstance, "adjacency size differs from b_count");
    for (std::size_t b = 0; b < b_count; ++b) {
      auto& nb = adjacency[b];
      std::sort(nb.begin(), nb.end());
      require(std::adjacent_find(nb.begin(), nb.end()) == nb.end(), ErrorCode::InvalidInstance,
              "duplicate neighbor of b=" + std::to_string(b));
      require(!nb.empty(), ErrorCode::InvalidInstance, "b=" + std::to_string(b) + " has no neighbor in A");
      require(nb.back() < a_count, ErrorCode::InvalidInstance, "a-id out of range for b=" + std::to_string(b));
    }
  }

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

struct OVInstance {
  std::size_t dim = 0;
  std::vector<std::vector<std::uint8_t>> vectors;
};

/// (a, i) is an edge iff vector a has a 0 in coordinate i.
inline SetCoverInstance ov_to_setcover(const OVInstance& ov) {
  SetCoverInstance sc;
  sc.a_count = ov.vectors.size();
  sc.b_count = ov.dim;
  sc.adjacency.assign(ov.dim, {});
  for (std::uint32_t a = 0; a < ov.vectors.size(); ++a) {
    require(ov.vectors[a].size() == ov.dim, ErrorCode::InvalidInstance, "vector dimension mismatch");
    for (std::size_t i = 0; i < ov.dim; ++i) {
      if (ov.vectors[a][i] == 0) sc.adjacency[i].push_back(a);
    }
  }
  sc.normalize();
  return sc;
}

/// A' = g-tuples of A in lexicographic order; a tuple is adjacent to b iff some entry is.
inline SetCoverInstance power_setcover(const SetCoverInstance& sc, std::size_t g,
                                       std::uint64_t budget = kDefaultPowerBudget) {
  require(g >= 1, ErrorCode::InvalidArgument, "power must be >= 1");
  unsigned __int128 size = 1;
  for (std::size_t i = 0; i < g; ++i) {
    size *= sc.a_count;
    require(size <= budget, ErrorCode::BudgetExceeded,
            "a_count^g exceeds power budget " + std::to_string(budget));
  }
  const auto count = static_cast<std::size_t>(size);
  SetCoverInstance out;
  out.a_count = count;
  out.b_count = sc.b_count;
  out.adjacency.assign(sc.b_count, {});
  std::vector<std::vector<char>> adj(sc.b_count, std::vector<char>(sc.a_count, 0));
  for (std::size_t b = 0; b < sc.b_count; ++b) {
    for (auto a : sc.adjacency[b]) adj[b][a] = 1;
  }
  std::vector<std::size_t> digits(g, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    // digits holds the mixed-radix expansion of idx, most significant first
    for (std::size_t b = 0; b < sc.b_count; ++b) {
      if (std::any_of(digits.begin(), digits.end(), [&](std::size_t a) { return adj[b][a] != 0; })) {
        out.adjacency[b].push_back(static_cast<std::uint32_t>(idx));
      }
    }
    for (std::size_t p = g; p-- > 0;) {
      if (++digits[p] < sc.a_count) break;
      digits[p] = 0;
    }
  }
  out.normalize();
  return out;
}

/// Components of the g-tuple with index `idx` in the powered instance.
inline std::vector<std::uint32_t> power_tuple(std::size_t a_count, std::size_t g, std::size_t idx) {
  std::vector<std::uint32_t> out(g);
  for (std::size_t p = g; p-- > 0;) {
    out[p] = static_cast<std::uint32_t>(idx % a_count);
    idx /= a_count;
  }
  return out;
}

inline bool is_set_cover(const SetCoverInstance& sc, const std::vector<std::uint32_t>& cover) {
  for (auto a : cover) {
    if (a >= sc.a_count) return false;
  }
  for (std::size_t b = 0; b < sc.b_count; ++b) {
    const auto& nb = sc.adjacency[b];
    const bool hit = std::any_of(cover.begin(), cover.end(),
                                 [&](std::uint32_t a) { return std::binary_search(nb.begin(), nb.end(), a); });
    if (!hit) return false;
  }
  return true;
}

/// Lexicographically first cover with exactly min(size, a_count) distinct elements, if any.
inline std::optional<std::vector<std::uint32_t>> find_set_cover(const SetCoverInstance& sc, std::size_t size) {
  size = std::min(size, sc.a_count);
  std::vector<Bitset> covers(sc.a_count, Bitset(sc.b_count));
  for (std::uint32_t b = 0; b < sc.b_count; ++b) {
    for (auto a : sc.adjacency[b]) covers[a].set(b);
  }
  std::vector<std::uint32_t> chosen;
  std::vector<Bitset> acc{Bitset(sc.b_count)};
  std::optional<std::vector<std::uint32_t>> found;
  auto rec = [&](auto&& self, std::uint32_t next) -> bool {
    if (chosen.size() == size) {
      if (acc.back().count() == sc.b_count) {
        found = chosen;
        return true;
      }
      return false;
    }
    for (std::uint32_t a = next; a + (size - chosen.size()) <= sc.a_count; ++a) {
      Bitset m = acc.back();
      m |= covers[a];
      chosen.push_back(a);
      acc.push_back(std::move(m));
      const bool hit = self(self, a + 1);
      acc.pop_back();
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

/// Smallest cover size (brute force); at most a_count since every b has a neighbor.
inline std::size_t min_set_cover_size(const SetCoverInstance& sc) {
  if (sc.b_count == 0) return 0;
  for (std::size_t s = 1; s <= sc.a_count; ++s) {
    if (find_set_cover(sc, s)) return s;
  }
  fail(ErrorCode::InvalidInstance, "set cover instance has no cover");
}

inline SetCoverInstance read_setcover(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "missing set cover header");
  auto header = detail::parse_uints(line, lineno);
  require(header.size() == 2, ErrorCode::ParseError, "set cover header must be 'a_count b_count'");
  SetCoverInstance sc;
  sc.a_count = header[0];
  sc.b_count = header[1];
  sc.adjacency.resize(sc.b_count);
  for (std::size_t b = 0; b < sc.b_count; ++b) {
    require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError,
            "expected " + std::to_string(sc.b_count) + " neighbor lines");
    for (auto a : detail::parse_uints(line, lineno)) {
      require(a < sc.a_count, ErrorCode::ParseError, "line " + std::to_string(lineno) + ": a-id out of range");
      sc.adjacency[b].push_back(static_cast<std::uint32_t>(a));
    }
  }
  require(!detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "trailing data in set cover file");
  try {
    sc.normalize();
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return sc;
}

inline OVInstance read_ov(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "missing OV header");
  auto header = detail::parse_uints(line, lineno);
  require(header.size() == 2, ErrorCode::ParseError, "OV header must be 'count d'");
  OVInstance ov;
  ov.dim = header[1];
  for (std::size_t i = 0; i < header[0]; ++i) {
    require(detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "missing OV vector");
    std::istringstream ss(line);
    std::string bits;
    ss >> bits;
    require(bits.size() == ov.dim, ErrorCode::ParseError, "line " + std::to_string(lineno) + ": wrong dimension");
    std::vector<std::uint8_t> v;
    for (char ch : bits) {
      require(ch == '0' || ch == '1', ErrorCode::ParseError, "line " + std::to_string(lineno) + ": not a bitstring");
      v.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    ov.vectors.push_back(std::move(v));
  }
  require(!detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "trailing data in OV file");
  return ov;
}

inline void write_setcover(std::ostream& out, const SetCoverInstance& sc) {
  out << sc.a_count << ' ' << sc.b_count << '\n';
  for (const auto& nb : sc.adjacency) {
    for (std::size_t i = 0; i < nb.size(); ++i) out << (i ? " " : "") << nb[i];
    out << '\n';
  }
}

template <typename T, typename Reader>
T read_file_with(const std::string& path, Reader&& reader) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  return reader(in);
}

inline SetCoverInstance read_setcover_file(const std::string& path) {
  return read_file_with<SetCoverInstance>(path, [](std::istream& in) { return read_setcover(in); });
}

inline OVInstance read_ov_file(const std::string& path) {
  return read_file_with<OVInstance>(path, [](std::istream& in) { return read_ov(in); });
}

}  // namespace kcenter
