#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kcenter/core/error.hpp"
#include "kcenter/gadget/gadget.hpp"
#include "kcenter/gadget/setcover.hpp"
#include "kcenter/graph/graph.hpp"

namespace kcenter::cli {

/// Non-negative integers separated by whitespace or commas; '#' starts a comment.
inline std::vector<std::uint64_t> read_id_list(std::istream& in) {
  std::vector<std::uint64_t> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line) {
      if (ch == ',') ch = ' ';
    }
    auto ids = kcenter::detail::parse_uints(line, lineno);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  return out;
}

inline std::vector<std::uint64_t> parse_id_list(const std::string& text) {
  std::istringstream in(text);
  return read_id_list(in);
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path);
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::InvalidArgument, "cannot write " + path);
  return out;
}

/// Splits "a=1 b=x" into a map; tokens without '=' are rejected.
inline std::map<std::string, std::string> parse_kv_line(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    require(eq != std::string::npos && eq > 0, ErrorCode::ParseError, "expected key=value, got '" + tok + "'");
    out[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return out;
}

inline std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty() && text[0] != '-', ErrorCode::ParseError,
          what + ": not a non-negative integer: '" + text + "'");
  return v;
}

inline double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == text.size() && !text.empty(), ErrorCode::ParseError, what + ": not a number: '" + text + "'");
  return v;
}

// Gadget sidecars: <prefix>.graph, <prefix>.roles, <prefix>.manifest, <prefix>.sc

inline void write_gadget_files(const std::string& prefix, const GadgetOutput& gout) {
  write_graph_file(prefix + ".graph", gout.graph);
  {
    auto out = open_output(prefix + ".roles");
    write_roles(out, gout);
  }
  {
    auto out = open_output(prefix + ".manifest");
    out << manifest_line(gout) << '\n';
  }
  auto out = open_output(prefix + ".sc");
  write_setcover(out, gout.source);
}

inline Role parse_role(const std::string& s, std::size_t lineno) {
  for (Role r : {Role::A, Role::B, Role::Hub, Role::Path, Role::Tail}) {
    if (s == to_string(r)) return r;
  }
  fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": unknown role '" + s + "'");
}

inline std::vector<VertexRole> read_roles(std::istream& in) {
  std::vector<VertexRole> out;
  std::string line;
  std::size_t lineno = 0;
  while (kcenter::detail::next_data_line(in, line, lineno)) {
    std::istringstream ss(line);
    std::string v, role, src, gid, extra;
    require(static_cast<bool>(ss >> v >> role >> src >> gid) && !(ss >> extra), ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": expected 'vertex role source gadget'");
    require(parse_u64(v, "vertex") == out.size(), ErrorCode::ParseError,
            "line " + std::to_string(lineno) + ": vertices must be listed in order");
    VertexRole r;
    r.role = parse_role(role, lineno);
    if (src != "-") r.source = static_cast<std::uint32_t>(parse_u64(src, "source id"));
    if (gid != "-") r.gadget = static_cast<std::uint32_t>(parse_u64(gid, "gadget id"));
    out.push_back(r);
  }
  return out;
}

inline GadgetKind parse_kind(const std::string& s) {
  for (GadgetKind k : {GadgetKind::Base, GadgetKind::Simple, GadgetKind::Recursive}) {
    if (s == to_string(k)) return k;
  }
  fail(ErrorCode::ParseError, "unknown gadget kind '" + s + "'");
}

/// Rebuilds a GadgetOutput from its sidecar files. Block lengths are not recoverable and stay 0.
inline GadgetOutput load_gadget(const std::string& prefix) {
  GadgetOutput g;
  g.graph = read_graph_file(prefix + ".graph");
  g.source = read_setcover_file(prefix + ".sc");
  {
    auto in = open_input(prefix + ".roles");
    g.roles = read_roles(in);
  }
  {
    auto in = open_input(prefix + ".manifest");
    std::string line;
    std::size_t lineno = 0;
    require(kcenter::detail::next_data_line(in, line, lineno), ErrorCode::ParseError, "empty manifest");
    const auto kv = parse_kv_line(line);
    auto get = [&](const char* key) {
      auto it = kv.find(key);
      require(it != kv.end(), ErrorCode::ParseError, std::string("manifest lacks ") + key);
      return it->second;
    };
    g.predicted_yes_radius = static_cast<Radius>(parse_u64(get("yes_radius"), "yes_radius"));
    g.center_budget = parse_u64(get("center_budget"), "center_budget");
    g.kind = kv.count("kind") ? parse_kind(kv.at("kind")) : GadgetKind::Recursive;
    if (kv.count("t")) g.t = parse_u64(kv.at("t"), "t");
    if (kv.count("ell")) g.ell = parse_u64(kv.at("ell"), "ell");
    if (kv.count("k")) g.k = parse_u64(kv.at("k"), "k");
  }
  require(g.roles.size() == g.graph.n(), ErrorCode::InvalidInstance,
          "role file lists " + std::to_string(g.roles.size()) + " vertices, graph has " + std::to_string(g.graph.n()));

  const auto& sc = g.source;
  constexpr Vertex kUnset = UINT32_MAX;
  for (Vertex v = 0; v < g.roles.size(); ++v) {
    const VertexRole& r = g.roles[v];
    if (r.role != Role::A && r.role != Role::B && r.role != Role::Hub) continue;
    require(r.gadget.has_value(), ErrorCode::InvalidInstance, "vertex " + std::to_string(v) + " lacks a gadget id");
    const std::uint32_t gid = *r.gadget;
    while (g.gadgets.size() <= gid) {
      GadgetBlock blk;
      blk.a_vertex.assign(sc.a_count, kUnset);
      blk.b_vertex.assign(sc.b_count, kUnset);
      blk.hub = kUnset;
      g.gadgets.push_back(std::move(blk));
    }
    GadgetBlock& blk = g.gadgets[gid];
    Vertex* slot = &blk.hub;
    if (r.role != Role::Hub) {
      require(r.source.has_value(), ErrorCode::InvalidInstance, "vertex " + std::to_string(v) + " lacks a source id");
      auto& side = r.role == Role::A ? blk.a_vertex : blk.b_vertex;
      require(*r.source < side.size(), ErrorCode::InvalidInstance,
              "vertex " + std::to_string(v) + " names a source id outside the set cover instance");
      slot = &side[*r.source];
    }
    require(*slot == kUnset, ErrorCode::InvalidInstance, "vertex " + std::to_string(v) + " duplicates a gadget role");
    *slot = v;
  }
  for (std::size_t gid = 0; gid < g.gadgets.size(); ++gid) {
    const GadgetBlock& blk = g.gadgets[gid];
    bool complete = blk.hub != kUnset;
    for (Vertex a : blk.a_vertex) complete = complete && a != kUnset;
    for (Vertex b : blk.b_vertex) complete = complete && b != kUnset;
    require(complete, ErrorCode::InvalidInstance, "gadget " + std::to_string(gid) + " is incomplete in the role file");
  }
  return g;
}

}  // namespace kcenter::cli
