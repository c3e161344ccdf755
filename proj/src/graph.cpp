#include "pathalg/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "pathalg/error.hpp"

namespace pathalg {

void validate_graph(const GraphDecl& decl) {
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> vertex_ids;
  for (const auto& v : decl.vertices) {
    if (!ids.insert(v).second) throw Error(ErrorCode::DuplicateId, "identifier '" + v + "' declared twice");
    vertex_ids.insert(v);
  }
  for (const auto& e : decl.edges) {
    if (!ids.insert(e.id).second)
      throw Error(ErrorCode::DuplicateId, "identifier '" + e.id + "' declared twice");
    if (!vertex_ids.contains(e.src))
      throw Error(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' has unknown source '" + e.src + "'");
    if (!vertex_ids.contains(e.tgt))
      throw Error(ErrorCode::DanglingEndpoint, "edge '" + e.id + "' has unknown target '" + e.tgt + "'");
  }
  std::unordered_set<std::string> flagged;
  for (const auto& inf : decl.infinite_emitters) {
    if (!vertex_ids.contains(inf.vertex))
      throw Error(ErrorCode::DanglingEndpoint, "infinite emitter '" + inf.vertex + "' is not a vertex");
    if (!flagged.insert(inf.vertex).second)
      throw Error(ErrorCode::DuplicateId, "infinite emitter '" + inf.vertex + "' annotated twice");
    if (inf.unlisted_targets) {
      if (inf.unlisted_targets->empty())
        throw Error(ErrorCode::DanglingEndpoint,
                    "infinite emitter '" + inf.vertex + "' declares an empty unlisted_targets list");
      for (const auto& t : *inf.unlisted_targets)
        if (!vertex_ids.contains(t))
          throw Error(ErrorCode::DanglingEndpoint,
                      "infinite emitter '" + inf.vertex + "' has unknown unlisted target '" + t + "'");
    }
  }
}

// ---------------------------------------------------------------------------
// Path

Path Path::operator*(const Path& rhs) const {
  std::vector<Edge> joined = edges_;
  joined.insert(joined.end(), rhs.edges_.begin(), rhs.edges_.end());
  return Path(source_, rhs.target_, std::move(joined));
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(), b.edges_.begin(),
                                                       b.edges_.end());
      c != 0)
    return c;
  if (auto c = a.source_ <=> b.source_; c != 0) return c;
  return a.target_ <=> b.target_;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(GraphDecl decl) : decl_(std::move(decl)) {
  validate_graph(decl_);
  const auto nv = decl_.vertices.size();
  for (std::uint32_t i = 0; i < nv; ++i) vertex_index_.emplace(decl_.vertices[i], i);
  out_.resize(nv);
  in_.resize(nv);
  for (std::uint32_t i = 0; i < decl_.edges.size(); ++i) {
    const auto& ed = decl_.edges[i];
    edge_index_.emplace(ed.id, i);
    Vertex s{vertex_index_.at(ed.src)}, t{vertex_index_.at(ed.tgt)};
    src_.push_back(s);
    tgt_.push_back(t);
    out_[s.index].push_back(Edge{i});
    in_[t.index].push_back(Edge{i});
  }
  infinite_.assign(nv, false);
  unlisted_.resize(nv);
  for (const auto& inf : decl_.infinite_emitters) {
    auto v = vertex_index_.at(inf.vertex);
    infinite_[v] = true;
    if (inf.unlisted_targets) {
      std::vector<Vertex> targets;
      for (const auto& t : *inf.unlisted_targets) targets.push_back(Vertex{vertex_index_.at(t)});
      unlisted_[v] = std::move(targets);
    }
  }
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  for (std::uint32_t i = 0; i < vertex_count(); ++i) out.push_back(Vertex{i});
  return out;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  for (std::uint32_t i = 0; i < edge_count(); ++i) out.push_back(Edge{i});
  return out;
}

std::optional<Vertex> Graph::find_vertex(const std::string& id) const {
  if (auto it = vertex_index_.find(id); it != vertex_index_.end()) return Vertex{it->second};
  return std::nullopt;
}

std::optional<Edge> Graph::find_edge(const std::string& id) const {
  if (auto it = edge_index_.find(id); it != edge_index_.end()) return Edge{it->second};
  return std::nullopt;
}

Vertex Graph::vertex_of(const std::string& id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorCode::UnknownIdentifier, "no vertex named '" + id + "'");
}

Edge Graph::edge_of(const std::string& id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(ErrorCode::UnknownIdentifier, "no edge named '" + id + "'");
}

std::optional<std::vector<Vertex>> Graph::unlisted_targets(Vertex v) const { return unlisted_[v.index]; }

void Graph::require_finite_emitters(std::string_view operation) const {
  if (has_infinite_emitters())
    throw Error(ErrorCode::UnsupportedInfiniteEmitter,
                std::string(operation) + " is not defined on graphs with infinite emitters");
}

std::optional<Path> Graph::try_make_path(std::vector<Edge> edges) const {
  if (edges.empty()) return std::nullopt;
  for (auto e : edges)
    if (e.index >= edge_count()) return std::nullopt;
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (target(edges[i - 1]) != source(edges[i])) return std::nullopt;
  Vertex s = source(edges.front()), t = target(edges.back());
  return Path(s, t, std::move(edges));
}

bool Graph::contains(const Path& p) const {
  if (p.source().index >= vertex_count() || p.target().index >= vertex_count()) return false;
  if (p.is_vertex()) return p.source() == p.target();
  auto rebuilt = try_make_path({p.edges().begin(), p.edges().end()});
  return rebuilt && *rebuilt == p;
}

Path Graph::make_path(std::vector<Edge> edges) const {
  std::string shown;
  for (auto e : edges) {
    if (!shown.empty()) shown += ' ';
    shown += e.index < edge_count() ? name(e) : "?";
  }
  if (auto p = try_make_path(std::move(edges))) return *p;
  throw Error(ErrorCode::InvalidPath, "edges [" + shown + "] do not form a path");
}

Path Graph::drop_last(const Path& p) const {
  if (p.length() <= 1) return Path::vertex(p.source());
  std::vector<Edge> rest(p.edges().begin(), p.edges().end() - 1);
  Vertex t = target(rest.back());
  return Path(p.source(), t, std::move(rest));
}

Path Graph::suffix(const Path& p, std::size_t count) const {
  if (count == 0) return p;
  if (p.length() <= count) return Path::vertex(p.target());
  std::vector<Edge> rest(p.edges().begin() + static_cast<std::ptrdiff_t>(count), p.edges().end());
  Vertex s = source(rest.front());
  return Path(s, p.target(), std::move(rest));
}

std::string Graph::format(const Path& p) const {
  if (p.is_vertex()) return name(p.source());
  std::string out;
  for (auto e : p.edges()) {
    if (!out.empty()) out += ' ';
    out += name(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vertex classes

bool is_regular_vertex(const Graph& g, Vertex v) {
  return !g.is_infinite_emitter(v) && !g.out_edges(v).empty();
}

bool is_reg0_vertex(const Graph& g, Vertex v) {
  if (!is_regular_vertex(g, v)) return false;
  auto out = g.out_edges(v);
  return out.size() == 1 && g.target(out.front()) == v;
}

std::vector<Vertex> regular_vertices(const Graph& g) {
  g.require_finite_emitters("regular_vertices");
  std::vector<Vertex> out;
  for (auto v : g.vertices())
    if (is_regular_vertex(g, v)) out.push_back(v);
  return out;
}

std::vector<Vertex> reg0_vertices(const Graph& g) {
  g.require_finite_emitters("reg0_vertices");
  std::vector<Vertex> out;
  for (auto v : g.vertices())
    if (is_reg0_vertex(g, v)) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------

bool prefix_leq(const Path& a, const Path& b) {
  if (a.source() != b.source()) return false;
  if (a.length() > b.length()) return false;
  if (a.is_vertex()) return true;
  return std::equal(a.edges().begin(), a.edges().end(), b.edges().begin());
}

Graph extended_graph(const Graph& g) {
  GraphDecl decl;
  decl.vertices = g.decl().vertices;
  decl.edges = g.decl().edges;
  for (const auto& e : g.decl().edges) decl.edges.push_back(EdgeDecl{e.id + "*", e.tgt, e.src});
  decl.infinite_emitters = g.decl().infinite_emitters;
  return Graph(std::move(decl));
}

Path ghost_star(const Path& p, std::size_t base_edges) {
  std::vector<Edge> reversed;
  reversed.reserve(p.length());
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
    auto i = it->index;
    reversed.push_back(Edge{static_cast<std::uint32_t>(i < base_edges ? i + base_edges : i - base_edges)});
  }
  return Path(p.target(), p.source(), std::move(reversed));
}

std::vector<Path> paths_up_to(const Graph& g, std::size_t max_length) {
  g.require_finite_emitters("paths_up_to");
  std::vector<Path> out;
  for (auto v : g.vertices()) out.push_back(g.vertex_path(v));
  if (max_length == 0) return out;

  // Level k+1 is obtained by extending level k (already sorted) with
  // outgoing edges in declaration order, which keeps lexicographic order.
  std::vector<Path> level;
  for (auto e : g.edge_list()) level.push_back(g.edge_path(e));
  for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == max_length) break;
    std::vector<Path> next;
    for (const auto& p : level)
      for (auto e : g.out_edges(p.target())) next.push_back(p * g.edge_path(e));
    level = std::move(next);
  }
  return out;
}

namespace {

void collect_loops(const Graph& g, Vertex start, Vertex at, std::vector<Edge>& trail, std::vector<bool>& on_trail,
                   std::vector<Path>& out) {
  for (auto e : g.out_edges(at)) {
    Vertex next = g.target(e);
    if (next == start) {
      trail.push_back(e);
      out.push_back(g.make_path(trail));
      trail.pop_back();
    } else if (next.index > start.index && !on_trail[next.index]) {
      trail.push_back(e);
      on_trail[next.index] = true;
      collect_loops(g, start, next, trail, on_trail, out);
      on_trail[next.index] = false;
      trail.pop_back();
    }
  }
}

}  // namespace

std::vector<Path> vertex_simple_loops(const Graph& g) {
  std::vector<Path> out;
  std::vector<bool> on_trail(g.vertex_count(), false);
  std::vector<Edge> trail;
  for (auto v : g.vertices()) collect_loops(g, v, v, trail, on_trail, out);
  return out;
}

bool loop_has_exit(const Graph& g, const Path& loop) {
  std::set<Edge> own(loop.edges().begin(), loop.edges().end());
  for (auto e : loop.edges()) {
    Vertex v = g.source(e);
    if (g.is_infinite_emitter(v)) return true;
    for (auto x : g.out_edges(v))
      if (!own.contains(x)) return true;
  }
  return false;
}

LoopExitResult vertex_simple_loops_have_exits(const Graph& g) {
  g.require_finite_emitters("vertex_simple_loops_have_exits");
  for (auto& loop : vertex_simple_loops(g))
    if (!loop_has_exit(g, loop)) return {false, std::move(loop)};
  return {};
}

// ---------------------------------------------------------------------------
// PathSet

PathSet PathSet::unit(const Graph& g) {
  std::set<Path> vs;
  for (auto v : g.vertices()) vs.insert(g.vertex_path(v));
  return PathSet(std::move(vs));
}

PathSet pathset_add(const PathSet& a, const PathSet& b) {
  std::set<Path> out = a.paths();
  out.insert(b.paths().begin(), b.paths().end());
  return PathSet(std::move(out));
}

PathSet pathset_mul(const PathSet& a, const PathSet& b) {
  std::set<Path> out;
  for (const auto& p : a.paths())
    for (const auto& q : b.paths())
      if (p.target() == q.source()) out.insert(p * q);
  return PathSet(std::move(out));
}

}  // namespace pathalg
