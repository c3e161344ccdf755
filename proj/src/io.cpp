#include "pathalg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pathalg/error.hpp"

namespace pathalg {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, (where.empty() ? "/" : where) + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    std::size_t upto = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
  }
}

void expect_keys(const json& j, const std::string& where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) bad(where, "expected an object");
  for (auto k : required)
    if (!j.contains(k)) bad(where, "missing field \"" + std::string(k) + "\"");
  for (const auto& [k, v] : j.items()) {
    bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                 std::find(optional.begin(), optional.end(), k) != optional.end();
    if (!known) bad(where, "unknown field \"" + k + "\"");
  }
}

const std::string& as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get_ref<const std::string&>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

GraphDecl graph_decl(const json& j, const std::string& where) {
  expect_keys(j, where, {"vertices", "edges"}, {"infinite_emitters"});
  GraphDecl d;
  const auto& vs = as_array(j["vertices"], where + "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) d.vertices.push_back(as_string(vs[i], where + "/vertices/" + std::to_string(i)));
  const auto& es = as_array(j["edges"], where + "/edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string at = where + "/edges/" + std::to_string(i);
    expect_keys(es[i], at, {"id", "src", "tgt"});
    d.edges.push_back({as_string(es[i]["id"], at + "/id"), as_string(es[i]["src"], at + "/src"),
                       as_string(es[i]["tgt"], at + "/tgt")});
  }
  if (j.contains("infinite_emitters")) {
    const auto& ie = as_array(j["infinite_emitters"], where + "/infinite_emitters");
    for (std::size_t i = 0; i < ie.size(); ++i) {
      std::string at = where + "/infinite_emitters/" + std::to_string(i);
      if (ie[i].is_string()) {
        d.infinite_emitters.push_back({ie[i].get<std::string>(), std::nullopt});
        continue;
      }
      expect_keys(ie[i], at, {"vertex"}, {"unlisted_targets"});
      InfiniteEmitterDecl decl{as_string(ie[i]["vertex"], at + "/vertex"), std::nullopt};
      if (ie[i].contains("unlisted_targets")) {
        const auto& ts = as_array(ie[i]["unlisted_targets"], at + "/unlisted_targets");
        if (ts.empty()) bad(at + "/unlisted_targets", "an infinite emitter needs at least one target");
        std::vector<std::string> targets;
        for (std::size_t k = 0; k < ts.size(); ++k)
          targets.push_back(as_string(ts[k], at + "/unlisted_targets/" + std::to_string(k)));
        decl.unlisted_targets = std::move(targets);
      }
      d.infinite_emitters.push_back(std::move(decl));
    }
  }
  return d;
}

json graph_json(const Graph& g) {
  const GraphDecl& d = g.decl();
  json j;
  j["vertices"] = d.vertices;
  json edges = json::array();
  for (const auto& e : d.edges) edges.push_back({{"id", e.id}, {"src", e.src}, {"tgt", e.tgt}});
  j["edges"] = std::move(edges);
  if (!d.infinite_emitters.empty()) {
    json ie = json::array();
    for (const auto& x : d.infinite_emitters) {
      if (x.unlisted_targets)
        ie.push_back({{"vertex", x.vertex}, {"unlisted_targets", *x.unlisted_targets}});
      else
        ie.push_back(x.vertex);
    }
    j["infinite_emitters"] = std::move(ie);
  }
  return j;
}

GraphRef graph_ref(const json& j, const std::string& where, const GraphResolver& resolve) {
  if (j.is_string()) {
    const std::string& name = j.get_ref<const std::string&>();
    GraphPtr g = resolve ? resolve(name) : nullptr;
    if (!g) throw Error(ErrorCode::UnknownIdentifier, where + ": no graph named '" + name + "'");
    return {name, g};
  }
  return {std::nullopt, std::make_shared<const Graph>(graph_decl(j, where))};
}

json ref_json(const GraphRef& r) { return r.name ? json(*r.name) : graph_json(*r.graph); }

Vertex lookup_vertex(const Graph& g, const std::string& id, const std::string& where) {
  auto v = g.find_vertex(id);
  if (!v) throw Error(ErrorCode::UnknownIdentifier, where + ": '" + id + "' is not a vertex");
  return *v;
}

Edge lookup_edge(const Graph& g, const std::string& id, const std::string& where) {
  auto e = g.find_edge(id);
  if (!e) throw Error(ErrorCode::UnknownIdentifier, where + ": '" + id + "' is not an edge");
  return *e;
}

std::vector<Vertex> vertex_map(const json& j, const Graph& dom, const Graph& cod, const std::string& where,
                               ErrorCode missing) {
  if (!j.is_object()) bad(where, "expected an object");
  std::vector<std::optional<Vertex>> vm(dom.vertex_count());
  for (const auto& [k, v] : j.items()) {
    Vertex x = lookup_vertex(dom, k, where);
    vm[x.index] = lookup_vertex(cod, as_string(v, where + "/" + k), where + "/" + k);
  }
  std::vector<Vertex> out;
  for (auto x : dom.vertices()) {
    if (!vm[x.index]) throw Error(missing, where + ": vertex '" + dom.name(x) + "' is not mapped");
    out.push_back(*vm[x.index]);
  }
  return out;
}

json vertex_map_json(const Graph& dom, const Graph& cod, const std::vector<Vertex>& vm) {
  json j = json::object();
  for (auto x : dom.vertices()) j[dom.name(x)] = cod.name(vm[x.index]);
  return j;
}

MorphismFile morphism_from(const json& j, const std::string& where, const GraphResolver& resolve) {
  expect_keys(j, where, {"dom", "cod", "vmap", "emap"});
  GraphRef dom = graph_ref(j["dom"], where + "/dom", resolve);
  GraphRef cod = graph_ref(j["cod"], where + "/cod", resolve);
  auto vm = vertex_map(j["vmap"], *dom.graph, *cod.graph, where + "/vmap", ErrorCode::InvalidMorphism);

  const json& em = j["emap"];
  if (!em.is_object()) bad(where + "/emap", "expected an object");
  std::vector<std::optional<Path>> images(dom.graph->edge_count());
  for (const auto& [k, v] : em.items()) {
    std::string at = where + "/emap/" + k;
    Edge e = lookup_edge(*dom.graph, k, where + "/emap");
    if (v.is_object()) {
      expect_keys(v, at, {"vertex"});
      images[e.index] = Path::vertex(lookup_vertex(*cod.graph, as_string(v["vertex"], at + "/vertex"), at));
      continue;
    }
    const auto& arr = as_array(v, at);
    if (arr.empty()) bad(at, "empty image; write {\"vertex\": ...} for a length-0 image");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arr.size(); ++i)
      edges.push_back(lookup_edge(*cod.graph, as_string(arr[i], at + "/" + std::to_string(i)), at));
    auto p = cod.graph->try_make_path(edges);
    if (!p) throw Error(ErrorCode::InvalidMorphism, at + ": image edges do not compose");
    images[e.index] = std::move(*p);
  }
  std::vector<Path> emap;
  for (auto e : dom.graph->edge_list()) {
    if (!images[e.index])
      throw Error(ErrorCode::InvalidMorphism, where + "/emap: edge '" + dom.graph->name(e) + "' is not mapped");
    emap.push_back(std::move(*images[e.index]));
  }
  PathHom hom(dom.graph, cod.graph, std::move(vm), std::move(emap));
  return {std::move(dom), std::move(cod), std::move(hom)};
}

json morphism_json(const MorphismFile& m) {
  const PathHom& f = m.hom;
  json j;
  j["dom"] = ref_json(m.dom);
  j["cod"] = ref_json(m.cod);
  j["vmap"] = vertex_map_json(f.dom(), f.cod(), f.vertex_map());
  json em = json::object();
  for (auto e : f.dom().edge_list()) {
    const Path& p = f(e);
    if (p.is_vertex()) {
      em[f.dom().name(e)] = {{"vertex", f.cod().name(p.source())}};
    } else {
      json arr = json::array();
      for (auto x : p.edges()) arr.push_back(f.cod().name(x));
      em[f.dom().name(e)] = std::move(arr);
    }
  }
  j["emap"] = std::move(em);
  return j;
}

InclusionFile inclusion_from(const json& j, const std::string& where, const GraphResolver& resolve) {
  expect_keys(j, where, {"sub", "amb", "vmap", "emap"});
  GraphRef sub = graph_ref(j["sub"], where + "/sub", resolve);
  GraphRef amb = graph_ref(j["amb"], where + "/amb", resolve);
  auto vm = vertex_map(j["vmap"], *sub.graph, *amb.graph, where + "/vmap", ErrorCode::InvalidInclusion);
  const json& em = j["emap"];
  if (!em.is_object()) bad(where + "/emap", "expected an object");
  std::vector<std::optional<Edge>> images(sub.graph->edge_count());
  for (const auto& [k, v] : em.items()) {
    Edge e = lookup_edge(*sub.graph, k, where + "/emap");
    images[e.index] = lookup_edge(*amb.graph, as_string(v, where + "/emap/" + k), where + "/emap/" + k);
  }
  std::vector<Edge> emap;
  for (auto e : sub.graph->edge_list()) {
    if (!images[e.index])
      throw Error(ErrorCode::InvalidInclusion, where + "/emap: edge '" + sub.graph->name(e) + "' is not mapped");
    emap.push_back(*images[e.index]);
  }
  GraphInclusion inc(sub.graph, amb.graph, std::move(vm), std::move(emap));
  return {std::move(sub), std::move(amb), std::move(inc)};
}

json inclusion_json(const InclusionFile& m) {
  const GraphInclusion& inc = m.inclusion;
  json j;
  j["sub"] = ref_json(m.sub);
  j["amb"] = ref_json(m.amb);
  j["vmap"] = vertex_map_json(inc.sub(), inc.amb(), inc.vertex_map());
  json em = json::object();
  for (auto e : inc.sub().edge_list()) em[inc.sub().name(e)] = inc.amb().name(inc(e));
  j["emap"] = std::move(em);
  return j;
}

std::string finish(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Path parse_path(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw Error(ErrorCode::InvalidPath, "empty path");
  if (tokens.size() == 1)
    if (auto v = g.find_vertex(tokens[0])) return Path::vertex(*v);
  std::vector<Edge> edges;
  for (const auto& t : tokens) edges.push_back(g.edge_of(t));
  return g.make_path(std::move(edges));
}

Graph parse_graph(std::string_view text) { return Graph(graph_decl(parse_text(text), "")); }

std::string serialize_graph(const Graph& g) { return finish(graph_json(g)); }

MorphismFile parse_morphism(std::string_view text, const GraphResolver& resolve) {
  return morphism_from(parse_text(text), "", resolve);
}

std::string serialize_morphism(const MorphismFile& m) { return finish(morphism_json(m)); }

InclusionFile parse_inclusion(std::string_view text, const GraphResolver& resolve) {
  return inclusion_from(parse_text(text), "", resolve);
}

std::string serialize_inclusion(const InclusionFile& m) { return finish(inclusion_json(m)); }

InstanceFile parse_instance(std::string_view text, const GraphResolver& resolve) {
  json j = parse_text(text);
  expect_keys(j, "", {"pi1", "pi2", "f", "f_res", "length_bound"}, {"graphs"});
  std::vector<std::pair<std::string, GraphPtr>> table;
  if (j.contains("graphs")) {
    if (!j["graphs"].is_object()) bad("/graphs", "expected an object");
    for (const auto& [name, g] : j["graphs"].items())
      table.emplace_back(name, std::make_shared<const Graph>(graph_decl(g, "/graphs/" + name)));
  }
  GraphResolver local = [&](const std::string& name) -> GraphPtr {
    for (const auto& [n, g] : table)
      if (n == name) return g;
    return resolve ? resolve(name) : nullptr;
  };
  auto pi1 = inclusion_from(j["pi1"], "/pi1", local);
  auto pi2 = inclusion_from(j["pi2"], "/pi2", local);
  auto f = morphism_from(j["f"], "/f", local);
  auto f_res = morphism_from(j["f_res"], "/f_res", local);
  const json& lb = j["length_bound"];
  if (!lb.is_number_unsigned()) bad("/length_bound", "expected a non-negative integer");
  PullbackInstance inst(pi1.inclusion, pi2.inclusion, f.hom, f_res.hom, lb.get<std::size_t>());
  return {std::move(table), std::move(pi1), std::move(pi2), std::move(f), std::move(f_res), std::move(inst)};
}

std::string serialize_instance(const InstanceFile& m) {
  json j;
  if (!m.graphs.empty()) {
    json gs = json::object();
    for (const auto& [name, g] : m.graphs) gs[name] = graph_json(*g);
    j["graphs"] = std::move(gs);
  }
  j["pi1"] = inclusion_json(m.pi1);
  j["pi2"] = inclusion_json(m.pi2);
  j["f"] = morphism_json(m.f);
  j["f_res"] = morphism_json(m.f_res);
  j["length_bound"] = m.instance.length_bound();
  return finish(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pathalg
