#include "pathalg/builtins.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "pathalg/error.hpp"
#include "pathalg/io.hpp"

namespace pathalg::builtin {

namespace {

GraphPtr make(std::vector<std::string> vertices, std::vector<EdgeDecl> edges) {
  return std::make_shared<const Graph>(GraphDecl{std::move(vertices), std::move(edges), {}});
}

const std::map<std::string, std::function<GraphPtr()>>& table() {
  static const std::map<std::string, std::function<GraphPtr()>> t = {
      {"point", [] { return make({"v"}, {}); }},
      {"loop", [] { return make({"v"}, {{"e", "v", "v"}}); }},
      {"rose2", [] { return make({"v"}, {{"e1", "v", "v"}, {"e2", "v", "v"}}); }},
      {"edge", [] { return make({"v", "w"}, {{"e", "v", "w"}}); }},
      {"line3", [] { return make({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}}); }},
      {"branching",
       [] {
         return make({"v", "m", "u", "w"},
                     {{"x1", "v", "m"}, {"x2", "v", "m"}, {"y1", "m", "u"}, {"y2", "m", "w"}});
       }},
      {"branch_domain",
       [] { return make({"v", "u", "w"}, {{"e0", "v", "u"}, {"e1", "v", "w"}, {"e2", "v", "w"}}); }},
      {"star2", [] { return make({"v", "w1", "w2"}, {{"f1", "v", "w1"}, {"f2", "v", "w2"}}); }},
      {"star2_loop",
       [] { return make({"v", "w1", "w2"}, {{"u", "v", "v"}, {"f1", "v", "w1"}, {"f2", "v", "w2"}}); }},
      {"parallel_pair", [] { return make({"v", "w"}, {{"e1", "v", "w"}, {"e2", "v", "w"}}); }},
      {"loop_exit", [] { return make({"v", "w"}, {{"e", "v", "v"}, {"g", "v", "w"}}); }},
      {"rp2_E1", [] { return make({"v", "w"}, {{"s", "v", "v"}, {"r", "v", "w"}, {"t", "v", "w"}}); }},
      {"rp2_E2", [] { return make({"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}}); }},
      {"rp2_F1", [] { return make({"v"}, {{"s", "v", "v"}}); }},
      {"rp2_F2", [] { return make({"v"}, {{"e", "v", "v"}}); }},
  };
  return t;
}

std::optional<std::size_t> family_size(const std::string& name, char prefix) {
  if (name.size() < 2 || name[0] != prefix) return std::nullopt;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
  if (ec != std::errc() || ptr != name.data() + name.size() || n == 0 || n > 64) return std::nullopt;
  return n;
}

}  // namespace

GraphPtr graph(const std::string& name) {
  if (auto it = table().find(name); it != table().end()) return it->second();
  if (auto n = family_size(name, 'A')) return line(*n);
  if (auto n = family_size(name, 'C')) return cycle(*n);
  return nullptr;
}

std::vector<std::string> graph_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : table()) out.push_back(name);
  return out;
}

GraphPtr line(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<EdgeDecl> es;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) es.push_back({"e" + std::to_string(i), vs[i - 1], vs[i]});
  return make(std::move(vs), std::move(es));
}

GraphPtr cycle(std::size_t n) {
  std::vector<std::string> vs;
  std::vector<EdgeDecl> es;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) es.push_back({"c" + std::to_string(i), vs[i - 1], vs[i % n]});
  return make(std::move(vs), std::move(es));
}

PathHom hom(GraphPtr dom, GraphPtr cod, const std::vector<std::pair<std::string, std::string>>& vmap,
            const std::vector<std::pair<std::string, std::string>>& emap) {
  std::vector<std::optional<Vertex>> vm(dom->vertex_count());
  for (const auto& [a, b] : vmap) vm[dom->vertex_of(a).index] = cod->vertex_of(b);
  std::vector<std::optional<Path>> em(dom->edge_count());
  for (const auto& [a, b] : emap) em[dom->edge_of(a).index] = parse_path(*cod, b);
  std::vector<Vertex> v2;
  for (auto& x : vm) {
    if (!x) throw Error(ErrorCode::InvalidMorphism, "vertex map is incomplete");
    v2.push_back(*x);
  }
  std::vector<Path> e2;
  for (auto& x : em) {
    if (!x) throw Error(ErrorCode::InvalidMorphism, "edge map is incomplete");
    e2.push_back(std::move(*x));
  }
  return PathHom(std::move(dom), std::move(cod), std::move(v2), std::move(e2));
}

namespace {

const std::map<std::string, std::function<PathHom()>>& morphism_table() {
  static const std::map<std::string, std::function<PathHom()>> t = {
      {"loop_to_point", [] { return hom(graph("loop"), graph("point"), {{"v", "v"}}, {{"e", "v"}}); }},
      {"rose2_to_point",
       [] { return hom(graph("rose2"), graph("point"), {{"v", "v"}}, {{"e1", "v"}, {"e2", "v"}}); }},
      {"rose2_nonmonotone",
       [] { return hom(graph("rose2"), graph("loop"), {{"v", "v"}}, {{"e1", "e e"}, {"e2", "e"}}); }},
      {"edge_to_line3",
       [] { return hom(graph("edge"), graph("line3"), {{"v", "a"}, {"w", "c"}}, {{"e", "x y"}}); }},
      {"branch_map",
       [] {
         return hom(graph("branch_domain"), graph("branching"), {{"v", "v"}, {"u", "u"}, {"w", "w"}},
                    {{"e0", "x1 y1"}, {"e1", "x1 y2"}, {"e2", "x2 y2"}});
       }},
      {"star_into_loop",
       [] {
         return hom(graph("star2"), graph("star2_loop"), {{"v", "v"}, {"w1", "w1"}, {"w2", "w2"}},
                    {{"f1", "f1"}, {"f2", "f2"}});
       }},
      {"pair_to_loop_exit",
       [] {
         return hom(graph("parallel_pair"), graph("loop_exit"), {{"v", "v"}, {"w", "w"}},
                    {{"e1", "g"}, {"e2", "e g"}});
       }},
      {"line_to_cycle3", [] { return line_to_cycle(3); }},
      {"rp2_phi", [] { return rp2_phi(); }},
      {"rp2_phi_res", [] { return rp2_phi_res(); }},
  };
  return t;
}

GraphInclusion inclusion(GraphPtr sub, GraphPtr amb) {
  std::vector<Vertex> vm;
  for (auto v : sub->vertices()) vm.push_back(amb->vertex_of(sub->name(v)));
  std::vector<Edge> em;
  for (auto e : sub->edge_list()) em.push_back(amb->edge_of(sub->name(e)));
  return GraphInclusion(std::move(sub), std::move(amb), std::move(vm), std::move(em));
}

}  // namespace

std::optional<PathHom> morphism(const std::string& name) {
  if (auto it = morphism_table().find(name); it != morphism_table().end()) return it->second();
  return std::nullopt;
}

std::vector<std::string> morphism_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : morphism_table()) out.push_back(name);
  return out;
}

PathHom line_to_cycle(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> vm, em;
  for (std::size_t i = 1; i <= n; ++i) vm.emplace_back("v" + std::to_string(i), "v" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) em.emplace_back("e" + std::to_string(i), "c" + std::to_string(i));
  return hom(line(n), cycle(n), vm, em);
}

PathHom rp2_phi() {
  return hom(graph("rp2_E1"), graph("rp2_E2"), {{"v", "v"}, {"w", "w"}}, {{"s", "e e"}, {"r", "f"}, {"t", "e f"}});
}

GraphInclusion rp2_pi1() { return inclusion(graph("rp2_F1"), graph("rp2_E1")); }
GraphInclusion rp2_pi2() { return inclusion(graph("rp2_F2"), graph("rp2_E2")); }

PathHom rp2_phi_res() { return hom(graph("rp2_F1"), graph("rp2_F2"), {{"v", "v"}}, {{"s", "e e"}}); }

PullbackInstance rp2_instance(std::size_t length_bound) {
  return PullbackInstance(rp2_pi1(), rp2_pi2(), rp2_phi(), rp2_phi_res(), length_bound);
}

std::string_view target_hypothesis(Rp2Mutation m) {
  switch (m) {
    case Rp2Mutation::NoExit: return "H2";
    case Rp2Mutation::TToF: return "H3";
    case Rp2Mutation::EnlargedF2: return "H5";
  }
  return "?";
}

PullbackInstance rp2_mutation(Rp2Mutation m, std::size_t length_bound) {
  switch (m) {
    case Rp2Mutation::NoExit: {
      auto e1 = make({"v", "w"}, {{"s", "v", "v"}});
      auto f = hom(e1, graph("rp2_E2"), {{"v", "v"}, {"w", "w"}}, {{"s", "e e"}});
      return PullbackInstance(inclusion(graph("rp2_F1"), e1), rp2_pi2(), f, rp2_phi_res(), length_bound);
    }
    case Rp2Mutation::TToF: {
      auto f = hom(graph("rp2_E1"), graph("rp2_E2"), {{"v", "v"}, {"w", "w"}}, {{"s", "e e"}, {"r", "f"}, {"t", "f"}});
      return PullbackInstance(rp2_pi1(), rp2_pi2(), f, rp2_phi_res(), length_bound);
    }
    case Rp2Mutation::EnlargedF2: {
      auto e2 = graph("rp2_E2");
      auto f_res = hom(graph("rp2_F1"), e2, {{"v", "v"}}, {{"s", "e e"}});
      return PullbackInstance(rp2_pi1(), GraphInclusion::identity(e2), rp2_phi(), f_res, length_bound);
    }
  }
  throw Error(ErrorCode::InvalidMorphism, "unknown mutation");
}

}  // namespace pathalg::builtin
