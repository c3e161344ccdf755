#include "pathalg/cli.hpp"

#include <filesystem>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/examples.hpp"
#include "pathalg/expression.hpp"
#include "pathalg/induced.hpp"
#include "pathalg/io.hpp"

namespace pathalg {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class Workspace {
 public:
  void load_graph_files(const std::vector<std::string>& files) {
    for (const auto& file : files) {
      auto g = std::make_shared<const Graph>(parse_graph(read_file(file)));
      std::string name = fs::path(file).stem().string();
      if (graphs_.contains(name)) throw Error(ErrorCode::DuplicateId, "graph name '" + name + "' loaded twice");
      graphs_.emplace(std::move(name), std::move(g));
    }
  }

  GraphResolver resolver() const {
    return [this](const std::string& name) -> GraphPtr {
      if (auto it = graphs_.find(name); it != graphs_.end()) return it->second;
      return builtin::graph(name);
    };
  }

  GraphPtr graph(const std::string& ref) const {
    if (auto g = resolver()(ref)) return g;
    if (fs::is_regular_file(ref)) return std::make_shared<const Graph>(parse_graph(read_file(ref)));
    throw Error(ErrorCode::UnknownIdentifier, "no graph named '" + ref + "'");
  }

  MorphismFile morphism(const std::string& ref) const {
    if (fs::is_regular_file(ref)) return parse_morphism(read_file(ref), resolver());
    if (auto f = builtin::morphism(ref)) return {builtin_ref(f->dom_ptr()), builtin_ref(f->cod_ptr()), *f};
    throw Error(ErrorCode::UnknownIdentifier, "no morphism file or built-in morphism '" + ref + "'");
  }

  GraphInclusion inclusion(const std::string& ref) const {
    if (fs::is_regular_file(ref)) return parse_inclusion(read_file(ref), resolver()).inclusion;
    if (ref == "rp2_pi1") return builtin::rp2_pi1();
    if (ref == "rp2_pi2") return builtin::rp2_pi2();
    throw Error(ErrorCode::UnknownIdentifier, "no inclusion file or built-in inclusion '" + ref + "'");
  }

  PullbackInstance instance(const std::string& ref) const {
    if (fs::is_regular_file(ref)) return parse_instance(read_file(ref), resolver()).instance;
    if (ref == "rp2q") return builtin::rp2_instance(6);
    throw Error(ErrorCode::UnknownIdentifier, "no instance file or built-in instance '" + ref + "'");
  }

 private:
  // Names a built-in graph by the first built-in with the same serialization.
  static GraphRef builtin_ref(const GraphPtr& g) {
    const std::string text = serialize_graph(*g);
    for (const auto& name : builtin::graph_names())
      if (auto b = builtin::graph(name); b && serialize_graph(*b) == text) return {name, g};
    return {std::nullopt, g};
  }

  std::map<std::string, GraphPtr> graphs_;
};

struct Options {
  std::vector<std::string> graph_files;
  bool json = false;
  std::optional<std::size_t> bound;
};

constexpr Category kAllCategories[] = {Category::PG,   Category::IPG,   Category::BPG,  Category::MIPG,
                                       Category::MBPG, Category::RMIPG, Category::RMBPG};

int cmd_classify(const Workspace& ws, const Options& opt, const std::string& ref,
                 const std::optional<std::string>& require, std::ostream& out) {
  std::optional<Category> wanted;
  if (require) {
    wanted = parse_category(*require);
    if (!wanted) throw Error(ErrorCode::ParseError, "unknown category '" + *require + "'");
  }
  PathHom f = ws.morphism(ref).hom;
  CategoryVerdict v = classify(f);
  const std::pair<Predicate, bool> flags[] = {{Predicate::PathHom, v.is_path_hom},
                                              {Predicate::VertexInjective, v.vertex_injective},
                                              {Predicate::VertexBijective, v.vertex_bijective_finite},
                                              {Predicate::Monotone, v.monotone},
                                              {Predicate::Regular, v.regular}};
  std::vector<std::string> cats;
  for (auto c : kAllCategories)
    if (v.in(c)) cats.emplace_back(to_string(c));

  if (opt.json) {
    json j;
    for (auto [p, b] : flags) j[std::string(to_string(p))] = b;
    j["categories"] = cats;
    json w = json::object();
    for (const auto& [p, wit] : v.witnesses) w[std::string(to_string(p))] = wit.summary;
    j["witnesses"] = std::move(w);
    if (wanted) j["required"] = {{"category", *require}, {"met", v.in(*wanted)}};
    out << j.dump(2) << '\n';
  } else {
    for (auto [p, b] : flags) {
      std::string name(to_string(p));
      name.resize(18, ' ');
      out << name << (b ? "yes" : "no");
      if (auto it = v.witnesses.find(p); it != v.witnesses.end()) out << "   " << it->second.summary;
      out << '\n';
    }
    out << "categories        ";
    for (std::size_t i = 0; i < cats.size(); ++i) out << (i ? " " : "") << cats[i];
    out << '\n';
    if (wanted) out << "required " << *require << ": " << (v.in(*wanted) ? "met" : "not met") << '\n';
  }
  return !wanted || v.in(*wanted) ? kExitOk : kExitCheckFailed;
}

ContextPtr parse_context(const Workspace& ws, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::ParseError, "context must look like MODE:GRAPH, e.g. leavitt:loop");
  std::string mode = text.substr(0, colon);
  GraphPtr g = ws.graph(text.substr(colon + 1));
  if (mode == "path") return AlgebraContext::path(g);
  if (mode == "cohn") return AlgebraContext::cohn(g);
  if (mode == "leavitt") return AlgebraContext::leavitt(g);
  if (mode.rfind("relcohn=", 0) == 0) {
    std::vector<Vertex> xs;
    std::stringstream in(mode.substr(8));
    for (std::string id; std::getline(in, id, ',');)
      if (!id.empty()) xs.push_back(g->vertex_of(id));
    return AlgebraContext::relative_cohn(g, std::move(xs));
  }
  throw Error(ErrorCode::ParseError, "unknown algebra mode '" + mode + "' (path, cohn, leavitt, relcohn=v,w)");
}

int cmd_eval(const Workspace& ws, const std::string& context, const std::string& expr,
             const std::optional<std::string>& apply, std::ostream& out) {
  ContextPtr ctx = parse_context(ws, context);
  AlgebraElement a = parse_expression(ctx, expr);
  if (apply) {
    PathHom f = ws.morphism(*apply).hom;
    if (!(f.dom() == ctx->graph()))
      throw Error(ErrorCode::DomainMismatch, "the morphism's domain is not the context graph");
    InducedKind kind;
    if (ctx->mode() == AlgebraMode::Path)
      kind = InducedKind::Path;
    else if (ctx->is_cohn())
      kind = InducedKind::Cohn;
    else if (ctx->is_leavitt())
      kind = InducedKind::Leavitt;
    else
      throw Error(ErrorCode::ContextMismatch, "induced maps exist only for path, cohn and leavitt contexts");
    // Rebuild the element in the homomorphism's own source context.
    InducedHom h = InducedHom::make(f, kind);
    a = h(parse_expression(h.source(), expr));
  }
  out << a.to_string() << '\n';
  return kExitOk;
}

int cmd_compose(const Workspace& ws, const std::string& g_ref, const std::string& f_ref, std::ostream& out) {
  MorphismFile g = ws.morphism(g_ref);
  MorphismFile f = ws.morphism(f_ref);
  PathHom h = compose(g.hom, f.hom);
  out << serialize_morphism({f.dom, g.cod, h});
  return kExitOk;
}

std::string vertex_names(const Graph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + g.name(vs[i]);
  return s + "}";
}

int cmd_admissible(const Workspace& ws, const Options& opt, const std::string& ref, std::ostream& out) {
  GraphInclusion inc = ws.inclusion(ref);
  const Graph& amb = inc.amb();
  AdmissibilityVerdict v = is_admissible(inc);
  auto breaking = breaking_vertices(amb, inc.complement());
  std::optional<KernelGenerators> kernel;
  if (v.admissible()) kernel = kernel_generators(inc);

  auto kernel_text = [&] {
    std::vector<std::string> parts;
    for (auto w : kernel->vertex_projections) parts.push_back("P_" + amb.name(w));
    for (const auto& c : kernel->breaking_corrections) {
      std::string t = "P_" + amb.name(c.vertex);
      for (auto e : c.edges) t += " - S_" + amb.name(e) + " S_" + amb.name(e) + "*";
      parts.push_back(t);
    }
    return parts;
  };

  if (opt.json) {
    json j;
    j["admissible"] = v.admissible();
    j["A1"] = {{"holds", v.a1.holds}, {"detail", v.a1.summary}};
    j["A2"] = {{"holds", v.a2.holds}, {"detail", v.a2.summary}};
    j["hereditary"] = {{"holds", v.hereditary.holds}, {"detail", v.hereditary.summary}};
    std::vector<std::string> b;
    for (auto x : breaking) b.push_back(amb.name(x));
    j["breaking_vertices"] = b;
    j["kernel_generators"] = kernel ? json(kernel_text()) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    auto line = [&](std::string label, const SetVerdict& s) {
      label.resize(30, ' ');
      out << label << (s.holds ? "yes" : "no");
      if (!s.holds) out << "   " << s.summary;
      out << '\n';
    };
    line("(A1) complement saturated", v.a1);
    line("(A2) incoming edges included", v.a2);
    line("complement hereditary", v.hereditary);
    out << "breaking vertices             " << vertex_names(amb, breaking) << '\n';
    if (kernel) {
      out << "kernel generators             ";
      auto parts = kernel_text();
      if (parts.empty()) out << "none";
      for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? ", " : "") << parts[i];
      out << '\n';
    }
    out << "admissible                    " << (v.admissible() ? "yes" : "no") << '\n';
  }
  return v.admissible() ? kExitOk : kExitCheckFailed;
}

int cmd_pullback(const Workspace& ws, const Options& opt, const std::string& ref, std::ostream& out) {
  PullbackInstance inst = ws.instance(ref);
  if (opt.bound) inst = inst.with_bound(*opt.bound);
  HypothesisReport report = check_hypotheses(inst);
  if (opt.json) {
    out << report.to_json() << '\n';
    return report.overall == Overall::Fail ? kExitCheckFailed : kExitOk;
  }
  out << report.to_text();
  if (report.overall == Overall::Fail) return kExitCheckFailed;

  auto comm = check_commutativity(inst);
  out << "commutativity: " << comm.generators.size() << " generator(s), ";
  if (const auto* bad = comm.first_mismatch())
    out << "mismatch at " << bad->generator << ": " << bad->via_f << " vs " << bad->via_f_res << '\n';
  else
    out << "all commute\n";
  auto kernel = check_kernel_inclusion(inst);
  out << "kernel inclusion: " << kernel.elements.size() << " spanning element(s) up to length "
      << inst.length_bound() << ", " << (kernel.holds() ? "all covered" : "NOT covered") << '\n';
  for (const auto& n : kernel.notes) out << "note: " << n << '\n';
  return comm.commutes() && kernel.holds() ? kExitOk : kExitCheckFailed;
}

int cmd_examples(const std::optional<std::string>& name, std::ostream& out) {
  std::vector<const BuiltinExample*> selected;
  if (name) {
    const BuiltinExample* e = find_example(*name);
    if (!e) throw Error(ErrorCode::UnknownIdentifier, "no example named '" + *name + "'");
    selected.push_back(e);
  } else {
    for (const auto& e : builtin_examples()) selected.push_back(&e);
  }
  std::size_t matched = 0;
  for (const auto* e : selected) {
    ExampleOutcome o;
    try {
      o = e->run();
    } catch (const Error& err) {
      o.actual = std::string("error ") + err.what();
    }
    matched += o.matched();
    out << (o.matched() ? "[match]    " : "[MISMATCH] ") << e->name << " (" << to_string(e->origin) << ")\n"
        << "           " << e->description << '\n'
        << "           expected: " << o.expected << '\n'
        << "           actual:   " << o.actual << '\n';
  }
  out << matched << "/" << selected.size() << " examples match\n";
  return matched == selected.size() ? kExitOk : kExitCheckFailed;
}

int cmd_list(std::ostream& out) {
  out << "graphs:";
  for (const auto& n : builtin::graph_names()) out << ' ' << n;
  out << " A<n> C<n>\nmorphisms:";
  for (const auto& n : builtin::morphism_names()) out << ' ' << n;
  out << "\ninclusions: rp2_pi1 rp2_pi2\ninstances: rp2q\nexamples:";
  for (const auto& e : builtin_examples()) out << ' ' << e.name;
  out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphs, path homomorphisms and their path, Cohn and Leavitt algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--graph", opt.graph_files, "Load a graph file; it is referred to by its file stem")
      ->check(CLI::ExistingFile);
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--bound", opt.bound, "Override the length bound of a pullback instance");

  std::string ref, ref2, context, expr;
  std::optional<std::string> require, apply, example;

  auto* classify_cmd = app.add_subcommand("classify", "Decide category membership of a morphism");
  classify_cmd->add_option("morphism", ref, "Morphism file or built-in name")->required();
  classify_cmd->add_option("--require", require, "Exit 1 unless the morphism lies in this category");

  auto* eval_cmd = app.add_subcommand("eval", "Normalize an expression in an algebra");
  eval_cmd->add_option("context", context, "MODE:GRAPH with MODE path, cohn, leavitt or relcohn=v,w")->required();
  eval_cmd->add_option("expression", expr, "Expression to normalize")->required();
  eval_cmd->add_option("--apply", apply, "Push the result through the induced homomorphism");

  auto* compose_cmd = app.add_subcommand("compose", "Print g after f as a morphism file");
  compose_cmd->add_option("g", ref, "Second morphism")->required();
  compose_cmd->add_option("f", ref2, "First morphism")->required();

  auto* admissible_cmd = app.add_subcommand("admissible", "Check an inclusion for admissibility");
  admissible_cmd->add_option("inclusion", ref, "Inclusion file or built-in name")->required();

  auto* pullback_cmd = app.add_subcommand("pullback", "Check the hypotheses of the pullback theorem");
  pullback_cmd->add_option("instance", ref, "Instance file or built-in name")->required();

  auto* examples_cmd = app.add_subcommand("examples", "Run the built-in examples");
  examples_cmd->add_option("name", example, "Run only this example");

  auto* list_cmd = app.add_subcommand("list", "List built-in graphs, morphisms and examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    Workspace ws;
    ws.load_graph_files(opt.graph_files);
    if (classify_cmd->parsed()) return cmd_classify(ws, opt, ref, require, out);
    if (eval_cmd->parsed()) return cmd_eval(ws, context, expr, apply, out);
    if (compose_cmd->parsed()) return cmd_compose(ws, ref, ref2, out);
    if (admissible_cmd->parsed()) return cmd_admissible(ws, opt, ref, out);
    if (pullback_cmd->parsed()) return cmd_pullback(ws, opt, ref, out);
    if (examples_cmd->parsed()) return cmd_examples(example, out);
    if (list_cmd->parsed()) return cmd_list(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? kExitInputError : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pathalg
