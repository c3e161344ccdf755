#include <gtest/gtest.h>

#include <json.hpp>

#include "pathalg/builtins.hpp"
#include "pathalg/error.hpp"
#include "pathalg/pullback.hpp"

using namespace pathalg;
using builtin::Rp2Mutation;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

bool passes(HypothesisStatus s) { return s == HypothesisStatus::Pass || s == HypothesisStatus::PassUpToBound; }

// The projective-plane square with f_res corrupted to s ↦ e.
PullbackInstance corrupted_restriction() {
  auto inst = builtin::rp2_instance(4);
  auto F1 = inst.pi1().sub_ptr(), F2 = inst.pi2().sub_ptr();
  auto bad = builtin::hom(F1, F2, {{"v", "v"}}, {{"s", "e"}});
  return PullbackInstance(inst.pi1(), inst.pi2(), inst.f(), bad, 4);
}

PullbackInstance identity_instance(const std::string& name, std::size_t bound) {
  auto g = builtin::graph(name);
  auto id = GraphInclusion::identity(g);
  return PullbackInstance(id, id, PathHom::identity(g), PathHom::identity(g), bound);
}

}  // namespace

TEST(Pullback, ProjectivePlaneReport) {
  auto report = check_hypotheses(builtin::rp2_instance(6));
  ASSERT_EQ(report.hypotheses.size(), 8u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(report.hypotheses[i].status, HypothesisStatus::Pass) << i;
  EXPECT_EQ(report.at("H8").status, HypothesisStatus::PassUpToBound);
  EXPECT_EQ(report.overall, Overall::PassUpToBound);
  EXPECT_FALSE(report.first_failure());
  ASSERT_FALSE(report.notes.empty());
  EXPECT_EQ(report.notes[0], "H8 was checked only for paths of length <= 6");
  EXPECT_NE(report.at("H8").detail.find("e e f = f(s r)"), std::string::npos);
}

TEST(Pullback, VerdictsDoNotDependOnBound) {
  std::vector<std::string> reference;
  for (std::size_t bound : {4, 6, 8}) {
    auto report = check_hypotheses(builtin::rp2_instance(bound));
    std::vector<std::string> statuses;
    for (const auto& h : report.hypotheses) statuses.emplace_back(to_string(h.status));
    if (reference.empty()) reference = statuses;
    EXPECT_EQ(statuses, reference) << "bound " << bound;
    EXPECT_TRUE(check_commutativity(builtin::rp2_instance(bound)).commutes());
  }
}

TEST(PullbackProperty, PassingIsMonotoneInTheBound) {
  for (const auto& inst : {builtin::rp2_instance(8), identity_instance("rp2_E1", 8)}) {
    bool passed_above = false;
    for (std::size_t bound = 8; bound + 1 > 0; --bound) {
      auto report = check_hypotheses(inst.with_bound(bound));
      bool ok = report.overall != Overall::Fail;
      if (passed_above) ASSERT_TRUE(ok) << "bound " << bound;
      passed_above = passed_above || ok;
    }
    EXPECT_TRUE(passed_above);
  }
}

TEST(Pullback, ZeroBoundIsDegenerate) {
  auto report = check_hypotheses(builtin::rp2_instance(0));
  EXPECT_EQ(report.overall, Overall::PassUpToBound);
  ASSERT_FALSE(report.notes.empty());
  EXPECT_NE(report.notes[0].find("vertices only"), std::string::npos);
}

TEST(Pullback, FiniteInstanceGetsExactPass) {
  auto report = check_hypotheses(identity_instance("line3", 3));
  EXPECT_EQ(report.overall, Overall::Pass);
  EXPECT_EQ(report.at("H8").status, HypothesisStatus::Pass);
}

TEST(Pullback, MutationsFailAtTheirHypothesis) {
  for (auto m : {Rp2Mutation::NoExit, Rp2Mutation::TToF, Rp2Mutation::EnlargedF2}) {
    auto report = check_hypotheses(builtin::rp2_mutation(m, 6));
    EXPECT_EQ(report.overall, Overall::Fail);
    EXPECT_EQ(report.first_failure(), std::string(builtin::target_hypothesis(m)));
  }
}

// A FAIL verdict's witness must stand up when rechecked from the raw data.
TEST(PullbackProperty, FailureWitnessesRevalidate) {
  {
    auto inst = builtin::rp2_mutation(Rp2Mutation::NoExit, 6);
    auto report = check_hypotheses(inst);
    EXPECT_EQ(report.at("H2").detail, "loop [s] has no exit");
    const Graph& E1 = inst.pi1().amb();
    Path s = E1.edge_path(E1.edge_of("s"));
    EXPECT_FALSE(loop_has_exit(E1, s));
    EXPECT_EQ(E1.out_edges(E1.vertex_of("v")).size(), 1u);
  }
  {
    auto inst = builtin::rp2_mutation(Rp2Mutation::TToF, 6);
    auto report = check_hypotheses(inst);
    const auto& f = inst.f();
    const Graph& E1 = f.dom();
    EXPECT_EQ(f(E1.edge_of("r")), f(E1.edge_of("t")));
    EXPECT_TRUE(prefix_leq(f(E1.edge_of("r")), f(E1.edge_of("t"))));
    EXPECT_NE(report.at("H3").detail.find("not monotone"), std::string::npos);
  }
  {
    auto inst = builtin::rp2_mutation(Rp2Mutation::EnlargedF2, 6);
    auto report = check_hypotheses(inst);
    const Graph& E1 = inst.f().dom();
    Vertex w = E1.vertex_of("w");
    EXPECT_TRUE(inst.pi2().in_image(inst.f()(w)));
    EXPECT_FALSE(inst.pi1().in_image(w));
    EXPECT_NE(report.at("H5").detail.find("w"), std::string::npos);
  }
}

TEST(Pullback, CommutativityOnGenerators) {
  auto report = check_commutativity(builtin::rp2_instance(4));
  EXPECT_EQ(report.generators.size(), 8u);
  EXPECT_TRUE(report.commutes());
  for (const auto& g : report.generators) EXPECT_EQ(g.via_f, g.via_f_res) << g.generator;
}

TEST(Pullback, CorruptedRestrictionIsReported) {
  auto inst = corrupted_restriction();
  auto report = check_hypotheses(inst);
  EXPECT_EQ(report.first_failure(), "H6");
  auto comm = check_commutativity(inst);
  EXPECT_FALSE(comm.commutes());
  ASSERT_TRUE(comm.first_mismatch());
  EXPECT_EQ(comm.first_mismatch()->generator, "S_s");
  EXPECT_EQ(comm.first_mismatch()->via_f, "e e");
  EXPECT_EQ(comm.first_mismatch()->via_f_res, "e");
}

TEST(Pullback, CommutativityNeedsItsHypotheses) {
  EXPECT_EQ(code_of([] { check_commutativity(builtin::rp2_mutation(Rp2Mutation::TToF, 4)); }),
            ErrorCode::HypothesisNotMet);
  EXPECT_EQ(code_of([] { check_kernel_inclusion(builtin::rp2_mutation(Rp2Mutation::NoExit, 4)); }),
            ErrorCode::HypothesisNotMet);
}

TEST(Pullback, KernelElementsHaveKilledPreimages) {
  auto inst = builtin::rp2_instance(4);
  auto report = check_kernel_inclusion(inst);
  EXPECT_TRUE(report.holds());
  ASSERT_FALSE(report.elements.empty());
  const Graph& E2 = inst.pi2().amb();
  for (const auto& k : report.elements) {
    EXPECT_EQ(k.alpha.target(), E2.vertex_of("w"));
    EXPECT_EQ(inst.f()(k.alpha_pre), k.alpha);
    EXPECT_EQ(inst.f()(k.beta_pre), k.beta);
    EXPECT_TRUE(k.killed_by_pi1);
    EXPECT_TRUE(k.maps_onto);
  }
}

TEST(Pullback, PreimageSearch) {
  auto phi = builtin::rp2_phi();
  const Graph& E2 = phi.cod();
  auto p = E2.make_path({E2.edge_of("e"), E2.edge_of("e"), E2.edge_of("e"), E2.edge_of("f")});
  auto q = find_preimage(phi, p, 4);
  ASSERT_TRUE(q);
  EXPECT_EQ(phi.dom().format(*q), "s t");
  EXPECT_FALSE(find_preimage(phi, E2.edge_path(E2.edge_of("e")), 4));
  auto depth = preimage_depth(phi, 6);
  EXPECT_EQ(depth.depth, 14u);
  EXPECT_FALSE(depth.capped);
}

TEST(Pullback, JsonReportIsDeterministic) {
  auto a = check_hypotheses(builtin::rp2_instance(4)).to_json();
  auto b = check_hypotheses(builtin::rp2_instance(4)).to_json();
  EXPECT_EQ(a, b);
  auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j["overall"], "PASS_UP_TO_BOUND");
  EXPECT_EQ(j["length_bound"], 4);
  EXPECT_TRUE(j["first_failure"].is_null());
  ASSERT_EQ(j["hypotheses"].size(), 8u);
  EXPECT_EQ(j["hypotheses"][0]["id"], "H1");
}

TEST(Pullback, MismatchedGraphsAreRejected) {
  auto inst = builtin::rp2_instance(4);
  EXPECT_EQ(code_of([&] { PullbackInstance(inst.pi2(), inst.pi1(), inst.f(), inst.f_res(), 4); }),
            ErrorCode::DomainMismatch);
}

TEST(Pullback, InfiniteEmittersLeaveHypothesesUndecided) {
  GraphDecl d{{"v", "u"}, {{"e", "v", "v"}, {"g", "v", "u"}}, {{"v", std::vector<std::string>{"u"}}}};
  auto amb = std::make_shared<const Graph>(d);
  auto sub = std::make_shared<const Graph>(GraphDecl{{"v"}, {{"e", "v", "v"}}, {}});
  GraphInclusion inc(sub, amb, {Vertex{0}}, {Edge{0}});
  PullbackInstance inst(inc, inc, PathHom::identity(amb), PathHom::identity(sub), 3);
  auto report = check_hypotheses(inst);
  EXPECT_EQ(report.overall, Overall::Fail);
  bool undecided = false;
  for (const auto& h : report.hypotheses) undecided = undecided || h.status == HypothesisStatus::Undecided;
  EXPECT_TRUE(undecided);
  EXPECT_TRUE(passes(report.at("H1").status));
}
