#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace pathcirc;
using pathcirc::testing::bits;
using pathcirc::testing::for_all_inputs;
using pathcirc::testing::random_zkp;
using pathcirc::testing::two_state;

namespace {

// Capacity (1,2) is used throughout: f = 16, 7 graphs, cheap to build.
const CapacityFamily& fam12() {
  static const CapacityFamily fam = CapacityFamily::build(1, 2);
  return fam;
}

std::size_t index_of(const CapacityFamily& fam, const Graph& g) {
  auto enc = encode_graph(g, fam.max_edges, fam.max_vertices);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (fam.encodings[i] == enc) return i;
  }
  return fam.size();
}

}  // namespace

TEST(EncodingWidth, Formula) {
  EXPECT_EQ(encoding_width(1, 2), 16u);
  EXPECT_EQ(encoding_width(2, 2), 2u * 4 * 2);
  EXPECT_EQ(encoding_width(3, 3), 2u * 8 * 2);
  EXPECT_EQ(encoding_width(0, 1), 2u * 2 * 1);
}

TEST(EncodeGraph, LayoutIsSourceThenTargetRows) {
  auto g = two_state();
  auto enc = encode_graph(g, 1, 2);
  ASSERT_EQ(enc.bits.width(), 16u);
  auto en = Enumeration::at_capacity(g, 1, 2);
  auto s = source_table(en, g);
  auto t = target_table(en, g);
  for (std::uint64_t r = 0; r < 4; ++r) {
    EXPECT_EQ(enc.bits.slice(2 * r, 2), s.row(r));
    EXPECT_EQ(enc.bits.slice(8 + 2 * r, 2), t.row(r));
  }
  EXPECT_EQ(enc.to_text(), "(1,2) 6468");
  EXPECT_EQ(GraphEncoding::from_text(enc.to_text()), enc);
}

TEST(EncodeGraph, Capacity) {
  auto g = two_state();
  EXPECT_THROW(encode_graph(g, 0, 2), CapacityError);
  EXPECT_THROW(encode_graph(g, 1, 1), CapacityError);
}

TEST(EncodeGraph, DistinctGraphsDistinctEncodings) {
  std::set<BitVector> seen;
  for (const auto& g : all_graphs(2, 2)) EXPECT_TRUE(seen.insert(encode_graph(g, 2, 2).bits).second);
}

TEST(EncodeGraph, FromTextErrors) {
  EXPECT_THROW(GraphEncoding::from_text("1,2 6468"), ParseError);
  EXPECT_THROW(GraphEncoding::from_text("(1,2) 646"), ParseError);
  EXPECT_THROW(GraphEncoding::from_text("(1,2) 64g8"), ParseError);
}

TEST(CapacityFamily, Sizes) {
  EXPECT_EQ(fam12().size(), 7u);
  EXPECT_EQ(CapacityFamily::build(2, 2).size(), 24u);
  EXPECT_EQ(count_capacity_graphs(1, 2), 1u + 1 + 1 + 4);
  Budget b;
  b.max_universal_graphs = 5;
  EXPECT_THROW(CapacityFamily::build(1, 2, b), BudgetError);
}

TEST(UniversalSource, ReducesToGraphCircuit) {
  const auto& fam = fam12();
  auto us = universal_source(fam);
  auto ut = universal_target(fam);
  EXPECT_EQ(us.n_inputs(), fam.spec_width() + fam.e_bits);
  EXPECT_EQ(us.n_outputs(), fam.v_bits);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto en = fam.enumeration(i);
    auto s = source_circuit(fam.graphs[i], en);
    auto t = target_circuit(fam.graphs[i], en);
    for_all_inputs(fam.e_bits, [&](const BitVector& e) {
      ASSERT_EQ(us.eval(fam.encodings[i].bits + e), s.eval(e));
      ASSERT_EQ(ut.eval(fam.encodings[i].bits + e), t.eval(e));
    });
  }
}

TEST(UniversalSource, Examples) {
  const auto& fam = fam12();
  auto g = two_state();
  auto en = Enumeration::at_capacity(g, 1, 2);
  auto spec = encode_graph(g, 1, 2).bits;
  auto us = universal_source(fam);
  EXPECT_EQ(us.eval(spec + en.edge_code(0)), en.vertex_code(0));
  EXPECT_EQ(us.eval(spec + bits("11")), bits("00"));
  for_all_inputs(2, [&](const BitVector& e) { EXPECT_TRUE(us.eval(BitVector(16) + e).is_zero()); });
}

TEST(UniversalSource, CapacityOverload) {
  EXPECT_EQ(universal_source(1, 2), universal_source(fam12()));
}

TEST(ZkpIdentity, PassesStateIgnoresSpec) {
  auto id = zkp_identity(2, 3);
  for_all_inputs(5, [&](const BitVector& x) {
    auto r = id.eval(x.slice(0, 2), x.slice(2, 3), {});
    EXPECT_TRUE(r.flag);
    EXPECT_EQ(r.state, x.slice(0, 2));
  });
  EXPECT_TRUE(ext_equal(zkp_compose(id, id).circuit(), id.circuit()));
}

TEST(ZkpCompose, UnitLaws) {
  std::mt19937 rng(41);
  for (int i = 0; i < 40; ++i) {
    auto f = random_zkp(rng, 2, 2, 2, 2);
    EXPECT_TRUE(ext_equal(zkp_compose(zkp_identity(2, 2), f).circuit(), f.circuit()));
    EXPECT_TRUE(ext_equal(zkp_compose(f, zkp_identity(2, 2)).circuit(), f.circuit()));
  }
}

TEST(ZkpCompose, AssociativeUpToExtension) {
  std::mt19937 rng(43);
  for (int i = 0; i < 40; ++i) {
    auto f = random_zkp(rng, 1, 2, 1, 2);
    auto g = random_zkp(rng, 2, 2, 1, 1);
    auto h = random_zkp(rng, 1, 2, 2, 2);
    auto left = zkp_compose(zkp_compose(f, g), h);
    auto right = zkp_compose(f, zkp_compose(g, h));
    EXPECT_NE(left.circuit(), right.circuit());
    EXPECT_TRUE(ext_equal(left.circuit(), right.circuit()));
  }
}

TEST(ZkpCompose, BothSidesSeeTheSameSpec) {
  std::mt19937 rng(47);
  for (int i = 0; i < 30; ++i) {
    auto f = random_zkp(rng, 2, 3, 1, 1);
    auto g = random_zkp(rng, 1, 3, 2, 2);
    auto fg = zkp_compose(f, g);
    for_all_inputs(8, [&](const BitVector& x) {
      auto a = x.slice(0, 2);
      auto spec = x.slice(2, 3);
      auto w0 = x.slice(5, 1);
      auto w1 = x.slice(6, 2);
      auto rf = f.eval(a, spec, w0);
      auto rg = g.eval(rf.state, spec, w1);
      auto r = fg.eval(a, spec, w0 + w1);
      ASSERT_EQ(r.flag, rf.flag && rg.flag);
      ASSERT_EQ(r.state, rg.state);
    });
  }
}

TEST(ZkpCompose, Mismatch) {
  EXPECT_THROW(zkp_compose(zkp_identity(2, 3), zkp_identity(1, 3)), WidthError);
  EXPECT_THROW(zkp_compose(zkp_identity(2, 3), zkp_identity(2, 4)), WidthError);
}

TEST(UniversalStep, ReducesToStepVerifier) {
  const auto& fam = fam12();
  auto step = universal_step(fam);
  EXPECT_EQ(step.in_width(), fam.v_bits);
  EXPECT_EQ(step.spec_width(), 16u);
  EXPECT_EQ(step.witness_width(), fam.e_bits);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto sv = step_verifier(fam.graphs[i], fam.enumeration(i));
    for_all_inputs(fam.v_bits + fam.e_bits, [&](const BitVector& x) {
      auto v = x.slice(0, fam.v_bits);
      auto e = x.slice(fam.v_bits, fam.e_bits);
      auto a = step.eval(v, fam.encodings[i].bits, e);
      auto b = sv.eval(v, e);
      ASSERT_EQ(a.flag, b.flag);
      ASSERT_EQ(a.state, b.state);
    });
  }
}

TEST(UniversalStep, InvalidSpecRejectsEverything) {
  auto step = universal_step(fam12());
  BitVector junk = bits("1111111111111111");
  for_all_inputs(4, [&](const BitVector& x) {
    EXPECT_FALSE(step.eval(x.slice(0, 2), BitVector(16), x.slice(2, 2)).flag);
    EXPECT_FALSE(step.eval(x.slice(0, 2), junk, x.slice(2, 2)).flag);
  });
}

TEST(UniversalVerifier, PaddedPathOnTwoState) {
  const auto& fam = fam12();
  auto g = two_state();
  auto en = Enumeration::at_capacity(g, 1, 2);
  auto f = universal_verifier(fam, 2);
  auto spec = encode_graph(g, 1, 2).bits;
  auto r = f.eval(en.vertex_code(0), spec, en.edge_code(0) + en.identity_code(1));
  EXPECT_TRUE(r.flag);
  EXPECT_EQ(r.state, en.vertex_code(1));
}

TEST(UniversalVerifier, AcceptanceDependsOnSpec) {
  const auto& fam = fam12();
  auto g = two_state();
  auto en = Enumeration::at_capacity(g, 1, 2);
  auto f = universal_verifier(fam, 1);
  // Same shape, edge reversed: e goes b -> a, so "a then e" is invalid there.
  auto reversed = parse_graph(R"({"vertices":["a","b"],"edges":[["e","b","a"]]})");
  EXPECT_TRUE(f.eval(en.vertex_code(0), encode_graph(g, 1, 2).bits, en.edge_code(0)).flag);
  EXPECT_FALSE(f.eval(en.vertex_code(0), encode_graph(reversed, 1, 2).bits, en.edge_code(0)).flag);
  ASSERT_LT(index_of(fam, reversed), fam.size());
}

TEST(UniversalVerifier, ZeroStepsChecksStartAgainstSpec) {
  const auto& fam = fam12();
  auto f = universal_verifier(fam, 0);
  EXPECT_EQ(f.witness_width(), 0u);
  auto one = Graph({"a"}, {});
  auto spec = encode_graph(one, 1, 2).bits;
  EXPECT_TRUE(f.eval(bits("01"), spec, {}).flag);
  EXPECT_FALSE(f.eval(bits("10"), spec, {}).flag);
  EXPECT_FALSE(f.eval(bits("00"), spec, {}).flag);
  EXPECT_EQ(f.eval(bits("10"), spec, {}).state, bits("10"));
}

TEST(UniversalVerifier, Budget) {
  Budget b;
  b.max_gates = 1000;
  EXPECT_THROW(universal_verifier(fam12(), 3, b), BudgetError);
  b = Budget{};
  b.max_universal_graphs = 100;
  EXPECT_THROW(universal_verifier(3, 3, 1, b), BudgetError);
}

TEST(ZkpSnarkize, Examples) {
  const auto& fam = fam12();
  auto g = two_state();
  auto en = Enumeration::at_capacity(g, 1, 2);
  auto s = zkp_snarkize(universal_verifier(fam, 1));
  auto spec = encode_graph(g, 1, 2).bits;
  auto a = en.vertex_code(0);
  auto b = en.vertex_code(1);
  EXPECT_EQ(s.eval(concat({a, spec, en.edge_code(0), b})), bits("1"));
  EXPECT_EQ(s.eval(concat({a, spec, en.edge_code(0), a})), bits("0"));
  EXPECT_EQ(s.eval(concat({a, spec, en.edge_code(0), bits("00")})), bits("0"));
}

TEST(FilterBank, AtMostOneFires) {
  auto bank = filter_bank(fam12());
  std::size_t hits_total = 0;
  for_each_input_batch(16, [&](std::span<const std::uint64_t> in, std::uint64_t, std::uint64_t live) {
    auto out = bank.eval_lanes(in);
    std::uint64_t seen = 0;
    for (auto w : out) {
      ASSERT_EQ(seen & w & live, 0u);
      seen |= w & live;
    }
    hits_total += static_cast<std::size_t>(__builtin_popcountll(seen));
  });
  EXPECT_EQ(hits_total, fam12().size());
}
