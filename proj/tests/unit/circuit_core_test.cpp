#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace pathcirc;
using pathcirc::testing::bits;
using pathcirc::testing::for_all_inputs;
using pathcirc::testing::random_circuit;

namespace {

Circuit not1() { return derived_gate(DerivedGate::Not); }

}  // namespace

TEST(Primitive, Semantics) {
  EXPECT_EQ(primitive(GateKind::True).eval({}), bits("1"));
  EXPECT_EQ(primitive(GateKind::False).eval({}), bits("0"));
  EXPECT_EQ(primitive(GateKind::Nand).eval(bits("11")), bits("0"));
  EXPECT_EQ(primitive(GateKind::Nand).eval(bits("10")), bits("1"));
  EXPECT_EQ(primitive(GateKind::Nand).eval(bits("00")), bits("1"));
  EXPECT_EQ(primitive(GateKind::Copy).eval(bits("1")), bits("11"));
  EXPECT_EQ(primitive(GateKind::Copy).eval(bits("0")), bits("00"));
}

TEST(Primitive, Arity) {
  for (auto k : {GateKind::Nand, GateKind::Copy, GateKind::True, GateKind::False}) {
    auto c = primitive(k);
    EXPECT_EQ(c.n_inputs(), input_arity(k));
    EXPECT_EQ(c.n_outputs(), output_arity(k));
    EXPECT_EQ(c.gate_count(), 1u);
  }
}

TEST(Identity, PassesThrough) {
  EXPECT_EQ(identity(0).eval({}), BitVector{});
  EXPECT_EQ(identity(3).eval(bits("101")), bits("101"));
  EXPECT_EQ(identity(5).gate_count(), 0u);
}

TEST(Identity, UnitLaws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    auto c = random_circuit(rng, 2, 3, 8);
    EXPECT_TRUE(ext_equal(seq(identity(2), c), c));
    EXPECT_TRUE(ext_equal(seq(c, identity(3)), c));
    EXPECT_TRUE(ext_equal(tensor(c, identity(0)), c));
    EXPECT_TRUE(ext_equal(tensor(identity(0), c), c));
  }
}

TEST(Seq, Examples) {
  auto c = seq(tensor(primitive(GateKind::True), identity(0)), primitive(GateKind::Copy));
  EXPECT_EQ(c.eval({}), bits("11"));
  EXPECT_EQ(seq(not1(), not1()).eval(bits("0")), bits("0"));
  EXPECT_EQ(seq(not1(), not1()).eval(bits("1")), bits("1"));
}

TEST(Seq, WidthMismatch) {
  EXPECT_THROW(seq(identity(2), identity(3)), WidthError);
  EXPECT_THROW(seq(primitive(GateKind::Nand), primitive(GateKind::Nand)), WidthError);
}

TEST(Seq, GateCountAdds) {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto a = random_circuit(rng, 3, 2, 6);
    auto b = random_circuit(rng, 2, 2, 6);
    EXPECT_EQ(seq(a, b).gate_count(), a.gate_count() + b.gate_count());
  }
}

TEST(Seq, Functoriality) {
  std::mt19937 rng(3);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<std::size_t> w(0, 5);
    auto n = w(rng) + 1;
    auto mid = w(rng);
    auto out = w(rng);
    auto a = random_circuit(rng, n, mid, 10);
    auto b = random_circuit(rng, mid, out, 10);
    auto c = seq(a, b);
    for_all_inputs(n, [&](const BitVector& x) { ASSERT_EQ(c.eval(x), b.eval(a.eval(x))); });
  }
}

TEST(Tensor, Examples) {
  EXPECT_TRUE(ext_equal(tensor(identity(1), identity(1)), identity(2)));
  EXPECT_EQ(tensor(primitive(GateKind::True), primitive(GateKind::False)).eval({}), bits("10"));
}

TEST(Tensor, Monoidality) {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    std::uniform_int_distribution<std::size_t> w(0, 4);
    auto n1 = w(rng);
    auto n2 = w(rng);
    auto a = random_circuit(rng, n1, w(rng), 8);
    auto b = random_circuit(rng, n2, w(rng), 8);
    auto t = tensor(a, b);
    EXPECT_EQ(t.n_inputs(), n1 + n2);
    EXPECT_EQ(t.n_outputs(), a.n_outputs() + b.n_outputs());
    for_all_inputs(n1 + n2, [&](const BitVector& x) {
      ASSERT_EQ(t.eval(x), a.eval(x.slice(0, n1)) + b.eval(x.slice(n1, n2)));
    });
  }
}

TEST(Tensor, Interchange) {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto a = random_circuit(rng, 2, 2, 6);
    auto b = random_circuit(rng, 3, 1, 6);
    auto c = random_circuit(rng, 2, 3, 6);
    auto d = random_circuit(rng, 1, 2, 6);
    EXPECT_TRUE(ext_equal(seq(tensor(a, b), tensor(c, d)), tensor(seq(a, c), seq(b, d))));
  }
}

TEST(Symmetry, Swaps) {
  EXPECT_EQ(symmetry(1, 1).eval(bits("10")), bits("01"));
  EXPECT_EQ(symmetry(2, 3).eval(bits("10011")), bits("01110"));
  EXPECT_TRUE(ext_equal(symmetry(2, 0), identity(2)));
  EXPECT_EQ(symmetry(4, 3).gate_count(), 0u);
  for (std::size_t w1 = 0; w1 <= 3; ++w1) {
    for (std::size_t w2 = 0; w2 <= 3; ++w2) {
      EXPECT_TRUE(ext_equal(seq(symmetry(w1, w2), symmetry(w2, w1)), identity(w1 + w2)));
    }
  }
}

TEST(DerivedGate, TruthTables) {
  for_all_inputs(1, [&](const BitVector& x) { EXPECT_EQ(not1().eval(x)[0], !x[0]); });
  for_all_inputs(2, [&](const BitVector& x) {
    EXPECT_EQ(derived_gate(DerivedGate::And).eval(x)[0], x[0] && x[1]);
    EXPECT_EQ(derived_gate(DerivedGate::Or).eval(x)[0], x[0] || x[1]);
    EXPECT_EQ(derived_gate(DerivedGate::Xor).eval(x)[0], x[0] != x[1]);
  });
  for (std::size_t n = 1; n <= 6; ++n) {
    for_all_inputs(n, [&](const BitVector& x) {
      bool all = true;
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        all = all && x[i];
        any = any || x[i];
      }
      EXPECT_EQ(derived_gate(DerivedGate::AndN, n).eval(x)[0], all);
      EXPECT_EQ(derived_gate(DerivedGate::OrN, n).eval(x)[0], any);
    });
    for_all_inputs(1, [&](const BitVector& x) {
      EXPECT_EQ(derived_gate(DerivedGate::CopyN, n).eval(x), BitVector(n, x[0]));
    });
  }
}

TEST(DerivedGate, NotIsCopyThenNand) {
  EXPECT_TRUE(ext_equal(not1(), seq(primitive(GateKind::Copy), primitive(GateKind::Nand))));
  EXPECT_EQ(derived_gate(DerivedGate::Or).eval(bits("00")), bits("0"));
  EXPECT_EQ(derived_gate(DerivedGate::And).eval(bits("11")), bits("1"));
  EXPECT_EQ(derived_gate(DerivedGate::And).eval(bits("10")), bits("0"));
}

TEST(CopyBus, DuplicatesWholeBus) {
  auto c = copy_bus(3, 3);
  EXPECT_EQ(c.eval(bits("101")), bits("101101101"));
  EXPECT_EQ(copy_bus(2).eval(bits("01")), bits("0101"));
}

TEST(Builder, FanoutIsLeftLeaningBinaryTree) {
  CircuitBuilder b(1);
  auto outs = b.fanout(b.input(0), 4);
  ASSERT_EQ(outs.size(), 4u);
  auto c = std::move(b).finish(outs);
  EXPECT_EQ(c.count(GateKind::Copy), 3u);
  // Each COPY after the first splits the first output of the previous one.
  EXPECT_EQ(c.gates()[1].in[0], c.gates()[0].out[0]);
  EXPECT_EQ(c.gates()[2].in[0], c.gates()[1].out[0]);
  EXPECT_EQ(c.eval(bits("1")), bits("1111"));
}

TEST(Eval, WidthMismatch) {
  EXPECT_THROW(identity(2).eval(bits("1")), WidthError);
}

TEST(Eval, Match2Rows) {
  auto m = match_circuit(2);
  EXPECT_EQ(m.eval(bits("0101")), bits("1"));
  EXPECT_EQ(m.eval(bits("0001")), bits("0"));
}

TEST(ExtEqual, Examples) {
  EXPECT_TRUE(ext_equal(seq(not1(), not1()), identity(1)));
  auto and2 = derived_gate(DerivedGate::And);
  EXPECT_TRUE(ext_equal(seq(tensor(and2, identity(1)), and2), seq(tensor(identity(1), and2), and2)));
  EXPECT_FALSE(ext_equal(primitive(GateKind::True), primitive(GateKind::False)));
}

TEST(ExtEqual, Guards) {
  EXPECT_THROW(ext_equal(identity(2), identity(3)), WidthError);
  EXPECT_THROW(ext_equal(identity(21), identity(21)), BudgetError);
  EXPECT_TRUE(ext_equal(identity(21), identity(21), 21));
}

TEST(ExtEqual, DetectsSingleDifferingInput) {
  // Differ only on the last of 2^9 inputs, which sits in the last 64-lane batch.
  auto all9 = derived_gate(DerivedGate::AndN, 9);
  auto zero9 = seq(discard(9), primitive(GateKind::False));
  EXPECT_FALSE(ext_equal(all9, zero9));
}

TEST(Circuit, RejectsBadGateLists) {
  EXPECT_THROW(Circuit(1, {Gate{GateKind::Nand, {0, 5}, {1, 0}}}, {1}), ValidationError);
  EXPECT_THROW(Circuit(1, {}, {3}), ValidationError);
  // Reading an input twice without COPY.
  EXPECT_THROW(Circuit(1, {Gate{GateKind::Nand, {0, 0}, {1, 0}}}, {1}), ValidationError);
  // Output wire defined twice.
  EXPECT_THROW(Circuit(0, {Gate{GateKind::True, {}, {0, 0}}, Gate{GateKind::False, {}, {0, 0}}}, {0}),
               ValidationError);
  // Use before definition.
  EXPECT_THROW(Circuit(0, {Gate{GateKind::Copy, {1, 0}, {2, 3}}, Gate{GateKind::True, {}, {1, 0}}}, {2}),
               ValidationError);
}

TEST(Circuit, ConstructorsProduceValidCircuits) {
  // Round-tripping through the validating constructor must succeed for everything we build.
  std::vector<Circuit> built = {
      identity(4), symmetry(2, 3), copy_bus(3, 4), match_circuit(4), filter_circuit(bits("1001")),
      derived_gate(DerivedGate::Xor), derived_gate(DerivedGate::OrN, 5), constant(bits("1010"))};
  for (const auto& c : built) {
    EXPECT_NO_THROW(Circuit(c.n_inputs(), c.gates(), c.output_map()));
  }
}
