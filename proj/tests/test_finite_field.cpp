#include <gtest/gtest.h>

#include <set>

#include "core/finite_field.hpp"
#include "oracle.hpp"

using namespace charsum;

namespace {

struct Shape {
  std::uint32_t p, m;
};

class FieldShapes : public ::testing::TestWithParam<Shape> {};

}  // namespace

TEST(Primes, SmallCases) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}

TEST(Field, SmallestPrimitiveRootModSeven) {
  auto f = Field::construct(7, 1);
  EXPECT_EQ(f->generator().v, 3u);
}

TEST(Field, F3GeneratorIsTwo) { EXPECT_EQ(Field::construct(3, 1)->generator().v, 2u); }

TEST(Field, F27FixedByFrobeniusCubed) {
  auto f = Field::construct(3, 3);
  EXPECT_EQ(f->size(), 27u);
  for (std::uint32_t x = 0; x < 27; ++x) EXPECT_EQ(f->pow(Elem{x}, 27), Elem{x});
}

TEST(Field, RejectsBadInput) {
  EXPECT_THROW(Field::construct(9, 1), Error);
  EXPECT_THROW(Field::construct(2, 3), Error);
  EXPECT_THROW(Field::construct(3, 0), Error);
  try {
    Field::construct(3, 13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  try {
    Field::construct(2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EvenCharacteristic);
  }
}

TEST(Field, TraceExamples) {
  EXPECT_EQ(Field::construct(7, 1)->trace_to_prime(Elem{1}), 1u);
  auto f27 = Field::construct(3, 3);
  EXPECT_EQ(f27->trace_to_prime(f27->one()), 0u);
}

TEST_P(FieldShapes, ModulusAndGeneratorMatchBruteForce) {
  const auto [p, m] = GetParam();
  auto f = Field::construct(p, m);
  const oracle::NaiveField ref(p, m);
  ASSERT_EQ(f->modulus().size(), ref.modulus().size());
  for (std::size_t i = 0; i < ref.modulus().size(); ++i) EXPECT_EQ(f->modulus()[i], ref.modulus()[i]);
  EXPECT_EQ(f->generator().v, ref.smallest_primitive());
}

TEST_P(FieldShapes, ArithmeticMatchesSchoolbook) {
  const auto [p, m] = GetParam();
  auto f = Field::construct(p, m);
  const oracle::NaiveField ref(p, m);
  const auto n = static_cast<std::uint32_t>(f->size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; y += 1 + n / 40) {
      EXPECT_EQ(f->mul(Elem{x}, Elem{y}).v, ref.mul(x, y));
      EXPECT_EQ(f->mul_poly(Elem{x}, Elem{y}).v, ref.mul(x, y));
      EXPECT_EQ(f->add(Elem{x}, Elem{y}).v, ref.add(x, y));
      EXPECT_EQ(f->sub(Elem{x}, Elem{y}).v, ref.sub(x, y));
    }
}

TEST_P(FieldShapes, LogIsBijection) {
  const auto [p, m] = GetParam();
  auto f = Field::construct(p, m);
  std::set<std::uint64_t> seen;
  for (std::uint64_t k = 0; k < f->unit_order(); ++k) {
    const Elem x = f->exp(k);
    EXPECT_EQ(f->log(x), k);
    seen.insert(x.v);
  }
  EXPECT_EQ(seen.size(), f->unit_order());
  EXPECT_EQ(seen.count(0), 0u);
}

TEST_P(FieldShapes, InverseAndFrobenius) {
  const auto [p, m] = GetParam();
  auto f = Field::construct(p, m);
  for (std::uint32_t x = 1; x < f->size(); ++x) {
    EXPECT_EQ(f->mul(Elem{x}, f->inv(Elem{x})), f->one());
    EXPECT_EQ(f->frobenius(Elem{x}), f->pow(Elem{x}, p));
    // trace lands in F_p and is fixed by Frobenius
    const std::uint32_t tr = f->trace_to_prime(Elem{x});
    EXPECT_LT(tr, p);
    EXPECT_EQ(tr, oracle::NaiveField(p, m).trace(x, m));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, FieldShapes,
                         ::testing::Values(Shape{3, 1}, Shape{7, 1}, Shape{3, 2}, Shape{3, 3}, Shape{5, 2}, Shape{7, 2},
                                           Shape{3, 4}, Shape{11, 2}),
                         [](const auto& info) {
                           return "p" + std::to_string(info.param.p) + "_m" + std::to_string(info.param.m);
                         });

TEST(Tower, SubfieldOfF49HasSevenElements) {
  auto t = Tower::build(7, 1);
  int fixed = 0;
  for (std::uint32_t z = 0; z < t->top().size(); ++z)
    if (t->top().pow(Elem{z}, 7) == Elem{z}) ++fixed;
  EXPECT_EQ(fixed, 7);
}

TEST(Tower, ISquaredIsMinusOne) {
  for (auto [p, tt] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 3u}, {5u, 1u}}) {
    auto t = Tower::build(p, tt);
    const Field& top = t->top();
    EXPECT_EQ(top.square(t->i_elem()), top.neg(top.one()));
    if (t->q_is_3_mod_4()) {
      EXPECT_FALSE(t->in_base(t->i_elem()));
      EXPECT_EQ(t->norm(t->i_elem()), t->base().one());
    }
  }
}

TEST(Tower, NormOfG2GeneratesBase) {
  auto t = Tower::build(11, 1);
  const Field& b = t->base();
  const Elem g = t->norm(t->g2());
  EXPECT_EQ(g, t->g());
  std::set<std::uint32_t> powers;
  Elem x = b.one();
  for (int k = 0; k < 10; ++k, x = b.mul(x, g)) powers.insert(x.v);
  EXPECT_EQ(powers.size(), 10u);
}

TEST(Tower, EmbeddingIsRingHomomorphism) {
  for (auto [p, tt] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 2u}, {3u, 3u}}) {
    auto t = Tower::build(p, tt);
    const Field& b = t->base();
    const Field& top = t->top();
    for (std::uint32_t x = 0; x < b.size(); ++x) {
      EXPECT_EQ(t->pullback(t->embed(Elem{x})), Elem{x});
      EXPECT_EQ(t->norm(t->embed(Elem{x})), b.square(Elem{x}));
      for (std::uint32_t y = 0; y < b.size(); ++y) {
        EXPECT_EQ(t->embed(b.add(Elem{x}, Elem{y})), top.add(t->embed(Elem{x}), t->embed(Elem{y})));
        EXPECT_EQ(t->embed(b.mul(Elem{x}, Elem{y})), top.mul(t->embed(Elem{x}), t->embed(Elem{y})));
      }
    }
    for (std::uint32_t z = 0; z < top.size(); ++z) {
      const bool fixed = top.pow(Elem{z}, b.size()) == Elem{z};
      EXPECT_EQ(t->in_base(Elem{z}), fixed);
      EXPECT_TRUE(t->in_base(top.mul(Elem{z}, t->conj(Elem{z}))));
    }
  }
}

TEST(Tower, TopMatchesBruteForceTower) {
  auto t = Tower::build(7, 1);
  const oracle::NaiveTower ref(7, 1);
  EXPECT_EQ(t->g2().v, ref.g2());
  for (std::uint64_t n = 0; n < 6; ++n) EXPECT_EQ(t->embed(t->base().exp(n)).v, ref.base_elem(n));
}
