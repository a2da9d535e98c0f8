#include <hilbcat/random.hpp>
#include <hilbcat/scalar.hpp>

#include <gtest/gtest.h>

namespace {

using hilbcat::Scalar;

const Scalar I = Scalar::i();

TEST(Scalar, ConjExamples) {
  EXPECT_EQ(conj(I), -I);
  EXPECT_EQ(conj(Scalar::ratio(3, 2)), Scalar::ratio(3, 2));
  EXPECT_EQ(conj(Scalar(1) + Scalar(2) * I), Scalar(1) - Scalar(2) * I);
}

TEST(Scalar, NormalFormOnConstruction) {
  Scalar s = Scalar::ratio(6, -4);
  EXPECT_EQ(s.re().get_num(), -3);
  EXPECT_EQ(s.re().get_den(), 2);
  EXPECT_EQ(Scalar::ratio(2, 4), Scalar::ratio(1, 2));
  EXPECT_THROW(Scalar::ratio(1, 0), hilbcat::usage_error);
}

TEST(Scalar, ParseAcceptsDocumentedForms) {
  EXPECT_EQ(Scalar::parse("1/2"), Scalar::ratio(1, 2));
  EXPECT_EQ(Scalar::parse("1/2+3/4*i"), Scalar(hilbcat::Rational(1, 2), hilbcat::Rational(3, 4)));
  EXPECT_EQ(Scalar::parse("i"), I);
  EXPECT_EQ(Scalar::parse("-i"), -I);
  EXPECT_EQ(Scalar::parse("3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("-2/5*i"), Scalar::ratio(-2, 5, true));
  EXPECT_EQ(Scalar::parse(" 1 - 2 * i "), Scalar(1) - Scalar(2) * I);
  EXPECT_EQ(Scalar::parse("4/6"), Scalar::ratio(2, 3));
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "x", "1+", "2 3", "1*j", "/2", "--1"}) {
    EXPECT_THROW(Scalar::parse(bad), hilbcat::scalar_syntax_error) << bad;
  }
}

TEST(Scalar, PrintIsCanonical) {
  EXPECT_EQ(Scalar(0).to_string(), "0");
  EXPECT_EQ(Scalar::ratio(-1, 2).to_string(), "-1/2");
  EXPECT_EQ(I.to_string(), "i");
  EXPECT_EQ((-I).to_string(), "-i");
  EXPECT_EQ(Scalar::ratio(-2, 5, true).to_string(), "-2/5*i");
  EXPECT_EQ((Scalar::ratio(1, 2) + Scalar(3) * I).to_string(), "1/2+3*i");
  EXPECT_EQ((Scalar(1) - I).to_string(), "1-i");
}

TEST(Scalar, DivisionByZeroIsUsageError) { EXPECT_THROW(Scalar(1) / Scalar(0), hilbcat::usage_error); }

class ScalarProperties : public ::testing::Test {
 protected:
  Scalar draw() { return gen.entry() + gen.entry() * I + gen.entry(); }
  hilbcat::InstanceGenerator gen{20240101};
};

TEST_F(ScalarProperties, ConjIsAnInvolutiveFieldAutomorphism) {
  for (int k = 0; k < 500; ++k) {
    Scalar s = draw(), t = draw();
    EXPECT_EQ(conj(conj(s)), s);
    EXPECT_EQ(conj(s + t), conj(s) + conj(t));
    EXPECT_EQ(conj(s * t), conj(s) * conj(t));
  }
}

TEST_F(ScalarProperties, FieldAxioms) {
  for (int k = 0; k < 500; ++k) {
    Scalar a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * (Scalar(1) / a), Scalar(1));
    }
  }
}

TEST_F(ScalarProperties, NormIsPositiveDefinite) {
  for (int k = 0; k < 500; ++k) {
    Scalar s = draw();
    Scalar n = s * conj(s);
    EXPECT_TRUE(n.is_real());
    EXPECT_GE(sgn(n.re()), 0);
    EXPECT_EQ(sgn(n.re()) == 0, s.is_zero());
  }
}

TEST_F(ScalarProperties, PrintParseRoundTrip) {
  for (int k = 0; k < 300; ++k) {
    Scalar s = draw() / (draw() + Scalar(3));
    EXPECT_EQ(Scalar::parse(s.to_string()), s) << s;
  }
}

}  // namespace
