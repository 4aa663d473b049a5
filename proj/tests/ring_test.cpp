#include <gtest/gtest.h>

#include <vector>

#include "bcinv/ring.hpp"

using namespace bcinv;

namespace {

RingHandle z(std::uint64_t n) { return build_ring(RingSpec::residue(n)); }

}  // namespace

TEST(RingSpecTest, ParseAndPrintRoundTrip) {
    for (const char* text : {"zn:6", "mat:2:zn:2", "prod:zn:2,zn:3", "prod:zn:2,mat:2:zn:3"}) {
        EXPECT_EQ(parse_ring_spec(text).str(), text);
    }
}

TEST(RingSpecTest, MalformedSpecsAreRejected) {
    EXPECT_THROW(parse_ring_spec("zn:x"), SpecParseError);
    EXPECT_THROW(parse_ring_spec("ring:6"), SpecParseError);
    EXPECT_THROW(parse_ring_spec("mat:2"), SpecParseError);
    EXPECT_THROW(parse_ring_spec("prod:"), SpecParseError);
    EXPECT_THROW(build_ring("zn:1"), SpecParseError);
    EXPECT_THROW(build_ring("mat:0:zn:2"), SpecParseError);
}

TEST(RingSpecTest, CardinalityCap) {
    EXPECT_THROW(build_ring("zn:70000"), CardinalityError);
    EXPECT_THROW(build_ring("mat:3:zn:16"), CardinalityError);

    BuildOptions roomy;
    roomy.max_order = 1 << 20;
    RingHandle big = build_ring("zn:70000", roomy);
    EXPECT_EQ(big->order(), 70000u);
    EXPECT_EQ(big->mul(69999, 69999), 1u);
}

TEST(RingTest, ResidueStructure) {
    RingHandle r = z(6);
    EXPECT_EQ(r->order(), 6u);
    EXPECT_EQ(r->zero(), 0u);
    EXPECT_EQ(r->one(), 1u);
    EXPECT_EQ(r->mul(4, 4), 4u);
    EXPECT_EQ(r->add(5, 1), 0u);
    EXPECT_EQ(r->neg(2), 4u);
    EXPECT_EQ(r->sub(1, 3), 4u);
}

TEST(RingTest, MatrixStructure) {
    RingHandle m = build_ring("mat:2:zn:2");
    EXPECT_EQ(m->order(), 16u);
    EXPECT_EQ(m->zero(), 0u);

    index_t u = m->parse_element("1,1,0,1");
    EXPECT_EQ(m->mul(u, u), m->one());

    index_t nil = m->parse_element("0,1,0,0");
    EXPECT_EQ(m->pow(nil, 2), m->zero());
}

TEST(RingTest, PowerBehavior) {
    EXPECT_EQ(z(6)->pow(2, 3), 2u);
    EXPECT_EQ(z(4)->pow(2, 2), 0u);
    EXPECT_EQ(z(6)->pow(5, 1), 5u);
    EXPECT_THROW(z(6)->pow(2, 0), std::invalid_argument);
}

TEST(RingTest, IdempotentScan) {
    RingHandle r = z(6);
    std::vector<index_t> idempotents;
    for (index_t x = 0; x < r->order(); ++x)
        if (r->is_idempotent(x)) idempotents.push_back(x);
    EXPECT_EQ(idempotents, (std::vector<index_t>{0, 1, 3, 4}));
    EXPECT_FALSE(r->is_idempotent(2));
    EXPECT_TRUE(r->is_idempotent(r->one()));
}

TEST(RingTest, Units) {
    RingHandle r = z(6);
    EXPECT_EQ(r->unit_inverse(5), 5u);
    EXPECT_EQ(r->unit_inverse(r->one()), r->one());
    EXPECT_FALSE(r->is_unit(2));
    EXPECT_THROW(r->unit_inverse(2), std::invalid_argument);
}

TEST(RingTest, TransposeExamples) {
    RingHandle m = build_ring("mat:2:zn:2");
    EXPECT_EQ(m->transpose(m->parse_element("1,1,0,1")), m->parse_element("1,0,1,1"));
    EXPECT_EQ(m->transpose(m->one()), m->one());
    EXPECT_EQ(z(6)->transpose(4), 4u);
}

// transpose must be an involutive anti-automorphism on M_k(Z_n).
TEST(RingTest, TransposeAntiAutomorphismExhaustive) {
    for (std::uint32_t k = 1; k <= 2; ++k) {
        for (std::uint64_t n = 2; n <= 4; ++n) {
            RingHandle m = build_ring(RingSpec::matrix(k, RingSpec::residue(n)));
            for (index_t x = 0; x < m->order(); ++x) {
                EXPECT_EQ(m->transpose(m->transpose(x)), x);
                for (index_t y = 0; y < m->order(); ++y) {
                    EXPECT_EQ(m->transpose(m->mul(x, y)),
                              m->mul(m->transpose(y), m->transpose(x)));
                    EXPECT_EQ(m->transpose(m->add(x, y)),
                              m->add(m->transpose(x), m->transpose(y)));
                }
            }
        }
    }
}

TEST(RingTest, EncodeDecodeRoundTrip) {
    for (const char* text : {"zn:6", "mat:2:zn:2", "mat:2:zn:3", "prod:zn:2,zn:3",
                             "prod:zn:4,mat:2:zn:2"}) {
        RingHandle r = build_ring(text);
        for (index_t i = 0; i < r->order(); ++i)
            EXPECT_EQ(r->parse_element(r->format_element(i)), i) << text;
    }
}

TEST(RingTest, FullAxiomCheckSmallRings) {
    BuildOptions full;
    full.axiom_check = BuildOptions::AxiomCheck::full;
    for (const char* text : {"zn:8", "mat:2:zn:2", "prod:zn:2,zn:3", "mat:2:zn:4"}) {
        EXPECT_NO_THROW(build_ring(text, full)) << text;
    }
}

// Z_2 x Z_3 must behave exactly like Z_6 under the CRT correspondence,
// pair (a mod 2, b mod 3) <-> the residue matching both.
TEST(RingTest, ProductIsomorphicToZ6ByCrt) {
    RingHandle p = build_ring("prod:zn:2,zn:3");
    RingHandle r = z(6);
    ASSERT_EQ(p->order(), 6u);

    std::vector<index_t> to_z6(6);
    for (index_t a = 0; a < 2; ++a) {
        for (index_t b = 0; b < 3; ++b) {
            std::string lit = "(" + std::to_string(a) + ";" + std::to_string(b) + ")";
            index_t pi = p->parse_element(lit);
            for (index_t x = 0; x < 6; ++x)
                if (x % 2 == a && x % 3 == b) to_z6[pi] = x;
        }
    }

    for (index_t x = 0; x < 6; ++x) {
        for (index_t y = 0; y < 6; ++y) {
            EXPECT_EQ(to_z6[p->mul(x, y)], r->mul(to_z6[x], to_z6[y]));
            EXPECT_EQ(to_z6[p->add(x, y)], r->add(to_z6[x], to_z6[y]));
        }
    }
    EXPECT_EQ(to_z6[p->one()], r->one());
    EXPECT_EQ(to_z6[p->zero()], r->zero());
}

TEST(RingTest, LiteralValidation) {
    RingHandle r = z(6);
    EXPECT_THROW(r->parse_element("6"), SpecParseError);
    EXPECT_THROW(r->parse_element("-1"), SpecParseError);
    EXPECT_THROW(r->parse_element("two"), SpecParseError);

    RingHandle m = build_ring("mat:2:zn:2");
    EXPECT_THROW(m->parse_element("1,0,0"), SpecParseError);
    EXPECT_THROW(m->parse_element("1,0,0,2"), SpecParseError);

    RingHandle p = build_ring("prod:zn:2,zn:3");
    EXPECT_THROW(p->parse_element("1;2"), SpecParseError);
    EXPECT_THROW(p->parse_element("(1)"), SpecParseError);
    EXPECT_EQ(p->format_element(p->parse_element("(1;2)")), "(1;2)");
}

TEST(ElementTest, OperatorsAndCrossRingErrors) {
    RingHandle r = z(6);
    RingHandle other = z(6);

    Element a(*r, 4), b(*r, 5);
    EXPECT_EQ((a * a).index(), 4u);
    EXPECT_EQ((b + Element(*r, 1)).index(), 0u);
    EXPECT_EQ((-Element(*r, 2)).index(), 4u);
    EXPECT_EQ(power(Element(*r, 2), 3).index(), 2u);
    EXPECT_TRUE(is_idempotent(Element(*r, 3)));
    EXPECT_EQ(unit_inverse(b).index(), 5u);

    Element foreign(*other, 1);
    EXPECT_THROW(a * foreign, std::invalid_argument);
    EXPECT_THROW(a + foreign, std::invalid_argument);
    EXPECT_THROW(Element(*r, 6), std::invalid_argument);
}
