#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace llc;
using namespace llc::testing;

namespace {

// Linked, decided on explicit sets of exponents: the union is a run of
// consecutive exponents and neither set contains the other.
bool linked_oracle(const Segment& a, const Segment& b) {
    if (a.start.label != b.start.label || !(a.start.x - b.start.x).is_integer()) return false;
    std::set<long long> sa, sb;
    for (int j = 0; j < a.m; ++j) sa.insert((a.start.x + HalfInt(j)).halves());
    for (int j = 0; j < b.m; ++j) sb.insert((b.start.x + HalfInt(j)).halves());
    if (std::includes(sa.begin(), sa.end(), sb.begin(), sb.end())) return false;
    if (std::includes(sb.begin(), sb.end(), sa.begin(), sa.end())) return false;
    std::set<long long> u = sa;
    u.insert(sb.begin(), sb.end());
    return *u.rbegin() - *u.begin() == 2 * static_cast<long long>(u.size() - 1);
}

bool admissible(const std::vector<Segment>& order) {
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (precedes(order[i], order[j])) return false;
    return true;
}

InertialLabel tau_self_dual() { return label("tau", LabelKind::symbolic, 2, 1, 1, "tau"); }

}  // namespace

TEST(Registry, Examples) {
    EXPECT_NO_THROW(trivial_registry());
    EXPECT_NO_THROW(LabelRegistry::load({tau_self_dual()}));
    EXPECT_THROW(LabelRegistry::load({label("sigma", LabelKind::symbolic, 2, 1, 1, "tau"),
                                      label("tau", LabelKind::symbolic, 2, 1, 1, "sigma2"),
                                      label("sigma2", LabelKind::symbolic, 2, 1, 1, "tau")}),
                 Error);
}

TEST(Registry, RejectsInvalidDocuments) {
    using K = LabelKind;
    auto bad = [](std::vector<InertialLabel> ls) { EXPECT_THROW(LabelRegistry::load(std::move(ls)), Error); };
    bad({tau_self_dual(), tau_self_dual()});
    bad({label("a", K::symbolic, 2, 1, 1, "missing")});
    bad({label("a", K::symbolic, 4, 3, 1, "a")});
    bad({label("a", K::symbolic, 0, 1, 1, "a")});
    bad({label("c", K::unramified_char, 2, 1, 0, "c")});
    bad({label("c", K::unramified_char, 1, 1, 1, "c")});
    bad({label("c", K::ramified_char, 1, 1, 0, "c")});
    bad({label("a", K::symbolic, 2, 1, 1, "a", ExactScalar::q_power(1))});
    bad({label("a", K::symbolic, 2, 1, 1, "a", unit(2, 0))});
    bad({label("a", K::symbolic, 2, 1, 1, "b"), label("b", K::symbolic, 2, 2, 1, "a")});
    bad({label("a", K::symbolic, 2, 1, 1, "b", unit(0, 1)), label("b", K::symbolic, 2, 1, 1, "a", unit(0, 1))});
    bad({label("1", K::unramified_char, 1, 1, 0, "1"), label("one", K::unramified_char, 1, 1, 0, "one")});
    InertialLabel with_product = tau_self_dual();
    with_product.products["nowhere"] = "tau";
    bad({with_product});
    EXPECT_THROW(trivial_registry().at("tau"), Error);
}

TEST(Registry, ProductsOfUnramifiedCharactersFollowSatakeValues) {
    const LabelRegistry reg = mixed_registry();
    EXPECT_EQ(reg.product("i", "i"), "m1");
    EXPECT_EQ(reg.product("m1", "mi"), "i");
    EXPECT_EQ(reg.product("tau", "1"), "tau");
    EXPECT_THROW(reg.product("tau", "chi"), Error);
    EXPECT_THROW(reg.product("1", "tau"), Error);
}

TEST(Atoms, TwistExamples) {
    EXPECT_EQ(atom_twist(atom("tau"), HalfInt(1)), atom("tau", 2));
    EXPECT_EQ(atom_twist(atom("1", -1), HalfInt(1)), atom("1", 1));
    EXPECT_EQ(atom_twist(atom("tau", 3), HalfInt(0)), atom("tau", 3));
}

TEST(Atoms, LeqExamples) {
    EXPECT_TRUE(atom_leq(atom("1"), atom("1", 2)));
    EXPECT_FALSE(atom_leq(atom("1"), atom("1", 1)));
    EXPECT_FALSE(atom_leq(atom("tau"), atom("1")));
}

TEST(Dualize, Examples) {
    const LabelRegistry reg = LabelRegistry::load({tau_self_dual(), label("1", LabelKind::unramified_char, 1, 1, 0, "1")});
    EXPECT_EQ(dualize(atom("tau", 2), reg), atom("tau", -2));
    EXPECT_EQ(dualize(seg("1", -1, 2), reg), seg("1", -1, 2));
    for (int n = 1; n <= 8; ++n) EXPECT_EQ(dualize(steinberg(n), reg), steinberg(n));
}

TEST(Dualize, IsAnInvolutionPreservingDegree) {
    const LabelRegistry reg = mixed_registry();
    Random rnd(21);
    for (int i = 0; i < 300; ++i) {
        const ClassData c = rnd.class_data(reg, 4, 8);
        const ClassData d = dualize(c, reg);
        EXPECT_EQ(dualize(d, reg), c);
        EXPECT_EQ(degree(d, reg), degree(c, reg));
        EXPECT_EQ(dualize(involution_t(c), reg).form, Form::Z);
    }
}

TEST(Linked, Examples) {
    EXPECT_TRUE(linked(seg("1", 0), seg("1", 2)));
    EXPECT_FALSE(linked(seg("1", 0, 2), seg("1", 2)));
    EXPECT_FALSE(linked(seg("1", 0), seg("1", 4)));
    EXPECT_TRUE(precedes(seg("1", 0), seg("1", 2)));
    EXPECT_FALSE(precedes(seg("1", 2), seg("1", 0)));
    EXPECT_FALSE(precedes(seg("1", 0), seg("tau", 2)));
}

TEST(Linked, AgreesWithExplicitExponentSets) {
    const std::string labels[] = {"1", "tau"};
    std::vector<Segment> all;
    for (const auto& l : labels)
        for (int h = -6; h <= 6; ++h)
            for (int m = 1; m <= 4; ++m) all.push_back(seg(l, h, m));
    for (const auto& a : all)
        for (const auto& b : all) {
            ASSERT_EQ(linked(a, b), linked_oracle(a, b));
            ASSERT_EQ(linked(a, b), linked(b, a));
            ASSERT_FALSE(precedes(a, b) && precedes(b, a));
        }
}

TEST(StandardOrder, Examples) {
    EXPECT_EQ(standard_order({seg("1", 0), seg("1", 2)}), (std::vector<Segment>{seg("1", 2), seg("1", 0)}));
    EXPECT_EQ(standard_order({seg("tau", 0), seg("1", 0)}), (std::vector<Segment>{seg("1", 0), seg("tau", 0)}));
    EXPECT_EQ(standard_order({seg("1", 0), seg("tau", 0)}), (std::vector<Segment>{seg("1", 0), seg("tau", 0)}));
    EXPECT_EQ(standard_order({seg("tau", 3, 2)}), (std::vector<Segment>{seg("tau", 3, 2)}));
}

TEST(StandardOrder, IsAnAdmissiblePermutation) {
    const LabelRegistry reg = mixed_registry();
    Random rnd(3);
    for (int i = 0; i < 300; ++i) {
        std::vector<Segment> segs;
        const int count = rnd.uniform(1, 6);
        for (int k = 0; k < count; ++k) segs.push_back(seg(rnd.coin() ? "1" : "m1", rnd.uniform(-3, 3) * 2, rnd.uniform(1, 3)));
        const auto out = standard_order(segs);
        ASSERT_TRUE(std::is_permutation(out.begin(), out.end(), segs.begin()));
        ASSERT_TRUE(admissible(out));
        // brute force: some permutation is admissible, and the output is one of them
        auto perm = segs;
        std::sort(perm.begin(), perm.end());
        bool exists = false;
        do exists = exists || admissible(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        ASSERT_TRUE(exists);
        // the result does not depend on the input order
        std::shuffle(segs.begin(), segs.end(), rnd.engine());
        ASSERT_EQ(standard_order(segs), out);
    }
}

TEST(InvolutionT, Examples) {
    const ClassData q{Form::Q, {seg("1", 0, 2)}};
    const ClassData z{Form::Z, {seg("1", 0, 2)}};
    EXPECT_EQ(involution_t(q), z);
    EXPECT_EQ(involution_t(involution_t(q)), q);
    EXPECT_EQ(resolve_to_q(z), q_class({seg("1", 0), seg("1", 2)}));
    EXPECT_EQ(resolve_to_q(q), q);
    EXPECT_THROW(resolve_to_q(ClassData{Form::Z, {seg("1", 0), seg("1", 4)}}), Error);
}

TEST(Support, Examples) {
    EXPECT_EQ(supercuspidal_support(q_class({seg("1", 0, 2)})), (std::vector<Atom>{atom("1", 0), atom("1", 2)}));
    EXPECT_EQ(supercuspidal_support(q_class({seg("tau", 0)})), (std::vector<Atom>{atom("tau")}));
    EXPECT_EQ(supercuspidal_support(steinberg(2)), (std::vector<Atom>{atom("1", -1), atom("1", 1)}));
}

TEST(CentralCharacter, Examples) {
    const LabelRegistry reg = mixed_registry();
    const LocalFieldContext ctx = LocalFieldContext::create(3);
    const auto st = central_character(steinberg(2), reg);
    EXPECT_TRUE(equals_one(st.value_at_uniformizer, ctx));
    EXPECT_EQ(st.unit_classes, (std::vector<std::string>{"1", "1"}));
    EXPECT_TRUE(equals_one(central_character(q_class({seg("1", 0)}), reg).value_at_uniformizer, ctx));
    EXPECT_TRUE(same_value(central_character(q_class({seg("1", 2)}), reg).value_at_uniformizer, qp(-2), ctx));
    for (int n = 1; n <= 8; ++n) EXPECT_TRUE(equals_one(central_character(steinberg(n), reg).value_at_uniformizer, ctx));
}

TEST(CentralCharacter, TwistingByAPowerOfNormMultipliesByItsDeterminant) {
    const LabelRegistry reg = mixed_registry();
    const LocalFieldContext ctx = LocalFieldContext::create(5);
    Random rnd(8);
    for (int i = 0; i < 200; ++i) {
        const ClassData c = rnd.class_data(reg, 3, 6);
        const HalfInt y = rnd.half(4);
        ClassData twisted = c;
        for (auto& s : twisted.segs) s.start = atom_twist(s.start, y);
        const auto a = central_character(c, reg), b = central_character(twisted, reg);
        EXPECT_EQ(a.unit_classes, b.unit_classes);
        const ExactScalar det = ExactScalar::q_power(-(y * degree(c, reg)));
        EXPECT_TRUE(same_value(a.value_at_uniformizer * det, b.value_at_uniformizer, ctx));
    }
}

TEST(Predicates, Examples) {
    const LabelRegistry reg = mixed_registry();
    for (int n = 1; n <= 6; ++n) {
        const auto p = gl_predicates(steinberg(n), reg);
        EXPECT_TRUE(p.ess_square_integrable && p.square_integrable && p.tempered && p.generic);
        EXPECT_EQ(p.unramified, n == 1);
    }
    const auto lk = gl_predicates(q_class({seg("1", 0), seg("1", 2)}), reg);
    EXPECT_FALSE(lk.generic);
    EXPECT_TRUE(lk.iwahori_spherical);
    const auto sc = gl_predicates(q_class({seg("tau", 0)}), reg);
    EXPECT_TRUE(sc.supercuspidal);
    EXPECT_FALSE(sc.unramified);
    EXPECT_THROW(gl_predicates(ClassData{Form::Z, {seg("1", 0)}}, reg), Error);
}

TEST(Predicates, Implications) {
    const LabelRegistry reg = mixed_registry();
    Random rnd(17);
    for (int i = 0; i < 1000; ++i) {
        const auto p = gl_predicates(rnd.class_data(reg, 4, 8), reg);
        EXPECT_TRUE(!p.supercuspidal || p.ess_square_integrable);
        EXPECT_TRUE(!p.square_integrable || (p.tempered && p.ess_square_integrable));
        EXPECT_TRUE(!(p.ess_square_integrable || p.tempered) || p.generic);
        EXPECT_TRUE(!p.unramified || p.iwahori_spherical);
    }
}

TEST(ProductIrreducible, Examples) {
    EXPECT_TRUE(product_irreducible({seg("1", 0), seg("tau", 0)}));
    EXPECT_FALSE(product_irreducible({seg("1", 0), seg("1", 2)}));
    EXPECT_TRUE(product_irreducible({seg("1", 0)}));
}

TEST(LanglandsQuotient, Examples) {
    const auto pieces = langlands_quotient_data(q_class({seg("1", 2), seg("1", -2)}));
    ASSERT_EQ(pieces.size(), 2u);
    EXPECT_EQ(pieces[0].tempered, q_class({seg("1", 0)}));
    EXPECT_EQ(pieces[0].exponent, HalfInt(1));
    EXPECT_EQ(pieces[1].tempered, q_class({seg("1", 0)}));
    EXPECT_EQ(pieces[1].exponent, HalfInt(-1));

    const auto tempered = langlands_quotient_data(q_class({seg("1", 0), seg("tau", -1, 2)}));
    ASSERT_EQ(tempered.size(), 1u);
    EXPECT_EQ(tempered[0].exponent, HalfInt(0));

    const auto st = langlands_quotient_data(steinberg(2));
    ASSERT_EQ(st.size(), 1u);
    EXPECT_EQ(st[0].tempered, steinberg(2));
    EXPECT_EQ(st[0].exponent, HalfInt(0));
}

TEST(LanglandsQuotient, PiecesAreTemperedAndReassemble) {
    const LabelRegistry reg = mixed_registry();
    Random rnd(29);
    for (int i = 0; i < 300; ++i) {
        const ClassData c = rnd.class_data(reg, 4, 8);
        const auto pieces = langlands_quotient_data(c);
        ClassData back{Form::Q, {}};
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            EXPECT_TRUE(gl_predicates(pieces[k].tempered, reg).tempered);
            if (k > 0) {
                EXPECT_GT(pieces[k - 1].exponent, pieces[k].exponent);
            }
            for (const auto& s : pieces[k].tempered.segs) back.segs.push_back({atom_twist(s.start, pieces[k].exponent), s.m});
        }
        EXPECT_EQ(back, c);
    }
}
