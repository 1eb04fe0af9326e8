#include "fpcore/errors.hpp"
#include "fpcore/gen_inverse.hpp"
#include "fpcore/orders.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace fpcore;

namespace {

Scalar q(long p, long d = 1) { return Scalar(mpq_class(p, d)); }

Operator op(std::initializer_list<std::initializer_list<long>> rows) {
    return Operator::finite(Matrix::from_rows(rows));
}

Operator diag_q(std::initializer_list<Scalar> d) {
    return Operator::finite(Matrix::diagonal(std::vector<Scalar>(d), Field::Real));
}

const Operator kC = op({{1, 1}, {0, 0}});

}  // namespace

TEST_CASE("Drazin inverse examples") {
    CHECK(drazin(op({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})).is_zero());
    CHECK(drazin(op({{1, 0}, {0, 1}})) == op({{1, 0}, {0, 1}}));
    CHECK(drazin(counterexample_a()) == diag_q({q(1, 29), q(1, 33), q(0), q(0), q(0)}));
    CHECK(oracle::equal(oracle::drazin(oracle::from(counterexample_b().block())),
                        drazin(counterexample_b()).block()));
}

TEST_CASE("group inverse examples") {
    CHECK_FALSE(group_inverse(counterexample_a()).has_value());
    auto g = group_inverse(op({{29, 0}, {0, 33}}));
    REQUIRE(g);
    CHECK(*g == diag_q({q(1, 29), q(1, 33)}));
    auto gc = group_inverse(kC);
    REQUIRE(gc);
    CHECK(*gc == kC);
    CHECK(check_inverse_class(kC, *gc, InverseClass::Group3).all());
}

TEST_CASE("Moore-Penrose examples") {
    Operator ones = op({{1, 1}, {1, 1}});
    Operator quarter = Operator::finite(Matrix::from_rows({{1, 1}, {1, 1}}));
    quarter = Operator::finite(q(1, 4) * quarter.block());
    CHECK(moore_penrose(ones) == quarter);
    CHECK(check_inverse_class(ones, quarter, InverseClass::Penrose4).all());
    CHECK(moore_penrose(op({{1, 0}, {0, 1}})) == op({{1, 0}, {0, 1}}));

    Matrix expected(2, 2);
    expected(0, 0) = q(1, 2);
    expected(1, 0) = q(1, 2);
    CHECK(moore_penrose(kC).block() == expected);
    CHECK(oracle::equal(oracle::moore_penrose(oracle::from(kC.block())), expected));
}

TEST_CASE("core inverse examples") {
    auto c = core_inverse(kC);
    REQUIRE(c);
    CHECK(*c == op({{1, 0}, {0, 0}}));
    CHECK(oracle::equal(oracle::core(oracle::from(kC.block())), c->block()));

    auto z = core_inverse(Operator::zero(Ambient::finite(3), Field::Real));
    REQUIRE(z);
    CHECK(z->is_zero());
    CHECK_FALSE(core_inverse(counterexample_a()).has_value());
}

TEST_CASE("core-dagger examples") {
    CHECK(core_dagger(op({{1, 0}, {0, 1}})) == op({{1, 0}, {0, 1}}));
    CHECK(core_dagger(kC) == op({{1, 0}, {0, 0}}));
    CHECK(core_dagger(kC) == moore_penrose(*core_inverse(kC)));
    CHECK(core_dagger(op({{2, 0}, {0, 0}})) == op({{2, 0}, {0, 0}}));
    CHECK_THROWS_AS(core_dagger(counterexample_a()), NoCoreInverse);
}

TEST_CASE("core inverse of the Moore-Penrose inverse") {
    CHECK(core_of_mp(op({{1, 0}, {0, 1}})) == op({{1, 0}, {0, 1}}));
    CHECK(core_of_mp(op({{2, 0}, {0, 0}})) == op({{2, 0}, {0, 0}}));

    const Operator mp = moore_penrose(kC);
    const oracle::Mat mp_ref = oracle::moore_penrose(oracle::from(kC.block()));
    const oracle::Mat expected = oracle::core(mp_ref);
    CHECK(oracle::equal(expected, core_of_mp(kC).block()));
    CHECK(core_of_mp(kC) == *group_inverse(mp) * image_projector(mp));
    CHECK_THROWS_AS(core_of_mp(counterexample_b()), NoCoreInverse);
}

TEST_CASE("EP operators") {
    CHECK(is_ep(op({{2, 1}, {1, 3}})));
    CHECK_FALSE(is_ep(kC));
    CHECK(is_ep(Operator::zero(Ambient::finite(2), Field::Real)));
}

TEST_CASE("inverse class checks") {
    Operator a = counterexample_a();
    CHECK(check_inverse_class(a, drazin(a), InverseClass::Drazin3).all());

    ConditionReport core = check_inverse_class(kC, op({{1, 0}, {0, 0}}), InverseClass::Core3);
    CHECK(core.all());
    CHECK(core.conditions.size() == 3);

    CHECK(check_inverse_class(kC, moore_penrose(kC), InverseClass::Penrose4).all());
    ConditionReport not_mp = check_inverse_class(kC, *core_inverse(kC), InverseClass::Penrose4);
    CHECK(not_mp.held("AXA = A"));
    CHECK(not_mp.held("XAX = X"));
    CHECK(not_mp.held("(AX)* = AX"));
    CHECK_FALSE(not_mp.held("(XA)* = XA"));
    CHECK_THROWS_AS(not_mp.held("no such condition"), Error);
}

TEST_CASE("inverses on a countable ambient act on the block") {
    Operator fin = op({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}});
    Operator inf = Operator::countable(fin.block());
    CHECK(drazin(inf).block() == drazin(fin).block());
    CHECK(moore_penrose(inf).block() == moore_penrose(fin).block());
    CHECK(drazin(inf).ambient() == inf.ambient());

    // An automorphism of the block still kills the tail, so its index is 1.
    Operator inv = Operator::countable(Matrix::from_rows({{2, 1}, {1, 1}}));
    CHECK(index(inv) == 1);
    auto c = core_inverse(inv);
    REQUIRE(c);
    CHECK(c->block() == inverse(inv.block()));
}

TEST_CASE("names of inverse kinds") {
    CHECK(to_string(InverseKind::CoreDagger) == "core-dagger");
    CHECK(to_string(InverseKind::MoorePenrose) == "mp");
}
