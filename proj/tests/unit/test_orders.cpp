#include "fpcore/errors.hpp"
#include "fpcore/orders.hpp"

#include <doctest.h>

using namespace fpcore;

namespace {

Operator diag(std::initializer_list<long> d) {
    std::vector<Scalar> v;
    for (long x : d) v.emplace_back(x);
    return Operator::finite(Matrix::diagonal(v, Field::Real));
}

Operator jordan3() { return Operator::finite(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})); }

}  // namespace

TEST_CASE("space pre-order") {
    Operator a = Operator::finite(Matrix::from_rows({{1, 2}, {0, 0}}));
    CHECK(space_leq(a, a).verdict);
    CHECK(space_leq(diag({1, 0, 0}), diag({1, 1, 0})).verdict);
    OrderReport r = space_leq(diag({1, 1, 0}), diag({1, 0, 0}));
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.witnesses[0].held);
}

TEST_CASE("core partial order examples") {
    Operator c = Operator::finite(Matrix::from_rows({{1, 1}, {0, 0}}));
    CHECK(core_leq(c, c).verdict);

    OrderReport up = core_leq(diag({1, 0, 0}), diag({1, 1, 0}));
    CHECK(up.verdict);
    CHECK(up.characterizations_agree);
    CHECK(up.witnesses.size() == 6);

    OrderReport down = core_leq(diag({1, 1, 0}), diag({1, 0, 0}));
    CHECK_FALSE(down.verdict);
    CHECK_FALSE(down.witnesses[0].held);
    CHECK(down.characterizations_agree);

    CHECK_THROWS_AS(core_leq(counterexample_a(), counterexample_a()), IndexTooLarge);
    CHECK_THROWS_AS(core_leq(diag({1, 0}), diag({1, 0, 0})), AmbientMismatch);
}

TEST_CASE("gamma") {
    CHECK(gamma(counterexample_a()) == diag({29, 33, 0, 0, 0}));
    Operator c = Operator::finite(Matrix::from_rows({{1, 1}, {0, 0}}));
    CHECK(gamma(c) == c);
    CHECK(gamma(jordan3()).is_zero());
}

TEST_CASE("general core pre-order is not antisymmetric") {
    Operator a = counterexample_a();
    Operator b = counterexample_b();
    CHECK(general_core_leq(a, b).verdict);
    CHECK(general_core_leq(b, a).verdict);
    CHECK_FALSE(a == b);
    CHECK(general_core_leq(a, a).verdict);
    Operator psi = Operator::finite(Matrix::from_rows({{1, 2, 3}, {0, 4, 5}, {6, 0, 0}}));
    CHECK(general_core_leq(jordan3(), psi).verdict);
}

TEST_CASE("generate_above") {
    Operator id = Operator::finite(Matrix::identity(3));
    CHECK(generate_above(id, 5) == id);

    Operator zero = Operator::zero(Ambient::finite(3), Field::Real);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Operator psi = generate_above(zero, seed);
        CHECK(index(psi) <= 1);
        CHECK(core_leq(zero, psi).verdict);
    }

    Operator e1 = diag({1, 0, 0});
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Operator psi = generate_above(e1, seed);
        const Matrix& m = psi.block();
        CHECK(m(0, 0) == Scalar(1L));
        CHECK(m(1, 0).is_zero());
        CHECK(m(2, 0).is_zero());
        CHECK(m(0, 1).is_zero());
        CHECK(m(0, 2).is_zero());
        CHECK(core_leq(e1, psi).verdict);
    }
    CHECK(generate_above(e1, 11) == generate_above(e1, 11));
    CHECK_THROWS_AS(generate_above(counterexample_a(), 1), IndexTooLarge);
}

TEST_CASE("order axioms on a small hand-built set") {
    std::vector<Operator> sample{diag({0, 0, 0}), diag({1, 0, 0}), diag({1, 1, 0}),
                                 diag({1, 1, 1}), diag({2, 0, 0})};
    std::vector<Chain> chains{{diag({0, 0, 0}), diag({1, 0, 0}), diag({1, 0, 3})}};
    AxiomReport core = verify_order_axioms(Relation::Core, sample, chains);
    CHECK(core.reflexive);
    CHECK(core.antisymmetric);
    CHECK(core.transitive);
    CHECK(core.reflexivity_checks == 8);
    CHECK(core.transitivity_checks > 0);
    CHECK_FALSE(core.counterexample_confirmed.has_value());

    AxiomReport space = verify_order_axioms(Relation::Space, sample, {});
    CHECK(space.reflexive);
    CHECK(space.transitive);
    // diag(1,0,0) and diag(2,0,0) have the same image and kernel.
    CHECK_FALSE(space.antisymmetric);
}

TEST_CASE("general core axioms flag the 5x5 pair") {
    AxiomReport r = verify_order_axioms(Relation::GeneralCore, {counterexample_a(), counterexample_b()}, {});
    CHECK(r.reflexive);
    CHECK(r.transitive);
    CHECK_FALSE(r.antisymmetric);
    REQUIRE(r.antisymmetry_failures.size() == 1);
    CHECK(r.antisymmetry_failures[0] == std::pair<std::size_t, std::size_t>{0, 1});
    REQUIRE(r.counterexample_confirmed.has_value());
    CHECK(*r.counterexample_confirmed);
}

TEST_CASE("Hasse diagrams") {
    std::vector<NamedOperator> set{{"zero", diag({0, 0})}, {"e1", diag({1, 0})}, {"id", diag({1, 1})}};
    HasseDiagram h = hasse(set, Relation::Core);
    CHECK(h.dot ==
          "digraph hasse {\n"
          "  \"zero\";\n"
          "  \"e1\";\n"
          "  \"id\";\n"
          "  \"zero\" -> \"e1\";\n"
          "  \"e1\" -> \"id\";\n"
          "}\n");
    CHECK(h.equivalent_pairs.empty());

    HasseDiagram one = hasse({{"only", diag({1, 0})}}, Relation::Core);
    CHECK(one.dot == "digraph hasse {\n  \"only\";\n}\n");

    HasseDiagram ab = hasse({{"A", counterexample_a()}, {"B", counterexample_b()}}, Relation::GeneralCore);
    CHECK(ab.dot == "digraph hasse {\n  \"A\";\n  \"B\";\n}\n");
    REQUIRE(ab.equivalent_pairs.size() == 1);
    CHECK(ab.equivalent_pairs[0] == std::pair<std::string, std::string>{"A", "B"});

    HasseDiagram quoted = hasse({{"a\"b", diag({1})}}, Relation::Core);
    CHECK(quoted.dot == "digraph hasse {\n  \"a\\\"b\";\n}\n");
}

TEST_CASE("order_leq dispatches on the relation") {
    Operator a = diag({1, 0, 0});
    Operator b = diag({1, 1, 0});
    CHECK(order_leq(Relation::Space, a, b).relation == Relation::Space);
    CHECK(order_leq(Relation::Core, a, b).verdict);
    CHECK(order_leq(Relation::GeneralCore, a, b).relation == Relation::GeneralCore);
    CHECK(to_string(Relation::GeneralCore) == "general-core");
}
