#include "fpcore/errors.hpp"
#include "fpcore/operator_file.hpp"
#include "fpcore/orders.hpp"
#include "fpcore/random.hpp"

#include <doctest.h>

#include <string>

using namespace fpcore;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_operator_file(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse a sparse rational operator") {
    OperatorFile f = parse_operator_file(R"({
        "name": "A",
        "field": "rational",
        "ambient": {"kind": "finite", "dim": 5},
        "entries": [[1, 1, 29], [2, 2, "33"], [5, 4, "2/2"]]
    })");
    CHECK(f.name == "A");
    CHECK(f.op == counterexample_a());
}

TEST_CASE("parse a Gaussian operator on a countable ambient") {
    OperatorFile f = parse_operator_file(R"({
        "field": "gaussian",
        "ambient": {"kind": "countable", "support": 2},
        "entries": [[1, 2, {"re": "1/2", "im": -3}], [2, 1, 4]]
    })");
    CHECK(f.name.empty());
    CHECK(f.op.ambient() == Ambient::countable(2));
    CHECK(f.op.block()(0, 1) == Scalar(mpq_class(1, 2), mpq_class(-3)));
    CHECK(f.op.block()(1, 0) == Scalar(mpq_class(4), mpq_class(0)));
}

TEST_CASE("format is canonical and round-trips") {
    std::string text = format_operator_file(counterexample_b(), "B");
    CHECK(text ==
          "{\n"
          "  \"name\": \"B\",\n"
          "  \"field\": \"rational\",\n"
          "  \"ambient\": {\"kind\":\"finite\",\"dim\":5},\n"
          "  \"entries\": [\n"
          "    [1,1,29],\n"
          "    [2,2,33],\n"
          "    [4,3,1],\n"
          "    [5,4,1]\n"
          "  ]\n"
          "}\n");
    OperatorFile back = parse_operator_file(text);
    CHECK(back.op == counterexample_b());
    CHECK(back.name == "B");
    CHECK(format_operator_file(back.op, back.name) == text);

    std::string empty = format_operator_file(Operator::zero(Ambient::countable(0), Field::Real));
    CHECK(parse_operator_file(empty).op == Operator::zero(Ambient::countable(0), Field::Real));
}

TEST_CASE("round-trip on random operators of both fields") {
    Rng rng(99);
    for (int k = 0; k < 40; ++k) {
        Field f = k % 2 ? Field::Complex : Field::Real;
        Operator op = random_any_index(4, f, rng);
        if (k % 3 == 0) op = Operator::countable(op.block());
        // Rational entries with large denominators must survive as strings.
        Operator scaled(Scalar(mpq_class(1, 1000003), f) * op.block(), op.ambient());
        for (const Operator& x : {op, scaled}) {
            OperatorFile back = parse_operator_file(format_operator_file(x, "r"));
            CHECK(back.op == x);
        }
    }
}

TEST_CASE("syntax errors carry line and column") {
    std::string msg = error_of("{\n  \"field\": \"rational\",\n  \"ambient\": {]\n}");
    CHECK(msg.find("line 3, column 15") != std::string::npos);
    CHECK(error_of("").find("line 1, column 1") != std::string::npos);
}

TEST_CASE("semantic errors name the offending value") {
    const std::string head = R"({"field": "rational", "ambient": {"kind": "finite", "dim": 2}, )";
    CHECK(error_of(head + R"("entries": [[1, 3, 1]]})").find("/entries/0/1") != std::string::npos);
    CHECK(error_of(head + R"("entries": [[0, 1, 1]]})").find("outside 1..2") != std::string::npos);
    CHECK(error_of(head + R"("entries": [[1, 1, "1/0"]]})").find("/entries/0/2") != std::string::npos);
    CHECK(error_of(head + R"("entries": [[1, 1, {"re": 1}]]})").find("gaussian") != std::string::npos);
    CHECK(error_of(head + R"("entries": [[1, 1, 1.5]]})").find("/entries/0/2") != std::string::npos);
    CHECK(error_of(head + R"("entries": [[1, 1]]})").find("[row, col, scalar]") != std::string::npos);
    CHECK(error_of(head + R"("extra": 1})").find("/extra") != std::string::npos);
    CHECK(error_of(R"({"field": "real", "ambient": {"kind": "finite", "dim": 1}})").find("/field") !=
          std::string::npos);
    CHECK(error_of(R"({"field": "rational", "ambient": {"kind": "finite"}})").find("dim") !=
          std::string::npos);
    CHECK(error_of(R"({"field": "rational", "ambient": {"kind": "weird", "dim": 1}})")
              .find("/ambient/kind") != std::string::npos);
    CHECK(error_of("[1, 2]").find("JSON object") != std::string::npos);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(load_operator_file("/nonexistent/op.json"), ParseError);
}
