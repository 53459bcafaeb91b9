#include <doctest.h>

#include <string>
#include <vector>

#include "lattica/constructions.hpp"
#include "lattica/dot.hpp"
#include "lattica/dsl.hpp"
#include "lattica/json_io.hpp"
#include "lattica/lattice.hpp"

using namespace lattica;

TEST_CASE("expressions build the documented structures") {
    CHECK(lattice_of(eval_text("chain(4)")) == chain(4));
    CHECK(lattice_of(eval_text("osum(chain(2), chain(2))")) == chain(3));
    CHECK(!has_involution(eval_text("osum(bool(1), bool(1))")));
    CHECK(lattice_of(eval_text("hsum(chain(3), chain(3), chain(3))")) == m_lattice(3));

    Structure b2 = eval_text("bool(2)");
    REQUIRE(has_involution(b2));
    CHECK(*involution_of(b2) == std::vector<int>{3, 2, 1, 0});

    Structure s = eval_text(" sandwich( chain(2), unit ) ");
    CHECK(lattice_of(s) == chain(3));
    CHECK(*involution_of(s) == std::vector<int>{2, 1, 0});

    Structure t = eval_text("tower(m(3), 2, plain)");
    CHECK(structure_size(t) == 13);
    CHECK(!has_involution(t));

    Structure k = eval_text("step(bool(1), kleene)");
    CHECK(structure_size(k) == 6);
    CHECK(*involution_of(k) == std::vector<int>{1, 0, 3, 2, 5, 4});

    Structure a = eval_text("aol(bool(2))");
    CHECK(weak_of(a) != nullptr);
    // dual keeps the involution but drops the weak complement
    Structure d = eval_text("dual(aol(bool(2)))");
    CHECK(has_involution(d));
    CHECK(weak_of(d) == nullptr);

    CHECK(structure_size(eval_text("unit")) == 1);
}

TEST_CASE("parse failures report position and expectation") {
    auto expect_syntax = [](const std::string& text, int pos, const std::string& expected) {
        try {
            parse_expr(text);
            FAIL("no error from: " << text);
        } catch (const SyntaxError& e) {
            CHECK(e.pos == pos);
            CHECK(e.expected == expected);
        }
    };
    expect_syntax("", 0, "a construction name or keyword");
    expect_syntax("7", 0, "a construction name or keyword");
    expect_syntax("chain(", 6, "a structure expression or a number");
    expect_syntax("chain(3", 7, "',' or ')'");
    expect_syntax("chain(3) x", 9, "end of input");
    expect_syntax("chain@", 5, "a name, a number, '(', ')' or ','");
    expect_syntax("chain(1000001)", 6, "a smaller number");
}

TEST_CASE("evaluation failures carry the offending offset") {
    auto expect_eval = [](const std::string& text, const std::string& fragment) {
        try {
            eval_text(text);
            FAIL("no error from: " << text);
        } catch (const EvalError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_eval("chain(0)", "chain: chain needs at least one element");
    expect_eval("dual(3)", "a number cannot stand alone as a structure");
    expect_eval("foo(1)", "unknown construction 'foo'");
    expect_eval("foo", "unknown keyword 'foo'");
    expect_eval("chain(2, 3)", "wrong number of arguments");
    expect_eval("chain(x)", "chain: argument 1 must be a number");
    expect_eval("sandwich(chain(2), chain(3))", "argument 2 needs an involution");
    expect_eval("aol(m(3))", "argument 1 needs an involution");
    expect_eval("step(chain(2), kleene)", "need an involution on the input");
    expect_eval("step(bool(1), crooked)", "must be one of kleene, double3, plain");
    expect_eval("tower(chain(2), 300, plain)", "step count too large");

    try {
        eval_text("dual(3)");
    } catch (const EvalError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("JSON round-trips byte for byte") {
    FiniteLattice labeled = chain(2);
    labeled.set_labels({"lo", "hi"});
    for (const Structure& s :
         {Structure{chain(4)}, Structure{boolean_algebra(2)},
          Structure{aol_sandwich(boolean_algebra(2))}, Structure{labeled}}) {
        std::string text = to_json(s);
        CHECK(to_json(load_json(text)) == text);
    }

    Structure back = load_json(to_json(Structure{labeled}));
    CHECK(lattice_of(back).labels() == std::vector<std::string>{"lo", "hi"});

    std::string aol_text = to_json(Structure{aol_sandwich(boolean_algebra(2))});
    CHECK(aol_text.find("\"brouwer\"") != std::string::npos);
    CHECK(aol_text.back() == '\n');
}

TEST_CASE("JSON loading rejects malformed documents") {
    CHECK_THROWS_AS(load_json("["), JsonError);
    CHECK_THROWS_AS(load_json("3"), JsonError);
    CHECK_THROWS_AS(load_json(R"({"covers": []})"), JsonError);
    CHECK_THROWS_AS(load_json(R"({"n": 2, "covers": [[0, 1]], "color": 3})"), JsonError);
    CHECK_THROWS_AS(load_json(R"({"n": 2, "covers": [[0]]})"), JsonError);
    CHECK_THROWS_AS(load_json(R"({"n": 2, "covers": [[0, 1]], "brouwer": [1, 0]})"), JsonError);

    // structural validation still runs on well-formed documents
    CHECK_THROWS_AS(load_json(R"({"n": 2, "covers": []})"), UnboundedError);
    CHECK_THROWS_AS(load_json(R"({"n": 2, "covers": [[0, 1]], "involution": [0, 1]})"),
                    NotOrderReversingError);
}

TEST_CASE("DOT output is stable") {
    CHECK(to_dot(Structure{chain(3)}) ==
          "digraph lattice {\n"
          "  rankdir=BT;\n"
          "  node [shape=circle];\n"
          "  n0 [label=\"0\"];\n"
          "  n1 [label=\"1\"];\n"
          "  n2 [label=\"2\"];\n"
          "  n0 -> n1;\n"
          "  n1 -> n2;\n"
          "}\n");

    // involutions draw one dashed edge per two-element orbit, labels replace indices
    FiniteLattice L = chain(3);
    L.set_labels({"bot", "mid", "top"});
    Structure s{validate_involution(std::move(L), {2, 1, 0})};
    CHECK(to_dot(s) ==
          "digraph lattice {\n"
          "  rankdir=BT;\n"
          "  node [shape=circle];\n"
          "  n0 [label=\"bot\"];\n"
          "  n1 [label=\"mid\"];\n"
          "  n2 [label=\"top\"];\n"
          "  n0 -> n1;\n"
          "  n1 -> n2;\n"
          "  n0 -> n2 [style=dashed, dir=none, constraint=false];\n"
          "}\n");
}
