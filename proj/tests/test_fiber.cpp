#include "cgt/fiber.hpp"
#include "cgt/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace cgt;
using testutil::Rng;
using testutil::random_word;
using testutil::random_symbols;

namespace {

Presentation twelve_relator_pres() {
    std::vector<Word> rels;
    for (int i = 1; i <= 12; ++i)
        rels.push_back(Word::parse("a b^" + std::to_string(i) + " a b", 2));
    return Presentation({"x1", "x2"}, rels);
}

}  // namespace

TEST_CASE("generator counts follow the k+2 rule") {
    CHECK(mihailova_generators(twelve_relator_pres()).p() == 14);
    CHECK(mihailova_generators(Presentation({"x1", "x2"}, {})).p() == 2);

    auto s3 = make_oracle("s3");
    MihailovaGens g = mihailova_generators(s3->presentation());
    REQUIRE(g.p() == 5);
    CHECK(g.gens[0] == PairWord(Word::parse("a", 2), Word::parse("a", 2)));
    CHECK(g.gens[1] == PairWord(Word::parse("b", 2), Word::parse("b", 2)));
    CHECK(g.gens[2] == PairWord(Word(2), Word::parse("a a", 2)));
    CHECK(g.gens[3] == PairWord(Word(2), Word::parse("b b b", 2)));
    CHECK(g.gens[4] == PairWord(Word(2), Word::parse("a b a b", 2)));
    CHECK(g.names() == std::vector<std::string>{"h1", "h2", "h3", "h4", "h5"});

    CHECK_THROWS_AS(mihailova_generators(Presentation({"x1"}, {})), std::invalid_argument);
}

TEST_CASE("generators and their products lie in L") {
    for (const char* name : {"s3", "zsq"}) {
        auto o = make_oracle(name);
        MihailovaGens g = mihailova_generators(o->presentation());
        for (const PairWord& h : g.gens) CHECK(member_L(*o, h));

        Rng rng(301);
        for (int i = 0; i < 50; ++i)
            CHECK(member_L(*o, eval_symbols(g, random_symbols(rng, g.p(), 10))));
    }
}

TEST_CASE("membership on the fixtures") {
    auto o = make_oracle("s3");
    Rng rng(302);
    for (int i = 0; i < 50; ++i) {
        Word u = random_word(rng, 2, 10);
        CHECK(member_L(*o, PairWord(u, u)));
    }
    CHECK_FALSE(member_L(*o, PairWord(Word::parse("a", 2), Word::parse("b", 2))));
    CHECK(member_L(*o, PairWord(Word::parse("a a", 2), Word(2))));
}

TEST_CASE("symbol words parse and print") {
    std::vector<int> syms{1, -4, 2};
    CHECK(symbols_str(syms) == "h1 h4^-1 h2");
    CHECK(parse_symbols("h1 h4^-1 h2", 5) == syms);
    CHECK(parse_symbols("h1 h1 h1^-1", 5) == std::vector<int>{1});  // free reduction
    CHECK(parse_symbols("h2^3", 5) == std::vector<int>({2, 2, 2}));
    CHECK(parse_symbols("1", 5).empty());
    CHECK(symbols_str({}) == "1");
    CHECK_THROWS_AS(parse_symbols("h6", 5), std::invalid_argument);
    CHECK_THROWS_AS(parse_symbols("x1", 5), std::invalid_argument);

    Rng rng(303);
    for (int i = 0; i < 50; ++i) {
        auto s = random_symbols(rng, 5, 12);
        CHECK(parse_symbols(symbols_str(s), 5) == s);
    }
}

TEST_CASE("express recovers witnesses") {
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());

    auto r = express_in_generators(g, *o, g.gens[0]);
    REQUIRE(r.symbols.has_value());
    CHECK(*r.symbols == std::vector<int>{1});

    // conjugated relator: (1, x1 x2^3 x1^-1) = (x1,x1)(1,x2^3)(x1,x1)^-1
    PairWord conj(Word(2), Word::parse("a b^3 A", 2));
    auto rc = express_in_generators(g, *o, conj);
    REQUIRE(rc.symbols.has_value());
    CHECK(symbols_str(*rc.symbols) == "h1 h4 h1^-1");

    // round trip on random short symbol words
    Rng rng(304);
    for (int i = 0; i < 25; ++i) {
        auto syms = random_symbols(rng, g.p(), 1 + int(rng() % 6));
        PairWord target = eval_symbols(g, syms);
        auto res = express_in_generators(g, *o, target);
        REQUIRE(res.symbols.has_value());
        CHECK(eval_symbols(g, *res.symbols) == target);
        CHECK(res.symbols->size() <= syms.size());  // search returns a shortest witness
    }

    CHECK_THROWS_AS(
        express_in_generators(g, *o, PairWord(Word::parse("a", 2), Word::parse("b", 2))),
        NotAMember);

    // identity needs the empty witness
    auto rid = express_in_generators(g, *o, PairWord());
    REQUIRE(rid.symbols.has_value());
    CHECK(rid.symbols->empty());
}

TEST_CASE("express is exhaustive within its bound") {
    // membership holds but every witness is longer than the bound:
    // the search reports a miss instead of an error
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());
    PairWord deep = eval_symbols(g, {1, 2, 1, 2, 1, 2, 3, -2, -1, -2, -1, -2, -1});
    auto res = express_search(g, deep, 2);
    CHECK_FALSE(res.has_value());
}

TEST_CASE("lemma 1 conjugation reports") {
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());

    auto id = lemma1_report(g, *o, PairWord());
    CHECK(id.forward_all());
    CHECK(id.backward_all());
    CHECK(id.central_witness);

    auto diag = lemma1_report(g, *o, PairWord(Word::parse("a", 2), Word::parse("a", 2)));
    CHECK(diag.forward_all());
    CHECK(diag.backward_all());
    CHECK(diag.central_witness);

    auto bad = lemma1_report(g, *o, PairWord(Word::parse("a", 2), Word::parse("b", 2)));
    CHECK_FALSE(bad.central_witness);
    CHECK_FALSE(bad.forward_all());

    // forward containment forces backward containment and a central witness
    Rng rng(305);
    for (int i = 0; i < 100; ++i) {
        PairWord a = testutil::random_pair(rng, 8);
        auto rep = lemma1_report(g, *o, a);
        if (rep.forward_all()) {
            CHECK(rep.backward_all());
            CHECK(rep.central_witness);
        }
    }

    // elements of L conjugate L into itself, both ways
    Rng rng2(306);
    for (int i = 0; i < 30; ++i) {
        PairWord a = eval_symbols(g, random_symbols(rng2, g.p(), 6));
        auto rep = lemma1_report(g, *o, a);
        CHECK(rep.forward_all());
        CHECK(rep.backward_all());
        CHECK(rep.central_witness);
    }
}

TEST_CASE("lemma 1 on the abelian fixture") {
    // Z^2 has full center, so every conjugation keeps L invariant
    auto o = make_oracle("zsq");
    MihailovaGens g = mihailova_generators(o->presentation());
    Rng rng(307);
    for (int i = 0; i < 50; ++i) {
        auto rep = lemma1_report(g, *o, testutil::random_pair(rng, 8));
        CHECK(rep.forward_all());
        CHECK(rep.backward_all());
        CHECK(rep.central_witness);
    }
}
