#include "cgt/fiber.hpp"
#include "cgt/matrep.hpp"
#include "cgt/oracle.hpp"
#include "cgt/planes.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace cgt;
using testutil::Rng;
using testutil::random_word;

namespace {

QVec4 qv(int a, int b, int c, int d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

std::vector<Mat4> delta_images() {
    return {blockdiag(sanov_A(), sanov_A()), blockdiag(sanov_B(), sanov_B())};
}

std::vector<Mat4> fixture_images() {
    std::vector<Mat4> ms;
    for (const auto& g : mihailova_generators(make_oracle("s3")->presentation()).gens)
        ms.push_back(eval4(g));
    return ms;
}

}  // namespace

TEST_CASE("the planes H_lambda") {
    CHECK(plane_H(LambdaQ::of(0)) == PlaneQ(qv(1, 0, 0, 0), qv(0, 1, 0, 0)));
    CHECK(plane_H(LambdaQ::infinity()) == PlaneQ(qv(0, 0, 1, 0), qv(0, 0, 0, 1)));
    CHECK(plane_H(LambdaQ::of(1)) == PlaneQ(qv(1, 0, 1, 0), qv(0, 1, 0, 1)));
    CHECK(plane_H(LambdaQ::parse("-3/2")) ==
          PlaneQ(qv(2, 0, -3, 0), qv(0, 2, 0, -3)));
    CHECK(LambdaQ::parse("inf").infinite);
    CHECK(LambdaQ::parse("2/4").value == Rational(1, 2));
    CHECK_THROWS_AS(LambdaQ::parse("x"), std::invalid_argument);

    // canonical form ignores the choice of basis
    CHECK(PlaneQ(qv(1, 1, 0, 0), qv(1, -1, 0, 0)) == plane_H(LambdaQ::of(0)));
    CHECK_THROWS_AS(PlaneQ(qv(1, 1, 0, 0), qv(2, 2, 0, 0)), std::invalid_argument);

    PlaneQ h2 = plane_H(LambdaQ::of(Rational(1, 2)));
    CHECK(PlaneQ::from_json(h2.to_json()) == h2);
}

TEST_CASE("invariance of planes") {
    CHECK(is_invariant(plane_H(LambdaQ::of(0)), fixture_images()));
    CHECK(is_invariant(plane_H(LambdaQ::of(1)), delta_images()));
    CHECK_FALSE(is_invariant(plane_H(LambdaQ::of(1)),
                             {eval4(PairWord(Word::parse("a", 2), Word(2)))}));

    // image_plane respects composition
    Rng rng(501);
    for (int i = 0; i < 50; ++i) {
        PairWord p = testutil::random_pair(rng, 6), q = testutil::random_pair(rng, 6);
        PlaneQ h = plane_H(LambdaQ::of(2));
        CHECK(image_plane(eval4(p * q), h) ==
              image_plane(eval4(p), image_plane(eval4(q), h)));
    }
}

TEST_CASE("stabilizer law: H_lambda is stabilized exactly by the diagonal") {
    Rng rng(502);
    for (const char* lam : {"1", "-1", "2", "1/2"}) {
        PlaneQ h = plane_H(LambdaQ::parse(lam));
        for (int i = 0; i < 25; ++i) {
            Word u = random_word(rng, 2, 1 + int(rng() % 10));
            Word v = random_word(rng, 2, 1 + int(rng() % 10));
            CHECK(is_invariant(h, {eval4(PairWord(u, u))}));
            CHECK(is_invariant(h, {eval4(PairWord(u, v))}) == (u == v));
        }
    }
}

TEST_CASE("commutant dimensions") {
    CHECK(commutant({Mat4::identity()}).dim() == 16);
    CHECK(commutant(delta_images()).dim() == 4);
    CHECK(commutant(fixture_images()).dim() == 2);

    // scalar-block shape holds for Delta
    auto cd = commutant(delta_images());
    for (const auto& x : cd.basis) CHECK(is_scalar_block(x));

    // the fixture set contains Delta, so its commutant sits inside Delta's
    auto cf = commutant(fixture_images());
    for (const auto& x : cf.basis) CHECK(in_span(cd.basis, x));
}

TEST_CASE("invariant plane classification") {
    PlanesReport full = invariant_planes_report(delta_images());
    CHECK(full.commutant_dim == 4);
    CHECK(full.full_lambda_family);
    CHECK(full.planes.empty());

    // adding any relator pair (1, r) with a nontrivial matrix collapses the
    // family to the two coordinate planes
    auto ms = delta_images();
    ms.push_back(eval4(PairWord(Word(2), Word::parse("a a", 2))));
    PlanesReport two = invariant_planes_report(ms);
    CHECK(two.commutant_dim == 2);
    CHECK_FALSE(two.full_lambda_family);
    REQUIRE(two.planes.size() == 2);
    CHECK(two.planes[0] == plane_H(LambdaQ::of(0)));
    CHECK(two.planes[1] == plane_H(LambdaQ::infinity()));

    PlanesReport fixture = invariant_planes_report(fixture_images());
    CHECK(fixture.commutant_dim == 2);
    REQUIRE(fixture.planes.size() == 2);

    // both reported planes are actually invariant
    for (const auto& p : fixture.planes) CHECK(is_invariant(p, fixture_images()));

    CHECK_THROWS_AS(invariant_planes_report({Mat4::identity(), Mat4::identity()}),
                    UnsupportedInput);
}

TEST_CASE("decomposition verdicts") {
    CHECK(decomposition_verdict(eval4(PairWord(Word::parse("a b", 2), Word::parse("b", 2)))) ==
          DecompositionVerdict::Preserves);

    Mat4 swap;  // [[0, I], [I, 0]]
    swap.at(0, 2) = 1; swap.at(1, 3) = 1; swap.at(2, 0) = 1; swap.at(3, 1) = 1;
    CHECK(decomposition_verdict(swap) == DecompositionVerdict::Swaps);
    CHECK(decomposition_verdict(swap * swap) == DecompositionVerdict::Preserves);

    Mat4 leak = Mat4::identity();
    leak.at(0, 2) = 1;
    CHECK(decomposition_verdict(leak) == DecompositionVerdict::Neither);

    CHECK(std::string(verdict_name(DecompositionVerdict::Swaps)) == "Swaps");
}
