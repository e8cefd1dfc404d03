#pragma once

#include "cgt/intmatrix.hpp"
#include "cgt/words.hpp"

#include <optional>

namespace cgt {

/// Chart for the embedding F2 -> SL(2,Z):
///   a -> A = [[1,2],[0,1]],  b -> B = [[1,0],[2,1]]
/// A and B generate a free group of rank 2 of finite index in GL(2,Z); every
/// image is congruent to the identity mod 2, which makes rejection cheap.
Mat2 sanov_A();
Mat2 sanov_B();
Mat2 sanov_A_pow(const Int& n);  // [[1,2n],[0,1]]
Mat2 sanov_B_pow(const Int& n);  // [[1,0],[2n,1]]

inline const char* chart_name() { return "sanov"; }

Mat2 eval2(const Word& w);       // rank-2 word through the chart
Mat4 eval4(const PairWord& p);   // blockdiag(eval2(left), eval2(right))

bool congruent_identity_mod2(const Mat2& m);

/// Exact membership in <A,B> with word recovery: returns the unique reduced
/// word evaluating to m, or nullopt if m is not in the image.
///
/// Filter: det = 1 and m = I mod 2 (these cut the candidates down to the
/// level-2 congruence subgroup, which is {+-I} times <A,B>). Then greedily
/// peel generator powers: per step try the round-to-nearest exponents for A
/// and for B, require a strict decrease of the entry-magnitude sum, and among
/// decreasing candidates pick A before B and smaller |n| first. Peeling ends
/// at +-I; only +I is accepted.
std::optional<Word> member_F2(const Mat2& m);

std::optional<PairWord> member_F2xF2(const Mat4& m);

struct PowerResult {
    Int k;          // smallest exponent with g^k in the embedded F2 x F2
    PairWord pair;  // the recovered preimage of g^k
};

inline constexpr int kDefaultPowerBound = 1200;

/// Searches k = 1..bound for g^k in the image of eval4. Returns nullopt when
/// the bound is exhausted (inconclusive, never a refutation). Throws
/// std::domain_error when g is not unimodular.
std::optional<PowerResult> power_into_F2xF2(const Mat4& g, int bound = kDefaultPowerBound);

}  // namespace cgt
