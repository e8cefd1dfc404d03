#pragma once

#include "cgt/instance.hpp"
#include "cgt/matrep.hpp"
#include "cgt/planes.hpp"

#include <optional>
#include <string>

namespace cgt {

inline constexpr int kDefaultNonMemberDepth = 4;

/// Outcome of the constructive equivalence run for one element h.
///
/// Member branch: a witness symbol word (the input itself when h arrived in
/// symbol form, otherwise a bounded search) and the full two-way isomorphism
/// verification. Non-member branch: a bounded confirmation that no short
/// symbol word evaluates to h (bounded only, membership in general is
/// undecidable) plus conjugation diagnostics with h as sample conjugator.
struct Lemma2Report {
    bool member = false;

    std::optional<std::string> witness_symbols;
    std::string witness_source;  // "input" or "search"
    int witness_depth = 0;
    std::optional<IsoVerification> iso;

    std::optional<int> nonmember_checked_depth;
    bool nonmember_expressible = false;  // must stay false; true would be a contradiction
    std::optional<json> lemma1_diagnostics;

    bool consistent = false;

    json to_json() const;
    int exit_code() const;  // 0 verified member, 2 witness bound exhausted, 3 negative
};

Lemma2Report pipeline_lemma2(const MihailovaGens& g, const QuotientOracle& o,
                             const ElementInput& h, int express_depth = kDefaultExpressDepth,
                             int nonmember_depth = kDefaultNonMemberDepth);

/// Checks of a claimed conjugacy certificate g for <L,h> = g^-1 L g: the
/// necessary conditions from the decomposition argument, the power landing in
/// the embedded F2 x F2, conjugation behavior of the recovered pair, and the
/// membership cross-check. Refutations are certificate refutations; an
/// exhausted power bound is inconclusive, never a refutation.
struct ThreeToOneReport {
    DecompositionVerdict verdict = DecompositionVerdict::Neither;
    bool refuted = false;
    std::string refutation;
    bool inconclusive = false;

    std::optional<Int> k;
    std::optional<PairWord> recovered;
    std::optional<json> lemma1;
    bool lemma1_equality = false;
    bool member_h = false;
    bool consistent = false;

    json to_json() const;
    int exit_code() const;  // 0 consistent, 2 inconclusive, 3 refuted
};

ThreeToOneReport pipeline_3to1(const MihailovaGens& g, const QuotientOracle& o,
                               const ElementInput& h, const Mat4& conj,
                               int power_bound = kDefaultPowerBound);

}  // namespace cgt
