#pragma once

#include "cgt/oracle.hpp"
#include "cgt/presentation.hpp"
#include "cgt/words.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

/// The standard generating set of L = {(u,v) : pi(u) = pi(v)} read off a
/// presentation H = <x1,x2 | r_1..r_k>: the two diagonal pairs first, then
/// one pair (1, r_j) per relator. k relators give p = k+2 generators.
struct MihailovaGens {
    Presentation source;
    std::vector<PairWord> gens;

    int p() const { return static_cast<int>(gens.size()); }
    std::vector<std::string> names() const;
    json to_json() const;
};

MihailovaGens mihailova_generators(const Presentation& h_pres);

bool member_L(const QuotientOracle& o, const PairWord& pair);

/// Symbol words over h_1..h_p are signed index sequences: +i for h_i, -i for
/// its inverse. Text form: `h1 h4^-1 h2`.
std::string symbols_str(const std::vector<int>& symbols);
std::vector<int> parse_symbols(const std::string& text, int p);
PairWord eval_symbols(const MihailovaGens& g, const std::vector<int>& symbols);

struct NotAMember : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultExpressDepth = 8;

struct ExpressResult {
    std::optional<std::vector<int>> symbols;  // nullopt: not found within depth
    int depth;                                // the bound that was searched
};

/// Bounded search for a symbol word evaluating to `pair`. Requires
/// member_L(o, pair) and throws NotAMember otherwise. Returns the shortest
/// witness, ties broken by generator order h1, h1^-1, h2, h2^-1, ...
/// A miss is NotFoundWithinBound, never a proof of non-expressibility.
ExpressResult express_in_generators(const MihailovaGens& g, const QuotientOracle& o,
                                    const PairWord& pair, int depth = kDefaultExpressDepth);

/// The same search without the membership precondition; used to confirm (in
/// the bounded sense) that non-members are not hit by any short symbol word.
std::optional<std::vector<int>> express_search(const MihailovaGens& g, const PairWord& pair,
                                               int depth);

/// Conjugation test data for a = (x,y): does a h_i a^-1 stay in L, does
/// a^-1 h_i a, and is pi(x^-1 y) central. If every forward entry is true
/// then every backward entry must be too; that implication is asserted.
struct ContainmentReport {
    PairWord a;
    std::vector<bool> forward;
    std::vector<bool> backward;
    bool central_witness = false;

    bool forward_all() const;
    bool backward_all() const;
    json to_json() const;
};

ContainmentReport lemma1_report(const MihailovaGens& g, const QuotientOracle& o,
                                const PairWord& a);

}  // namespace cgt
