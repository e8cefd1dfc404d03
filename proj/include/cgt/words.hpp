#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace cgt {

using Int = boost::multiprecision::cpp_int;

/// Maximal power of one generator inside a reduced word: gen^exp with exp != 0.
struct Run {
    int gen = 0;  // 1-based generator index
    Int exp;

    bool operator==(const Run&) const = default;
};

/// Freely reduced word in a free group of fixed rank.
///
/// Words are run-length encoded so that elements with very large generator
/// powers (matrix columns written as translation words can have exponents of
/// hundreds of bits) stay small in memory and cheap to multiply.
///
/// Text syntax, tokens separated by whitespace, one token per maximal power:
///   a .. z      generators 1..26         A .. Z      their inverses
///   gN / gN^-1  indexed form, any rank
///   base^k      integer power of a single generator: a^3, b^-2, g30^7
///   1           the identity word
/// A token made only of letters is also accepted compactly: "abA" == "a b A".
class Word {
public:
    explicit Word(int rank);

    /// Free reduction of a raw signed-letter sequence (+i = generator i,
    /// -i = its inverse). Throws std::invalid_argument on out-of-range letters.
    static Word from_letters(int rank, const std::vector<int>& letters);

    /// Free reduction of a raw run sequence.
    static Word from_runs(int rank, std::vector<Run> runs);

    static Word generator(int rank, int index, Int exp = 1);

    int rank() const noexcept { return rank_; }
    bool empty() const noexcept { return runs_.empty(); }
    const std::vector<Run>& runs() const noexcept { return runs_; }
    std::size_t run_count() const noexcept { return runs_.size(); }

    /// Number of letters (sum of |exp| over runs).
    Int length() const;

    /// Expanded signed-letter sequence; guarded against huge words.
    std::vector<int> letters(std::size_t max_letters = 1u << 20) const;

    Word operator*(const Word& rhs) const;
    Word inverse() const;
    Word pow(const Int& n) const;
    Word conjugated_by(const Word& c) const;  // c^-1 * w * c

    bool operator==(const Word&) const = default;

    /// Remove cyclic cancellation at the word boundary (w = u v u^-1 -> v).
    Word cyclically_reduced() const;
    bool is_cyclically_reduced() const;

    std::string str() const;
    static Word parse(const std::string& text, int rank);

    std::string str_named(const std::vector<std::string>& names) const;
    static Word parse_named(const std::string& text, const std::vector<std::string>& names);

private:
    int rank_;
    std::vector<Run> runs_;

    void check_same_rank(const Word& other) const;
};

std::size_t hash_value(const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const { return hash_value(w); }
};

/// Element of F2 x F2: an ordered pair of rank-2 words.
struct PairWord {
    Word left;
    Word right;

    PairWord();
    PairWord(Word l, Word r);

    static PairWord identity() { return PairWord(); }

    bool is_identity() const { return left.empty() && right.empty(); }

    PairWord operator*(const PairWord& rhs) const;
    PairWord inverse() const;
    PairWord conjugated_by(const PairWord& c) const;  // c^-1 * p * c

    bool operator==(const PairWord&) const = default;

    std::string str() const;
};

std::size_t hash_value(const PairWord& p);

struct PairWordHash {
    std::size_t operator()(const PairWord& p) const { return hash_value(p); }
};

}  // namespace cgt
