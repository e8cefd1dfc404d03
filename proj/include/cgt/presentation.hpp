#pragma once

#include "cgt/jsonutil.hpp"
#include "cgt/words.hpp"

#include <string>
#include <vector>

namespace cgt {

/// Finite group presentation <generators | relators>.
///
/// Relators are normalized on load: freely and cyclically reduced, with
/// trivial relators dropped since they carry no information and would only
/// distort relator counts downstream.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<Word> rels);

    int rank() const { return static_cast<int>(generators.size()); }
    int relator_count() const { return static_cast<int>(relators.size()); }

    Word parse_word(const std::string& text) const;
    std::string word_str(const Word& w) const;

    json to_json() const;
    static Presentation from_json(const json& j);
};

}  // namespace cgt
