#include "cgt/presentation.hpp"

#include <cctype>
#include <set>
#include <stdexcept>
#include <utility>

namespace cgt {

namespace {

void validate_names(const std::vector<std::string>& names) {
    if (names.empty()) throw std::invalid_argument("presentation needs at least one generator");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || n == "1")
            throw std::invalid_argument("invalid generator name '" + n + "'");
        for (char ch : n)
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '^')
                throw std::invalid_argument("invalid generator name '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
}

}  // namespace

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)) {
    validate_names(generators);
    for (auto& r : rels) {
        if (r.rank() != rank())
            throw std::invalid_argument("relator rank does not match generator count");
        Word c = r.cyclically_reduced();
        if (!c.empty()) relators.push_back(std::move(c));
    }
}

Word Presentation::parse_word(const std::string& text) const {
    return Word::parse_named(text, generators);
}

std::string Presentation::word_str(const Word& w) const { return w.str_named(generators); }

json Presentation::to_json() const {
    json j;
    j["generators"] = generators;
    json rels = json::array();
    for (const auto& r : relators) rels.push_back(word_str(r));
    j["relators"] = std::move(rels);
    return j;
}

Presentation Presentation::from_json(const json& j) {
    std::vector<std::string> gens =
        require_field(j, "generators").get<std::vector<std::string>>();
    validate_names(gens);
    std::vector<Word> rels;
    for (const auto& r : require_field(j, "relators")) {
        if (!r.is_string())
            throw std::invalid_argument("relators must be strings");
        rels.push_back(Word::parse_named(r.get<std::string>(), gens));
    }
    return Presentation(std::move(gens), std::move(rels));
}

}  // namespace cgt
