#include "cgt/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cgt {

namespace {

int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_exponent(const std::string& s, const std::string& token) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("bad exponent in word token '" + token + "'");
    return Int(s);
}

}  // namespace

Word::Word(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("word rank must be positive");
}

Word Word::from_runs(int rank, std::vector<Run> runs) {
    Word w(rank);
    for (auto& r : runs) {
        if (r.gen < 1 || r.gen > rank)
            throw std::invalid_argument("generator index out of range");
        if (r.exp == 0) continue;
        if (!w.runs_.empty() && w.runs_.back().gen == r.gen) {
            w.runs_.back().exp += r.exp;
            if (w.runs_.back().exp == 0) w.runs_.pop_back();
        } else {
            w.runs_.push_back(std::move(r));
        }
    }
    return w;
}

Word Word::from_letters(int rank, const std::vector<int>& letters) {
    std::vector<Run> runs;
    runs.reserve(letters.size());
    for (int l : letters) {
        if (l == 0 || l < -rank || l > rank)
            throw std::invalid_argument("letter out of range");
        runs.push_back(Run{l > 0 ? l : -l, l > 0 ? 1 : -1});
    }
    return from_runs(rank, std::move(runs));
}

Word Word::generator(int rank, int index, Int exp) {
    return from_runs(rank, {Run{index, std::move(exp)}});
}

Int Word::length() const {
    Int n = 0;
    for (const auto& r : runs_) n += abs(r.exp);
    return n;
}

std::vector<int> Word::letters(std::size_t max_letters) const {
    if (length() > max_letters)
        throw std::length_error("word too long to expand into letters");
    std::vector<int> out;
    for (const auto& r : runs_) {
        int step = sign_of(r.exp);
        for (Int i = 0, n = abs(r.exp); i < n; ++i) out.push_back(step * r.gen);
    }
    return out;
}

void Word::check_same_rank(const Word& other) const {
    if (rank_ != other.rank_)
        throw std::invalid_argument("rank mismatch between words");
}

Word Word::operator*(const Word& rhs) const {
    check_same_rank(rhs);
    std::vector<Run> runs = runs_;
    runs.insert(runs.end(), rhs.runs_.begin(), rhs.runs_.end());
    return from_runs(rank_, std::move(runs));
}

Word Word::inverse() const {
    Word w(rank_);
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
        w.runs_.push_back(Run{it->gen, -it->exp});
    return w;
}

Word Word::pow(const Int& n) const {
    if (n == 0 || runs_.empty()) return Word(rank_);
    if (runs_.size() == 1)
        return generator(rank_, runs_[0].gen, runs_[0].exp * n);
    if (abs(n) > 4096)
        throw std::length_error("power of a multi-run word is too large");
    Word base = n > 0 ? *this : inverse();
    Word acc(rank_);
    for (Int i = 0, m = abs(n); i < m; ++i) acc = acc * base;
    return acc;
}

Word Word::conjugated_by(const Word& c) const { return c.inverse() * *this * c; }

Word Word::cyclically_reduced() const {
    Word w = *this;
    while (w.runs_.size() >= 2) {
        Run& front = w.runs_.front();
        Run& back = w.runs_.back();
        if (front.gen != back.gen || sign_of(front.exp) == sign_of(back.exp)) break;
        Int c = front.exp + back.exp;
        if (c == 0) {
            w.runs_.erase(w.runs_.begin());
            w.runs_.pop_back();
        } else if (sign_of(c) == sign_of(front.exp)) {
            front.exp = c;
            w.runs_.pop_back();
        } else {
            back.exp = c;
            w.runs_.erase(w.runs_.begin());
        }
    }
    return w;
}

bool Word::is_cyclically_reduced() const {
    if (runs_.size() < 2) return true;
    const Run& front = runs_.front();
    const Run& back = runs_.back();
    return front.gen != back.gen || sign_of(front.exp) == sign_of(back.exp);
}

std::string Word::str() const {
    if (runs_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& r : runs_) {
        if (!first) os << ' ';
        first = false;
        if (rank_ <= 26) {
            char base = static_cast<char>('a' + r.gen - 1);
            if (r.exp == 1)
                os << base;
            else if (r.exp == -1)
                os << static_cast<char>(std::toupper(static_cast<unsigned char>(base)));
            else
                os << base << '^' << r.exp;
        } else {
            os << 'g' << r.gen;
            if (r.exp != 1) os << '^' << r.exp;
        }
    }
    return os.str();
}

Word Word::parse(const std::string& text, int rank) {
    std::istringstream is(text);
    std::string token;
    std::vector<Run> runs;

    auto push_letter = [&](char ch, const Int& exp) {
        if (std::islower(static_cast<unsigned char>(ch)))
            runs.push_back(Run{ch - 'a' + 1, exp});
        else if (std::isupper(static_cast<unsigned char>(ch)))
            runs.push_back(Run{ch - 'A' + 1, -exp});
        else
            throw std::invalid_argument(std::string("bad letter '") + ch + "' in word");
    };

    while (is >> token) {
        if (token == "1") continue;

        std::string base = token;
        Int exp = 1;
        if (auto caret = token.rfind('^'); caret != std::string::npos) {
            base = token.substr(0, caret);
            exp = parse_exponent(token.substr(caret + 1), token);
        }
        if (base.empty()) throw std::invalid_argument("empty base in word token '" + token + "'");

        if (base.size() >= 2 && base[0] == 'g' &&
            is_integer_literal(base.substr(1)) && base[1] != '-') {
            runs.push_back(Run{std::stoi(base.substr(1)), exp});
        } else if (base.size() == 1) {
            push_letter(base[0], exp);
        } else {
            // compact letter string like "abA"; powers make no sense here
            if (exp != 1 || token.find('^') != std::string::npos)
                throw std::invalid_argument("cannot apply exponent to word token '" + token + "'");
            for (char ch : base) push_letter(ch, 1);
        }
    }
    return from_runs(rank, std::move(runs));
}

std::string Word::str_named(const std::vector<std::string>& names) const {
    if (runs_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& r : runs_) {
        if (r.gen > static_cast<int>(names.size()))
            throw std::out_of_range("word uses a generator with no name");
        if (!first) os << ' ';
        first = false;
        os << names[r.gen - 1];
        if (r.exp != 1) os << '^' << r.exp;
    }
    return os.str();
}

Word Word::parse_named(const std::string& text, const std::vector<std::string>& names) {
    int rank = static_cast<int>(names.size());
    std::istringstream is(text);
    std::string token;
    std::vector<Run> runs;

    auto index_of = [&](const std::string& name) -> int {
        for (int i = 0; i < rank; ++i)
            if (names[i] == name) return i + 1;
        return 0;
    };

    while (is >> token) {
        if (token == "1" && index_of("1") == 0) continue;
        if (int g = index_of(token); g != 0) {
            runs.push_back(Run{g, 1});
            continue;
        }
        auto caret = token.rfind('^');
        if (caret == std::string::npos)
            throw std::invalid_argument("unknown generator in word token '" + token + "'");
        int g = index_of(token.substr(0, caret));
        if (g == 0)
            throw std::invalid_argument("unknown generator in word token '" + token + "'");
        runs.push_back(Run{g, parse_exponent(token.substr(caret + 1), token)});
    }
    return from_runs(rank, std::move(runs));
}

std::size_t hash_value(const Word& w) {
    std::size_t seed = boost::hash<int>()(w.rank());
    for (const auto& r : w.runs()) {
        boost::hash_combine(seed, r.gen);
        boost::hash_combine(seed, r.exp);
    }
    return seed;
}

PairWord::PairWord() : left(2), right(2) {}

PairWord::PairWord(Word l, Word r) : left(std::move(l)), right(std::move(r)) {
    if (left.rank() != 2 || right.rank() != 2)
        throw std::invalid_argument("pair words live in F2 x F2");
}

PairWord PairWord::operator*(const PairWord& rhs) const {
    return PairWord(left * rhs.left, right * rhs.right);
}

PairWord PairWord::inverse() const { return PairWord(left.inverse(), right.inverse()); }

PairWord PairWord::conjugated_by(const PairWord& c) const {
    return c.inverse() * *this * c;
}

std::string PairWord::str() const { return "(" + left.str() + ", " + right.str() + ")"; }

std::size_t hash_value(const PairWord& p) {
    std::size_t seed = hash_value(p.left);
    boost::hash_combine(seed, hash_value(p.right));
    return seed;
}

}  // namespace cgt
