#include "cgt/fiber.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace cgt {

std::vector<std::string> MihailovaGens::names() const {
    std::vector<std::string> out;
    out.reserve(gens.size());
    for (int i = 1; i <= p(); ++i) out.push_back("h" + std::to_string(i));
    return out;
}

json MihailovaGens::to_json() const {
    json j;
    j["H"] = source.to_json();
    json list = json::array();
    auto nm = names();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        json g;
        g["name"] = nm[i];
        g["left"] = gens[i].left.str();
        g["right"] = gens[i].right.str();
        list.push_back(std::move(g));
    }
    j["generators"] = std::move(list);
    return j;
}

MihailovaGens mihailova_generators(const Presentation& h_pres) {
    if (h_pres.rank() != 2)
        throw std::invalid_argument("the fiber construction needs a 2-generator presentation");
    MihailovaGens out{h_pres, {}};
    for (int i = 1; i <= 2; ++i) {
        Word x = Word::generator(2, i);
        out.gens.emplace_back(x, x);
    }
    for (const auto& r : h_pres.relators) out.gens.emplace_back(Word(2), r);
    return out;
}

bool member_L(const QuotientOracle& o, const PairWord& pair) {
    return o.apply(pair.left) == o.apply(pair.right);
}

std::string symbols_str(const std::vector<int>& symbols) {
    if (symbols.empty()) return "1";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < symbols.size()) {
        std::size_t j = i;
        while (j < symbols.size() && symbols[j] == symbols[i]) ++j;
        long long count = static_cast<long long>(j - i);
        long long exp = symbols[i] > 0 ? count : -count;
        if (!first) os << ' ';
        first = false;
        os << 'h' << std::abs(symbols[i]);
        if (exp != 1) os << '^' << exp;
        i = j;
    }
    return os.str();
}

std::vector<int> parse_symbols(const std::string& text, int p) {
    std::istringstream is(text);
    std::string token;
    std::vector<int> out;
    while (is >> token) {
        if (token == "1") continue;
        std::string base = token;
        long long exp = 1;
        if (auto caret = token.rfind('^'); caret != std::string::npos) {
            base = token.substr(0, caret);
            try {
                exp = std::stoll(token.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in symbol token '" + token + "'");
            }
        }
        if (base.size() < 2 || base[0] != 'h')
            throw std::invalid_argument("bad symbol token '" + token + "' (expected hN)");
        int idx = 0;
        try {
            idx = std::stoi(base.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad symbol token '" + token + "'");
        }
        if (idx < 1 || idx > p)
            throw std::invalid_argument("symbol index out of range in '" + token + "'");
        if (std::abs(exp) > (1 << 20))
            throw std::length_error("symbol exponent too large to expand");
        int s = exp > 0 ? idx : -idx;
        for (long long c = 0; c < std::abs(exp); ++c) out.push_back(s);
    }
    // free reduction on symbols
    std::vector<int> red;
    for (int s : out) {
        if (!red.empty() && red.back() == -s)
            red.pop_back();
        else
            red.push_back(s);
    }
    return red;
}

PairWord eval_symbols(const MihailovaGens& g, const std::vector<int>& symbols) {
    PairWord acc;
    for (int s : symbols) {
        if (s == 0 || std::abs(s) > g.p())
            throw std::invalid_argument("symbol index out of range");
        const PairWord& gen = g.gens[std::abs(s) - 1];
        acc = acc * (s > 0 ? gen : gen.inverse());
    }
    return acc;
}

namespace {

// Meet-in-the-middle variant of the breadth-first witness search. For each
// total length m (ascending) the word is split as prefix (ceil m/2) plus
// suffix; suffixes of the right length are tabled value -> first path in
// generator order, prefixes are scanned in the same order. This returns
// exactly the plain-BFS answer (shortest, earliest in the order
// h1, h1^-1, h2, h2^-1, ...) while keeping memory at the half-depth ball:
// a shortest product never contains a cancelling step, so the lexicographic
// exchange argument applies to each split independently.
class SymbolSearch {
public:
    SymbolSearch(const MihailovaGens& g) : p_(g.p()) {
        vals_.reserve(2 * p_);
        syms_.reserve(2 * p_);
        for (int i = 1; i <= p_; ++i) {
            syms_.push_back(i);
            vals_.push_back(g.gens[i - 1]);
            syms_.push_back(-i);
            vals_.push_back(g.gens[i - 1].inverse());
        }
    }

    std::optional<std::vector<int>> run(const PairWord& target, int depth) {
        if (target.is_identity()) return std::vector<int>{};
        for (int m = 1; m <= depth; ++m) {
            int a = (m + 1) / 2;
            int b = m - a;
            build_suffixes(b);
            std::optional<std::vector<int>> hit;
            std::vector<int> path;
            scan_prefixes(target, PairWord(), 0, a, path, hit);
            if (hit) return hit;
        }
        return std::nullopt;
    }

private:
    const PairWord& value(int sym) const {
        return vals_[2 * (std::abs(sym) - 1) + (sym > 0 ? 0 : 1)];
    }

    void build_suffixes(int b) {
        suffixes_.clear();
        std::vector<int> path;
        grow_suffix(PairWord(), 0, b, path);
    }

    void grow_suffix(const PairWord& val, int prev, int left, std::vector<int>& path) {
        if (left == 0) {
            suffixes_.emplace(val, path);  // first insertion = earliest in order
            return;
        }
        for (int s : syms_) {
            if (prev != 0 && s == -prev) continue;
            path.push_back(s);
            grow_suffix(val * value(s), s, left - 1, path);
            path.pop_back();
        }
    }

    void scan_prefixes(const PairWord& target, const PairWord& val, int prev, int left,
                       std::vector<int>& path, std::optional<std::vector<int>>& hit) {
        if (hit) return;
        if (left == 0) {
            auto need = val.inverse() * target;
            auto it = suffixes_.find(need);
            if (it == suffixes_.end()) return;
            if (!it->second.empty() && prev != 0 && it->second.front() == -prev)
                return;  // cancelling seam would mean a shorter witness existed
            std::vector<int> full = path;
            full.insert(full.end(), it->second.begin(), it->second.end());
            hit = std::move(full);
            return;
        }
        for (int s : syms_) {
            if (prev != 0 && s == -prev) continue;
            path.push_back(s);
            scan_prefixes(target, val * value(s), s, left - 1, path, hit);
            path.pop_back();
            if (hit) return;
        }
    }

    int p_;
    std::vector<int> syms_;
    std::vector<PairWord> vals_;
    std::unordered_map<PairWord, std::vector<int>, PairWordHash> suffixes_;
};

}  // namespace

std::optional<std::vector<int>> express_search(const MihailovaGens& g, const PairWord& pair,
                                               int depth) {
    if (depth < 0) throw std::invalid_argument("search depth must be nonnegative");
    SymbolSearch search(g);
    return search.run(pair, depth);
}

ExpressResult express_in_generators(const MihailovaGens& g, const QuotientOracle& o,
                                    const PairWord& pair, int depth) {
    if (!member_L(o, pair))
        throw NotAMember("element is not in L: oracle tokens differ");
    auto symbols = express_search(g, pair, depth);
    if (symbols && eval_symbols(g, *symbols) != pair)
        throw std::logic_error("witness search returned a wrong word");
    return ExpressResult{std::move(symbols), depth};
}

bool ContainmentReport::forward_all() const {
    return std::all_of(forward.begin(), forward.end(), [](bool b) { return b; });
}

bool ContainmentReport::backward_all() const {
    return std::all_of(backward.begin(), backward.end(), [](bool b) { return b; });
}

json ContainmentReport::to_json() const {
    json j;
    j["a"] = {{"left", a.left.str()}, {"right", a.right.str()}};
    j["forward"] = forward;
    j["backward"] = backward;
    j["central_witness"] = central_witness;
    return j;
}

ContainmentReport lemma1_report(const MihailovaGens& g, const QuotientOracle& o,
                                const PairWord& a) {
    ContainmentReport rep;
    rep.a = a;
    PairWord ainv = a.inverse();
    for (const auto& h : g.gens) {
        rep.forward.push_back(member_L(o, a * h * ainv));
        rep.backward.push_back(member_L(o, ainv * h * a));
    }
    rep.central_witness = o.is_central(a.left.inverse() * a.right);
    if (rep.forward_all() && !rep.backward_all())
        throw std::logic_error("containment report violates the one-sided-implies-equal law");
    return rep;
}

}  // namespace cgt
