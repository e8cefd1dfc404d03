#include "cgt/matrep.hpp"

#include <cassert>
#include <vector>

namespace cgt {

Mat2 sanov_A() { return sanov_A_pow(1); }
Mat2 sanov_B() { return sanov_B_pow(1); }

Mat2 sanov_A_pow(const Int& n) {
    Mat2 m = Mat2::identity();
    m.at(0, 1) = 2 * n;
    return m;
}

Mat2 sanov_B_pow(const Int& n) {
    Mat2 m = Mat2::identity();
    m.at(1, 0) = 2 * n;
    return m;
}

Mat2 eval2(const Word& w) {
    if (w.rank() != 2) throw std::invalid_argument("eval2 takes rank-2 words");
    Mat2 acc = Mat2::identity();
    for (const auto& r : w.runs())
        acc = acc * (r.gen == 1 ? sanov_A_pow(r.exp) : sanov_B_pow(r.exp));
    return acc;
}

Mat4 eval4(const PairWord& p) { return blockdiag(eval2(p.left), eval2(p.right)); }

bool congruent_identity_mod2(const Mat2& m) {
    auto odd = [](const Int& v) { return (v % 2) != 0; };
    return odd(m.at(0, 0)) && odd(m.at(1, 1)) && !odd(m.at(0, 1)) && !odd(m.at(1, 0));
}

namespace {

// One peeling candidate: strip gen^n off the left of the current matrix.
struct Peel {
    int gen;  // 1 = A, 2 = B
    Int n;
    Mat2 rest;
    Int sum;
};

// Peeling A^n off m leaves [[a-2nc, b-2nd],[c,d]]; the entry-magnitude sum of
// the first row is minimized near a/2c and b/2d. Peeling B^n is symmetric in
// the rows. Both floor and ceiling of each ratio are tried so the true
// integer minimizer is always among the candidates.
void add_ratio(std::vector<Int>& ns, const Int& num, const Int& den) {
    if (den == 0) return;
    Int q = num / den;  // truncation; add both neighbors to cover floor/ceil
    for (Int cand : {Int(q - 1), q, Int(q + 1)})
        if (cand != 0) ns.push_back(cand);
}

void collect_candidates(const Mat2& m, int gen, std::vector<Peel>& out) {
    const Int &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
    std::vector<Int> ns;
    if (gen == 1) {
        add_ratio(ns, a, 2 * c);
        add_ratio(ns, b, 2 * d);
    } else {
        add_ratio(ns, c, 2 * a);
        add_ratio(ns, d, 2 * b);
    }
    for (const Int& n : ns) {
        Mat2 rest = (gen == 1 ? sanov_A_pow(-n) : sanov_B_pow(-n)) * m;
        out.push_back(Peel{gen, n, rest, rest.entry_abs_sum()});
    }
}

bool better(const Peel& x, const Peel& y) {
    if (x.sum != y.sum) return x.sum < y.sum;
    if (x.gen != y.gen) return x.gen < y.gen;  // A before B
    Int ax = abs(x.n), ay = abs(y.n);
    if (ax != ay) return ax < ay;  // smaller |n| first
    return x.n > y.n;              // positive before negative, for a total order
}

}  // namespace

std::optional<Word> member_F2(const Mat2& m) {
    if (det(m) != 1 || !congruent_identity_mod2(m)) return std::nullopt;

    std::vector<Run> runs;
    Mat2 cur = m;
    Mat2 id = Mat2::identity();
    Int sum = cur.entry_abs_sum();
    while (cur != id && cur != -id) {
        std::vector<Peel> cands;
        collect_candidates(cur, 1, cands);
        collect_candidates(cur, 2, cands);
        const Peel* best = nullptr;
        for (const auto& p : cands)
            if (p.sum < sum && (best == nullptr || better(p, *best))) best = &p;
        if (best == nullptr) return std::nullopt;  // stuck; cannot happen on members
        assert(best->sum < sum);
        runs.push_back(Run{best->gen, best->n});
        cur = best->rest;
        sum = best->sum;
    }
    if (cur != id) return std::nullopt;  // peeled down to -I

    Word w = Word::from_runs(2, runs);
    if (eval2(w) != m) return std::nullopt;  // defensive: never return a wrong word
    return w;
}

std::optional<PairWord> member_F2xF2(const Mat4& m) {
    if (!is_block_diagonal(m)) return std::nullopt;
    auto left = member_F2(block(m, 0, 0));
    if (!left) return std::nullopt;
    auto right = member_F2(block(m, 2, 2));
    if (!right) return std::nullopt;
    return PairWord(std::move(*left), std::move(*right));
}

std::optional<PowerResult> power_into_F2xF2(const Mat4& g, int bound) {
    Int d = det(g);
    if (d != 1 && d != -1) throw std::domain_error("power search needs a unimodular matrix");
    Mat4 acc = Mat4::identity();
    for (int k = 1; k <= bound; ++k) {
        acc = acc * g;
        if (auto pair = member_F2xF2(acc))
            return PowerResult{k, std::move(*pair)};
    }
    return std::nullopt;
}

}  // namespace cgt
