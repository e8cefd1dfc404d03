#include "cgt/oracle.hpp"

#include <array>
#include <sstream>

namespace cgt {

void QuotientOracle::check_rank2(const Word& w) {
    if (w.rank() != 2) throw std::invalid_argument("oracle words must have rank 2");
}

bool QuotientOracle::is_central(const Word& w) const {
    if (!supports_centrality())
        throw CapabilityError("oracle '" + name() + "' does not support centrality tests");
    check_rank2(w);
    for (int g = 1; g <= 2; ++g) {
        Word x = Word::generator(2, g);
        if (apply(w * x) != apply(x * w)) return false;
    }
    return true;
}

namespace {

// ---- S3: pi(x1) = transposition (0 1), pi(x2) = 3-cycle (0 1 2) ----
//
// Permutations compose left to right: the token of uv moves i to v(u(i)).
// A token is the image string p(0)p(1)p(2), e.g. "102" for the transposition.

using Perm = std::array<int, 3>;

const Perm kPermId{0, 1, 2};
const Perm kPermX1{1, 0, 2};
const Perm kPermX2{1, 2, 0};

Perm perm_compose(const Perm& a, const Perm& b) {
    // left to right: first a, then b
    return Perm{b[a[0]], b[a[1]], b[a[2]]};
}

Perm perm_pow(Perm p, int n) {
    Perm acc = kPermId;
    for (int i = 0; i < n; ++i) acc = perm_compose(acc, p);
    return acc;
}

Perm perm_invert(const Perm& p) {
    Perm q{};
    for (int i = 0; i < 3; ++i) q[p[i]] = i;
    return q;
}

std::string perm_token(const Perm& p) {
    return {static_cast<char>('0' + p[0]), static_cast<char>('0' + p[1]),
            static_cast<char>('0' + p[2])};
}

Perm perm_from_token(const std::string& t) {
    if (t.size() != 3) throw std::invalid_argument("bad permutation token '" + t + "'");
    Perm p{};
    for (int i = 0; i < 3; ++i) {
        int v = t[i] - '0';
        if (v < 0 || v > 2) throw std::invalid_argument("bad permutation token '" + t + "'");
        p[i] = v;
    }
    return p;
}

class S3Oracle final : public QuotientOracle {
public:
    std::string name() const override { return "s3"; }

    Presentation presentation() const override {
        std::vector<std::string> names{"x1", "x2"};
        auto rel = [&](const std::string& s) { return Word::parse_named(s, names); };
        return Presentation(names, {rel("x1^2"), rel("x2^3"), rel("x1 x2 x1 x2")});
    }

    std::string apply(const Word& w) const override {
        check_rank2(w);
        Perm acc = kPermId;
        for (const auto& r : w.runs()) {
            const Perm& base = r.gen == 1 ? kPermX1 : kPermX2;
            int order = r.gen == 1 ? 2 : 3;
            int e = static_cast<int>(((r.exp % order) + order) % order);
            acc = perm_compose(acc, perm_pow(base, e));
        }
        return perm_token(acc);
    }

    std::string identity_token() const override { return perm_token(kPermId); }

    std::string token_mul(const std::string& a, const std::string& b) const override {
        return perm_token(perm_compose(perm_from_token(a), perm_from_token(b)));
    }
};

// ---- Zsq: abelianization F2 -> Z^2, token "(m,n)" ----

class ZsqOracle final : public QuotientOracle {
public:
    std::string name() const override { return "zsq"; }

    Presentation presentation() const override {
        std::vector<std::string> names{"x1", "x2"};
        return Presentation(names, {Word::parse_named("x1 x2 x1^-1 x2^-1", names)});
    }

    std::string apply(const Word& w) const override {
        check_rank2(w);
        Int m = 0, n = 0;
        for (const auto& r : w.runs()) (r.gen == 1 ? m : n) += r.exp;
        return token(m, n);
    }

    std::string identity_token() const override { return token(0, 0); }

    std::string token_mul(const std::string& a, const std::string& b) const override {
        auto [am, an] = parse(a);
        auto [bm, bn] = parse(b);
        return token(am + bm, an + bn);
    }

private:
    static std::string token(const Int& m, const Int& n) {
        return "(" + m.str() + "," + n.str() + ")";
    }

    static std::pair<Int, Int> parse(const std::string& t) {
        auto comma = t.find(',');
        if (t.size() < 5 || t.front() != '(' || t.back() != ')' || comma == std::string::npos)
            throw std::invalid_argument("bad Z^2 token '" + t + "'");
        return {Int(t.substr(1, comma - 1)), Int(t.substr(comma + 1, t.size() - comma - 2))};
    }
};

// ---- Free: the identity quotient F2 -> F2, giving L = diagonal ----

class FreeOracle final : public QuotientOracle {
public:
    std::string name() const override { return "free"; }

    Presentation presentation() const override {
        return Presentation({"x1", "x2"}, {});
    }

    std::string apply(const Word& w) const override {
        check_rank2(w);
        return w.str();
    }

    std::string identity_token() const override { return "1"; }

    std::string token_mul(const std::string& a, const std::string& b) const override {
        return (Word::parse(a, 2) * Word::parse(b, 2)).str();
    }
};

}  // namespace

std::unique_ptr<QuotientOracle> make_oracle(const std::string& name) {
    if (name == "s3") return std::make_unique<S3Oracle>();
    if (name == "zsq") return std::make_unique<ZsqOracle>();
    if (name == "free") return std::make_unique<FreeOracle>();
    throw std::invalid_argument("unknown oracle '" + name + "' (expected s3, zsq or free)");
}

}  // namespace cgt
