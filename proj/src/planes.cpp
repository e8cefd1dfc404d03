#include "cgt/planes.hpp"

#include "cgt/matrep.hpp"

#include <algorithm>

namespace cgt {

namespace {

using QRows = std::vector<std::vector<Rational>>;

// In-place Gauss-Jordan over Q; returns the rank. Rows end up in reduced
// echelon form with zero rows at the bottom, which is canonical per row span.
int rref(QRows& rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Rational lead = rows[rank][col];
        for (auto& v : rows[rank]) v /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            Rational f = rows[r][col];
            for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<int> pivot_columns(const QRows& rows, int rank) {
    std::vector<int> pivots;
    for (int r = 0; r < rank; ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0) {
                pivots.push_back(static_cast<int>(c));
                break;
            }
    }
    return pivots;
}

// Canonical nullspace basis: one vector per free column, free columns taken
// in ascending order, the chosen free variable set to 1.
std::vector<std::vector<Rational>> nullspace(QRows equations, std::size_t vars) {
    for (auto& row : equations)
        if (row.size() != vars) throw std::logic_error("ragged equation system");
    int rank = rref(equations);
    auto pivots = pivot_columns(equations, rank);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < vars; ++f) {
        if (std::find(pivots.begin(), pivots.end(), static_cast<int>(f)) != pivots.end())
            continue;
        std::vector<Rational> vec(vars, 0);
        vec[f] = 1;
        for (int r = 0; r < rank; ++r) vec[pivots[r]] = -equations[r][f];
        basis.push_back(std::move(vec));
    }
    return basis;
}

}  // namespace

LambdaQ LambdaQ::parse(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "infinity") return infinity();
    return of(rational_from_string(s));
}

PlaneQ::PlaneQ(const QVec4& v1, const QVec4& v2) {
    QRows rows{{v1.begin(), v1.end()}, {v2.begin(), v2.end()}};
    if (rref(rows) != 2)
        throw std::invalid_argument("plane basis vectors are linearly dependent");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 4; ++c) rows_[r][c] = rows[r][c];
}

json PlaneQ::to_json() const {
    json basis = json::array();
    for (const auto& row : rows_) {
        json vec = json::array();
        for (const auto& v : row) vec.push_back(rational_to_string(v));
        basis.push_back(std::move(vec));
    }
    return json{{"basis", std::move(basis)}};
}

PlaneQ PlaneQ::from_json(const json& j) {
    const json& basis = require_field(j, "basis");
    if (!basis.is_array() || basis.size() != 2)
        throw std::invalid_argument("plane needs exactly two basis vectors");
    std::array<QVec4, 2> vecs;
    for (int r = 0; r < 2; ++r) {
        if (!basis[r].is_array() || basis[r].size() != 4)
            throw std::invalid_argument("plane basis vectors live in Q^4");
        for (int c = 0; c < 4; ++c)
            vecs[r][c] = rational_from_string(basis[r][c].get<std::string>());
    }
    return PlaneQ(vecs[0], vecs[1]);
}

PlaneQ plane_H(const LambdaQ& lambda) {
    if (lambda.infinite)
        return PlaneQ(QVec4{0, 0, 1, 0}, QVec4{0, 0, 0, 1});
    return PlaneQ(QVec4{1, 0, lambda.value, 0}, QVec4{0, 1, 0, lambda.value});
}

PlaneQ image_plane(const Mat4& m, const PlaneQ& p) {
    std::array<QVec4, 2> img{};
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                img[r][i] += Rational(m.at(i, j)) * p.basis()[r][j];
    return PlaneQ(img[0], img[1]);
}

bool is_invariant(const PlaneQ& p, const std::vector<Mat4>& ms) {
    return std::all_of(ms.begin(), ms.end(),
                       [&](const Mat4& m) { return image_plane(m, p) == p; });
}

CommutantResult commutant(const std::vector<Mat4>& ms) {
    if (ms.empty()) throw std::invalid_argument("commutant of an empty set is ambient");
    // variables x_{rc} = X(r,c) indexed 4r+c; one equation per entry of
    // XM - MX per generator
    QRows equations;
    for (const auto& m : ms) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                std::vector<Rational> eq(16, 0);
                for (int k = 0; k < 4; ++k) {
                    eq[4 * i + k] += Rational(m.at(k, j));
                    eq[4 * k + j] -= Rational(m.at(i, k));
                }
                equations.push_back(std::move(eq));
            }
    }
    CommutantResult out;
    for (auto& vec : nullspace(std::move(equations), 16)) {
        QMat16 x;
        std::copy(vec.begin(), vec.end(), x.begin());
        out.basis.push_back(std::move(x));
    }
    return out;
}

bool is_scalar_block(const QMat16& x) {
    auto at = [&](int r, int c) -> const Rational& { return x[4 * r + c]; };
    for (int br = 0; br < 2; ++br)
        for (int bc = 0; bc < 2; ++bc) {
            if (at(2 * br, 2 * bc) != at(2 * br + 1, 2 * bc + 1)) return false;
            if (at(2 * br, 2 * bc + 1) != 0 || at(2 * br + 1, 2 * bc) != 0) return false;
        }
    return true;
}

bool in_span(const std::vector<QMat16>& basis, const QMat16& x) {
    QRows rows;
    for (const auto& b : basis) rows.emplace_back(b.begin(), b.end());
    int rank = rref(rows);
    rows.emplace_back(x.begin(), x.end());
    return rref(rows) == rank;
}

json PlanesReport::to_json() const {
    json j;
    j["commutant_dim"] = commutant_dim;
    j["h_lambda_family"] = full_lambda_family;
    json list = json::array();
    for (const auto& p : planes) list.push_back(p.to_json());
    j["planes"] = std::move(list);
    return j;
}

PlanesReport invariant_planes_report(const std::vector<Mat4>& ms) {
    Mat4 dA = blockdiag(sanov_A(), sanov_A());
    Mat4 dB = blockdiag(sanov_B(), sanov_B());
    auto has = [&](const Mat4& m) { return std::find(ms.begin(), ms.end(), m) != ms.end(); };
    if (!has(dA) || !has(dB))
        throw UnsupportedInput(
            "plane classification needs both diagonal generator images in the set");

    CommutantResult com = commutant(ms);
    bool scalar = std::all_of(com.basis.begin(), com.basis.end(), is_scalar_block);

    PlanesReport rep;
    rep.commutant_dim = com.dim();
    if (scalar && com.dim() == 4) {
        // intertwiners realize every slope: the full H_lambda family
        rep.full_lambda_family = true;
        return rep;
    }
    bool diagonal_only = scalar && std::all_of(com.basis.begin(), com.basis.end(),
                                               [](const QMat16& x) {
                                                   return x[2] == 0 && x[8] == 0;
                                               });
    if (diagonal_only && com.dim() == 2) {
        // off-diagonal intertwiners are gone: only the coordinate planes stay
        rep.planes.push_back(plane_H(LambdaQ::of(0)));
        rep.planes.push_back(plane_H(LambdaQ::infinity()));
        return rep;
    }
    throw UnsupportedInput("commutant shape outside the supported classification");
}

const char* verdict_name(DecompositionVerdict v) {
    switch (v) {
        case DecompositionVerdict::Preserves: return "Preserves";
        case DecompositionVerdict::Swaps: return "Swaps";
        default: return "Neither";
    }
}

DecompositionVerdict decomposition_verdict(const Mat4& g) {
    PlaneQ h0 = plane_H(LambdaQ::of(0));
    PlaneQ hinf = plane_H(LambdaQ::infinity());
    PlaneQ img0 = image_plane(g, h0);
    PlaneQ imginf = image_plane(g, hinf);
    if (img0 == h0 && imginf == hinf) return DecompositionVerdict::Preserves;
    if (img0 == hinf && imginf == h0) return DecompositionVerdict::Swaps;
    return DecompositionVerdict::Neither;
}

}  // namespace cgt
