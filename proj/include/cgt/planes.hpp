#pragma once

#include "cgt/intmatrix.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

struct UnsupportedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Slope parameter of the planes H_lambda: a rational number or infinity.
struct LambdaQ {
    bool infinite = false;
    Rational value;

    static LambdaQ infinity() { return LambdaQ{true, 0}; }
    static LambdaQ of(Rational v) { return LambdaQ{false, std::move(v)}; }
    static LambdaQ parse(const std::string& s);
    std::string str() const { return infinite ? "inf" : rational_to_string(value); }
};

using QVec4 = std::array<Rational, 4>;

/// 2-plane in Q^4, held in reduced row echelon form so that equal subspaces
/// compare equal componentwise.
class PlaneQ {
public:
    PlaneQ(const QVec4& v1, const QVec4& v2);  // throws if dependent

    const std::array<QVec4, 2>& basis() const { return rows_; }

    bool operator==(const PlaneQ&) const = default;

    json to_json() const;
    static PlaneQ from_json(const json& j);

private:
    std::array<QVec4, 2> rows_;
};

/// H_lambda = {(x, lambda x)}; lambda = 0 is the horizontal coordinate plane,
/// infinity the vertical one.
PlaneQ plane_H(const LambdaQ& lambda);

PlaneQ image_plane(const Mat4& m, const PlaneQ& p);

bool is_invariant(const PlaneQ& p, const std::vector<Mat4>& ms);

using QMat16 = std::array<Rational, 16>;  // 4x4 rational matrix, row-major

struct CommutantResult {
    std::vector<QMat16> basis;  // canonical basis of {X : XM = MX for all M}
    int dim() const { return static_cast<int>(basis.size()); }
};

CommutantResult commutant(const std::vector<Mat4>& ms);

bool is_scalar_block(const QMat16& x);           // [[aI,bI],[cI,dI]] shape
bool in_span(const std::vector<QMat16>& basis, const QMat16& x);

/// Classification of the common invariant 2-planes, specialized to generator
/// sets containing both diagonal images blockdiag(A,A) and blockdiag(B,B).
/// Exactly two shapes are supported (they are the only ones such sets
/// produce): the full H_lambda family, or just {H_0, H_inf}. Anything else
/// throws UnsupportedInput.
struct PlanesReport {
    int commutant_dim = 0;
    bool full_lambda_family = false;
    std::vector<PlaneQ> planes;  // explicit list when the family is finite
    json to_json() const;
};

PlanesReport invariant_planes_report(const std::vector<Mat4>& ms);

enum class DecompositionVerdict { Preserves, Swaps, Neither };

const char* verdict_name(DecompositionVerdict v);

/// How g acts on the decomposition Q^4 = Q^2 (+) Q^2, read off the images of
/// the coordinate planes H_0 and H_inf.
DecompositionVerdict decomposition_verdict(const Mat4& g);

}  // namespace cgt
