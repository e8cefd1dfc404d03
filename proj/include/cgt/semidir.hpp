#pragma once

#include "cgt/fiber.hpp"
#include "cgt/intmatrix.hpp"
#include "cgt/presentation.hpp"
#include "cgt/words.hpp"

#include <string>
#include <vector>

namespace cgt {

/// Action of F_{p+1} = <t_1..t_p, t> on Z^4: one unimodular matrix per
/// generator, the last one belonging to the stable letter t.
struct ActionSpec {
    std::vector<Mat4> matrices;

    int p() const { return static_cast<int>(matrices.size()) - 1; }
    int free_rank() const { return static_cast<int>(matrices.size()); }

    json to_json() const;
    static ActionSpec from_json(const json& j);
};

/// Normal form (v, w) of an element of Z^4 x| F_q.
struct SemiElem {
    Vec4 v{};
    Word w;

    explicit SemiElem(int free_rank) : w(free_rank) {}
    SemiElem(Vec4 vec, Word word) : v(std::move(vec)), w(std::move(word)) {}

    bool operator==(const SemiElem&) const = default;
    std::string str() const;
};

/// Z^4 x| F_{p+1} with a fixed action; multiplication twists the vector part:
/// (v1,w1)(v2,w2) = (v1 + Phi(w1) v2, w1 w2). Normal forms make the word
/// problem decidable, which is what the homomorphism checks lean on.
class SemidirectGroup {
public:
    explicit SemidirectGroup(ActionSpec spec);  // throws on non-unimodular action

    const ActionSpec& action() const { return spec_; }
    int free_rank() const { return spec_.free_rank(); }

    SemiElem identity() const { return SemiElem(free_rank()); }
    bool is_identity(const SemiElem& x) const;

    Mat4 phi(const Word& w) const;  // the action homomorphism F_{p+1} -> GL(4,Z)

    SemiElem mul(const SemiElem& x, const SemiElem& y) const;
    SemiElem inv(const SemiElem& x) const;

    /// Presentation on a1..a4, t1..t_p, t: the 6 commutators of the a_i plus,
    /// per stable letter s with matrix M, the four relators
    /// s a_i s^-1 (a1^{M_1i} a2^{M_2i} a3^{M_3i} a4^{M_4i})^-1.
    Presentation presentation() const;

    /// Generator i of presentation() as an element: a_i -> (e_i, 1),
    /// stable letters -> (0, letter).
    SemiElem presentation_generator(int index) const;

    /// Evaluate a word over presentation() generators to its normal form.
    SemiElem eval(const Word& presentation_word) const;

private:
    ActionSpec spec_;
};

/// Generator-image list defining a map between two such presentations;
/// images are words over the target's generators, in source generator order.
struct HomWitness {
    std::vector<Word> images;

    json to_json(const Presentation& src, const Presentation& tgt) const;
    static HomWitness from_json(const json& j, const Presentation& src,
                                const Presentation& tgt);
};

Word substitute(const Word& src_word, const HomWitness& w, int tgt_rank);

struct HomCheckResult {
    bool ok = true;
    std::vector<std::string> violated;  // rendered relators that fail

    json to_json() const;
};

/// Does the witness kill every relator of src inside the target group.
HomCheckResult verify_hom(const Presentation& src, const SemidirectGroup& tgt,
                          const HomWitness& w);

/// The constructive isomorphism data for G_h vs G_1 when h is given as a
/// symbol word over the Mihailova generators: both groups, both presentations
/// and the two witnesses (a_i and t_j fixed, t -> w(t_i) t and its inverse).
struct IsoBundle {
    Presentation H;
    std::string h_symbols;
    Presentation pres_h;
    Presentation pres_1;
    ActionSpec act_h;
    ActionSpec act_1;
    HomWitness forward;   // G_h -> G_1
    HomWitness backward;  // G_1 -> G_h

    json to_json() const;
    static IsoBundle from_json(const json& j);
};

IsoBundle iso_witness(const MihailovaGens& gens, const std::vector<int>& symbols);

struct IsoVerification {
    HomCheckResult forward_check;
    HomCheckResult backward_check;
    bool composites_fix_generators = false;
    std::vector<std::string> composite_failures;

    bool ok() const {
        return forward_check.ok && backward_check.ok && composites_fix_generators;
    }
    json to_json() const;
};

IsoVerification verify_iso(const IsoBundle& b);

}  // namespace cgt
