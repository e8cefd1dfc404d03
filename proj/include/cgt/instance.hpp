#pragma once

#include "cgt/fiber.hpp"
#include "cgt/semidir.hpp"

#include <optional>
#include <vector>

namespace cgt {

/// The element h feeding an instance, as the user gave it: either a symbol
/// word over the Mihailova generators or a raw pair of rank-2 words. The
/// evaluated pair is always available.
struct ElementInput {
    std::optional<std::vector<int>> symbols;
    PairWord pair;

    json provenance_json() const;
};

ElementInput element_from_symbols(const MihailovaGens& g, std::vector<int> symbols);
ElementInput element_from_pair(PairWord p);

/// Everything both gadget families derive from (H, h): the two presented
/// groups that agree iff h is in L, and the two matrix subsets that are
/// conjugate iff h is in L.
struct InstanceBundle {
    Presentation H;
    MihailovaGens gens;
    ElementInput h;
    Presentation pres_h;
    Presentation pres_1;
    ActionSpec act_h;
    ActionSpec act_1;
    std::vector<Mat4> theorem2_base;    // eval4 of the generators
    std::vector<Mat4> theorem2_with_h;  // the same list with eval4(h) appended

    json theorem1_json() const;  // the presentation-pair instance
    json theorem2_json() const;  // the matrix-subset-pair instance
};

InstanceBundle emit_instance(const Presentation& H, const ElementInput& h);

}  // namespace cgt
