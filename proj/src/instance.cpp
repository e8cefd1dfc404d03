#include "cgt/instance.hpp"

#include "cgt/matrep.hpp"

#include <utility>

namespace cgt {

json ElementInput::provenance_json() const {
    if (symbols) return json{{"symbols", symbols_str(*symbols)}};
    return json{{"left", pair.left.str()}, {"right", pair.right.str()}};
}

ElementInput element_from_symbols(const MihailovaGens& g, std::vector<int> symbols) {
    PairWord p = eval_symbols(g, symbols);
    return ElementInput{std::move(symbols), std::move(p)};
}

ElementInput element_from_pair(PairWord p) {
    return ElementInput{std::nullopt, std::move(p)};
}

InstanceBundle emit_instance(const Presentation& H, const ElementInput& h) {
    InstanceBundle b{H, mihailova_generators(H), h, Presentation{}, Presentation{},
                     {},  {},                    {}, {}};

    for (const auto& g : b.gens.gens) b.theorem2_base.push_back(eval4(g));
    b.theorem2_with_h = b.theorem2_base;
    b.theorem2_with_h.push_back(eval4(h.pair));

    b.act_h.matrices = b.theorem2_with_h;
    b.act_1.matrices = b.theorem2_base;
    b.act_1.matrices.push_back(Mat4::identity());

    b.pres_h = SemidirectGroup(b.act_h).presentation();
    b.pres_1 = SemidirectGroup(b.act_1).presentation();
    return b;
}

namespace {

json provenance(const InstanceBundle& b) {
    return json{{"H", b.H.to_json()}, {"h", b.h.provenance_json()}, {"chart", chart_name()}};
}

}  // namespace

json InstanceBundle::theorem1_json() const {
    json j;
    j["provenance"] = provenance(*this);
    j["Gh"] = pres_h.to_json();
    j["G1"] = pres_1.to_json();
    return j;
}

json InstanceBundle::theorem2_json() const {
    json j;
    j["provenance"] = provenance(*this);
    json base = json::array();
    for (const auto& m : theorem2_base) base.push_back(matrix_to_json(m));
    json with_h = json::array();
    for (const auto& m : theorem2_with_h) with_h.push_back(matrix_to_json(m));
    j["base"] = std::move(base);
    j["with_h"] = std::move(with_h);
    return j;
}

}  // namespace cgt
