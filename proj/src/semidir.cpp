#include "cgt/semidir.hpp"

#include "cgt/matrep.hpp"

#include <sstream>
#include <utility>

namespace cgt {

json ActionSpec::to_json() const {
    json arr = json::array();
    for (const auto& m : matrices) arr.push_back(matrix_to_json(m));
    return arr;
}

ActionSpec ActionSpec::from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("action spec needs a nonempty matrix array");
    ActionSpec spec;
    for (const auto& m : j) spec.matrices.push_back(matrix_from_json<4>(m));
    return spec;
}

std::string SemiElem::str() const {
    std::ostringstream os;
    os << "([";
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << v[i];
    os << "], " << w.str() << ")";
    return os.str();
}

SemidirectGroup::SemidirectGroup(ActionSpec spec) : spec_(std::move(spec)) {
    if (spec_.matrices.empty())
        throw std::invalid_argument("action spec needs at least the stable letter t");
    for (const auto& m : spec_.matrices) {
        Int d = det(m);
        if (d != 1 && d != -1)
            throw std::domain_error("action matrices must be unimodular");
    }
}

bool SemidirectGroup::is_identity(const SemiElem& x) const {
    return x.w.empty() && x.v == Vec4{};
}

Mat4 SemidirectGroup::phi(const Word& w) const {
    if (w.rank() != free_rank())
        throw std::invalid_argument("word rank does not match the action");
    Mat4 acc = Mat4::identity();
    for (const auto& r : w.runs()) acc = acc * mat_pow(spec_.matrices[r.gen - 1], r.exp);
    return acc;
}

SemiElem SemidirectGroup::mul(const SemiElem& x, const SemiElem& y) const {
    Vec4 shifted = mat_vec(phi(x.w), y.v);
    Vec4 v;
    for (int i = 0; i < 4; ++i) v[i] = x.v[i] + shifted[i];
    return SemiElem(std::move(v), x.w * y.w);
}

SemiElem SemidirectGroup::inv(const SemiElem& x) const {
    Word winv = x.w.inverse();
    Vec4 v = mat_vec(phi(winv), x.v);
    for (auto& c : v) c = -c;
    return SemiElem(std::move(v), std::move(winv));
}

Presentation SemidirectGroup::presentation() const {
    int p = spec_.p();
    int rank = 5 + p;
    std::vector<std::string> names;
    for (int i = 1; i <= 4; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 1; j <= p; ++j) names.push_back("t" + std::to_string(j));
    names.push_back("t");

    std::vector<Word> rels;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            rels.push_back(Word::from_runs(rank, {{i, 1}, {j, 1}, {i, -1}, {j, -1}}));

    for (int s = 0; s <= p; ++s) {
        int letter = 5 + s;
        const Mat4& m = spec_.matrices[s];
        for (int i = 1; i <= 4; ++i) {
            std::vector<Run> runs{{letter, 1}, {i, 1}, {letter, -1}};
            for (int row = 4; row >= 1; --row) {
                const Int& entry = m.at(row - 1, i - 1);  // column i acts on a_i
                if (entry != 0) runs.push_back(Run{row, -entry});
            }
            rels.push_back(Word::from_runs(rank, std::move(runs)));
        }
    }
    return Presentation(std::move(names), std::move(rels));
}

SemiElem SemidirectGroup::presentation_generator(int index) const {
    int rank = free_rank();
    if (index < 1 || index > 4 + rank)
        throw std::invalid_argument("presentation generator index out of range");
    SemiElem e(rank);
    if (index <= 4)
        e.v[index - 1] = 1;
    else
        e.w = Word::generator(rank, index - 4);
    return e;
}

SemiElem SemidirectGroup::eval(const Word& presentation_word) const {
    int q = free_rank();
    if (presentation_word.rank() != 4 + q)
        throw std::invalid_argument("word rank does not match the presentation");
    SemiElem acc(q);
    Mat4 phi_acc = Mat4::identity();
    for (const auto& r : presentation_word.runs()) {
        if (r.gen <= 4) {
            // translation block: v += Phi(w) * (exp * e_gen), one column pick
            for (int i = 0; i < 4; ++i) acc.v[i] += phi_acc.at(i, r.gen - 1) * r.exp;
        } else {
            acc.w = acc.w * Word::generator(q, r.gen - 4, r.exp);
            phi_acc = phi_acc * mat_pow(spec_.matrices[r.gen - 5], r.exp);
        }
    }
    return acc;
}

json HomWitness::to_json(const Presentation& src, const Presentation& tgt) const {
    if (images.size() != src.generators.size())
        throw std::invalid_argument("witness image count does not match the source");
    json j;
    for (std::size_t i = 0; i < images.size(); ++i)
        j[src.generators[i]] = images[i].str_named(tgt.generators);
    return j;
}

HomWitness HomWitness::from_json(const json& j, const Presentation& src,
                                 const Presentation& tgt) {
    HomWitness w;
    for (const auto& name : src.generators) {
        const json& img = require_field(j, name);
        w.images.push_back(Word::parse_named(img.get<std::string>(), tgt.generators));
    }
    return w;
}

Word substitute(const Word& src_word, const HomWitness& w, int tgt_rank) {
    Word acc(tgt_rank);
    for (const auto& r : src_word.runs()) {
        if (r.gen > static_cast<int>(w.images.size()))
            throw std::invalid_argument("witness has no image for a generator");
        acc = acc * w.images[r.gen - 1].pow(r.exp);
    }
    return acc;
}

json HomCheckResult::to_json() const {
    json j;
    j["ok"] = ok;
    j["violated_relators"] = violated;
    return j;
}

HomCheckResult verify_hom(const Presentation& src, const SemidirectGroup& tgt,
                          const HomWitness& w) {
    if (w.images.size() != src.generators.size())
        throw std::invalid_argument("witness image count does not match the source");
    HomCheckResult res;
    for (const auto& rel : src.relators) {
        Word image = substitute(rel, w, 4 + tgt.free_rank());
        if (!tgt.is_identity(tgt.eval(image))) {
            res.ok = false;
            res.violated.push_back(src.word_str(rel));
        }
    }
    return res;
}

namespace {

// t -> w(t_i^{+-1}) t with h_i symbols renamed to the stable letters t_i.
Word stable_image(const std::vector<int>& symbols, int pres_rank, bool invert_prefix) {
    std::vector<Run> runs;
    for (int s : symbols) runs.push_back(Run{4 + std::abs(s), s > 0 ? 1 : -1});
    Word prefix = Word::from_runs(pres_rank, std::move(runs));
    if (invert_prefix) prefix = prefix.inverse();
    return prefix * Word::generator(pres_rank, pres_rank);
}

}  // namespace

IsoBundle iso_witness(const MihailovaGens& gens, const std::vector<int>& symbols) {
    int p = gens.p();
    ActionSpec act_h, act_1;
    for (const auto& g : gens.gens) {
        act_h.matrices.push_back(eval4(g));
        act_1.matrices.push_back(act_h.matrices.back());
    }
    act_h.matrices.push_back(eval4(eval_symbols(gens, symbols)));
    act_1.matrices.push_back(Mat4::identity());

    SemidirectGroup gh(act_h), g1(act_1);

    IsoBundle b{gens.source, symbols_str(symbols), gh.presentation(), g1.presentation(),
                std::move(act_h), std::move(act_1), {}, {}};

    int rank = 5 + p;
    for (int i = 1; i < rank; ++i) {
        b.forward.images.push_back(Word::generator(rank, i));
        b.backward.images.push_back(Word::generator(rank, i));
    }
    b.forward.images.push_back(stable_image(symbols, rank, false));
    b.backward.images.push_back(stable_image(symbols, rank, true));
    return b;
}

json IsoBundle::to_json() const {
    json j;
    j["provenance"] = {{"H", H.to_json()}, {"h_symbols", h_symbols}, {"chart", chart_name()}};
    j["p"] = act_h.p();
    j["Gh"] = pres_h.to_json();
    j["G1"] = pres_1.to_json();
    j["action_Gh"] = act_h.to_json();
    j["action_G1"] = act_1.to_json();
    j["forward"] = forward.to_json(pres_h, pres_1);
    j["backward"] = backward.to_json(pres_1, pres_h);
    return j;
}

IsoBundle IsoBundle::from_json(const json& j) {
    const json& prov = require_field(j, "provenance");
    IsoBundle b{Presentation::from_json(require_field(prov, "H")),
                require_field(prov, "h_symbols").get<std::string>(),
                Presentation::from_json(require_field(j, "Gh")),
                Presentation::from_json(require_field(j, "G1")),
                ActionSpec::from_json(require_field(j, "action_Gh")),
                ActionSpec::from_json(require_field(j, "action_G1")),
                {},
                {}};
    b.forward = HomWitness::from_json(require_field(j, "forward"), b.pres_h, b.pres_1);
    b.backward = HomWitness::from_json(require_field(j, "backward"), b.pres_1, b.pres_h);
    return b;
}

json IsoVerification::to_json() const {
    json j;
    j["forward"] = forward_check.to_json();
    j["backward"] = backward_check.to_json();
    j["composites_fix_generators"] = composites_fix_generators;
    j["composite_failures"] = composite_failures;
    j["ok"] = ok();
    return j;
}

IsoVerification verify_iso(const IsoBundle& b) {
    SemidirectGroup gh(b.act_h), g1(b.act_1);
    IsoVerification v;
    v.forward_check = verify_hom(b.pres_h, g1, b.forward);
    v.backward_check = verify_hom(b.pres_1, gh, b.backward);

    v.composites_fix_generators = true;
    int rank = 5 + b.act_h.p();
    for (int i = 1; i <= rank; ++i) {
        Word gen = Word::generator(rank, i);
        Word round_h = substitute(substitute(gen, b.forward, rank), b.backward, rank);
        Word round_1 = substitute(substitute(gen, b.backward, rank), b.forward, rank);
        bool ok_h = gh.eval(round_h) == gh.presentation_generator(i);
        bool ok_1 = g1.eval(round_1) == g1.presentation_generator(i);
        if (!ok_h || !ok_1) {
            v.composites_fix_generators = false;
            v.composite_failures.push_back(b.pres_h.generators[i - 1]);
        }
    }
    return v;
}

}  // namespace cgt
