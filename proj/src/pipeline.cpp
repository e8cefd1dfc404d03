#include "cgt/pipeline.hpp"

namespace cgt {

json Lemma2Report::to_json() const {
    json j;
    j["member"] = member;
    if (member) {
        json w;
        w["found"] = witness_symbols.has_value();
        w["source"] = witness_source;
        w["depth"] = witness_depth;
        if (witness_symbols) w["symbols"] = *witness_symbols;
        j["witness"] = std::move(w);
        if (iso) j["iso"] = iso->to_json();
    } else {
        j["nonmember_confirmation"] = {
            {"bounded", true},
            {"depth", nonmember_checked_depth.value_or(0)},
            {"expressible_within_depth", nonmember_expressible},
        };
        if (lemma1_diagnostics) j["lemma1_sample"] = *lemma1_diagnostics;
    }
    j["consistent"] = consistent;
    return j;
}

int Lemma2Report::exit_code() const {
    if (!consistent) return 3;
    if (!member) return 3;
    if (!witness_symbols) return 2;
    return 0;
}

Lemma2Report pipeline_lemma2(const MihailovaGens& g, const QuotientOracle& o,
                             const ElementInput& h, int express_depth, int nonmember_depth) {
    Lemma2Report rep;
    rep.member = member_L(o, h.pair);

    if (rep.member) {
        std::optional<std::vector<int>> symbols;
        if (h.symbols) {
            symbols = *h.symbols;
            rep.witness_source = "input";
            rep.witness_depth = static_cast<int>(symbols->size());
            if (eval_symbols(g, *symbols) != h.pair)
                throw std::logic_error("symbol input does not evaluate to its own pair");
        } else {
            auto found = express_in_generators(g, o, h.pair, express_depth);
            rep.witness_source = "search";
            rep.witness_depth = found.depth;
            symbols = std::move(found.symbols);
        }
        if (symbols) {
            rep.witness_symbols = symbols_str(*symbols);
            rep.iso = verify_iso(iso_witness(g, *symbols));
            rep.consistent = rep.iso->ok();
        } else {
            // witness bound exhausted: inconclusive but not contradictory
            rep.consistent = true;
        }
    } else {
        auto hit = express_search(g, h.pair, nonmember_depth);
        rep.nonmember_checked_depth = nonmember_depth;
        rep.nonmember_expressible = hit.has_value();
        rep.lemma1_diagnostics = lemma1_report(g, o, h.pair).to_json();
        rep.consistent = !rep.nonmember_expressible;
    }
    return rep;
}

json ThreeToOneReport::to_json() const {
    json j;
    j["decomposition_verdict"] = verdict_name(verdict);
    j["refuted"] = refuted;
    if (refuted) j["refutation"] = refutation;
    j["inconclusive"] = inconclusive;
    if (k) j["k"] = int_to_json(*k);
    if (recovered)
        j["recovered_pair"] = {{"left", recovered->left.str()},
                               {"right", recovered->right.str()}};
    if (lemma1) j["lemma1"] = *lemma1;
    j["lemma1_equality"] = lemma1_equality;
    j["member_h"] = member_h;
    j["consistent"] = consistent;
    return j;
}

int ThreeToOneReport::exit_code() const {
    if (refuted) return 3;
    if (inconclusive) return 2;
    return consistent ? 0 : 3;
}

ThreeToOneReport pipeline_3to1(const MihailovaGens& g, const QuotientOracle& o,
                               const ElementInput& h, const Mat4& conj, int power_bound) {
    ThreeToOneReport rep;
    rep.member_h = member_L(o, h.pair);
    rep.verdict = decomposition_verdict(conj);

    if (rep.verdict == DecompositionVerdict::Neither) {
        rep.refuted = true;
        rep.refutation = "conjugator neither preserves nor swaps the coordinate 2-planes";
        return rep;
    }

    auto power = power_into_F2xF2(conj, power_bound);
    if (!power) {
        rep.inconclusive = true;
        return rep;
    }
    rep.k = power->k;
    rep.recovered = power->pair;

    ContainmentReport l1 = lemma1_report(g, o, power->pair);
    rep.lemma1 = l1.to_json();
    rep.lemma1_equality = l1.forward_all() && l1.backward_all();
    if (!rep.lemma1_equality) {
        rep.refuted = true;
        rep.refutation = "recovered power does not conjugate the generators into L";
        return rep;
    }

    // the hypothesis forces h into L; the oracle has the last word
    rep.consistent = rep.member_h;
    if (!rep.consistent) {
        rep.refuted = true;
        rep.refutation = "certificate would imply membership but the oracle refutes it";
    }
    return rep;
}

}  // namespace cgt
