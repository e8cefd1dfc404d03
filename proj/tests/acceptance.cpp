// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Criteria 1 and 8 exercise the installed CLI binary end to end; the rest
// drive the library directly with fixed seeds.

#include "cgt/fiber.hpp"
#include "cgt/instance.hpp"
#include "cgt/matrep.hpp"
#include "cgt/oracle.hpp"
#include "cgt/pipeline.hpp"
#include "cgt/planes.hpp"
#include "cgt/semidir.hpp"
#include "test_util.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace cgt;
using testutil::Rng;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CGT_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {};
    CliResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Presentation twelve_relator_pres() {
    std::vector<Word> rels;
    for (int i = 1; i <= 12; ++i)
        rels.push_back(Word::parse("a b^" + std::to_string(i) + " a b", 2));
    return Presentation({"x1", "x2"}, rels);
}

std::string write_fixture_file() {
    std::string path = "/tmp/cgt_acceptance_h12.json";
    std::ofstream(path) << twelve_relator_pres().to_json().dump() << '\n';
    return path;
}

bool criterion1() {
    std::string f = write_fixture_file();
    CliResult g = run_cli("gens --presentation " + f);
    if (g.code != 0) return false;
    if (json::parse(g.out)["generators"].size() != 14) return false;

    CliResult e = run_cli("emit-iso-instance --presentation " + f +
                          " --target-shape f15 --symbols h1");
    if (e.code != 0) return false;
    json j = json::parse(e.out);
    for (const char* grp : {"Gh", "G1"}) {
        if (j[grp]["generators"].size() != 19) return false;
        if (j[grp]["relators"].size() != 66) return false;
    }
    return true;
}

bool criterion2() {
    Rng rng(1002);
    for (int i = 0; i < 500; ++i) {
        Word w = testutil::random_word(rng, 2, int(rng() % 31));
        auto back = member_F2(eval2(w));
        if (!back || *back != w) return false;
    }
    Mat2 s, t;
    s.at(0, 0) = 1; s.at(0, 1) = 1; s.at(1, 1) = 1; s.at(1, 0) = 0;
    t.at(0, 0) = 1; t.at(1, 0) = 1; t.at(1, 1) = 1; t.at(0, 1) = 0;
    int rejected = 0;
    while (rejected < 100) {
        Mat2 m = Mat2::identity();
        int len = 1 + int(rng() % 10);
        for (int i = 0; i < len; ++i) m = m * ((rng() % 2) ? s : t);
        if (congruent_identity_mod2(m)) continue;
        if (member_F2(m)) return false;
        ++rejected;
    }
    return true;
}

bool criterion3() {
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());
    Rng rng(1003);
    for (int i = 0; i < 200; ++i) {
        auto syms = testutil::random_symbols(rng, g.p(), int(rng() % 13));
        Lemma2Report rep = pipeline_lemma2(g, *o, element_from_symbols(g, syms));
        if (!rep.member || !rep.iso || !rep.iso->ok() || rep.exit_code() != 0) return false;
    }
    return true;
}

bool criterion4() {
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());
    Rng rng(1004);
    for (int i = 0; i < 300; ++i) {
        PairWord a = testutil::random_pair(rng, 8);
        ContainmentReport rep = lemma1_report(g, *o, a);
        if (rep.forward_all() && !(rep.backward_all() && rep.central_witness)) return false;
    }
    return true;
}

bool criterion5() {
    std::vector<Mat4> delta{blockdiag(sanov_A(), sanov_A()), blockdiag(sanov_B(), sanov_B())};
    std::vector<Mat4> fixture;
    for (const auto& h : mihailova_generators(make_oracle("s3")->presentation()).gens)
        fixture.push_back(eval4(h));

    if (commutant(delta).dim() != 4) return false;
    if (commutant(fixture).dim() != 2) return false;

    PlanesReport full = invariant_planes_report(delta);
    if (!full.full_lambda_family || full.commutant_dim != 4) return false;

    PlanesReport two = invariant_planes_report(fixture);
    if (two.full_lambda_family || two.commutant_dim != 2) return false;
    if (two.planes.size() != 2) return false;
    if (!(two.planes[0] == plane_H(LambdaQ::of(0)))) return false;
    if (!(two.planes[1] == plane_H(LambdaQ::infinity()))) return false;
    return true;
}

bool criterion6() {
    Rng rng(1006);
    std::vector<LambdaQ> lambdas{LambdaQ::of(1), LambdaQ::of(-1), LambdaQ::of(2),
                                 LambdaQ::of(Rational(1, 2))};
    for (int i = 0; i < 200; ++i) {
        Word u = testutil::random_word(rng, 2, 1 + int(rng() % 10));
        Word v = (i % 2 == 0) ? u : testutil::random_word(rng, 2, 1 + int(rng() % 10));
        for (const auto& lam : lambdas) {
            bool inv = is_invariant(plane_H(lam), {eval4(PairWord(u, v))});
            if (inv != (u == v)) return false;
        }
    }
    return true;
}

bool criterion7() {
    auto o = make_oracle("s3");
    MihailovaGens g = mihailova_generators(o->presentation());
    Rng rng(1007);
    for (int i = 0; i < 50; ++i) {
        Word d = testutil::random_word(rng, 2, 1 + int(rng() % 8));
        auto syms = testutil::random_symbols(rng, g.p(), int(rng() % 11));
        ElementInput h = element_from_symbols(g, syms);
        ThreeToOneReport rep = pipeline_3to1(g, *o, h, eval4(PairWord(d, d)));
        if (!rep.k || *rep.k != 1 || !rep.lemma1_equality) return false;
        if (!rep.member_h || !rep.consistent || rep.exit_code() != 0) return false;
    }

    Mat4 swap;
    swap.at(0, 2) = 1; swap.at(1, 3) = 1; swap.at(2, 0) = 1; swap.at(3, 1) = 1;
    if (decomposition_verdict(swap) != DecompositionVerdict::Swaps) return false;
    if (!is_block_diagonal(swap * swap)) return false;
    return true;
}

bool criterion8() {
    std::string f = write_fixture_file();
    std::vector<std::string> cmds{
        "gens --oracle s3",
        "gens --presentation " + f,
        "emit-iso-instance --oracle s3 --symbols \"h1 h4^-1\"",
        "emit-iso-instance --presentation " + f + " --symbols h1 --pretty",
        "emit-conj-instance --oracle s3 --left \"a b\" --right \"a b\"",
        "iso-witness --oracle s3 --symbols \"h2 h3\"",
    };
    for (const auto& c : cmds) {
        CliResult a = run_cli(c), b = run_cli(c);
        if (a.code != 0 || b.code != 0) return false;
        if (a.out.empty() || a.out != b.out) return false;
    }
    return true;
}

struct Criterion {
    const char* label;
    double limit_s;  // 0: no limit pinned
    bool (*fn)();
};

}  // namespace

int main() {
    const Criterion table[] = {
        {"generator counts (14; 19/66 shape) via CLI", 1.0, criterion1},
        {"sanov round trip, 500 words <=30 + 100 rejects", 10.0, criterion2},
        {"lemma 2 constructive suite, 200 symbol words <=12", 60.0, criterion3},
        {"lemma 1 property suite, 300 pairs <=8", 30.0, criterion4},
        {"plane classification, commutant dims 4 and 2", 5.0, criterion5},
        {"stabilizer law, lambda in {1,-1,2,1/2} x 200 pairs", 0.0, criterion6},
        {"3=>1 certificate pipeline, 50 diagonal conjugators", 30.0, criterion7},
        {"emitter determinism, byte-identical reruns", 0.0, criterion8},
    };

    int failures = 0;
    for (int i = 0; i < 8; ++i) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = table[i].fn();
        } catch (const std::exception& e) {
            std::cout << "criterion " << (i + 1) << ": exception: " << e.what() << '\n';
            ok = false;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        bool in_time = table[i].limit_s == 0.0 || secs < table[i].limit_s;
        bool pass = ok && in_time;
        failures += !pass;

        char timing[64];
        if (table[i].limit_s > 0)
            std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, table[i].limit_s);
        else
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << (i + 1) << ": " << (pass ? "PASS" : "FAIL") << " ("
                  << timing << ") " << table[i].label;
        if (ok && !in_time) std::cout << " [over time limit]";
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : "FAILURES PRESENT") << '\n';
    return failures == 0 ? 0 : 1;
}
