#include "cgt/fiber.hpp"
#include "cgt/instance.hpp"
#include "cgt/jsonutil.hpp"
#include "cgt/matrep.hpp"
#include "cgt/oracle.hpp"
#include "cgt/pipeline.hpp"
#include "cgt/planes.hpp"
#include "cgt/semidir.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace cgt;

bool g_pretty = false;

void emit(const json& j) {
    if (g_pretty)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << j.dump() << '\n';
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    return json::parse(in);
}

// H comes from a presentation file or from a fixture's canonical presentation.
Presentation load_H(const std::string& pres_file, const std::string& oracle_name) {
    if (!pres_file.empty() && !oracle_name.empty())
        throw std::invalid_argument("give either --presentation or --oracle, not both");
    if (!pres_file.empty()) return Presentation::from_json(load_json(pres_file));
    if (!oracle_name.empty()) return make_oracle(oracle_name)->presentation();
    throw std::invalid_argument("a presentation is needed: --presentation FILE or --oracle NAME");
}

ElementInput parse_element(const MihailovaGens& g, const std::string& symbols,
                           const std::string& left, const std::string& right) {
    if (!symbols.empty()) {
        if (!left.empty() || !right.empty())
            throw std::invalid_argument("give the element as --symbols or --left/--right, not both");
        return element_from_symbols(g, parse_symbols(symbols, g.p()));
    }
    if (left.empty() && right.empty())
        throw std::invalid_argument("an element is needed: --symbols or --left/--right");
    return element_from_pair(PairWord(Word::parse(left.empty() ? "1" : left, 2),
                                      Word::parse(right.empty() ? "1" : right, 2)));
}

std::vector<Mat4> load_matrix_list(const std::string& path) {
    json j = load_json(path);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a nonempty JSON array of matrices");
    std::vector<Mat4> ms;
    for (const auto& m : j) {
        ms.push_back(matrix_from_json<4>(m));
        Int d = det(ms.back());
        if (d != 1 && d != -1)
            throw std::invalid_argument("matrix in '" + path + "' is not unimodular");
    }
    return ms;
}

void check_target_shape(const std::string& shape, const Presentation& H) {
    if (shape.empty()) return;
    if (shape != "f15")
        throw std::invalid_argument("unknown --target-shape '" + shape + "' (only f15)");
    if (H.relator_count() != 12)
        throw std::invalid_argument(
            "--target-shape f15 needs a 12-relator presentation, got " +
            std::to_string(H.relator_count()) + " relators");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for fiber-product subgroups, their matrix picture, and the"
                 " gadget groups Z^4 x| F_{p+1}"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent the JSON output");

    int exit_code = 0;

    std::string pres_file, oracle_name, symbols, left, right, matrix_file, bundle_file;
    std::string lambda_arg, set_arg, matrices_file, target_shape;
    int depth = kDefaultExpressDepth;
    int nonmember_depth = kDefaultNonMemberDepth;
    int power_bound = kDefaultPowerBound;

    auto add_H = [&](CLI::App* sub) {
        sub->add_option("--presentation", pres_file, "presentation JSON file for H");
        sub->add_option("--oracle", oracle_name, "fixture oracle: s3, zsq or free");
    };
    auto add_oracle = [&](CLI::App* sub) {
        sub->add_option("--oracle", oracle_name, "fixture oracle: s3, zsq or free")
            ->required();
    };
    auto add_element = [&](CLI::App* sub) {
        sub->add_option("--symbols", symbols, "element as a symbol word, e.g. 'h1 h4^-1'");
        sub->add_option("--left", left, "left component as a rank-2 word, e.g. 'a b A'");
        sub->add_option("--right", right, "right component as a rank-2 word");
    };

    auto* gens_cmd = app.add_subcommand("gens", "list the generators of L for H");
    add_H(gens_cmd);
    gens_cmd->callback([&] {
        emit(mihailova_generators(load_H(pres_file, oracle_name)).to_json());
    });

    auto* member_cmd = app.add_subcommand("member", "decide membership of a pair in L");
    add_oracle(member_cmd);
    add_element(member_cmd);
    member_cmd->callback([&] {
        auto oracle = make_oracle(oracle_name);
        auto gens = mihailova_generators(oracle->presentation());
        ElementInput h = parse_element(gens, symbols, left, right);
        bool member = member_L(*oracle, h.pair);
        emit(json{{"member", member},
                  {"left_token", oracle->apply(h.pair.left)},
                  {"right_token", oracle->apply(h.pair.right)}});
        exit_code = member ? 0 : 3;
    });

    auto* express_cmd = app.add_subcommand("express", "write a member of L as a symbol word");
    add_oracle(express_cmd);
    add_element(express_cmd);
    express_cmd->add_option("--depth", depth, "search bound on witness length");
    express_cmd->callback([&] {
        auto oracle = make_oracle(oracle_name);
        auto gens = mihailova_generators(oracle->presentation());
        ElementInput h = parse_element(gens, symbols, left, right);
        auto res = express_in_generators(gens, *oracle, h.pair, depth);
        if (res.symbols) {
            emit(json{{"found", true}, {"symbols", symbols_str(*res.symbols)},
                      {"depth", res.depth}});
        } else {
            emit(json{{"found", false}, {"depth", res.depth},
                      {"note", "bounded search only; not a proof of non-expressibility"}});
            exit_code = 2;
        }
    });

    auto* emit_iso = app.add_subcommand("emit-iso-instance",
                                        "emit the presentation-pair instance (G_h, G_1)");
    add_H(emit_iso);
    add_element(emit_iso);
    emit_iso->add_option("--target-shape", target_shape,
                         "validate the gadget shape: f15 needs 12 relators");
    emit_iso->callback([&] {
        Presentation H = load_H(pres_file, oracle_name);
        check_target_shape(target_shape, H);
        auto gens = mihailova_generators(H);
        emit(emit_instance(H, parse_element(gens, symbols, left, right)).theorem1_json());
    });

    auto* emit_conj = app.add_subcommand("emit-conj-instance",
                                         "emit the matrix-subset-pair instance");
    add_H(emit_conj);
    add_element(emit_conj);
    emit_conj->callback([&] {
        Presentation H = load_H(pres_file, oracle_name);
        auto gens = mihailova_generators(H);
        emit(emit_instance(H, parse_element(gens, symbols, left, right)).theorem2_json());
    });

    auto* witness_cmd = app.add_subcommand(
        "iso-witness", "build the G_h -> G_1 isomorphism witness for a symbol word");
    add_H(witness_cmd);
    witness_cmd->add_option("--symbols", symbols, "h as a symbol word over the generators")
        ->required();
    witness_cmd->callback([&] {
        Presentation H = load_H(pres_file, oracle_name);
        auto gens = mihailova_generators(H);
        emit(iso_witness(gens, parse_symbols(symbols, gens.p())).to_json());
    });

    auto* verify_cmd = app.add_subcommand("verify", "re-verify an isomorphism witness bundle");
    verify_cmd->add_option("--bundle", bundle_file, "bundle file from iso-witness")->required();
    verify_cmd->callback([&] {
        auto verification = verify_iso(IsoBundle::from_json(load_json(bundle_file)));
        emit(verification.to_json());
        exit_code = verification.ok() ? 0 : 3;
    });

    auto* planes_cmd = app.add_subcommand("planes", "planes H_lambda and their stabilizer data");
    planes_cmd->add_option("--lambda", lambda_arg, "print the plane H_lambda (rational or inf)");
    planes_cmd->add_option("--set", set_arg, "classify invariant planes of: delta or L");
    planes_cmd->add_option("--oracle", oracle_name, "fixture for --set L");
    planes_cmd->add_option("--matrices", matrices_file, "classify a matrix list from a file");
    planes_cmd->callback([&] {
        int modes = (!lambda_arg.empty()) + (!set_arg.empty()) + (!matrices_file.empty());
        if (modes != 1)
            throw std::invalid_argument("give exactly one of --lambda, --set, --matrices");
        if (!lambda_arg.empty()) {
            emit(plane_H(LambdaQ::parse(lambda_arg)).to_json());
            return;
        }
        std::vector<Mat4> ms;
        if (set_arg == "delta") {
            ms = {blockdiag(sanov_A(), sanov_A()), blockdiag(sanov_B(), sanov_B())};
        } else if (set_arg == "L") {
            if (oracle_name.empty())
                throw std::invalid_argument("--set L needs --oracle");
            for (const auto& g :
                 mihailova_generators(make_oracle(oracle_name)->presentation()).gens)
                ms.push_back(eval4(g));
        } else if (!set_arg.empty()) {
            throw std::invalid_argument("unknown --set '" + set_arg + "' (delta or L)");
        } else {
            ms = load_matrix_list(matrices_file);
        }
        emit(invariant_planes_report(ms).to_json());
    });

    auto* power_cmd = app.add_subcommand("power",
                                         "find the least power of g inside the embedded F2xF2");
    power_cmd->add_option("--matrix", matrix_file, "4x4 matrix JSON file")->required();
    power_cmd->add_option("--power-bound", power_bound, "largest exponent tried");
    power_cmd->callback([&] {
        Mat4 g = matrix_from_json<4>(load_json(matrix_file));
        auto res = power_into_F2xF2(g, power_bound);
        if (res) {
            emit(json{{"found", true}, {"k", int_to_json(res->k)},
                      {"left", res->pair.left.str()}, {"right", res->pair.right.str()}});
        } else {
            emit(json{{"found", false}, {"bound", power_bound},
                      {"note", "bound exhausted; inconclusive"}});
            exit_code = 2;
        }
    });

    auto* lemma2_cmd = app.add_subcommand("pipeline-lemma2",
                                          "run the constructive equivalence pipeline for h");
    add_oracle(lemma2_cmd);
    add_element(lemma2_cmd);
    lemma2_cmd->add_option("--depth", depth, "witness search bound for raw-pair input");
    lemma2_cmd->add_option("--nonmember-depth", nonmember_depth,
                           "bounded confirmation depth on the negative branch");
    lemma2_cmd->callback([&] {
        auto oracle = make_oracle(oracle_name);
        auto gens = mihailova_generators(oracle->presentation());
        ElementInput h = parse_element(gens, symbols, left, right);
        auto rep = pipeline_lemma2(gens, *oracle, h, depth, nonmember_depth);
        emit(rep.to_json());
        exit_code = rep.exit_code();
    });

    auto* three_cmd = app.add_subcommand("pipeline-3to1",
                                         "check a conjugacy certificate for <L,h> vs L");
    add_oracle(three_cmd);
    add_element(three_cmd);
    three_cmd->add_option("--matrix", matrix_file, "conjugator g as a 4x4 matrix JSON file")
        ->required();
    three_cmd->add_option("--power-bound", power_bound, "largest exponent tried for g");
    three_cmd->callback([&] {
        auto oracle = make_oracle(oracle_name);
        auto gens = mihailova_generators(oracle->presentation());
        ElementInput h = parse_element(gens, symbols, left, right);
        Mat4 g = matrix_from_json<4>(load_json(matrix_file));
        auto rep = pipeline_3to1(gens, *oracle, h, g, power_bound);
        emit(rep.to_json());
        exit_code = rep.exit_code();
    });

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const NotAMember& e) {
        emit(json{{"error", e.what()}});
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        emit(json{{"error", e.what()}});
        return 1;
    }
    return exit_code;
}
