// Command-line surface for the exceptional-sequence toolkit: conversions
// between the object formats, enumeration, braid actions, statistics and the
// exhaustive verification suites. See FORMATS.md for the exact grammars.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "excseq/bijections.hpp"
#include "excseq/cluster.hpp"
#include "excseq/exceptional_sequence.hpp"
#include "excseq/forest.hpp"
#include "excseq/formats.hpp"
#include "excseq/genfun.hpp"
#include "excseq/verify.hpp"

namespace {

using namespace excseq;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::string read_payload(const std::string& arg) {
    if (!arg.empty()) return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    std::string s = buf.str();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

bool looks_like_json(const std::string& s) {
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '[' || c == '{';
    }
    return false;
}

// every convert route passes through a complete exceptional sequence
ExceptionalSequence payload_to_ces(const std::string& from, const std::string& payload) {
    if (from == "ces") {
        ExceptionalSequence seq;
        if (looks_like_json(payload)) {
            nlohmann::json j = nlohmann::json::parse(payload);
            std::vector<IntervalModule> mods;
            const int n = static_cast<int>(j.size());
            for (const auto& item : j)
                mods.emplace_back(item.at("a").get<int>(), item.at("b").get<int>(), n);
            seq = ExceptionalSequence(std::move(mods));
        } else {
            seq = parse_ces(payload);
        }
        // name the first violated vanishing condition
        for (std::size_t i = 0; i < seq.objects.size(); ++i)
            for (std::size_t j = i + 1; j < seq.objects.size(); ++j) {
                if (hom_dim(seq.objects[j], seq.objects[i]) != 0)
                    throw std::invalid_argument(
                        "not an exceptional sequence: Hom(E" + std::to_string(j + 1) + ",E" +
                        std::to_string(i + 1) + ") != 0");
                if (ext_dim(seq.objects[j], seq.objects[i]) != 0)
                    throw std::invalid_argument(
                        "not an exceptional sequence: Ext(E" + std::to_string(j + 1) + ",E" +
                        std::to_string(i + 1) + ") != 0");
            }
        return seq;
    }
    if (from == "forest") {
        const auto f = looks_like_json(payload)
                           ? parse_forest_json(payload)
                           : RootedLabeledForest(
                                 static_cast<int>(parse_int_list(payload, ',').size()),
                                 parse_int_list(payload, ','));
        return forest_to_ces(f);
    }
    if (from == "parking") {
        const auto p = looks_like_json(payload)
                           ? nlohmann::json::parse(payload).get<std::vector<int>>()
                           : parse_int_list(payload, ',');
        if (!is_parking_function(p))
            throw std::invalid_argument("payload violates the parking property");
        return parking_to_ces(p);
    }
    if (from == "prufer") {
        const auto code = looks_like_json(payload)
                              ? nlohmann::json::parse(payload).get<std::vector<int>>()
                              : parse_prufer(payload);
        return forest_to_ces(prufer_decode(code, static_cast<int>(code.size()) + 1));
    }
    if (from == "factorization") {
        TranspositionFactorization fac;
        if (looks_like_json(payload)) {
            for (const auto& pair :
                 nlohmann::json::parse(payload).get<std::vector<std::vector<int>>>()) {
                if (pair.size() != 2)
                    throw std::invalid_argument("factorization pairs must have two entries");
                fac.emplace_back(pair[0], pair[1]);
            }
        } else {
            fac = parse_factorization(payload);
        }
        return factorization_to_ces(fac);
    }
    throw CLI::ValidationError("--from", "unknown format: " + from);
}

std::string ces_to_payload(const std::string& to, const ExceptionalSequence& seq, bool json) {
    if (to == "ces") return json ? render_ces_json(seq) : render_ces(seq);
    if (to == "forest") return render_forest_json(ces_to_forest(seq));
    if (to == "parking") {
        const auto p = ces_tops(seq);
        return json ? nlohmann::json(p).dump() : render_parking(p);
    }
    if (to == "prufer") {
        const auto code = prufer_encode(ces_to_forest(seq));
        return json ? nlohmann::json(code).dump() : render_prufer(code);
    }
    if (to == "factorization") {
        const auto fac = ces_to_factorization(seq);
        if (!json) return render_factorization(fac);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [x, y] : fac) arr.push_back(nlohmann::json::array({x, y}));
        return arr.dump();
    }
    if (to == "dot") return forest_to_dot(ces_to_forest(seq));
    throw CLI::ValidationError("--to", "unknown format: " + to);
}

int run_verify(const std::string& suite, int n, bool force) {
    static const std::map<std::string, int> caps{
        {"homext", 5},  {"bijection", 7}, {"equivariance", 5}, {"braid-relations", 5},
        {"delta", 6},   {"garside", 5},   {"genfun", 7},       {"clusters", 6},
        {"parking", 5}, {"prufer", 6},    {"factorization", 6}};
    const auto cap = caps.find(suite);
    if (cap == caps.end()) {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }
    if (n < 1) {
        std::cerr << "n must be >= 1\n";
        return kExitUsage;
    }
    if (n > cap->second && !force) {
        std::cerr << "suite '" << suite << "' is capped at n=" << cap->second
                  << " (use --force to override)\n";
        return kExitUsage;
    }
    const auto rep = verify::run_suite(suite, n);
    nlohmann::json out;
    out["suite"] = suite;
    out["n"] = n;
    out["pass"] = rep.pass;
    out["checks"] = rep.checks;
    out["first_counterexample"] = rep.pass ? nlohmann::json() : nlohmann::json(rep.failure);
    std::cout << out.dump() << "\n";
    return rep.pass ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exceptional sequences, forests and parking functions for linear A_n"};
    app.require_subcommand(1);

    // convert
    std::string from, to, payload;
    bool as_json = false;
    auto* convert = app.add_subcommand("convert", "convert between object formats");
    convert->add_option("--from", from, "forest|ces|parking|prufer|factorization")->required();
    convert->add_option("--to", to, "forest|ces|parking|prufer|factorization|dot")->required();
    convert->add_flag("--json", as_json, "emit JSON instead of the text shorthand");
    convert->add_option("payload", payload, "input payload (stdin when omitted)");

    // enumerate
    std::string kind;
    int en_n = 1;
    bool count_only = false;
    bool en_json = false;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate objects of a given rank");
    enumerate->add_option("--kind", kind, "ces|forest|parking|cluster")->required();
    enumerate->add_option("--n", en_n, "quiver rank")->required();
    enumerate->add_flag("--count", count_only, "print only the number of objects");
    enumerate->add_flag("--json", en_json, "emit JSON lines instead of the text shorthand");

    // act
    std::string rep_kind, word_text, named, act_payload;
    bool act_json = false;
    auto* act = app.add_subcommand("act", "apply a braid word or extended element");
    act->add_option("--rep", rep_kind, "ces|forest")->required();
    act->add_option("--word", word_text, "braid word, rightmost letter acts first");
    act->add_option("--named", named, "delta|Delta|D|C");
    act->add_flag("--json", act_json, "emit JSON instead of the text shorthand");
    act->add_option("payload", act_payload, "input payload (stdin when omitted)");

    // stats
    int st_n = 1;
    std::string source = "formula";
    bool st_json = false;
    std::vector<long long> eval_at;
    auto* stats = app.add_subcommand("stats", "generating functions for forest statistics");
    stats->add_option("--n", st_n, "quiver rank")->required();
    stats->add_option("--source", source, "formula|recursion|forests|sequences");
    stats->add_flag("--json", st_json, "emit the JSON term list");
    stats->add_option("--eval", eval_at, "evaluate at integers a b c")->expected(3);

    // verify
    std::string suite;
    int ve_n = 1;
    bool force = false;
    auto* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify_cmd->add_option("--suite", suite, "suite name")->required();
    verify_cmd->add_option("--n", ve_n, "maximum quiver rank")->required();
    verify_cmd->add_flag("--force", force, "lift the default rank cap");

    // factorize
    std::string fz_payload;
    auto* factorize = app.add_subcommand("factorize", "chord pairs of a sequence");
    factorize->add_option("payload", fz_payload, "sequence payload (stdin when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (convert->parsed()) {
            std::cout << ces_to_payload(to, payload_to_ces(from, read_payload(payload)), as_json);
            if (to != "dot") std::cout << "\n";
            return 0;
        }
        if (enumerate->parsed()) {
            if (en_n < 1 || en_n > (kind == "cluster" ? 6 : 7)) {
                std::cerr << "enumeration is supported for 1 <= n <= "
                          << (kind == "cluster" ? 6 : 7) << "\n";
                return kExitUsage;
            }
            long long count = 0;
            if (kind == "ces") {
                enumerate_ces(en_n, [&](const ExceptionalSequence& s) {
                    ++count;
                    if (!count_only)
                        std::cout << (en_json ? render_ces_json(s) : render_ces(s)) << "\n";
                });
            } else if (kind == "forest") {
                enumerate_forests(en_n, [&](const RootedLabeledForest& f) {
                    ++count;
                    if (!count_only) std::cout << render_forest_json(f) << "\n";
                });
            } else if (kind == "parking") {
                enumerate_ces(en_n, [&](const ExceptionalSequence& s) {
                    ++count;
                    const auto p = ces_tops(s);
                    if (!count_only)
                        std::cout << (en_json ? nlohmann::json(p).dump() : render_parking(p))
                                  << "\n";
                });
            } else if (kind == "cluster") {
                enumerate_clusters(en_n, [&](const ClusterTiltingSet& set) {
                    ++count;
                    if (!count_only)
                        std::cout << (en_json ? render_cluster_json(set.items)
                                              : render_signed_list(set.items))
                                  << "\n";
                });
            } else {
                std::cerr << "unknown kind: " << kind << "\n";
                return kExitUsage;
            }
            if (count_only) std::cout << count << "\n";
            return 0;
        }
        if (act->parsed()) {
            if (word_text.empty() == named.empty()) {
                std::cerr << "act needs exactly one of --word or --named\n";
                return kExitUsage;
            }
            const std::string input = read_payload(act_payload);
            if (rep_kind == "ces") {
                ExceptionalSequence seq = payload_to_ces("ces", input);
                if (!named.empty()) {
                    if (named == "delta")
                        seq = apply_braid_word(seq, delta_word(seq.n));
                    else if (named == "Delta")
                        seq = apply_braid_word(seq, garside_word(seq.n));
                    else if (named == "D")
                        seq = duality(seq);
                    else if (named == "C")
                        seq = conjugation(seq);
                    else {
                        std::cerr << "unknown named element: " << named << "\n";
                        return kExitUsage;
                    }
                } else {
                    seq = apply_braid_word(seq, parse_braid_word(word_text));
                }
                std::cout << (act_json ? render_ces_json(seq) : render_ces(seq)) << "\n";
            } else if (rep_kind == "forest") {
                RootedLabeledForest f = parse_forest_json(input);
                if (!named.empty()) {
                    if (named == "delta")
                        f = delta_forest(f);
                    else if (named == "Delta")
                        f = apply_braid_word_forest(f, garside_word(f.n));
                    else if (named == "D")
                        f = duality_forest(f);
                    else if (named == "C")
                        f = conjugation_forest(f);
                    else {
                        std::cerr << "unknown named element: " << named << "\n";
                        return kExitUsage;
                    }
                } else {
                    f = apply_braid_word_forest(f, parse_braid_word(word_text));
                }
                std::cout << render_forest_json(f) << "\n";
            } else {
                std::cerr << "unknown representation: " << rep_kind << "\n";
                return kExitUsage;
            }
            return 0;
        }
        if (stats->parsed()) {
            if (st_n < 1 || st_n > 7 || (source == "sequences" && st_n > 6)) {
                std::cerr << "stats rank out of range\n";
                return kExitUsage;
            }
            TrivariatePolynomial poly;
            if (source == "formula")
                poly = formula_poly(st_n);
            else if (source == "recursion")
                poly = recursion_poly(st_n);
            else if (source == "forests")
                poly = statistic_poly(st_n, StatSource::forests);
            else if (source == "sequences")
                poly = statistic_poly(st_n, StatSource::sequences);
            else {
                std::cerr << "unknown source: " << source << "\n";
                return kExitUsage;
            }
            if (!eval_at.empty())
                std::cout << evaluate(poly, eval_at[0], eval_at[1], eval_at[2]) << "\n";
            else
                std::cout << (st_json ? render_poly_json(poly) : render_poly_text(poly)) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(suite, ve_n, force);
        if (factorize->parsed()) {
            const auto seq = payload_to_ces("ces", read_payload(fz_payload));
            std::cout << render_factorization(ces_to_factorization(seq)) << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid payload: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid payload: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
