// Command-line front end: rho data, orbit induction, duality, arth sets,
// hypothesis reports, Peirce decompositions, table verification, K-orbit
// listings. Every command takes --json for machine output. Exit codes:
// 0 success / true verdict, 1 false verdict, 2 usage or input errors.

#include "liecomb/hnf.hpp"
#include "liecomb/json_io.hpp"
#include "liecomb/ktheory.hpp"
#include "liecomb/orbits.hpp"
#include "liecomb/parabolics.hpp"
#include "liecomb/partitions.hpp"
#include "liecomb/peirce.hpp"
#include "liecomb/root_systems.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace liecomb;

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

Partition parse_partition(const std::string& s) { return Partition(parse_int_list(s)); }

LieType parse_group(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("group: expected e.g. C2");
    return LieType(family_from_letter(s[0]), std::stoi(s.substr(1)));
}

Weight parse_weight(const std::string& s) {
    std::vector<Rational> cs;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) cs.emplace_back(tok);
    Weight w(static_cast<Index>(cs.size()));
    for (size_t i = 0; i < cs.size(); ++i) w(static_cast<Index>(i)) = cs[i];
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (Index i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += w(i).str();
    }
    return s + ")";
}

struct GroupRankLevi {
    std::string type = "C";
    int rank = 0;
    std::string levi;

    LeviComposition composition() const {
        const LieType t(family_from_letter(type.at(0)), rank);
        std::vector<int> blocks = parse_int_list(levi);
        int sum = 0;
        for (int b : blocks) sum += b;
        return LeviComposition(t, blocks, t.rank - sum);
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilpotent orbit combinatorics and decomposition-table verification"};
    app.require_subcommand(1);
    std::function<int()> run;

    // rho
    auto grl_rho = std::make_shared<GroupRankLevi>();
    auto rho_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("rho", "rho data of a parabolic (rho_l, rho(u), rho_g)");
        c->add_option("--type", grl_rho->type, "family letter (B, C or D)")->required();
        c->add_option("--rank", grl_rho->rank, "rank")->required();
        c->add_option("--levi", grl_rho->levi, "comma list of gl block sizes; rest is residual");
        c->add_flag("--json", *rho_json, "machine output");
        c->callback([&, grl_rho, rho_json] {
            run = [grl_rho, rho_json]() {
                const ParabolicDatum p = build_parabolic(grl_rho->composition());
                if (*rho_json) {
                    std::cout << parabolic_to_json(p).dump(2) << "\n";
                } else {
                    std::cout << "rho_l = " << weight_str(p.rho_l) << "\n"
                              << "rho_u = " << weight_str(p.rho_u) << "\n"
                              << "rho_g = " << weight_str(p.rho_g) << "\n";
                }
                return 0;
            };
        });
    }

    // induce
    auto grl_ind = std::make_shared<GroupRankLevi>();
    auto ind_orbits = std::make_shared<std::vector<std::string>>();
    auto ind_res = std::make_shared<std::string>();
    auto ind_oracle = std::make_shared<bool>(false);
    auto ind_trials = std::make_shared<int>(8);
    auto ind_seed = std::make_shared<std::uint64_t>(kDefaultOracleSeed);
    auto ind_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("induce", "induce nilpotent orbits from a Levi");
        c->add_option("--type", grl_ind->type, "family letter")->required();
        c->add_option("--rank", grl_ind->rank, "rank")->required();
        c->add_option("--levi", grl_ind->levi, "comma list of gl block sizes");
        c->add_option("--orbit", *ind_orbits, "partition per gl block (repeatable, comma lists)");
        c->add_option("--residual-orbit", *ind_res, "partition of the residual factor");
        c->add_flag("--oracle", *ind_oracle, "cross-check with the matrix Jordan-type oracle");
        c->add_option("--trials", *ind_trials, "oracle trials");
        c->add_option("--seed", *ind_seed, "oracle seed");
        c->add_flag("--json", *ind_json, "machine output");
        c->callback([&, grl_ind, ind_orbits, ind_res, ind_oracle, ind_trials, ind_seed, ind_json] {
            run = [grl_ind, ind_orbits, ind_res, ind_oracle, ind_trials, ind_seed, ind_json]() {
                const LeviComposition l = grl_ind->composition();
                std::vector<Partition> orbits;
                for (const std::string& s : *ind_orbits) orbits.push_back(parse_partition(s));
                if (!ind_res->empty()) {
                    if (orbits.empty())
                        for (int b : l.gl_blocks)
                            orbits.push_back(Partition(std::vector<int>(static_cast<size_t>(b), 1)));
                    orbits.push_back(parse_partition(*ind_res));
                }
                const Partition induced = induce_orbit(l, orbits);
                json out{{"induced", partition_to_json(induced)}};
                if (*ind_oracle) {
                    const Partition probe = induce_orbit_matrix_oracle(l, orbits, *ind_trials, *ind_seed);
                    out["oracle"] = partition_to_json(probe);
                    out["oracle_trials"] = *ind_trials;
                    out["oracle_seed"] = *ind_seed;
                    out["agree"] = (probe == induced);
                }
                if (*ind_json) {
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "induced orbit: " << induced.str() << "\n";
                    if (*ind_oracle)
                        std::cout << "matrix oracle: " << out["oracle"].dump()
                                  << " (trials=" << *ind_trials << ", seed=" << *ind_seed << ")\n";
                }
                if (*ind_oracle && !out["agree"].get<bool>()) return 1;
                return 0;
            };
        });
    }

    // dual
    auto dual_g = std::make_shared<std::string>();
    auto dual_p = std::make_shared<std::string>();
    auto dual_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("dual", "Spaltenstein dual of a dual-type orbit");
        c->add_option("--g", *dual_g, "target group, e.g. C2")->required();
        c->add_option("--partition", *dual_p, "dual orbit partition, comma list")->required();
        c->add_flag("--json", *dual_json, "machine output");
        c->callback([&, dual_g, dual_p, dual_json] {
            run = [dual_g, dual_p, dual_json]() {
                const Partition d = spaltenstein_dual(parse_group(*dual_g), parse_partition(*dual_p));
                if (*dual_json)
                    std::cout << partition_to_json(d).dump() << "\n";
                else
                    std::cout << d.str() << "\n";
                return 0;
            };
        });
    }

    // arth
    auto arth_g = std::make_shared<std::string>();
    auto arth_p = std::make_shared<std::string>();
    auto arth_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("arth", "arth characters attached to an orbit");
        c->add_option("--g", *arth_g, "group, e.g. C2")->required();
        c->add_option("--partition", *arth_p, "orbit partition, comma list")->required();
        c->add_flag("--json", *arth_json, "machine output");
        c->callback([&, arth_g, arth_p, arth_json] {
            run = [arth_g, arth_p, arth_json]() {
                const auto set = arth_set(parse_group(*arth_g), parse_partition(*arth_p));
                if (*arth_json) {
                    json arr = json::array();
                    for (const ArthCharacter& a : set) arr.push_back(arth_character_to_json(a));
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const ArthCharacter& a : set)
                        std::cout << a.orbit_dual.str() << " -> " << weight_str(a.character) << "\n";
                    if (set.empty()) std::cout << "(empty)\n";
                }
                return 0;
            };
        });
    }

    // check-hypotheses
    auto grl_hyp = std::make_shared<GroupRankLevi>();
    auto hyp_lambda = std::make_shared<std::string>();
    auto hyp_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("check-hypotheses",
                                         "hypothesis report for the zero Levi orbit");
        c->add_option("--type", grl_hyp->type, "family letter")->required();
        c->add_option("--rank", grl_hyp->rank, "rank")->required();
        c->add_option("--levi", grl_hyp->levi, "comma list of gl block sizes");
        c->add_option("--lambda", *hyp_lambda, "weight, comma list of rationals (default rho_u)");
        c->add_flag("--json", *hyp_json, "machine output");
        c->callback([&, grl_hyp, hyp_lambda, hyp_json] {
            run = [grl_hyp, hyp_lambda, hyp_json]() {
                const ParabolicDatum p = build_parabolic(grl_hyp->composition());
                const Weight lambda = hyp_lambda->empty() ? p.rho_u : parse_weight(*hyp_lambda);
                const HypothesisReport rep = check_theorem_hypotheses(p, lambda);
                if (*hyp_json) {
                    std::cout << hypothesis_report_to_json(rep).dump(2) << "\n";
                } else {
                    std::cout << "induced orbit: " << rep.induced_orbit.str() << "\n"
                              << "character:     " << weight_str(rep.character) << "\n"
                              << "arth_member:   " << (rep.arth_member ? "true" : "false") << "\n"
                              << "antidominant:  " << (rep.antidominant ? "true" : "false") << "\n"
                              << "birational:    " << tristate_str(rep.birational) << "\n";
                }
                const bool bad = !rep.arth_member || !rep.antidominant ||
                                 rep.birational == TriState::False;
                return bad ? 1 : 0;
            };
        });
    }

    // check-birational
    auto bir_n = std::make_shared<int>(0);
    auto bir_trials = std::make_shared<int>(8);
    auto bir_seed = std::make_shared<std::uint64_t>(kDefaultOracleSeed);
    auto bir_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("check-birational",
                                         "birationality of the Siegel moment map");
        c->add_option("--n", *bir_n, "rank n of Sp(2n)")->required();
        c->add_option("--trials", *bir_trials, "sampling trials");
        c->add_option("--seed", *bir_seed, "sampling seed");
        c->add_flag("--json", *bir_json, "machine output");
        c->callback([&, bir_n, bir_trials, bir_seed, bir_json] {
            run = [bir_n, bir_trials, bir_seed, bir_json]() {
                const bool ok = siegel_birationality_check(*bir_n, *bir_trials, *bir_seed);
                if (*bir_json)
                    std::cout << json{{"birational", ok}, {"trials", *bir_trials}, {"seed", *bir_seed}}
                                     .dump()
                              << "\n";
                else
                    std::cout << (ok ? "birational" : "not birational") << " (trials=" << *bir_trials
                              << ", seed=" << *bir_seed << ")\n";
                return ok ? 0 : 1;
            };
        });
    }

    // peirce
    auto pe_algebra = std::make_shared<std::string>();
    auto pe_idem = std::make_shared<std::string>();
    auto pe_module = std::make_shared<std::string>();
    auto pe_corner = std::make_shared<int>(-1);
    auto pe_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("peirce", "Peirce decomposition of an algebra file");
        c->add_option("--algebra", *pe_algebra, "algebra JSON file")->required();
        c->add_option("--idempotents", *pe_idem,
                      "JSON file with an array of idempotent coordinate vectors (default: the unit)");
        c->add_option("--module", *pe_module, "module JSON file (with --corner)");
        c->add_option("--corner", *pe_corner, "corner index for the module");
        c->add_flag("--json", *pe_json, "machine output");
        c->callback([&, pe_algebra, pe_idem, pe_module, pe_corner, pe_json] {
            run = [pe_algebra, pe_idem, pe_module, pe_corner, pe_json]() {
                const FinDimAlgebra a = algebra_from_json(json::parse(read_file(*pe_algebra)));
                IdempotentFamily fam;
                if (pe_idem->empty()) {
                    fam.elements = {a.unit()};
                } else {
                    for (const json& e : json::parse(read_file(*pe_idem)))
                        fam.elements.push_back(weight_from_json(e));
                }
                const auto blocks = peirce_decompose(a, fam);
                const bool mult_ok = peirce_multiplication_check(a, blocks);
                json out{{"dim", a.dim()}, {"multiplication_check", mult_ok}};
                json dims = json::array();
                for (const PeirceBlock& b : blocks)
                    dims.push_back(json{{"i", b.i}, {"j", b.j}, {"dim", b.basis.cols()}});
                out["blocks"] = dims;
                if (!pe_module->empty()) {
                    if (*pe_corner < 0 || *pe_corner >= static_cast<int>(fam.size()))
                        throw std::invalid_argument("--corner must index the idempotent family");
                    const AlgebraModule m = module_from_json(json::parse(read_file(*pe_module)));
                    validate_module(a, m);
                    const CornerAlgebra corner = corner_algebra(a, fam, *pe_corner);
                    const AlgebraModule pm = corner_module(a, m, corner);
                    out["module_dim"] = m.dim;
                    out["corner_module_dim"] = pm.dim;
                }
                if (*pe_json) {
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "algebra dim " << a.dim() << ", blocks:";
                    for (const PeirceBlock& b : blocks)
                        std::cout << " (" << b.i << "," << b.j << "):" << b.basis.cols();
                    std::cout << "\nmultiplication check: " << (mult_ok ? "true" : "false") << "\n";
                    if (out.contains("corner_module_dim"))
                        std::cout << "corner module dim: " << out["corner_module_dim"] << "\n";
                }
                return mult_ok ? 0 : 1;
            };
        });
    }

    // verify-table
    auto vt_file = std::make_shared<std::string>();
    auto vt_report = std::make_shared<std::string>("text");
    auto vt_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("verify-table", "span and triangular-matching checks");
        c->add_option("--file", *vt_file, "table JSON file")->required();
        c->add_option("--report", *vt_report, "report format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        c->add_flag("--json", *vt_json, "machine output (same as --report json)");
        c->callback([&, vt_file, vt_report, vt_json] {
            run = [vt_file, vt_report, vt_json]() {
                const DecompositionTable t = parse_table(read_file(*vt_file));
                const TableReport rep = verify_table(t);
                if (*vt_json || *vt_report == "json") {
                    std::cout << table_report_to_json(rep).dump(2) << "\n";
                } else {
                    std::cout << "group " << t.group.str() << ": " << rep.unipotent_count
                              << " unipotents, " << rep.degenerate_count << " degenerate rows\n"
                              << "span_equal:        " << (rep.span ? "true" : "false") << "\n"
                              << "triangular match:  " << (rep.matching_found ? "found" : "none")
                              << "\n";
                    if (rep.matching_found) {
                        std::cout << "diagonal signs:    ";
                        for (int s : rep.diagonal_signs) std::cout << (s > 0 ? "+1 " : "-1 ");
                        std::cout << "\n";
                    } else {
                        std::cout << rep.matching_trace;
                    }
                }
                return rep.ok() ? 0 : 1;
            };
        });
    }

    // korbits
    auto ko_n = std::make_shared<int>(0);
    auto ko_json = std::make_shared<bool>(false);
    {
        CLI::App* c = app.add_subcommand("korbits", "K-orbit pairs and line-bundle labels");
        c->add_option("--n", *ko_n, "rank n of Sp(2n)")->required();
        c->add_flag("--json", *ko_json, "machine output");
        c->callback([&, ko_n, ko_json] {
            run = [ko_n, ko_json]() {
                const auto orbits = korbit_enumerate(*ko_n);
                if (*ko_json) {
                    json arr = json::array();
                    for (const KOrbit& k : orbits)
                        arr.push_back(json{{"pair", {k.a, k.b}}, {"bundles", k.bundles}});
                    std::cout << arr.dump(2) << "\n";
                } else {
                    for (const KOrbit& k : orbits) {
                        std::cout << "(" << k.a << "," << k.b << "):";
                        for (const std::string& b : k.bundles) std::cout << " " << b;
                        std::cout << "\n";
                    }
                }
                return 0;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
