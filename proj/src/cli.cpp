#include "mukailat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "mukailat/hassett.hpp"
#include "mukailat/json_io.hpp"
#include "mukailat/mukai.hpp"

namespace mukailat {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

json parse_inline_json(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
    }
}

StandardLattice standard_by_name(const std::string& name) {
    if (name == "U") return StandardLattice::U;
    if (name == "A2") return StandardLattice::A2;
    if (name == "E8") return StandardLattice::E8;
    if (name == "E8-" || name == "E8(-1)") return StandardLattice::E8Neg;
    if (name == "rank1") return StandardLattice::Rank1;
    if (name == "mukai24" || name == "Mukai24") return StandardLattice::Mukai24;
    throw std::invalid_argument("unknown standard lattice: " + name +
                                " (use U, A2, E8, E8-, rank1, mukai24)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact integer-lattice computations for K3 Mukai lattices and "
                 "cubic fourfold discriminants"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::function<void()> action;
    json output;

    // --- hassett ---------------------------------------------------------
    auto* hassett = app.add_subcommand("hassett", "discriminant arithmetic");
    hassett->require_subcommand(1);

    auto* hassett_check_cmd = hassett->add_subcommand("check", "test (*) and (**) for one d");
    auto check_d = std::make_shared<std::string>();
    hassett_check_cmd->add_option("--d", *check_d, "discriminant")->required();
    hassett_check_cmd->callback([&, check_d] {
        action = [&, check_d] {
            const HassettVerdict v = hassett_check(Int(*check_d));
            output = json{{"d", int_to_json(v.d)},
                          {"star", v.star},
                          {"star_star", v.star_star},
                          {"admissible", v.admissible}};
            if (v.witness) output["witness"] = int_to_json(*v.witness);
            err << "d = " << v.d << ": (*) " << (v.star ? "holds" : "fails") << ", (**) "
                << (v.star_star ? "holds" : "fails");
            if (v.witness) err << " (divisor " << *v.witness << ")";
            err << "\n";
        };
    });

    auto* hassett_list_cmd = hassett->add_subcommand("list", "admissible discriminants <= max");
    auto list_max = std::make_shared<std::string>();
    hassett_list_cmd->add_option("--max", *list_max, "upper bound")->required();
    hassett_list_cmd->callback([&, list_max] {
        action = [&, list_max] {
            const std::vector<Int> ds = admissible_discriminants(Int(*list_max));
            output = json::array();
            for (const Int& d : ds) output.push_back(int_to_json(d));
            err << ds.size() << " admissible discriminant(s) up to " << *list_max << "\n";
        };
    });

    auto* hassett_k_cmd = hassett->add_subcommand("k-gram", "canonical labeling Gram for d");
    auto k_d = std::make_shared<std::string>();
    hassett_k_cmd->add_option("--d", *k_d, "discriminant")->required();
    hassett_k_cmd->callback([&, k_d] {
        action = [&, k_d] {
            const Lattice k = labeled_k_gram(Int(*k_d));
            output = lattice_to_json(k);
            err << "rank-2 label with det " << *k_d << "\n";
        };
    });

    // --- lattice ---------------------------------------------------------
    auto* lattice_cmd = app.add_subcommand("lattice", "single-lattice computations");
    lattice_cmd->require_subcommand(1);

    auto* lat_info = lattice_cmd->add_subcommand("info", "rank/det/signature/parity");
    auto info_in = std::make_shared<std::string>();
    lat_info->add_option("--in", *info_in, "lattice JSON file")->required();
    lat_info->callback([&, info_in] {
        action = [&, info_in] {
            const Lattice l = lattice_from_json(load_json(*info_in));
            const LatticeInvariants inv = invariants(l);
            output = invariants_to_json(inv);
            err << "rank " << inv.rank << ", det " << inv.det << ", signature ("
                << inv.signature.positive << "," << inv.signature.negative << ","
                << inv.signature.zero << ")\n";
        };
    });

    auto* lat_disc = lattice_cmd->add_subcommand("disc-group", "discriminant group");
    auto disc_in = std::make_shared<std::string>();
    lat_disc->add_option("--in", *disc_in, "lattice JSON file")->required();
    lat_disc->callback([&, disc_in] {
        action = [&, disc_in] {
            const DiscriminantGroup g =
                discriminant_group(lattice_from_json(load_json(*disc_in)));
            json factors = json::array();
            for (const Int& f : g.invariant_factors) factors.push_back(int_to_json(f));
            output = json{{"invariant_factors", std::move(factors)}};
            err << g.invariant_factors.size() << " nontrivial invariant factor(s)\n";
        };
    });

    auto* lat_make = lattice_cmd->add_subcommand("make", "emit a standard lattice");
    auto make_name = std::make_shared<std::string>();
    auto make_twist = std::make_shared<std::string>("1");
    auto make_copies = std::make_shared<unsigned>(1);
    auto make_n = std::make_shared<std::string>("1");
    lat_make->add_option("--name", *make_name, "U, A2, E8, E8-, rank1, mukai24")->required();
    lat_make->add_option("--twist", *make_twist, "multiply the form by this integer");
    lat_make->add_option("--copies", *make_copies, "number of direct summands");
    lat_make->add_option("--n", *make_n, "diagonal entry for rank1");
    lat_make->callback([&, make_name, make_twist, make_copies, make_n] {
        action = [&, make_name, make_twist, make_copies, make_n] {
            const Lattice l = make_standard(standard_by_name(*make_name), Int(*make_twist),
                                            *make_copies, Int(*make_n));
            output = lattice_to_json(l);
            err << "rank " << l.rank() << " lattice\n";
        };
    });

    // --- sublattice ------------------------------------------------------
    auto* sub_cmd = app.add_subcommand("sublattice", "sublattice computations");
    sub_cmd->require_subcommand(1);

    auto sub_in = std::make_shared<std::string>();
    auto* sub_comp = sub_cmd->add_subcommand("complement", "saturated orthogonal complement");
    sub_comp->add_option("--in", *sub_in, "sublattice JSON file")->required();
    sub_comp->callback([&, sub_in] {
        action = [&, sub_in] {
            const Sublattice s = sublattice_from_json(load_json(*sub_in));
            const Sublattice c = orthogonal_complement(s);
            output = sublattice_to_json(c);
            output["induced_gram"] = matrix_to_json(c.induced_gram());
            err << "complement rank " << c.rank() << "\n";
        };
    });

    auto sat_in = std::make_shared<std::string>();
    auto* sub_sat = sub_cmd->add_subcommand("saturate", "primitive closure");
    sub_sat->add_option("--in", *sat_in, "sublattice JSON file")->required();
    sub_sat->callback([&, sat_in] {
        action = [&, sat_in] {
            const Sublattice s = sublattice_from_json(load_json(*sat_in));
            const Int index = saturation_index(s.basis);
            const Sublattice t = saturate(s);
            output = sublattice_to_json(t);
            output["induced_gram"] = matrix_to_json(t.induced_gram());
            output["saturation_index"] = int_to_json(index);
            err << "saturation index " << index << "\n";
        };
    });

    auto chain_in = std::make_shared<std::string>();
    auto* sub_chain = sub_cmd->add_subcommand("disc-chain", "|det K| vs |det K-perp|");
    sub_chain->add_option("--in", *chain_in, "sublattice JSON file")->required();
    sub_chain->callback([&, chain_in] {
        action = [&, chain_in] {
            const DiscChainReport r =
                check_disc_chain(sublattice_from_json(load_json(*chain_in)));
            output = json{{"abs_det_sublattice", int_to_json(r.abs_det_sublattice)},
                          {"abs_det_complement", int_to_json(r.abs_det_complement)},
                          {"equal", r.equal}};
            err << r.abs_det_sublattice << " vs " << r.abs_det_complement << "\n";
        };
    });

    // --- mukai -----------------------------------------------------------
    auto* mukai_cmd = app.add_subcommand("mukai", "Mukai-lattice constructions");
    mukai_cmd->require_subcommand(1);

    auto* mukai_a2 = mukai_cmd->add_subcommand("a2", "the A2 sublattice of Mukai24");
    mukai_a2->callback([&] {
        action = [&] {
            const A2Embedding e = embed_a2_in_mukai();
            output = sublattice_to_json(e.sublattice);
            output["induced_gram"] = matrix_to_json(e.sublattice.induced_gram());
            output["lambda1"] = vector_to_json(e.basis.lambda1);
            output["lambda2"] = vector_to_json(e.basis.lambda2);
            err << "A2 embedded in the rank-24 Mukai lattice\n";
        };
    });

    auto lk_kappa = std::make_shared<std::string>();
    auto* mukai_lk = mukai_cmd->add_subcommand("lk", "saturation of <A2, kappa>");
    mukai_lk->add_option("--kappa", *lk_kappa, "24 integers, JSON array")->required();
    mukai_lk->callback([&, lk_kappa] {
        action = [&, lk_kappa] {
            const IntVec kappa = vector_from_json(parse_inline_json(*lk_kappa, "--kappa"));
            const Sublattice lk = build_l_k(kappa);
            const IntMatrix gram = lk.induced_gram();
            output = sublattice_to_json(lk);
            output["induced_gram"] = matrix_to_json(gram);
            output["abs_det"] = int_to_json(boost::multiprecision::abs(determinant(gram)));
            output["rank"] = lk.rank();
            err << "L_K rank " << lk.rank() << "\n";
        };
    });

    auto findu_in = std::make_shared<std::string>();
    auto findu_bound = std::make_shared<std::string>("5");
    auto* mukai_findu = mukai_cmd->add_subcommand("find-u", "hyperbolic plane detection");
    mukai_findu->add_option("--in", *findu_in, "lattice JSON file")->required();
    mukai_findu->add_option("--bound", *findu_bound, "coordinate bound for the search");
    mukai_findu->callback([&, findu_in, findu_bound] {
        action = [&, findu_in, findu_bound] {
            const Lattice l = lattice_from_json(load_json(*findu_in));
            const UPlaneSearch r = find_hyperbolic_plane(l, Int(*findu_bound));
            switch (r.verdict) {
                case UPlaneSearch::Verdict::Yes:
                    output = json{{"verdict", "Yes"},
                                  {"e", vector_to_json(r.e)},
                                  {"f", vector_to_json(r.f)}};
                    err << "hyperbolic plane found\n";
                    break;
                case UPlaneSearch::Verdict::No:
                    output = json{{"verdict", "No"}, {"reason", r.reason}};
                    err << "no hyperbolic plane (" << r.reason << ")\n";
                    break;
                case UPlaneSearch::Verdict::Unknown:
                    output = json{{"verdict", "Unknown"}};
                    err << "search exhausted without certificate\n";
                    exit_code = 2;
                    break;
            }
        };
    });

    // --- charge ----------------------------------------------------------
    auto* charge_cmd = app.add_subcommand("charge", "central-charge computations");
    charge_cmd->require_subcommand(1);

    auto gamma_in = std::make_shared<std::string>();
    auto gamma_c = std::make_shared<std::string>("1");
    auto* charge_gamma = charge_cmd->add_subcommand("gamma", "the finite set Gamma");
    charge_gamma->add_option("--in", *gamma_in, "charge JSON file")->required();
    charge_gamma->add_option("--c", *gamma_c, "bound C (rational)");
    charge_gamma->callback([&, gamma_in, gamma_c] {
        action = [&, gamma_in, gamma_c] {
            const ChargeVector omega = charge_from_json(load_json(*gamma_in));
            const GammaSet g = gamma_set(omega, parse_rational(*gamma_c));
            json members = json::array();
            for (const IntVec& w : g.members) members.push_back(vector_to_json(w));
            output = json{{"c_bound", rat_to_json(g.c_bound)},
                          {"members", std::move(members)},
                          {"complete", g.complete}};
            err << g.members.size() << " member(s)\n";
        };
    });

    auto p0_in = std::make_shared<std::string>();
    auto* charge_p0 = charge_cmd->add_subcommand("p0", "P+_0 membership");
    charge_p0->add_option("--in", *p0_in, "charge JSON file")->required();
    charge_p0->callback([&, p0_in] {
        action = [&, p0_in] {
            const P0Verdict v = p_zero_check(charge_from_json(load_json(*p0_in)));
            switch (v.kind) {
                case P0Verdict::Kind::InP0:
                    output = json{{"verdict", "InP0"}};
                    break;
                case P0Verdict::Kind::Excluded:
                    output = json{{"verdict", "Excluded"}, {"delta", vector_to_json(v.delta)}};
                    break;
                case P0Verdict::Kind::NotPositivePlane:
                    output = json{{"verdict", "NotPositivePlane"}};
                    break;
            }
            err << output["verdict"].get<std::string>() << "\n";
        };
    });

    auto nb_in = std::make_shared<std::string>();
    auto nb_fun = std::make_shared<std::string>();
    auto nb_c = std::make_shared<std::string>("1");
    auto* charge_nb = charge_cmd->add_subcommand("n-bound", "genericity bound N");
    charge_nb->add_option("--in", *nb_in, "charge JSON file")->required();
    charge_nb->add_option("--functional", *nb_fun, "coordinate functional, JSON array")
        ->required();
    charge_nb->add_option("--c", *nb_c, "bound C (rational)");
    charge_nb->callback([&, nb_in, nb_fun, nb_c] {
        action = [&, nb_in, nb_fun, nb_c] {
            const ChargeVector omega = charge_from_json(load_json(*nb_in));
            const GammaSet g = gamma_set(omega, parse_rational(*nb_c));
            const IntVec fun = vector_from_json(parse_inline_json(*nb_fun, "--functional"));
            const Int n = genericity_bound(g, fun);
            output = json{{"N", int_to_json(n)}, {"gamma_size", g.members.size()}};
            err << "N = " << n << "\n";
        };
    });

    // --- group -----------------------------------------------------------
    auto* group_cmd = app.add_subcommand("group", "group actions on lattices");
    group_cmd->require_subcommand(1);

    auto coinv_in = std::make_shared<std::string>();
    auto* group_coinv = group_cmd->add_subcommand("coinv", "invariant and coinvariant lattices");
    group_coinv->add_option("--in", *coinv_in, "action JSON file")->required();
    group_coinv->callback([&, coinv_in] {
        action = [&, coinv_in] {
            const GroupAction a = action_from_json(load_json(*coinv_in));
            const InvariantPair p = invariant_and_coinvariant(a);
            output = json{{"invariant", sublattice_to_json(p.invariant)},
                          {"coinvariant", sublattice_to_json(p.coinvariant)}};
            output["invariant"]["induced_gram"] = matrix_to_json(p.invariant.induced_gram());
            output["coinvariant"]["induced_gram"] =
                matrix_to_json(p.coinvariant.induced_gram());
            err << "rk L^G = " << p.invariant.rank() << ", rk S_G = " << p.coinvariant.rank()
                << "\n";
        };
    });

    auto val_in = std::make_shared<std::string>();
    auto* group_val = group_cmd->add_subcommand("validate", "check generators are isometries");
    group_val->add_option("--in", *val_in, "action JSON file")->required();
    group_val->callback([&, val_in] {
        action = [&, val_in] {
            const ActionReport r = validate_action(action_from_json(load_json(*val_in)));
            json violations = json::array();
            for (const ActionViolation& v : r.violations)
                violations.push_back(json{{"generator", v.generator_index}, {"kind", v.kind}});
            output = json{{"valid", r.valid}, {"violations", std::move(violations)}};
            err << (r.valid ? "valid" : "invalid") << "\n";
        };
    });

    auto order_n = std::make_shared<std::string>();
    auto* group_order = group_cmd->add_subcommand("order-allowed",
                                                  "K3 symplectic automorphism order gate");
    group_order->add_option("--n", *order_n, "order")->required();
    group_order->callback([&, order_n] {
        action = [&, order_n] {
            const bool ok = k3_symplectic_order_allowed(Int(*order_n));
            output = json{{"n", int_to_json(Int(*order_n))}, {"allowed", ok}};
            err << (ok ? "allowed" : "not realizable by a symplectic automorphism") << "\n";
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.name("mukailat");
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            std::ostringstream help;
            const int code = app.exit(e, help, help);
            err << help.str();
            return code;
        }
        out << json{{"error", e.what()}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        action();
        out << output.dump(2) << "\n";
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace mukailat
