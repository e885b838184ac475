// Command-line front end: group facts, enumeration, the (a)/(b) solvers,
// the full HS/HC case analyses, and the coset-geometry checks.
//
// Exit codes: 0 all invoked verifications succeed, 1 verification failure,
// 2 usage or parameter error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gqv/case_hc.hpp"
#include "gqv/case_hs.hpp"
#include "gqv/catalog.hpp"
#include "gqv/coset_geometry.hpp"
#include "gqv/diophantine.hpp"
#include "gqv/report.hpp"

namespace {

struct Options {
    std::string format = "text";
    std::vector<std::string> families;
    unsigned jobs = 1;
};

std::vector<gqv::Family> parse_families(const std::vector<std::string>& names) {
    std::vector<gqv::Family> out;
    for (const auto& n : names) {
        auto f = gqv::family_from_name(n);
        if (!f) throw gqv::ParameterError("unknown family '" + n + "'");
        out.push_back(*f);
    }
    return out;
}

bool json_format(const Options& o) { return o.format == "json"; }

int run_verify(gqv::Mode mode, const Options& opt) {
    const auto filter = parse_families(opt.families);
    const gqv::RunResult run = mode == gqv::Mode::HS
                                   ? gqv::verify_hs_all(filter, opt.jobs)
                                   : gqv::verify_hc_all(filter, opt.jobs);
    std::cout << (json_format(opt) ? gqv::report_json(run)
                                   : gqv::report_text(run));
    if (run.summary.survivors_post_elimination != 0) return 1;
    if (mode == gqv::Mode::HC && filter.empty() &&
        run.summary.survivors_pre_elimination != 2)
        return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification tool for the holomorph-type point-primitive "
                 "line-transitive generalised quadrangle case analysis"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // group info <id>
    auto* group = app.add_subcommand("group", "group facts");
    group->require_subcommand(1);
    auto* info = group->add_subcommand("info", "order, |Out|, simplicity, "
                                               "canonical isomorph");
    std::string group_id_text;
    info->add_option("id", group_id_text,
                     "group id, e.g. Alt(6), A(1;9), 2A(2;q2=9), 2B2(8), "
                     "M11, 2F4(2)'")
        ->required();

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "canonical simple groups under an order bound");
    std::string max_order;
    std::vector<std::string> poly_out;
    enumerate->add_option("--max-order", max_order, "order <= N");
    enumerate
        ->add_option("--poly-out", poly_out,
                     "order <= C * |Out|^E, two values: C E")
        ->expected(2);
    enumerate->add_option("--family", opt.families,
                          "restrict to families (repeatable)");

    // solve
    auto* solve = app.add_subcommand("solve", "parameter equation solver");
    std::string solve_mode, solve_order;
    std::string solve_smax;
    bool use_oracle = false;
    solve->add_option("--mode", solve_mode, "hs or hc")
        ->check(CLI::IsMember({"hs", "hc"}))
        ->required();
    solve->add_option("--order", solve_order, "group order")->required();
    solve->add_option("--smax", solve_smax, "upper bound for s")->required();
    solve->add_flag("--oracle", use_oracle,
                    "use the exhaustive oracle instead of the solver");

    // verify hs|hc
    auto* verify = app.add_subcommand("verify", "run a full case analysis");
    verify->require_subcommand(1);
    auto* vhs = verify->add_subcommand("hs", "holomorph simple type");
    auto* vhc = verify->add_subcommand("hc", "holomorph compound type (k=2)");
    for (auto* v : {vhs, vhc}) {
        v->add_option("--family", opt.families,
                      "restrict to families (repeatable)");
        v->add_option("--jobs", opt.jobs, "concurrent case evaluation");
    }

    // geometry grid|stabiliser|doublecosets
    auto* geometry = app.add_subcommand("geometry", "coset geometry checks");
    geometry->require_subcommand(1);
    std::string gspec;
    std::vector<std::string> subgroup_specs;
    unsigned max_group_order = 720;
    auto add_geo_opts = [&](CLI::App* cmd, int nsubs) {
        cmd->add_option("--group", gspec,
                        "group spec: cyclic(N), dihedral(N), symmetric(N), "
                        "alternating(N), joined with '*'")
            ->required();
        auto* so = cmd->add_option("--subgroups", subgroup_specs,
                                   "subgroup specs gen:i,j,... or set:i,j,...");
        if (nsubs > 0)
            so->expected(nsubs);
        else
            so->expected(1, 16);
        cmd->add_option("--max-group-order", max_group_order,
                        "cap on the group order");
    };
    auto* grid = geometry->add_subcommand(
        "grid", "product-set grid of two subgroups plus axiom checks");
    add_geo_opts(grid, 2);
    auto* stab = geometry->add_subcommand(
        "stabiliser", "line stabiliser and union-of-cosets report");
    add_geo_opts(stab, 0);
    auto* dcos = geometry->add_subcommand(
        "doublecosets", "double coset sizes, partition and size law");
    add_geo_opts(dcos, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*info) {
            const gqv::GroupFacts facts =
                gqv::classify(gqv::parse_group_id(group_id_text));
            std::cout << (json_format(opt) ? gqv::group_info_json(facts)
                                           : gqv::group_info_text(facts));
            return 0;
        }
        if (*enumerate) {
            if (max_order.empty() == poly_out.empty())
                throw gqv::ParameterError(
                    "exactly one of --max-order / --poly-out is required");
            gqv::EnumBound bound =
                max_order.empty()
                    ? gqv::order_leq_poly_out(gqv::Int(poly_out[0]),
                                              std::stoul(poly_out[1]))
                    : gqv::order_leq(gqv::Int(max_order));
            const auto groups =
                gqv::enumerate_under(bound, parse_families(opt.families));
            std::cout << (json_format(opt) ? gqv::enumeration_json(groups)
                                           : gqv::enumeration_text(groups));
            return 0;
        }
        if (*solve) {
            const gqv::Int order(solve_order);
            const gqv::Int smax(solve_smax);
            if (solve_mode == "hs") {
                const auto ws = use_oracle ? gqv::oracle_hs(order, smax)
                                           : gqv::solve_hs(order, smax);
                if (json_format(opt)) {
                    std::cout << gqv::hs_witnesses_json(ws);
                } else {
                    for (const auto& w : ws)
                        std::cout << "s=" << w.s.get_str()
                                  << " t'=" << w.t_prime.get_str() << "\n";
                    std::cout << ws.size() << " witness(es)\n";
                }
            } else {
                const auto ws = use_oracle ? gqv::oracle_hc(order, smax)
                                           : gqv::solve_hc(order, smax);
                if (json_format(opt)) {
                    std::cout << gqv::hc_witnesses_json(ws);
                } else {
                    for (const auto& w : ws)
                        std::cout << "s=" << w.s.get_str()
                                  << " y=" << w.y.get_str() << "\n";
                    std::cout << ws.size() << " witness(es)\n";
                }
            }
            return 0;
        }
        if (*vhs) return run_verify(gqv::Mode::HS, opt);
        if (*vhc) return run_verify(gqv::Mode::HC, opt);

        if (*grid || *stab || *dcos) {
            const gqv::geom::FiniteGroup g =
                gqv::geom::build_group(gspec, max_group_order);
            std::vector<std::vector<unsigned>> subs;
            for (const auto& s : subgroup_specs)
                subs.push_back(gqv::geom::parse_subset(g, s));
            if (*grid) {
                const auto res = gqv::geom::grid_subquadrangle(g, subs.at(0),
                                                               subs.at(1));
                if (json_format(opt)) {
                    std::cout << gqv::grid_json(res);
                } else {
                    std::cout << "grid of order (" << res.s << ",1): "
                              << res.geometry.points.size() << " points, "
                              << res.geometry.lines.size() << " lines; "
                              << (res.ok() ? "all checks passed"
                                           : "CHECKS FAILED")
                              << "\n";
                }
                return res.ok() ? 0 : 1;
            }
            if (*dcos) {
                const auto prof =
                    gqv::geom::double_coset_profile(g, subs.at(0), subs.at(1));
                if (json_format(opt)) {
                    std::cout << gqv::double_cosets_json(prof);
                } else {
                    std::cout << "double coset sizes:";
                    for (auto s : prof.sizes) std::cout << " " << s;
                    std::cout << "\npartition "
                              << (prof.partition_ok ? "ok" : "VIOLATED")
                              << ", size law "
                              << (prof.size_law_ok ? "ok" : "VIOLATED") << "\n";
                }
                return prof.partition_ok && prof.size_law_ok ? 0 : 1;
            }
            // stabiliser: report for every given subgroup as a line through 1.
            const auto geometry = gqv::geom::coset_geometry(g, subs);
            bool all_consistent = true;
            for (const auto& sub : subs) {
                const auto rep =
                    gqv::geom::line_stabiliser_check(g, geometry, sub);
                all_consistent = all_consistent && rep.lemma_consistent &&
                                 rep.stab_subset_line &&
                                 rep.union_of_left_cosets;
                if (json_format(opt)) {
                    std::cout << gqv::stabiliser_json(rep);
                } else {
                    std::cout << "line {";
                    for (size_t i = 0; i < rep.line.size(); ++i)
                        std::cout << (i ? "," : "") << rep.line[i];
                    std::cout << "}: stabiliser size "
                              << rep.stabiliser.size() << ", union of cosets "
                              << (rep.union_of_left_cosets ? "ok" : "VIOLATED")
                              << ", left closure "
                              << (rep.left_closure ? "holds" : "fails")
                              << ", stabiliser equals line "
                              << (rep.stab_equals_line ? "yes" : "no")
                              << (rep.hypotheses_met ? "" :
                                  " (hypotheses unmet)")
                              << "\n";
                }
            }
            return all_consistent ? 0 : 1;
        }
    } catch (const gqv::VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
