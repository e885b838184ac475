#include "gqv/report.hpp"

#include <sstream>

#include <json.hpp>

namespace gqv {

namespace {

using Json = nlohmann::ordered_json;

Json group_json_obj(const GroupFacts& facts) {
    Json j;
    j["id"] = to_string(facts.id);
    j["order"] = facts.order.get_str();
    j["out_order"] = facts.out_order.get_str();
    j["is_simple"] = facts.is_simple;
    j["canonical"] = to_string(facts.canonical);
    return j;
}

Json verdict_json(Mode mode, const CaseVerdict& v) {
    Json j;
    j["group"] = group_json_obj(v.group);
    Json b;
    b["s_max"] = v.bounds.s_max.get_str();
    b[mode == Mode::HS ? "order_max" : "order_sq_max"] =
        v.bounds.order_max.get_str();
    b["order_max_relaxed"] = v.bounds.order_max_relaxed.get_str();
    j["bounds"] = b;
    Json ws = Json::array();
    for (const auto& w : v.hs_witnesses)
        ws.push_back(Json{{"s", w.s.get_str()}, {"t'", w.t_prime.get_str()}});
    for (const auto& w : v.hc_witnesses)
        ws.push_back(Json{{"s", w.s.get_str()}, {"y", w.y.get_str()}});
    j["witnesses"] = ws;
    j["eliminated_by"] = elimination_name(v.eliminated_by);
    if (v.duplicate_of) j["duplicate_of"] = to_string(*v.duplicate_of);
    if (v.flag) {
        Json f;
        f["t"] = v.flag->t.get_str();
        f["t_plus_1"] = Int(v.flag->t + 1).get_str();
        f["modulus"] = v.flag->modulus.get_str();
        f["witness_prime"] = v.flag->witness_prime.get_str();
        j["flag_divisibility"] = f;
    }
    j["paper_case_label"] = v.paper_case_label;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

std::string mode_name(Mode m) { return m == Mode::HS ? "hs" : "hc"; }

}  // namespace

std::string report_json(const RunResult& run) {
    Json j;
    j["mode"] = mode_name(run.mode);
    j["tool_version"] = kToolVersion;
    Json cases = Json::array();
    for (const auto& rec : run.cases) {
        Json c;
        c["label"] = rec.label;
        c["subject"] = rec.subject;
        c["cutoff_derived"] = rec.cutoff_derived;
        c["cutoff_expected"] = rec.cutoff_expected;
        c["cutoff_matches"] = rec.cutoff_matches;
        Json vs = Json::array();
        for (const auto& v : rec.verdicts) vs.push_back(verdict_json(run.mode, v));
        c["verdicts"] = vs;
        if (!rec.notes.empty()) c["notes"] = rec.notes;
        cases.push_back(c);
    }
    j["cases"] = cases;
    j["summary"] = Json{
        {"candidates_examined", run.summary.candidates_examined},
        {"survivors_pre_elimination", run.summary.survivors_pre_elimination},
        {"survivors_post_elimination", run.summary.survivors_post_elimination}};
    j["discrepancy_notes"] = run.discrepancy_notes;
    return j.dump(2) + "\n";
}

std::string report_text(const RunResult& run) {
    std::ostringstream os;
    os << (run.mode == Mode::HS ? "Holomorph simple (HS) case analysis"
                                : "Holomorph compound (HC, k = 2) case analysis")
       << "\n";
    os << "tool version " << kToolVersion << "\n\n";
    for (const auto& rec : run.cases) {
        os << rec.label << " — " << rec.subject << "\n";
        for (size_t i = 0; i < rec.cutoff_derived.size(); ++i) {
            os << "  cutoff: " << rec.cutoff_derived[i];
            if (rec.cutoff_matches)
                os << "   [matches]";
            else
                os << "   [EXPECTED: " << rec.cutoff_expected[i] << "]";
            os << "\n";
        }
        for (const auto& n : rec.notes) os << "  note: " << n << "\n";
        for (const auto& v : rec.verdicts) {
            os << "  " << to_string(v.group.id) << " (order "
               << v.group.order.get_str() << ", |Out| "
               << v.group.out_order.get_str() << "): "
               << elimination_name(v.eliminated_by);
            if (v.duplicate_of) os << " -> " << to_string(*v.duplicate_of);
            for (const auto& w : v.hs_witnesses)
                os << "  (s=" << w.s.get_str() << ", t'=" << w.t_prime.get_str()
                   << ")";
            for (const auto& w : v.hc_witnesses)
                os << "  (s=" << w.s.get_str() << ", y=" << w.y.get_str() << ")";
            if (v.flag)
                os << "  [t=" << v.flag->t.get_str() << ", " << "t+1="
                   << Int(v.flag->t + 1).get_str() << " does not divide "
                   << v.flag->modulus.get_str() << ", witness "
                   << v.flag->witness_prime.get_str() << "]";
            os << "\n";
            for (const auto& n : v.notes) os << "      note: " << n << "\n";
        }
        os << "\n";
    }
    os << "summary: candidates examined " << run.summary.candidates_examined
       << ", survivors before elimination "
       << run.summary.survivors_pre_elimination << ", after elimination "
       << run.summary.survivors_post_elimination << "\n";
    for (const auto& n : run.discrepancy_notes)
        os << "discrepancy: " << n << "\n";
    return os.str();
}

std::string enumeration_json(const std::vector<GroupFacts>& groups) {
    Json j = Json::array();
    for (const auto& g : groups) j.push_back(group_json_obj(g));
    return j.dump(2) + "\n";
}

std::string enumeration_text(const std::vector<GroupFacts>& groups) {
    std::ostringstream os;
    for (const auto& g : groups)
        os << to_string(g.id) << "  order " << g.order.get_str() << "  |Out| "
           << g.out_order.get_str() << "\n";
    os << groups.size() << " group(s)\n";
    return os.str();
}

std::string group_info_json(const GroupFacts& facts) {
    return group_json_obj(facts).dump(2) + "\n";
}

std::string group_info_text(const GroupFacts& facts) {
    std::ostringstream os;
    os << to_string(facts.id) << "\n"
       << "  order      " << facts.order.get_str() << "\n"
       << "  |Out|      " << facts.out_order.get_str() << "\n"
       << "  simple     " << (facts.is_simple ? "yes" : "no") << "\n"
       << "  canonical  " << to_string(facts.canonical) << "\n";
    return os.str();
}

std::string hs_witnesses_json(const std::vector<HSWitness>& ws) {
    Json j = Json::array();
    for (const auto& w : ws)
        j.push_back(Json{{"s", w.s.get_str()}, {"t'", w.t_prime.get_str()}});
    return j.dump(2) + "\n";
}

std::string hc_witnesses_json(const std::vector<HCWitness>& ws) {
    Json j = Json::array();
    for (const auto& w : ws)
        j.push_back(Json{{"s", w.s.get_str()}, {"y", w.y.get_str()}});
    return j.dump(2) + "\n";
}

namespace {

Json geometry_json_obj(const geom::IncidenceGeometry& g) {
    Json j;
    j["num_points"] = g.points.size();
    j["num_lines"] = g.lines.size();
    j["partial_linear"] = g.partial_linear;
    if (g.pls_violation)
        j["pls_violation"] = Json{{"p1", g.pls_violation->p1},
                                  {"p2", g.pls_violation->p2},
                                  {"line1", g.pls_violation->line1},
                                  {"line2", g.pls_violation->line2}};
    j["triangle_free"] = g.triangle_free;
    if (g.triangle)
        j["triangle"] =
            Json::array({g.triangle->a, g.triangle->b, g.triangle->c});
    Json lines = Json::array();
    for (const auto& l : g.lines) lines.push_back(l);
    j["lines"] = lines;
    return j;
}

}  // namespace

std::string geometry_json(const geom::IncidenceGeometry& g) {
    return geometry_json_obj(g).dump(2) + "\n";
}

std::string stabiliser_json(const geom::StabiliserReport& rep) {
    Json j;
    j["line"] = rep.line;
    j["stabiliser"] = rep.stabiliser;
    j["stab_subset_line"] = rep.stab_subset_line;
    j["union_of_left_cosets"] = rep.union_of_left_cosets;
    j["coset_decomposition"] = rep.coset_decomposition;
    j["stab_nontrivial"] = rep.stab_nontrivial;
    j["left_closure"] = rep.left_closure;
    j["triangle_free"] = rep.triangle_free;
    j["hypotheses_met"] = rep.hypotheses_met;
    j["stab_equals_line"] = rep.stab_equals_line;
    j["lemma_consistent"] = rep.lemma_consistent;
    return j.dump(2) + "\n";
}

std::string grid_json(const geom::GridResult& res) {
    Json j;
    j["s"] = res.s;
    j["geometry"] = geometry_json_obj(res.geometry);
    j["every_point_on_two_lines"] = res.every_point_on_two_lines;
    j["gq_axiom"] = res.gq_axiom;
    j["ok"] = res.ok();
    return j.dump(2) + "\n";
}

std::string double_cosets_json(const geom::DoubleCosetProfile& prof) {
    Json j;
    j["sizes"] = prof.sizes;
    j["partition_ok"] = prof.partition_ok;
    j["size_law_ok"] = prof.size_law_ok;
    return j.dump(2) + "\n";
}

}  // namespace gqv
