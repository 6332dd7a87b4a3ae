#include "clfi/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "clfi/duality.hpp"
#include "clfi/explore.hpp"
#include "clfi/formula.hpp"
#include "clfi/gameform.hpp"
#include "clfi/io.hpp"
#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"
#include "clfi/regions.hpp"
#include "clfi/robustness.hpp"

namespace clfi::cli {

namespace {

struct Options {
    std::string model;
    std::string game_form;
    std::string formula;
    std::string coalition;
    bool coalition_given = false;
    std::string output;
    std::string format = "text";
    std::string kind;
    std::string as = "model";
    std::optional<unsigned> state;
    std::optional<unsigned> agent;
    std::optional<unsigned> k;
    unsigned gen_states = 3;
    unsigned gen_agents = 2;
    unsigned max_actions = 2;
    unsigned max_states = 3;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    unsigned sat_agents = 0;
    bool allow_large = false;

    bool json() const { return format == "json"; }
    Limits limits() const { return allow_large ? Limits::hard() : Limits{}; }
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

AgentSet parse_coalition_arg(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '{' && ch != '}' && ch != ' ') s += ch;
    AgentSet c;
    if (s.empty()) return c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw ModelError("bad coalition '" + text + "': expected comma-separated agent indices");
        unsigned long v = std::stoul(item);
        if (v >= kMaxAgents) throw ModelError("bad coalition '" + text + "': agent index too large");
        if (c.contains(static_cast<unsigned>(v))) throw ModelError("bad coalition '" + text + "': duplicate agent");
        c = c.with(static_cast<unsigned>(v));
    }
    return c;
}

CoalitionModel load_model(const Options& o) {
    if (o.model.empty()) throw ModelError("--model is required");
    return model_from_json(read_json_file(o.model));
}

Formula load_formula(const Options& o) {
    if (o.formula.empty()) throw ModelError("--formula is required");
    return parse(o.formula);
}

void check_fits(const CoalitionModel& m, AgentSet c) {
    if (!c.fits(m.num_agents()))
        throw ModelError("coalition " + c.str() + " exceeds the model's " + std::to_string(m.num_agents()) + " agents");
}

std::vector<State> selected_states(const CoalitionModel& m, const Options& o) {
    if (o.state) {
        if (*o.state >= m.num_states()) throw ModelError("--state " + std::to_string(*o.state) + " out of range");
        return {*o.state};
    }
    std::vector<State> all;
    for (State w = 0; w < m.num_states(); ++w) all.push_back(w);
    return all;
}

std::vector<AgentSet> selected_coalitions(const CoalitionModel& m, const Options& o) {
    if (o.coalition_given) {
        AgentSet c = parse_coalition_arg(o.coalition);
        check_fits(m, c);
        return {c};
    }
    std::vector<AgentSet> all;
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) all.emplace_back(static_cast<AgentSet::word_type>(cb));
    return all;
}

Agent required_agent(const CoalitionModel& m, const Options& o) {
    if (!o.agent) throw ModelError("--agent is required");
    if (*o.agent >= m.num_agents()) throw ModelError("--agent " + std::to_string(*o.agent) + " out of range");
    return *o.agent;
}

void emit_json_to(const Json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw ModelError("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

Json family_to_json(const std::vector<StateSet>& sets) {
    Json j = Json::array();
    for (StateSet s : sets) j.push_back(state_set_to_json(s));
    return j;
}

std::string sets_str(const std::vector<StateSet>& sets) {
    std::string s = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? "," : "") + sets[i].str();
    return s + "]";
}

std::string coalitions_str(const std::vector<AgentSet>& cs) {
    std::string s = "[";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + cs[i].str();
    return s + "]";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Limits lim = o.limits();
    PlayabilityReport report = check_playability(m, lim);
    auto regular = check_regularity(m);
    auto monotone = check_coalition_monotonicity(m, lim);
    std::vector<std::optional<AlphaDualityWitness>> alpha;
    for (State w = 0; w < m.num_states(); ++w) alpha.push_back(alpha_duality_witness(m, w, lim));

    if (o.json()) {
        Json j;
        j["playable"] = report.playable();
        Json states = Json::array();
        for (State w = 0; w < m.num_states(); ++w) {
            Json s;
            s["state"] = w;
            Json vs = Json::array();
            for (const auto& v : report.per_state[w]) {
                Json e;
                e["kind"] = to_string(v.kind);
                e["c"] = agent_set_to_json(v.c);
                e["d"] = agent_set_to_json(v.d);
                e["x"] = state_set_to_json(v.x);
                e["y"] = state_set_to_json(v.y);
                vs.push_back(e);
            }
            s["violations"] = vs;
            s["alpha_dual"] = !alpha[w].has_value();
            if (alpha[w]) {
                s["alpha_witness"] = {{"c", agent_set_to_json(alpha[w]->c)}, {"x", state_set_to_json(alpha[w]->x)}};
            }
            states.push_back(s);
        }
        j["states"] = states;
        Json rv = Json::array();
        for (const auto& v : regular)
            rv.push_back({{"state", v.state}, {"c", agent_set_to_json(v.c)}, {"x", state_set_to_json(v.x)}});
        j["regularity"] = rv;
        Json mv = Json::array();
        for (const auto& v : monotone)
            mv.push_back({{"state", v.state},
                          {"c", agent_set_to_json(v.c)},
                          {"d", agent_set_to_json(v.d)},
                          {"x", state_set_to_json(v.x)}});
        j["coalition_monotonicity"] = mv;
        out << j.dump(2) << "\n";
    } else {
        for (State w = 0; w < m.num_states(); ++w) {
            const auto& vs = report.per_state[w];
            out << "state " << w << ": " << (vs.empty() ? "playable" : std::to_string(vs.size()) + " violation(s)")
                << "\n";
            for (const auto& v : vs) {
                out << "  " << to_string(v.kind);
                switch (v.kind) {
                    case ViolationKind::Superadditivity:
                        out << " C=" << v.c.str() << " D=" << v.d.str() << " X=" << v.x.str() << " Y=" << v.y.str();
                        break;
                    case ViolationKind::NMaximality: out << " X=" << v.x.str(); break;
                    default: out << " C=" << v.c.str(); break;
                }
                out << "\n";
            }
        }
        out << "regularity: " << (regular.empty() ? "ok" : std::to_string(regular.size()) + " violation(s)") << "\n";
        for (const auto& v : regular) out << "  state " << v.state << " C=" << v.c.str() << " X=" << v.x.str() << "\n";
        out << "coalition-monotonicity: "
            << (monotone.empty() ? "ok" : std::to_string(monotone.size()) + " violation(s)") << "\n";
        for (const auto& v : monotone)
            out << "  state " << v.state << " C=" << v.c.str() << " D=" << v.d.str() << " X=" << v.x.str() << "\n";
        for (State w = 0; w < m.num_states(); ++w) {
            out << "alpha-duality state " << w << ": ";
            if (alpha[w])
                out << "fails (C=" << alpha[w]->c.str() << ", X=" << alpha[w]->x.str() << ")\n";
            else
                out << "holds\n";
        }
        out << "playable: " << yes_no(report.playable()) << "\n";
    }
    return report.playable() ? kOk : kFails;
}

int cmd_induce(const Options& o, std::ostream& out) {
    if (o.game_form.empty()) throw ModelError("--game-form is required");
    GameFormFile gf = game_form_from_json(read_json_file(o.game_form));
    CoalitionModel m = induce_model(gf.form, gf.valuation, o.limits());
    emit_json_to(model_to_json(m), o.output, out);
    return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    StateSet t = truth_set(m, f);
    auto states = selected_states(m, o);
    if (o.json()) {
        Json j;
        j["formula"] = print(f);
        Json rows = Json::array();
        for (State w : states) rows.push_back({{"state", w}, {"holds", t.contains(w)}});
        j["states"] = rows;
        out << j.dump(2) << "\n";
    } else {
        for (State w : states) out << "state " << w << ": " << (t.contains(w) ? "true" : "false") << "\n";
    }
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    if (!o.coalition_given) throw ModelError("--coalition is required");
    AgentSet c = parse_coalition_arg(o.coalition);
    check_fits(m, c);
    StateSet x = truth_set(m, f);
    auto states = selected_states(m, o);
    if (o.json()) {
        Json j;
        j["coalition"] = agent_set_to_json(c);
        j["formula"] = print(f);
        Json rows = Json::array();
        for (State w : states) rows.push_back({{"state", w}, {"category", to_string(classify_set(m, w, c, x))}});
        j["states"] = rows;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < states.size(); ++i)
            out << (i ? ", " : "") << "state " << states[i] << ": " << to_string(classify_set(m, states[i], c, x));
        out << "\n";
    }
    return kOk;
}

int cmd_regions(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Limits lim = o.limits();
    bool ok = true;
    Json reports = Json::array();
    std::ostringstream text;
    for (State w : selected_states(m, o)) {
        for (AgentSet c : selected_coalitions(m, o)) {
            RegionReport r = power_regions(m, w, c, lim);
            bool closed = r.upward_closed && r.downward_closed;
            ok = ok && closed && r.all_convex();
            Json jr;
            jr["state"] = w;
            jr["coalition"] = agent_set_to_json(c);
            Json regions = Json::object();
            text << "state " << w << " coalition " << c.str() << "\n";
            for (PowerCategory cat : kCategories) {
                auto members = r.members(cat);
                auto mins = minimal_members(members);
                auto maxs = maximal_members(members);
                bool convex = r.convex[static_cast<unsigned>(cat)];
                regions[to_string(cat)] = {{"cardinality", members.size()},
                                           {"minimal", family_to_json(mins)},
                                           {"maximal", family_to_json(maxs)},
                                           {"convex", convex}};
                text << "  " << to_string(cat) << ": cardinality " << members.size() << ", minimal "
                     << sets_str(mins) << ", maximal " << sets_str(maxs) << ", convex " << yes_no(convex) << "\n";
            }
            jr["regions"] = regions;
            jr["upward_closed"] = r.upward_closed;
            jr["downward_closed"] = r.downward_closed;
            jr["monotone_certificate"] = r.monotone_certificate;
            text << "  closure: upward " << yes_no(r.upward_closed) << ", downward " << yes_no(r.downward_closed)
                 << "; monotone certificate " << yes_no(r.monotone_certificate) << "\n";
            reports.push_back(jr);
        }
    }
    Json doc = {{"reports", reports}, {"all_convex", ok}};
    if (!o.output.empty()) emit_json_to(doc, o.output, out);
    if (o.json())
        out << doc.dump(2) << "\n";
    else
        out << text.str();
    return ok ? kOk : kFails;
}

int cmd_klein(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    Limits lim = o.limits();
    // observed[transform][base category] = image, filled from every checked instance.
    std::optional<PowerCategory> observed[4][4];
    bool consistent = true;
    Json instances = Json::array();
    for (State w : selected_states(m, o)) {
        for (AgentSet c : selected_coalitions(m, o)) {
            KleinTable t = klein_table_check(m, w, c, f, lim);
            consistent = consistent && t.pass();
            Json rows = Json::array();
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                auto& slot = observed[r][static_cast<unsigned>(t.base)];
                if (slot && *slot != t.rows[r].observed) consistent = false;
                slot = t.rows[r].observed;
                rows.push_back({{"transform", to_string(t.rows[r].transform)},
                                {"coalition", agent_set_to_json(t.rows[r].coalition)},
                                {"formula", print(t.rows[r].formula)},
                                {"category", to_string(t.rows[r].observed)},
                                {"expected", to_string(t.rows[r].expected)}});
            }
            instances.push_back({{"state", w}, {"coalition", agent_set_to_json(c)}, {"base", to_string(t.base)},
                                 {"rows", rows}, {"pass", t.pass()}});
        }
    }
    if (o.json()) {
        Json table = Json::object();
        for (std::size_t r = 0; r < 4; ++r) {
            Json row = Json::object();
            for (PowerCategory cat : kCategories) {
                auto& slot = observed[r][static_cast<unsigned>(cat)];
                row[to_string(cat)] = slot ? Json(to_string(*slot)) : Json(nullptr);
            }
            table[to_string(kTransforms[r])] = row;
        }
        out << Json{{"table", table}, {"instances", instances}, {"pass", consistent}}.dump(2) << "\n";
    } else {
        out << "transform | FC PD AD FI\n";
        for (std::size_t r = 0; r < 4; ++r) {
            std::string name = to_string(kTransforms[r]);
            name.resize(9, ' ');
            out << name << " |";
            for (PowerCategory cat : kCategories) {
                auto& slot = observed[r][static_cast<unsigned>(cat)];
                out << " " << (slot ? to_string(*slot) : "--");
            }
            out << "\n";
        }
        out << "klein action: " << (consistent ? "pass" : "fail") << "\n";
    }
    return consistent ? kOk : kFails;
}

int cmd_robustness(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    Limits lim = o.limits();
    bool holds = true;
    Json rows = Json::array();
    for (State w : selected_states(m, o)) {
        ThresholdReport r = inability_threshold(m, w, f, lim);
        Json row = {{"state", w}};
        Json chain = Json::array();
        for (AgentSet c : r.minimal_escaping) chain.push_back(agent_set_to_json(c));
        row["minimal_escaping"] = chain;
        row["degree"] = r.degree ? Json(*r.degree) : Json("inf");
        std::string line = "state " + std::to_string(w) + ": minimal_escaping=" + coalitions_str(r.minimal_escaping) +
                           " degree=" + (r.degree ? std::to_string(*r.degree) : std::string("inf"));
        if (o.k) {
            bool by_degree = is_k_robust(m, w, f, *o.k, lim);
            bool by_sweep = is_k_robust_exhaustive(m, w, f, *o.k, lim);
            holds = holds && by_degree && by_sweep;
            row["k"] = *o.k;
            row["k_robust"] = by_degree;
            row["k_robust_exhaustive"] = by_sweep;
            line += " " + std::to_string(*o.k) + "-robust=" + yes_no(by_degree) + " (exhaustive " +
                    yes_no(by_sweep) + ")";
        }
        rows.push_back(row);
        if (!o.json()) out << line << "\n";
    }
    if (o.json()) out << Json{{"formula", print(f)}, {"states", rows}}.dump(2) << "\n";
    return holds ? kOk : kFails;
}

int cmd_dummy(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    Agent i = required_agent(m, o);
    Limits lim = o.limits();
    bool refuted = false;
    Json rows = Json::array();
    for (State w : selected_states(m, o)) {
        DummyResult d = is_dummy(m, w, i, f, lim);
        DummyFiVerdict v = dummy_fi_check(m, w, i, f, lim);
        refuted = refuted || v.outcome == DummyFiVerdict::Outcome::Refuted;
        if (o.json()) {
            rows.push_back({{"state", w},
                            {"dummy", d.dummy},
                            {"witness", d.witness ? agent_set_to_json(*d.witness) : Json(nullptr)},
                            {"dummy_for_negation", v.dummy_for_not_f},
                            {"empty_coalition_undetermined", v.empty_coalition_undetermined},
                            {"singleton_category", to_string(v.singleton_category)},
                            {"verdict", to_string(v.outcome)}});
        } else {
            out << "state " << w << ": agent " << i << " dummy=" << yes_no(d.dummy)
                << " witness=" << (d.witness ? d.witness->str() : std::string("-"))
                << " dummy_for_negation=" << yes_no(v.dummy_for_not_f)
                << " empty_undetermined=" << yes_no(v.empty_coalition_undetermined)
                << " singleton=" << to_string(v.singleton_category) << " verdict=" << to_string(v.outcome) << "\n";
        }
    }
    if (o.json()) out << Json{{"agent", i}, {"formula", print(f)}, {"states", rows}}.dump(2) << "\n";
    return refuted ? kFails : kOk;
}

int cmd_translate(const Options& o, std::ostream& out) {
    Formula f = load_formula(o);
    Formula t = translate(f);
    if (o.json())
        out << Json{{"input", print(f)}, {"translation", print(t)}}.dump(2) << "\n";
    else
        out << print(t) << "\n";
    return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
    CoalitionModel m = load_model(o);
    Formula f = load_formula(o);
    Agent i = required_agent(m, o);
    auto counts = strategic_profile(m, i, f);
    if (o.json())
        out << Json{{"agent", i}, {"formula", print(f)}, {"FC", counts[0]}, {"PD", counts[1]}, {"AD", counts[2]},
                    {"FI", counts[3]}}
                   .dump(2)
            << "\n";
    else
        out << "FC=" << counts[0] << " PD=" << counts[1] << " AD=" << counts[2] << " FI=" << counts[3] << "\n";
    return kOk;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.kind.empty()) throw ModelError("--kind is required");
    if (o.as != "model" && o.as != "game-form") throw ModelError("--as must be 'model' or 'game-form'");
    const std::vector<std::string> fixtures = fixture_names();
    if (std::find(fixtures.begin(), fixtures.end(), o.kind) != fixtures.end()) {
        Fixture fx = fixture(o.kind);
        emit_json_to(o.as == "model" ? model_to_json(fx.model) : game_form_to_json(fx.form, fx.model.valuation()),
                     o.output, out);
        return kOk;
    }
    if (o.kind == "random") {
        RandomModel r = random_model(o.seed, o.gen_states, o.gen_agents, o.max_actions, {"p", "q"});
        emit_json_to(o.as == "model" ? model_to_json(r.model) : game_form_to_json(r.form, r.model.valuation()),
                     o.output, out);
        return kOk;
    }
    if (o.kind == "alpha-dual") {
        if (o.as != "model") throw ModelError("alpha-dual models have no game form; use --as model");
        AlphaDualModel r = random_alpha_dual(o.seed, o.gen_states, o.gen_agents);
        if (r.fallback_used) err << "note: retry budget exhausted at some state; dictator family used there\n";
        emit_json_to(model_to_json(r.model), o.output, out);
        return kOk;
    }
    throw ModelError("unknown --kind '" + o.kind +
                     "' (expected matching-pennies, dictator, veto, shutdown, random, alpha-dual)");
}

int cmd_sat(const Options& o, std::ostream& out) {
    Formula f = load_formula(o);
    SatOptions so;
    so.agents = o.sat_agents;
    so.max_states = o.max_states;
    so.max_actions = o.max_actions;
    so.samples = o.samples;
    so.seed = o.seed;
    SatResult r = bounded_sat(f, so);
    const bool found = r.status == SatResult::Status::Witness;
    const char* mode = r.exhaustive ? "exhaustive" : "sampled";
    if (found && !o.output.empty()) emit_json_to(model_to_json(r.witness->model), o.output, out);
    if (o.json()) {
        Json j = {{"formula", print(f)}, {"agents", r.agents}, {"mode", mode}, {"examined", r.examined}};
        j["result"] = found ? "witness" : "unknown";
        if (found) {
            j["state"] = r.witness->state;
            j["model"] = model_to_json(r.witness->model);
            j["game_form"] = game_form_to_json(r.witness->form);
        }
        out << j.dump(2) << "\n";
    } else if (found) {
        out << "witness: state " << r.witness->state << " of a " << r.witness->model.num_states() << "-state, "
            << r.agents << "-agent model (" << mode << " search, " << r.examined << " candidates examined)\n";
        if (o.output.empty()) out << model_to_json(r.witness->model).dump(2) << "\n";
    } else {
        out << "unknown: no witness among " << r.examined << " candidates (" << mode
            << " search; bounded search never proves unsatisfiability)\n";
    }
    return found ? kOk : kFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coalition logic with full inability: model checking and power analysis", "clfi"};
    app.require_subcommand(1);
    Options o;
    std::vector<CLI::Option*> coalition_opts;

    auto add_model = [&](CLI::App* sub) { sub->add_option("--model", o.model, "Model file (JSON)")->required(); };
    auto add_formula = [&](CLI::App* sub) { sub->add_option("--formula", o.formula, "Formula")->required(); };
    auto add_state = [&](CLI::App* sub) { sub->add_option("--state", o.state, "State (default: all states)"); };
    auto add_coalition = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--coalition", o.coalition, "Coalition, e.g. 0,1 or {0,1} or {}");
        if (required) opt->required();
        coalition_opts.push_back(opt);
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--allow-large", o.allow_large, "Raise sweep caps to the hard limits");
    };

    std::map<std::string, std::function<int()>> handlers;

    auto* validate = app.add_subcommand("validate", "Playability, regularity, monotonicity, alpha-duality");
    add_model(validate);
    add_common(validate);
    handlers["validate"] = [&] { return cmd_validate(o, out); };

    auto* induce = app.add_subcommand("induce", "Game form to model file");
    induce->add_option("--game-form", o.game_form, "Game-form file (JSON)")->required();
    induce->add_option("-o,--output", o.output, "Output model file (default: stdout)");
    add_common(induce);
    handlers["induce"] = [&] { return cmd_induce(o, out); };

    auto* check = app.add_subcommand("check", "Formula truth per state");
    add_model(check);
    add_formula(check);
    add_state(check);
    add_common(check);
    handlers["check"] = [&] { return cmd_check(o, out); };

    auto* cls = app.add_subcommand("classify", "FC/PD/AD/FI per state");
    add_model(cls);
    add_formula(cls);
    add_coalition(cls, true);
    add_state(cls);
    add_common(cls);
    handlers["classify"] = [&] { return cmd_classify(o, out); };

    auto* regions = app.add_subcommand("regions", "Power regions, closure and convexity");
    add_model(regions);
    add_state(regions);
    add_coalition(regions, false);
    regions->add_option("-o,--output", o.output, "Also write the JSON report to this file");
    add_common(regions);
    handlers["regions"] = [&] { return cmd_regions(o, out); };

    auto* klein = app.add_subcommand("klein", "Transformation table under alpha-duality");
    add_model(klein);
    add_formula(klein);
    add_state(klein);
    add_coalition(klein, false);
    add_common(klein);
    handlers["klein"] = [&] { return cmd_klein(o, out); };

    auto* robust = app.add_subcommand("robustness", "Inability threshold, degree, k-robustness");
    add_model(robust);
    add_formula(robust);
    add_state(robust);
    robust->add_option("--k", o.k, "Check k-robustness; exit 0 iff it holds");
    add_common(robust);
    handlers["robustness"] = [&] { return cmd_robustness(o, out); };

    auto* dummy = app.add_subcommand("dummy", "Propositional dummy analysis");
    add_model(dummy);
    add_formula(dummy);
    add_state(dummy);
    dummy->add_option("--agent", o.agent, "Agent")->required();
    add_common(dummy);
    handlers["dummy"] = [&] { return cmd_dummy(o, out); };

    auto* trans = app.add_subcommand("translate", "Eliminate FI");
    add_formula(trans);
    add_common(trans);
    handlers["translate"] = [&] { return cmd_translate(o, out); };

    auto* profile = app.add_subcommand("profile", "Per-state category counts for one agent");
    add_model(profile);
    add_formula(profile);
    profile->add_option("--agent", o.agent, "Agent")->required();
    add_common(profile);
    handlers["profile"] = [&] { return cmd_profile(o, out); };

    auto* gen = app.add_subcommand("gen", "Emit a fixture or a seeded random model");
    gen->add_option("--kind", o.kind, "matching-pennies|dictator|veto|shutdown|random|alpha-dual")->required();
    gen->add_option("--seed", o.seed, "Seed");
    gen->add_option("--states", o.gen_states, "States (random kinds)");
    gen->add_option("--agents", o.gen_agents, "Agents (random kinds)");
    gen->add_option("--max-actions", o.max_actions, "Max actions per agent (random)");
    gen->add_option("--as", o.as, "model|game-form");
    gen->add_option("-o,--output", o.output, "Output file (default: stdout)");
    add_common(gen);
    handlers["gen"] = [&] { return cmd_gen(o, out, err); };

    auto* sat = app.add_subcommand("sat", "Bounded (sound, incomplete) satisfiability search");
    add_formula(sat);
    sat->add_option("--max-states", o.max_states, "Largest state count searched");
    sat->add_option("--max-actions", o.max_actions, "Largest action count per agent");
    sat->add_option("--samples", o.samples, "Candidate budget");
    sat->add_option("--seed", o.seed, "Seed for sampled search");
    sat->add_option("--agents", o.sat_agents, "Agent count (default: max(mentioned, 2))");
    sat->add_option("-o,--output", o.output, "Write the witness model to this file");
    add_common(sat);
    handlers["sat"] = [&] { return cmd_sat(o, out); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    for (CLI::Option* opt : coalition_opts) o.coalition_given = o.coalition_given || opt->count() > 0;

    try {
        return handlers.at(app.get_subcommands().front()->get_name())();
    } catch (const PreconditionError& e) {
        err << "precondition failed: " << e.what() << "\n";
        return kFails;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input file: " << e.what() << "\n";
        return kInputError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"clfi"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace clfi::cli
