#include "clfi/io.hpp"

#include <fstream>
#include <set>

namespace clfi {

namespace {

unsigned get_count(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ModelError(where + ": missing \"" + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ModelError(where + ": \"" + key + "\" must be a non-negative integer");
    return static_cast<unsigned>(v.get<long long>());
}

std::vector<unsigned> index_list(const Json& j, unsigned bound, const std::string& where) {
    if (!j.is_array()) throw ModelError(where + ": expected an array of indices");
    std::vector<unsigned> out;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw ModelError(where + ": indices must be integers");
        long long v = e.get<long long>();
        if (v < 0 || v >= static_cast<long long>(bound))
            throw ModelError(where + ": index " + std::to_string(v) + " out of range 0.." + std::to_string(bound - 1));
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

StateSet state_set(const Json& j, unsigned num_states, const std::string& where) {
    StateSet s;
    for (unsigned i : index_list(j, num_states, where)) s = s.with(i);
    return s;
}

AgentSet agent_set(const Json& j, unsigned num_agents, const std::string& where) {
    AgentSet c;
    for (unsigned i : index_list(j, num_agents, where)) {
        if (c.contains(i)) throw ModelError(where + ": duplicate agent " + std::to_string(i));
        c = c.with(i);
    }
    return c;
}

std::map<std::string, StateSet> valuation_from_json(const Json& j, unsigned num_states) {
    std::map<std::string, StateSet> v;
    if (!j.is_object()) throw ModelError("\"valuation\" must be an object mapping atoms to state lists");
    for (const auto& [atom, states] : j.items()) v[atom] = state_set(states, num_states, "valuation of '" + atom + "'");
    return v;
}

Json valuation_to_json(const std::map<std::string, StateSet>& v) {
    Json j = Json::object();
    for (const auto& [atom, states] : v) j[atom] = state_set_to_json(states);
    return j;
}

}  // namespace

Json state_set_to_json(StateSet s) {
    Json j = Json::array();
    for (unsigned i : s.members()) j.push_back(i);
    return j;
}

Json agent_set_to_json(AgentSet s) {
    Json j = Json::array();
    for (unsigned i : s.members()) j.push_back(i);
    return j;
}

CoalitionModel model_from_json(const Json& j) {
    const unsigned n = get_count(j, "states", "model");
    const unsigned k = get_count(j, "agents", "model");
    if (n == 0 || n > kMaxStates) throw ModelError("model: \"states\" must be in 1.." + std::to_string(kMaxStates));
    if (k == 0 || k > kMaxAgents) throw ModelError("model: \"agents\" must be in 1.." + std::to_string(kMaxAgents));
    CoalitionModel m(n, k);
    if (j.contains("valuation"))
        for (const auto& [atom, states] : valuation_from_json(j.at("valuation"), n)) m.set_valuation(atom, states);

    if (!j.contains("effectivity") || !j.at("effectivity").is_array())
        throw ModelError("model: missing \"effectivity\" array");
    std::vector<char> seen(std::size_t(n) << k, 0);
    std::size_t entry_no = 0;
    for (const Json& e : j.at("effectivity")) {
        const std::string where = "effectivity entry " + std::to_string(entry_no++);
        const unsigned w = get_count(e, "state", where);
        if (w >= n) throw ModelError(where + ": state " + std::to_string(w) + " out of range");
        if (!e.contains("coalition")) throw ModelError(where + ": missing \"coalition\"");
        const AgentSet c = agent_set(e.at("coalition"), k, where + " coalition");
        const bool has_min = e.contains("minimal");
        const bool has_exp = e.contains("explicit");
        if (has_min == has_exp) throw ModelError(where + ": give exactly one of \"minimal\" or \"explicit\"");
        const Json& list = has_min ? e.at("minimal") : e.at("explicit");
        if (!list.is_array()) throw ModelError(where + ": family must be an array of state lists");
        std::vector<StateSet> sets;
        for (const Json& s : list) sets.push_back(state_set(s, n, where));
        std::size_t slot = (std::size_t(w) << k) | c.bits();
        if (seen[slot])
            throw ModelError(where + ": duplicate entry for state " + std::to_string(w) + ", coalition " + c.str());
        seen[slot] = 1;
        if (has_exp) {
            try {
                m.set_eff(w, c, EffFamily::from_explicit(sets, n));
            } catch (const ModelError& err) {
                throw ModelError(where + ": " + err.what());
            }
        } else {
            m.set_eff(w, c, EffFamily(std::move(sets)));
        }
    }
    for (std::size_t slot = 0; slot < seen.size(); ++slot)
        if (!seen[slot])
            throw ModelError("model: effectivity must be total; missing state " + std::to_string(slot >> k) +
                             ", coalition " + AgentSet(static_cast<AgentSet::word_type>(slot & ((1u << k) - 1))).str());
    return m;
}

Json model_to_json(const CoalitionModel& m) {
    Json j;
    j["states"] = m.num_states();
    j["agents"] = m.num_agents();
    j["valuation"] = valuation_to_json(m.valuation());
    Json eff = Json::array();
    for (State w = 0; w < m.num_states(); ++w)
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            AgentSet c(static_cast<AgentSet::word_type>(cb));
            Json entry;
            entry["state"] = w;
            entry["coalition"] = agent_set_to_json(c);
            Json mins = Json::array();
            for (StateSet x : m.eff(w, c).minimal()) mins.push_back(state_set_to_json(x));
            entry["minimal"] = std::move(mins);
            eff.push_back(std::move(entry));
        }
    j["effectivity"] = std::move(eff);
    return j;
}

GameFormFile game_form_from_json(const Json& j) {
    const unsigned n = get_count(j, "states", "game form");
    const unsigned k = get_count(j, "agents", "game form");
    if (n == 0 || n > kMaxStates)
        throw ModelError("game form: \"states\" must be in 1.." + std::to_string(kMaxStates));
    if (k == 0 || k > kMaxAgents)
        throw ModelError("game form: \"agents\" must be in 1.." + std::to_string(kMaxAgents));
    if (!j.contains("forms") || !j.at("forms").is_array()) throw ModelError("game form: missing \"forms\" array");

    std::vector<std::optional<StateForm>> by_state(n);
    std::optional<StateForm> fallback;
    std::size_t entry_no = 0;
    for (const Json& e : j.at("forms")) {
        const std::string where = "form entry " + std::to_string(entry_no++);
        if (!e.is_object() || !e.contains("actions") || !e.contains("outcomes"))
            throw ModelError(where + ": needs \"actions\" and \"outcomes\"");
        StateForm f;
        for (const Json& a : e.at("actions")) {
            if (!a.is_number_integer() || a.get<long long>() <= 0)
                throw ModelError(where + ": action counts must be positive integers");
            f.actions.push_back(static_cast<unsigned>(a.get<long long>()));
        }
        f.outcomes = index_list(e.at("outcomes"), n, where + " outcomes");
        if (e.contains("state")) {
            unsigned w = get_count(e, "state", where);
            if (w >= n) throw ModelError(where + ": state " + std::to_string(w) + " out of range");
            if (by_state[w]) throw ModelError(where + ": duplicate form for state " + std::to_string(w));
            by_state[w] = std::move(f);
        } else {
            if (fallback) throw ModelError(where + ": more than one form without \"state\"");
            fallback = std::move(f);
        }
    }
    std::vector<StateForm> forms;
    for (State w = 0; w < n; ++w) {
        if (by_state[w])
            forms.push_back(*by_state[w]);
        else if (fallback)
            forms.push_back(*fallback);
        else
            throw ModelError("game form: no form for state " + std::to_string(w) + " and no default form");
    }
    GameFormFile out{GameForm(n, k, std::move(forms)), {}};
    if (j.contains("valuation")) out.valuation = valuation_from_json(j.at("valuation"), n);
    return out;
}

Json game_form_to_json(const GameForm& g, const std::map<std::string, StateSet>& valuation) {
    Json j;
    j["states"] = g.num_states();
    j["agents"] = g.num_agents();
    Json forms = Json::array();
    for (State w = 0; w < g.num_states(); ++w) {
        Json f;
        f["state"] = w;
        f["actions"] = g.at(w).actions;
        f["outcomes"] = g.at(w).outcomes;
        forms.push_back(std::move(f));
    }
    j["forms"] = std::move(forms);
    if (!valuation.empty()) j["valuation"] = valuation_to_json(valuation);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ModelError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace clfi
