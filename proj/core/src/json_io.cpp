#include "hamcay/json_io.hpp"

#include "hamcay/errors.hpp"

namespace hamcay {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string(what) + ": " + e.what());
    }
}

} // namespace

json to_json(const PcPresentation& p) {
    json c = json::array();
    for (const auto& row : p.c) c.push_back(row);
    return json{{"m", p.m}, {"e", p.e}, {"t", p.t}, {"r", p.r}, {"c", c}};
}

PcPresentation presentation_from_json(const json& j) {
    return guarded("presentation", [&] {
        PcPresentation p;
        p.m = j.at("m").get<i64>();
        p.e = j.at("e").get<std::vector<i64>>();
        p.t = j.value("t", std::vector<i64>(p.e.size(), 0));
        p.r = j.value("r", std::vector<i64>(p.e.size(), 1 % std::max<i64>(p.m, 1)));
        if (j.contains("c")) p.c = j.at("c").get<std::vector<std::vector<i64>>>();
        if (p.c.empty()) p.c.assign(p.e.size(), std::vector<i64>(p.e.size(), 0));
        return p;
    });
}

json to_json(const Element& x) { return json{{"q", x.q}, {"z", x.z}}; }

Element element_from_json(const json& j) {
    return guarded("element", [&] { return Element{j.at("q").get<std::vector<i64>>(), j.at("z").get<i64>()}; });
}

json to_json(const GenSet& s) {
    json out = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back({{"name", s.names[i]}, {"q", s.elems[i].q}, {"z", s.elems[i].z}});
    return out;
}

GenSet genset_from_json(const json& j) {
    return guarded("gens", [&] {
        GenSet s;
        for (const auto& g : j) {
            s.names.push_back(g.at("name").get<std::string>());
            s.elems.push_back(element_from_json(g));
        }
        return s;
    });
}

json to_json(const WalkSpec& w) {
    json steps = json::array();
    for (const auto& st : w.steps) steps.push_back(json::array({st.sym, st.sign}));
    return json{{"start", w.start ? to_json(*w.start) : json(nullptr)}, {"steps", steps}, {"multiplicity", w.multiplicity}};
}

WalkSpec walk_from_json(const json& j) {
    return guarded("walk", [&] {
        WalkSpec w;
        if (j.contains("start") && !j.at("start").is_null()) w.start = element_from_json(j.at("start"));
        for (const auto& st : j.at("steps")) {
            int sign = st.at(1).get<int>();
            if (sign != 1 && sign != -1) throw Error(ErrorKind::MalformedInput, "step sign must be +1 or -1");
            w.steps.push_back({st.at(0).get<std::string>(), sign});
        }
        w.multiplicity = j.value("multiplicity", i64{1});
        if (w.multiplicity < 1) throw Error(ErrorKind::MalformedInput, "multiplicity must be positive");
        return w;
    });
}

json to_json(const VerificationTranscript& t) {
    return json{{"visited", t.visited},
                {"first_repeat", t.first_repeat ? json(*t.first_repeat) : json(nullptr)},
                {"endpoint", t.endpoint},
                {"closed", t.closed},
                {"hamiltonian", t.hamiltonian},
                {"length", t.length}};
}

VerificationTranscript transcript_from_json(const json& j) {
    return guarded("transcript", [&] {
        VerificationTranscript t;
        t.visited = j.at("visited").get<std::size_t>();
        if (!j.at("first_repeat").is_null()) t.first_repeat = j.at("first_repeat").get<std::size_t>();
        t.endpoint = j.at("endpoint").get<std::size_t>();
        t.closed = j.at("closed").get<bool>();
        t.hamiltonian = j.at("hamiltonian").get<bool>();
        t.length = j.at("length").get<std::size_t>();
        return t;
    });
}

json to_json(const Instance& inst) {
    json j{{"presentation", to_json(inst.presentation)}, {"gens", to_json(inst.gens)}};
    if (!inst.label.empty()) j["label"] = inst.label;
    if (!inst.methods.empty()) j["methods"] = inst.methods;
    return j;
}

Instance instance_from_json(const json& j) {
    return guarded("instance", [&] {
        Instance inst;
        inst.label = j.value("label", std::string{});
        inst.presentation = presentation_from_json(j.at("presentation"));
        inst.gens = genset_from_json(j.at("gens"));
        if (j.contains("methods")) inst.methods = j.at("methods").get<std::vector<std::string>>();
        return inst;
    });
}

} // namespace hamcay
