#include "nchodge/catio.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace nchodge {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kCategoryFormat = "nchodge-category/1";
constexpr const char* kFunctorFormat = "nchodge-functor/1";
constexpr const char* kChainsFormat = "nchodge-chains/1";
constexpr const char* kCyclesFormat = "nchodge-cycles/1";

[[noreturn]] void fail(const std::string& why) { throw std::runtime_error(why); }

Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(what + ": not valid JSON");
    return j;
}

void check_keys(const Json& j, const std::set<std::string>& allowed,
                const std::string& what) {
    if (!j.is_object()) fail(what + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) fail(what + ": unknown key '" + it.key() + "'");
}

void check_format(const Json& j, const char* expect, const std::string& what) {
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != expect)
        fail(what + ": missing or wrong format marker (expected '" + expect + "')");
}

std::string need_string(const Json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_string())
        fail(what + ": missing string '" + std::string(key) + "'");
    return j[key].get<std::string>();
}

int need_int(const Json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(what + ": missing integer '" + std::string(key) + "'");
    return j[key].get<int>();
}

const Json& need_array(const Json& j, const char* key, const std::string& what) {
    if (!j.contains(key) || !j[key].is_array())
        fail(what + ": missing array '" + std::string(key) + "'");
    return j[key];
}

int object_index(const AInfCategory& C, const std::string& label,
                 const std::string& what) {
    for (int i = 0; i < (int)C.objects.size(); ++i)
        if (C.objects[i] == label) return i;
    fail(what + ": undeclared object '" + label + "'");
}

int basis_id(const AInfCategory& C, const std::string& name, const std::string& what) {
    auto it = C.basis_index.find(name);
    if (it == C.basis_index.end()) fail(what + ": undeclared morphism '" + name + "'");
    return it->second;
}

Grading parse_grading(const std::string& text) {
    if (text == "Z" || text == "z") return Grading::integers();
    if (text.rfind("Z/", 0) == 0 || text.rfind("z/", 0) == 0) {
        try {
            return Grading::mod(std::stoi(text.substr(2)));
        } catch (const std::exception& e) {
            fail(std::string("bad grading '") + text + "': " + e.what());
        }
    }
    fail("bad grading '" + text + "' (expected 'Z' or 'Z/2m')");
}

SpVec parse_combo(const Json& j, const AInfCategory& C, const std::string& what) {
    if (!j.is_object()) fail(what + ": expected an object of coefficients");
    SpVec v;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_string()) fail(what + ": coefficient must be a string");
        int id = basis_id(C, it.key(), what);
        Scalar c = Scalar::parse(C.field, it.value().get<std::string>());
        if (!c.is_zero()) v[id] = c;
    }
    return v;
}

Json combo_json(const AInfCategory& C, const SpVec& v) {
    Json j = Json::object();
    for (const auto& [id, c] : v) j[C.basis[id].name] = c.str();
    return j;
}

Word parse_word(const Json& j, const AInfCategory& C, const std::string& what) {
    if (!j.is_array() || j.empty()) fail(what + ": expected a nonempty label array");
    Word w;
    for (const auto& e : j) {
        if (!e.is_string()) fail(what + ": word entries must be labels");
        w.push_back(basis_id(C, e.get<std::string>(), what));
    }
    return w;
}

Json word_json(const AInfCategory& C, const Word& w) {
    Json j = Json::array();
    for (int id : w) j.push_back(C.basis[id].name);
    return j;
}

Chain parse_chain(const Json& j, const AInfCategory& C, const std::string& what) {
    check_keys(j, {"terms"}, what);
    Chain ch = Chain::zero(C.field);
    for (const auto& t : need_array(j, "terms", what)) {
        check_keys(t, {"word", "c"}, what + " term");
        Word w = parse_word(t.contains("word") ? t["word"] : Json(), C, what);
        Scalar c = Scalar::parse(C.field, need_string(t, "c", what));
        ch.add(w, c);
    }
    return ch;
}

Json chain_json(const AInfCategory& C, const Chain& ch) {
    Json terms = Json::array();
    for (const auto& [w, c] : ch.terms)
        terms.push_back(Json{{"word", word_json(C, w)}, {"c", c.str()}});
    return Json{{"terms", std::move(terms)}};
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot write " + path);
    out << text;
    if (!out) fail("short write to " + path);
}

AInfCategory category_from_json(const std::string& text) {
    const std::string what = "category file";
    Json j = parse_json(text, what);
    check_keys(j,
               {"format", "name", "field", "grading", "objects", "basis", "mu",
                "units", "strict_units", "family", "cy_dim"},
               what);
    check_format(j, kCategoryFormat, what);
    AInfCategory C;
    C.name = need_string(j, "name", what);
    C.field = parse_field_tag(need_string(j, "field", what));
    C.grading = parse_grading(need_string(j, "grading", what));
    for (const auto& o : need_array(j, "objects", what)) {
        if (!o.is_string()) fail(what + ": object labels must be strings");
        C.add_object(o.get<std::string>());
    }
    for (const auto& b : need_array(j, "basis", what)) {
        check_keys(b, {"name", "src", "dst", "deg"}, what + " basis entry");
        C.add_basis(need_string(b, "name", what),
                    object_index(C, need_string(b, "src", what), what),
                    object_index(C, need_string(b, "dst", what), what),
                    need_int(b, "deg", what));
    }
    for (const auto& m : need_array(j, "mu", what)) {
        check_keys(m, {"in", "out", "c"}, what + " mu entry");
        Word in = parse_word(m.contains("in") ? m["in"] : Json(), C, what + " mu entry");
        int out = basis_id(C, need_string(m, "out", what), what + " mu entry");
        C.add_mu(in, out, Scalar::parse(C.field, need_string(m, "c", what)));
    }
    if (j.contains("units")) {
        for (const auto& u : need_array(j, "units", what)) {
            check_keys(u, {"object", "combo"}, what + " unit entry");
            int obj = object_index(C, need_string(u, "object", what), what);
            if (!u.contains("combo")) fail(what + ": unit entry lacks 'combo'");
            C.unit[obj] = parse_combo(u["combo"], C, what + " unit combo");
        }
    }
    if (j.contains("strict_units")) {
        for (const auto& u : need_array(j, "strict_units", what)) {
            check_keys(u, {"object", "letter", "c", "adjoined"}, what + " strict unit");
            int obj = object_index(C, need_string(u, "object", what), what);
            StrictUnit su;
            su.id = basis_id(C, need_string(u, "letter", what), what + " strict unit");
            su.coeff = Scalar::parse(C.field, need_string(u, "c", what));
            if (u.contains("adjoined")) {
                if (!u["adjoined"].is_boolean()) fail(what + ": 'adjoined' must be a bool");
                su.adjoined = u["adjoined"].get<bool>();
            }
            C.strict_unit[obj] = su;
        }
    }
    if (j.contains("family")) {
        if (!j["family"].is_boolean()) fail(what + ": 'family' must be a bool");
        C.family = j["family"].get<bool>();
        if (C.family && C.field.kind != FieldKind::RatFun)
            fail(what + ": a family must live over the rational function field");
    }
    if (j.contains("cy_dim")) C.cy_dim = need_int(j, "cy_dim", what);
    return C;
}

std::string category_to_json(const AInfCategory& C) {
    Json j;
    j["format"] = kCategoryFormat;
    j["name"] = C.name;
    j["field"] = to_string(C.field);
    j["grading"] = C.grading.str();
    j["objects"] = C.objects;
    Json basis = Json::array();
    for (const auto& b : C.basis)
        basis.push_back(Json{{"name", b.name},
                             {"src", C.objects[b.src]},
                             {"dst", C.objects[b.dst]},
                             {"deg", b.deg}});
    j["basis"] = std::move(basis);
    Json mu = Json::array();
    for (const auto& table : C.mu)
        for (const auto& [w, v] : table)
            for (const auto& [out, c] : v)
                mu.push_back(Json{{"in", word_json(C, w)},
                                  {"out", C.basis[out].name},
                                  {"c", c.str()}});
    j["mu"] = std::move(mu);
    if (!C.unit.empty()) {
        Json units = Json::array();
        for (const auto& [obj, v] : C.unit)
            units.push_back(Json{{"object", C.objects[obj]}, {"combo", combo_json(C, v)}});
        j["units"] = std::move(units);
    }
    if (!C.strict_unit.empty()) {
        Json sus = Json::array();
        for (const auto& [obj, su] : C.strict_unit)
            sus.push_back(Json{{"object", C.objects[obj]},
                               {"letter", C.basis[su.id].name},
                               {"c", su.coeff.str()},
                               {"adjoined", su.adjoined}});
        j["strict_units"] = std::move(sus);
    }
    if (C.family) j["family"] = true;
    if (C.cy_dim) j["cy_dim"] = *C.cy_dim;
    return j.dump(2) + "\n";
}

AInfCategory load_category(const std::string& path) {
    try {
        return category_from_json(read_text_file(path));
    } catch (const std::runtime_error& e) {
        fail(path + ": " + e.what());
    }
}

void save_category(const AInfCategory& C, const std::string& path) {
    write_text_file(path, category_to_json(C));
}

AInfFunctor functor_from_json(const std::string& text, const AInfCategory& C,
                              const AInfCategory& D) {
    const std::string what = "functor file";
    Json j = parse_json(text, what);
    check_keys(j, {"format", "name", "objects", "entries"}, what);
    check_format(j, kFunctorFormat, what);
    AInfFunctor Fn;
    Fn.name = need_string(j, "name", what);
    for (const auto& o : need_array(j, "objects", what)) {
        check_keys(o, {"from", "to"}, what + " object entry");
        Fn.obj_map[object_index(C, need_string(o, "from", what), what)] =
            object_index(D, need_string(o, "to", what), what);
    }
    for (const auto& e : need_array(j, "entries", what)) {
        check_keys(e, {"in", "out", "c"}, what + " entry");
        Word in = parse_word(e.contains("in") ? e["in"] : Json(), C, what + " entry");
        int out = basis_id(D, need_string(e, "out", what), what + " entry");
        Fn.add(in, out, Scalar::parse(D.field, need_string(e, "c", what)));
    }
    return Fn;
}

std::string functor_to_json(const AInfCategory& C, const AInfCategory& D,
                            const AInfFunctor& Fn) {
    Json j;
    j["format"] = kFunctorFormat;
    j["name"] = Fn.name;
    Json objs = Json::array();
    for (const auto& [from, to] : Fn.obj_map)
        objs.push_back(Json{{"from", C.objects[from]}, {"to", D.objects[to]}});
    j["objects"] = std::move(objs);
    Json entries = Json::array();
    for (const auto& table : Fn.F)
        for (const auto& [w, v] : table)
            for (const auto& [out, c] : v)
                entries.push_back(Json{{"in", word_json(C, w)},
                                       {"out", D.basis[out].name},
                                       {"c", c.str()}});
    j["entries"] = std::move(entries);
    return j.dump(2) + "\n";
}

AInfFunctor load_functor(const std::string& path, const AInfCategory& C,
                         const AInfCategory& D) {
    try {
        return functor_from_json(read_text_file(path), C, D);
    } catch (const std::runtime_error& e) {
        fail(path + ": " + e.what());
    }
}

std::vector<Chain> chains_from_json(const std::string& text, const AInfCategory& C) {
    const std::string what = "chain file";
    Json j = parse_json(text, what);
    check_keys(j, {"format", "chains"}, what);
    check_format(j, kChainsFormat, what);
    std::vector<Chain> out;
    for (const auto& c : need_array(j, "chains", what))
        out.push_back(parse_chain(c, C, what));
    return out;
}

std::string chains_to_json(const AInfCategory& C, const std::vector<Chain>& chains) {
    Json j;
    j["format"] = kChainsFormat;
    Json arr = Json::array();
    for (const Chain& ch : chains) arr.push_back(chain_json(C, ch));
    j["chains"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<Chain> load_chains(const std::string& path, const AInfCategory& C) {
    try {
        return chains_from_json(read_text_file(path), C);
    } catch (const std::runtime_error& e) {
        fail(path + ": " + e.what());
    }
}

std::vector<NegCyclicChain> cycles_from_json(const std::string& text,
                                             const AInfCategory& C, int order) {
    const std::string what = "cycle file";
    Json j = parse_json(text, what);
    check_keys(j, {"format", "cycles"}, what);
    check_format(j, kCyclesFormat, what);
    std::vector<NegCyclicChain> out;
    for (const auto& cyc : need_array(j, "cycles", what)) {
        check_keys(cyc, {"parts"}, what + " cycle");
        NegCyclicChain xi = NegCyclicChain::zero(C.field, order);
        for (const auto& part : need_array(cyc, "parts", what + " cycle")) {
            check_keys(part, {"u", "terms"}, what + " part");
            int k = need_int(part, "u", what + " part");
            if (k < 0 || k > order)
                fail(what + ": u-power " + std::to_string(k) +
                     " outside truncation order " + std::to_string(order));
            Json wrapped{{"terms", need_array(part, "terms", what + " part")}};
            xi.part[k] = xi.part[k] + parse_chain(wrapped, C, what + " part");
        }
        out.push_back(std::move(xi));
    }
    return out;
}

std::string cycles_to_json(const AInfCategory& C,
                           const std::vector<NegCyclicChain>& cycles) {
    Json j;
    j["format"] = kCyclesFormat;
    Json arr = Json::array();
    for (const NegCyclicChain& xi : cycles) {
        Json parts = Json::array();
        for (int k = 0; k <= xi.order; ++k)
            if (!xi.part[k].is_zero())
                parts.push_back(Json{{"u", k}, {"terms", chain_json(C, xi.part[k])["terms"]}});
        arr.push_back(Json{{"parts", std::move(parts)}});
    }
    j["cycles"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::vector<NegCyclicChain> load_cycles(const std::string& path,
                                        const AInfCategory& C, int order) {
    try {
        return cycles_from_json(read_text_file(path), C, order);
    } catch (const std::runtime_error& e) {
        fail(path + ": " + e.what());
    }
}

} // namespace nchodge
