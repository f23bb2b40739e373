#include "zres/json_io.hpp"

namespace zres {

namespace {

const char* kind_name(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::CompactLevel: return "compact_tower_level";
        case SurfaceKind::NoncompactE: return "noncompact_E";
        case SurfaceKind::StrictSheet: return "strict_transform_sheet";
        case SurfaceKind::NoncompactD: return "noncompact_Dtilde";
    }
    return "?";
}

SurfaceKind kind_from(const std::string& s) {
    if (s == "compact_tower_level") return SurfaceKind::CompactLevel;
    if (s == "noncompact_E") return SurfaceKind::NoncompactE;
    if (s == "strict_transform_sheet") return SurfaceKind::StrictSheet;
    if (s == "noncompact_Dtilde") return SurfaceKind::NoncompactD;
    throw StructuralError("unknown surface kind: " + s);
}

const char* base_name(BaseLocus b) {
    switch (b) {
        case BaseLocus::Generic: return "generic";
        case BaseLocus::EdgePoint: return "edge_point";
        case BaseLocus::ArrowPoint: return "arrow_point";
    }
    return "?";
}

BaseLocus base_from(const std::string& s) {
    if (s == "generic") return BaseLocus::Generic;
    if (s == "edge_point") return BaseLocus::EdgePoint;
    if (s == "arrow_point") return BaseLocus::ArrowPoint;
    throw StructuralError("unknown base locus: " + s);
}

ojson chain_to_json(const ChainDescriptor& c) {
    ojson j;
    ojson comps = ojson::array();
    for (const auto& comp : c.components)
        comps.push_back(ojson::array({comp.self_int, comp.fiber_mult}));
    j["components"] = std::move(comps);
    j["blow_ups"] = c.blow_ups;
    if (c.s_kind == StrictMeets::C1) j["s_meets"] = "C1";
    else if (c.s_kind == StrictMeets::None) j["s_meets"] = "none";
    else j["s_meets"] = c.s_index;
    return j;
}

ChainDescriptor chain_from_json(const ojson& j) {
    ChainDescriptor c;
    for (const auto& comp : j.at("components"))
        c.components.push_back({comp.at(0).get<long long>(), comp.at(1).get<long long>()});
    c.blow_ups = j.at("blow_ups").get<long long>();
    const auto& s = j.at("s_meets");
    if (s.is_string() && s.get<std::string>() == "C1") c.s_kind = StrictMeets::C1;
    else if (s.is_string()) c.s_kind = StrictMeets::None;
    else {
        c.s_kind = StrictMeets::Component;
        c.s_index = s.get<long long>();
    }
    return c;
}

void require_field(const ojson& j, const char* f, const std::string& where) {
    if (!j.contains(f))
        throw StructuralError("missing field \"" + std::string(f) + "\" in " + where);
}

} // namespace

ojson curve_graph_to_json(const CurveGraph& g) {
    ojson j;
    j["name"] = g.name;
    ojson vs = ojson::array();
    for (const auto& v : g.vertices) {
        ojson jv;
        jv["id"] = v.id;
        jv["e"] = v.e;
        jv["m"] = v.m;
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    ojson es = ojson::array();
    for (const auto& e : g.edges) es.push_back(ojson::array({e[0], e[1]}));
    j["edges"] = std::move(es);
    ojson as = ojson::array();
    for (const auto& a : g.arrows) {
        ojson ja;
        ja["id"] = a.id;
        ja["attach"] = a.attach;
        ja["m"] = a.m;
        as.push_back(std::move(ja));
    }
    j["arrows"] = std::move(as);
    return j;
}

CurveGraph curve_graph_from_json(const ojson& j) {
    CurveGraph g;
    if (!j.is_object()) throw StructuralError("curve graph: top level must be an object");
    g.name = j.value("name", std::string{});
    require_field(j, "vertices", "curve graph");
    for (const auto& jv : j.at("vertices")) {
        require_field(jv, "id", "vertex");
        require_field(jv, "e", "vertex");
        require_field(jv, "m", "vertex");
        g.vertices.push_back({jv.at("id").get<std::string>(), jv.at("e").get<long long>(),
                              jv.at("m").get<long long>()});
    }
    for (const auto& je : j.value("edges", ojson::array())) {
        if (!je.is_array() || je.size() != 2)
            throw StructuralError("edge must be a pair of vertex ids");
        g.edges.push_back({je.at(0).get<std::string>(), je.at(1).get<std::string>()});
    }
    for (const auto& ja : j.value("arrows", ojson::array())) {
        require_field(ja, "id", "arrow");
        require_field(ja, "attach", "arrow");
        g.arrows.push_back({ja.at("id").get<std::string>(), ja.at("attach").get<std::string>(),
                            ja.value("m", 1LL)});
    }
    return g;
}

ojson complex_to_json(const DivisorComplex& cx) {
    ojson j;
    ojson surfaces = ojson::array();
    for (const auto& s : cx.surfaces) {
        ojson js;
        js["id"] = s.id;
        js["display"] = s.display;
        js["kind"] = kind_name(s.kind);
        if (!s.owner.empty()) js["owner"] = s.owner;
        js["g_mult"] = s.g_mult;
        js["role"] = s.role;
        if (s.signed_param) js["param"] = *s.signed_param;
        if (s.modified) {
            js["e"] = s.modified->e;
            js["c0m"] = s.modified->c0m;
            js["c1m"] = s.modified->c1m;
            ojson marked = ojson::array();
            for (const auto& mp : s.modified->marked_points) marked.push_back(mp);
            js["marked_points"] = std::move(marked);
            ojson mods = ojson::array();
            for (const auto& p : s.modified->modified_points) {
                ojson jp;
                jp["label"] = p.label;
                jp["m"] = p.m;
                jp["chain"] = chain_to_json(p.chain);
                mods.push_back(std::move(jp));
            }
            js["modified_points"] = std::move(mods);
        }
        if (s.picard) js["picard_rank"] = *s.picard;
        if (s.disc) {
            js["x"] = s.disc->zero_section_self_int;
            ojson mods = ojson::array();
            for (const auto& m : s.disc->modifications) {
                ojson jm;
                jm["older"] = m.older_label;
                jm["count"] = m.count;
                jm["chain"] = m.chain_self_ints;
                mods.push_back(std::move(jm));
            }
            js["disc_modifications"] = std::move(mods);
        }
        if (!s.basis.empty()) js["basis"] = s.basis;
        surfaces.push_back(std::move(js));
    }
    j["surfaces"] = std::move(surfaces);

    ojson curves = ojson::array();
    for (const auto& c : cx.curves) {
        ojson jc;
        jc["id"] = c.id;
        jc["surfaces"] = c.surfaces;
        ojson ints = ojson::array();
        for (const auto& v : c.self_ints) {
            if (v) ints.push_back(*v);
            else ints.push_back(nullptr);
        }
        jc["self_ints"] = std::move(ints);
        jc["compact"] = c.compact;
        ojson base;
        base["type"] = base_name(c.base);
        base["ids"] = c.base_ids;
        jc["base"] = std::move(base);
        if (c.figure_ambiguous) jc["figure_ambiguous"] = true;
        if (!c.class_in.empty()) {
            ojson cl;
            for (const auto& [sid, coeffs] : c.class_in) cl[sid] = coeffs;
            jc["classes"] = std::move(cl);
        }
        curves.push_back(std::move(jc));
    }
    j["curves"] = std::move(curves);

    ojson triples = ojson::array();
    for (const auto& t : cx.triple_points) {
        ojson jt;
        jt["curve"] = t.curve;
        jt["third"] = t.third;
        triples.push_back(std::move(jt));
    }
    j["triple_points"] = std::move(triples);
    j["order"] = cx.order;
    return j;
}

DivisorComplex complex_from_json(const ojson& j) {
    DivisorComplex cx;
    for (const auto& js : j.at("surfaces")) {
        SurfaceRec s;
        s.id = js.at("id").get<std::string>();
        s.display = js.value("display", std::string{});
        s.kind = kind_from(js.at("kind").get<std::string>());
        s.owner = js.value("owner", std::string{});
        s.g_mult = js.at("g_mult").get<long long>();
        s.role = js.value("role", std::string{});
        if (js.contains("param")) s.signed_param = js.at("param").get<long long>();
        if (js.contains("e")) {
            ModifiedRuledSurface m;
            m.e = js.at("e").get<long long>();
            m.c0m = js.at("c0m").get<long long>();
            m.c1m = js.at("c1m").get<long long>();
            for (const auto& mp : js.value("marked_points", ojson::array()))
                m.marked_points.push_back(mp.get<std::string>());
            for (const auto& jp : js.value("modified_points", ojson::array())) {
                ModifiedPoint p;
                p.label = jp.at("label").get<std::string>();
                p.m = jp.at("m").get<long long>();
                p.chain = chain_from_json(jp.at("chain"));
                m.modified_points.push_back(std::move(p));
            }
            if (js.contains("picard_rank")) m.picard = js.at("picard_rank").get<long long>();
            s.modified = std::move(m);
        }
        if (js.contains("picard_rank")) s.picard = js.at("picard_rank").get<long long>();
        if (js.contains("x")) {
            DiscBundleModel d;
            d.zero_section_self_int = js.at("x").get<long long>();
            for (const auto& jm : js.value("disc_modifications", ojson::array())) {
                DiscModification m;
                m.older_label = jm.at("older").get<std::string>();
                m.count = jm.at("count").get<long long>();
                for (const auto& v : jm.at("chain")) m.chain_self_ints.push_back(v.get<long long>());
                d.modifications.push_back(std::move(m));
            }
            s.disc = std::move(d);
            s.section_self = s.disc->zero_section_self_int;
        }
        for (const auto& b : js.value("basis", ojson::array()))
            s.basis.push_back(b.get<std::string>());
        cx.surfaces.push_back(std::move(s));
    }
    for (const auto& jc : j.at("curves")) {
        CurveRec c;
        c.id = jc.at("id").get<std::string>();
        for (const auto& s : jc.at("surfaces")) c.surfaces.push_back(s.get<std::string>());
        for (const auto& v : jc.at("self_ints")) {
            if (v.is_null()) c.self_ints.push_back(std::nullopt);
            else c.self_ints.push_back(v.get<long long>());
        }
        c.compact = jc.at("compact").get<bool>();
        c.base = base_from(jc.at("base").at("type").get<std::string>());
        for (const auto& id : jc.at("base").at("ids")) c.base_ids.push_back(id.get<std::string>());
        c.figure_ambiguous = jc.value("figure_ambiguous", false);
        if (jc.contains("classes")) {
            for (const auto& [sid, coeffs] : jc.at("classes").items()) {
                std::vector<long long> v;
                for (const auto& x : coeffs) v.push_back(x.get<long long>());
                c.class_in[sid] = std::move(v);
            }
        }
        cx.curves.push_back(std::move(c));
    }
    for (const auto& jt : j.at("triple_points"))
        cx.triple_points.push_back(
            {jt.at("curve").get<std::string>(), jt.at("third").get<std::string>()});
    for (const auto& o : j.at("order")) cx.order.push_back(o.get<std::string>());
    return cx;
}

ojson sgraph_to_json(const SGraph& g) {
    ojson j;
    ojson vs = ojson::array();
    for (const auto& v : g.vertices) {
        ojson jv;
        jv["id"] = v.id;
        jv["genus"] = v.genus;
        jv["self_int"] = v.self_int;
        vs.push_back(std::move(jv));
    }
    j["vertices"] = std::move(vs);
    ojson es = ojson::array();
    for (const auto& [a, b] : g.edges) es.push_back(ojson::array({a, b}));
    j["edges"] = std::move(es);
    return j;
}

SGraph sgraph_from_json(const ojson& j) {
    SGraph g;
    for (const auto& jv : j.at("vertices")) {
        SGraphVertex v;
        v.id = jv.at("id").get<std::string>();
        v.genus = jv.at("genus").get<long long>();
        v.self_int = jv.at("self_int").get<long long>();
        g.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges"))
        g.edges.emplace_back(je.at(0).get<std::string>(), je.at(1).get<std::string>());
    return g;
}

ojson report_to_json(const CheckReport& r) {
    ojson j;
    j["pass"] = r.all_pass();
    ojson checks = ojson::array();
    for (const auto& i : r.items) {
        ojson ji;
        ji["check"] = i.check;
        ji["scope"] = i.scope;
        ji["pass"] = i.pass;
        if (!i.details.empty()) ji["details"] = i.details;
        checks.push_back(std::move(ji));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string dump_canonical(const ojson& j) { return j.dump(2) + "\n"; }

ojson parse_json(const std::string& text) {
    return ojson::parse(text); // nlohmann reports byte/line positions
}

} // namespace zres
