#include "tametilt/io.hpp"

namespace tametilt {
namespace io {

json parse_json(const std::string& text, const std::string& what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw DomainError("json/parse", "malformed JSON in " + what);
    return doc;
}

namespace {

void require_object(const json& doc, const std::string& what) {
    if (!doc.is_object())
        throw DomainError("json/schema", what + " must be a JSON object");
}

void require_array(const json& doc, const std::string& what) {
    if (!doc.is_array())
        throw DomainError("json/schema", what + " must be a JSON array");
}

int get_int(const json& doc, const std::string& what) {
    if (!doc.is_number_integer())
        throw DomainError("json/schema", what + " must be an integer");
    return doc.get<int>();
}

std::string get_string(const json& doc, const std::string& what) {
    if (!doc.is_string())
        throw DomainError("json/schema", what + " must be a string");
    return doc.get<std::string>();
}

} // namespace

json registry_to_json(const TubeRegistry& reg, const MultiplicityMap& alpha) {
    json tubes = json::array();
    for (const auto& [id, rank] : reg.nonhomogeneous)
        tubes.push_back({{"id", id}, {"rank", rank}});
    json named = json::array();
    for (const auto& id : reg.homogeneous_named) named.push_back(id);
    json alpha_doc = json::object();
    for (const auto& [s, v] : alpha.alpha) alpha_doc[qs_key(s)] = v;
    return json{{"tubes", tubes},
                {"homogeneous_named", named},
                {"rest", reg.has_unnamed_homogeneous_rest},
                {"alpha", alpha_doc},
                {"alpha_generic", alpha.alpha_generic}};
}

std::pair<TubeRegistry, MultiplicityMap> registry_from_json(const json& doc) {
    require_object(doc, "config");
    std::vector<std::pair<std::string, int>> tubes;
    if (doc.contains("tubes")) {
        require_array(doc.at("tubes"), "tubes");
        for (const auto& entry : doc.at("tubes")) {
            require_object(entry, "tube entry");
            tubes.emplace_back(get_string(entry.at("id"), "tube id"),
                               get_int(entry.at("rank"), "tube rank"));
        }
    }
    std::set<std::string> named;
    if (doc.contains("homogeneous_named")) {
        require_array(doc.at("homogeneous_named"), "homogeneous_named");
        for (const auto& entry : doc.at("homogeneous_named"))
            named.insert(get_string(entry, "homogeneous tube id"));
    }
    const bool rest = doc.value("rest", false);
    TubeRegistry reg = TubeRegistry::custom(std::move(tubes), std::move(named), rest);

    MultiplicityMap alpha;
    if (doc.contains("alpha")) {
        require_object(doc.at("alpha"), "alpha");
        for (const auto& [key, value] : doc.at("alpha").items())
            alpha.alpha[check_qs(reg, parse_qs_key(key))] = get_int(value, "alpha value");
    }
    if (doc.contains("alpha_generic"))
        alpha.alpha_generic = get_int(doc.at("alpha_generic"), "alpha_generic");
    alpha.validate(reg);
    return {std::move(reg), std::move(alpha)};
}

json lambda_to_json(const LambdaSet& l) {
    json named = json::array();
    for (const auto& id : l.named) named.push_back(id);
    return json{{"named", named}, {"rest", l.include_unnamed_rest}};
}

LambdaSet lambda_from_json(const json& doc) {
    require_object(doc, "lambda");
    LambdaSet l;
    if (doc.contains("named")) {
        require_array(doc.at("named"), "lambda named");
        for (const auto& entry : doc.at("named"))
            l.named.insert(get_string(entry, "lambda tube id"));
    }
    l.include_unnamed_rest = doc.value("rest", false);
    return l;
}

json pair_to_json(const BranchModule& y, const LambdaSet& l) {
    json branch = json::array();
    for (const auto& p : y.summands) branch.push_back(point_to_text(p));
    return json{{"branch", branch}, {"lambda", lambda_to_json(l)}};
}

std::pair<BranchModule, LambdaSet> pair_from_json(const json& doc) {
    require_object(doc, "pair");
    BranchModule y;
    if (doc.contains("branch")) {
        require_array(doc.at("branch"), "branch");
        for (const auto& entry : doc.at("branch"))
            y.summands.insert(parse_point(get_string(entry, "branch summand")));
    }
    LambdaSet l;
    if (doc.contains("lambda")) l = lambda_from_json(doc.at("lambda"));
    return {std::move(y), std::move(l)};
}

json filter_to_json(const ResolvingFilter& f) {
    json doc = json::object();
    for (const auto& [tube_id, slice] : f.tubes) {
        json rays = json::array();
        for (int i : slice.rays) rays.push_back(i);
        json region = json::array();
        for (const auto& p : slice.region) region.push_back(point_to_local_text(p));
        doc[tube_id] = json{{"rays", rays}, {"region", region}};
    }
    if (f.rest_rays) doc["*"] = json{{"rays", "all"}};
    return doc;
}

ResolvingFilter filter_from_json(const json& doc) {
    require_object(doc, "filter");
    ResolvingFilter f;
    for (const auto& [tube_id, slice] : doc.items()) {
        if (tube_id == "*") {
            f.rest_rays = true;
            continue;
        }
        require_object(slice, "filter slice");
        TubeFilter tf;
        if (slice.contains("rays")) {
            require_array(slice.at("rays"), "rays");
            for (const auto& entry : slice.at("rays"))
                tf.rays.insert(get_int(entry, "ray index"));
        }
        if (slice.contains("region")) {
            require_array(slice.at("region"), "region");
            for (const auto& entry : slice.at("region"))
                tf.region.insert(
                    parse_local_point(tube_id, get_string(entry, "region entry")));
        }
        f.tubes.emplace(tube_id, std::move(tf));
    }
    return f;
}

json qsset_to_json(const TubeRegistry& reg, const QuasiSimpleSet& s) {
    json out = json::array();
    std::set<std::string> cliques;
    std::set<QuasiSimpleRef> singles;
    for (const auto& id : reg.named_tube_ids())
        if (s.is_full_clique(reg, id) && reg.rank(id) > 0) cliques.insert(id);
    for (const auto& ref : s.members)
        if (!cliques.count(ref.tube)) singles.insert(ref);
    for (const auto& ref : singles) out.push_back(qs_key(ref));
    for (const auto& id : cliques) out.push_back("clique:" + id);
    if (s.all_unnamed_homogeneous) out.push_back("clique:*");
    return out;
}

QuasiSimpleSet qsset_from_json(const TubeRegistry& reg, const json& doc) {
    require_array(doc, "quasi-simple set");
    QuasiSimpleSet s;
    for (const auto& entry : doc) {
        const std::string key = get_string(entry, "quasi-simple entry");
        if (key.rfind("clique:", 0) == 0) {
            const std::string tube_id = key.substr(7);
            if (tube_id == "*") {
                s.all_unnamed_homogeneous = true;
                continue;
            }
            const int r = reg.rank(tube_id);
            for (int i = 1; i <= r; ++i)
                s.members.insert(QuasiSimpleRef{tube_id, i});
            continue;
        }
        s.members.insert(check_qs(reg, parse_qs_key(key)));
    }
    s.validate(reg);
    return s;
}

json descriptor_to_json(const TiltingDescriptor& d) {
    json torsion = json::object();
    for (const auto& [tube_id, slice] : d.torsion) {
        json finite = json::array();
        for (const auto& p : slice.finite) finite.push_back(point_to_text(p));
        json pruefer = json::array();
        for (int i : slice.pruefer) pruefer.push_back(i);
        torsion[tube_id] = json{{"finite", finite}, {"pruefer", pruefer}};
    }
    const char* kind =
        d.label.kind == TorsionFreeLabel::Kind::LukasOver ? "lukas" : "projgen";
    return json{{"branch", pair_to_json(d.branch, d.lambda).at("branch")},
                {"lambda", lambda_to_json(d.lambda)},
                {"torsion", torsion},
                {"rest_pruefer", d.rest_pruefer},
                {"tf_label",
                 json{{"kind", kind}, {"locset", qsset_to_json(d.reg, d.label.locset)}}},
                {"flags",
                 json{{"generic_in_add", d.generic_in_add},
                      {"u_set", qsset_to_json(d.reg, d.u_set)},
                      {"v_set", qsset_to_json(d.reg, d.v_set)},
                      {"r_set", qsset_to_json(d.reg, d.r_set)}}}};
}

json cotilting_to_json(const TubeRegistry& reg, const CotiltingDescriptor& c) {
    json tubes = json::object();
    for (const auto& [tube_id, slice] : c.tubes) {
        json finite = json::array();
        for (const auto& p : slice.finite) finite.push_back(point_to_text(p));
        json adics = json::array();
        for (int i : slice.adics) adics.push_back(i);
        json pruefer = json::array();
        for (int i : slice.pruefer) pruefer.push_back(i);
        tubes[tube_id] =
            json{{"finite", finite}, {"adic", adics}, {"pruefer", pruefer},
                 {"classes", slice.finite.size() + slice.adics.size() +
                                 slice.pruefer.size()}};
    }
    (void)reg;
    return json{{"tubes", tubes},
                {"rest_adic", c.rest_adic},
                {"rest_pruefer", c.rest_pruefer},
                {"generic", c.has_generic},
                {"finite_coordinates", "top-indexed, tau reversed"}};
}

json decompose_to_json(const TubeRegistry& reg, const DecomposeReport& rep) {
    auto case_name = [](TubeDecomposition::Case c) {
        switch (c) {
        case TubeDecomposition::Case::Branch: return "branch";
        case TubeDecomposition::Case::Ray: return "ray";
        case TubeDecomposition::Case::Empty: return "empty";
        }
        return "empty";
    };
    json tubes = json::object();
    for (const auto& [tube_id, td] : rep.tubes)
        tubes[tube_id] = json{{"case", case_name(td.tag)},
                              {"finite", td.finite_count},
                              {"pruefer", td.pruefer_count},
                              {"adics_in_class", td.adic_count}};
    const char* kind =
        rep.label.kind == TorsionFreeLabel::Kind::LukasOver ? "lukas" : "projgen";
    return json{{"tubes", tubes},
                {"rest_case", case_name(rep.rest_case)},
                {"tf_label", json{{"kind", kind},
                                  {"locset", qsset_to_json(reg, rep.label.locset)}}}};
}

json predicates_to_json(const TubeRegistry& reg, const DescriptorPredicates& p) {
    json out{{"noetherian_over_endo", p.noetherian_over_endo},
             {"sigma_pure_injective", p.sigma_pure_injective}};
    if (p.localization_form)
        out["localization_form"] = qsset_to_json(reg, *p.localization_form);
    else
        out["localization_form"] = nullptr;
    return out;
}

json quotient_to_json(const QuotientDecomposition& q, const MultiplicityMap& alpha,
                      const TubeRegistry& reg, const QuasiSimpleSet& u) {
    json parts = json::array();
    for (const auto& [p, mult] : q.parts)
        parts.push_back(json{{"point", point_to_text(p)}, {"multiplicity", mult}});
    json out{{"parts", parts}, {"rest_pruefer_all", q.rest_pruefer_all}};

    // Informational record when every clique is inverted: the localized ring
    // is a matrix ring over the endomorphism division ring of G.
    bool all = reg.has_unnamed_homogeneous_rest ? u.all_unnamed_homogeneous : true;
    for (const auto& id : reg.named_tube_ids())
        if (!u.is_full_clique(reg, id)) all = false;
    if (all && (!reg.named_tube_ids().empty() || u.all_unnamed_homogeneous))
        out["full_localization"] =
            json{{"matrix_size", alpha.alpha_generic}, {"over", "End(G)"}};
    return out;
}

json localized_to_json(const LocalizedRegistry& loc) {
    json map = json::object();
    for (const auto& [from, to] : loc.survivor_map) map[qs_key(from)] = qs_key(to);
    return json{{"result", registry_to_json(loc.result, MultiplicityMap{})},
                {"survivors", map},
                {"order", loc.order_flag}};
}

json branch_list_to_json(const std::vector<BranchModule>& ys) {
    json out = json::array();
    for (const auto& y : ys) {
        json entry = json::array();
        for (const auto& p : y.summands) entry.push_back(point_to_text(p));
        out.push_back(std::move(entry));
    }
    return out;
}

json oracle_check_to_json(const oracle::OracleCheck& c) {
    json out{{"check", c.id},
             {"params", c.params},
             {"pass", c.pass},
             {"instances", c.instances}};
    if (!c.pass) out["witness"] = c.witness;
    return out;
}

} // namespace io
} // namespace tametilt
