#include "trainyard/json_io.hpp"

#include "trainyard/error.hpp"

namespace trainyard {

Json integer_to_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a decimal integer", 0);
        return v;
    }
    throw ParseError("expected an integer", 0);
}

Json to_json(const CountSeq& seq) {
    Json values = Json::array();
    for (const auto& v : seq.values) values.push_back(integer_to_json(v));
    return {{"start", seq.start}, {"values", std::move(values)}};
}

CountSeq count_seq_from_json(const Json& j) {
    CountSeq seq;
    seq.start = j.at("start").get<Length>();
    for (const auto& v : j.at("values")) seq.values.push_back(integer_from_json(v));
    return seq;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json side(const RodSource& src) {
    if (const auto* r = src.finite()) return format_rodset(*r);
    return to_json(src);
}

Json verdict(const Finiteness& f) {
    switch (f.kind) {
        case Finiteness::Kind::finite: return true;
        case Finiteness::Kind::infinite: return false;
        case Finiteness::Kind::undecided: break;
    }
    return nullptr;
}

Json hit_json(const ScalingHit& h) {
    return {{"a", h.a},
            {"b", h.b},
            {"alpha", integer_to_json(h.alpha)},
            {"S", format_rodset(h.s)},
            {"Q", format_rodset(h.q)}};
}

}  // namespace

Json to_json(const RodSource& src) {
    return std::visit(overloaded{
                          [](const RodSet& r) -> Json { return {{"kind", "finite"}, {"rods", format_rodset(r)}}; },
                          [](const ArithmeticRods& a) -> Json {
                              return {{"kind", "arith"}, {"first", a.first}, {"step", a.step}, {"sign", a.sign}};
                          },
                          [](const TrainsOfRods& t) -> Json {
                              return {{"kind", "trains"}, {"base", format_rodset(t.base)}, {"sign", t.sign}};
                          },
                          [](const ExplicitCounts& e) -> Json {
                              Json values = Json::array();
                              for (const auto& v : e.values) values.push_back(integer_to_json(v));
                              return {{"kind", "counts"}, {"values", std::move(values)}};
                          },
                      },
                      src.variant());
}

RodSource rod_source_from_json(const Json& j) {
    if (j.is_string()) return parse_rodset(j.get<std::string>());
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "finite") return parse_rodset(j.at("rods").get<std::string>());
    if (kind == "arith")
        return ArithmeticRods{j.at("first").get<Length>(), j.at("step").get<Length>(), j.at("sign").get<int>()};
    if (kind == "trains") return TrainsOfRods{parse_rodset(j.at("base").get<std::string>()), j.at("sign").get<int>()};
    if (kind == "counts") {
        ExplicitCounts e;
        for (const auto& v : j.at("values")) e.values.push_back(integer_from_json(v));
        return e;
    }
    throw ParseError("unknown rod source kind '" + kind + "'", 0);
}

Json to_json(const Expansion& e) {
    return {{"R", side(e.r)},
            {"Q", side(e.q)},
            {"S", side(e.s)},
            {"horizon", e.horizon},
            {"r_finite", verdict(e.r_finite)},
            {"q_finite", verdict(e.q_finite)},
            {"identity_checked", e.identity_checked}};
}

Json to_json(const PeriodReport& p) {
    Json j{{"periodic", p.periodic}};
    j["period"] = p.periodic ? Json(p.least_period) : Json(nullptr);
    j["factors"] = p.cyclotomic_factors;
    j["Q"] = p.periodic ? Json(format_rodset(p.q_to_period)) : Json(nullptr);
    j["window_confirmed"] = p.window_confirmed;
    return j;
}

Json to_json(const std::vector<OneExpansion>& hits) {
    Json out = Json::array();
    for (const auto& h : hits)
        out.push_back({{"a", h.a},
                       {"mult", integer_to_json(h.multiplicity)},
                       {"S", format_rodset(h.s)},
                       {"Q", format_rodset(h.q)}});
    return out;
}

Json to_json(const std::vector<ScalingHit>& hits) {
    Json out = Json::array();
    for (const auto& h : hits) out.push_back(hit_json(h));
    return out;
}

Json to_json(const LucasReport& r) {
    Json j{{"pass", r.pass}};
    j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
    j["counts"] = to_json(r.counts);
    return j;
}

Json to_json(const BorweinTable& t) {
    auto table = [](const std::map<std::string, std::vector<SignedPair>>& m) {
        Json out = Json::object();
        for (const auto& [cls, pairs] : m) {
            Json list = Json::array();
            for (const auto& p : pairs) list.push_back(format_rodset(RodSet{RodTerm{p.a, p.sign_a}, RodTerm{p.b, p.sign_b}}));
            out[cls] = std::move(list);
        }
        return out;
    };
    return {{"[1,-2]", table(t.hits_1_anti2)}, {"[-1,-2]", table(t.hits_anti1_anti2)}, {"scan_agrees", t.scan_agrees}};
}

}  // namespace trainyard
