#include "stabkit/report.hpp"

#include <sstream>

#include "stabkit/errors.hpp"

namespace stab::report {

namespace {

json complex_float(const ExactComplex& z) { return json::array({z.re.to_double(), z.im.to_double()}); }

json charges_json(const std::vector<ExactComplex>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back(to_json(z));
    return out;
}

bool unit_vector(const DimVector& d) { return d.total() == 1 && d.is_nonnegative(); }

// A session name for the factor when it is certainly isomorphic to it.
json label(const Session& s, const QuiverRep& factor) {
    for (const auto& [name, r] : s.reps) {
        if (r.dims() == factor.dims() && (unit_vector(r.dims()) || r == factor)) return name;
    }
    return nullptr;
}

std::string flat(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

DimVector parse_class(const std::string& text, std::size_t n) {
    std::vector<long> xs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            xs.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw PreconditionError("bad class '" + text + "': expected comma-separated integers");
        }
    }
    if (xs.size() != n) throw PreconditionError("class '" + text + "' needs " + std::to_string(n) + " entries");
    return DimVector(std::move(xs));
}

json bounds_json(const PhaseBounds& b) { return {{"minus", phase_json(b.minus)}, {"plus", phase_json(b.plus)}}; }

json opt_phase(const std::optional<PhaseKey>& p) { return p ? phase_json(*p) : json(nullptr); }

json opt_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json opt_rational(const std::optional<Rational>& r) { return r ? to_json(*r) : json(nullptr); }

}  // namespace

json phase_json(const PhaseKey& p) {
    return {{"k", p.shift()}, {"dir", to_json(p.dir())}, {"float", p.to_double()}};
}

json root_json(const WallRoot& r) {
    return {{"p", r.p.get_str()}, {"q", r.q.get_str()}, {"a", r.a.get_str()}, {"b", r.b.get_str()}, {"disc", r.disc}};
}

json mat2_json(const Mat2& m) {
    return json::array({json::array({to_json(m.a), to_json(m.b)}), json::array({to_json(m.c), to_json(m.d)})});
}

json hn(const Session& s, const std::string& rep_name, const std::string& charge) {
    const QuiverRep& rep = s.rep(rep_name);
    const CentralCharge z = s.charge(charge);
    const HNFiltration hn = hn_filtration_max_sub(rep, z, s.options());
    bool cross_checked = false;
    if (rep.field().is_finite()) {
        if (!(hn_filtration_mdq(rep, z, s.options()) == hn)) {
            throw InvariantViolation("the two HN algorithms disagree on '" + rep_name + "'");
        }
        cross_checked = true;
    }
    json chain = json::array(), factors = json::array(), table = json::array();
    for (std::size_t j = 0; j < hn.length(); ++j) {
        const json lab = label(s, hn.factors[j]);
        const ExactComplex zc = z(hn.classes[j]);
        chain.push_back(lab.is_null() ? json(to_string(hn.classes[j])) : lab);
        factors.push_back({{"label", lab},
                           {"dims", to_json(hn.classes[j])},
                           {"charge", to_json(zc)},
                           {"phase", phase_json(hn.phases[j])}});
        table.push_back({{"index", j + 1},
                         {"label", lab},
                         {"dims", to_string(hn.classes[j])},
                         {"charge", to_string(zc)},
                         {"phase_float", hn.phases[j].to_double()}});
    }
    return {{"command", "hn"},     {"rep", rep_name},     {"charge", charge},
            {"chain", chain},      {"factors", factors},  {"mdq_cross_checked", cross_checked},
            {"table", table}};
}

json semistable(const Session& s, const std::string& rep_name, const std::string& charge) {
    const QuiverRep& rep = s.rep(rep_name);
    const CentralCharge z = s.charge(charge);
    const SemistabilityCertificate c = is_semistable(rep, z, s.options());
    json witness = nullptr;
    if (c.witness) {
        const DimVector d = c.witness->dims();
        witness = {{"dims", to_json(d)}, {"phase", phase_json(phase(d, z))}};
    }
    const json phase_e = phase_json(phase(rep.dims(), z));
    return {{"command", "semistable"},
            {"rep", rep_name},
            {"charge", charge},
            {"semistable", c.semistable},
            {"phase", phase_e},
            {"witness", witness},
            {"by_dimension_vectors", c.by_dimension_vectors},
            {"table", json::array({{{"rep", rep_name}, {"semistable", c.semistable},
                                    {"witness_dims", c.witness ? json(to_string(c.witness->dims())) : json(nullptr)}}})}};
}

json decompose(const Session& s, const std::string& object, const std::string& charge) {
    const FormalComplex fc = s.object(object);
    const SlicingView view{s.charge(charge)};
    const auto factors = hn_decompose(fc, view, s.options());
    json out = json::array(), table = json::array();
    for (const auto& f : factors) {
        const json lab = label(s, f.factor);
        out.push_back({{"shift", f.shift}, {"label", lab}, {"dims", to_json(f.cls)}, {"phase", phase_json(f.phase)}});
        table.push_back({{"shift", f.shift}, {"label", lab}, {"dims", to_string(f.cls)}, {"phase_float", f.phase.to_double()}});
    }
    const PhaseBounds b{factors.back().phase, factors.front().phase};
    return {{"command", "decompose"}, {"object", object}, {"charge", charge}, {"factors", out},
            {"phi", bounds_json(b)},  {"table", table}};
}

json walls(const Session& s, const std::string& path_name, const std::vector<std::string>& explicit_pairs) {
    const ChargePath& path = s.path(path_name);
    const std::size_t n = s.quiver->vertex_count();
    std::vector<ClassPair> pairs;
    if (explicit_pairs.empty()) {
        pairs = auto_pairs(s.tracked_reps(), s.options());
    } else {
        for (const auto& text : explicit_pairs) {
            const auto colon = text.find(':');
            if (colon == std::string::npos) throw PreconditionError("pair '" + text + "' must look like a1,a2:b1,b2");
            pairs.push_back({parse_class(text.substr(0, colon), n), parse_class(text.substr(colon + 1), n), ""});
        }
    }
    const WallSearch ws = find_walls(path, pairs, s.tracked_reps(), s.options());
    auto pair_json = [](const ClassPair& p) {
        return json{{"alpha", to_json(p.alpha)},
                    {"beta", to_json(p.beta)},
                    {"tracked", p.tracked.empty() ? json(nullptr) : json(p.tracked)}};
    };
    json events = json::array(), degenerate = json::array(), table = json::array();
    for (const auto& w : ws.walls) {
        const FlipEvidence& e = w.evidence;
        events.push_back({{"t_exact", root_json(w.t)},
                          {"t_float", w.t.to_double()},
                          {"pair", pair_json(w.pair)},
                          {"tangent", w.tangent},
                          {"flip_evidence",
                           {{"left", opt_rational(e.left)},
                            {"right", opt_rational(e.right)},
                            {"cross_sign_left", e.cross_left},
                            {"cross_sign_right", e.cross_right},
                            {"semistable_left", opt_bool(e.semistable_left)},
                            {"semistable_right", opt_bool(e.semistable_right)}}}});
        table.push_back({{"t", to_string(w.t.value())},
                         {"t_float", w.t.to_double()},
                         {"alpha", to_string(w.pair.alpha)},
                         {"beta", to_string(w.pair.beta)},
                         {"tracked", w.pair.tracked},
                         {"tangent", w.tangent},
                         {"semistable_left", opt_bool(e.semistable_left)},
                         {"semistable_right", opt_bool(e.semistable_right)}});
    }
    for (const auto& p : ws.degenerate) degenerate.push_back(pair_json(p));
    return {{"command", "walls"},  {"path", path_name},         {"pairs_mode", explicit_pairs.empty() ? "auto" : "explicit"},
            {"walls", events},     {"degenerate", degenerate},  {"table", table}};
}

json deform(const Session& s, const std::string& charge, const std::string& charge_w, const Rational& eps,
            const std::string& testset) {
    const StabilityCondition sigma(s.charge(charge));
    const DeformResult r = stab::deform(sigma, s.charge_values(charge_w), eps, s.testset(testset), s.options());
    json hyp = json::array(), concl = json::array(), table = json::array();
    for (const auto& h : r.report.hypothesis) {
        hyp.push_back({{"object", h.name}, {"class", to_json(h.cls)}, {"margin_float", h.margin}, {"holds", h.holds},
                       {"boundary", h.boundary}});
    }
    for (const auto& d : r.report.conclusion) {
        concl.push_back({{"object", d.name}, {"before", bounds_json(d.before)}, {"after", bounds_json(d.after)},
                         {"drift", phase_json(d.drift)}});
        table.push_back({{"object", d.name}, {"drift_float", d.drift.to_double()},
                         {"phi_minus_before", d.before.minus.to_double()}, {"phi_plus_before", d.before.plus.to_double()},
                         {"phi_minus_after", d.after.minus.to_double()}, {"phi_plus_after", d.after.plus.to_double()}});
    }
    return {{"command", "deform"},
            {"charge", charge},
            {"charge_w", charge_w},
            {"eps", to_json(eps)},
            {"hypothesis", hyp},
            {"conclusion", concl},
            {"d_testset", phase_json(r.report.d_testset)},
            {"d_testset_float", r.report.d_float},
            {"d_is_lower_bound", true},
            {"table", table}};
}

json metric_slicing(const Session& s, const std::string& c1, const std::string& c2, const std::string& testset) {
    const SlicingDistance d =
        slicing_distance(SlicingView{s.charge(c1)}, SlicingView{s.charge(c2)}, s.testset(testset), s.options());
    json rows = json::array(), table = json::array();
    for (const auto& r : d.rows) {
        rows.push_back({{"object", r.name}, {"first", bounds_json(r.first)}, {"second", bounds_json(r.second)},
                        {"distance", phase_json(r.distance)}});
        table.push_back({{"object", r.name}, {"distance_float", r.distance.to_double()}});
    }
    return {{"command", "metric slicing"}, {"charges", {c1, c2}},        {"distance", phase_json(d.exact)},
            {"distance_float", d.value},    {"lower_bound", d.lower_bound}, {"rows", rows},
            {"table", table}};
}

json metric_stab(const Session& s, const std::string& c1, const std::string& c2, const std::string& testset) {
    const StabDistance d = stab_distance(StabilityCondition(s.charge(c1)), StabilityCondition(s.charge(c2)),
                                         s.testset(testset), s.options());
    json rows = json::array(), table = json::array();
    for (const auto& r : d.rows) {
        rows.push_back({{"object", r.name}, {"phase_term", phase_json(r.phase_term)}, {"log_mass_ratio", r.log_mass_ratio}});
        table.push_back({{"object", r.name}, {"phase_term_float", r.phase_term.to_double()},
                         {"log_mass_ratio", r.log_mass_ratio}});
    }
    return {{"command", "metric stab"}, {"charges", {c1, c2}}, {"distance_float", d.value},
            {"lower_bound", d.lower_bound}, {"rows", rows},      {"table", table}};
}

json glact(const Session& s, const std::string& charge, const Mat2& t, long branch, const std::string& testset) {
    const StabilityCondition sigma(s.charge(charge));
    const GLtildeElement g(t, branch);
    const GlActResult r = gl_act(sigma, g, s.testset(testset), s.options());
    json rows = json::array(), table = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"object", row.name},
                        {"semistable_before", row.semistable_before},
                        {"semistable_after", row.semistable_after},
                        {"phase_before", opt_phase(row.phase_before)},
                        {"phase_after", opt_phase(row.phase_after)}});
        table.push_back({{"object", row.name},
                         {"semistable_before", row.semistable_before},
                         {"semistable_after", row.semistable_after},
                         {"phase_before_float", row.phase_before ? json(row.phase_before->to_double()) : json(nullptr)},
                         {"phase_after_float", row.phase_after ? json(row.phase_after->to_double()) : json(nullptr)}});
    }
    return {{"command", "glact"},
            {"charge", charge},
            {"T", mat2_json(t)},
            {"m", branch},
            {"charge_after", charges_json(r.sigma.charge_values())},
            {"reference_phase", phase_json(r.sigma.action().reference_phase())},
            {"rows", rows},
            {"table", table}};
}

json discrete(const Session& s, const std::string& charge) {
    const DiscretenessReport r = check_discreteness(s.charge(charge));
    json basis = json::array();
    for (const auto& v : r.z_basis) {
        json row = json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        basis.push_back(row);
    }
    return {{"command", "discrete"},
            {"charge", charge},
            {"verdict", r.discrete ? "discrete" : "non_discrete"},
            {"radicand", r.radicand},
            {"rank_over_z", r.rank_over_z},
            {"rank_over_r", r.rank_over_r},
            {"z_basis", basis},
            {"explanation", r.explanation},
            {"table", json::array({{{"charge", charge}, {"verdict", r.discrete ? "discrete" : "non_discrete"},
                                    {"rank_over_z", r.rank_over_z}, {"rank_over_r", r.rank_over_r}}})}};
}

json validate(const Session& s, const std::string& charge, const std::string& testset) {
    const AxiomReport r = validate_axioms(StabilityCondition(s.charge(charge)), s.testset(testset), s.options());
    json violations = json::array(), table = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"axiom", std::string(1, v.axiom)}, {"detail", v.detail}});
        table.push_back({{"axiom", std::string(1, v.axiom)}, {"detail", v.detail}});
    }
    return {{"command", "validate"},
            {"charge", charge},
            {"testset", testset},
            {"ok", r.ok()},
            {"checked", {{"a", r.checked_a}, {"b", r.checked_b}, {"c", r.checked_c}, {"d", r.checked_d}}},
            {"violations", violations},
            {"table", table}};
}

json curve_classify(const Mat2& m) {
    const GLtildeElement g = curve::classify(m);
    const curve::Reduction red = curve::modular_reduce(g);
    return {{"command", "curve classify"},
            {"M", mat2_json(m)},
            {"T", mat2_json(g.matrix())},
            {"m", g.branch()},
            {"skyscraper_phase", phase_json(g.relabel(PhaseKey::integer(1)))},
            {"gamma_word", red.word},
            {"tau_exact", to_json(red.tau)},
            {"tau_float", complex_float(red.tau)},
            {"table", json::array({{{"m", g.branch()}, {"T", to_string(g.matrix())}, {"tau", to_string(red.tau)}}})}};
}

json curve_reduce(const Mat2& m) {
    const GLtildeElement g = curve::classify(m);
    const curve::Reduction red = curve::modular_reduce(g);
    const json gamma = json::array({json::array({red.gamma.a.get_str(), red.gamma.b.get_str()}),
                                    json::array({red.gamma.c.get_str(), red.gamma.d.get_str()})});
    return {{"command", "curve reduce"},
            {"M", mat2_json(m)},
            {"T", mat2_json(g.matrix())},
            {"m", g.branch()},
            {"gamma", gamma},
            {"gamma_word", red.word},
            {"tau_exact", to_json(red.tau)},
            {"tau_float", complex_float(red.tau)},
            {"reduced_exact", to_json(red.reduced)},
            {"reduced_float", complex_float(red.reduced)},
            {"scale_exact", to_json(red.scale)},
            {"table", json::array({{{"gamma_word", red.word}, {"tau", to_string(red.tau)},
                                    {"reduced", to_string(red.reduced)}, {"scale", to_string(red.scale)}}})}};
}

Mat2 parse_matrix_arg(const std::string& text) {
    std::vector<Rational> xs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) xs.push_back(parse_rational(item));
    if (xs.size() != 4) throw PreconditionError("--matrix needs four comma-separated entries a,b,c,d");
    return {xs[0], xs[1], xs[2], xs[3]};
}

std::string to_csv(const json& report) {
    const json& table = report.at("table");
    std::ostringstream out;
    if (table.empty()) return "";
    std::vector<std::string> keys;
    for (auto it = table.front().begin(); it != table.front().end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_field(keys[i]);
    out << "\n";
    for (const auto& row : table) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out << (i ? "," : "") << csv_field(row.contains(keys[i]) ? flat(row.at(keys[i])) : "");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace stab::report
