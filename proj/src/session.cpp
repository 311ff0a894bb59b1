#include "stabkit/session.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "stabkit/errors.hpp"

namespace stab {

using nlohmann::json;

namespace {

std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& require(const json& obj, const std::string& key, const std::string& ptr) {
    if (!obj.is_object()) throw ParseError(ptr, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(child(ptr, key), "missing required member");
    return *it;
}

const json& require_array(const json& v, const std::string& ptr) {
    if (!v.is_array()) throw ParseError(ptr, "expected an array");
    return v;
}

const json& require_object(const json& v, const std::string& ptr) {
    if (!v.is_object()) throw ParseError(ptr, "expected an object");
    return v;
}

long require_integer(const json& v, const std::string& ptr) {
    if (!v.is_number_integer()) throw ParseError(ptr, "expected an integer");
    return v.get<long>();
}

const std::string& require_string(const json& v, const std::string& ptr) {
    if (!v.is_string()) throw ParseError(ptr, "expected a string");
    return v.get_ref<const std::string&>();
}

QuadScalar parse_scalar(const json& v, const std::string& ptr) {
    if (v.is_number_integer()) return QuadScalar(v.get<long>());
    if (!v.is_string()) throw ParseError(ptr, "expected an integer or a string scalar");
    try {
        return parse_quad(v.get_ref<const std::string&>());
    } catch (const PreconditionError& e) {
        throw ParseError(ptr, e.what());
    }
}

Rational parse_rational_scalar(const json& v, const std::string& ptr) {
    const QuadScalar q = parse_scalar(v, ptr);
    if (!q.is_rational()) throw ParseError(ptr, "matrix entries must be rational");
    return q.rational_part();
}

Field parse_field(const json& v, const std::string& ptr) {
    const std::string& s = require_string(v, ptr);
    if (s == "Q") return Field::rationals();
    if (s.size() == 2 && s[0] == 'F' && (s[1] == '2' || s[1] == '3' || s[1] == '5' || s[1] == '7')) {
        return Field::prime(s[1] - '0');
    }
    throw ParseError(ptr, "unsupported field '" + s + "' (use Q, F2, F3, F5 or F7)");
}

std::shared_ptr<const Quiver> parse_quiver(const json& v, const std::string& ptr) {
    require_object(v, ptr);
    const long n = require_integer(require(v, "vertices", ptr), child(ptr, "vertices"));
    if (n < 1) throw ParseError(child(ptr, "vertices"), "a quiver needs at least one vertex");
    std::vector<Arrow> arrows;
    const std::string aptr = child(ptr, "arrows");
    auto it = v.find("arrows");
    if (it != v.end()) {
        require_array(*it, aptr);
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& a = (*it)[i];
            const std::string p = child(aptr, i);
            require_object(a, p);
            const std::string& name = require_string(require(a, "name", p), child(p, "name"));
            const long s = require_integer(require(a, "source", p), child(p, "source"));
            const long t = require_integer(require(a, "target", p), child(p, "target"));
            if (s < 1 || s > n) throw ParseError(child(p, "source"), "vertex out of range");
            if (t < 1 || t > n) throw ParseError(child(p, "target"), "vertex out of range");
            arrows.push_back({name, static_cast<std::size_t>(s - 1), static_cast<std::size_t>(t - 1)});
        }
    }
    try {
        return std::make_shared<const Quiver>(static_cast<std::size_t>(n), std::move(arrows));
    } catch (const PreconditionError& e) {
        throw ParseError(ptr, e.what());
    }
}

Matrix parse_matrix(const json& v, std::size_t rows, std::size_t cols, const std::string& ptr,
                    const std::string& arrow) {
    require_array(v, ptr);
    auto shape_error = [&] {
        return ParseError(ptr, "matrix for arrow '" + arrow + "' must be " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
    };
    if (rows == 0 || cols == 0) {
        if (!v.empty() && !(v.size() == rows && std::all_of(v.begin(), v.end(), [](const json& r) {
                                return r.is_array() && r.empty();
                            }))) {
            throw shape_error();
        }
        return Matrix(rows, cols);
    }
    if (v.size() != rows) throw shape_error();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rp = child(ptr, i);
        require_array(v[i], rp);
        if (v[i].size() != cols) throw shape_error();
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_rational_scalar(v[i][j], child(rp, j));
    }
    return m;
}

QuiverRep parse_rep(const json& v, const std::string& ptr, const std::shared_ptr<const Quiver>& q, const Field& f,
                    long cap) {
    require_object(v, ptr);
    const std::string dptr = child(ptr, "dims");
    const json& dj = require_array(require(v, "dims", ptr), dptr);
    if (dj.size() != q->vertex_count()) {
        throw ParseError(dptr, "expected " + std::to_string(q->vertex_count()) + " dimensions");
    }
    DimVector dims(q->vertex_count());
    for (std::size_t i = 0; i < dj.size(); ++i) {
        dims[i] = require_integer(dj[i], child(dptr, i));
        if (dims[i] < 0) throw ParseError(child(dptr, i), "dimensions are nonnegative");
    }
    if (dims.total() > cap) {
        throw ParseError(dptr, "total dimension " + std::to_string(dims.total()) + " exceeds the cap " +
                                   std::to_string(cap));
    }
    const std::string mptr = child(ptr, "maps");
    const json empty = json::object();
    auto mit = v.find("maps");
    const json& maps = mit == v.end() ? empty : require_object(*mit, mptr);
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        bool known = false;
        for (const auto& a : q->arrows()) known = known || a.name == it.key();
        if (!known) throw ParseError(child(mptr, it.key()), "no arrow named '" + it.key() + "'");
    }
    std::vector<Matrix> mats;
    for (const auto& a : q->arrows()) {
        const auto rows = static_cast<std::size_t>(dims[a.target]);
        const auto cols = static_cast<std::size_t>(dims[a.source]);
        auto it = maps.find(a.name);
        if (it == maps.end()) {
            if (rows != 0 && cols != 0) throw ParseError(child(mptr, a.name), "missing map for arrow '" + a.name + "'");
            mats.emplace_back(rows, cols);
        } else {
            mats.push_back(parse_matrix(*it, rows, cols, child(mptr, a.name), a.name));
        }
    }
    try {
        return QuiverRep(q, f, dims, std::move(mats));
    } catch (const PreconditionError& e) {
        throw ParseError(ptr, e.what());
    }
}

std::vector<ExactComplex> parse_charge(const json& v, const std::string& ptr, std::size_t n) {
    require_array(v, ptr);
    if (v.size() != n) throw ParseError(ptr, "expected one [re, im] pair per vertex (" + std::to_string(n) + ")");
    std::vector<ExactComplex> out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string p = child(ptr, i);
        require_array(v[i], p);
        if (v[i].size() != 2) throw ParseError(p, "expected [re, im]");
        ExactComplex z(parse_scalar(v[i][0], child(p, 0)), parse_scalar(v[i][1], child(p, 1)));
        try {
            (void)(z.re + z.im);
        } catch (const PreconditionError& e) {
            throw ParseError(p, e.what());
        }
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

CentralCharge Session::charge(const std::string& name) const {
    const auto& values = charge_values(name);
    try {
        return CentralCharge(values);
    } catch (const PreconditionError& e) {
        throw PreconditionError("charge '" + name + "': " + e.what());
    }
}

const std::vector<ExactComplex>& Session::charge_values(const std::string& name) const {
    auto it = charges.find(name);
    if (it == charges.end()) throw PreconditionError("unknown charge '" + name + "'");
    return it->second;
}

const QuiverRep& Session::rep(const std::string& name) const {
    auto it = reps.find(name);
    if (it == reps.end()) throw PreconditionError("unknown representation '" + name + "'");
    return it->second;
}

FormalComplex Session::object(const std::string& name) const {
    if (auto it = reps.find(name); it != reps.end()) return FormalComplex::of(it->second);
    if (auto it = complexes.find(name); it != complexes.end()) return it->second;
    throw PreconditionError("unknown representation or complex '" + name + "'");
}

std::vector<TestObject> Session::testset(const std::string& name) const {
    std::vector<std::string> names;
    if (name == "all") {
        std::set<std::string> all;
        for (const auto& [n, r] : reps) all.insert(n);
        for (const auto& [n, c] : complexes) all.insert(n);
        names.assign(all.begin(), all.end());
    } else {
        auto it = testsets.find(name);
        if (it == testsets.end()) throw PreconditionError("unknown testset '" + name + "'");
        names = it->second;
    }
    std::vector<TestObject> out;
    for (const auto& n : names) out.push_back({n, object(n)});
    return out;
}

const ChargePath& Session::path(const std::string& name) const {
    auto it = paths.find(name);
    if (it == paths.end()) throw PreconditionError("unknown path '" + name + "'");
    return it->second;
}

std::vector<TrackedRep> Session::tracked_reps() const {
    std::vector<TrackedRep> out;
    for (const auto& [n, r] : reps) out.push_back({n, r});
    return out;
}

Session parse_session(const json& doc, long cap) {
    if (cap < 1) throw PreconditionError("the dimension cap must be positive");
    require_object(doc, "");
    static const std::set<std::string> known{"quiver", "field", "reps", "charges", "complexes", "testsets", "paths"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!known.contains(it.key())) throw ParseError(child("", it.key()), "unknown top-level member");
    }

    Session s;
    s.cap = cap;
    s.quiver = parse_quiver(require(doc, "quiver", ""), "/quiver");
    s.field = parse_field(require(doc, "field", ""), "/field");
    const std::size_t n = s.quiver->vertex_count();

    auto section = [&doc](const char* key) -> const json& {
        static const json empty = json::object();
        auto it = doc.find(key);
        if (it == doc.end()) return empty;
        return require_object(*it, child("", key));
    };

    const json& reps = section("reps");
    for (auto it = reps.begin(); it != reps.end(); ++it) {
        s.reps.emplace(it.key(), parse_rep(*it, child("/reps", it.key()), s.quiver, s.field, cap));
    }

    const json& charges = section("charges");
    for (auto it = charges.begin(); it != charges.end(); ++it) {
        s.charges.emplace(it.key(), parse_charge(*it, child("/charges", it.key()), n));
    }

    const json& complexes = section("complexes");
    for (auto it = complexes.begin(); it != complexes.end(); ++it) {
        const std::string p = child("/complexes", it.key());
        if (s.reps.contains(it.key())) throw ParseError(p, "name already used by a representation");
        const std::string pp = child(p, "parts");
        const json& parts = require_object(require(*it, "parts", p), pp);
        FormalComplex fc;
        std::map<long, std::string> names;
        for (auto jt = parts.begin(); jt != parts.end(); ++jt) {
            const std::string kp = child(pp, jt.key());
            long k = 0;
            try {
                std::size_t used = 0;
                k = std::stol(jt.key(), &used);
                if (used != jt.key().size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw ParseError(kp, "shift keys must be integers");
            }
            const std::string& rn = require_string(*jt, kp);
            auto rit = s.reps.find(rn);
            if (rit == s.reps.end()) throw ParseError(kp, "unknown representation '" + rn + "'");
            if (names.contains(k)) throw ParseError(kp, "duplicate shift " + std::to_string(k));
            names.emplace(k, rn);
            fc.add_part(k, rit->second);
        }
        s.complexes.emplace(it.key(), std::move(fc));
        s.complex_parts.emplace(it.key(), std::move(names));
    }

    const json& testsets = section("testsets");
    for (auto it = testsets.begin(); it != testsets.end(); ++it) {
        const std::string p = child("/testsets", it.key());
        if (it.key() == "all") throw ParseError(p, "'all' is reserved");
        require_array(*it, p);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string& nm = require_string((*it)[i], child(p, i));
            if (!s.reps.contains(nm) && !s.complexes.contains(nm)) {
                throw ParseError(child(p, i), "unknown representation or complex '" + nm + "'");
            }
            names.push_back(nm);
        }
        if (names.empty()) throw ParseError(p, "testsets must be nonempty");
        s.testsets.emplace(it.key(), std::move(names));
    }

    const json& paths = section("paths");
    for (auto it = paths.begin(); it != paths.end(); ++it) {
        const std::string p = child("/paths", it.key());
        require_object(*it, p);
        auto endpoint = [&](const char* key) {
            const std::string ep = child(p, key);
            const json& v = require(*it, key, p);
            if (v.is_string()) {
                auto cit = s.charges.find(v.get<std::string>());
                if (cit == s.charges.end()) throw ParseError(ep, "unknown charge '" + v.get<std::string>() + "'");
                return cit->second;
            }
            return parse_charge(v, ep, n);
        };
        ChargePath path{endpoint("from"), endpoint("to")};
        try {
            path.validate();
        } catch (const PreconditionError& e) {
            throw ParseError(p, e.what());
        }
        s.paths.emplace(it.key(), std::move(path));
    }
    return s;
}

Session parse_session_text(const std::string& text, long cap) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_session(doc, cap);
}

Session load_session(const std::string& path, long cap) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_session_text(buf.str(), cap);
}

json to_json(const Rational& q) { return to_string(q); }
json to_json(const QuadScalar& x) { return to_string(x); }
json to_json(const ExactComplex& z) { return json::array({to_json(z.re), to_json(z.im)}); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const DimVector& d) {
    json out = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(d[i]);
    return out;
}

json to_json(const Session& s) {
    auto charge_json = [](const std::vector<ExactComplex>& zs) {
        json out = json::array();
        for (const auto& z : zs) out.push_back(to_json(z));
        return out;
    };
    json doc;
    json arrows = json::array();
    for (const auto& a : s.quiver->arrows()) {
        arrows.push_back({{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
    }
    doc["quiver"] = {{"vertices", s.quiver->vertex_count()}, {"arrows", arrows}};
    doc["field"] = s.field.name();
    doc["reps"] = json::object();
    for (const auto& [name, r] : s.reps) {
        json maps = json::object();
        for (std::size_t k = 0; k < s.quiver->arrows().size(); ++k) maps[s.quiver->arrows()[k].name] = to_json(r.map(k));
        doc["reps"][name] = {{"dims", to_json(r.dims())}, {"maps", maps}};
    }
    doc["charges"] = json::object();
    for (const auto& [name, zs] : s.charges) doc["charges"][name] = charge_json(zs);
    doc["complexes"] = json::object();
    for (const auto& [name, parts] : s.complex_parts) {
        json pj = json::object();
        for (const auto& [k, rn] : parts) pj[std::to_string(k)] = rn;
        doc["complexes"][name] = {{"parts", pj}};
    }
    doc["testsets"] = json::object();
    for (const auto& [name, names] : s.testsets) doc["testsets"][name] = names;
    doc["paths"] = json::object();
    for (const auto& [name, p] : s.paths) doc["paths"][name] = {{"from", charge_json(p.start)}, {"to", charge_json(p.end)}};
    return doc;
}

}  // namespace stab
