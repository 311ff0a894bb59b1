#pragma once

// JSON session documents: one quiver and field, named representations,
// charges, formal complexes, testsets and charge paths.
//
// {
//   "quiver":    {"vertices": 2, "arrows": [{"name": "a", "source": 1, "target": 2}]},
//   "field":     "F2" | "F3" | "F5" | "F7" | "Q",
//   "reps":      {"P": {"dims": [1, 1], "maps": {"a": [[1]]}}},
//   "charges":   {"Z": [["-1", "1"], ["1", "1"]]},          // [re, im] per vertex
//   "complexes": {"C": {"parts": {"0": "S2", "1": "S1"}}},
//   "testsets":  {"T": ["S1", "S2", "P", "C"]},              // "all" is implicit
//   "paths":     {"p": {"from": "Z", "to": [["1", "1"], ["1", "1"]]}}
// }
//
// Vertices are numbered from 1 in documents. Scalars are integers or strings
// "p/q", "(a+b*sqrt(D))" or "(a+b√D)".

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "stabkit/slicing.hpp"
#include "stabkit/walls.hpp"

namespace stab {

struct Session {
    std::shared_ptr<const Quiver> quiver;
    Field field = Field::rationals();
    long cap = kDefaultDimensionCap;
    std::map<std::string, QuiverRep> reps;
    std::map<std::string, std::vector<ExactComplex>> charges;  // unvalidated values
    std::map<std::string, FormalComplex> complexes;
    std::map<std::string, std::map<long, std::string>> complex_parts;  // shift -> rep name
    std::map<std::string, std::vector<std::string>> testsets;
    std::map<std::string, ChargePath> paths;

    EnumerationOptions options() const { return {cap}; }

    // Stability function by name; values must lie in the half-plane.
    CentralCharge charge(const std::string& name) const;
    const std::vector<ExactComplex>& charge_values(const std::string& name) const;
    const QuiverRep& rep(const std::string& name) const;
    // A representation (in degree 0) or a formal complex.
    FormalComplex object(const std::string& name) const;
    // "all" lists every rep and complex in name order.
    std::vector<TestObject> testset(const std::string& name) const;
    const ChargePath& path(const std::string& name) const;
    std::vector<TrackedRep> tracked_reps() const;
};

Session parse_session(const nlohmann::json& doc, long cap = kDefaultDimensionCap);
Session parse_session_text(const std::string& text, long cap = kDefaultDimensionCap);
Session load_session(const std::string& path, long cap = kDefaultDimensionCap);

// Canonical form: sorted keys, scalars as strings, 1-based vertices.
nlohmann::json to_json(const Session& s);

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const QuadScalar& x);
nlohmann::json to_json(const ExactComplex& z);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const DimVector& d);

}  // namespace stab
