#pragma once

// Command implementations behind the CLI. Each returns a JSON report whose
// "table" member is a flat per-row view for CSV export. Exact values are
// always present; "*_float" members are advisory copies.

#include <optional>
#include <string>
#include <vector>

#include "stabkit/ellcurve.hpp"
#include "stabkit/session.hpp"
#include "stabkit/stabspace.hpp"

namespace stab::report {

using nlohmann::json;

json phase_json(const PhaseKey& p);
json root_json(const WallRoot& r);
json mat2_json(const Mat2& m);

json hn(const Session& s, const std::string& rep, const std::string& charge);
json semistable(const Session& s, const std::string& rep, const std::string& charge);
json decompose(const Session& s, const std::string& object, const std::string& charge);
// Explicit pairs are "a1,a2,...:b1,b2,..." strings; empty means auto.
json walls(const Session& s, const std::string& path, const std::vector<std::string>& explicit_pairs);
json deform(const Session& s, const std::string& charge, const std::string& charge_w, const Rational& eps,
            const std::string& testset);
json metric_slicing(const Session& s, const std::string& c1, const std::string& c2, const std::string& testset);
json metric_stab(const Session& s, const std::string& c1, const std::string& c2, const std::string& testset);
json glact(const Session& s, const std::string& charge, const Mat2& t, long branch, const std::string& testset);
json discrete(const Session& s, const std::string& charge);
json validate(const Session& s, const std::string& charge, const std::string& testset);
json curve_classify(const Mat2& m);
json curve_reduce(const Mat2& m);

// "a,b,c,d" with rational entries.
Mat2 parse_matrix_arg(const std::string& text);

// The "table" member as CSV (header from the first row's keys).
std::string to_csv(const json& report);

}  // namespace stab::report
