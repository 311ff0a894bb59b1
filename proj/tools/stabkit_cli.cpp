// stabkit command-line front end. Reads a JSON session document and prints a
// JSON (or CSV) report. Exit codes: 0 ok, 2 precondition failure, 3 internal
// invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabkit/errors.hpp"
#include "stabkit/report.hpp"

namespace {

using stab::report::json;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabkit: exact stability conditions on quiver representations"};
    app.require_subcommand(1);

    std::string input, output = "json";
    long cap = stab::kDefaultDimensionCap;
    app.add_option("--input", input, "session document (JSON)");
    app.add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--cap", cap, "total-dimension cap for enumeration")->check(CLI::PositiveNumber);

    std::string a1, a2, a3, testset = "all", eps_text, matrix_text, pairs_mode = "auto";
    long branch = 0;
    std::vector<std::string> pairs;

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtration of a representation");
    hn->add_option("rep", a1)->required();
    hn->add_option("charge", a2)->required();

    auto* semi = app.add_subcommand("semistable", "semistability verdict with witness");
    semi->add_option("rep", a1)->required();
    semi->add_option("charge", a2)->required();

    auto* dec = app.add_subcommand("decompose", "slicing decomposition of a representation or complex");
    dec->add_option("object", a1)->required();
    dec->add_option("charge", a2)->required();

    auto* walls = app.add_subcommand("walls", "walls along a charge path");
    walls->add_option("path", a1)->required();
    walls->add_option("--pairs", pairs_mode, "auto or explicit")->check(CLI::IsMember({"auto", "explicit"}));
    walls->add_option("--pair", pairs, "explicit class pair a1,a2:b1,b2 (repeatable)");

    auto* def = app.add_subcommand("deform", "heart-preserving deformation check");
    def->add_option("charge", a1)->required();
    def->add_option("chargeW", a2)->required();
    def->add_option("--eps", eps_text, "epsilon as p/q")->required();
    def->add_option("--testset", testset);

    auto* metric = app.add_subcommand("metric", "finite-testset distances");
    metric->add_option("kind", a3)->required()->check(CLI::IsMember({"slicing", "stab"}));
    metric->add_option("charge1", a1)->required();
    metric->add_option("charge2", a2)->required();
    metric->add_option("--testset", testset);

    auto* gl = app.add_subcommand("glact", "GL~(2,R) action on a stability condition");
    gl->add_option("charge", a1)->required();
    gl->add_option("--matrix", matrix_text, "a,b,c,d")->required();
    gl->add_option("--branch", branch);
    gl->add_option("--testset", testset);

    auto* disc = app.add_subcommand("discrete", "discreteness of the charge image");
    disc->add_option("charge", a1)->required();

    auto* val = app.add_subcommand("validate", "slicing axioms on a testset");
    val->add_option("charge", a1)->required();
    val->add_option("--testset", testset);

    auto* curve = app.add_subcommand("curve", "numerical stability conditions on an elliptic curve");
    curve->add_option("action", a3)->required()->check(CLI::IsMember({"classify", "reduce"}));
    curve->add_option("--matrix", matrix_text, "charge matrix a,b,c,d sending (r, d) to (Re Z, Im Z)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        json result;
        if (curve->parsed()) {
            const stab::Mat2 m = stab::report::parse_matrix_arg(matrix_text);
            result = a3 == "classify" ? stab::report::curve_classify(m) : stab::report::curve_reduce(m);
        } else {
            if (input.empty()) throw stab::PreconditionError("--input is required for this command");
            const stab::Session s = stab::load_session(input, cap);
            if (hn->parsed()) {
                result = stab::report::hn(s, a1, a2);
            } else if (semi->parsed()) {
                result = stab::report::semistable(s, a1, a2);
            } else if (dec->parsed()) {
                result = stab::report::decompose(s, a1, a2);
            } else if (walls->parsed()) {
                if (pairs_mode == "explicit" && pairs.empty()) {
                    throw stab::PreconditionError("--pairs explicit needs at least one --pair");
                }
                result = stab::report::walls(s, a1, pairs_mode == "explicit" ? pairs : std::vector<std::string>{});
            } else if (def->parsed()) {
                result = stab::report::deform(s, a1, a2, stab::parse_rational(eps_text), testset);
            } else if (metric->parsed()) {
                result = a3 == "slicing" ? stab::report::metric_slicing(s, a1, a2, testset)
                                         : stab::report::metric_stab(s, a1, a2, testset);
            } else if (gl->parsed()) {
                result = stab::report::glact(s, a1, stab::report::parse_matrix_arg(matrix_text), branch, testset);
            } else if (disc->parsed()) {
                result = stab::report::discrete(s, a1);
            } else if (val->parsed()) {
                result = stab::report::validate(s, a1, testset);
            }
        }
        if (output == "csv") {
            std::cout << stab::report::to_csv(result);
        } else {
            std::cout << result.dump(2) << "\n";
        }
        return 0;
    } catch (const stab::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const stab::InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
