// Copyright 2026 The qline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qline/oracle.hpp"
#include "qline/pauli.hpp"
#include "qline/projline.hpp"
#include "qline/ring_core.hpp"
#include "qline/serialize.hpp"
#include "qline/symplectic.hpp"

namespace {

using namespace qline;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv, dot };

struct Options {
    std::string format;  // empty: command default
    bool matrix = false;
    bool brute = false;
    bool pretty = false;
    bool timing = false;
    std::vector<std::string> checks;
    std::string fault;
};

Format resolve_format(const Options &opt, bool graph_command) {
    if (opt.format.empty()) {
        return graph_command ? Format::dot : Format::text;
    }
    Format f = opt.format == "json" ? Format::json
               : opt.format == "csv" ? Format::csv
               : opt.format == "dot" ? Format::dot
                                     : Format::text;
    if (graph_command && f != Format::dot && f != Format::json) {
        throw usage_error("graph supports --format dot or json, got " + opt.format);
    }
    if (!graph_command && f == Format::dot) {
        throw usage_error("--format dot is only accepted by the graph command");
    }
    return f;
}

std::string vec_text(const Vector2 &v) {
    return "(" + std::to_string(v.b) + "," + std::to_string(v.c) + ")";
}

std::string op_text(const PauliOp &w, bool pretty) {
    if (pretty) {
        return pretty_op(w);
    }
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + "," + std::to_string(w.c) + ")";
}

std::string members_text(const VectorSet &set) {
    std::string out;
    for (const auto &v : set) {
        if (!out.empty()) {
            out += ' ';
        }
        out += vec_text(v);
    }
    return out;
}

std::string factors_text(const Modulus &m) {
    std::string out;
    for (const auto &f : m.factors()) {
        if (!out.empty()) {
            out += " * ";
        }
        out += std::to_string(f.prime);
        if (f.multiplicity > 1) {
            out += "^" + std::to_string(f.multiplicity);
        }
    }
    return out;
}

json primes_of(const std::vector<std::size_t> &indices, const Modulus &m) {
    json out = json::array();
    for (auto k : indices) {
        out.push_back(m.prime(k));
    }
    return out;
}

int cmd_factor(const Modulus &m, const Options &opt, std::ostream &out) {
    switch (resolve_format(opt, false)) {
        case Format::json: {
            auto j = to_json(m);
            j["unit_count"] = unit_count(m);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::csv:
            out << "prime,multiplicity,idempotent\n";
            for (std::size_t k = 0; k < m.rank(); ++k) {
                out << m.factors()[k].prime << ',' << m.factors()[k].multiplicity << ',';
                if (m.square_free()) {
                    out << m.idempotents()[k];
                }
                out << '\n';
            }
            break;
        default: {
            out << "d = " << m.d() << '\n';
            out << "factors: " << factors_text(m) << (is_prime(m.d()) ? " (prime)" : "") << '\n';
            out << "square-free: " << (m.square_free() ? "yes" : "no") << '\n';
            out << "units: " << unit_count(m) << '\n';
            out << "idempotents:";
            if (m.square_free()) {
                for (auto e : m.idempotents()) {
                    out << ' ' << e;
                }
                out << '\n';
            } else {
                out << " none (d is not square-free)\n";
            }
        }
    }
    return exit_ok;
}

int cmd_perp(const Modulus &m, const Vector2 &v, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, false);
    const auto perp = perp_set(v, m);
    std::optional<std::vector<Point>> through;
    if (m.square_free()) {
        through = points_containing(v, m);
    }

    if (format == Format::csv) {
        out << "b,c\n";
        for (const auto &w : perp.members) {
            out << w.b << ',' << w.c << '\n';
        }
        return exit_ok;
    }
    if (format == Format::json) {
        json j;
        j["d"] = m.d();
        j["base"] = to_json(v);
        j["size"] = perp.size();
        j["members"] = to_json(perp.members);
        if (through) {
            json points = json::array();
            for (const auto &p : *through) {
                points.push_back(to_json(p));
            }
            j["K"] = primes_of(index_set_K(v, m), m);
            j["points"] = std::move(points);
            json predicted;
            predicted["points_through"] = points_through_formula(v, m);
            predicted["perp_size"] = perp_size_formula(v, m);
            j["predicted"] = std::move(predicted);
            json enumerated;
            enumerated["points_through"] = through->size();
            enumerated["perp_size"] = perp.size();
            j["enumerated"] = std::move(enumerated);
            j["union_equals_perp"] = perp_as_point_union(v, m) == perp.members;
        } else {
            j["points"] = nullptr;
            j["note"] = "point decomposition requires square-free d";
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }

    out << "perp-set of " << vec_text(v) << " in Z" << m.d() << "^2\n";
    out << "size: " << perp.size() << '\n';
    out << "members: " << members_text(perp.members) << '\n';
    if (!through) {
        out << "point decomposition: requires square-free d\n";
        return exit_ok;
    }
    out << "points containing " << vec_text(v) << ": " << through->size() << '\n';
    for (const auto &p : *through) {
        out << "  " << point_label(p, m) << ": " << members_text(p.members) << '\n';
    }
    out << "union of points equals perp-set: " << (perp_as_point_union(v, m) == perp.members ? "yes" : "no") << '\n';
    out << "predicted:  points through = " << points_through_formula(v, m)
        << ", perp size = " << perp_size_formula(v, m) << '\n';
    out << "enumerated: points through = " << through->size() << ", perp size = " << perp.size() << '\n';
    return exit_ok;
}

int cmd_points(const Modulus &m, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, false);
    const auto line = enumerate_points(m);
    if (format == Format::csv) {
        out << "index,b,c\n";
        for (std::size_t i = 0; i < line.size(); ++i) {
            out << i << ',' << line[i].generator.b << ',' << line[i].generator.c << '\n';
        }
        return exit_ok;
    }
    if (format == Format::json) {
        json j;
        j["d"] = m.d();
        j["count"] = line.size();
        j["formula"] = m.square_free() ? json(point_count_formula(m)) : json(nullptr);
        json points = json::array();
        for (const auto &p : line) {
            points.push_back(to_json(p));
        }
        j["points"] = std::move(points);
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "P1(Z" << m.d() << "): " << line.size() << " points";
    if (m.square_free()) {
        out << " (formula: " << point_count_formula(m) << ")";
    }
    out << '\n';
    for (const auto &p : line) {
        out << point_label(p, m) << ": " << members_text(p.members) << '\n';
    }
    return exit_ok;
}

int cmd_commute(const Modulus &m, const PauliOp &w, const PauliOp &w2, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, false);
    const Int exponent = commutator(w, w2, m).a;
    const bool yes = commutes(w, w2, m);
    std::optional<bool> matrix;
    if (opt.matrix) {
        const auto mw = to_matrix(w, m), mw2 = to_matrix(w2, m);
        matrix = mw * mw2 == mw2 * mw;
    }
    if (format == Format::csv) {
        out << "a,b,c,a2,b2,c2,exponent,commute" << (matrix ? ",matrix_commute" : "") << '\n';
        out << w.a << ',' << w.b << ',' << w.c << ',' << w2.a << ',' << w2.b << ',' << w2.c << ',' << exponent << ','
            << (yes ? "true" : "false");
        if (matrix) {
            out << ',' << (*matrix ? "true" : "false");
        }
        out << '\n';
        return exit_ok;
    }
    if (format == Format::json) {
        json j;
        j["d"] = m.d();
        j["w"] = to_json(w, m);
        j["w2"] = to_json(w2, m);
        if (opt.pretty) {
            j["w_pretty"] = pretty_op(w);
            j["w2_pretty"] = pretty_op(w2);
        }
        j["commutator_exponent"] = exponent;
        j["commute"] = yes;
        if (matrix) {
            j["matrix_commute"] = *matrix;
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "W  = " << op_text(w, opt.pretty) << '\n';
    out << "W' = " << op_text(w2, opt.pretty) << '\n';
    out << "commutator: w^" << exponent << " I\n";
    out << "commute: " << (yes ? "yes" : "no") << '\n';
    if (matrix) {
        out << "matrix oracle: " << (*matrix ? "commute" : "do not commute")
            << (*matrix == yes ? " (agrees)" : " (DISAGREES)") << '\n';
    }
    return exit_ok;
}

int cmd_count(const Modulus &m, const Vector2 &v, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, false);
    if (!m.square_free()) {
        throw usage_error(
            "count requires a square-free modulus (product of distinct primes), got d = " + std::to_string(m.d()));
    }
    const PauliOp w{0, v.b, v.c};
    const Int formula = commuting_count(w, m);
    std::optional<Int> enumerated;
    std::string brute_note;
    if (opt.brute) {
        if (m.d() <= max_closure_modulus) {
            enumerated = commuting_count_brute(w, m);
        } else {
            brute_note = "skipped: requires d <= " + std::to_string(max_closure_modulus);
        }
    }
    if (format == Format::csv) {
        out << "d,b,c,perp_size,formula,enumerated\n";
        out << m.d() << ',' << v.b << ',' << v.c << ',' << perp_size_formula(v, m) << ',' << formula << ',';
        if (enumerated) {
            out << *enumerated;
        }
        out << '\n';
        return exit_ok;
    }
    if (format == Format::json) {
        json j;
        j["d"] = m.d();
        j["vector"] = to_json(v);
        j["K"] = primes_of(index_set_K(v, m), m);
        j["perp_size"] = perp_size_formula(v, m);
        j["formula"] = formula;
        if (enumerated) {
            j["enumerated"] = *enumerated;
        } else if (!brute_note.empty()) {
            j["enumerated"] = brute_note;
        }
        out << j.dump(2) << '\n';
        return exit_ok;
    }
    out << "operators commuting with w^a X^" << v.b << " Z^" << v.c << " (d = " << m.d() << ")\n";
    out << "K primes:";
    for (auto k : index_set_K(v, m)) {
        out << ' ' << m.prime(k);
    }
    out << '\n';
    out << "perp size:  " << perp_size_formula(v, m) << '\n';
    out << "formula:    " << formula << '\n';
    if (enumerated) {
        out << "enumerated: " << *enumerated << '\n';
    } else if (!brute_note.empty()) {
        out << "enumerated: " << brute_note << '\n';
    }
    return exit_ok;
}

int cmd_graph(const Modulus &m, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, true);
    const auto g = neighbour_graph(m);
    if (format == Format::json) {
        out << to_json(g).dump(2) << '\n';
    } else {
        out << to_dot(g, m);
    }
    return exit_ok;
}

Int flipped_form(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return form(w, v, m);
}

Int symmetric_form(const Vector2 &v, const Vector2 &w, const Modulus &m) {
    return m.add(m.mul(v.c, w.b), m.mul(w.c, v.b));
}

int cmd_verify(const Modulus &m, const Options &opt, std::ostream &out) {
    const auto format = resolve_format(opt, false);
    OracleHooks hooks;
    if (opt.fault == "sign") {
        hooks.form = &flipped_form;
    } else if (opt.fault == "symmetric") {
        hooks.form = &symmetric_form;
    }
    VerificationReport report;
    try {
        report = verify_all(m, opt.checks, hooks);
    } catch (const std::invalid_argument &e) {
        throw usage_error(e.what());
    }
    if (format == Format::json) {
        out << to_json(report, opt.timing).dump(2) << '\n';
    } else if (format == Format::csv) {
        out << "name,outcome,scope,reason\n";
        for (const auto &c : report.checks) {
            out << c.name << ',' << to_string(c.outcome) << ",\"" << c.scope << "\",\"" << c.reason << "\"\n";
        }
    } else {
        out << "verification for d = " << m.d() << '\n';
        for (const auto &c : report.checks) {
            out << "  " << c.name << ": " << to_string(c.outcome);
            if (!c.scope.empty()) {
                out << " [" << c.scope << "]";
            }
            if (!c.reason.empty()) {
                out << " (" << c.reason << ")";
            }
            if (opt.timing) {
                out << " (" << std::chrono::duration<double, std::milli>(c.elapsed).count() << " ms)";
            }
            out << '\n';
            if (c.counterexample) {
                out << "    counterexample: " << c.counterexample->dump() << '\n';
            }
        }
        std::size_t counts[3] = {0, 0, 0};
        for (const auto &c : report.checks) {
            ++counts[static_cast<std::size_t>(c.outcome)];
        }
        out << (report.all_passed() ? "ok" : "FAILED") << ": " << counts[0] << " passed, " << counts[1]
            << " failed, " << counts[2] << " skipped\n";
    }
    return report.all_passed() ? exit_ok : exit_failed;
}

int run(int argc, char **argv) {
    CLI::App app{"Pauli group commutation and the projective line over Z_d"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_flag("--matrix", opt.matrix, "Cross-check commutation with the exact matrix model");
    app.add_flag("--brute", opt.brute, "Also count by exhaustive enumeration");
    app.add_flag("--pretty", opt.pretty, "Render operators symbolically");
    app.add_flag("--timing", opt.timing, "Include per-check timings in verify output");
    app.add_option("--checks", opt.checks, "Comma-separated checks to run")->delimiter(',');
    app.add_option("--inject-fault", opt.fault, "Replace the form by a faulty one (testing only)")
        ->check(CLI::IsMember({"sign", "symmetric"}))
        ->group("");

    Int d = 0, a = 0, b = 0, c = 0, a2 = 0, b2 = 0, c2 = 0;
    auto *factor = app.add_subcommand("factor", "Factorisation, units and CRT idempotents of d");
    factor->add_option("d", d)->required();
    auto *perp = app.add_subcommand("perp", "Perp-set of (b, c) and its decomposition into points");
    perp->add_option("d", d)->required();
    perp->add_option("b", b)->required();
    perp->add_option("c", c)->required();
    auto *points = app.add_subcommand("points", "All points of the projective line over Z_d");
    points->add_option("d", d)->required();
    auto *commute = app.add_subcommand("commute", "Commutator of w^a X^b Z^c and w^a2 X^b2 Z^c2");
    commute->add_option("d", d)->required();
    commute->add_option("a", a)->required();
    commute->add_option("b", b)->required();
    commute->add_option("c", c)->required();
    commute->add_option("a2", a2)->required();
    commute->add_option("b2", b2)->required();
    commute->add_option("c2", c2)->required();
    auto *count = app.add_subcommand("count", "Number of operators commuting with X^b Z^c");
    count->add_option("d", d)->required();
    count->add_option("b", b)->required();
    count->add_option("c", c)->required();
    auto *graph = app.add_subcommand("graph", "Neighbour graph of the projective line (dot or json)");
    graph->add_option("d", d)->required();
    auto *verify = app.add_subcommand("verify", "Run the exhaustive checks for d");
    verify->add_option("d", d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream out;
    int code = exit_ok;
    try {
        const Modulus m(d);
        if (*factor) {
            code = cmd_factor(m, opt, out);
        } else if (*perp) {
            code = cmd_perp(m, make_vector(b, c, m), opt, out);
        } else if (*points) {
            code = cmd_points(m, opt, out);
        } else if (*commute) {
            code = cmd_commute(m, make_op(a, b, c, m), make_op(a2, b2, c2, m), opt, out);
        } else if (*count) {
            code = cmd_count(m, make_vector(b, c, m), opt, out);
        } else if (*graph) {
            code = cmd_graph(m, opt, out);
        } else if (*verify) {
            code = cmd_verify(m, opt, out);
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    std::cout << out.str();
    std::cout.flush();
    return code;
}

}  // namespace

int main(int argc, char **argv) {
    return run(argc, argv);
}
