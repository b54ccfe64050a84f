// cat1: build Coxeter complexes and Artin complex balls, check the six link and
// filling conditions, and run the reproduction suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cat1/artin_complex.hpp"
#include "cat1/cat1_checker.hpp"
#include "cat1/coxeter.hpp"
#include "cat1/development.hpp"
#include "cat1/garside.hpp"
#include "cat1/report_json.hpp"
#include "cat1/typed_complex.hpp"
#include "cat1/verify.hpp"

namespace {

using namespace cat1;
using report::json;

enum Exit { kPass = 0, kFail = 1, kInconclusive = 2, kInvalid = 3 };

int exit_for(checker::Status s) {
    switch (s) {
        case checker::Status::Pass: return kPass;
        case checker::Status::Fail: return kFail;
        case checker::Status::Inconclusive: return kInconclusive;
    }
    return kInvalid;
}

// Resource caps from the environment.
long env_cap(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (*end || x <= 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
    return x;
}

long max_ball_radius() { return env_cap("CAT1_MAX_RADIUS", 6); }
long cycle_limit() { return env_cap("CAT1_CYCLE_LIMIT", 10000); }

// Writes to the file when a path is given, else to stdout.
template <class F>
void emit(const std::string& path, F&& body) {
    if (path.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    body(out);
}

// ---------------------------------------------------------------- tables

int cmd_tables(bool as_json) {
    const auto t1 = checker::enumerate_short_triples();
    const auto t2 = checker::reduce_triples(t1);
    if (as_json) {
        json j{{"meta", report::meta("tables", json::object())},
               {"tables", {{"short", report::triples_json(t1)}, {"reduced", report::triples_json(t2)}}}};
        std::cout << j.dump(2) << "\n";
        return kPass;
    }
    auto print = [](const char* title, const std::vector<sphere::ShortTriple>& t) {
        std::printf("%s (%zu rows)\n", title, t.size());
        std::printf("  %-10s %10s %10s\n", "triple", "sum", "length");
        for (const auto& x : t)
            std::printf("  %-10s %10.6f %10.6f\n", x.str().c_str(), sphere::weighted_length(x),
                        2 * sphere::weighted_length(x));
    };
    print("short triples (n_alpha,n_beta,n_delta), sum < pi", t1);
    std::printf("\n");
    print("reduced list", t2);
    return kPass;
}

// ---------------------------------------------------------------- coxeter

int cmd_coxeter(const std::string& name, const std::string& out) {
    const auto d = coxeter::CoxeterDiagram::parse(name);
    if (d.rank != 2 && d.rank != 3)
        throw std::invalid_argument("only rank 2 and 3 diagrams give complexes (got " + name + ")");
    const auto C = coxeter::build_coxeter_complex(d);
    complex::TypedComplex k;
    if (d.rank == 3) {
        k = coxeter::to_typed_complex(C);
    } else {
        // rank 2: a polygon, written as vertices and edges
        for (const auto& v : C.vertices) k.add_vertex(v.id, v.type);
        for (const auto& ch : C.chambers) k.add_edge(ch[0], ch[1]);
    }
    emit(out, [&](std::ostream& os) {
        os << "# Coxeter complex of " << name << ", |W| = " << C.group->size() << "\n";
        complex::write_complex(os, k);
    });
    if (!out.empty() && !C.coordinates.empty()) {
        std::ofstream cs(out + ".coords");
        cs.precision(17);
        cs << "# unit vectors: id x y z\n";
        for (std::size_t v = 0; v < C.vertices.size(); ++v)
            cs << C.vertices[v].id << " " << C.coordinates[v][0] << " " << C.coordinates[v][1] << " "
               << C.coordinates[v][2] << "\n";
    }
    std::cerr << name << ": " << k.vertex_count() << " vertices, " << k.edges().size() << " edges, "
              << k.triangle_count() << " triangles\n";
    return kPass;
}

// ---------------------------------------------------------------- check

void print_report(const checker::CheckReport& r) {
    for (const auto& c : r.conditions) {
        std::printf("(%d) %-54s %-12s %zu checked\n", c.id, c.name.c_str(), checker::status_name(c.status),
                    c.checked);
        for (const auto& w : c.witnesses) {
            std::printf("      %s:", w.kind.c_str());
            for (const auto& v : w.vertices) std::printf(" %s", v.c_str());
            if (!w.detail.empty()) std::printf("  [%s]", w.detail.c_str());
            std::printf("\n");
        }
        if (c.witness_total > c.witnesses.size())
            std::printf("      ... %zu more\n", c.witness_total - c.witnesses.size());
    }
    std::printf("verdict: %s\n", checker::status_name(r.verdict()));
}

int cmd_check(const std::string& path, bool as_json, bool induced) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return kInvalid;
    }
    complex::TypedComplex k;
    try {
        k = complex::parse_complex(in);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInvalid;
    }
    const auto v = complex::validate(k);
    if (!v.ok()) {
        if (as_json) {
            json j{{"meta", report::meta("check", {{"input", path}, {"induced", induced}})},
                   {"verdict", "invalid"},
                   {"problems", v.problems}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& p : v.problems) std::cerr << path << ": " << p << "\n";
        }
        return kInvalid;
    }
    checker::CheckOptions o;
    o.induced = induced;
    o.cycle_limit = static_cast<std::size_t>(cycle_limit());
    const auto r = checker::check_cat1_criteria(k, o);
    if (as_json) {
        json j = report::to_json(r);
        j = json{{"meta", report::meta("check", {{"input", path}, {"induced", induced}, {"cycle_limit", o.cycle_limit}})},
                 {"complex", {{"vertices", k.vertex_count()}, {"edges", k.edges().size()}, {"triangles", k.triangle_count()}}},
                 {"conditions", j["conditions"]},
                 {"verdict", j["verdict"]}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("%s: %zu vertices, %zu triangles\n", path.c_str(), k.vertex_count(), k.triangle_count());
        print_report(r);
    }
    return exit_for(r.verdict());
}

// ---------------------------------------------------------------- ball

int cmd_ball(const std::string& type, int radius, const std::string& out) {
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    if (radius > max_ball_radius())
        throw std::invalid_argument("radius " + std::to_string(radius) + " exceeds CAT1_MAX_RADIUS=" +
                                    std::to_string(max_ball_radius()));
    coxeter::CoxeterDiagram d;
    if (type == "B3") d = garside::diagram_b3();
    else if (type == "A5") d = garside::diagram_a5();
    else throw std::invalid_argument("ball type must be B3 or A5 (got " + type + ")");
    const garside::ArtinGroup G(d);
    const artin::ArtinBall B(G, radius);
    auto rep_word = [&](int v) { return B.word_string(*B.find_chamber(B.vertex(v).rep)); };
    if (d.rank == 3) {
        const auto k = B.typed_complex();
        emit(out, [&](std::ostream& os) {
            os << "# ball of radius " << radius << " in the Artin complex of " << type << ", " << B.chamber_count()
               << " chambers\n";
            complex::write_complex(os, k);
        });
    } else {
        // No 2-skeleton: vertices and the order relation between vertices sharing a chamber.
        std::set<std::pair<int, int>> rel;
        for (int c = 0; c < static_cast<int>(B.chamber_count()); ++c)
            for (int i = 1; i <= d.rank; ++i)
                for (int j = i + 1; j <= d.rank; ++j) rel.insert({B.chamber_vertex(c, i), B.chamber_vertex(c, j)});
        emit(out, [&](std::ostream& os) {
            os << "# poset: ball of radius " << radius << " in the Artin complex of " << type << ", "
               << B.chamber_count() << " chambers\n";
            os << "# v <id> <type>; le <a> <b> means a < b\n";
            for (std::size_t v = 0; v < B.vertex_count(); ++v)
                os << "v " << B.vertex(static_cast<int>(v)).id << " " << B.vertex(static_cast<int>(v)).type() << "\n";
            for (auto [a, b] : rel) os << "le " << B.vertex(a).id << " " << B.vertex(b).id << "\n";
        });
    }
    if (!out.empty()) {
        std::ofstream ws(out + ".words");
        ws << "# id type shortest-chamber-word\n";
        for (std::size_t v = 0; v < B.vertex_count(); ++v)
            ws << B.vertex(static_cast<int>(v)).id << " " << B.vertex(static_cast<int>(v)).type() << " "
               << rep_word(static_cast<int>(v)) << "\n";
    }
    std::cerr << type << " ball of radius " << radius << ": " << B.chamber_count() << " chambers, "
              << B.vertex_count() << " vertices\n";
    return kPass;
}

// ---------------------------------------------------------------- word

int cmd_word(const std::string& type, const std::string& text, bool as_json) {
    coxeter::CoxeterDiagram d;
    if (type == "B3") d = garside::diagram_b3();
    else if (type == "A5") d = garside::diagram_a5();
    else d = coxeter::CoxeterDiagram::parse(type);
    const garside::ArtinGroup G(d);
    const auto g = G.parse(text);
    if (as_json) {
        json j{{"group", type},
               {"input", text},
               {"normal_form", G.to_string(g)},
               {"numerator", G.positive_string(g.num)},
               {"denominator", G.positive_string(g.den)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << G.to_string(g) << "\n";
    }
    return kPass;
}

// ---------------------------------------------------------------- develop

int cmd_develop(const std::string& path, const std::vector<int>& gallery) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        return kInvalid;
    }
    complex::TypedComplex k;
    try {
        k = complex::parse_complex(in);
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kInvalid;
    }
    const auto C = develop::coxeter_complex_b3();
    auto d = develop::develop_gallery(k, gallery, C);
    develop::check_angle_budget(k, gallery, d, C);
    for (std::size_t j = 0; j < gallery.size(); ++j) {
        const auto& t = k.triangles()[gallery[j]];
        std::printf("%zu: %s %s %s -> chamber %s\n", j, k.id(t[0]).c_str(), k.id(t[1]).c_str(), k.id(t[2]).c_str(),
                    C.group->word_string(d.chambers[j]).c_str());
    }
    std::set<int> seen;
    for (int t : gallery)
        for (int v : k.triangles()[t])
            if (seen.insert(v).second)
                std::printf("angle at %s: %.12f\n", k.id(v).c_str(), develop::developed_angle(k, gallery, d, C, v));
    for (const auto& w : d.warnings) std::printf("warning: %s\n", w.c_str());
    return d.warnings.empty() ? kPass : kFail;
}

// ---------------------------------------------------------------- verify-paper

int cmd_verify(const verify::Config& cfg, bool as_json, bool timings) {
    const auto results = verify::run_all(cfg);
    bool failed = false, undecided = false;
    for (const auto& c : results) failed |= !c.pass, undecided |= c.inconclusive;
    const char* verdict = failed ? "fail" : undecided ? "inconclusive" : "pass";
    if (as_json) {
        json cs = json::array();
        for (const auto& c : results) cs.push_back(report::to_json(c, timings));
        json config{{"seed", cfg.seed},
                    {"radius_b3", cfg.radius_b3},
                    {"extra_b3", cfg.extra_b3},
                    {"radius_a5", cfg.radius_a5},
                    {"radius_image", cfg.radius_image},
                    {"search_radius", cfg.search_radius},
                    {"join_sets", cfg.join_sets},
                    {"samples", cfg.samples}};
        json j{{"meta", report::meta("verify-paper", config)}, {"criteria", cs}, {"verdict", verdict}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : results) {
            std::printf("[%s] %2d %s", c.status(), c.id, c.name.c_str());
            if (timings) std::printf("  (%.3f s)", c.seconds);
            std::printf("\n");
            for (const auto& [k, v] : c.facts) std::printf("       %s = %s\n", k.c_str(), v.c_str());
            for (const auto& f : c.failures) std::printf("       ! %s\n", f.c_str());
        }
        std::printf("verdict: %s\n", verdict);
    }
    return failed ? kFail : undecided ? kInconclusive : kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cat1: Coxeter and Artin complexes and a CAT(1) link-condition checker"};
    app.require_subcommand(1);
    bool as_json = false, induced = false, timings = false;
    std::string out, name, path, type, text;
    int radius = 0;
    std::vector<int> gallery;
    verify::Config cfg;

    auto* tables = app.add_subcommand("tables", "list the short edge-count triples");
    tables->add_flag("--json", as_json, "JSON output");

    auto* cox = app.add_subcommand("coxeter", "write the Coxeter complex of a rank 2 or 3 diagram");
    cox->add_option("diagram", name, "A2, A3, B2 or B3")->required();
    cox->add_option("-o,--output", out, "output file (B3 also writes <file>.coords)");

    auto* check = app.add_subcommand("check", "check the six conditions on a complex file");
    check->add_option("file", path)->required();
    check->add_flag("--json", as_json, "JSON report");
    check->add_flag("--induced", induced, "only chordless short cycles, filled injectively");

    auto* ball = app.add_subcommand("ball", "write a ball of the Artin complex of B3 or A5");
    ball->add_option("type", type, "B3 or A5")->required();
    ball->add_option("radius", radius)->required();
    ball->add_option("-o,--output", out, "output file (also writes <file>.words)");

    auto* word = app.add_subcommand("word", "normal form of an Artin group word");
    word->add_option("group", type, "B3, A5, or A<n>/B<n>")->required();
    word->add_option("word", text, "e.g. \"s1 s2^-1 s3^2\"")->required();
    word->add_flag("--json", as_json, "JSON output");

    auto* dev = app.add_subcommand("develop", "develop a gallery of triangles onto the Coxeter complex of B3");
    dev->add_option("file", path)->required();
    dev->add_option("triangles", gallery, "triangle indices in file order")->required();

    auto* ver = app.add_subcommand("verify-paper", "run the reproduction suite");
    ver->add_option("--seed", cfg.seed, "seed for sampled checks");
    ver->add_option("--radius-b3", cfg.radius_b3, "B3 ball radius for the conditions and joins");
    ver->add_option("--extra-b3", cfg.extra_b3, "enlargement of the B3 ball");
    ver->add_option("--radius-a5", cfg.radius_a5, "A5 ball radius");
    ver->add_option("--radius-image", cfg.radius_image, "B3 ball radius for the image lemma");
    ver->add_option("--search-radius", cfg.search_radius, "radius of bounded coset searches");
    ver->add_flag("--json", as_json, "JSON report");
    ver->add_flag("--timings", timings, "include run times (output is then not reproducible)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*tables) return cmd_tables(as_json);
        if (*cox) return cmd_coxeter(name, out);
        if (*check) return cmd_check(path, as_json, induced);
        if (*ball) return cmd_ball(type, radius, out);
        if (*word) return cmd_word(type, text, as_json);
        if (*dev) return cmd_develop(path, gallery);
        if (*ver) {
            if (cfg.radius_b3 > max_ball_radius() || cfg.radius_a5 > max_ball_radius())
                throw std::invalid_argument("radius exceeds CAT1_MAX_RADIUS");
            return cmd_verify(cfg, as_json, timings);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
