#include "cli.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "piercing/instance_gen.hpp"
#include "piercing/io.hpp"
#include "piercing/oracle.hpp"
#include "piercing/piercing_t1.hpp"
#include "piercing/piercing_t2.hpp"
#include "piercing/svg.hpp"

namespace piercer {

using namespace piercing;

namespace {

struct Options {
    // generate
    std::uint64_t seed = 0;
    std::size_t n = 3;
    std::size_t members = 4;
    std::string spread = "1";
    std::string class_mode = "general";
    std::string repair = "reject";
    // shared
    std::string input;
    std::string out;
    std::string algo = "t1";
    std::size_t limit = kDefaultMemberLimit;
    std::string points;
    std::string svg;
    bool timings = false;
    // bench
    std::string seeds = "0..9";
    std::string n_list = "3";
    std::string members_range = "3..10";
    std::string algos = "t1,t2";
    std::size_t bench_limit = 12;
    std::string cex_dir;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            auto v = std::stoull(s);
            return {v, v};
        }
        auto lo = std::stoull(s.substr(0, dots));
        auto hi = std::stoull(s.substr(dots + 2));
        if (hi < lo) throw InvalidInput("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed range '" + s + "', expected A..B");
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string cex_path_for(const Options& o) { return (o.out.empty() ? o.input : o.out) + ".cex.json"; }

PiercingResult run_algorithm(const std::string& algo, const Family& f) {
    if (algo == "t1") return pierce_t1(f);
    if (algo == "t2") return pierce_t2(f);
    throw InvalidInput("unknown algorithm '" + algo + "' (expected t1 or t2)");
}

Family load_instance(const std::string& path) { return parse_instance(read_file(path)); }

int cmd_generate(const Options& o, std::ostream& out) {
    GenConfig cfg;
    cfg.seed = o.seed;
    cfg.n = o.n;
    cfg.members = o.members;
    try {
        cfg.spread = Rational::parse(o.spread);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    cfg.class_mode = parse_class_mode(o.class_mode);
    if (o.repair == "reject")
        cfg.repair = RepairMode::reject;
    else if (o.repair == "translate_repair")
        cfg.repair = RepairMode::translate_repair;
    else
        throw InvalidInput("unknown repair mode '" + o.repair + "'");

    Family f = random_family(random_template(cfg), cfg);
    std::string text = serialize_instance(f);
    if (o.out.empty())
        out << text;
    else
        write_file(o.out, text);
    return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    Family f = load_instance(o.input);
    auto disjoint = pairwise_check(f);
    if (!disjoint.empty()) {
        err << "not pairwise intersecting; disjoint member pairs:\n";
        for (auto [i, j] : disjoint) err << "  " << i << " " << j << "\n";
        return kInvalidInput;
    }
    auto ms = minimal_system(f);
    auto types = empty_triangle_types(ms);
    out << "valid: n=" << f.tmpl.size() << " members=" << f.size() << " empty_triangles=" << types.size()
        << " common_point=" << (family_intersection_witness(f) ? "yes" : "no")
        << " special_class=" << (classify_special(f.tmpl) ? "yes" : "no") << "\n";
    return kSuccess;
}

int cmd_pierce(const Options& o, std::ostream& out, std::ostream& err) {
    Family f = load_instance(o.input);
    if (o.algo != "t1" && o.algo != "t2") throw InvalidInput("unknown algorithm '" + o.algo + "' (expected t1 or t2)");
    if (auto disjoint = pairwise_check(f); !disjoint.empty())
        throw InvalidInput("family is not pairwise intersecting (members " + std::to_string(disjoint.front().first) +
                           " and " + std::to_string(disjoint.front().second) + " are disjoint)");

    auto start = std::chrono::steady_clock::now();
    PiercingResult r;
    try {
        r = run_algorithm(o.algo, f);
    } catch (const ClaimViolation& v) {
        std::string path = cex_path_for(o);
        write_file(path, serialize_counterexample(f, o.algo, v));
        err << "claim violated: " << v.what() << "\ncounterexample written to " << path << "\n";
        return kClaimViolation;
    } catch (const NotSpecialClass& e) {
        throw InvalidInput(e.what());
    }
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    VerificationReport report = verify_piercing(f, r.points);
    ResultFile file = make_result_file(r, report.ok);
    if (o.timings) file.elapsed_ms = elapsed;
    if (!o.out.empty()) write_file(o.out, serialize_result(file));

    out << o.algo << ": " << r.points.size() << " points, bound " << r.bound.get_str()
        << ", initial empty triangles " << r.initial_type_count << ", verified " << (report.ok ? "yes" : "no") << "\n";
    if (!report.ok) {
        err << "verification failed for members:";
        for (auto m : report.unpierced) err << " " << m;
        err << "\n";
        return kVerificationFailure;
    }
    if (BigInt(static_cast<unsigned long>(r.points.size())) > r.bound) {
        err << "point count exceeds bound\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

int cmd_exact(const Options& o, std::ostream& out) {
    Family f = load_instance(o.input);
    OracleResult r;
    try {
        r = optimal_piercing(f, o.limit);
    } catch (const TooLarge& e) {
        throw InvalidInput(e.what());
    }
    bool ok = verify_piercing(f, r.witness_points).ok;
    if (!o.out.empty()) write_file(o.out, serialize_result(make_oracle_file(r, f.size(), ok)));
    out << "optimum: " << r.optimum << "\n";
    return ok ? kSuccess : kVerificationFailure;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Family f = load_instance(o.input);
    auto points = parse_points(read_file(o.points));
    VerificationReport report = verify_piercing(f, points);
    if (report.ok) {
        out << "ok: " << points.size() << " points pierce all " << f.size() << " members\n";
        return kSuccess;
    }
    err << "unpierced members:";
    for (auto m : report.unpierced) err << " " << m;
    err << "\n";
    return kVerificationFailure;
}

int cmd_render(const Options& o) {
    Family f = load_instance(o.input);
    std::vector<Point> points;
    if (!o.points.empty()) points = parse_points(read_file(o.points));
    write_file(o.svg, render_svg(f, points));
    return kSuccess;
}

struct BenchTally {
    std::size_t runs = 0;
    std::size_t within_six = 0;
};

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    auto [seed_lo, seed_hi] = parse_range(o.seeds);
    auto [mem_lo, mem_hi] = parse_range(o.members_range);
    std::vector<std::size_t> ns;
    for (const auto& s : split_list(o.n_list)) ns.push_back(parse_range(s).first);
    auto algos = split_list(o.algos);
    for (const auto& a : algos)
        if (a != "t1" && a != "t2") throw InvalidInput("unknown algorithm '" + a + "'");
    Rational spread;
    try {
        spread = Rational::parse(o.spread);
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(e.what());
    }
    ClassMode mode = parse_class_mode(o.class_mode);

    int exit_code = kSuccess;
    std::map<std::size_t, BenchTally> t2_by_n;
    out << "seed,algorithm,n,members,N0,points,bound,oracle_opt,verified,status\n";
    for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
        for (std::size_t n : ns) {
            GenConfig cfg;
            cfg.seed = seed;
            cfg.n = n;
            cfg.members = mem_lo + static_cast<std::size_t>(seed % (mem_hi - mem_lo + 1));
            cfg.spread = spread;
            cfg.class_mode = mode;
            Family f;
            try {
                f = random_family(random_template(cfg), cfg);
            } catch (const GenerationExhausted&) {
                out << seed << ",-," << n << "," << cfg.members << ",,,,,,generation_exhausted\n";
                continue;
            }
            std::optional<std::size_t> oracle_opt;
            if (f.size() <= o.bench_limit) oracle_opt = optimal_piercing(f, o.bench_limit).optimum;

            for (const auto& algo : algos) {
                if (algo == "t2" && !classify_special(f.tmpl)) continue;
                out << seed << "," << algo << "," << n << "," << f.size() << ",";
                try {
                    PiercingResult r = run_algorithm(algo, f);
                    bool ok = verify_piercing(f, r.points).ok;
                    bool within = BigInt(static_cast<unsigned long>(r.points.size())) <= r.bound;
                    bool dominated = !oracle_opt || *oracle_opt <= r.points.size();
                    out << r.initial_type_count << "," << r.points.size() << "," << r.bound.get_str() << ","
                        << (oracle_opt ? std::to_string(*oracle_opt) : "") << "," << (ok ? "true" : "false") << ","
                        << (ok && within && dominated ? "ok" : "audit_failure") << "\n";
                    if (!(ok && within && dominated)) exit_code = std::max(exit_code, int(kVerificationFailure));
                    if (algo == "t2") {
                        auto& tally = t2_by_n[n];
                        ++tally.runs;
                        if (r.points.size() <= 6) ++tally.within_six;
                    }
                } catch (const ClaimViolation& v) {
                    out << ",,,"
                        << (oracle_opt ? std::to_string(*oracle_opt) : "") << ",false,claim_violation:" << v.claim()
                        << "\n";
                    if (!o.cex_dir.empty())
                        write_file(o.cex_dir + "/seed" + std::to_string(seed) + "_n" + std::to_string(n) + "_" + algo +
                                       ".cex.json",
                                   serialize_counterexample(f, algo, v));
                    exit_code = kClaimViolation;
                }
            }
        }
    }
    for (const auto& [n, tally] : t2_by_n) {
        err << "# t2 n=" << n << ": " << tally.within_six << "/" << tally.runs << " instances with at most 6 points";
        if (tally.runs) err << " (" << (100.0 * tally.within_six / tally.runs) << "%)";
        err << "\n";
    }
    return exit_code;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact piercing sets for pairwise-intersecting families of related polygons", "piercer"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Generate a seeded pairwise-intersecting instance");
    gen->add_option("--seed", o.seed, "Random seed")->required();
    gen->add_option("--n", o.n, "Number of template directions")->required();
    gen->add_option("--members", o.members, "Number of family members")->required();
    gen->add_option("--spread", o.spread, "Offset dispersion as a rational, e.g. 3/2");
    gen->add_option("--class", o.class_mode, "general | theorem2");
    gen->add_option("--repair", o.repair, "reject | translate_repair");
    gen->add_option("--out", o.out, "Output instance file (stdout when omitted)");

    auto* check = app.add_subcommand("check", "Validate an instance and test pairwise intersection");
    check->add_option("file", o.input)->required();

    auto* pierce = app.add_subcommand("pierce", "Run a piercing algorithm and verify its output");
    pierce->add_option("file", o.input)->required();
    pierce->add_option("--algo", o.algo, "t1 | t2");
    pierce->add_option("--out", o.out, "Result file");
    pierce->add_flag("--timings", o.timings, "Record wall-clock time in the result file");

    auto* exact = app.add_subcommand("exact", "Exact optimum by brute force");
    exact->add_option("file", o.input)->required();
    exact->add_option("--limit", o.limit, "Maximum number of members");
    exact->add_option("--out", o.out, "Result file");

    auto* verify = app.add_subcommand("verify", "Check that a set of points pierces every member");
    verify->add_option("file", o.input)->required();
    verify->add_option("--points", o.points, "JSON file with a \"points\" array")->required();

    auto* render = app.add_subcommand("render", "Draw an instance as SVG");
    render->add_option("file", o.input)->required();
    render->add_option("--points", o.points, "JSON file with a \"points\" array");
    render->add_option("--svg", o.svg, "Output SVG file")->required();

    auto* bench = app.add_subcommand("bench", "Batch statistics over seeds as CSV");
    bench->add_option("--seeds", o.seeds, "Inclusive seed range A..B");
    bench->add_option("--n", o.n_list, "Comma-separated template sizes");
    bench->add_option("--members", o.members_range, "Member count range A..B");
    bench->add_option("--spread", o.spread, "Offset dispersion as a rational");
    bench->add_option("--class", o.class_mode, "general | theorem2");
    bench->add_option("--algo", o.algos, "Comma-separated algorithms");
    bench->add_option("--limit", o.bench_limit, "Run the oracle up to this many members");
    bench->add_option("--cex-dir", o.cex_dir, "Directory for counterexample artifacts");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty()) args.pop_back();
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kInvalidInput;
    }

    try {
        if (*gen) return cmd_generate(o, out);
        if (*check) return cmd_check(o, out, err);
        if (*pierce) return cmd_pierce(o, out, err);
        if (*exact) return cmd_exact(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*render) return cmd_render(o);
        if (*bench) return cmd_bench(o, out, err);
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const GenerationExhausted& e) {
        err << "generation failed: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ClaimViolation& e) {
        err << "claim violated: " << e.what() << "\n";
        return kClaimViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kInvalidInput;
}

} // namespace piercer
