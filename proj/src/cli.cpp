#include "qgp/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qgp/json_io.hpp"
#include "qgp/random_gen.hpp"
#include "qgp/selftest.hpp"
#include "qgp/stable.hpp"

namespace qgp {

namespace {

struct Options {
    std::string input, morphism, mode, a, b;
    std::string assert_flag;
    std::string report = "json";
    std::string output;
    std::uint64_t seed = 20250801;
    int count = 100;
    int max_gens = 2;
};

std::string base_dir_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    if (pos == std::string::npos) return ".";
    return path.substr(0, pos);
}

void write_report(const Options& opt, const Json& j,
                  const std::string& text_form) {
    std::string body =
        opt.report == "text" ? text_form : j.dump(2) + std::string("\n");
    if (opt.output.empty()) {
        std::cout << body;
        return;
    }
    std::string path = opt.output;
    const char* dir = std::getenv("QGP_REPORT_DIR");
    if (dir && *dir && !path.empty() && path.front() != '/')
        path = std::string(dir) + "/" + path;
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << body;
}

std::string flags_text(const Json& j) {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        s += it.key() + ": ";
        s += it.value().dump();
        s += "\n";
    }
    return s;
}

bool object_flag_by_name(const ObjectFlags& f, const std::string& name,
                         bool& out) {
    if (name == "gp" || name == "gorenstein-projective")
        out = f.gorenstein_projective;
    else if (name == "ginj" || name == "gorenstein-injective")
        out = f.gorenstein_injective;
    else if (name == "projective")
        out = f.projective_object;
    else if (name == "injective")
        out = f.injective_object;
    else if (name == "trivial")
        out = f.trivial;
    else
        return false;
    return true;
}

bool morphism_flag_by_name(const MorphismFlags& f, const std::string& name,
                           bool& out) {
    if (name == "weq" || name == "weak-equivalence")
        out = f.weak_equivalence;
    else if (name == "rp-fibration")
        out = f.rp_fibration;
    else if (name == "rp-cofibration")
        out = f.rp_cofibration;
    else if (name == "ri-fibration")
        out = f.ri_fibration;
    else if (name == "ri-cofibration")
        out = f.ri_cofibration;
    else if (name == "rp-trivial-fibration")
        out = f.rp_trivial_fibration;
    else if (name == "ri-trivial-cofibration")
        out = f.ri_trivial_cofibration;
    else
        return false;
    return true;
}

Json rep_map_report(const RepMap& f) {
    Json j;
    Json comps;
    for (int v = 0; v < f.source().quiver().vertex_count(); ++v)
        comps[f.source().quiver().vertices()[std::size_t(v)]] =
            matrix_to_json(f.source().ring(), f.component_matrix(v));
    j["components"] = std::move(comps);
    return j;
}

// the standard ring/quiver grid used for seeded aggregate runs
struct GridInstance {
    RingSpec ring;
    QuiverCtxPtr ctx;
};

GridInstance grid_instance(std::size_t i) {
    static const std::vector<RingSpec> rings = {
        RingSpec::z_mod(4), RingSpec::z_mod(8), RingSpec::z_mod(6),
        RingSpec::truncated_poly(2, 2), RingSpec::truncated_poly(3, 2)};
    static const std::vector<QuiverCtxPtr> quivers = {
        make_quiver_ctx(Quiver({"0", "1"}, {{"a", "0", "1"}})),
        make_quiver_ctx(
            Quiver({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}})),
        make_quiver_ctx(Quiver({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}})),
        make_quiver_ctx(Quiver({"00", "10", "01", "11"},
                               {{"a", "00", "10"},
                                {"b", "00", "01"},
                                {"c", "10", "11"},
                                {"d", "01", "11"}})),
    };
    return {rings[i % rings.size()], quivers[(i / rings.size()) % quivers.size()]};
}

int do_validate(const Options& opt) {
    Json report;
    if (!opt.morphism.empty()) {
        RepMap f = rep_map_from_json(load_json_file(opt.morphism),
                                     base_dir_of(opt.morphism));
        (void)f;
        report["kind"] = "morphism";
    } else {
        Rep m = rep_from_json(load_json_file(opt.input));
        (void)m;
        report["kind"] = "representation";
    }
    report["ok"] = true;
    write_report(opt, report, "ok: true\n");
    return 0;
}

int do_check(const Options& opt) {
    if (!opt.morphism.empty()) {
        RepMap f = rep_map_from_json(load_json_file(opt.morphism),
                                     base_dir_of(opt.morphism));
        MorphismFlags fl = classify_morphism(f);
        Json report;
        report["morphism_flags"] = morphism_flags_to_json(fl);
        write_report(opt, report, flags_text(report["morphism_flags"]));
        if (!opt.assert_flag.empty()) {
            bool value = false;
            if (!morphism_flag_by_name(fl, opt.assert_flag, value))
                throw Error(ErrorKind::ValidationError,
                            "unknown morphism flag " + opt.assert_flag);
            return value ? 0 : 1;
        }
        return 0;
    }
    if (!opt.input.empty()) {
        Rep m = rep_from_json(load_json_file(opt.input));
        ObjectFlags fl = classify_object(m);
        Json report;
        report["object_flags"] = object_flags_to_json(fl);
        write_report(opt, report, flags_text(report["object_flags"]));
        if (!opt.assert_flag.empty()) {
            bool value = false;
            if (!object_flag_by_name(fl, opt.assert_flag, value))
                throw Error(ErrorKind::ValidationError,
                            "unknown object flag " + opt.assert_flag);
            return value ? 0 : 1;
        }
        return 0;
    }
    // seeded aggregate mode over the fixture grid
    Json counts;
    long gp = 0, ginj = 0, proj = 0, inj = 0, triv = 0;
    for (int i = 0; i < opt.count; ++i) {
        Rng rng(opt.seed * 911ull + std::uint64_t(i));
        GridInstance g = grid_instance(std::size_t(i));
        Rep m = random_rep(rng, g.ctx, g.ring, opt.max_gens);
        ObjectFlags fl = classify_object(m);
        gp += fl.gorenstein_projective;
        ginj += fl.gorenstein_injective;
        proj += fl.projective_object;
        inj += fl.injective_object;
        triv += fl.trivial;
    }
    counts["instances"] = opt.count;
    counts["gorenstein_projective"] = gp;
    counts["gorenstein_injective"] = ginj;
    counts["projective_object"] = proj;
    counts["injective_object"] = inj;
    counts["trivial"] = triv;
    write_report(opt, counts, flags_text(counts));
    return 0;
}

int do_replace(const Options& opt) {
    Rep m = rep_from_json(load_json_file(opt.input));
    Json report;
    if (opt.mode == "fibrant") {
        Replacement r = fibrant_replacement(m);
        report["mode"] = "fibrant";
        report["object"] = rep_to_json(r.object);
        report["map"] = rep_map_report(r.map);
    } else if (opt.mode.empty() || opt.mode == "cofibrant") {
        Replacement r = cofibrant_replacement(m);
        report["mode"] = "cofibrant";
        report["object"] = rep_to_json(r.object);
        report["map"] = rep_map_report(r.map);
    } else {
        throw Error(ErrorKind::ValidationError,
                    "replace mode must be cofibrant or fibrant");
    }
    report["certified"] = true;
    write_report(opt, report, report.dump(2) + "\n");
    return 0;
}

int do_factor(const Options& opt) {
    RepMap f = rep_map_from_json(load_json_file(opt.morphism),
                                 base_dir_of(opt.morphism));
    FactorMode mode;
    if (opt.mode == "cof-trivfib")
        mode = FactorMode::CofThenTrivFib;
    else if (opt.mode == "trivcof-fib" || opt.mode.empty())
        mode = FactorMode::TrivCofThenFib;
    else
        throw Error(ErrorKind::ValidationError,
                    "factor mode must be cof-trivfib or trivcof-fib");
    FactorizationResult fr = factorize(f, mode);
    Json report;
    report["mode"] = opt.mode.empty() ? "trivcof-fib" : opt.mode;
    report["mid"] = rep_to_json(fr.mid);
    report["left"] = rep_map_report(fr.left);
    report["right"] = rep_map_report(fr.right);
    report["left_flags"] = morphism_flags_to_json(fr.left_flags);
    report["right_flags"] = morphism_flags_to_json(fr.right_flags);
    write_report(opt, report, report.dump(2) + "\n");
    return 0;
}

int do_stable_hom(const Options& opt) {
    Rep a = rep_from_json(load_json_file(opt.a));
    Rep b = rep_from_json(load_json_file(opt.b));
    StableHomResult sh = stable_hom(a, b);
    Json report;
    report["invariants"] =
        invariants_to_json(a.ring(), sh.module.iso_invariants());
    Json reps = Json::array();
    for (const auto& r : sh.representatives) reps.push_back(rep_map_report(r));
    report["representatives"] = std::move(reps);
    std::string text = "invariants: " + report["invariants"].dump() + "\n";
    write_report(opt, report, text);
    return 0;
}

int do_suspend_or_loop(const Options& opt, bool suspend_mode) {
    Rep m = rep_from_json(load_json_file(opt.input));
    Rep out = suspend_mode ? suspension(m) : loop_rep(m);
    Json report;
    report["object"] = rep_to_json(out);
    write_report(opt, report, report.dump(2) + "\n");
    return 0;
}

int do_oracle(const Options& opt) {
    auto run_one = [](const Rep& m) {
        Json entry;
        bool gp = is_gorenstein_projective(m);
        auto ext = ext1_oracle(m);
        bool all_zero = true;
        Json table;
        for (int v = 0; v < m.quiver().vertex_count(); ++v) {
            table[m.quiver().vertices()[std::size_t(v)]] = invariants_to_json(
                m.ring(), ext[std::size_t(v)].iso_invariants());
            all_zero = all_zero && ext[std::size_t(v)].is_zero_module();
        }
        entry["gorenstein_projective"] = gp;
        entry["ext1"] = std::move(table);
        entry["ext1_all_zero"] = all_zero;
        entry["agree"] = gp == all_zero;
        return entry;
    };
    if (!opt.input.empty()) {
        Rep m = rep_from_json(load_json_file(opt.input));
        Json report = run_one(m);
        write_report(opt, report,
                     std::string("agree: ") +
                         (report["agree"].get<bool>() ? "true" : "false") +
                         "\n");
        return report["agree"].get<bool>() ? 0 : 3;
    }
    // seeded aggregate mode
    long agree = 0;
    for (int i = 0; i < opt.count; ++i) {
        Rng rng(opt.seed * 733ull + std::uint64_t(i));
        GridInstance g = grid_instance(std::size_t(i));
        Rep m = random_rep(rng, g.ctx, g.ring, opt.max_gens);
        if (run_one(m)["agree"].get<bool>()) ++agree;
    }
    Json report;
    report["instances"] = opt.count;
    report["agree"] = agree;
    write_report(opt, report,
                 "agree: " + std::to_string(agree) + "/" +
                     std::to_string(opt.count) + "\n");
    return agree == opt.count ? 0 : 3;
}

int do_adjunction(const Options& opt) {
    Rep a = rep_from_json(load_json_file(opt.a));
    Rep b = rep_from_json(load_json_file(opt.b));
    AdjunctionCheckResult r = hovey_adjunction_check(a, b);
    Json report;
    report["lhs_invariants"] =
        invariants_to_json(a.ring(), r.lhs.iso_invariants());
    report["rhs_invariants"] =
        invariants_to_json(a.ring(), r.rhs.iso_invariants());
    report["agree"] = r.agree;
    write_report(opt, report,
                 std::string("agree: ") + (r.agree ? "true" : "false") + "\n");
    return r.agree ? 0 : 3;
}

int do_selftest(const Options& opt) {
    auto results = qgp::selftest::run_all(opt.seed);
    Json report;
    report["seed"] = opt.seed;
    Json list = Json::array();
    bool all = true;
    std::string text;
    int idx = 0;
    for (const auto& r : results) {
        ++idx;
        Json e;
        e["name"] = r.name;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        list.push_back(std::move(e));
        text += std::string("[") + (r.pass ? "PASS" : "FAIL") + "] " +
                std::to_string(idx) + ". " + r.name + ": " + r.detail + "\n";
        all = all && r.pass;
    }
    report["criteria"] = std::move(list);
    report["all_pass"] = all;
    write_report(opt, report, text);
    return all ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"computations in the stable category of quiver representations "
                 "over finite quasi-Frobenius rings"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--report", opt.report, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", opt.output, "write the report to a file");
    };

    CLI::App* validate = app.add_subcommand("validate", "validate input files");
    validate->add_option("--input", opt.input, "representation file");
    validate->add_option("--morphism", opt.morphism, "morphism file");
    add_common(validate);

    CLI::App* check = app.add_subcommand("check", "classify an object or morphism");
    check->add_option("--input", opt.input, "representation file");
    check->add_option("--morphism", opt.morphism, "morphism file");
    check->add_option("--assert", opt.assert_flag, "flag that must be true");
    check->add_option("--seed", opt.seed, "seed for aggregate mode");
    check->add_option("--count", opt.count, "instances in aggregate mode");
    check->add_option("--max-gens", opt.max_gens, "generator bound");
    add_common(check);

    CLI::App* replace = app.add_subcommand("replace", "cofibrant or fibrant replacement");
    replace->add_option("--input", opt.input, "representation file")->required();
    replace->add_option("--mode", opt.mode, "cofibrant or fibrant");
    add_common(replace);

    CLI::App* factor = app.add_subcommand("factor", "factor a morphism");
    factor->add_option("--morphism", opt.morphism, "morphism file")->required();
    factor->add_option("--mode", opt.mode, "cof-trivfib or trivcof-fib");
    add_common(factor);

    CLI::App* shom = app.add_subcommand("stable-hom", "stable hom group");
    shom->add_option("--a", opt.a, "source representation")->required();
    shom->add_option("--b", opt.b, "target representation")->required();
    add_common(shom);

    CLI::App* susp = app.add_subcommand("suspend", "suspension functor");
    susp->add_option("--input", opt.input, "representation file")->required();
    add_common(susp);

    CLI::App* loopc = app.add_subcommand("loop", "loop functor");
    loopc->add_option("--input", opt.input, "representation file")->required();
    add_common(loopc);

    CLI::App* oracle = app.add_subcommand("oracle", "Ext^1 oracle cross-check");
    oracle->add_option("--input", opt.input, "representation file");
    oracle->add_option("--seed", opt.seed, "seed for aggregate mode");
    oracle->add_option("--count", opt.count, "instances in aggregate mode");
    oracle->add_option("--max-gens", opt.max_gens, "generator bound");
    add_common(oracle);

    CLI::App* adj = app.add_subcommand("adjunction", "suspension adjunction check");
    adj->add_option("--a", opt.a, "first representation")->required();
    adj->add_option("--b", opt.b, "second representation")->required();
    add_common(adj);

    CLI::App* self = app.add_subcommand("selftest", "run the acceptance battery");
    self->add_option("--seed", opt.seed, "battery seed");
    add_common(self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) {
            if (opt.input.empty() && opt.morphism.empty())
                throw Error(ErrorKind::ValidationError,
                            "validate needs --input or --morphism");
            return do_validate(opt);
        }
        if (check->parsed()) return do_check(opt);
        if (replace->parsed()) return do_replace(opt);
        if (factor->parsed()) return do_factor(opt);
        if (shom->parsed()) return do_stable_hom(opt);
        if (susp->parsed()) return do_suspend_or_loop(opt, true);
        if (loopc->parsed()) return do_suspend_or_loop(opt, false);
        if (oracle->parsed()) return do_oracle(opt);
        if (adj->parsed()) return do_adjunction(opt);
        if (self->parsed()) return do_selftest(opt);
        return 2;
    } catch (const InternalInvariantBroken& e) {
        std::cerr << "internal invariant broken: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qgp
