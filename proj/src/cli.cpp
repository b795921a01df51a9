#include "mspace/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mspace/io.hpp"

namespace mspace::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream o(path, std::ios::binary);
    if (!o) fail(errc::parse_error, "cannot write '" + path + "'");
    o << text;
}

MatrixSubspace load_linear(const std::string& path) {
    ParsedSpace s = parse_mspace(read_file(path));
    if (!std::holds_alternative<MatrixSubspace>(s))
        fail(errc::bad_argument, "'" + path + "' holds an affine space; a linear space is required");
    return std::get<MatrixSubspace>(std::move(s));
}

AffineSpace load_affine(const std::string& path) {
    ParsedSpace s = parse_mspace(read_file(path));
    if (!std::holds_alternative<AffineSpace>(s))
        fail(errc::bad_argument, "'" + path + "' holds a linear space; an affine space (offset) is required");
    return std::get<AffineSpace>(std::move(s));
}

struct VerifyOptions {
    std::string name;
    bool json = false;
    std::uint64_t seed = 0;
    int samples = 100;
    int n = 0; // 0 = suite default
    std::int64_t q = 0;
    int max_n = 5;
    ExecPolicy policy;
};

int run_suites(const VerifyOptions& opt, std::ostream& out) {
    std::vector<SuiteReport> reports;
    auto unsupported_param = [&](const char* flag) {
        if (opt.n != 0 || opt.q != 0)
            fail(errc::bad_argument, std::string(flag) + " does not take --n/--q");
    };

    if (opt.name == "action1") {
        reports.push_back(suite_action1(opt.n ? opt.n : 3, opt.q ? opt.q : 3, opt.policy));
    } else if (opt.name == "anisotropy") {
        reports.push_back(
            suite_anisotropy(opt.n ? opt.n : 2, opt.q ? opt.q : 3, opt.samples, opt.seed, opt.policy));
    } else if (opt.name == "exhaustive-n2-q3") {
        unsupported_param("exhaustive-n2-q3");
        reports.push_back(suite_exhaustive_n2_q3(opt.policy));
    } else if (opt.name == "f2-counterexample") {
        unsupported_param("f2-counterexample");
        reports.push_back(suite_f2_counterexample(opt.policy));
    } else if (opt.name == "gerstenhaber") {
        reports.push_back(
            suite_gerstenhaber(opt.n ? opt.n : 3, opt.q ? opt.q : 3, opt.samples, opt.seed, opt.policy));
    } else if (opt.name == "hyperplane-rigidity") {
        reports.push_back(suite_hyperplane_rigidity(opt.q ? opt.q : 3, opt.samples, opt.seed, opt.policy));
    } else if (opt.name == "classification-roundtrip") {
        reports.push_back(suite_classification_roundtrip(opt.q ? opt.q : 3, opt.max_n, opt.samples,
                                                         opt.seed, opt.policy));
    } else if (opt.name == "all") {
        // the standard battery: every lemma suite at its reference parameters
        for (int n : {2, 3, 4})
            for (std::int64_t q : {3, 5}) reports.push_back(suite_action1(n, q, opt.policy));
        reports.push_back(suite_anisotropy(2, 3, opt.samples, opt.seed, opt.policy));
        for (auto [n, q] : std::vector<std::pair<int, std::int64_t>>{{2, 5}, {3, 3}, {3, 5}})
            reports.push_back(suite_anisotropy(n, q, opt.samples, opt.seed, opt.policy));
        reports.push_back(suite_exhaustive_n2_q3(opt.policy));
        reports.push_back(suite_f2_counterexample(opt.policy));
        reports.push_back(suite_gerstenhaber(3, 3, 50, opt.seed, opt.policy));
        reports.push_back(suite_gerstenhaber(4, 5, 20, opt.seed, opt.policy));
        reports.push_back(suite_hyperplane_rigidity(3, opt.samples, opt.seed, opt.policy));
        for (std::int64_t q : {3, 5, 7})
            reports.push_back(suite_classification_roundtrip(q, opt.max_n, 20, opt.seed, opt.policy));
    } else {
        fail(errc::bad_argument,
             "unknown suite '" + opt.name +
                 "' (expected action1, anisotropy, exhaustive-n2-q3, f2-counterexample, "
                 "gerstenhaber, hyperplane-rigidity, classification-roundtrip, or all)");
    }

    bool all_passed = true;
    for (const SuiteReport& r : reports) all_passed = all_passed && r.passed();

    if (opt.json) {
        if (reports.size() == 1) {
            out << suite_json(reports[0]).dump(2) << '\n';
        } else {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const SuiteReport& r : reports) arr.push_back(suite_json(r));
            out << arr.dump(2) << '\n';
        }
    } else {
        for (const SuiteReport& r : reports) out << format_suite_text(r);
    }
    return all_passed ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact engine for matrix subspaces with trivial spectrum"};
    app.name("mspace");
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "decompose a maximal trivial-spectrum space");
    std::string classify_file;
    bool classify_json = false;
    ExecPolicy classify_policy;
    classify_cmd->add_option("file", classify_file, ".mspace input")->required();
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");
    classify_cmd->add_option("--jobs", classify_policy.jobs, "worker count for enumerations");
    classify_cmd->add_flag("--force", classify_policy.force, "override the q^n guardrail");

    // check
    auto* check_cmd = app.add_subcommand("check", "print the spectrum report of a space");
    std::string check_file;
    bool check_json = false;
    ExecPolicy check_policy;
    check_cmd->add_option("file", check_file, ".mspace input")->required();
    check_cmd->add_flag("--json", check_json, "machine-readable output");
    check_cmd->add_option("--jobs", check_policy.jobs, "worker count for enumerations");
    check_cmd->add_flag("--force", check_policy.force, "override the q^n guardrail");

    // similar
    auto* similar_cmd = app.add_subcommand("similar", "decide similarity of two linear spaces");
    std::string similar_a, similar_b;
    ExecPolicy similar_policy;
    similar_cmd->add_option("a", similar_a, "first .mspace input")->required();
    similar_cmd->add_option("b", similar_b, "second .mspace input")->required();
    similar_cmd->add_option("--jobs", similar_policy.jobs, "worker count for enumerations");
    similar_cmd->add_flag("--force", similar_policy.force, "override the q^n guardrail");

    // equiv
    auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence of two affine spaces");
    std::string equiv_a, equiv_b;
    ExecPolicy equiv_policy;
    equiv_cmd->add_option("a", equiv_a, "first .mspace input (affine)")->required();
    equiv_cmd->add_option("b", equiv_b, "second .mspace input (affine)")->required();
    equiv_cmd->add_option("--jobs", equiv_policy.jobs, "worker count for enumerations");
    equiv_cmd->add_flag("--force", equiv_policy.force, "override the q^n guardrail");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "emit a model space as .mspace text");
    std::string construct_kind;
    int construct_n = 2;
    std::int64_t construct_field = 3;
    std::int64_t companion_a = 0, companion_b = 0;
    std::string construct_out;
    std::vector<std::string> construct_inputs;
    bool construct_affine = false;
    construct_cmd
        ->add_option("kind", construct_kind, "one of alt, nt, palt, vee, companion")
        ->required();
    construct_cmd->add_option("inputs", construct_inputs,
                              "palt: gram file (affine .mspace offset); vee: two space files");
    construct_cmd->add_option("-n,--n", construct_n, "ambient size (alt, nt)");
    construct_cmd->add_option("--field", construct_field, "prime field order");
    construct_cmd->add_option("--a", companion_a, "companion coefficient a");
    construct_cmd->add_option("--b", companion_b, "companion coefficient b");
    construct_cmd->add_flag("--affine", construct_affine, "wrap the result as I_n + space");
    construct_cmd->add_option("-o,--output", construct_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    VerifyOptions vopt;
    verify_cmd->add_option("suite", vopt.name, "suite name or 'all'")->required();
    verify_cmd->add_flag("--json", vopt.json, "machine-readable report");
    verify_cmd->add_option("--seed", vopt.seed, "random seed (default 0)");
    verify_cmd->add_option("--samples", vopt.samples, "sample count (default 100)");
    verify_cmd->add_option("--jobs", vopt.policy.jobs, "worker count for enumerations");
    verify_cmd->add_flag("--force", vopt.policy.force, "override the q^n guardrail");
    verify_cmd->add_option("--n", vopt.n, "suite size parameter");
    verify_cmd->add_option("--q", vopt.q, "suite field parameter");
    verify_cmd->add_option("--max-n", vopt.max_n, "roundtrip maximum ambient size");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2; // help exits 0, every other parse problem is a usage error
    }

    if (*classify_cmd) {
        MatrixSubspace v = load_linear(classify_file);
        Decomposition dec = classify(v, classify_policy);
        if (classify_json) {
            out << decomposition_json(dec, v.field(), v.ambient()).dump(2) << '\n';
        } else {
            out << "field " << v.field().str() << ", n = " << v.ambient() << '\n';
            out << "blocks:";
            for (const VeeBlock& blk : dec.blocks) out << ' ' << blk.size;
            out << '\n';
            for (const VeeBlock& blk : dec.blocks)
                if (blk.size > 1) out << "gram (size " << blk.size << "):\n" << blk.gram.str() << '\n';
            out << "basis change S (S^-1 V S is the model):\n" << dec.basis_change.str() << '\n';
            out << "verified: " << (dec.verified ? "true" : "false") << '\n';
        }
        return 0;
    }
    if (*check_cmd) {
        MatrixSubspace v = load_linear(check_file);
        SpectrumReport report = spectrum_report(v, check_policy);
        if (check_json) {
            out << spectrum_json(report, v.field(), v.ambient()).dump(2) << '\n';
        } else {
            out << "trivial spectrum:      " << (report.trivial_spectrum ? "true" : "false") << '\n';
            if (report.witness) {
                out << "witness x: ";
                for (const Scalar& e : report.witness->x) out << e.str() << ' ';
                out << "\nwitness M (Mx = x):\n" << report.witness->m.str() << '\n';
            }
            out << "totally intransitive:  " << (report.totally_intransitive ? "true" : "false") << '\n';
            out << "maximal:               " << (report.maximal ? "true" : "false") << '\n';
            out << "irreducible:           "
                << (report.irreducible ? (*report.irreducible ? "true" : "false") : "n/a") << '\n';
        }
        return report.trivial_spectrum ? 0 : 1;
    }
    if (*similar_cmd) {
        bool sim = similar_spaces(load_linear(similar_a), load_linear(similar_b), similar_policy);
        out << (sim ? "similar" : "not similar") << '\n';
        return sim ? 0 : 1;
    }
    if (*equiv_cmd) {
        bool eq = affine_equivalent(load_affine(equiv_a), load_affine(equiv_b), equiv_policy);
        out << (eq ? "equivalent" : "not equivalent") << '\n';
        return eq ? 0 : 1;
    }
    if (*construct_cmd) {
        FieldDesc field = FieldDesc::prime(construct_field);
        std::optional<MatrixSubspace> space;
        if (construct_kind == "alt") {
            space = alt_space(construct_n, field);
        } else if (construct_kind == "nt") {
            space = nt_space(construct_n, field);
        } else if (construct_kind == "palt") {
            if (construct_inputs.size() != 1)
                fail(errc::bad_argument, "palt needs one gram file (an .mspace offset with space 0)");
            AffineSpace gram_file = load_affine(construct_inputs[0]);
            if (gram_file.dim() != 0)
                fail(errc::bad_argument, "gram file must have an empty translation space");
            space = p_alt(gram_file.offset());
        } else if (construct_kind == "vee") {
            if (construct_inputs.size() != 2) fail(errc::bad_argument, "vee needs two space files");
            space = vee(load_linear(construct_inputs[0]), load_linear(construct_inputs[1]));
        } else if (construct_kind == "companion") {
            space = companion_line(Scalar(field, companion_a), Scalar(field, companion_b));
        } else {
            fail(errc::bad_argument, "unknown construct kind '" + construct_kind + "'");
        }
        std::string text =
            construct_affine
                ? serialize(AffineSpace(Matrix::identity(field, space->ambient()), *space))
                : serialize(*space);
        write_output(construct_out, text, out);
        return 0;
    }
    if (*verify_cmd) return run_suites(vopt, out);
    return 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace mspace::cli
