// Command-line front door: parse spec files, run validator suites, apply
// constructions, run analyses and family demos, and emit deterministic
// reports.  Exit codes: 0 all checks hold, 1 at least one failed with a
// witness, 2 input/contract error (no checks ran to completion).

#include "nova/constructions.hpp"
#include "nova/families.hpp"
#include "nova/identity.hpp"
#include "nova/io.hpp"
#include "nova/quadratic.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using nova::Json;

struct CommonOpts {
    std::string out;        // report/spec destination ("" = none)
    bool json = false;      // machine document on stdout instead of prose
    std::uint64_t seed = 0;
    std::string field;      // optional "Q" / "GF(p)" cross-check or demo field
    std::string command;    // reconstructed argv for provenance
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "write the JSON document to this path");
    cmd->add_flag("--json", o.json, "print the JSON document on stdout");
    cmd->add_option("--seed", o.seed, "seed recorded in provenance and used for sampling");
    cmd->add_option("--field", o.field, "scalar field, \"Q\" or \"GF(p)\"");
}

/// Checks an explicit --field flag against the field a file declared.
void cross_check_field(const CommonOpts& o, nova::Field file_field) {
    if (o.field.empty()) return;
    nova::Field requested = nova::Field::parse(o.field);
    if (requested.p != file_field.p)
        throw std::invalid_argument("--field " + requested.name() +
                                    " does not match the file's field " + file_field.name());
}

void emit(const CommonOpts& o, const Json& doc, const std::string& human) {
    if (o.json)
        std::cout << nova::stable_dump(doc);
    else
        std::cout << human;
    if (!o.out.empty()) nova::write_text_file(o.out, nova::stable_dump(doc));
}

int finish_report(const CommonOpts& o, const nova::Report& report, const Json& extra_analysis,
                  const std::string& digest, const std::string& title,
                  bool vacuous_pass = false) {
    bool pass = report.pass();
    Json doc = nova::make_report_doc(pass ? "pass" : "fail", nova::report_to_json(report),
                                     std::nullopt, std::nullopt, o.command, digest, o.seed);
    if (!extra_analysis.is_null()) doc["analysis"] = extra_analysis;
    std::ostringstream human;
    human << title << ": " << (pass ? "PASS" : "FAIL") << "\n";
    for (const auto& e : report.entries) {
        human << "  " << e.name << ": " << (e.verdict.holds ? "ok" : "FAILED") << "\n";
        if (e.verdict.witness) human << "    " << e.verdict.witness->describe() << "\n";
    }
    if (report.entries.empty() && !vacuous_pass) human << "  (no checks)\n";
    emit(o, doc, human.str());
    return pass ? 0 : 1;
}

[[noreturn]] void emit_error(const CommonOpts& o, const std::string& message,
                             const Json& checks, const std::string& digest) {
    Json doc = nova::make_report_doc("error", checks, std::nullopt, message, o.command, digest,
                                     o.seed);
    if (o.json)
        std::cout << nova::stable_dump(doc);
    else
        std::cerr << "error: " << message << "\n";
    if (!o.out.empty()) nova::write_text_file(o.out, nova::stable_dump(doc));
    std::exit(2);
}

struct LoadedSpec {
    nova::ParsedSpec spec;
    nova::StructureBundle bundle;
    std::string digest;
};

LoadedSpec load(const std::string& path, const CommonOpts& o, const nova::RoleNames& roles) {
    LoadedSpec l;
    std::string text = nova::read_text_file(path);
    l.digest = nova::fnv1a_hex(text);
    l.spec = nova::parse_spec_text(text);
    cross_check_field(o, l.spec.field);
    l.bundle = nova::bind_roles(l.spec, roles);
    return l;
}

/// The single product a one-product construction acts on (star wins).
const nova::Algebra& primary_product(const nova::StructureBundle& b) {
    if (b.star) return *b.star;
    if (b.dot) return *b.dot;
    throw std::invalid_argument("the spec binds no product");
}

nova::GradeWindow parse_window(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("window must be LO..HI, e.g. -6..6");
    try {
        return {std::stoll(text.substr(0, sep)), std::stoll(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("window must be LO..HI, e.g. -6..6");
    }
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string file, kind;
    nova::RoleNames roles;
    bool no_morphism = false;
    std::size_t sanity = 0;
};

int run_check(const CheckArgs& a, const CommonOpts& o) {
    LoadedSpec l = load(a.file, o, a.roles);
    auto kind = nova::kind_from_name(a.kind);
    if (!kind) throw std::invalid_argument("unknown kind '" + a.kind + "'");
    nova::ValidateOptions opts;
    opts.require_morphism = !a.no_morphism;
    nova::Report report = nova::validate(l.bundle, *kind, opts);
    if (a.sanity > 0) {
        std::vector<nova::Report::Entry> extra;
        for (const auto& e : report.entries)
            if (auto id = nova::identity_from_name(e.name))
                extra.push_back({e.name + "@random",
                                 nova::random_sanity(l.bundle, *id, a.sanity, o.seed)});
        for (auto& e : extra) report.entries.push_back(std::move(e));
    }
    return finish_report(o, report, Json(), l.digest,
                         "check " + a.kind + " on " + a.file,
                         l.bundle.dim == 0);
}

// ------------------------------------------------------------ construct

struct ConstructArgs {
    std::string file, op;
    nova::RoleNames roles;
    std::string with_file;   // second operand for tensor-np
    std::string lambda = "0";
    std::string mode;        // derive-homlie mode
    unsigned long long power = 1;
};

int run_construct(const ConstructArgs& a, const CommonOpts& o) {
    LoadedSpec l = load(a.file, o, a.roles);
    const nova::StructureBundle& b = l.bundle;
    std::optional<nova::StructureBundle> out;
    std::optional<nova::Report> found_report;  // find-unity emits a report instead

    if (a.op == "yau-twist") {
        if (!b.alpha) throw std::invalid_argument("yau-twist needs an alpha map");
        out = nova::yau_twist(primary_product(b), *b.alpha);
    } else if (a.op == "power-twist") {
        if (!b.alpha) throw std::invalid_argument("power-twist needs an alpha map");
        out = nova::power_twist(primary_product(b), *b.alpha, a.power);
    } else if (a.op == "commutator") {
        out = nova::commutator_bracket(primary_product(b), b.alpha);
    } else if (a.op == "involutive-untwist") {
        nova::Algebra r = nova::involutive_untwist(b);
        out = nova::make_bundle(b.dim, b.field, std::nullopt, std::move(r), std::nullopt,
                                std::nullopt, std::nullopt);
    } else if (a.op == "alpha-inverse-bracket") {
        nova::Algebra r = nova::alpha_inverse_bracket(b);
        out = nova::make_bundle(b.dim, b.field, std::nullopt, std::move(r), std::nullopt,
                                std::nullopt, std::nullopt);
    } else if (a.op == "gd-lambda") {
        if (!b.del) throw std::invalid_argument("gd-lambda needs a del map");
        nova::Scalar lambda = nova::Scalar::parse(a.lambda, b.field);
        nova::Algebra r = nova::gd_lambda_product(primary_product(b), *b.del, lambda);
        out = nova::make_bundle(b.dim, b.field, std::nullopt, std::move(r), std::nullopt,
                                std::nullopt, std::nullopt);
    } else if (a.op == "partial-star") {
        out = nova::partial_star_product(b);
    } else if (a.op == "derivation-np") {
        out = nova::derivation_np_product(b);
    } else if (a.op == "np-yau-twist") {
        if (!b.alpha) throw std::invalid_argument("np-yau-twist needs an alpha map");
        out = nova::np_yau_twist(b, *b.alpha);
    } else if (a.op == "tensor-np") {
        if (a.with_file.empty())
            throw std::invalid_argument("tensor-np needs --with SECOND_FILE");
        LoadedSpec second = load(a.with_file, o, {});
        out = nova::tensor_np(b, second.bundle);
    } else if (a.op == "find-unity") {
        std::optional<nova::Vec> u = nova::find_unity(primary_product(b));
        nova::Report r;
        nova::Verdict v;
        v.holds = u.has_value();
        if (u) {
            nova::Witness w;
            w.lhs_text = nova::vec_str(*u);
            w.rhs_text = "two-sided unity";
            v.witness = std::move(w);  // carries the certificate
            v.holds = true;
        }
        r.entries.push_back({"unity", std::move(v)});
        found_report = std::move(r);
    } else if (a.op == "unity-derivation") {
        nova::LinearOperator d = nova::unity_derivation(b);
        nova::StructureBundle r = b;
        r.del = std::move(d);
        out = std::move(r);
    } else if (a.op == "derive-homlie") {
        nova::HomLieMode mode;
        if (a.mode == "from-hom-novikov")
            mode = nova::HomLieMode::from_hom_novikov;
        else if (a.mode == "from-novikov-with-automorphism")
            mode = nova::HomLieMode::from_novikov_with_automorphism;
        else
            throw std::invalid_argument(
                "derive-homlie needs --mode from-hom-novikov or from-novikov-with-automorphism");
        out = nova::derive_quadratic_homlie(b, mode);
    } else if (a.op == "quadratic-novikov-from-involutive") {
        out = nova::quadratic_novikov_from_involutive(b);
    } else if (a.op == "twist-form") {
        if (!b.form || !b.alpha)
            throw std::invalid_argument("twist-form needs a form and an alpha map");
        nova::StructureBundle r = b;
        r.form = nova::twist_form(*b.form, *b.alpha, a.power);
        out = std::move(r);
    } else {
        throw std::invalid_argument("unknown construction '" + a.op + "'");
    }

    if (found_report) {
        // find-unity: a yes/no answer with certificate, reported as a check.
        bool found = found_report->entries.front().verdict.holds;
        Json doc = nova::make_report_doc(found ? "pass" : "fail",
                                         nova::report_to_json(*found_report), std::nullopt,
                                         std::nullopt, o.command, l.digest, o.seed);
        std::ostringstream human;
        human << "construct find-unity on " << a.file << ": "
              << (found ? "found " + *found_report->entries.front().verdict.witness->lhs_text
                        : "no unity")
              << "\n";
        emit(o, doc, human.str());
        return found ? 0 : 1;
    }

    Json spec_doc = nova::spec_to_json(nova::bundle_to_spec(*out));
    std::ostringstream human;
    human << "construct " << a.op << " on " << a.file << ": ok (dim " << out->dim << ", "
          << out->field.name() << ")\n";
    if (o.out.empty() && !o.json) {
        // No destination chosen: the spec document is the useful output.
        std::cout << nova::stable_dump(spec_doc);
        return 0;
    }
    emit(o, spec_doc, human.str());
    return 0;
}

// -------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string file, what;
    nova::RoleNames roles;
};

Json subspace_json(const nova::Subspace& s) {
    Json rows = Json::array();
    for (const nova::Vec& v : s.basis()) {
        Json row = Json::array();
        for (const nova::Scalar& x : v) row.push_back(x.str());
        rows.push_back(std::move(row));
    }
    return rows;
}

int run_analyze(const AnalyzeArgs& a, const CommonOpts& o) {
    LoadedSpec l = load(a.file, o, a.roles);
    const nova::StructureBundle& b = l.bundle;
    Json analysis;
    nova::Report report;
    std::string title = "analyze " + a.what + " on " + a.file;

    if (a.what == "center") {
        nova::Subspace z = nova::center(primary_product(b));
        analysis["dim"] = z.dim();
        analysis["basis"] = subspace_json(z);
        std::ostringstream human;
        human << title << ": dim " << z.dim() << "\n";
        for (const nova::Vec& v : z.basis()) human << "  " << nova::vec_str(v) << "\n";
        Json doc = nova::make_report_doc("pass", Json::array(), std::nullopt, std::nullopt,
                                         o.command, l.digest, o.seed);
        doc["analysis"] = analysis;
        emit(o, doc, human.str());
        return 0;
    }
    if (a.what == "lcs") {
        auto series = nova::lower_central_series(primary_product(b));
        Json dims = Json::array(), bases = Json::array();
        std::ostringstream human;
        human << title << ": dims [";
        for (std::size_t i = 0; i < series.size(); ++i) {
            dims.push_back(series[i].dim());
            bases.push_back(subspace_json(series[i]));
            human << (i ? ", " : "") << series[i].dim();
        }
        human << "]\n";
        analysis["dims"] = dims;
        analysis["series"] = bases;
        Json doc = nova::make_report_doc("pass", Json::array(), std::nullopt, std::nullopt,
                                         o.command, l.digest, o.seed);
        doc["analysis"] = analysis;
        emit(o, doc, human.str());
        return 0;
    }
    if (a.what == "nilpotency") {
        nova::NilpotencyReport n = nova::nilpotency_report(b);
        report.entries.push_back({"derived-in-center", nova::Verdict{n.derived_in_center, {}}});
        report.entries.push_back({"two-step", nova::Verdict{n.two_step, {}}});
        analysis["lcs_dims"] = n.lcs_dims;
        analysis["alpha_compat"] = n.alpha_compat;
        if (!report.pass() && b.field.is_rational()) analysis["flag"] = "counterexample?";
        return finish_report(o, report, analysis, l.digest, title);
    }
    if (a.what == "form") {
        if (!b.form) throw std::invalid_argument("the spec binds no form");
        nova::FormProperties p = nova::form_properties(*b.form);
        analysis["symmetric"] = p.symmetric.holds;
        analysis["skew_symmetric"] = p.skew_symmetric.holds;
        analysis["nondegenerate"] = p.nondegenerate.holds;
        analysis["radical_dim"] = p.radical_dim;
        std::ostringstream human;
        human << title << ": symmetric=" << (p.symmetric.holds ? "yes" : "no")
              << " skew=" << (p.skew_symmetric.holds ? "yes" : "no")
              << " nondegenerate=" << (p.nondegenerate.holds ? "yes" : "no")
              << " radical_dim=" << p.radical_dim << "\n";
        Json doc = nova::make_report_doc("pass", Json::array(), std::nullopt, std::nullopt,
                                         o.command, l.digest, o.seed);
        doc["analysis"] = analysis;
        emit(o, doc, human.str());
        return 0;
    }
    throw std::invalid_argument("unknown analysis '" + a.what +
                                "' (center, lcs, nilpotency, form)");
}

// ----------------------------------------------------------------- demo

struct DemoArgs {
    std::string family, suite, window = "0..0";
    std::string c = "0", s = "1", beta = "1";
    long long q = 0;
};

int run_demo(const DemoArgs& a, const CommonOpts& o) {
    nova::Field f = o.field.empty() ? nova::Field::rationals() : nova::Field::parse(o.field);
    nova::FamilySpec spec;
    std::ostringstream params;
    if (a.family == "laurent") {
        spec = nova::FamilySpec::laurent(nova::Scalar::parse(a.c, f));
        params << "laurent c=" << a.c;
    } else if (a.family == "indexed") {
        spec = nova::FamilySpec::indexed(a.q, nova::Scalar::parse(a.s, f),
                                         nova::Scalar::parse(a.beta, f));
        params << "indexed q=" << a.q << " s=" << a.s << " beta=" << a.beta;
    } else {
        throw std::invalid_argument("unknown family '" + a.family + "' (laurent, indexed)");
    }
    params << " field=" << f.name() << " window=" << a.window << " suite=" << a.suite;
    nova::GradeWindow window = parse_window(a.window);
    nova::Report report;
    for (const nova::SuiteCheck& check : nova::family_suite(spec.variant, a.suite))
        report.entries.push_back(
            {check.name, nova::window_verify(spec, check.id, check.binding, window)});
    return finish_report(o, report, Json(), nova::fnv1a_hex(params.str()),
                         "demo " + a.family + " " + a.suite + " on window " + a.window);
}

// ------------------------------------------------------------ enumerate

struct EnumerateArgs {
    std::string file, what = "endomorphisms";
    nova::RoleNames roles;
};

int run_enumerate(const EnumerateArgs& a, const CommonOpts& o) {
    if (a.what != "endomorphisms")
        throw std::invalid_argument("unknown enumeration '" + a.what + "'");
    LoadedSpec l = load(a.file, o, a.roles);
    std::vector<nova::LinearOperator> endos =
        nova::enumerate_endomorphisms(primary_product(l.bundle));
    Json list = Json::array();
    for (const nova::LinearOperator& op : endos) {
        Json entries = Json::array();
        for (std::size_t i = 0; i < op.m.rows(); ++i)
            for (std::size_t j = 0; j < op.m.cols(); ++j)
                if (!op.m.at(i, j).is_zero())
                    entries.push_back(Json::array({i, j, op.m.at(i, j).str()}));
        list.push_back(std::move(entries));
    }
    Json doc = nova::make_report_doc("pass", Json::array(), std::nullopt, std::nullopt,
                                     o.command, l.digest, o.seed);
    doc["analysis"] = {{"count", endos.size()}, {"endomorphisms", list}};
    std::ostringstream human;
    human << "enumerate endomorphisms on " << a.file << ": " << endos.size() << " maps\n";
    emit(o, doc, human.str());
    return 0;
}

void add_role_options(CLI::App* cmd, nova::RoleNames& roles) {
    cmd->add_option("--dot", roles.dot, "product name to bind as dot");
    cmd->add_option("--star", roles.star, "product name to bind as star");
    cmd->add_option("--alpha", roles.alpha, "map name to bind as alpha");
    cmd->add_option("--del", roles.del, "map name to bind as del");
    cmd->add_option("--form", roles.form, "form name to bind");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checker for structure-constant algebras and their twisted variants"};
    app.require_subcommand(1);

    CommonOpts common;
    for (int i = 0; i < argc; ++i) common.command += std::string(i ? " " : "") + argv[i];

    CheckArgs check;
    CLI::App* c_check = app.add_subcommand("check", "validate a spec against a structure kind");
    c_check->add_option("file", check.file, "spec JSON file")->required();
    c_check->add_option("--kind", check.kind, "structure kind to validate")->required();
    add_role_options(c_check, check.roles);
    c_check->add_flag("--no-morphism", check.no_morphism,
                      "drop the twist-multiplicativity requirement");
    c_check->add_option("--sanity", check.sanity,
                        "re-check each law on this many random vector tuples");
    add_common(c_check, common);

    ConstructArgs cons;
    CLI::App* c_cons = app.add_subcommand("construct", "apply a construction, emit a spec");
    c_cons->add_option("file", cons.file, "spec JSON file")->required();
    c_cons->add_option("--op", cons.op, "construction name")->required();
    add_role_options(c_cons, cons.roles);
    c_cons->add_option("--with", cons.with_file, "second spec file (tensor-np)");
    c_cons->add_option("--lambda", cons.lambda, "weight scalar (gd-lambda)");
    c_cons->add_option("--mode", cons.mode, "derivation mode (derive-homlie)");
    c_cons->add_option("--power", cons.power, "iteration count (power-twist, twist-form)");
    add_common(c_cons, common);

    AnalyzeArgs ana;
    CLI::App* c_ana = app.add_subcommand("analyze", "center / lcs / nilpotency / form");
    c_ana->add_option("file", ana.file, "spec JSON file")->required();
    c_ana->add_option("--what", ana.what, "analysis to run")->required();
    add_role_options(c_ana, ana.roles);
    add_common(c_ana, common);

    DemoArgs demo;
    CLI::App* c_demo = app.add_subcommand("demo", "window-check a built-in family suite");
    c_demo->add_option("family", demo.family, "laurent or indexed")->required();
    c_demo->add_option("--suite", demo.suite, "suite name")->required();
    c_demo->add_option("--window", demo.window, "grade window LO..HI")->required();
    c_demo->add_option("--c", demo.c, "laurent shift constant");
    c_demo->add_option("--q", demo.q, "indexed index offset");
    c_demo->add_option("--s", demo.s, "indexed weight slope (nonzero)");
    c_demo->add_option("--beta", demo.beta, "indexed twist base (nonzero)");
    add_common(c_demo, common);

    EnumerateArgs enu;
    CLI::App* c_enu = app.add_subcommand("enumerate", "brute-force search over a finite field");
    c_enu->add_option("file", enu.file, "spec JSON file")->required();
    c_enu->add_option("--what", enu.what, "what to enumerate (endomorphisms)");
    add_role_options(c_enu, enu.roles);
    add_common(c_enu, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_check) return run_check(check, common);
        if (*c_cons) return run_construct(cons, common);
        if (*c_ana) return run_analyze(ana, common);
        if (*c_demo) return run_demo(demo, common);
        if (*c_enu) return run_enumerate(enu, common);
    } catch (const nova::PreconditionError& e) {
        emit_error(common, e.what(), nova::report_to_json(e.report), "");
    } catch (const std::exception& e) {
        emit_error(common, e.what(), Json::array(), "");
    }
    return 2;
}
