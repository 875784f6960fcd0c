#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trigsum/charsums.hpp"
#include "trigsum/reciprocity.hpp"
#include "trigsum/rootsums.hpp"
#include "trigsum/suites.hpp"
#include "trigsum/trigsums.hpp"
#include "trigsum/twoperiod.hpp"

using namespace trigsum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

long default_precision_bits() {
    const char* env = std::getenv("TRIGSUM_PRECISION_BITS");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 64) return v;
    }
    return 256;
}

struct EvalArgs {
    std::string tag;
    long k = 0, p = 0, q = 0, r = 0, s = 0, a = 0, h = 0, m = 1, n = 0;
    long precision_bits = 0;
};

void print_line(const char* label, const std::string& value) {
    std::cout << label << ": " << value << "\n";
}

// Prints oracle value, closed value (when defined) and their difference.
int run_eval(const EvalArgs& args) {
    PrecisionContext ctx = make_context(args.precision_bits);
    const std::string& tag = args.tag;

    for (TrigFamily f : all_trig_families()) {
        if (tag == std::string("trig.") + trig_family_name(f)) {
            if (args.k < 1) throw Error(ErrorKind::Usage, "--k is required");
            HighComplex oracle = trig_sum_bruteforce(ctx, f, args.k);
            Rational closed = trig_sum_closed(f, args.k);
            HighComplex closed_c = HighComplex::from_rational(closed, ctx.precision_bits);
            print_line("closed", closed.str());
            print_line("oracle", oracle.str());
            print_line("diff", (oracle - closed_c).abs().str());
            print_line("pass", approx_equal(ctx, oracle, closed_c) ? "true" : "false");
            return kExitOk;
        }
    }
    if (tag == "dedekind.s") {
        if (args.q < 1) throw Error(ErrorKind::Usage, "--q is required");
        print_line("value", dedekind_sum(args.p, args.q).str());
        return kExitOk;
    }
    if (tag == "dedekind.cot") {
        if (args.q < 2) throw Error(ErrorKind::Usage, "--q >= 2 is required");
        HighComplex cot = dedekind_cot(ctx, args.p, args.q);
        Rational exact = dedekind_sum(args.p, args.q);
        print_line("closed", exact.str());
        print_line("oracle", cot.str());
        print_line("diff",
                   (cot - HighComplex::from_rational(exact, ctx.precision_bits)).abs().str());
        return kExitOk;
    }
    if (tag == "s3") {
        if (args.h < 1 || args.k < 2) throw Error(ErrorKind::Usage, "--h and --k are required");
        Rational exact = s3(args.h, args.k);
        HighComplex cot = s3_cot(ctx, args.h, args.k);
        print_line("closed", exact.str());
        print_line("oracle", cot.str());
        print_line("diff",
                   (cot - HighComplex::from_rational(exact, ctx.precision_bits)).abs().str());
        return kExitOk;
    }
    if (tag == "twoperiod.csc2" || tag == "twoperiod.sec2") {
        if (args.p < 2 || args.q < 2) throw Error(ErrorKind::Usage, "--p and --q are required");
        TwoPeriodSpec spec{args.p, args.q,
                           tag == "twoperiod.csc2" ? TwoPeriodKernel::CSC2 : TwoPeriodKernel::SEC2};
        HighComplex oracle = two_period_bruteforce(ctx, spec);
        HighComplex semi = two_period_semiclosed(ctx, spec);
        print_line("oracle", oracle.str());
        print_line("semiclosed", semi.str());
        print_line("diff", (oracle - semi).abs().str());
        try {
            print_line("closed_special", two_period_closed_special(spec).str());
        } catch (const Error&) {
            print_line("closed_special", "(q != +-1 mod p; not available)");
        }
        return kExitOk;
    }
    if (tag == "classnumber") {
        if (args.k < 7) throw Error(ErrorKind::Usage, "--k >= 7 is required");
        print_line("value", std::to_string(class_number(args.k)));
        return kExitOk;
    }
    if (tag == "jacobi") {
        if (args.n < 1) throw Error(ErrorKind::Usage, "--n (odd) is required");
        print_line("value", std::to_string(jacobi_symbol(args.a, args.n)));
        return kExitOk;
    }
    if (tag == "charsum.sin_ratio" || tag == "charsum.cos_ratio") {
        if (args.p < 5 || args.a < 3) throw Error(ErrorKind::Usage, "--p and --a are required");
        auto chars = characters_mod(args.p, CharacterFilter::EvenNonprincipal);
        const DirichletCharacter* chi = nullptr;
        for (auto& c : chars)
            if (c.is_real()) chi = &c;
        if (chi == nullptr)
            throw Error(ErrorKind::Usage, "no real even non-principal character mod p");
        CharSumSpec spec;
        spec.variant =
            tag == "charsum.sin_ratio" ? CharSumVariant::SIN_RATIO : CharSumVariant::COS_RATIO;
        spec.chi1 = chi;
        spec.a = args.a;
        HighComplex oracle = char_sum_bruteforce(ctx, spec);
        HighComplex closed = char_sum_closed(ctx, spec);
        print_line("closed", closed.str());
        print_line("oracle", oracle.str());
        print_line("diff", (oracle - closed).abs().str());
        return kExitOk;
    }
    throw Error(ErrorKind::Usage, "unknown identity tag: " + tag);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-path verification of finite trigonometric sum identities"};
    app.require_subcommand(1);

    EvalArgs eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one identity, printing both paths");
    eval->add_option("tag", eval_args.tag, "identity tag, e.g. trig.cos2_over_cos4")->required();
    eval->add_option("--k", eval_args.k);
    eval->add_option("--p", eval_args.p);
    eval->add_option("--q", eval_args.q);
    eval->add_option("--r", eval_args.r);
    eval->add_option("--s", eval_args.s);
    eval->add_option("--a", eval_args.a);
    eval->add_option("--h", eval_args.h);
    eval->add_option("--m", eval_args.m);
    eval->add_option("--n", eval_args.n);
    eval->add_option("--precision-bits", eval_args.precision_bits);

    SuiteConfig config;
    std::string out_path;
    double tolerance = 0.0;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--suite", config.suite, "suite name")->required();
    verify->add_option("--precision-bits", config.precision_bits);
    CLI::Option* tol_opt = verify->add_option("--tolerance", tolerance, "override tolerance");
    verify->add_option("--max-k", config.max_k, "cap for single-modulus sweeps");
    verify->add_option("--max", config.max_pq, "cap for (p, q) sweeps");
    verify->add_option("--out", out_path, "report output path (default stdout)");
    verify->add_option("--jobs", config.jobs, "parallel workers");
    verify->add_option("--seed", config.seed, "seed for random test points");

    std::string report_path;
    CLI::App* report = app.add_subcommand("report", "summarize a report file");
    report->add_option("path", report_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) {
            if (eval_args.precision_bits == 0) eval_args.precision_bits = default_precision_bits();
            return run_eval(eval_args);
        }
        if (verify->parsed()) {
            if (!verify->count("--precision-bits")) config.precision_bits = default_precision_bits();
            if (tol_opt->count() > 0) {
                config.has_tolerance_override = true;
                config.tolerance_override = tolerance;
            }
            ReportDocument doc = run_suite(config);
            std::string body = doc.to_json();
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw Error(ErrorKind::Io, "cannot open output path: " + out_path);
                out << body;
                if (!out) throw Error(ErrorKind::Io, "failed writing report: " + out_path);
            } else {
                std::cout << body;
            }
            std::cerr << "suite " << doc.suite << ": " << doc.pass_count() << " pass, "
                      << doc.fail_count() << " fail, " << doc.skipped_count() << " skipped\n";
            return doc.fail_count() == 0 ? kExitOk : kExitVerifyFail;
        }
        if (report->parsed()) {
            std::ifstream in(report_path, std::ios::binary);
            if (!in) throw Error(ErrorKind::Io, "cannot open report: " + report_path);
            std::stringstream buf;
            buf << in.rdbuf();
            ReportDocument doc = ReportDocument::from_json(buf.str());
            std::cout << doc.summary_table();
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error(" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::Usage: return kExitUsage;
            case ErrorKind::Io: return kExitIo;
            case ErrorKind::Parse: return kExitIo;
            default: return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
