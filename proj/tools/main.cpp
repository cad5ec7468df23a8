#include "CLI11.hpp"

#include "symdecomp/decomp.hpp"
#include "symdecomp/io.hpp"
#include "symdecomp/oracle.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 success, 1 parse/usage error, 2 not symmetric,
// 3 round-trip verification failure.
enum ExitCode { kOk = 0, kUsage = 1, kNotSymmetric = 2, kVerifyFailed = 3 };

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

void print_poly(const symdecomp::Polynomial& p, char prefix, bool records) {
    if (records)
        std::cout << symdecomp::format_records(symdecomp::export_records(p));
    else
        std::cout << symdecomp::format_poly(p, prefix) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    using namespace symdecomp;

    CLI::App app{"rewrite symmetric polynomials over the elementary symmetric basis"};
    app.require_subcommand(1);

    int vars = 0;
    std::string input_path;
    bool use_oracle = false;
    bool closed_form_n2 = false;
    bool records = false;
    bool check = false;
    long degree = 0;
    long max_degree = 0;

    auto add_vars = [&](CLI::App* cmd) {
        cmd->add_option("--vars,-n", vars, "number of variables")
            ->required()
            ->check(CLI::PositiveNumber);
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", input_path, "read the polynomial from a file instead of stdin");
    };
    auto add_records = [&](CLI::App* cmd) {
        cmd->add_flag("--records", records, "print one exponent,numerator,denominator record per term");
    };

    CLI::App* dec = app.add_subcommand("decompose", "express a symmetric polynomial in the sigma basis");
    add_vars(dec);
    add_input(dec);
    add_records(dec);
    CLI::Option* oracle_flag = dec->add_flag("--oracle", use_oracle, "use the brute-force reference path");
    CLI::Option* n2_flag =
        dec->add_flag("--closed-form-n2", closed_form_n2, "use the two-variable closed-form coefficients");
    oracle_flag->excludes(n2_flag);
    dec->add_flag("--check", check, "verify the round trip before printing");

    CLI::App* comp = app.add_subcommand("compose", "substitute the elementary symmetric polynomials into g");
    add_vars(comp);
    add_input(comp);
    add_records(comp);

    CLI::App* sym = app.add_subcommand("check-symmetric", "test whether the input is symmetric");
    add_vars(sym);
    add_input(sym);

    CLI::App* sysc = app.add_subcommand("system", "print the coefficient matrix for one degree");
    add_vars(sysc);
    sysc->add_option("--degree,-d", degree, "equation degree")->required()->check(CLI::PositiveNumber);

    CLI::App* tdec = app.add_subcommand("truncate-decompose",
                                        "decompose a series truncation up to a degree bound");
    add_vars(tdec);
    add_input(tdec);
    add_records(tdec);
    tdec->add_option("--max-degree,-D", max_degree, "truncation degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    tdec->add_flag("--closed-form-n2", closed_form_n2,
                   "use the two-variable closed-form coefficients");

    CLI::App* tcomp =
        app.add_subcommand("truncate-compose", "compose with sigma, truncated to a degree bound");
    add_vars(tcomp);
    add_input(tcomp);
    add_records(tcomp);
    tcomp->add_option("--max-degree,-D", max_degree, "truncation degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (closed_form_n2 && vars != 2) {
            std::cerr << "--closed-form-n2 requires --vars 2\n";
            return kUsage;
        }
        const CoefficientPath path =
            closed_form_n2 ? CoefficientPath::ClosedFormN2 : CoefficientPath::General;

        if (sysc->parsed()) {
            std::cout << format_system(build_system(vars, degree, Polynomial(vars)));
            return kOk;
        }

        const Polynomial input = parse_poly(read_input(input_path), vars);

        if (dec->parsed()) {
            const Polynomial g = use_oracle ? oracle_decompose(input) : decompose(input, path);
            if (check && !verify_roundtrip(input, g)) {
                std::cerr << "round-trip verification failed\n";
                return kVerifyFailed;
            }
            print_poly(g, 'y', records);
        } else if (comp->parsed()) {
            print_poly(compose_with_sigma(input, vars), 'x', records);
        } else if (sym->parsed()) {
            if (auto w = symmetry_witness(input)) {
                std::cout << "asym: swap(" << w->first << ',' << w->second << ") at " << w->at
                          << '\n';
                return kNotSymmetric;
            }
            std::cout << "symmetric\n";
        } else if (tdec->parsed()) {
            print_poly(decompose_truncated(input, max_degree, path), 'y', records);
        } else if (tcomp->parsed()) {
            print_poly(compose_truncated(input, vars, max_degree), 'x', records);
        }
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotSymmetricError& e) {
        std::cerr << e.what() << '\n';
        return kNotSymmetric;
    } catch (const InconsistentSystemError& e) {
        std::cerr << e.what() << '\n';
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
