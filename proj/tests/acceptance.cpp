// Acceptance suite: runs the contract checks end to end and prints one
// PASS/FAIL line per criterion. Expects the CLI binary path as argv[1].

#include "test_support.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace symdecomp;

namespace {

std::string g_cli;
int g_failures = 0;

void criterion(int index, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input_text) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(counter++);
    const auto in_path = dir / ("symdecomp_acc_in_" + tag + ".txt");
    const auto out_path = dir / ("symdecomp_acc_out_" + tag + ".txt");

    std::string cmd = "'" + g_cli + "'";
    for (const std::string& a : args) cmd += " " + a;
    if (!input_text.empty()) {
        std::ofstream in(in_path);
        in << input_text;
        cmd += " --input '" + in_path.string() + "'";
    }
    cmd += " > '" + out_path.string() + "' 2>/dev/null";

    CliResult result;
    const int status = std::system(cmd.c_str());
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    std::ifstream out(out_path);
    std::ostringstream buffer;
    buffer << out.rdbuf();
    result.output = buffer.str();
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
    return result;
}

const char* kExampleTwoVars = "x1 + x2 + 3*x1^2 + 3*x2^2 - 5*x1*x2";
const char* kExampleThreeVars =
    "3*x1*x2*x3 - x1*x3^2 - x1^2*x3 - x2*x3^2 - x2^2*x3 - x1*x2^2 - x1^2*x2 + x1 + x2 + x3";

bool worked_example_two_vars(std::string& detail) {
    const Polynomial f = parse_poly(kExampleTwoVars, 2);
    const Polynomial g = decompose(f);
    if (g != parse_poly("y1 + 3*y1^2 - 11*y2", 2)) {
        detail = "got " + format_poly(g, 'y');
        return false;
    }
    if (format_poly(g, 'y') != "y1 + 3*y1^2 - 11*y2") {
        detail = "formatting drifted";
        return false;
    }
    if (!verify_roundtrip(f, g)) {
        detail = "round trip failed";
        return false;
    }
    return true;
}

bool worked_example_three_vars(std::string& detail) {
    const Polynomial f = parse_poly(kExampleThreeVars, 3);
    const Polynomial g = decompose(f);
    if (g != parse_poly("y1 - y1*y2 + 6*y3", 3)) {
        detail = "got " + format_poly(g, 'y');
        return false;
    }
    const DegreeSystem sys = build_system(3, 3, f);
    const std::vector<std::vector<Integer>> expected = {
        {Integer(1), Integer(0), Integer(0)},
        {Integer(3), Integer(1), Integer(0)},
        {Integer(6), Integer(3), Integer(1)},
    };
    if (sys.matrix != expected) {
        detail = "degree-3 matrix drifted";
        return false;
    }
    const std::vector<Rational> rhs = {Rational(0), Rational(-1), Rational(3)};
    if (sys.rhs != rhs) {
        detail = "degree-3 rhs drifted";
        return false;
    }
    if (!verify_roundtrip(f, g)) {
        detail = "round trip failed";
        return false;
    }
    return true;
}

bool displayed_matrix_golden(std::string& detail) {
    const std::vector<std::vector<std::vector<long>>> expected = {
        {{1}},
        {{1, 0}, {2, 1}},
        {{1, 0, 0}, {3, 1, 0}, {6, 3, 1}},
        {{1, 0, 0, 0}, {4, 1, 0, 0}, {6, 2, 1, 0}, {12, 5, 2, 1}},
    };
    for (long d = 1; d <= 4; ++d) {
        const DegreeSystem sys = build_system(3, d, Polynomial(3));
        const auto& want = expected[static_cast<std::size_t>(d - 1)];
        if (sys.matrix.size() != want.size()) {
            detail = "row count drifted at degree " + std::to_string(d);
            return false;
        }
        for (std::size_t i = 0; i < want.size(); ++i) {
            for (std::size_t j = 0; j < want[i].size(); ++j) {
                if (sys.matrix[i][j] != want[i][j]) {
                    detail = "entry mismatch at degree " + std::to_string(d);
                    return false;
                }
                if (sys.matrix[i][j] !=
                    testsupport::expansion_coefficient(sys.rows[i].rep(), sys.cols[j])) {
                    detail = "expansion oracle disagrees at degree " + std::to_string(d);
                    return false;
                }
            }
        }
        const CliResult cli = run_cli({"system", "--vars", "3", "--degree", std::to_string(d)}, "");
        if (cli.exit_code != 0 || cli.output != format_system(sys)) {
            detail = "CLI table drifted at degree " + std::to_string(d);
            return false;
        }
    }
    const Integer starred = coefficient(Exponent({2, 1, 1}), Exponent({2, 1, 0}));
    if (starred != 5 ||
        starred != testsupport::expansion_coefficient(Exponent({2, 1, 1}), Exponent({2, 1, 0}))) {
        detail = "starred entry is " + starred.get_str();
        return false;
    }
    return true;
}

bool closed_form_exhaustive(std::string& detail) {
    for (long d = 1; d <= 12; ++d) {
        for (long nu2 = 0; 2 * nu2 <= d; ++nu2) {
            const Exponent nu({static_cast<int>(d - nu2), static_cast<int>(nu2)});
            for (long lam2 = 0; 2 * lam2 <= d; ++lam2) {
                const Exponent lambda({static_cast<int>(d - 2 * lam2), static_cast<int>(lam2)});
                if (n2_coefficient(nu, lambda) != coefficient(nu, lambda)) {
                    detail = "mismatch at degree " + std::to_string(d);
                    return false;
                }
                if (enumerate_decompositions(nu, lambda).size() > 1) {
                    detail = "non-unique decomposition at degree " + std::to_string(d);
                    return false;
                }
            }
        }
    }
    return true;
}

bool triangular_with_factorial_first_column(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        for (long d = 1; d <= 10; ++d) {
            const DegreeSystem sys = build_system(n, d, Polynomial(n));
            for (std::size_t i = 0; i < sys.rows.size(); ++i) {
                if (sys.matrix[i][i] != 1) {
                    detail = "diagonal not 1 at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
                for (std::size_t j = i + 1; j < sys.cols.size(); ++j) {
                    if (sys.matrix[i][j] != 0) {
                        detail = "not lower triangular at n=" + std::to_string(n) +
                                 " d=" + std::to_string(d);
                        return false;
                    }
                }
                Integer rep_factorial(1);
                for (int k = 0; k < n; ++k) rep_factorial *= factorial(sys.rows[i].rep()[k]);
                if (sys.matrix[i][0] != exact_quotient(factorial(d), rep_factorial)) {
                    detail = "first column drifted at n=" + std::to_string(n) +
                             " d=" + std::to_string(d);
                    return false;
                }
            }
        }
    }
    return true;
}

bool phi_bijection(std::string& detail) {
    for (int n = 1; n <= 5; ++n) {
        for (long d = 0; d <= 12; ++d) {
            const auto classes = degree_classes(n, d);
            const auto brute = testsupport::all_weight_exponents(n, d);
            if (classes.size() != brute.size()) {
                detail = "count mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
            std::set<Exponent> image;
            for (const CanonicalClass& c : classes) {
                const Exponent lambda = phi(c);
                if (lambda.weight() != c.rep().degree() || !(phi_inv(lambda) == c)) {
                    detail = "inverse failed at n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return false;
                }
                image.insert(lambda);
            }
            if (image != std::set<Exponent>(brute.begin(), brute.end())) {
                detail = "image mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
            for (const Exponent& lambda : brute) {
                if (!(phi(phi_inv(lambda)) == lambda)) {
                    detail = "phi(phi_inv) failed at n=" + std::to_string(n) +
                             " d=" + std::to_string(d);
                    return false;
                }
            }
        }
    }
    return true;
}

bool roundtrip_two_hundred(std::string& detail) {
    std::mt19937 rng(20260810);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + iter % 4;
        const Polynomial g = testsupport::random_sigma_poly(rng, n, 8, 0.35);
        const Polynomial f = compose_with_sigma(g, n);
        const Polynomial back = decompose(f);
        if (back != g) {
            detail = "mismatch at iteration " + std::to_string(iter);
            return false;
        }
        if (!f.is_zero() && *back.degree() > *f.degree()) {
            detail = "degree bound violated at iteration " + std::to_string(iter);
            return false;
        }
    }
    return true;
}

bool oracle_agreement(std::string& detail) {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 1 + iter % 3;
        const Polynomial f = compose_with_sigma(testsupport::random_sigma_poly(rng, n, 6, 0.4), n);
        if (decompose(f) != oracle_decompose(f)) {
            detail = "mismatch at iteration " + std::to_string(iter);
            return false;
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const Polynomial p = testsupport::power_sum(n, k);
            if (decompose(p) != oracle_decompose(p)) {
                detail = "power sum mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool truncated_exponential(std::string& detail) {
    const long bound = 8;
    const Polynomial f = testsupport::exp_sum_truncated(bound);
    const Polynomial g = decompose_truncated(f, bound);
    for (long i = 0; i <= bound; ++i) {
        if (g.coeff(Exponent({static_cast<int>(i), 0})) != make_rational(Integer(1), factorial(i))) {
            detail = "wrong coefficient at y1^" + std::to_string(i);
            return false;
        }
    }
    for (const auto& [lambda, c] : g.terms()) {
        if (lambda[1] != 0) {
            detail = "unexpected y2 term";
            return false;
        }
        if (lambda.weight() > bound) {
            detail = "weight bound violated";
            return false;
        }
    }
    if (g.terms().size() != static_cast<std::size_t>(bound + 1)) {
        detail = "term count drifted";
        return false;
    }
    if (compose_truncated(g, 2, bound) != f) {
        detail = "compose round trip failed";
        return false;
    }
    return true;
}

bool cli_contract(std::string& detail) {
    CliResult r = run_cli({"check-symmetric", "--vars", "2"}, kExampleTwoVars);
    if (r.exit_code != 0 || r.output != "symmetric\n") {
        detail = "check-symmetric on symmetric input";
        return false;
    }
    r = run_cli({"check-symmetric", "--vars", "2"}, "x1 - x2");
    if (r.exit_code != 2 || r.output.rfind("asym: swap(1,2) at ", 0) != 0) {
        detail = "check-symmetric witness";
        return false;
    }
    r = run_cli({"decompose", "--vars", "2"}, "x1 - x2");
    if (r.exit_code != 2) {
        detail = "decompose on asymmetric input";
        return false;
    }
    r = run_cli({"decompose", "--vars", "2"}, "3x1");
    if (r.exit_code != 1) {
        detail = "parse error exit code";
        return false;
    }

    r = run_cli({"decompose", "--vars", "2", "--check", "--closed-form-n2"}, kExampleTwoVars);
    if (r.exit_code != 0 || r.output != "y1 + 3*y1^2 - 11*y2\n") {
        detail = "closed-form decompose output";
        return false;
    }
    r = run_cli({"decompose", "--vars", "2", "--records"}, kExampleTwoVars);
    if (r.exit_code != 0 || r.output != "1 0,1,1\n2 0,3,1\n0 1,-11,1\n") {
        detail = "record output";
        return false;
    }
    r = run_cli({"compose", "--vars", "2"}, "y1 + 3*y1^2 - 11*y2");
    if (r.exit_code != 0 || r.output != format_poly(parse_poly(kExampleTwoVars, 2)) + "\n") {
        detail = "compose output";
        return false;
    }
    const Polynomial exp3 = testsupport::exp_sum_truncated(3);
    r = run_cli({"truncate-decompose", "--vars", "2", "--max-degree", "3"}, format_poly(exp3));
    if (r.exit_code != 0 || r.output != "1 + y1 + 1/2*y1^2 + 1/6*y1^3\n") {
        detail = "truncate-decompose output";
        return false;
    }
    r = run_cli({"truncate-compose", "--vars", "2", "--max-degree", "3"},
                "1 + y1 + 1/2*y1^2 + 1/6*y1^3");
    if (r.exit_code != 0 || r.output != format_poly(exp3) + "\n") {
        detail = "truncate-compose output";
        return false;
    }

    // the round-trip and oracle corpora, replayed through the CLI
    std::vector<std::pair<int, std::string>> corpus;
    corpus.emplace_back(2, kExampleTwoVars);
    corpus.emplace_back(3, kExampleThreeVars);
    std::mt19937 rng_a(20260810);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + iter % 4;
        const Polynomial f =
            compose_with_sigma(testsupport::random_sigma_poly(rng_a, n, 8, 0.35), n);
        corpus.emplace_back(n, format_poly(f));
    }
    std::mt19937 rng_b(99);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = 1 + iter % 3;
        const Polynomial f =
            compose_with_sigma(testsupport::random_sigma_poly(rng_b, n, 6, 0.4), n);
        corpus.emplace_back(n, format_poly(f));
    }
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k) corpus.emplace_back(n, format_poly(testsupport::power_sum(n, k)));

    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& [n, text] = corpus[i];
        const CliResult checked =
            run_cli({"decompose", "--vars", std::to_string(n), "--check"}, text);
        if (checked.exit_code != 0) {
            detail = "decompose --check exited " + std::to_string(checked.exit_code) +
                     " on corpus item " + std::to_string(i);
            return false;
        }
        if (i % 20 == 0) {
            const CliResult plain = run_cli({"decompose", "--vars", std::to_string(n)}, text);
            const CliResult oracle =
                run_cli({"decompose", "--vars", std::to_string(n), "--oracle"}, text);
            if (plain.exit_code != 0 || oracle.exit_code != 0 || plain.output != oracle.output) {
                detail = "oracle output differs on corpus item " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    g_cli = argc > 1 ? argv[1] : "tools/symdecomp";

    criterion(1, "two-variable worked example decomposes exactly", worked_example_two_vars);
    criterion(2, "three-variable worked example and its degree-3 system", worked_example_three_vars);
    criterion(3, "displayed matrices for n=3, d=1..4, starred entry 5", displayed_matrix_golden);
    criterion(4, "two-variable closed form matches enumeration up to degree 12",
              closed_form_exhaustive);
    criterion(5, "triangular, unit diagonal, factorial first column (n<=4, d<=10)",
              triangular_with_factorial_first_column);
    criterion(6, "difference map bijects degree classes onto weight vectors (n<=5, d<=12)",
              phi_bijection);
    criterion(7, "200 random round trips with the degree bound", roundtrip_two_hundred);
    criterion(8, "oracle agreement on random symmetric inputs and power sums", oracle_agreement);
    criterion(9, "exponential series truncated at degree 8", truncated_exponential);
    criterion(10, "CLI exit codes and --check across the corpus", cli_contract);

    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all criteria passed" << std::endl;
    return 0;
}
