#include "linespect/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "linespect/charpoly.hpp"
#include "linespect/eigensolver.hpp"
#include "linespect/graph.hpp"
#include "linespect/spectrum.hpp"

namespace linespect {

namespace {

struct Family {
    IdentityCheckResult result;

    explicit Family(std::string name) { result.family = std::move(name); result.passed = true; }

    // err is |difference| already scaled by the family's tolerance rule;
    // tol is the admissible bound for that scaled error.
    void record(double err, double tol, const std::string& witness) {
        ++result.checks;
        if (err > result.worst) {
            result.worst = err;
            if (result.passed)
                result.witness = witness;
        }
        if (err > tol && result.passed) {
            result.passed = false;
            result.witness = witness;
        }
    }
};

std::string pair_witness(int n, int k, int m1, int m2) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << " m1=" << m1 << " m2=" << m2;
    return os.str();
}

// Deterministic pair choice: a handful of (m1, m2) pairs per n.
std::vector<std::pair<int, int>> sample_pairs(int n, int count, std::mt19937& rng) {
    std::vector<std::pair<int, int>> pairs;
    std::uniform_int_distribution<int> pick(1, n);
    while (static_cast<int>(pairs.size()) < count) {
        int a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        if (std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end())
            pairs.emplace_back(a, b);
        if (static_cast<int>(pairs.size()) == n * (n - 1) / 2)
            break;
    }
    return pairs;
}

IdentityCheckResult check_f_closed_form(int max_n) {
    Family fam("charpoly-recursion-vs-closed-form");
    const int cap = std::min(max_n, 64);
    // Grid inside (0.01, 3.99) plus a few points outside [0, 4] to exercise
    // the real omega branch.
    std::vector<double> grid;
    for (int i = 0; i < 200; ++i)
        grid.push_back(0.01 + (i + 0.5) * (3.99 - 0.01) / 200.0);
    const double outside[] = {-1.5, -0.3, 4.2, 5.7, 9.0};
    for (int n = 1; n <= cap; ++n) {
        auto check_one = [&](double lam) {
            const double fr = eval_f(lam, n);
            const double fc = eval_f_closed_form(lam, n);
            const double scaled = std::abs(fr - fc) / std::max(1.0, std::abs(fr));
            std::ostringstream w;
            w << "n=" << n << " lambda=" << lam;
            fam.record(scaled, 1e-9, w.str());
        };
        for (double lam : grid)
            check_one(lam);
        for (double lam : outside)
            check_one(lam);
    }
    return fam.result;
}

IdentityCheckResult check_root_completeness(int max_n) {
    Family fam("closed-form-eigenvalues-are-roots");
    const int cap = std::min(max_n, 64);
    for (int n = 2; n <= cap; ++n) {
        const std::vector<double> lams = closed_form_eigenvalues(n);
        for (int k = 1; k <= n; ++k) {
            const double f = eval_f(lams[k - 1], n);
            std::ostringstream w;
            w << "n=" << n << " k=" << k;
            fam.record(std::abs(f), 1e-9, w.str());
        }
    }
    return fam.result;
}

IdentityCheckResult check_adjugate_trace(int max_n) {
    Family fam("adjugate-trace-triple");
    const int cap = std::min(max_n, 24);
    for (int n = 2; n <= cap; ++n) {
        const std::vector<double> lams = closed_form_eigenvalues(n);
        for (int k = 1; k <= n; ++k) {
            const double lam = lams[k - 1];
            double gap = 1.0;
            for (int j = 1; j <= n; ++j)
                if (j != k)
                    gap *= lam - lams[j - 1];
            const Vector g = eval_g_sequence(lam, n);
            double gsum = 0.0;
            for (int i = 1; i <= n; ++i)
                gsum += g[i - 1] * g[n - i];
            const double closed = adjugate_trace_closed_form(k, n);
            const double scale = std::max(1.0, std::abs(gap));
            std::ostringstream w;
            w << "n=" << n << " k=" << k;
            fam.record(std::abs(closed - gap) / scale, 1e-8, w.str() + " (closed vs gap)");
            fam.record(std::abs(gsum - gap) / scale, 1e-8, w.str() + " (g-sum vs gap)");
        }
    }
    return fam.result;
}

IdentityCheckResult check_cofactor(int max_n) {
    Family fam("cofactor-vs-minor");
    const int cap = std::min(max_n, 8);
    const double lambdas[] = {0.5, 1.0, 3.0};
    for (int n = 2; n <= cap; ++n) {
        const SymmetricMatrix l = build_laplacian(LineGraphSpec::canonical(n));
        for (double lam : lambdas) {
            SymmetricMatrix shifted(n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    shifted.set(i, j, (i == j ? lam : 0.0) - l(i, j));
            for (int m1 = 1; m1 < n; ++m1)
                for (int m2 = m1 + 1; m2 <= n; ++m2) {
                    const double factored = cofactor_m1m2(lam, m1, m2, n);
                    const double minor = minor_determinant(shifted, m1, m2);
                    const double scaled =
                        std::abs(factored - minor) / std::max(1.0, std::abs(minor));
                    std::ostringstream w;
                    w << "n=" << n << " lambda=" << lam << " m1=" << m1 << " m2=" << m2;
                    fam.record(scaled, 1e-10, w.str());
                }
        }
    }
    return fam.result;
}

IdentityCheckResult check_rayleigh(int max_n, std::mt19937& rng) {
    Family fam("lambda-prime-vs-rayleigh");
    const int cap = std::min(max_n, 64);
    for (int n = 2; n <= cap; ++n) {
        const EigenDecomposition d =
            eig_symmetric(build_laplacian(LineGraphSpec::canonical(n)));
        for (const auto& [m1, m2] : sample_pairs(n, 3, rng)) {
            for (int k = 1; k <= n; ++k) {
                const Vector& v = d.eigenvectors[n - k]; // ascending position n-k is index k
                const double u = v[m1 - 1] - v[m2 - 1];
                const double rayleigh = u * u;
                const double lp = lambda_prime(n, k, m1, m2);
                fam.record(std::abs(lp - rayleigh), 1e-12, pair_witness(n, k, m1, m2));
            }
        }
    }
    return fam.result;
}

IdentityCheckResult check_adjugate_route(int max_n, std::mt19937& rng) {
    Family fam("lambda-prime-vs-adjugate-route");
    const int cap = std::min(max_n, 24);
    for (int n = 2; n <= cap; ++n) {
        for (const auto& [m1, m2] : sample_pairs(n, 3, rng)) {
            for (int k = 1; k <= n; ++k) {
                const double direct = lambda_prime(n, k, m1, m2);
                const double routed = lambda_prime_adjugate(n, k, m1, m2);
                const double scaled =
                    std::abs(direct - routed) / std::max(1.0, std::abs(direct));
                fam.record(scaled, 1e-8, pair_witness(n, k, m1, m2));
            }
        }
    }
    return fam.result;
}

IdentityCheckResult check_trace_sum(int max_n, std::mt19937& rng) {
    Family fam("derivative-trace-sum");
    const int cap = std::min(max_n, 64);
    std::uniform_int_distribution<int> pick_n(2, cap);
    for (int inst = 0; inst < 50; ++inst) {
        const int n = pick_n(rng);
        const auto pair = sample_pairs(n, 1, rng).front();
        double sum = 0.0;
        for (int k = 1; k <= n; ++k)
            sum += lambda_prime(n, k, pair.first, pair.second);
        std::ostringstream w;
        w << "n=" << n << " m1=" << pair.first << " m2=" << pair.second;
        fam.record(std::abs(sum - 2.0), 1e-10, w.str());
    }
    return fam.result;
}

} // namespace

std::vector<IdentityCheckResult> run_identity_suite(int max_n) {
    if (max_n < 2)
        throw std::invalid_argument("run_identity_suite: max_n must be >= 2");
    std::mt19937 rng(0x5eed1234u);
    std::vector<IdentityCheckResult> out;
    out.push_back(check_f_closed_form(max_n));
    out.push_back(check_root_completeness(max_n));
    out.push_back(check_adjugate_trace(max_n));
    out.push_back(check_cofactor(max_n));
    out.push_back(check_rayleigh(max_n, rng));
    out.push_back(check_adjugate_route(max_n, rng));
    out.push_back(check_trace_sum(max_n, rng));
    return out;
}

} // namespace linespect
