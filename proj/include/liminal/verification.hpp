#ifndef LIMINAL_VERIFICATION_HPP
#define LIMINAL_VERIFICATION_HPP

#include <random>
#include <string>
#include <vector>

#include "liminal/oracle.hpp"
#include "liminal/report.hpp"

namespace liminal {

// Cross-checks between the main computation paths and the independent
// oracles. These run in CI as the acceptance gate and behind the CLI's
// oracle-verify command.

struct OracleRunOptions {
    std::uint32_t max_exponent = 6;  // Brieskorn sweep: exponents 2..max
    std::size_t max_vars = 5;        //   and at most this many variables
    int kernel_trials = 100;
    int kernel_bound = 4;
    std::uint64_t seed = 12;
    std::string inject_fault;  // member label whose expected mu gets corrupted
};

struct OracleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct OracleRunResult {
    std::vector<OracleCheck> checks;
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

namespace verify_detail {

inline void next_multisets(std::vector<std::vector<std::uint32_t>>& out,
                           std::vector<std::uint32_t>& cur, std::uint32_t lo,
                           std::uint32_t hi, std::size_t len) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t b = lo; b <= hi; ++b) {
        cur.push_back(b);
        next_multisets(out, cur, b, hi, len);
        cur.pop_back();
    }
}

inline std::string label_of(const std::vector<std::uint32_t>& b) {
    std::string s = "brieskorn b=(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

inline bool staircases_equal(const Staircase& a, const Staircase& b) {
    if (a.dimension() != b.dimension() || !a.materialized() || !b.materialized()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.monomial(i) != b.monomial(i)) return false;
    return true;
}

}  // namespace verify_detail

// Every Brieskorn germ in range, three ways: the basis-and-staircase count,
// the closed-form product with box enumeration, and the Poincare series.
inline OracleRunResult brieskorn_cross_checks(const OracleRunOptions& opt = {}) {
    OracleRunResult result;
    std::vector<std::vector<std::uint32_t>> members;
    for (std::size_t len = 1; len <= opt.max_vars; ++len) {
        std::vector<std::uint32_t> cur;
        verify_detail::next_multisets(members, cur, 2, opt.max_exponent, len);
    }
    for (const auto& b : members) {
        OracleCheck check;
        check.name = verify_detail::label_of(b);
        try {
            BrieskornAnalysis oracle = brieskorn_analyze(b);
            Integer expected_mu = oracle.mu;
            if (check.name == opt.inject_fault) expected_mu += 1;

            Polynomial f = brieskorn_polynomial(b);
            LocalSingularity sing = analyze_local(f);

            if (sing.milnor != expected_mu) {
                check.detail = "mu mismatch: staircase " + sing.milnor.get_str() +
                               " vs oracle " + expected_mu.get_str();
            } else if (sing.tyurina != expected_mu) {
                check.detail = "tau mismatch: " + sing.tyurina.get_str();
            } else if (!verify_detail::staircases_equal(sing.milnor_basis, oracle.staircase)) {
                check.detail = "staircase sets differ";
            } else if (!sing.weight_system || !(*sing.weight_system == oracle.weight_system)) {
                check.detail = "weight systems differ";
            } else {
                WeightDecomposition dec = t1_weight_decomposition(sing);
                if (!poincare_series_check(*sing.weight_system, dec))
                    check.detail = "Poincare series disagrees with the weight decomposition";
                else
                    check.pass = true;
            }
        } catch (const Error& e) {
            check.detail = e.what();
        }
        result.checks.push_back(std::move(check));
    }
    return result;
}

// Seeded random matrices: the kernel-vector construction must agree with the
// exhaustive box search on existence, and every emitted witness must be an
// exact all-nonzero kernel vector.
inline OracleRunResult kernel_cross_checks(const OracleRunOptions& opt = {}) {
    OracleRunResult result;
    std::mt19937_64 gen(opt.seed);
    auto draw = [&](std::uint64_t mod) { return static_cast<long>(gen() % mod); };
    for (int trial = 0; trial < opt.kernel_trials; ++trial) {
        OracleCheck check;
        check.name = "kernel trial " + std::to_string(trial);
        std::size_t rows = static_cast<std::size_t>(draw(6)) + 1;
        std::size_t cols = static_cast<std::size_t>(draw(6)) + 1;
        QMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(draw(5) - 2);

        auto main_path = all_nonzero_kernel_vector(m);
        auto brute = brute_force_kernel_search(m, opt.kernel_bound);
        if (main_path.has_value() != brute.has_value()) {
            check.detail = std::string("existence disagrees: construction says ") +
                           (main_path ? "present" : "absent") + ", brute force says " +
                           (brute ? "present" : "absent");
        } else if (main_path) {
            QVector image = m * *main_path;
            bool ok = true;
            for (const auto& x : image)
                if (!x.is_zero()) ok = false;
            for (const auto& x : *main_path)
                if (x.is_zero()) ok = false;
            QVector brute_image = m * *brute;
            for (const auto& x : brute_image)
                if (!x.is_zero()) ok = false;
            if (ok) check.pass = true;
            else check.detail = "witness failed exact verification";
        } else {
            check.pass = true;
        }
        result.checks.push_back(std::move(check));
    }
    return result;
}

inline OracleRunResult run_oracle_verification(const OracleRunOptions& opt = {}) {
    OracleRunResult result = brieskorn_cross_checks(opt);
    OracleRunResult kernels = kernel_cross_checks(opt);
    result.checks.insert(result.checks.end(), kernels.checks.begin(), kernels.checks.end());
    return result;
}

}  // namespace liminal

#endif  // LIMINAL_VERIFICATION_HPP
