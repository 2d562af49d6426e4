#ifndef LLCW_VERIFY_HPP
#define LLCW_VERIFY_HPP

#include <string>
#include <vector>

namespace llcw {

/// Configuration for a verification suite run over one residue field size q.
struct SuiteConfig {
    long q = 3;                     // residue field size, a prime power
    long tau_order_bound = 8;       // bound on the order of tau(pi)
    long trials = 200;              // randomized trials per Iwahori claim
    unsigned long seed = 20260824;  // sampler seed
    bool parallel = true;           // use the OpenMP grid kernel when built in
};

/// One identity instance: the exact inputs, the number of equalities it
/// covered, and whether all of them held.
struct CheckRecord {
    std::string instance;
    long checked = 0;
    bool ok = true;
    std::string detail; // failure description when not ok
};

struct SuiteReport {
    std::string suite;
    long checked = 0;
    std::vector<CheckRecord> records;
    double seconds = 0.0;
    bool ok() const;
    long failures() const;
};

/// {gauss, gamma-product, thm-ak, fdc, appendix-a3, iwahori, all}
std::vector<std::string> suite_names();

/// Runs one suite (or all of them) at the configured q. Unknown suite names
/// raise config_error; q must be a prime power.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg);

/// Decomposes a prime power q = p^f; config_error otherwise.
std::pair<long, long> prime_power_split(long q);

/// Randomized checks for one group family over the ring with residue field
/// F_{p^f}: quotient homomorphism and kernel, character stabilizers, and the
/// p = 2 degeneracy claim, one record per claim. family is one of
/// gl, so_odd, so_odd_bt, so_even. precision is the working precision K.
SuiteReport run_iwahori_check(const std::string& family, long n, long p, long f,
                              unsigned long seed, long trials, long precision = 8);

} // namespace llcw

#endif
