// Benchmarks the parallel grid kernel of the verification suites against the
// serial reference and confirms both produce identical reports.

#include <cstdlib>
#include <iostream>

#include "llcw/verify.hpp"

using namespace llcw;

int main(int argc, char** argv) {
    long q = argc > 1 ? std::atol(argv[1]) : 3;
    bool all_match = true;
    for (const char* suite : {"gauss", "gamma-product", "thm-ak", "appendix-a3"}) {
        SuiteConfig cfg;
        cfg.q = q;
        cfg.parallel = true;
        SuiteReport par = run_suite(suite, cfg);
        cfg.parallel = false;
        SuiteReport ser = run_suite(suite, cfg);
        bool match = par.records.size() == ser.records.size() &&
                     par.checked == ser.checked && par.ok() == ser.ok();
        for (size_t i = 0; match && i < par.records.size(); ++i)
            match = par.records[i].instance == ser.records[i].instance &&
                    par.records[i].checked == ser.records[i].checked &&
                    par.records[i].ok == ser.records[i].ok;
        all_match = all_match && match;
        std::cout << suite << " q=" << q << ": parallel " << par.seconds
                  << "s, serial " << ser.seconds << "s, speedup "
                  << (par.seconds > 0 ? ser.seconds / par.seconds : 0.0)
                  << ", reports " << (match ? "identical" : "DIFFER") << "\n";
    }
    return all_match ? 0 : 1;
}
