#include "artifact/suites.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace stq;

namespace {

struct Criterion {
    int id;
    std::string text;
    double limit; // seconds, 0 for none
    std::vector<std::function<SuiteReport(const SuiteConfig&)>> suites;
};

} // namespace

int main() {
    SuiteConfig cfg;
    std::vector<Criterion> all = {
        {1, "apartment relations normalize to zero", 5, {suite_relations}},
        {2, "flag expansion is supported on the flag basis and oracle-equal", 10, {suite_flag_basis}},
        {3, "s-map expansions for d=2 and d=3, cycle condition", 0, {suite_smap}},
        {4, "double shuffle for all splits with d1+d2 <= 4", 60, {suite_shuffle}},
        {5, "dihedral relations and non-generic vanishing in St^inf", 0, {suite_dihedral}},
        {6, "cobracket formula matches the coproduct route", 0, {suite_cobracket}},
        {7, "duality on L and I, D o D = id", 0, {suite_duality}},
        {8, "truncated symbol: Li_{2,1} display, recursion = closed form, Goncharov route", 120, {suite_symbol}},
        {9, "weight four depth two identity holds and perturbations fail", 0, {suite_li22}},
        {10, "Ash-Rudolph reduction to unimodular apartments", 30, {suite_ashrudolph}},
        {11, "Fourier sums against Bernoulli values, Li1 x Li1 coefficient shuffle", 30, {suite_fourier}},
        {12, "GL equivariance of the truncated symbol", 0, {suite_equivariance}},
    };
    std::cout << "seed " << cfg.seed << "\n";
    int failed = 0;
    for (auto& c : all) {
        bool ok = true;
        double secs = 0;
        long cases = 0;
        std::vector<std::string> detail;
        for (auto& s : c.suites) {
            SuiteReport r = s(cfg);
            ok = ok && r.ok();
            secs += r.seconds;
            cases += r.cases;
            for (auto& w : r.witnesses) detail.push_back("witness: " + w);
            for (auto& n : r.notes) detail.push_back("note: " + n);
        }
        if (c.limit > 0 && secs >= c.limit) {
            ok = false;
            detail.push_back("time limit exceeded");
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f", secs);
        std::cout << (ok ? "PASS " : "FAIL ") << c.id << ". " << c.text << " (" << cases << " cases, " << buf << " s";
        if (c.limit > 0) std::cout << ", limit " << c.limit << " s";
        std::cout << ")\n";
        for (auto& d : detail) std::cout << "    " << d << "\n";
        if (!ok) ++failed;
    }
    std::cout << (failed ? "FAIL" : "PASS") << " " << (all.size() - failed) << "/" << all.size() << " criteria\n";
    return failed ? 1 : 0;
}
