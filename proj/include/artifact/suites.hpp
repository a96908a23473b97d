#pragma once

#include "artifact/cones.hpp"
#include "artifact/mpl.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace stq {

// independent streams derived from one seed
class Rng {
public:
    Rng(uint64_t seed, uint64_t stream);
    long uniform(long lo, long hi); // inclusive
    uint64_t next() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

std::vector<Vec> random_basis(Rng& r, int d, long lo = -4, long hi = 4);
// integral apartment with 0 < |det| <= max_det
std::vector<Vec> random_integral_apartment(Rng& r, int d, long max_det, long entry);

struct SuiteConfig {
    uint64_t seed = 1;
    int max_dim = 4;
    int trials = 0; // 0 picks the suite default
    int oracle_points = 5;
    long box = 25;
    int max_weight = 0; // 0 picks the suite default
};

struct SuiteReport {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::vector<std::string> witnesses; // first few failing cases
    std::vector<std::string> notes;
    double seconds = 0;
    bool ok() const { return cases > 0 && failures == 0; }
    void check(bool ok, const std::string& what);
};

SuiteReport suite_relations(const SuiteConfig& c);
SuiteReport suite_flag_basis(const SuiteConfig& c);
SuiteReport suite_smap(const SuiteConfig& c);
SuiteReport suite_shuffle(const SuiteConfig& c);
SuiteReport suite_dihedral(const SuiteConfig& c);
SuiteReport suite_cobracket(const SuiteConfig& c);
SuiteReport suite_duality(const SuiteConfig& c);
SuiteReport suite_symbol(const SuiteConfig& c);
SuiteReport suite_li22(const SuiteConfig& c);
SuiteReport suite_ashrudolph(const SuiteConfig& c);
SuiteReport suite_fourier(const SuiteConfig& c);
SuiteReport suite_equivariance(const SuiteConfig& c);

// the weight four depth two identity with every term moved to one side
std::vector<IdentityTerm> li22_identity();

std::string to_string(const std::vector<Vec>& vs);

} // namespace stq
