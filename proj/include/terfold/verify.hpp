#pragma once

// Property-suite drivers behind `terfold verify` and the acceptance runner.
// Reports carry no wall-clock data so fixed seeds give byte-identical JSON.

#include <cstdint>
#include <string>

#include "terfold/json_io.hpp"

namespace terfold::verify {

struct Suite {
    std::string name;
    bool pass = false;
    json report;
};

// Sequence laws: length, prefix, bar-invariance, balanced signs, position law.
Suite palindrome(int max_n);
// Self-avoidance at scale: exhaustive up to max_exhaustive, random at rand_n.
Suite self_avoid(int max_exhaustive, int rand_n, int rand_samples, uint64_t seed);
// Derivation coherence and Lambda extraction round trips.
Suite residue(int max_n);
// The rho_n diameter bound, exact in Z[sqrt(3)].
Suite diameter(int max_exhaustive, int rand_n, int rand_samples, uint64_t seed);
// Triangle-coverage minima for 2n-folding curves, n = 1..max_pairs.
Suite coverage(int max_pairs);
// Frontier sign laws and the apex-rule/region-boundary cross oracle.
Suite frontier(int max_exhaustive, int max_rand_n, int rand_samples, uint64_t seed);
// Patch validity, (P), Lambda re-extraction and shared-lattice agreement.
Suite covering(int level, int64_t radius, int num_random, uint64_t seed);
// Star and separated cases: counts, pairings, rotation and central symmetry.
Suite covering_cases(int level, int64_t radius, uint64_t seed);
// Witness searches with negative controls; optionally the n=2 smoke test.
Suite liso(uint64_t seed, bool smoke_n2);

// CLI dispatch.  Scale knobs: n, samples, seed; unknown name throws.
Suite run(const std::string& name, int n, int samples, uint64_t seed,
          bool exhaustive);

}  // namespace terfold::verify
