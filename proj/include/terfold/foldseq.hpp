#pragma once

// Symbolic folding sequences: the T recurrence, reversal, residue laws,
// Lambda extraction and sequence-level derivation.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace terfold {

struct NotFolding : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AmbiguousWindow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fold signs lambda_1..lambda_n, each +1 or -1 (1-based in the math,
// entries[0] = lambda_1 here).
struct Lambda {
    std::vector<int8_t> entries;

    size_t size() const { return entries.size(); }
    int8_t at1(size_t k) const { return entries.at(k - 1); }  // lambda_k

    static Lambda parse(const std::string& s);
    std::string str() const;

    friend bool operator==(const Lambda& x, const Lambda& y) {
        return x.entries == y.entries;
    }
};

// A turn sequence window.  signs[i] is the turn s_{origin_index + i}; for a
// bounded curve produced by gen_T the origin_index is 1 (the turn s_1).
struct FoldSeq {
    std::vector<int8_t> signs;
    int64_t origin_index = 1;

    size_t size() const { return signs.size(); }
    // Sign at absolute position h; h must be stored.
    int8_t at_abs(int64_t h) const { return signs.at((size_t)(h - origin_index)); }
    bool has_abs(int64_t h) const {
        return h >= origin_index && h < origin_index + (int64_t)signs.size();
    }

    static FoldSeq parse(const std::string& s, int64_t origin_index = 1);
    std::string str() const;

    friend bool operator==(const FoldSeq& x, const FoldSeq& y) {
        return x.signs == y.signs && x.origin_index == y.origin_index;
    }
};

// I/M/S position marks (which third of the next level a curve occupies).
enum class Mark : char { I = 'I', M = 'M', S = 'S' };

struct PSeq {
    std::vector<Mark> entries;
    static PSeq parse(const std::string& s);
    std::string str() const;
};

// T_{lambda_1..lambda_n} by the recurrence T' = (T, lam, T, -lam, T).
// Length 3^n - 1; gen_T(Lambda_n) is a prefix of gen_T(Lambda_{n+1}).
FoldSeq gen_T(const Lambda& lambda);

// Reverse the list and negate every entry; T sequences are fixed points.
FoldSeq bar(const FoldSeq& s);

// Admissible residues of the level-k law s_{h+3^k+3^{k+1}i} = -s_{h+2*3^k+3^{k+1}j}.
// A residue is admissible when the window has at least one constrained
// position on each side and all of them carry the constant sign pattern.
struct ResidueCandidate {
    int64_t h = 0;      // residue mod 3^{k+1}
    int8_t eps = 0;     // sign at positions h + 3^k + 3^{k+1} i
    int64_t n_plus = 0;
    int64_t n_minus = 0;
};

struct ResidueLevel {
    int k = 0;
    bool constrained = false;  // some residue testable on both sides
    std::vector<ResidueCandidate> admissible;
};

std::vector<ResidueLevel> residue_check(const FoldSeq& window, int k_max);

// Lambda prefix recovered from a window plus the residue chain that selected
// it.  Stops early at the first unconstrained level.
struct ExtractResult {
    Lambda lambda;
    std::vector<int64_t> chain;  // chain[k] = residue mod 3^{k+1}
    std::vector<ResidueLevel> trace;
    int levels_determined = 0;
};

ExtractResult extract_lambda(const FoldSeq& window, int k_max);

// Finite-window verdicts for the two complete-curve readings: a window can only ever be
// *consistent with* one of the readings, never certify it.
enum class WindowCase { CaseA, CaseB, Undetermined };

struct ClassifyWindowResult {
    WindowCase verdict = WindowCase::Undetermined;
    std::optional<int64_t> center;  // best-evidence in-window common center
    std::vector<int64_t> centers;   // every consistent center, best first
    std::string note;
};

ClassifyWindowResult classify_window(const FoldSeq& window, int horizon);

// Subsequence at positions congruent to h mod 3 (the derivation on turn
// sequences); delta_seq(gen_T(l1..ln)) = gen_T(l2..ln).
FoldSeq delta_seq(const FoldSeq& s, int h = 0);

int64_t pow3(int k);

}  // namespace terfold
