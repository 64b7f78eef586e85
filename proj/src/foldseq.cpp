#include "terfold/foldseq.hpp"

#include <algorithm>

namespace terfold {

int64_t pow3(int k) {
    int64_t r = 1;
    for (int i = 0; i < k; ++i) r *= 3;
    return r;
}

static int8_t parse_sign(char c) {
    if (c == '+') return +1;
    if (c == '-') return -1;
    throw std::invalid_argument(std::string("bad sign character '") + c + "'");
}

Lambda Lambda::parse(const std::string& s) {
    Lambda out;
    out.entries.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        // Accept U+2212 minus as well as ASCII.
        if ((unsigned char)s[i] == 0xe2 && i + 2 < s.size() &&
            (unsigned char)s[i + 1] == 0x88 && (unsigned char)s[i + 2] == 0x92) {
            out.entries.push_back(-1);
            i += 2;
            continue;
        }
        out.entries.push_back(parse_sign(s[i]));
    }
    return out;
}

std::string Lambda::str() const {
    std::string s;
    s.reserve(entries.size());
    for (int8_t e : entries) s.push_back(e > 0 ? '+' : '-');
    return s;
}

FoldSeq FoldSeq::parse(const std::string& s, int64_t origin_index) {
    FoldSeq out;
    out.origin_index = origin_index;
    out.signs = Lambda::parse(s).entries;
    return out;
}

std::string FoldSeq::str() const {
    std::string s;
    s.reserve(signs.size());
    for (int8_t e : signs) s.push_back(e > 0 ? '+' : '-');
    return s;
}

PSeq PSeq::parse(const std::string& s) {
    PSeq out;
    out.entries.reserve(s.size());
    for (char c : s) {
        if (c != 'I' && c != 'M' && c != 'S')
            throw std::invalid_argument("P-sequence entries must be I, M or S");
        out.entries.push_back(static_cast<Mark>(c));
    }
    return out;
}

std::string PSeq::str() const {
    std::string s;
    for (Mark m : entries) s.push_back(static_cast<char>(m));
    return s;
}

FoldSeq gen_T(const Lambda& lambda) {
    std::vector<int8_t> cur;
    for (int8_t lam : lambda.entries) {
        std::vector<int8_t> next;
        next.reserve(cur.size() * 3 + 2);
        next.insert(next.end(), cur.begin(), cur.end());
        next.push_back(lam);
        next.insert(next.end(), cur.begin(), cur.end());
        next.push_back((int8_t)-lam);
        next.insert(next.end(), cur.begin(), cur.end());
        cur = std::move(next);
    }
    return FoldSeq{std::move(cur), 1};
}

FoldSeq bar(const FoldSeq& s) {
    FoldSeq out;
    out.origin_index = s.origin_index;
    out.signs.reserve(s.signs.size());
    for (auto it = s.signs.rbegin(); it != s.signs.rend(); ++it)
        out.signs.push_back((int8_t)-*it);
    return out;
}

std::vector<ResidueLevel> residue_check(const FoldSeq& window, int k_max) {
    std::vector<ResidueLevel> out;
    out.reserve((size_t)k_max + 1);
    const int64_t o = window.origin_index;
    const int64_t L = (int64_t)window.signs.size();
    for (int k = 0; k <= k_max; ++k) {
        const int64_t step = pow3(k);
        const int64_t mod = 3 * step;
        ResidueLevel lvl;
        lvl.k = k;
        // plus[h]: positions == h + 3^k (mod 3^{k+1}); minus[h]: h + 2*3^k.
        struct Side {
            int64_t count = 0;
            int8_t sign = 0;
            bool constant = true;
        };
        std::vector<Side> plus((size_t)mod), minus((size_t)mod);
        for (int64_t i = 0; i < L; ++i) {
            const int64_t p = o + i;
            const int8_t s = window.signs[(size_t)i];
            const int64_t m = ((p % mod) + mod) % mod;
            auto feed = [&](std::vector<Side>& side, int64_t h) {
                Side& sd = side[(size_t)h];
                if (sd.count == 0)
                    sd.sign = s;
                else if (sd.sign != s)
                    sd.constant = false;
                ++sd.count;
            };
            feed(plus, ((m - step) % mod + mod) % mod);
            feed(minus, ((m - 2 * step) % mod + mod) % mod);
        }
        for (int64_t h = 0; h < mod; ++h) {
            const Side& pl = plus[(size_t)h];
            const Side& mi = minus[(size_t)h];
            if (pl.count == 0 || mi.count == 0) continue;
            lvl.constrained = true;
            if (pl.constant && mi.constant && pl.sign == -mi.sign)
                lvl.admissible.push_back({h, pl.sign, pl.count, mi.count});
        }
        out.push_back(std::move(lvl));
    }
    return out;
}

ExtractResult extract_lambda(const FoldSeq& window, int k_max) {
    ExtractResult res;
    res.trace = residue_check(window, k_max);

    struct Chain {
        int64_t h;  // residue mod 3^{k+1} at the last processed level
        std::vector<int8_t> eps;
    };
    std::vector<Chain> chains;
    for (int k = 0; k <= k_max; ++k) {
        const ResidueLevel& lvl = res.trace[(size_t)k];
        if (!lvl.constrained) break;  // window exhausted; return the prefix
        if (lvl.admissible.empty())
            throw NotFolding("empty residue set at level " + std::to_string(k));
        std::vector<Chain> next;
        if (k == 0) {
            for (const auto& c : lvl.admissible) next.push_back({c.h, {c.eps}});
        } else {
            const int64_t prev_mod = pow3(k);
            for (const Chain& ch : chains) {
                for (const auto& c : lvl.admissible) {
                    if (((c.h % prev_mod) + prev_mod) % prev_mod == ch.h) {
                        Chain ext = ch;
                        ext.h = c.h;
                        ext.eps.push_back(c.eps);
                        next.push_back(std::move(ext));
                    }
                }
            }
        }
        if (next.empty())
            throw NotFolding("no nested residue chain at level " + std::to_string(k));
        chains = std::move(next);
        res.levels_determined = k + 1;
    }
    if (chains.empty())
        throw AmbiguousWindow("window too short to constrain any level");
    if (chains.size() > 1)
        throw AmbiguousWindow("several residue chains survive; enlarge the window");
    res.lambda.entries = chains.front().eps;
    res.chain.resize((size_t)res.levels_determined);
    for (int k = 0; k < res.levels_determined; ++k) {
        const int64_t mod = pow3(k + 1);
        res.chain[(size_t)k] = ((chains.front().h % mod) + mod) % mod;
    }
    return res;
}

ClassifyWindowResult classify_window(const FoldSeq& window, int horizon) {
    ClassifyWindowResult out;
    auto levels = residue_check(window, horizon);
    for (const auto& lvl : levels) {
        if (!lvl.constrained) {
            out.verdict = WindowCase::Undetermined;
            out.note = "level " + std::to_string(lvl.k) +
                       " unconstrained; window too short for this horizon";
            return out;
        }
        if (lvl.admissible.empty())
            throw NotFolding("empty residue set at level " + std::to_string(lvl.k));
    }
    // A case-a center h must itself be in the window and satisfy every
    // level's residue law (the center position is the unconstrained class).
    // Short windows can admit several readings; rank by total evidence.
    const int64_t lo = window.origin_index;
    const int64_t hi = window.origin_index + (int64_t)window.signs.size() - 1;
    std::vector<std::pair<int64_t, int64_t>> ranked;  // (-evidence, h)
    for (int64_t h = lo; h <= hi; ++h) {
        bool ok = true;
        int64_t evidence = 0;
        for (const auto& lvl : levels) {
            const int64_t mod = 3 * pow3(lvl.k);
            const int64_t r = ((h % mod) + mod) % mod;
            bool adm = false;
            for (const auto& c : lvl.admissible)
                if (c.h == r) {
                    adm = true;
                    evidence += c.n_plus + c.n_minus;
                }
            if (!adm) {
                ok = false;
                break;
            }
        }
        if (ok) ranked.push_back({-evidence, h});
    }
    std::sort(ranked.begin(), ranked.end());
    if (!ranked.empty()) {
        out.verdict = WindowCase::CaseA;
        for (auto [neg, h] : ranked) out.centers.push_back(h);
        out.center = out.centers.front();
        out.note = "consistent with (bar T, s_h, T) centered at h=" +
                   std::to_string(*out.center) + " with center sign " +
                   (window.at_abs(*out.center) > 0 ? "+" : "-") +
                   "; a finite window cannot certify";
    } else {
        out.verdict = WindowCase::CaseB;
        out.note = "per-level centers leave the window; consistent with an "
                   "increasing union of n-folding curves";
    }
    return out;
}

FoldSeq delta_seq(const FoldSeq& s, int h) {
    if (h < 0 || h > 2) throw BadResidue("h must be a residue mod 3");
    auto rc = residue_check(s, 0);
    bool ok = false;
    for (const auto& c : rc.at(0).admissible) ok |= (c.h == h);
    if (!ok) throw BadResidue("h fails residue_check at k=0");
    FoldSeq out;
    const int64_t lo = s.origin_index;
    const int64_t hi = s.origin_index + (int64_t)s.signs.size() - 1;
    // First kept position p >= lo with p == h (mod 3).
    int64_t p = lo + ((h - lo) % 3 + 3) % 3;
    out.origin_index = (p - h) / 3;
    for (; p <= hi; p += 3) out.signs.push_back(s.at_abs(p));
    return out;
}

}  // namespace terfold
