#include "artifact/barcplx.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace stq {

Word line_word(const std::vector<Vec>& pts, int* sign) {
    Word w;
    for (auto& p : pts) w.push_back({canonical_point(p)});
    if (sign) *sign = 1;
    return w;
}

bool is_line_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](const AptKey& k) { return k.size() == 1; });
}

BarElement make_word(const std::vector<StElement>& letters) {
    BarElement acc{{Word{}, Q(1)}};
    for (auto& l : letters) {
        BarElement next;
        for (auto& [w, c] : acc)
            for (auto& [k, lc] : l) {
                Word nw = w;
                nw.push_back(k);
                lc_add(next, nw, c * lc);
            }
        acc = std::move(next);
    }
    return acc;
}

BarElement bar_normalize(const BarElement& x) {
    BarElement out;
    for (auto& [w, c] : x) {
        std::vector<StElement> letters;
        for (auto& k : w) letters.push_back(normal_form(StElement{{k, Q(1)}}));
        lc_add(out, make_word(letters), c);
    }
    return out;
}

BarElement bar_differential(const BarElement& x) {
    BarElement out;
    for (auto& [w, c] : x) {
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            std::vector<StElement> letters;
            for (size_t i = 0; i < w.size(); ++i) {
                if (i == j) {
                    letters.push_back(st_multiply(StElement{{w[i], Q(1)}}, StElement{{w[i + 1], Q(1)}}));
                    ++i;
                } else {
                    letters.push_back(StElement{{w[i], Q(1)}});
                }
            }
            lc_add(out, make_word(letters), c * (j % 2 ? -1 : 1));
        }
    }
    return bar_normalize(out);
}

namespace {

// all interleavings of a and b, as position masks of a
template <class F>
void for_each_shuffle(size_t na, size_t nb, F&& f) {
    std::vector<bool> mask(na + nb, false);
    std::fill(mask.begin(), mask.begin() + na, true);
    do {
        f(mask);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

template <class T>
std::vector<T> interleave(const std::vector<T>& a, const std::vector<T>& b, const std::vector<bool>& mask) {
    std::vector<T> r;
    size_t ia = 0, ib = 0;
    for (bool m : mask) r.push_back(m ? a[ia++] : b[ib++]);
    return r;
}

} // namespace

BarElement bar_shuffle(const BarElement& a, const BarElement& b) {
    BarElement out;
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b)
            for_each_shuffle(wa.size(), wb.size(),
                             [&](const std::vector<bool>& m) { lc_add(out, interleave(wa, wb, m), ca * cb); });
    return out;
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> r;
    for (size_t i = 0; i <= w.size(); ++i) r.push_back({Word(w.begin(), w.begin() + i), Word(w.begin() + i, w.end())});
    return r;
}

BarElement p_H_project(const BarElement& x, const Vec& h) {
    BarElement out;
    for (auto& [w, c] : x) {
        if (!is_line_word(w)) throw std::invalid_argument("p_H_project: word has a letter that is not a line");
        bool keep = std::all_of(w.begin(), w.end(), [&](const AptKey& k) { return dot(h, to_vec(k[0])) != 0; });
        if (keep) lc_add(out, w, c);
    }
    return out;
}

namespace {

struct ShuffleSpan {
    std::vector<std::vector<int>> words; // lexicographic
    std::map<std::vector<int>, int> index;
    Mat rows;                            // rref of all nontrivial shuffles
    std::vector<int> pivots;
};

const ShuffleSpan& shuffle_span(const std::vector<int>& labels) {
    static std::mutex mu;
    static std::map<std::vector<int>, ShuffleSpan> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(labels);
    if (it != cache.end()) return it->second;
    ShuffleSpan s;
    std::vector<int> w = labels;
    do {
        s.index[w] = (int)s.words.size();
        s.words.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    Mat gens;
    size_t m = labels.size();
    for (auto& word : s.words)
        for (size_t i = 1; i < m; ++i) {
            std::vector<int> a(word.begin(), word.begin() + i), b(word.begin() + i, word.end());
            Vec row(s.words.size());
            for_each_shuffle(a.size(), b.size(), [&](const std::vector<bool>& mk) { row[s.index[interleave(a, b, mk)]] += 1; });
            gens.push_back(row);
        }
    if (!gens.empty()) s.rows = rref(gens, &s.pivots);
    return cache.emplace(labels, std::move(s)).first->second;
}

} // namespace

BarElement shuffle_span_reduce(const BarElement& x) {
    std::map<Word, std::vector<std::pair<Word, Q>>> groups;
    for (auto& [w, c] : x) {
        Word key = w;
        std::sort(key.begin(), key.end());
        groups[key].push_back({w, c});
    }
    BarElement out;
    for (auto& [sorted, terms] : groups) {
        if (sorted.size() <= 1) {
            for (auto& [w, c] : terms) lc_add(out, w, c);
            continue;
        }
        std::vector<AptKey> distinct;
        std::vector<int> labels;
        for (auto& k : sorted) {
            if (distinct.empty() || distinct.back() != k) distinct.push_back(k);
            labels.push_back((int)distinct.size() - 1);
        }
        const ShuffleSpan& sp = shuffle_span(labels);
        Vec v(sp.words.size());
        for (auto& [w, c] : terms) {
            std::vector<int> lw;
            for (auto& k : w) lw.push_back((int)(std::lower_bound(distinct.begin(), distinct.end(), k) - distinct.begin()));
            v[sp.index.at(lw)] += c;
        }
        for (size_t r = 0; r < sp.rows.size(); ++r) {
            Q f = v[sp.pivots[r]];
            if (f == 0) continue;
            for (size_t j = 0; j < v.size(); ++j)
                if (sp.rows[r][j] != 0) v[j] -= f * sp.rows[r][j];
        }
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            Word w;
            for (int l : sp.words[j]) w.push_back(distinct[l]);
            lc_add(out, w, v[j]);
        }
    }
    return out;
}

void barsym_add(BarSym& x, const BarSym& y, const Q& c) {
    for (auto& [m, b] : y) {
        auto& slot = x[m];
        lc_add(slot, b, c);
        if (slot.empty()) x.erase(m);
    }
}

bool barsym_empty(const BarSym& x) {
    return std::all_of(x.begin(), x.end(), [](auto& kv) { return kv.second.empty(); });
}

std::string to_string(const Word& w) {
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "|";
        s += w[i].size() == 1 ? to_string(w[i][0]) : to_string(w[i]);
    }
    return s + "]";
}

std::string to_string(const BarElement& x) {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [w, c] : x) {
        if (!first) s += " + ";
        first = false;
        s += to_string(c) + "*" + to_string(w);
    }
    return s;
}

} // namespace stq
