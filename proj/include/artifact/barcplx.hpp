#pragma once

#include "artifact/steinberg.hpp"
#include "artifact/sympoly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace stq {

// letters are apartments of the subspaces they span; a line letter is a one-point key
using Word = std::vector<AptKey>;
using BarElement = LinComb<Word>;
using BarSym = std::map<Mono, BarElement>;

Word line_word(const std::vector<Vec>& pts, int* sign = nullptr);
BarElement make_word(const std::vector<StElement>& letters);
bool is_line_word(const Word& w);

// letters rewritten in the echelon flag normal form of their spans
BarElement bar_normalize(const BarElement& x);
BarElement bar_differential(const BarElement& x);
BarElement bar_shuffle(const BarElement& a, const BarElement& b);
std::vector<std::pair<Word, Word>> deconcat(const Word& w);
BarElement p_H_project(const BarElement& x, const Vec& h);
// representative modulo the span of nontrivial shuffles of the occurring letters
BarElement shuffle_span_reduce(const BarElement& x);

void barsym_add(BarSym& x, const BarSym& y, const Q& c = 1);
bool barsym_empty(const BarSym& x);

std::string to_string(const Word& w);
std::string to_string(const BarElement& x);

} // namespace stq
