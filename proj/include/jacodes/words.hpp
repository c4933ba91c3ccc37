#pragma once

#include <vector>

#include "jacodes/gf.hpp"

namespace jacodes {

using Word = std::vector<Elem>;

// Per-element coordinate counts of a word on a coordinate set.
using Composition = std::vector<int>;

// Enumerated set of equal-length words over one field. Linear codes and the
// (generally non-linear) derived sets C+i_a share this type so that every
// enumerator accepts both.
struct WordSet {
    const GaloisField* field = nullptr;
    int length = 0;
    std::vector<Word> words;

    long long size() const { return static_cast<long long>(words.size()); }
};

// Codeword enumeration is materialized eagerly; reject above this size.
inline constexpr long long kEnumerationCap = 1LL << 20;

class LinearCode {
  public:
    // Rows are row-reduced; enumeration is lexicographic in message order.
    LinearCode(const GaloisField* field, std::vector<Word> rows, int length);

    const GaloisField* field() const { return set_.field; }
    int length() const { return set_.length; }
    int dimension() const { return static_cast<int>(generator_.size()); }
    const std::vector<Word>& generator() const { return generator_; }
    const WordSet& words() const { return set_; }
    long long size() const { return set_.size(); }

    bool contains(const Word& w) const;

  private:
    std::vector<Word> generator_;
    WordSet set_;
};

struct Classification {
    bool self_dual = false;
    bool hermitian_self_dual = false;
    bool type3 = false;
    bool type4 = false;
};

// Coordinates are 1-based at this interface (matching [n]); internals are 0-based.
Composition composition(const GaloisField& F, const Word& u, const std::vector<int>& X);
Composition composition(const GaloisField& F, const Word& u);

int hamming_weight(const Word& u);

LinearCode dual(const LinearCode& c, bool hermitian = false);
LinearCode puncture(const LinearCode& c, int i);
LinearCode shorten(const LinearCode& c, int i);
WordSet value_subcode(const LinearCode& c, int i, Elem a);

Classification classify(const LinearCode& c);

}  // namespace jacodes
