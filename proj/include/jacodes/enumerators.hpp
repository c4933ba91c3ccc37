#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacodes/polynomial.hpp"
#include "jacodes/words.hpp"

namespace jacodes {

// Ordered partition of [n] into pairwise disjoint blocks X_1..X_l covering
// [n], with optional reference sets T_i subset of X_i. 1-based coordinates.
struct SplitSpec {
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> refs;  // empty or one list per block

    static SplitSpec unsplit(int n);
    bool has_refs() const { return !refs.empty(); }
    int block_count() const { return static_cast<int>(blocks.size()); }
    void validate(int n) const;
    SplitSpec with_refs(std::vector<std::vector<int>> r) const;
    // Remove global coordinate i and renumber the remaining coordinates.
    SplitSpec without_coordinate(int i) const;
};

Polynomial cwe(const WordSet& c);
Polynomial hamming_we(const WordSet& c);
Polynomial scwe(const WordSet& c, const SplitSpec& spec);
// 4-variable Jacobi polynomial: w,z track T, x,y track the complement.
Polynomial jacobi(const WordSet& c, const std::vector<int>& T);
Polynomial complete_jacobi(const WordSet& c, const std::vector<int>& T);
Polynomial split_complete_jacobi(const WordSet& c, const SplitSpec& spec);

// MacWilliams substitution x_{X_i,a} -> sum_b chi(ab) x_{X_i,b} (and y alike
// for the Jacobi form), scaled by 1/code_size. With hermitian set, the
// substitution uses chi(a conj(b)) and yields the Hermitian dual's enumerator.
Polynomial macwilliams_scwe(const Polynomial& p, long long code_size, bool hermitian = false);
Polynomial macwilliams_scj(const Polynomial& p, long long code_size, bool hermitian = false);

// (1/divisor) * sum_a x_{block,a} dP/dy_{block,a}
Polynomial polarize(const Polynomial& p, std::uint16_t block, const Rational& divisor);
// Iterated polarization with falling normalization: each round divides by the
// current block-k y-degree (so t rounds divide by v(v-1)...(v-t+1)). Terms
// must agree on that degree.
Polynomial polarize_iterated(const Polynomial& p, std::uint16_t block, int times);

struct Main1Report {
    bool identity_ok = false;        // SCJ decomposition at coordinate i
    bool averaged_ok = false;        // v_k A_k scwe = summed decomposition
    bool homogeneous_applicable = false;  // SCJ independent of i in X_k
    bool homogeneous_ok = false;     // SCJ == A_k scwe
    std::string mismatch;            // first differing monomial, if any
};
Main1Report verify_main1(const LinearCode& c, const SplitSpec& spec, int k, int i);

struct Main2Report {
    bool hypothesis_met = false;  // no nonzero word of weight < t
    bool all_equal = false;       // SCJ == iterated polarization for every T-tuple
    long long tuple_count = 0;
    std::string first_violation;  // T-tuple where equality fails, if any
};
Main2Report verify_main2(const LinearCode& c, const SplitSpec& spec,
                         const std::vector<int>& t);

}  // namespace jacodes
