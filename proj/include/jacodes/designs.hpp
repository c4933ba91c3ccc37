#pragma once

#include <string>
#include <vector>

#include "jacodes/enumerators.hpp"
#include "jacodes/words.hpp"

namespace jacodes {

// Sorted tuple of colors (field elements); one per block in the generalized case.
using ColorMultiset = std::vector<Elem>;
using MultisetTuple = std::vector<ColorMultiset>;
// A reference-set tuple: one coordinate list per block.
using RefTuple = std::vector<std::vector<int>>;

struct ColoredDesignQuery {
    const WordSet* code = nullptr;
    SplitSpec spec;                      // unsplit for plain colored designs
    std::vector<Composition> comp;       // target composition per block
    std::vector<int> t;                  // strength per block
    bool cross_check = true;             // verify against SCJ T-independence
};

struct DesignReport {
    long long block_count = 0;
    bool is_design = false;
    bool degenerate = false;  // empty or single-block set
    std::vector<Composition> palette;      // per-block per-color counts (the s_i)
    std::vector<MultisetTuple> multisets;  // canonical order of color-multiset tuples

    struct Group {
        std::vector<long long> lambda;  // indexed like `multisets`
        std::vector<RefTuple> members;  // T-tuples with this lambda vector
    };
    // Canonically ordered by (member count, lexicographically smallest member).
    std::vector<Group> groups;
    std::vector<long long> lambda_max;
    std::vector<long long> lambda_min;

    std::string multiset_label(const GaloisField& F, size_t slot) const;
};

DesignReport colored_design_check(const WordSet& code, const Composition& comp, int t);
DesignReport generalized_colored_design_check(const ColoredDesignQuery& query);

struct LambdaTable {
    int t = 0;
    std::vector<ColorMultiset> columns;
    struct Row {
        std::string label;
        std::vector<long long> values;
    };
    std::vector<Row> rows;
    std::vector<DesignReport> reports;  // one per composition in the class
};
LambdaTable lambda_table(const WordSet& code, const std::vector<Composition>& comps, int t);

struct PackingCovering {
    long long block_count = 0;
    std::vector<long long> lambda_max;
    std::vector<long long> lambda_min;
    std::string statement;  // D_{...} <= |B| <= C_{...} rendering
};
PackingCovering packing_covering_params(const DesignReport& report, const GaloisField& F,
                                        int v, int t);

struct ScanReport {
    int t_max = 0;
    int delta_c = 0;  // largest t with every realized composition a design
    int s_c = 0;      // largest t with some realized composition a design
    bool delta_capped = false;
    bool s_capped = false;
    struct Entry {
        Composition comp;
        int t = 0;
        bool is_design = false;
        bool degenerate = false;
        long long blocks = 0;
    };
    std::vector<Entry> entries;
};
ScanReport homogeneity_scan(const WordSet& code, int t_max);

}  // namespace jacodes
