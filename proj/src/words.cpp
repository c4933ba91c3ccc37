#include "jacodes/words.hpp"

#include <algorithm>
#include <cmath>

namespace jacodes {
namespace {

// In-place row reduction to reduced row echelon form; returns pivot columns.
// Zero rows are dropped.
std::vector<int> row_reduce(const GaloisField& F, std::vector<Word>& rows) {
    std::vector<int> pivots;
    size_t r = 0;
    int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < n && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Elem inv = F.inv(rows[r][c]);
        for (auto& x : rows[r]) x = F.mul(inv, x);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Elem f = rows[i][c];
            for (int j = 0; j < n; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<Word> basis_of(const GaloisField& F, std::vector<Word> rows) {
    row_reduce(F, rows);
    return rows;
}

void check_coordinate(const LinearCode& c, int i) {
    if (i < 1 || i > c.length())
        throw IndexOutOfRange("coordinate " + std::to_string(i) + " outside [1," +
                              std::to_string(c.length()) + "]");
}

Word erase_coordinate(const Word& w, int i0) {
    Word out;
    out.reserve(w.size() - 1);
    for (size_t j = 0; j < w.size(); ++j)
        if (static_cast<int>(j) != i0) out.push_back(w[j]);
    return out;
}

}  // namespace

LinearCode::LinearCode(const GaloisField* field, std::vector<Word> rows, int length) {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != length)
            throw DimensionMismatch("generator row length != code length");
    generator_ = rows;
    row_reduce(*field, generator_);
    int k = static_cast<int>(generator_.size());
    long long sz = 1;
    for (int i = 0; i < k; ++i) {
        sz *= field->q();
        if (sz > kEnumerationCap)
            throw CapExceeded("codeword enumeration exceeds 2^20");
    }
    set_.field = field;
    set_.length = length;
    set_.words.reserve(sz);
    // message vectors in lexicographic order, least significant first
    std::vector<Elem> msg(k, 0);
    Word w(length, 0);
    for (long long m = 0; m < sz; ++m) {
        long long v = m;
        std::fill(w.begin(), w.end(), 0);
        for (int i = 0; i < k; ++i) {
            Elem mi = static_cast<Elem>(v % field->q());
            v /= field->q();
            if (mi == 0) continue;
            for (int j = 0; j < length; ++j)
                w[j] = field->add(w[j], field->mul(mi, generator_[i][j]));
        }
        set_.words.push_back(w);
    }
}

bool LinearCode::contains(const Word& w) const {
    return std::find(set_.words.begin(), set_.words.end(), w) != set_.words.end();
}

Composition composition(const GaloisField& F, const Word& u, const std::vector<int>& X) {
    Composition c(F.q(), 0);
    for (int i : X) {
        if (i < 1 || i > static_cast<int>(u.size()))
            throw IndexOutOfRange("coordinate " + std::to_string(i));
        ++c[u[i - 1]];
    }
    return c;
}

Composition composition(const GaloisField& F, const Word& u) {
    Composition c(F.q(), 0);
    for (Elem x : u) ++c[x];
    return c;
}

int hamming_weight(const Word& u) {
    int w = 0;
    for (Elem x : u) w += (x != 0);
    return w;
}

LinearCode dual(const LinearCode& c, bool hermitian) {
    const GaloisField& F = *c.field();
    if (hermitian && !F.has_square_order())
        throw NotSquareOrder("Hermitian dual needs square field order");
    std::vector<Word> rows = c.generator();
    std::vector<int> pivots = row_reduce(F, rows);
    int n = c.length();
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Word> dual_rows;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Word v(n, 0);
        v[fc] = 1;
        for (size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = F.neg(rows[r][fc]);
        dual_rows.push_back(v);
    }
    if (hermitian) {
        for (auto& row : dual_rows)
            for (auto& x : row) x = F.frobenius_conj(x);
    }
    return LinearCode(&F, dual_rows, n);
}

LinearCode puncture(const LinearCode& c, int i) {
    check_coordinate(c, i);
    std::vector<Word> rows;
    for (const auto& r : c.generator()) rows.push_back(erase_coordinate(r, i - 1));
    return LinearCode(c.field(), rows, c.length() - 1);
}

LinearCode shorten(const LinearCode& c, int i) {
    check_coordinate(c, i);
    std::vector<Word> kept;
    for (const auto& w : c.words().words)
        if (w[i - 1] == 0) kept.push_back(erase_coordinate(w, i - 1));
    return LinearCode(c.field(), basis_of(*c.field(), kept), c.length() - 1);
}

WordSet value_subcode(const LinearCode& c, int i, Elem a) {
    check_coordinate(c, i);
    WordSet out;
    out.field = c.field();
    out.length = c.length() - 1;
    for (const auto& w : c.words().words)
        if (w[i - 1] == a) out.words.push_back(erase_coordinate(w, i - 1));
    return out;
}

Classification classify(const LinearCode& c) {
    const GaloisField& F = *c.field();
    Classification out;
    int n = c.length();
    auto orthogonal = [&](bool hermitian) {
        if (2 * c.dimension() != n) return false;
        for (const auto& r1 : c.generator()) {
            for (const auto& r2 : c.generator()) {
                Elem dot = 0;
                for (int j = 0; j < n; ++j) {
                    Elem b = hermitian ? F.frobenius_conj(r2[j]) : r2[j];
                    dot = F.add(dot, F.mul(r1[j], b));
                }
                if (dot != 0) return false;
            }
        }
        return true;
    };
    out.self_dual = orthogonal(false);
    out.hermitian_self_dual = F.has_square_order() && orthogonal(true);
    if (F.q() == 3 && out.self_dual && n % 4 == 0) {
        out.type3 = true;
        for (const auto& w : c.words().words)
            if (hamming_weight(w) % 3 != 0) out.type3 = false;
    }
    if (F.q() == 4 && out.hermitian_self_dual) {
        out.type4 = true;
        for (const auto& w : c.words().words)
            if (hamming_weight(w) % 2 != 0) out.type4 = false;
    }
    return out;
}

}  // namespace jacodes
