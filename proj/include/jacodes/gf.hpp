#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacodes/cyclotomic.hpp"

namespace jacodes {

using Elem = std::uint8_t;

// GF(p^f) in the polynomial basis over GF(p): elements are indices
// a0 + a1*p + ... + a_{f-1}*p^{f-1}, which is also the canonical enumeration
// order (zero first). The modulus must be monic, irreducible and, for f >= 2,
// primitive (the class of the basis root generates the multiplicative group).
class GaloisField {
  public:
    GaloisField(int p, int f, std::vector<int> modulus_poly);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem sub(Elem a, Elem b) const { return add_[idx(a, neg_[b])]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem inv(Elem a) const;

    bool has_square_order() const { return sqrt_q_ > 0; }
    // Frobenius conjugation a -> a^sqrt(q); requires q to be a square.
    Elem frobenius_conj(Elem a) const;

    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(const std::vector<int>& cs) const;

    // chi_b(a) = zeta_p^(a0 b0 + ... + a_{f-1} b_{f-1}) in Q(zeta_order)
    Cyclotomic character(Elem b, Elem a, int order = Cyclotomic::kDefaultOrder) const;
    // sum_{b in F_q} chi(a b): equals q for a = 0 and 0 otherwise
    Cyclotomic character_sum_check(Elem a, int order = Cyclotomic::kDefaultOrder) const;

    std::string label(Elem a) const;
    Elem parse_label(const std::string& s) const;

    // Canonical instances used throughout the catalog.
    static const GaloisField& gf3();
    static const GaloisField& gf4();

  private:
    size_t idx(Elem a, Elem b) const { return static_cast<size_t>(a) * q_ + b; }
    Elem raw_mul(Elem a, Elem b) const;
    void validate() const;

    int p_, f_, q_, sqrt_q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_, mul_, neg_, inv_, frob_;
    std::vector<std::string> labels_;
};

// Value wrapper pairing an element with its field, for callers that want
// ordinary operator syntax instead of table lookups.
struct FieldElement {
    const GaloisField* field;
    Elem v;

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->add(a.v, b.v)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->sub(a.v, b.v)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check(a, b);
        return {a.field, a.field->mul(a.v, b.v)};
    }
    FieldElement operator-() const { return {field, field->neg(v)}; }
    FieldElement inv() const { return {field, field->inv(v)}; }
    friend bool operator==(FieldElement a, FieldElement b) {
        check(a, b);
        return a.v == b.v;
    }

    static void check(FieldElement a, FieldElement b) {
        if (a.field != b.field) throw AlphabetMismatch("elements of different fields");
    }
};

}  // namespace jacodes
