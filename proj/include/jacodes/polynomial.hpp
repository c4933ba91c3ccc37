#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "jacodes/gf.hpp"

namespace jacodes {

enum class VarKind : std::uint8_t { X = 0, Y = 1 };

// Structured variable: block index (1-based; 1 for unsplit polynomials),
// kind (x or y) and the field element labelling it. Total order is
// (block, kind, element) in the canonical element order.
struct VarKey {
    std::uint16_t block;
    VarKind kind;
    Elem elem;

    std::uint32_t packed() const {
        return (static_cast<std::uint32_t>(block) << 16) |
               (static_cast<std::uint32_t>(kind) << 8) | elem;
    }
    friend bool operator==(VarKey a, VarKey b) { return a.packed() == b.packed(); }
    friend bool operator!=(VarKey a, VarKey b) { return !(a == b); }
    friend bool operator<(VarKey a, VarKey b) { return a.packed() < b.packed(); }
};

inline VarKey xvar(Elem e, std::uint16_t block = 1) { return {block, VarKind::X, e}; }
inline VarKey yvar(Elem e, std::uint16_t block = 1) { return {block, VarKind::Y, e}; }

// Sparse exponent vector; keys sorted, exponents positive.
class Monomial {
  public:
    Monomial() = default;

    void set(VarKey v, int exp);     // exp 0 removes
    int exponent(VarKey v) const;
    int total_degree() const;
    int degree_of(std::uint16_t block, VarKind kind) const;
    bool empty() const { return e_.empty(); }
    const std::vector<std::pair<VarKey, int>>& factors() const { return e_; }

    Monomial times(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

    // Term order used for storage and rendering: higher total degree first,
    // then, scanning variables in VarKey order, higher exponent first. On
    // homogeneous polynomials this matches the grouped order used in the
    // reference displays (x-part first, earlier elements first).
    struct Order {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };

  private:
    std::vector<std::pair<VarKey, int>> e_;
};

// Sparse exact multivariate polynomial over Q(zeta_N). The field pointer
// fixes the variable alphabet (which element labels are legal).
class Polynomial {
  public:
    Polynomial() : field_(nullptr), order_(Cyclotomic::kDefaultOrder) {}
    explicit Polynomial(const GaloisField* field, int order = Cyclotomic::kDefaultOrder)
        : field_(field), order_(order) {}

    static Polynomial monomial(const GaloisField* field, const Monomial& m,
                               const Cyclotomic& c);
    static Polynomial constant(const GaloisField* field, const Cyclotomic& c);

    const GaloisField* field() const { return field_; }
    int cyclotomic_order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Cyclotomic, Monomial::Order>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Cyclotomic& c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Cyclotomic& c) const;
    Polynomial scaled(const Rational& r) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Simultaneous substitution, fully expanded. Every variable occurring in
    // the polynomial must have a rule.
    Polynomial substitute_linear(const std::map<VarKey, Polynomial>& rules) const;
    Polynomial partial_derivative(VarKey v) const;
    // Variable-merging specialization; a rule must keep the kind.
    Polynomial specialize(const std::map<VarKey, VarKey>& merge) const;
    // x <-> y rename on every variable.
    Polynomial kind_flipped() const;

    Cyclotomic coefficient_of(const Monomial& m) const;
    Cyclotomic evaluate(const std::map<VarKey, Cyclotomic>& assignment) const;
    // All variables that occur.
    std::vector<VarKey> variables() const;
    // Asserts all coefficients are rational integers (and returns *this).
    const Polynomial& demote_to_integers() const;

    // Naming styles for text rendering.
    enum class Style { Plain, Jacobi, Hamming };
    std::string str(Style style = Style::Plain) const;
    std::string var_name(VarKey v, Style style = Style::Plain) const;

    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

  private:
    void check_compatible(const Polynomial& o) const;

    const GaloisField* field_;
    int order_;
    std::map<Monomial, Cyclotomic, Monomial::Order> terms_;
};

}  // namespace jacodes
