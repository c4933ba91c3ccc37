#pragma once

#include <string>
#include <vector>

#include "jacodes/rational.hpp"

namespace jacodes {

// Shared immutable data for Q(zeta_N): the N-th cyclotomic polynomial and
// reduced representations of every power zeta^m, m < N. Instances live in a
// process-wide registry keyed by N; order equality is pointer equality.
class CycBasis {
  public:
    static const CycBasis* get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }
    // zeta^m reduced mod Phi_N, 0 <= m < N
    const std::vector<Rational>& power(int m) const { return powers_[m]; }
    const std::vector<long long>& cyclotomic_poly() const { return phi_; }

  private:
    explicit CycBasis(int order);

    int order_;
    int degree_;
    std::vector<long long> phi_;                   // monic, low coeff first
    std::vector<std::vector<Rational>> powers_;    // zeta^m for m in [0, N)
};

// Exact element of Q(zeta_N) in the basis 1, zeta, ..., zeta^{d-1} with
// d = deg Phi_N. Always reduced; equality is coefficientwise.
class Cyclotomic {
  public:
    static constexpr int kDefaultOrder = 12;

    Cyclotomic() : Cyclotomic(Rational(0), kDefaultOrder) {}
    Cyclotomic(const Rational& r, int order = kDefaultOrder);
    Cyclotomic(long long n) : Cyclotomic(Rational(n), kDefaultOrder) {}  // NOLINT

    // zeta_N^power embedded in Q(zeta_N)
    static Cyclotomic root(int order, int power);
    // zeta_p^power embedded in Q(zeta_N); requires p | N
    static Cyclotomic prime_root(int p, long long power, int order = kDefaultOrder);

    int order() const { return basis_->order(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // throws NonIntegerCoefficient if not rational
    bool is_integer() const;
    long long integer_value() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic scaled(const Rational& r) const;
    Cyclotomic inverse() const;  // throws DivisionByZero on zero
    // Galois conjugation zeta -> zeta^k, gcd(k, N) = 1
    Cyclotomic galois(int k) const;
    Cyclotomic conj() const { return galois(order() - 1); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Rendering as a rational polynomial in z (= zeta_N), e.g. "1/3*z + 2".
    std::string str() const;
    // Compact canonical form used for hashing and serialization.
    std::string key() const;
    static Cyclotomic parse(const std::string& text, int order = kDefaultOrder);

  private:
    Cyclotomic(const CycBasis* basis, std::vector<Rational> c)
        : basis_(basis), c_(std::move(c)) {}

    static void check_same(const Cyclotomic& a, const Cyclotomic& b);

    const CycBasis* basis_;
    std::vector<Rational> c_;
};

}  // namespace jacodes
