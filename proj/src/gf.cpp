#include "jacodes/gf.hpp"

#include <algorithm>
#include <cmath>

namespace jacodes {
namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

GaloisField::GaloisField(int p, int f, std::vector<int> modulus_poly)
    : p_(p), f_(f), modulus_(std::move(modulus_poly)) {
    if (!is_prime(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
    if (f_ < 1) throw Error("extension degree must be >= 1");
    if (static_cast<int>(modulus_.size()) != f_ + 1 || modulus_.back() != 1)
        throw Error("modulus must be monic of degree f");
    for (auto& c : modulus_) c = ((c % p_) + p_) % p_;

    long long qq = 1;
    for (int i = 0; i < f_; ++i) qq *= p_;
    if (qq > 255) throw Error("field too large (q > 255)");
    q_ = static_cast<int>(qq);
    int r = static_cast<int>(std::llround(std::sqrt(static_cast<double>(q_))));
    sqrt_q_ = (r * r == q_) ? r : 0;

    validate();

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto ca = coeffs(static_cast<Elem>(a));
        std::vector<int> cn(f_);
        for (int i = 0; i < f_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = from_coeffs(cn);
        for (int b = 0; b < q_; ++b) {
            auto cb = coeffs(static_cast<Elem>(b));
            std::vector<int> cs(f_);
            for (int i = 0; i < f_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[idx(a, b)] = from_coeffs(cs);
            mul_[idx(a, b)] = raw_mul(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) inv_[a] = static_cast<Elem>(b);

    if (sqrt_q_ > 0) {
        frob_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            Elem r1 = 1;
            for (int i = 0; i < sqrt_q_; ++i) r1 = mul_[idx(r1, a)];
            frob_[a] = r1;
        }
    }

    labels_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        if (f_ == 1) {
            labels_[a] = std::to_string(a);
        } else if (p_ == 2 && f_ == 2) {
            static const char* gf4[] = {"0", "1", "s", "s2"};
            labels_[a] = gf4[a];
        } else {
            labels_[a] = "e" + std::to_string(a);
        }
    }
}

Elem GaloisField::raw_mul(Elem a, Elem b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<int> prod(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    for (int d = static_cast<int>(prod.size()) - 1; d >= f_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int k = 0; k < f_; ++k)
            prod[d - f_ + k] = ((prod[d - f_ + k] - c * modulus_[k]) % p_ + p_) % p_;
    }
    prod.resize(f_);
    return from_coeffs(prod);
}

void GaloisField::validate() const {
    if (f_ == 1) return;  // any monic degree-1 modulus defines the prime field
    // Irreducibility: no roots in GF(p); for f == 4 additionally no monic
    // quadratic factors (trial division). f <= 3 reducible implies a root.
    for (int x = 0; x < p_; ++x) {
        long long v = 0, xp = 1;
        for (int i = 0; i <= f_; ++i) {
            v = (v + modulus_[i] * xp) % p_;
            xp = (xp * x) % p_;
        }
        if (v % p_ == 0)
            throw NotIrreducible("modulus has root " + std::to_string(x) +
                                 " over GF(" + std::to_string(p_) + ")");
    }
    if (f_ == 4) {
        for (int b = 0; b < p_; ++b) {
            for (int c = 0; c < p_; ++c) {
                // divide modulus by x^2 + b x + c over GF(p)
                std::vector<int> rem(modulus_.begin(), modulus_.end());
                for (int d = f_; d >= 2; --d) {
                    int lead = rem[d] % p_;
                    if (lead == 0) continue;
                    rem[d] = 0;
                    rem[d - 1] = ((rem[d - 1] - lead * b) % p_ + p_) % p_;
                    rem[d - 2] = ((rem[d - 2] - lead * c) % p_ + p_) % p_;
                }
                if (rem[0] % p_ == 0 && rem[1] % p_ == 0)
                    throw NotIrreducible("modulus has a quadratic factor");
            }
        }
    }
    // Primitivity: the class of x must have multiplicative order q - 1.
    // Compute powers of x modulo the modulus without the cached tables.
    std::vector<int> cur(f_, 0);
    cur[0] = 1;
    auto mul_by_x = [&](std::vector<int> v) {
        std::vector<int> out(f_, 0);
        int top = v[f_ - 1];
        for (int i = f_ - 1; i > 0; --i) out[i] = v[i - 1];
        out[0] = 0;
        if (top) {
            for (int i = 0; i < f_; ++i)
                out[i] = ((out[i] - top * modulus_[i]) % p_ + p_) % p_;
        }
        return out;
    };
    std::vector<int> one(f_, 0);
    one[0] = 1;
    int order = 0;
    auto v = cur;
    do {
        v = mul_by_x(v);
        ++order;
        if (order > q_) break;
    } while (v != one);
    if (order != q_ - 1)
        throw NotPrimitive("basis root has multiplicative order " + std::to_string(order) +
                           ", expected " + std::to_string(q_ - 1));
}

Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero field element");
    return inv_[a];
}

Elem GaloisField::frobenius_conj(Elem a) const {
    if (sqrt_q_ == 0)
        throw NotSquareOrder("q = " + std::to_string(q_) + " is not a square");
    return frob_[a];
}

std::vector<int> GaloisField::coeffs(Elem a) const {
    std::vector<int> out(f_);
    int v = a;
    for (int i = 0; i < f_; ++i) {
        out[i] = v % p_;
        v /= p_;
    }
    return out;
}

Elem GaloisField::from_coeffs(const std::vector<int>& cs) const {
    int v = 0;
    for (int i = f_ - 1; i >= 0; --i) v = v * p_ + (((cs[i] % p_) + p_) % p_);
    return static_cast<Elem>(v);
}

Cyclotomic GaloisField::character(Elem b, Elem a, int order) const {
    auto ca = coeffs(a), cb = coeffs(b);
    long long e = 0;
    for (int i = 0; i < f_; ++i) e += static_cast<long long>(ca[i]) * cb[i];
    return Cyclotomic::prime_root(p_, e, order);
}

Cyclotomic GaloisField::character_sum_check(Elem a, int order) const {
    Cyclotomic sum(Rational(0), order);
    for (int b = 0; b < q_; ++b)
        sum += character(1, mul(a, static_cast<Elem>(b)), order);
    return sum;
}

std::string GaloisField::label(Elem a) const { return labels_[a]; }

Elem GaloisField::parse_label(const std::string& s) const {
    for (int a = 0; a < q_; ++a)
        if (labels_[a] == s) return static_cast<Elem>(a);
    throw ParseError("unknown element label '" + s + "'");
}

const GaloisField& GaloisField::gf3() {
    static const GaloisField F(3, 1, {0, 1});
    return F;
}

const GaloisField& GaloisField::gf4() {
    static const GaloisField F(2, 2, {1, 1, 1});
    return F;
}

}  // namespace jacodes
