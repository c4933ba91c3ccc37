#include "jacodes/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace jacodes {
namespace {

using IPoly = std::vector<long long>;  // integer polynomial, low coeff first

IPoly ipoly_trim(IPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

// Exact division of integer polynomials (remainder must vanish).
IPoly ipoly_div(IPoly num, const IPoly& den) {
    IPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, 0);
    long long lead = den.back();
    for (int d = static_cast<int>(num.size()) - 1;
         d >= static_cast<int>(den.size()) - 1; --d) {
        long long c = num[d];
        if (c == 0) continue;
        if (c % lead != 0) throw Error("cyclotomic polynomial division not exact");
        long long f = c / lead;
        int off = d - static_cast<int>(den.size()) + 1;
        q[off] = f;
        for (size_t i = 0; i < den.size(); ++i) num[off + i] -= f * den[i];
    }
    for (long long c : num)
        if (c != 0) throw Error("cyclotomic polynomial division not exact");
    return ipoly_trim(q);
}

// Phi_N via (x^N - 1) / prod_{d | N, d < N} Phi_d.
IPoly cyclotomic_polynomial(int n, std::map<int, IPoly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    IPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) num = ipoly_div(num, cyclotomic_polynomial(d, memo));
    }
    memo[n] = num;
    return num;
}

}  // namespace

CycBasis::CycBasis(int order) : order_(order) {
    if (order < 1) throw Error("cyclotomic order must be positive");
    static std::map<int, IPoly> memo;
    phi_ = cyclotomic_polynomial(order, memo);
    degree_ = static_cast<int>(phi_.size()) - 1;
    // powers_[m] = zeta^m reduced: repeatedly multiply by zeta and fold the
    // top coefficient through z^d = -(phi_0 + ... + phi_{d-1} z^{d-1}).
    powers_.assign(order_, std::vector<Rational>(degree_, Rational(0)));
    std::vector<Rational> cur(degree_, Rational(0));
    cur[0] = Rational(1);
    powers_[0] = cur;
    for (int m = 1; m < order_; ++m) {
        Rational top = cur[degree_ - 1];
        for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = Rational(0);
        if (!top.is_zero()) {
            for (int i = 0; i < degree_; ++i)
                cur[i] -= top * Rational(phi_[i]);
        }
        powers_[m] = cur;
    }
}

const CycBasis* CycBasis::get(int order) {
    static std::mutex mu;
    static std::map<int, const CycBasis*> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(order);
    if (it != registry.end()) return it->second;
    const CycBasis* b = new CycBasis(order);
    registry[order] = b;
    return b;
}

Cyclotomic::Cyclotomic(const Rational& r, int order)
    : basis_(CycBasis::get(order)), c_(basis_->degree(), Rational(0)) {
    c_[0] = r;
}

Cyclotomic Cyclotomic::root(int order, int power) {
    const CycBasis* b = CycBasis::get(order);
    power %= order;
    if (power < 0) power += order;
    return Cyclotomic(b, b->power(power));
}

Cyclotomic Cyclotomic::prime_root(int p, long long power, int order) {
    if (order % p != 0)
        throw IncompatibleCyclotomicOrder("zeta_" + std::to_string(p) +
                                          " does not embed in Q(zeta_" +
                                          std::to_string(order) + ")");
    long long e = power % p;
    if (e < 0) e += p;
    return root(order, static_cast<int>((order / p) * e));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational())
        throw NonIntegerCoefficient("value is not rational: " + str());
    return c_[0];
}

bool Cyclotomic::is_integer() const { return is_rational() && c_[0].is_integer(); }

long long Cyclotomic::integer_value() const {
    if (!is_integer()) throw NonIntegerCoefficient("value is not an integer: " + str());
    return c_[0].num();
}

void Cyclotomic::check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.basis_ != b.basis_)
        throw IncompatibleCyclotomicOrder(
            "mixed orders " + std::to_string(a.order()) + " and " +
            std::to_string(b.order()));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same(a, b);
    std::vector<Rational> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Cyclotomic(a.basis_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same(a, b);
    std::vector<Rational> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return Cyclotomic(a.basis_, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Cyclotomic(basis_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same(a, b);
    int d = a.basis_->degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + d);
    for (int m = d; m < 2 * d - 1; ++m) {
        if (conv[m].is_zero()) continue;
        const auto& pw = a.basis_->power(m % a.basis_->order());
        for (int i = 0; i < d; ++i) out[i] += conv[m] * pw[i];
    }
    return Cyclotomic(a.basis_, std::move(out));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= r;
    return Cyclotomic(basis_, std::move(c));
}

// Extended Euclid in Q[z] against Phi_N (irreducible over Q), tracking only
// the Bezout coefficient of the input.
Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic");
    using QPoly = std::vector<Rational>;
    auto deg = [](const QPoly& p) {
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
            if (!p[i].is_zero()) return i;
        return -1;
    };
    QPoly r0(basis_->cyclotomic_poly().size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(basis_->cyclotomic_poly()[i]);
    QPoly r1(c_);
    QPoly s0{Rational(0)}, s1{Rational(1)};
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw DivisionByZero("zero divisor in cyclotomic inverse");
        if (d1 == 0) break;
        int d0 = deg(r0);
        // r0 -= q * r1 by long division; s0 -= q * s1 likewise
        QPoly q(d0 - d1 + 1, Rational(0));
        QPoly r(r0);
        for (int d = d0; d >= d1; --d) {
            if (r[d].is_zero()) continue;
            Rational f = r[d] / r1[d1];
            q[d - d1] = f;
            for (int i = 0; i <= d1; ++i) r[d - d1 + i] -= f * r1[i];
        }
        QPoly s(s0);
        s.resize(std::max(s0.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
        }
        r0 = r1;
        s0 = s1;
        r1 = r;
        s1 = s;
    }
    // r1 is a nonzero constant c: inverse = s1 / c, reduced mod Phi.
    Rational cconst = r1[0];
    std::vector<Rational> out(basis_->degree(), Rational(0));
    for (size_t m = 0; m < s1.size(); ++m) {
        if (s1[m].is_zero()) continue;
        Rational coef = s1[m] / cconst;
        const auto& pw = basis_->power(static_cast<int>(m) % basis_->order());
        for (int i = 0; i < basis_->degree(); ++i) out[i] += coef * pw[i];
    }
    return Cyclotomic(basis_, std::move(out));
}

Cyclotomic Cyclotomic::galois(int k) const {
    int n = order();
    int kk = k % n;
    if (kk < 0) kk += n;
    if (std::gcd(kk, n) != 1)
        throw Error("galois exponent " + std::to_string(k) + " not coprime to " +
                    std::to_string(n));
    std::vector<Rational> out(basis_->degree(), Rational(0));
    for (int i = 0; i < basis_->degree(); ++i) {
        if (c_[i].is_zero()) continue;
        const auto& pw = basis_->power(static_cast<int>((static_cast<long long>(i) * kk) % n));
        for (int j = 0; j < basis_->degree(); ++j) out[j] += c_[i] * pw[j];
    }
    return Cyclotomic(basis_, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic::check_same(a, b);
    return a.c_ == b.c_;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < basis_->degree(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational v = c_[i];
        if (first) {
            if (v.num() < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v.num() < 0 ? " - " : " + ");
            if (v.num() < 0) v = -v;
        }
        first = false;
        bool unit = (v == Rational(1));
        if (i == 0 || !unit) os << v.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string Cyclotomic::key() const {
    std::string s;
    for (const auto& x : c_) {
        s += x.str();
        s += ',';
    }
    return s;
}

Cyclotomic Cyclotomic::parse(const std::string& text, int order) {
    // Accepts the key() form "a,b,c,d," or a plain rational "p/q".
    if (text.find(',') == std::string::npos) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Cyclotomic(Rational(std::stoll(text)), order);
        return Cyclotomic(
            Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))),
            order);
    }
    const CycBasis* b = CycBasis::get(order);
    std::vector<Rational> c(b->degree(), Rational(0));
    size_t pos = 0;
    for (int i = 0; i < b->degree(); ++i) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) throw ParseError("bad cyclotomic literal: " + text);
        std::string tok = text.substr(pos, next - pos);
        auto slash = tok.find('/');
        if (slash == std::string::npos)
            c[i] = Rational(std::stoll(tok));
        else
            c[i] = Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
        pos = next + 1;
    }
    return Cyclotomic(b, std::move(c));
}

}  // namespace jacodes
