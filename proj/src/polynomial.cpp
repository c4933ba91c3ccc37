#include "jacodes/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace jacodes {

void Monomial::set(VarKey v, int exp) {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const auto& p, VarKey k) { return p.first < k; });
    if (it != e_.end() && it->first == v) {
        if (exp == 0)
            e_.erase(it);
        else
            it->second = exp;
    } else if (exp != 0) {
        e_.insert(it, {v, exp});
    }
}

int Monomial::exponent(VarKey v) const {
    for (const auto& [k, e] : e_)
        if (k == v) return e;
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [k, e] : e_) d += e;
    return d;
}

int Monomial::degree_of(std::uint16_t block, VarKind kind) const {
    int d = 0;
    for (const auto& [k, e] : e_)
        if (k.block == block && k.kind == kind) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin();
    auto b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
            out.e_.push_back(*a++);
        } else if (a == e_.end() || b->first < a->first) {
            out.e_.push_back(*b++);
        } else {
            out.e_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return out;
}

bool Monomial::Order::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ib != b.factors().end();
}

Polynomial Polynomial::monomial(const GaloisField* field, const Monomial& m,
                                const Cyclotomic& c) {
    Polynomial p(field, c.order());
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::constant(const GaloisField* field, const Cyclotomic& c) {
    return monomial(field, Monomial(), c);
}

void Polynomial::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (field_ && o.field_ && field_ != o.field_)
        throw AlphabetMismatch("polynomials over different alphabets");
    if (order_ != o.order_)
        throw IncompatibleCyclotomicOrder("polynomials over different cyclotomic orders");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.field_ ? a.field_ : b.field_, a.order_);
    out.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.field_ ? a.field_ : b.field_, a.order_);
    out.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.field_ ? a.field_ : b.field_, a.order_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Cyclotomic& c) const {
    Polynomial out(field_, order_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

Polynomial Polynomial::scaled(const Rational& r) const {
    return scaled(Cyclotomic(r, order_));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || ia->second != ib->second) return false;
    }
    return true;
}

Polynomial Polynomial::substitute_linear(const std::map<VarKey, Polynomial>& rules) const {
    Polynomial out(field_, order_);
    // Power cache shared across terms: rules are reused heavily by the
    // MacWilliams substitutions.
    std::map<std::pair<std::uint32_t, int>, Polynomial> pow_cache;
    std::function<const Polynomial&(VarKey, int)> power = [&](VarKey v,
                                                              int e) -> const Polynomial& {
        auto key = std::make_pair(v.packed(), e);
        auto it = pow_cache.find(key);
        if (it != pow_cache.end()) return it->second;
        auto rit = rules.find(v);
        if (rit == rules.end())
            throw MissingRule("no substitution rule for variable " + var_name(v));
        Polynomial result = (e == 1) ? rit->second : power(v, e - 1) * rit->second;
        return pow_cache.emplace(key, std::move(result)).first->second;
    };
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(field_, c);
        for (const auto& [v, e] : m.factors()) term = term * power(v, e);
        out += term;
    }
    return out;
}

Polynomial Polynomial::partial_derivative(VarKey v) const {
    Polynomial out(field_, order_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial d = m;
        d.set(v, e - 1);
        out.add_term(d, c.scaled(Rational(e)));
    }
    return out;
}

Polynomial Polynomial::specialize(const std::map<VarKey, VarKey>& merge) const {
    for (const auto& [from, to] : merge)
        if (from.kind != to.kind)
            throw KindMismatch("specialization must map x to x and y to y");
    Polynomial out(field_, order_);
    for (const auto& [m, c] : terms_) {
        Monomial r;
        for (const auto& [v, e] : m.factors()) {
            auto it = merge.find(v);
            VarKey target = (it == merge.end()) ? v : it->second;
            r.set(target, r.exponent(target) + e);
        }
        out.add_term(r, c);
    }
    return out;
}

Polynomial Polynomial::kind_flipped() const {
    Polynomial out(field_, order_);
    for (const auto& [m, c] : terms_) {
        Monomial r;
        for (const auto& [v, e] : m.factors()) {
            VarKey w{v.block, v.kind == VarKind::X ? VarKind::Y : VarKind::X, v.elem};
            r.set(w, e);
        }
        out.add_term(r, c);
    }
    return out;
}

Cyclotomic Polynomial::coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return Cyclotomic(Rational(0), order_);
    return it->second;
}

Cyclotomic Polynomial::evaluate(const std::map<VarKey, Cyclotomic>& assignment) const {
    Cyclotomic total(Rational(0), order_);
    for (const auto& [m, c] : terms_) {
        Cyclotomic v = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw MissingRule("no value for variable " + var_name(var));
            for (int i = 0; i < e; ++i) v *= it->second;
        }
        total += v;
    }
    return total;
}

std::vector<VarKey> Polynomial::variables() const {
    std::vector<VarKey> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

const Polynomial& Polynomial::demote_to_integers() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_integer())
            throw NonIntegerCoefficient("coefficient " + c.str() + " is not an integer");
    return *this;
}

std::string Polynomial::var_name(VarKey v, Style style) const {
    if (style == Style::Jacobi) {
        if (v.kind == VarKind::X) return v.elem == 0 ? "w" : "z";
        return v.elem == 0 ? "x" : "y";
    }
    if (style == Style::Hamming) return v.elem == 0 ? "x" : "y";
    std::string kind = v.kind == VarKind::X ? "x" : "y";
    std::string elem = field_ ? field_->label(v.elem) : std::to_string(int(v.elem));
    if (v.block == 1) return kind + elem;
    return kind + std::to_string(int(v.block)) + "_" + elem;
}

std::string Polynomial::str(Style style) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string coeff;
        bool coeff_is_one = false;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational_part();
            if (r.num() < 0) {
                negative = true;
                r = -r;
            }
            coeff_is_one = (r == Rational(1)) && !m.empty();
            coeff = r.str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        bool emitted = false;
        if (!coeff_is_one) {
            os << coeff;
            emitted = true;
        }
        for (const auto& [v, e] : m.factors()) {
            if (emitted) os << "*";
            os << var_name(v, style);
            if (e > 1) os << "^" << e;
            emitted = true;
        }
    }
    return os.str();
}

std::string Polynomial::to_json() const {
    nlohmann::json j;
    j["cyclotomic_order"] = order_;
    if (field_) {
        j["field"] = {{"p", field_->p()}, {"f", field_->f()}};
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) {
            std::string elem = field_ ? field_->label(v.elem) : std::to_string(int(v.elem));
            mono.push_back({v.block, v.kind == VarKind::X ? "x" : "y", elem, e});
        }
        std::string coeff = c.is_rational() ? c.rational_part().str() : c.key();
        terms.push_back({{"monomial", mono}, {"coeff", coeff}});
    }
    j["terms"] = terms;
    return j.dump(2);
}

Polynomial Polynomial::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int order = j.value("cyclotomic_order", Cyclotomic::kDefaultOrder);
    const GaloisField* field = nullptr;
    if (j.contains("field")) {
        int p = j["field"]["p"], f = j["field"]["f"];
        if (p == 3 && f == 1)
            field = &GaloisField::gf3();
        else if (p == 2 && f == 2)
            field = &GaloisField::gf4();
        else
            throw ParseError("unsupported field in JSON polynomial");
    }
    Polynomial out(field, order);
    for (const auto& t : j["terms"]) {
        Monomial m;
        for (const auto& mv : t["monomial"]) {
            std::uint16_t block = mv[0];
            std::string kind = mv[1];
            std::string elem = mv[2];
            int exp = mv[3];
            Elem e = field ? field->parse_label(elem)
                           : static_cast<Elem>(std::stoi(elem));
            m.set({block, kind == "x" ? VarKind::X : VarKind::Y, e}, exp);
        }
        out.add_term(m, Cyclotomic::parse(t["coeff"].get<std::string>(), order));
    }
    return out;
}

}  // namespace jacodes
