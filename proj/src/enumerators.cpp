#include "jacodes/enumerators.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace jacodes {
namespace {

Monomial word_monomial(const GaloisField& F, const Word& u, const SplitSpec& spec,
                       bool with_refs) {
    Monomial m;
    for (int b = 0; b < spec.block_count(); ++b) {
        auto block_id = static_cast<std::uint16_t>(b + 1);
        if (with_refs) {
            std::set<int> T(spec.refs[b].begin(), spec.refs[b].end());
            Composition in_t(F.q(), 0), out_t(F.q(), 0);
            for (int i : spec.blocks[b]) {
                if (T.count(i))
                    ++in_t[u[i - 1]];
                else
                    ++out_t[u[i - 1]];
            }
            for (int a = 0; a < F.q(); ++a) {
                if (in_t[a]) m.set(xvar(static_cast<Elem>(a), block_id), in_t[a]);
                if (out_t[a]) m.set(yvar(static_cast<Elem>(a), block_id), out_t[a]);
            }
        } else {
            Composition comp = composition(F, u, spec.blocks[b]);
            for (int a = 0; a < F.q(); ++a)
                if (comp[a]) m.set(xvar(static_cast<Elem>(a), block_id), comp[a]);
        }
    }
    return m;
}

std::string monomial_str(const Polynomial& context, const Monomial& m) {
    return Polynomial::monomial(context.field(), m, Cyclotomic(Rational(1))).str();
}

// Describes the first term where two polynomials differ.
std::string first_difference(const Polynomial& a, const Polynomial& b) {
    for (const auto& [m, c] : a.terms()) {
        Cyclotomic other = b.coefficient_of(m);
        if (other != c)
            return monomial_str(a, m) + ": " + c.str() + " vs " + other.str();
    }
    for (const auto& [m, c] : b.terms()) {
        if (a.coefficient_of(m) != c)
            return monomial_str(b, m) + ": 0 vs " + c.str();
    }
    return "";
}

}  // namespace

SplitSpec SplitSpec::unsplit(int n) {
    SplitSpec s;
    s.blocks.emplace_back();
    for (int i = 1; i <= n; ++i) s.blocks[0].push_back(i);
    return s;
}

void SplitSpec::validate(int n) const {
    std::vector<int> seen(n + 1, 0);
    for (const auto& b : blocks) {
        for (int i : b) {
            if (i < 1 || i > n) throw IndexOutOfRange("coordinate " + std::to_string(i));
            if (seen[i]++) throw Error("blocks are not disjoint at coordinate " + std::to_string(i));
        }
    }
    for (int i = 1; i <= n; ++i)
        if (!seen[i]) throw Error("blocks do not cover coordinate " + std::to_string(i));
    if (!refs.empty()) {
        if (refs.size() != blocks.size())
            throw DimensionMismatch("refs count != block count");
        for (size_t b = 0; b < blocks.size(); ++b) {
            std::set<int> bs(blocks[b].begin(), blocks[b].end());
            for (int i : refs[b])
                if (!bs.count(i))
                    throw Error("ref coordinate " + std::to_string(i) +
                                " outside block " + std::to_string(b + 1));
        }
    }
}

SplitSpec SplitSpec::with_refs(std::vector<std::vector<int>> r) const {
    SplitSpec s = *this;
    s.refs = std::move(r);
    return s;
}

SplitSpec SplitSpec::without_coordinate(int i) const {
    SplitSpec s;
    auto renumber = [i](const std::vector<int>& v) {
        std::vector<int> out;
        for (int c : v) {
            if (c == i) continue;
            out.push_back(c > i ? c - 1 : c);
        }
        return out;
    };
    for (const auto& b : blocks) s.blocks.push_back(renumber(b));
    for (const auto& r : refs) s.refs.push_back(renumber(r));
    return s;
}

Polynomial cwe(const WordSet& c) {
    return scwe(c, SplitSpec::unsplit(c.length));
}

Polynomial hamming_we(const WordSet& c) {
    Polynomial p = cwe(c);
    std::map<VarKey, VarKey> merge;
    for (int a = 2; a < c.field->q(); ++a) merge[xvar(static_cast<Elem>(a))] = xvar(1);
    return p.specialize(merge);
}

Polynomial scwe(const WordSet& c, const SplitSpec& spec) {
    spec.validate(c.length);
    Polynomial p(c.field);
    for (const auto& u : c.words)
        p.add_term(word_monomial(*c.field, u, spec, false), Cyclotomic(Rational(1)));
    return p;
}

Polynomial jacobi(const WordSet& c, const std::vector<int>& T) {
    Polynomial p = complete_jacobi(c, T);
    std::map<VarKey, VarKey> merge;
    for (int a = 2; a < c.field->q(); ++a) {
        merge[xvar(static_cast<Elem>(a))] = xvar(1);
        merge[yvar(static_cast<Elem>(a))] = yvar(1);
    }
    return p.specialize(merge);
}

Polynomial complete_jacobi(const WordSet& c, const std::vector<int>& T) {
    SplitSpec spec = SplitSpec::unsplit(c.length).with_refs({T});
    return split_complete_jacobi(c, spec);
}

Polynomial split_complete_jacobi(const WordSet& c, const SplitSpec& spec) {
    if (!spec.has_refs()) throw Error("split complete Jacobi needs reference sets");
    spec.validate(c.length);
    Polynomial p(c.field);
    for (const auto& u : c.words)
        p.add_term(word_monomial(*c.field, u, spec, true), Cyclotomic(Rational(1)));
    return p;
}

namespace {

Polynomial macwilliams_impl(const Polynomial& p, long long code_size, bool hermitian,
                            bool allow_y) {
    const GaloisField* F = p.field();
    if (!F) throw AlphabetMismatch("polynomial has no field alphabet");
    if (hermitian && !F->has_square_order())
        throw NotSquareOrder("Hermitian transform needs square field order");
    std::set<std::uint16_t> block_ids;
    for (VarKey v : p.variables()) {
        if (!allow_y && v.kind == VarKind::Y)
            throw AlphabetMismatch("weight-enumerator transform applied to a y-variable");
        block_ids.insert(v.block);
    }
    std::map<VarKey, Polynomial> rules;
    for (auto block : block_ids) {
        for (int a = 0; a < F->q(); ++a) {
            for (int kind = 0; kind < (allow_y ? 2 : 1); ++kind) {
                Polynomial rhs(F);
                for (int b = 0; b < F->q(); ++b) {
                    Elem bb = static_cast<Elem>(b);
                    Elem arg = F->mul(static_cast<Elem>(a),
                                      hermitian ? F->frobenius_conj(bb) : bb);
                    Monomial m;
                    VarKey v{block, kind == 0 ? VarKind::X : VarKind::Y, bb};
                    m.set(v, 1);
                    rhs.add_term(m, F->character(1, arg, p.cyclotomic_order()));
                }
                VarKey lhs{block, kind == 0 ? VarKind::X : VarKind::Y,
                           static_cast<Elem>(a)};
                rules.emplace(lhs, std::move(rhs));
            }
        }
    }
    return p.substitute_linear(rules).scaled(Rational(1, code_size));
}

}  // namespace

Polynomial macwilliams_scwe(const Polynomial& p, long long code_size, bool hermitian) {
    return macwilliams_impl(p, code_size, hermitian, false);
}

Polynomial macwilliams_scj(const Polynomial& p, long long code_size, bool hermitian) {
    return macwilliams_impl(p, code_size, hermitian, true);
}

Polynomial polarize(const Polynomial& p, std::uint16_t block, const Rational& divisor) {
    if (divisor.is_zero()) throw DivisionByZero("polarization divisor is zero");
    const GaloisField* F = p.field();
    Polynomial out(F, p.cyclotomic_order());
    for (int a = 0; a < F->q(); ++a) {
        Elem e = static_cast<Elem>(a);
        Polynomial d = p.partial_derivative(yvar(e, block));
        if (d.is_zero()) continue;
        Monomial xm;
        xm.set(xvar(e, block), 1);
        out += Polynomial::monomial(F, xm, Cyclotomic(Rational(1), p.cyclotomic_order())) * d;
    }
    return out.scaled(Rational(1) / divisor);
}

Polynomial polarize_iterated(const Polynomial& p, std::uint16_t block, int times) {
    Polynomial cur = p;
    for (int step = 0; step < times; ++step) {
        int ydeg = -1;
        for (const auto& [m, c] : cur.terms()) {
            int d = m.degree_of(block, VarKind::Y);
            if (ydeg == -1)
                ydeg = d;
            else if (d != ydeg)
                throw Error("polarization on a block-inhomogeneous polynomial");
        }
        if (ydeg <= 0) return Polynomial(cur.field(), cur.cyclotomic_order());
        cur = polarize(cur, block, Rational(ydeg));
    }
    return cur;
}

Main1Report verify_main1(const LinearCode& c, const SplitSpec& spec, int k, int i) {
    spec.validate(c.length());
    if (k < 1 || k > spec.block_count()) throw IndexOutOfRange("block index");
    const auto& Xk = spec.blocks[k - 1];
    if (std::find(Xk.begin(), Xk.end(), i) == Xk.end())
        throw IndexOutOfRange("coordinate " + std::to_string(i) + " not in block " +
                              std::to_string(k));
    const GaloisField* F = c.field();
    auto block_id = static_cast<std::uint16_t>(k);
    Main1Report rep;

    auto refs_for = [&](int coord) {
        std::vector<std::vector<int>> r(spec.block_count());
        r[k - 1] = {coord};
        return r;
    };
    auto decomposition = [&](int coord) {
        SplitSpec reduced = spec.without_coordinate(coord);
        Polynomial rhs(F);
        for (int a = 0; a < F->q(); ++a) {
            Elem e = static_cast<Elem>(a);
            Polynomial part = (a == 0) ? scwe(shorten(c, coord).words(), reduced)
                                       : scwe(value_subcode(c, coord, e), reduced);
            Monomial xm;
            xm.set(xvar(e, block_id), 1);
            rhs += Polynomial::monomial(F, xm, Cyclotomic(Rational(1))) * part;
        }
        return rhs;
    };

    Polynomial lhs = split_complete_jacobi(c.words(), spec.with_refs(refs_for(i)));
    Polynomial rhs = decomposition(i);
    rep.identity_ok = (lhs == rhs);
    if (!rep.identity_ok) rep.mismatch = first_difference(lhs, rhs);

    // Averaged form: v_k (A_k scwe) = sum over coordinates of the decomposition,
    // i.e. the unnormalized polarization.
    Polynomial base = scwe(c.words(), spec);
    Polynomial unnormalized = polarize(base, block_id, Rational(1));
    Polynomial total(F);
    bool homogeneous = true;
    Polynomial first_scj = lhs;
    for (int coord : Xk) {
        total += decomposition(coord);
        if (homogeneous) {
            Polynomial scj_i =
                split_complete_jacobi(c.words(), spec.with_refs(refs_for(coord)));
            if (!(scj_i == first_scj)) homogeneous = false;
        }
    }
    rep.averaged_ok = (unnormalized == total);
    if (!rep.averaged_ok && rep.mismatch.empty())
        rep.mismatch = first_difference(unnormalized, total);

    rep.homogeneous_applicable = homogeneous;
    if (homogeneous) {
        Polynomial normalized =
            polarize(base, block_id, Rational(static_cast<long long>(Xk.size())));
        rep.homogeneous_ok = (normalized == lhs);
        if (!rep.homogeneous_ok && rep.mismatch.empty())
            rep.mismatch = first_difference(normalized, lhs);
    }
    return rep;
}

Main2Report verify_main2(const LinearCode& c, const SplitSpec& spec,
                         const std::vector<int>& t) {
    spec.validate(c.length());
    if (static_cast<int>(t.size()) != spec.block_count())
        throw DimensionMismatch("strength vector length != block count");
    Main2Report rep;
    int total_t = 0;
    for (int x : t) total_t += x;

    rep.hypothesis_met = true;
    for (const auto& w : c.words().words) {
        int wt = hamming_weight(w);
        if (wt != 0 && wt < total_t) rep.hypothesis_met = false;
    }

    Polynomial rhs = scwe(c.words(), spec);
    for (int b = 0; b < spec.block_count(); ++b)
        rhs = polarize_iterated(rhs, static_cast<std::uint16_t>(b + 1), t[b]);

    // Iterate every tuple (T_1,...,T_l) with T_i a t_i-subset of X_i.
    std::vector<std::vector<std::vector<int>>> choices(spec.block_count());
    for (int b = 0; b < spec.block_count(); ++b) {
        const auto& X = spec.blocks[b];
        int n = static_cast<int>(X.size());
        if (t[b] > n) throw Error("strength exceeds block size");
        std::vector<int> idx(t[b]);
        for (int j = 0; j < t[b]; ++j) idx[j] = j;
        while (true) {
            std::vector<int> T;
            for (int j : idx) T.push_back(X[j]);
            choices[b].push_back(T);
            int j = t[b] - 1;
            while (j >= 0 && idx[j] == n - t[b] + j) --j;
            if (j < 0) break;
            ++idx[j];
            for (int l = j + 1; l < t[b]; ++l) idx[l] = idx[l - 1] + 1;
        }
    }

    rep.all_equal = true;
    std::vector<size_t> pos(spec.block_count(), 0);
    while (true) {
        std::vector<std::vector<int>> refs(spec.block_count());
        for (int b = 0; b < spec.block_count(); ++b) refs[b] = choices[b][pos[b]];
        ++rep.tuple_count;
        Polynomial lhs = split_complete_jacobi(c.words(), spec.with_refs(refs));
        if (!(lhs == rhs)) {
            rep.all_equal = false;
            if (rep.first_violation.empty()) {
                std::ostringstream os;
                for (int b = 0; b < spec.block_count(); ++b) {
                    os << "T" << (b + 1) << "={";
                    for (size_t j = 0; j < refs[b].size(); ++j)
                        os << (j ? "," : "") << refs[b][j];
                    os << "}";
                }
                rep.first_violation = os.str();
            }
        }
        int b = spec.block_count() - 1;
        while (b >= 0 && ++pos[b] == choices[b].size()) {
            pos[b] = 0;
            --b;
        }
        if (b < 0) break;
    }
    return rep;
}

}  // namespace jacodes
