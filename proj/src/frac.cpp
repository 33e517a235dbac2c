#include "qcong/frac.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qcong {

namespace {

Mono mono_scaled(const Mono& m, int64_t k) {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = m.e[i] * k;
    return r;
}

std::string factor_str(const MPoly& f, int mult) {
    std::string s = "(" + f.str() + ")";
    if (mult != 1) s += "^" + std::to_string(mult);
    return s;
}

}  // namespace

Frac::Frac(Rat unit_coeff, Mono unit_mono, MPoly num, std::vector<DenFactor> den)
    : c_(std::move(unit_coeff)), m_(unit_mono), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Frac::normalize() {
    for (const auto& [f, mult] : den_) {
        if (f.is_zero()) throw std::domain_error("Frac: zero denominator factor");
        if (mult <= 0) throw std::invalid_argument("Frac: factor multiplicity must be positive");
    }
    if (num_.is_zero() || c_.is_zero()) {
        c_ = Rat(1);
        m_ = Mono::unit();
        num_ = MPoly();
        den_.clear();
        return;
    }

    // Canonicalize denominator factors; monomial factors fold into the unit.
    std::vector<DenFactor> den;
    den.reserve(den_.size());
    for (auto& [f, mult] : den_) {
        UnitNormal ex = f.unit_normal();
        c_ /= ex.content.pow(mult);
        m_ = m_ - mono_scaled(ex.shift, mult);
        if (ex.poly.is_one()) continue;
        if (ex.poly.term_count() > 2)
            throw std::invalid_argument("Frac: denominator factor must be a monomial or binomial");
        den.emplace_back(std::move(ex.poly), mult);
    }
    std::sort(den.begin(), den.end(), [](const DenFactor& l, const DenFactor& r) {
        return l.first.compare(r.first) == std::strong_ordering::less;
    });
    den_.clear();
    for (auto& df : den) {
        if (!den_.empty() && den_.back().first == df.first)
            den_.back().second += df.second;
        else
            den_.push_back(std::move(df));
    }

    // Cancel factors that exactly divide the numerator.
    for (auto& [f, mult] : den_) {
        while (mult > 0) {
            auto q = num_.exact_div(f);
            if (!q) break;
            num_ = std::move(*q);
            --mult;
        }
    }
    std::erase_if(den_, [](const DenFactor& df) { return df.second == 0; });

    UnitNormal ex = num_.unit_normal();
    c_ *= ex.content;
    m_ = m_ + ex.shift;
    num_ = std::move(ex.poly);
}

Frac Frac::operator-() const {
    Frac r = *this;
    if (!r.is_zero()) r.c_ = -r.c_;
    return r;
}

Frac operator+(const Frac& l, const Frac& r) {
    if (l.is_zero()) return r;
    if (r.is_zero()) return l;

    // Least common denominator at the factor level.
    std::vector<Frac::DenFactor> lcm = l.den_;
    for (const auto& [f, mult] : r.den_) {
        auto it = std::find_if(lcm.begin(), lcm.end(),
                               [&](const Frac::DenFactor& df) { return df.first == f; });
        if (it == lcm.end())
            lcm.emplace_back(f, mult);
        else
            it->second = std::max(it->second, mult);
    }

    auto side_num = [&lcm](const Frac& s) {
        MPoly n = s.num_;
        n.mul_term(s.c_, s.m_);
        for (const auto& [f, mult] : lcm) {
            auto it = std::find_if(s.den_.begin(), s.den_.end(),
                                   [&](const Frac::DenFactor& df) { return df.first == f; });
            int have = it == s.den_.end() ? 0 : it->second;
            for (int i = have; i < mult; ++i) n = n * f;
        }
        return n;
    };

    MPoly num_l = side_num(l);
    MPoly num_r = side_num(r);
    return Frac(Rat(1), Mono::unit(), num_l + num_r, std::move(lcm));
}

Frac operator-(const Frac& l, const Frac& r) { return l + (-r); }

Frac operator*(const Frac& l, const Frac& r) {
    if (l.is_zero() || r.is_zero()) return Frac();
    std::vector<Frac::DenFactor> den = l.den_;
    for (const auto& [f, mult] : r.den_) {
        auto it = std::find_if(den.begin(), den.end(),
                               [&](const Frac::DenFactor& df) { return df.first == f; });
        if (it == den.end())
            den.emplace_back(f, mult);
        else
            it->second += mult;
    }
    return Frac(l.c_ * r.c_, l.m_ + r.m_, l.num_ * r.num_, std::move(den));
}

Frac Frac::scaled(const Rat& c) const { return scaled(c, Mono::unit()); }

Frac Frac::scaled(const Rat& c, const Mono& m) const {
    if (is_zero() || c.is_zero()) return Frac();
    return Frac(c_ * c, m_ + m, num_, den_);
}

Frac Frac::inverted() const {
    if (is_zero()) throw std::domain_error("Frac: inverting zero");
    if (num_.term_count() > 2)
        throw std::domain_error("Frac: numerator too wide to move into a denominator");
    return Frac(Rat(1) / c_, -m_, den_expanded(), {{num_, 1}});
}

bool Frac::contains(Var v) const {
    if (m_[v] != 0 || num_.contains(v)) return true;
    for (const auto& [f, mult] : den_)
        if (f.contains(v)) return true;
    return false;
}

Frac Frac::substitute(Var v, SignedPower val) const {
    if (is_zero()) return Frac();
    MPoly n = num_.substitute(v, val.sign, val.exp);
    int64_t k = m_[v];
    Mono nm = m_;
    nm[v] = 0;
    nm[Var::q] += val.exp * k;
    Rat nc = (val.sign < 0 && (k % 2 != 0)) ? -c_ : c_;
    std::vector<DenFactor> nd;
    nd.reserve(den_.size());
    for (const auto& [f, mult] : den_) {
        MPoly nf = f.substitute(v, val.sign, val.exp);
        if (nf.is_zero())
            throw denominator_vanishes("denominator factor (" + f.str() + ") vanishes at " +
                                       std::string(1, kVarNames[static_cast<int>(v)]) + " = " +
                                       val.str());
        nd.emplace_back(std::move(nf), mult);
    }
    return Frac(std::move(nc), nm, std::move(n), std::move(nd));
}

Frac Frac::substitute(Var v, const Rat& value) const {
    if (is_zero()) return Frac();
    int64_t k = m_[v];
    Rat nc = c_;
    Mono nm = m_;
    nm[v] = 0;
    if (k != 0) {
        if (value.is_zero()) {
            if (k < 0)
                throw denominator_vanishes("unit monomial has a negative power of " +
                                           std::string(1, kVarNames[static_cast<int>(v)]));
            return Frac();
        }
        nc = c_ * value.pow(k);
    }
    MPoly n = num_.substitute(v, value);
    std::vector<DenFactor> nd;
    nd.reserve(den_.size());
    for (const auto& [f, mult] : den_) {
        MPoly nf = f.substitute(v, value);
        if (nf.is_zero())
            throw denominator_vanishes("denominator factor (" + f.str() + ") vanishes at " +
                                       std::string(1, kVarNames[static_cast<int>(v)]) + " = " +
                                       value.str());
        nd.emplace_back(std::move(nf), mult);
    }
    return Frac(std::move(nc), nm, std::move(n), std::move(nd));
}

Frac Frac::scale_var(Var v, int sign) const {
    if (is_zero()) return Frac();
    Rat nc = (sign < 0 && (m_[v] % 2 != 0)) ? -c_ : c_;
    std::vector<DenFactor> nd;
    nd.reserve(den_.size());
    for (const auto& [f, mult] : den_) nd.emplace_back(f.scale_var(v, sign), mult);
    return Frac(std::move(nc), m_, num_.scale_var(v, sign), std::move(nd));
}

bool Frac::equals(const Frac& o) const {
    return cleared_num() * o.den_expanded() == o.cleared_num() * den_expanded();
}

MPoly Frac::cleared_num() const {
    MPoly n = num_;
    n.mul_term(c_, m_);
    return n;
}

MPoly Frac::den_expanded() const {
    MPoly d = MPoly::one();
    for (const auto& [f, mult] : den_)
        for (int i = 0; i < mult; ++i) d = d * f;
    return d;
}

Frac::UnivariatePair Frac::to_upoly() const {
    for (Var v : {Var::a, Var::b, Var::x})
        if (contains(v))
            throw non_univariate("fraction involves " +
                                 std::string(1, kVarNames[static_cast<int>(v)]));
    auto nu = UPoly::from_mpoly(cleared_num());
    UPoly den(Rat(1));
    for (const auto& [f, mult] : den_) {
        auto fu = UPoly::from_mpoly(f);
        for (int i = 0; i < mult; ++i) den = den * *fu;
    }
    int64_t shift = 0;
    if (!nu->is_zero()) shift = std::max(shift, -nu->valuation());
    shift = std::max(shift, -den.valuation());
    return {nu->shifted(shift), den.shifted(shift), shift};
}

std::string Frac::str() const {
    if (is_zero()) return "0";
    bool unit_trivial = c_.is_one() && m_.is_unit();
    std::string s;
    if (!unit_trivial) s = MPoly(c_, m_).str();
    if (!num_.is_one() || unit_trivial) {
        if (num_.is_one() && den_.empty()) return "1";
        if (!s.empty()) s += "*";
        s += "(" + num_.str() + ")";
    }
    if (!den_.empty()) {
        s += " / ";
        bool first = true;
        for (const auto& [f, mult] : den_) {
            if (!first) s += "*";
            first = false;
            s += factor_str(f, mult);
        }
    }
    return s;
}

}  // namespace qcong
