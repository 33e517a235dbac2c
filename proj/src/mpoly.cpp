#include "qcong/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qcong/upoly.hpp"

namespace qcong {

namespace {

// Merge two ascending term runs, combining equal monomials and dropping zeros.
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& l,
                                     const std::vector<MPoly::Term>& r) {
    std::vector<MPoly::Term> out;
    out.reserve(l.size() + r.size());
    std::size_t i = 0, j = 0;
    while (i < l.size() && j < r.size()) {
        if (l[i].first < r[j].first) {
            out.push_back(l[i++]);
        } else if (r[j].first < l[i].first) {
            out.push_back(r[j++]);
        } else {
            Rat c = l[i].second + r[j].second;
            if (!c.is_zero()) out.emplace_back(l[i].first, std::move(c));
            ++i, ++j;
        }
    }
    for (; i < l.size(); ++i) out.push_back(l[i]);
    for (; j < r.size(); ++j) out.push_back(r[j]);
    return out;
}

}  // namespace

MPoly MPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& l, const Term& r) { return l.first < r.first; });
    MPoly p;
    for (auto& t : terms) {
        if (t.second.is_zero()) continue;
        if (!p.t_.empty() && p.t_.back().first == t.first) {
            p.t_.back().second += t.second;
            if (p.t_.back().second.is_zero()) p.t_.pop_back();
        } else {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

bool MPoly::contains(Var v) const {
    for (const auto& [m, c] : t_)
        if (m[v] != 0) return true;
    return false;
}

Mono MPoly::min_exponents() const {
    if (t_.empty()) return Mono::unit();
    Mono m = t_[0].first;
    for (const auto& [mono, c] : t_)
        for (int i = 0; i < 4; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
    return m;
}

int64_t MPoly::degree(Var v) const {
    int64_t d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m[v]);
    return d;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), m,
                               [](const Term& t, const Mono& key) { return t.first < key; });
    if (it != t_.end() && it->first == m) return it->second;
    return Rat(0);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    t_ = merge_terms(t_, o.t_);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    *this += -o;
    return *this;
}

MPoly operator+(const MPoly& l, const MPoly& r) {
    MPoly p;
    p.t_ = merge_terms(l.t_, r.t_);
    return p;
}

MPoly operator-(const MPoly& l, const MPoly& r) { return l + (-r); }

void MPoly::addmul(const MPoly& p, const Rat& c, const Mono& shift) {
    if (p.is_zero() || c.is_zero()) return;
    std::vector<Term> scaled;
    scaled.reserve(p.t_.size());
    for (const auto& [m, pc] : p.t_) scaled.emplace_back(m + shift, pc * c);
    t_ = merge_terms(t_, scaled);
}

MPoly& MPoly::mul_term(const Rat& c, const Mono& m) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : t_) {
        mono = mono + m;
        coeff *= c;
    }
    return *this;
}

MPoly operator*(const MPoly& l, const MPoly& r) {
    if (l.is_zero() || r.is_zero()) return MPoly();
    const MPoly& small = l.t_.size() <= r.t_.size() ? l : r;
    const MPoly& big = l.t_.size() <= r.t_.size() ? r : l;
    MPoly acc;
    for (const auto& [m, c] : small.t_) acc.addmul(big, c, m);
    return acc;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& div) const {
    if (div.is_zero()) throw std::domain_error("MPoly: division by zero polynomial");
    if (is_zero()) return MPoly();

    // Monomial divisors are units in the Laurent ring.
    if (div.t_.size() == 1) {
        MPoly q = *this;
        q.mul_term(Rat(1) / div.t_[0].second, -div.t_[0].first);
        return q;
    }

    bool n_uni = !(contains(Var::a) || contains(Var::b) || contains(Var::x));
    bool d_uni = !(div.contains(Var::a) || div.contains(Var::b) || div.contains(Var::x));
    if (d_uni && !n_uni) {
        // A q-only divisor must divide every coefficient of the numerator
        // grouped by (a, b, x) monomial; checking the a=b=x=1 image first
        // rejects most non-divisors in one cheap univariate division.
        MPoly img = substitute(Var::a, Rat(1)).substitute(Var::b, Rat(1)).substitute(Var::x, Rat(1));
        auto iu = UPoly::from_mpoly(img);
        auto du = UPoly::from_mpoly(div);
        if (!iu->is_zero() && !iu->exact_div(*du)) return std::nullopt;
    }
    if (n_uni && d_uni) {
        auto q = UPoly::from_mpoly(*this)->exact_div(*UPoly::from_mpoly(div));
        if (!q) return std::nullopt;
        return q->to_mpoly();
    }

    // Shift both operands so every variable has minimum exponent 0 (monomials
    // are units), then run greedy lead-term division; exact iff the remainder
    // reaches zero.
    Mono sn = min_exponents(), sd = div.min_exponents();
    for (int i = 0; i < 4; ++i) {
        int64_t dn = 0, dd = 0;
        for (const auto& [m, c] : t_) dn = std::max(dn, m.e[i] - sn.e[i]);
        for (const auto& [m, c] : div.t_) dd = std::max(dd, m.e[i] - sd.e[i]);
        if (dn < dd) return std::nullopt;
    }

    std::vector<Term> d;
    d.reserve(div.t_.size());
    for (const auto& [m, c] : div.t_) d.emplace_back(m - sd, c);
    std::map<Mono, Rat> r;
    for (const auto& [m, c] : t_) r.emplace(m - sn, c);

    const Mono& dlead = d.back().first;
    const Rat& dcoeff = d.back().second;
    std::vector<Term> quot;
    while (!r.empty()) {
        auto it = std::prev(r.end());
        if (!dlead.divides(it->first)) return std::nullopt;
        Mono qm = it->first - dlead;
        Rat qc = it->second / dcoeff;
        r.erase(it);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            auto [pos, inserted] = r.try_emplace(qm + d[i].first, Rat(0));
            pos->second -= qc * d[i].second;
            if (pos->second.is_zero()) r.erase(pos);
        }
        quot.emplace_back(qm, std::move(qc));
    }
    std::reverse(quot.begin(), quot.end());
    MPoly q;
    q.t_ = std::move(quot);
    q.mul_term(Rat(1), sn - sd);
    return q;
}

MPoly MPoly::substitute(Var v, int sign, int64_t exp) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        int64_t k = m[v];
        Mono nm = m;
        nm[v] = 0;
        nm[Var::q] += exp * k;
        Rat nc = (sign < 0 && (k % 2 != 0)) ? -c : c;
        out.emplace_back(nm, std::move(nc));
    }
    return from_terms(std::move(out));
}

MPoly MPoly::substitute(Var v, const Rat& value) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        int64_t k = m[v];
        Mono nm = m;
        nm[v] = 0;
        if (k != 0 && value.is_zero()) {
            if (k < 0) throw std::domain_error("MPoly: substituting 0 into a negative power");
            continue;  // term vanishes
        }
        out.emplace_back(nm, c * value.pow(k));
    }
    return from_terms(std::move(out));
}

MPoly MPoly::scale_var(Var v, int sign, int64_t qshift) const {
    if (qshift != 0 && v == Var::q)
        throw std::invalid_argument("MPoly: cannot q-shift the variable q itself");
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& [m, c] : t_) {
        int64_t k = m[v];
        Mono nm = m;
        nm[Var::q] += qshift * k;
        Rat nc = (sign < 0 && (k % 2 != 0)) ? -c : c;
        out.emplace_back(nm, std::move(nc));
    }
    return from_terms(std::move(out));
}

UnitNormal MPoly::unit_normal() const {
    if (is_zero()) throw std::domain_error("MPoly: unit_normal of zero");
    Mono s = min_exponents();
    mpz_class g(0), l(1);
    for (const auto& [m, c] : t_) {
        mpz_class n = abs(c.num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_class d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    Rat content{mpz_class(g), mpz_class(l)};
    if (t_.front().second.sign() < 0) content = -content;
    std::vector<Term> t;
    t.reserve(t_.size());
    for (const auto& [m, c] : t_) t.emplace_back(m - s, c / content);
    MPoly p;
    p.t_ = std::move(t);
    return {std::move(content), s, std::move(p)};
}

std::strong_ordering MPoly::compare(const MPoly& o) const {
    std::size_t n = std::min(t_.size(), o.t_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = t_[i].first <=> o.t_[i].first; c != 0) return c;
        if (t_[i].second < o.t_[i].second) return std::strong_ordering::less;
        if (o.t_[i].second < t_[i].second) return std::strong_ordering::greater;
    }
    return t_.size() <=> o.t_.size();
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
        bool neg = c.sign() < 0;
        Rat ac = c.abs();
        if (first) {
            if (neg) s += '-';
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_unit()) {
            s += ac.str();
        } else if (ac.is_one()) {
            s += m.str();
        } else {
            s += ac.str() + "*" + m.str();
        }
    }
    return s;
}

}  // namespace qcong
