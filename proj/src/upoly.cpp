#include "qcong/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcong {

UPoly::UPoly(std::vector<Rat> coeffs, int64_t valuation) : val_(valuation), c_(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    std::size_t lo = 0;
    while (lo < c_.size() && c_[lo].is_zero()) ++lo;
    std::size_t hi = c_.size();
    while (hi > lo && c_[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        c_.clear();
        val_ = 0;
        return;
    }
    if (lo > 0 || hi < c_.size()) {
        c_ = std::vector<Rat>(c_.begin() + static_cast<std::ptrdiff_t>(lo),
                              c_.begin() + static_cast<std::ptrdiff_t>(hi));
        val_ += static_cast<int64_t>(lo);
    }
}

Rat UPoly::coeff(int64_t e) const {
    int64_t i = e - val_;
    if (i < 0 || i >= static_cast<int64_t>(c_.size())) return Rat(0);
    return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator+(const UPoly& l, const UPoly& r) {
    if (l.is_zero()) return r;
    if (r.is_zero()) return l;
    int64_t lo = std::min(l.val_, r.val_);
    int64_t hi = std::max(l.degree(), r.degree());
    std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i) c[static_cast<std::size_t>(l.val_ - lo) + i] += l.c_[i];
    for (std::size_t i = 0; i < r.c_.size(); ++i) c[static_cast<std::size_t>(r.val_ - lo) + i] += r.c_[i];
    return UPoly(std::move(c), lo);
}

UPoly operator-(const UPoly& l, const UPoly& r) { return l + (-r); }

UPoly operator*(const UPoly& l, const UPoly& r) {
    if (l.is_zero() || r.is_zero()) return UPoly();
    std::vector<Rat> c(l.c_.size() + r.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
        if (l.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.c_.size(); ++j) {
            if (r.c_[j].is_zero()) continue;
            c[i + j] += l.c_[i] * r.c_[j];
        }
    }
    return UPoly(std::move(c), l.val_ + r.val_);
}

UPoly UPoly::mul_term(const Rat& c, int64_t e) const {
    if (c.is_zero() || is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& rc : r.c_) rc *= c;
    r.val_ += e;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& n, const UPoly& d) {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (n.is_zero()) return {UPoly(), UPoly()};
    if (n.val_ < 0 || d.val_ < 0)
        throw std::domain_error("UPoly: divrem requires ordinary polynomials");
    // Work on dense vectors anchored at q^0.
    std::vector<Rat> r(static_cast<std::size_t>(n.degree()) + 1, Rat(0));
    for (std::size_t i = 0; i < n.c_.size(); ++i) r[static_cast<std::size_t>(n.val_) + i] = n.c_[i];
    int64_t dd = d.degree();
    std::vector<Rat> q;
    if (static_cast<int64_t>(r.size()) - 1 >= dd)
        q.assign(r.size() - static_cast<std::size_t>(dd), Rat(0));
    const Rat& lc = d.lead_coeff();
    for (int64_t i = static_cast<int64_t>(r.size()) - 1; i >= dd; --i) {
        Rat f = r[static_cast<std::size_t>(i)] / lc;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(i - dd)] = f;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            r[static_cast<std::size_t>(i - dd + d.val_) + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q), 0), UPoly(std::move(r), 0)};
}

UPoly UPoly::gcd(UPoly x, UPoly y) {
    // Shift to ordinary polynomials; units of the Laurent ring do not matter.
    if (!x.is_zero()) x.val_ = 0;
    if (!y.is_zero()) y.val_ = 0;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    Rat lc = x.lead_coeff();
    for (auto& c : x.c_) c /= lc;  // monic
    return x;
}

std::optional<UPoly> UPoly::exact_div(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
    if (is_zero()) return UPoly();
    UPoly n0 = *this, d0 = d;
    int64_t shift = val_ - d.val_;
    n0.val_ = 0;
    d0.val_ = 0;
    auto [q, r] = divrem(n0, d0);
    if (!r.is_zero()) return std::nullopt;
    return q.shifted(shift);
}

UPoly UPoly::compose_q_power(int64_t d) const {
    if (d < 1) throw std::invalid_argument("UPoly: compose_q_power wants d >= 1");
    if (is_zero()) return UPoly();
    std::vector<Rat> c(static_cast<std::size_t>((c_.size() - 1) * static_cast<std::size_t>(d)) + 1,
                       Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i * static_cast<std::size_t>(d)] = c_[i];
    return UPoly(std::move(c), val_ * d);
}

UPoly UPoly::negate_q() const {
    UPoly r = *this;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        int64_t e = r.val_ + static_cast<int64_t>(i);
        if (e % 2 != 0) r.c_[i] = -r.c_[i];
    }
    return r;
}

MPoly UPoly::to_mpoly() const {
    std::vector<MPoly::Term> t;
    t.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        t.emplace_back(Mono::q_power(val_ + static_cast<int64_t>(i)), c_[i]);
    }
    return MPoly::from_terms(std::move(t));
}

std::optional<UPoly> UPoly::from_mpoly(const MPoly& p) {
    if (p.contains(Var::a) || p.contains(Var::b) || p.contains(Var::x)) return std::nullopt;
    if (p.is_zero()) return UPoly();
    int64_t lo = p.terms().front().first[Var::q];
    int64_t hi = p.terms().back().first[Var::q];
    std::vector<Rat> c(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (const auto& [m, coeff] : p.terms()) c[static_cast<std::size_t>(m[Var::q] - lo)] = coeff;
    return UPoly(std::move(c), lo);
}

}  // namespace qcong
