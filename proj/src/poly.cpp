#include "yangirr/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace yangirr {

Poly::Poly(const Rat& c) {
    if (sgn(c) != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rat>{0, 1}); }

Poly Poly::linear(const Rat& a) { return Poly(std::vector<Rat>{a, 1}); }

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly p(Rat(1));
    for (const auto& r : roots) p *= linear(-r);
    return p;
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rat Poly::lead() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Poly Poly::shifted(const Rat& a) const {
    // Horner in (x + a)
    Poly acc;
    Poly xa = linear(a);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= xa;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

int Poly::order_at(const Rat& t) const {
    if (is_zero()) return -1;
    Poly s = shifted(t);
    int k = 0;
    while (sgn(s.c_[k]) == 0) ++k;
    return k;
}

Poly Poly::deflate(const Rat& t, int k) const {
    Poly s = shifted(t);
    for (int i = 0; i < k; ++i)
        if (i < static_cast<int>(s.c_.size()) && sgn(s.c_[i]) != 0)
            throw std::logic_error("deflate: root multiplicity too small");
    if (k >= static_cast<int>(s.c_.size())) return Poly();
    std::vector<Rat> r(s.c_.begin() + k, s.c_.end());
    return Poly(std::move(r)).shifted(-t);
}

std::string Poly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (sgn(c_[i]) == 0) continue;
        Rat a = c_[i];
        if (!first) os << (sgn(a) < 0 ? " - " : " + ");
        else if (sgn(a) < 0) os << "-";
        Rat m = abs(a);
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(Poly a, const Rat& s) { return a *= s; }

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    std::vector<Rat> quo(std::max(0, a.degree() - db + 1));
    Rat lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(rem[i]) == 0) continue;
        Rat f = rem[i] / lb;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Rat l = a.lead();
    a *= Rat(1) / l;
    return a;
}

}  // namespace yangirr
