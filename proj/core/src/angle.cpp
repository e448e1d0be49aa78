#include "cubicatlas/angle.hpp"

#include <map>
#include <vector>

namespace cubicatlas {

void Angle::assign(BigInt n, BigInt d) {
    if (d == 0) throw std::invalid_argument("Angle: zero denominator");
    if (d < 0) { d = -d; n = -n; }
    n %= d;
    if (n < 0) n += d;
    BigInt g = gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = std::move(n);
    den_ = std::move(d);
}

Angle Angle::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Angle(BigInt(text), BigInt(1));
    }
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    return Angle(std::move(p), std::move(q));
}

std::strong_ordering Angle::operator<=>(const Angle& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Angle Angle::operator+(const Angle& o) const {
    return Angle(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Angle Angle::operator-(const Angle& o) const {
    return Angle(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

bool Angle::strictly_inside_arc(const Angle& a, const Angle& b) const {
    if (a == b) return false;
    Angle rel = *this - a;
    Angle len = b - a;
    return rel.num() != 0 && rel < len;
}

double Angle::to_double() const {
    return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

std::string Angle::str() const {
    return num_.str() + "/" + den_.str();
}

Angle sigma(const Angle& x, const DegreeMap& d) {
    return Angle(x.num() * d.d, x.den());
}

Angle sigma_iterate(const Angle& x, const DegreeMap& d, unsigned long n) {
    // d^n mod den, then multiply; avoids building d^n in full.
    BigInt mult = powm(BigInt(d.d), BigInt(n), x.den());
    return Angle(x.num() * mult, x.den());
}

unsigned long sigma_period(const Angle& x, const DegreeMap& d) {
    OrbitShape s = sigma_orbit_shape(x, d);
    return s.preperiod == 0 ? s.period : 0;
}

OrbitShape sigma_orbit_shape(const Angle& x, const DegreeMap& d) {
    std::map<Angle, unsigned long> seen;
    Angle cur = x;
    unsigned long step = 0;
    while (true) {
        auto [it, fresh] = seen.emplace(cur, step);
        if (!fresh) {
            return OrbitShape{it->second, step - it->second};
        }
        cur = sigma(cur, d);
        ++step;
    }
}

}  // namespace cubicatlas
