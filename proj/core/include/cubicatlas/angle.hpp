// Exact rational points of the circle R/Z and the d-tupling map.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace cubicatlas {

using BigInt = boost::multiprecision::cpp_int;

// A point of R/Z stored as a reduced fraction num/den with 0 <= num < den.
// Equality is exact rational equality; all comparisons use the
// representative in [0,1).
class Angle {
public:
    Angle() : num_(0), den_(1) {}
    Angle(BigInt numerator, BigInt denominator) { assign(std::move(numerator), std::move(denominator)); }
    Angle(long numerator, long denominator) { assign(BigInt(numerator), BigInt(denominator)); }

    static Angle zero() { return Angle(); }

    // Parses "p/q" or "p" (integer reduces to 0 mod 1).
    static Angle parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Angle& o) const;

    Angle operator+(const Angle& o) const;
    Angle operator-(const Angle& o) const;

    // Arc length from this point counterclockwise to b, in [0,1).
    Angle ccw_distance_to(const Angle& b) const { return b - *this; }

    // True if this point lies in the open ccw arc (a, b); empty when a == b.
    bool strictly_inside_arc(const Angle& a, const Angle& b) const;

    double to_double() const;
    std::string str() const;

private:
    void assign(BigInt n, BigInt d);

    BigInt num_;
    BigInt den_;
};

struct DegreeMap {
    int d = 3;
    explicit DegreeMap(int degree) : d(degree) {
        if (degree < 2) throw std::invalid_argument("DegreeMap: degree must be >= 2");
    }
};

// The angle d-tupling map: x -> d*x mod 1 (s -> s^d on the unit circle).
Angle sigma(const Angle& x, const DegreeMap& d);

// sigma iterated n times (n >= 0), exact.
Angle sigma_iterate(const Angle& x, const DegreeMap& d, unsigned long n);

// Exact period of x under sigma_d, or 0 if x is strictly preperiodic.
// The orbit of p/q has at most q points, so this always terminates.
unsigned long sigma_period(const Angle& x, const DegreeMap& d);

// Preperiod (steps until the orbit enters its cycle) and cycle length.
struct OrbitShape {
    unsigned long preperiod = 0;
    unsigned long period = 0;
};
OrbitShape sigma_orbit_shape(const Angle& x, const DegreeMap& d);

}  // namespace cubicatlas
