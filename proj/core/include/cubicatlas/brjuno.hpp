// Continued-fraction expansion with certified quotients, Brjuno partial
// sums, and constructions of angles whose partial sums provably diverge.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace cubicatlas {

using BigRational = boost::multiprecision::cpp_rational;
using Float50 = boost::multiprecision::cpp_bin_float_50;

// A real input carried as an exact rational plus an uncertainty half-width.
// Zero uncertainty means the value is exact (and rational).
struct RealInput {
    BigRational value;
    BigRational uncertainty;

    // "0.6180339887..." with uncertainty one unit in the last place, so a
    // truncated decimal of an irrational still brackets it.
    static RealInput from_decimal(const std::string& text);
    static RealInput exact(BigRational v) { return {std::move(v), 0}; }
};

struct ContinuedFraction {
    std::vector<boost::multiprecision::cpp_int> quotients;  // a_1..a_n
    // Convergents p_k/q_k for k = 0..n, with p_0/q_0 = 0/1.
    std::vector<boost::multiprecision::cpp_int> p;
    std::vector<boost::multiprecision::cpp_int> q;
    // Set when the uncertainty interval stopped certifying quotients
    // before the requested count was reached.
    bool precision_exhausted = false;
};

// Gauss-map expansion of theta in (0,1), at most n_quotients quotients.
// Exact rational input that terminates raises std::invalid_argument
// (rational-input error); inexact input stops early with the
// precision_exhausted flag once the interval straddles a quotient.
ContinuedFraction cf_expand(const RealInput& theta, std::size_t n_quotients);

struct BrjunoPartialSums {
    std::vector<Float50> terms;         // ln(q_{n+1}) / q_n
    std::vector<Float50> partial_sums;  // running totals
    double total() const;
};

// Requires at least two convergents.
BrjunoPartialSums brjuno_partial_sums(const ContinuedFraction& cf);

// Growth rules for non-Brjuno constructions. Each forces
// ln(q_{n+1}) >= q_n, i.e. every Brjuno term is at least 1.
enum class GrowthRule {
    CeilExpOverQ,  // a_{n+1} = ceil(e^{q_n} / q_n)
    PowerOfTwo,    // a_{n+1} = 2^{q_n}  (Liouville-type)
};

struct NonBrjunoAngle {
    ContinuedFraction cf;        // materialized prefix
    double theta = 0.0;          // floating approximation from the prefix
    std::size_t certified_terms = 0;  // terms >= 1 by exact integer comparison
    std::size_t total_terms = 0;      // requested N; the rest hold by the rule
    bool truncated = false;           // prefix stopped at the bit budget
    // Lower bound on the partial sum after total_terms terms; equals
    // total_terms since every term is at least 1.
    std::size_t partial_sum_lower_bound() const { return total_terms; }
};

// Builds a continued fraction whose first N Brjuno terms are all >= 1.
// Quotients grow like exp(q_n), so only the first few are materializable;
// the prefix is verified by exact integer comparison against rational
// bounds on e, and the remaining terms hold by construction of the rule.
// The angle defined by the full infinite rule is irrational; only the
// materialized prefix is returned.
NonBrjunoAngle make_non_brjuno(GrowthRule rule, std::size_t N,
                               std::size_t budget_bits = 1u << 20);

}  // namespace cubicatlas
