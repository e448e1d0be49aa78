#include "cubicatlas/brjuno.hpp"

#include <cctype>
#include <stdexcept>

namespace cubicatlas {

using boost::multiprecision::cpp_int;

RealInput RealInput::from_decimal(const std::string& text) {
    std::string s = text;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    long frac_digits = -1;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("RealInput: two decimal points");
            frac_digits = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw std::invalid_argument("RealInput: bad character in decimal");
        }
    }
    if (digits.empty()) throw std::invalid_argument("RealInput: no digits");
    if (frac_digits < 0) frac_digits = 0;
    cpp_int num(digits);
    cpp_int den = pow(cpp_int(10), static_cast<unsigned>(frac_digits));
    BigRational v(num, den);
    if (negative) v = -v;
    return {v, BigRational(1, den)};
}

ContinuedFraction cf_expand(const RealInput& theta, std::size_t n_quotients) {
    BigRational lo = theta.value - theta.uncertainty;
    BigRational hi = theta.value + theta.uncertainty;
    const bool exact = theta.uncertainty == 0;
    if (!(theta.value > 0 && theta.value < 1)) {
        throw std::invalid_argument("cf_expand: theta must lie in (0,1)");
    }

    ContinuedFraction cf;
    // Convergent lists start at p_0/q_0 = 0/1; the recurrence also needs
    // the formal pair p_-1/q_-1 = 1/0.
    cpp_int p_prev = 1, q_prev = 0;
    cpp_int p_cur = 0, q_cur = 1;    // p_0 / q_0
    cf.p = {p_cur};
    cf.q = {q_cur};

    for (std::size_t n = 0; n < n_quotients; ++n) {
        if (exact) {
            if (lo == 0) throw std::invalid_argument("cf_expand: rational input (terminating expansion)");
        } else if (!(lo > 0)) {
            cf.precision_exhausted = true;
            break;
        }
        // x in [lo,hi], 0 < lo <= hi < 1: the next quotient is floor(1/x).
        cpp_int a_from_hi = numerator(BigRational(1) / hi) / denominator(BigRational(1) / hi);
        cpp_int a_from_lo = numerator(BigRational(1) / lo) / denominator(BigRational(1) / lo);
        if (!exact && a_from_hi != a_from_lo) {
            cf.precision_exhausted = true;
            break;
        }
        cpp_int a = a_from_hi;
        // New interval: 1/x - a, reversing orientation.
        BigRational new_lo = BigRational(1) / hi - BigRational(a);
        BigRational new_hi = BigRational(1) / lo - BigRational(a);
        lo = new_lo;
        hi = new_hi;

        cpp_int p_next = a * p_cur + p_prev;
        cpp_int q_next = a * q_cur + q_prev;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
        cf.quotients.push_back(a);
        cf.p.push_back(p_cur);
        cf.q.push_back(q_cur);
    }
    return cf;
}

BrjunoPartialSums brjuno_partial_sums(const ContinuedFraction& cf) {
    if (cf.q.size() < 2) throw std::invalid_argument("brjuno_partial_sums: need at least two convergents");
    BrjunoPartialSums out;
    Float50 running = 0;
    for (std::size_t n = 0; n + 1 < cf.q.size(); ++n) {
        Float50 term = log(Float50(cf.q[n + 1])) / Float50(cf.q[n]);
        running += term;
        out.terms.push_back(term);
        out.partial_sums.push_back(running);
    }
    return out;
}

double BrjunoPartialSums::total() const {
    return partial_sums.empty() ? 0.0 : partial_sums.back().convert_to<double>();
}

namespace {

// e truncated to 50 digits after the point; e_hi = e_lo + 1 ulp.
const char* kEDigits = "271828182845904523536028747135266249775724709369995";
constexpr unsigned kEScale = 50;

// Exact ceil(e^q / q), certified by bracketing e between two rationals.
// Returns false when the brackets disagree (never happens at these sizes).
bool exact_ceil_exp_over_q(const cpp_int& q, cpp_int& out) {
    cpp_int e_lo(kEDigits);
    cpp_int e_hi = e_lo + 1;
    unsigned qe = q.convert_to<unsigned>();
    cpp_int scale = pow(cpp_int(10), kEScale * qe);
    cpp_int lo_pow = pow(e_lo, qe);
    cpp_int hi_pow = pow(e_hi, qe);
    // ceil(x/y) for positive integers.
    auto ceil_div = [](const cpp_int& x, const cpp_int& y) { return (x + y - 1) / y; };
    cpp_int lo_ceil = ceil_div(lo_pow, q * scale);
    cpp_int hi_ceil = ceil_div(hi_pow, q * scale);
    if (lo_ceil != hi_ceil) return false;
    out = lo_ceil;
    return true;
}

// q_next >= e^{q} by exact integer comparison, using the upper bracket.
bool certify_term(const cpp_int& q, const cpp_int& q_next) {
    cpp_int e_hi = cpp_int(kEDigits) + 1;
    unsigned qe = q.convert_to<unsigned>();
    return q_next * pow(cpp_int(10), kEScale * qe) >= pow(e_hi, qe);
}

}  // namespace

NonBrjunoAngle make_non_brjuno(GrowthRule rule, std::size_t N, std::size_t budget_bits) {
    NonBrjunoAngle out;
    out.total_terms = N;

    cpp_int p_prev = 1, q_prev = 0;
    cpp_int p_cur = 0, q_cur = 1;
    out.cf.p = {p_cur};
    out.cf.q = {q_cur};

    for (std::size_t n = 0; n < N; ++n) {
        // Size of the next quotient in bits is about q_n * log2(e) (or
        // exactly q_n for the power-of-two rule); stop materializing when
        // it no longer fits the budget.
        double next_bits = q_cur.convert_to<double>() * 1.4427;
        if (next_bits > static_cast<double>(budget_bits)) {
            out.truncated = true;
            break;
        }
        cpp_int a;
        if (rule == GrowthRule::PowerOfTwo) {
            a = cpp_int(1) << q_cur.convert_to<unsigned>();
        } else {
            if (!exact_ceil_exp_over_q(q_cur, a)) {
                out.truncated = true;  // bracket too coarse; treat as budget
                break;
            }
        }
        cpp_int p_next = a * p_cur + p_prev;
        cpp_int q_next = a * q_cur + q_prev;

        // Exact certificate for this term: ln(q_{n+1}) >= q_n.
        bool ok = (rule == GrowthRule::PowerOfTwo)
                      ? (q_next >= pow(cpp_int(3), q_cur.convert_to<unsigned>()))  // 3 > e
                      : certify_term(q_cur, q_next);
        if (ok) ++out.certified_terms;

        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
        out.cf.quotients.push_back(a);
        out.cf.p.push_back(p_cur);
        out.cf.q.push_back(q_cur);
    }

    if (!out.cf.quotients.empty()) {
        out.theta = BigRational(p_cur, q_cur).convert_to<double>();
    }
    return out;
}

}  // namespace cubicatlas
