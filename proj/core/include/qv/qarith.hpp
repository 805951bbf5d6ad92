// Integer and modular arithmetic for exponent-tuple algebra over hybrid
// local dimensions: primality, factorization, lcm, and the divisibility
// condition sum_k h_k*j_k/d_k in Z that drives every test coefficient.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qv {

// Exponent tuple (h_0,...,h_{n-1}) with h_k in Z_{d_k}; the same shape is
// used for measurement-outcome tuples (j_0,...,j_{n-1}).
using ExponentTuple = std::vector<int>;

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Global Hilbert-dimension cap for dense work. Default 4096.
long long dimension_cap();
void set_dimension_cap(long long cap);

bool is_prime(long long n);

// Prime factorization with ascending primes, n >= 2.
std::vector<std::pair<long long, int>> factorize(long long n);

// Ordered local dimensions d_0..d_{n-1}, each >= 2.
class HybridDims {
  public:
    HybridDims() = default;
    explicit HybridDims(std::vector<int> dims);

    int n() const { return static_cast<int>(dims_.size()); }
    int dim(int k) const { return dims_.at(k); }
    const std::vector<int>& dims() const { return dims_; }

    // Product of all local dimensions, checked against the cap.
    long long total() const;

    bool all_prime() const;

    // Per-particle prime split: each composite d expands to its prime
    // factors in ascending order, repeated by multiplicity (12 -> 2,2,3).
    std::vector<std::vector<int>> prime_split() const;

    // Dims with every particle replaced by its prime split.
    HybridDims split() const;

    long long lcm() const;

    bool operator==(const HybridDims& o) const { return dims_ == o.dims_; }

  private:
    std::vector<int> dims_;
};

long long lcm_of(const HybridDims& dims);

// Mixed-radix index conversions; particle 0 is the most significant digit.
long long tuple_to_index(const ExponentTuple& t, const HybridDims& dims);
ExponentTuple index_to_tuple(long long index, const HybridDims& dims);

// True iff sum_k h_k*j_k/d_k is an integer, evaluated exactly via the lcm
// rescaling sum_k h_k*j_k*(L/d_k) = 0 (mod L).
bool residue_condition(const ExponentTuple& h, const ExponentTuple& j,
                       const HybridDims& dims);

// Number of members of C satisfying residue_condition with j.
long long count_condition_solutions(const std::vector<ExponentTuple>& c,
                                    const ExponentTuple& j,
                                    const HybridDims& dims);

// Exact rational on int64 with overflow-checked arithmetic. Numerator and
// denominator are kept reduced with den > 0.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;  // "p/q", or "p" when q == 1

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    static Rational parse(const std::string& s);  // "p/q" or "p"

  private:
    long long num_;
    long long den_;
};

}  // namespace qv
