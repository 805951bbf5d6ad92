#include "qv/qarith.hpp"

#include <atomic>
#include <numeric>

namespace qv {

namespace {
std::atomic<long long> g_dimension_cap{4096};
}

long long dimension_cap() { return g_dimension_cap.load(); }

void set_dimension_cap(long long cap) {
    if (cap < 2) throw std::invalid_argument("dimension cap must be >= 2");
    g_dimension_cap.store(cap);
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::vector<std::pair<long long, int>> out;
    auto strip = [&](long long p) {
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        if (mult > 0) out.emplace_back(p, mult);
    };
    strip(2);
    for (long long p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

HybridDims::HybridDims(std::vector<int> dims) : dims_(std::move(dims)) {
    for (int d : dims_)
        if (d < 2) throw std::invalid_argument("HybridDims: every dimension must be >= 2");
    total();  // enforce the cap at construction
}

long long HybridDims::total() const {
    long long prod = 1;
    for (int d : dims_) {
        prod *= d;
        if (prod > dimension_cap())
            throw capacity_error("HybridDims: total dimension " + std::to_string(prod) +
                                 " exceeds cap " + std::to_string(dimension_cap()));
    }
    return prod;
}

bool HybridDims::all_prime() const {
    for (int d : dims_)
        if (!is_prime(d)) return false;
    return true;
}

std::vector<std::vector<int>> HybridDims::prime_split() const {
    std::vector<std::vector<int>> out;
    out.reserve(dims_.size());
    for (int d : dims_) {
        std::vector<int> factors;
        for (const auto& [p, mult] : factorize(d))
            for (int i = 0; i < mult; ++i) factors.push_back(static_cast<int>(p));
        out.push_back(std::move(factors));
    }
    return out;
}

HybridDims HybridDims::split() const {
    std::vector<int> flat;
    for (const auto& factors : prime_split())
        flat.insert(flat.end(), factors.begin(), factors.end());
    return HybridDims(flat);
}

long long HybridDims::lcm() const {
    long long l = 1;
    for (int d : dims_) l = std::lcm(l, static_cast<long long>(d));
    return l;
}

long long lcm_of(const HybridDims& dims) { return dims.lcm(); }

long long tuple_to_index(const ExponentTuple& t, const HybridDims& dims) {
    if (static_cast<int>(t.size()) != dims.n())
        throw std::invalid_argument("tuple_to_index: length mismatch");
    long long idx = 0;
    for (int k = 0; k < dims.n(); ++k) {
        if (t[k] < 0 || t[k] >= dims.dim(k))
            throw std::invalid_argument("tuple_to_index: entry out of range");
        idx = idx * dims.dim(k) + t[k];
    }
    return idx;
}

ExponentTuple index_to_tuple(long long index, const HybridDims& dims) {
    ExponentTuple t(dims.n());
    for (int k = dims.n() - 1; k >= 0; --k) {
        t[k] = static_cast<int>(index % dims.dim(k));
        index /= dims.dim(k);
    }
    return t;
}

bool residue_condition(const ExponentTuple& h, const ExponentTuple& j,
                       const HybridDims& dims) {
    if (static_cast<int>(h.size()) != dims.n() || static_cast<int>(j.size()) != dims.n())
        throw std::invalid_argument("residue_condition: length mismatch");
    const long long l = dims.lcm();
    long long acc = 0;
    for (int k = 0; k < dims.n(); ++k) {
        const long long d = dims.dim(k);
        const long long hk = ((h[k] % d) + d) % d;
        const long long jk = ((j[k] % d) + d) % d;
        acc = (acc + hk * jk % l * (l / d)) % l;
    }
    return acc == 0;
}

long long count_condition_solutions(const std::vector<ExponentTuple>& c,
                                    const ExponentTuple& j, const HybridDims& dims) {
    long long count = 0;
    for (const auto& h : c)
        if (residue_condition(h, j, dims)) ++count;
    return count;
}

namespace {

long long checked_narrow(__int128 v, const char* what) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(std::string("Rational overflow in ") + what);
    return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const long long g = gcd_ll(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational& o) const {
    const __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * o.den_;
    __int128 g = n < 0 ? -n : n;
    __int128 dd = d;
    while (dd) {
        __int128 t = g % dd;
        g = dd;
        dd = t;
    }
    if (g == 0) g = 1;
    return Rational(checked_narrow(n / g, "+"), checked_narrow(d / g, "+"));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    const long long g1 = gcd_ll(num_, o.den_);
    const long long g2 = gcd_ll(o.num_, den_);
    const __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    const __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    return Rational(checked_narrow(n, "*"), checked_narrow(d, "*"));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

Rational Rational::parse(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace qv
