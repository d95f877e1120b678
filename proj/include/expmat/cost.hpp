#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace expmat {

// Exact small rational, used for costs in matrix-product units.
// One dense matrix-matrix product = 1, one multi-RHS solve (or inverse) = 4/3.
struct Frac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Frac() = default;
    constexpr Frac(std::int64_t n) : num(n), den(1) {}
    Frac(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Frac: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Frac a, Frac b) { return !(a == b); }
    friend bool operator<(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    static Frac parse(const std::string& s);
};

// Tallies the work of one evaluation.  total() is monotone non-decreasing:
// the only mutators add non-negative amounts.
class CostLedger {
  public:
    void add_products(std::int64_t n = 1) { products_ = products_ + Frac(n); }
    void add_solves(std::int64_t n = 1) { solves_ = solves_ + Frac(n); }

    Frac products() const { return products_; }
    Frac solves() const { return solves_; }
    Frac total() const { return products_ + Frac(4, 3) * solves_; }

  private:
    Frac products_{0};
    Frac solves_{0};
};

}  // namespace expmat
