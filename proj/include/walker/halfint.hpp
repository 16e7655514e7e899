#pragma once

#include <compare>
#include <string>

#include "walker/rational.hpp"

namespace walker {

/// Half-integer index nu = d/2 - 1, stored exactly as twice its value.
/// Dimension d = twice + 2 >= 2 always.
class HalfInt {
  public:
    constexpr HalfInt() : twice_(0) {}
    constexpr explicit HalfInt(int twice) : twice_(twice) {}

    static constexpr HalfInt from_int(int nu) { return HalfInt(2 * nu); }
    static HalfInt from_dimension(int d) {
        if (d < 2) throw domain_error("HalfInt: dimension must be >= 2");
        return HalfInt(d - 2);
    }

    constexpr int twice() const { return twice_; }
    constexpr int dimension() const { return twice_ + 2; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr int int_value() const { return twice_ / 2; }  // valid iff is_integer()

    BigRat rat() const { return BigRat(twice_, 2); }
    Real real() const { return Real(twice_) / 2; }
    double dbl() const { return twice_ / 2.0; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    HalfInt operator+(int k) const { return HalfInt(twice_ + 2 * k); }
    HalfInt operator-(int k) const { return HalfInt(twice_ - 2 * k); }
    friend auto operator<=>(const HalfInt&, const HalfInt&) = default;

  private:
    int twice_;
};

}  // namespace walker
