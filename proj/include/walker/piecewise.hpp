#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "walker/laurent.hpp"

namespace walker {

enum class Parity { even, none };

/// Piecewise Laurent function on [breaks.front(), breaks.back()], x >= 0.
/// pieces[i] owns (breaks[i], breaks[i+1]]; the left piece wins at interior
/// breakpoints, the first piece covers the left endpoint. With parity ==
/// even the function extends to x < 0 by f(-x) = f(x); stored pieces are
/// plain polynomials of x, |x| never appears.
class PiecewiseFn {
  public:
    PiecewiseFn() = default;
    PiecewiseFn(std::vector<BigRat> breaks, std::vector<LaurentPoly> pieces,
                Parity parity = Parity::none)
        : breaks_(std::move(breaks)), pieces_(std::move(pieces)), parity_(parity) {
        if (breaks_.size() != pieces_.size() + 1 || pieces_.empty())
            throw domain_error("PiecewiseFn: piece count must be breakpoint count - 1");
        for (size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw domain_error("PiecewiseFn: breakpoints must be strictly increasing");
    }

    const std::vector<BigRat>& breaks() const { return breaks_; }
    const std::vector<LaurentPoly>& pieces() const { return pieces_; }
    Parity parity() const { return parity_; }
    const BigRat& support_min() const { return breaks_.front(); }
    const BigRat& support_max() const { return breaks_.back(); }

    size_t piece_index(const BigRat& x) const {
        if (x < breaks_.front() || x > breaks_.back())
            throw domain_error("PiecewiseFn: evaluation outside domain");
        if (x == breaks_.front()) return 0;
        // left-open, right-closed intervals resolve breakpoint ties leftward
        size_t lo = 0, hi = breaks_.size() - 1;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            if (breaks_[mid] < x)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

    BigRat eval_rat(const BigRat& x) const { return pieces_[piece_index(x)].eval_rat(x); }

    Real eval(const Real& x) const {
        if (x < to_real(breaks_.front()) || x > to_real(breaks_.back()))
            throw domain_error("PiecewiseFn: evaluation outside domain");
        size_t i = 0;
        while (i + 1 < pieces_.size() && x > to_real(breaks_[i + 1])) ++i;
        return pieces_[i].eval(x);
    }
    Real eval(const Real& x, size_t piece) const { return pieces_[piece].eval(x); }

    /// Evaluate via an exact rational abscissa (avoids binary/decimal fuzz).
    Real eval_at(const BigRat& x) const { return pieces_[piece_index(x)].eval(to_real(x)); }

    PiecewiseFn map_pieces(const std::function<LaurentPoly(const LaurentPoly&)>& f,
                           Parity parity) const {
        std::vector<LaurentPoly> out;
        out.reserve(pieces_.size());
        for (const auto& p : pieces_) out.push_back(f(p));
        return PiecewiseFn(breaks_, out, parity);
    }

    int min_exponent() const {
        int m = 0;
        bool first = true;
        for (const auto& p : pieces_) {
            if (p.is_zero()) continue;
            m = first ? p.min_exponent() : std::min(m, p.min_exponent());
            first = false;
        }
        return m;
    }

    /// Exact integral over the stored domain [breaks.front(), breaks.back()].
    BigRat integral() const {
        BigRat total = 0;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            LaurentPoly F = pieces_[i].antiderivative();
            total += F.eval_rat(breaks_[i + 1]) - F.eval_rat(breaks_[i]);
        }
        return total;
    }

    /// Exact moment integral_domain x^s f(x) dx for integer s. Throws
    /// pole_error when divergent at 0; error when a log term survives
    /// (the value is then transcendental; use moment_real).
    BigRat moment_exact(long s) const {
        BigRat total = 0;
        bool logs = false;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            const BigRat &a = breaks_[i], &b = breaks_[i + 1];
            for (const auto& [e, c] : pieces_[i].terms()) {
                long p = s + e;
                if (a == 0 && p + 1 <= 0)
                    throw pole_error("moment_exact: divergent at 0 for s = " +
                                     std::to_string(s));
                if (p == -1)
                    logs = true;
                else
                    total += c * (rat_pow(b, p + 1) - rat_pow(a, p + 1)) / (p + 1);
            }
        }
        if (logs) throw error("moment_exact: value has a logarithmic part");
        return total;
    }

    /// Numeric moment for real s; integer s with log terms handled exactly.
    Real moment_real(const Real& s) const {
        Real total = 0;
        bool integral_s = (floor(s) == s);
        long si = integral_s ? s.convert_to<long>() : 0;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            const BigRat &a = breaks_[i], &b = breaks_[i + 1];
            Real ra = to_real(a), rb = to_real(b);
            for (const auto& [e, c] : pieces_[i].terms()) {
                if (integral_s && si + e == -1) {
                    if (a == 0) throw pole_error("moment_real: divergent at 0");
                    total += to_real(c) * log(rb / ra);
                    continue;
                }
                Real p = s + e;
                if (a == 0 && p + 1 <= 0) throw pole_error("moment_real: divergent at 0");
                Real hi = pow(rb, p + 1);
                Real lo = (a == 0) ? Real(0) : pow(ra, p + 1);
                total += to_real(c) * (hi - lo) / (p + 1);
            }
        }
        return total;
    }

    /// Running integral from the left end; result is continuous.
    PiecewiseFn antiderivative() const {
        std::vector<LaurentPoly> out;
        BigRat acc = 0;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            LaurentPoly F = pieces_[i].antiderivative();
            BigRat shift = acc - F.eval_rat(breaks_[i]);
            F.add_term(0, shift);
            acc = F.eval_rat(breaks_[i + 1]);
            out.push_back(std::move(F));
        }
        return PiecewiseFn(breaks_, out, Parity::none);
    }

    PiecewiseFn derivative() const {
        return map_pieces([](const LaurentPoly& p) { return p.derivative(); }, Parity::none);
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        for (const auto& b : breaks_) j["breaks"].push_back(rat_str(b));
        j["pieces"] = nlohmann::json::array();
        for (const auto& p : pieces_) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [e, c] : p.terms()) terms.push_back({e, rat_str(c)});
            j["pieces"].push_back(terms);
        }
        j["parity"] = parity_ == Parity::even ? "even" : "none";
        return j;
    }

    static PiecewiseFn from_json(const nlohmann::json& j) {
        std::vector<BigRat> breaks;
        for (const auto& b : j.at("breaks")) breaks.push_back(rat_parse(b.get<std::string>()));
        std::vector<LaurentPoly> pieces;
        for (const auto& jp : j.at("pieces")) {
            LaurentPoly p;
            for (const auto& t : jp) p.add_term(t.at(0).get<int>(), rat_parse(t.at(1).get<std::string>()));
            pieces.push_back(std::move(p));
        }
        Parity par = j.at("parity").get<std::string>() == "even" ? Parity::even : Parity::none;
        return PiecewiseFn(std::move(breaks), std::move(pieces), par);
    }

  private:
    std::vector<BigRat> breaks_;
    std::vector<LaurentPoly> pieces_;
    Parity parity_ = Parity::none;
};

namespace detail {

// Bivariate polynomial in (t, x) used only inside the exact convolution.
using Poly2 = std::map<std::pair<int, int>, BigRat>;

inline void poly2_add(Poly2& p, int te, int xe, const BigRat& c) {
    if (c == 0) return;
    auto key = std::make_pair(te, xe);
    auto [it, inserted] = p.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// p(t) * q(x - t) as a polynomial in (t, x)
inline Poly2 cross_product(const LaurentPoly& p, const LaurentPoly& q) {
    Poly2 r;
    for (const auto& [ep, cp] : p.terms()) {
        for (const auto& [eq, cq] : q.terms()) {
            // (x - t)^eq = sum_i C(eq,i) x^(eq-i) (-t)^i
            for (int i = 0; i <= eq; ++i) {
                BigRat c = cp * cq * BigRat(binomial_int(eq, i));
                if (i % 2 == 1) c = -c;
                poly2_add(r, ep + i, eq - i, c);
            }
        }
    }
    return r;
}

inline Poly2 antider_t(const Poly2& p) {
    Poly2 r;
    for (const auto& [key, c] : p) poly2_add(r, key.first + 1, key.second, c / (key.first + 1));
    return r;
}

// Substitute t = c (constant); result is a polynomial in x.
inline LaurentPoly subst_const(const Poly2& p, const BigRat& c) {
    LaurentPoly r;
    for (const auto& [key, v] : p) r.add_term(key.second, v * rat_pow(c, key.first));
    return r;
}

// Substitute t = x - c; result is a polynomial in x.
inline LaurentPoly subst_shift(const Poly2& p, const BigRat& c) {
    LaurentPoly r;
    for (const auto& [key, v] : p) {
        for (int i = 0; i <= key.first; ++i) {
            BigRat coef = v * BigRat(binomial_int(key.first, i)) * rat_pow(-c, key.first - i);
            r.add_term(i + key.second, coef);
        }
    }
    return r;
}

struct Segment {
    BigRat lo, hi;
    LaurentPoly p;
};

inline std::vector<Segment> full_line_segments(const PiecewiseFn& f) {
    if (f.parity() != Parity::even)
        throw domain_error("convolve: inputs must carry the even symmetry flag");
    if (f.support_min() != 0)
        throw domain_error("convolve: even functions must be stored from 0");
    std::vector<Segment> segs;
    const auto& br = f.breaks();
    for (size_t i = f.pieces().size(); i-- > 0;)
        segs.push_back({-br[i + 1], -br[i], f.pieces()[i].reflect()});
    for (size_t i = 0; i < f.pieces().size(); ++i)
        segs.push_back({br[i], br[i + 1], f.pieces()[i]});
    return segs;
}

}  // namespace detail

/// Exact convolution of two even, compactly supported piecewise polynomials
/// stored for x >= 0. Support lengths add.
inline PiecewiseFn convolve(const PiecewiseFn& f, const PiecewiseFn& g) {
    if (f.min_exponent() < 0 || g.min_exponent() < 0)
        throw domain_error("convolve: inputs must be polynomial (no negative exponents)");
    auto fs = detail::full_line_segments(f);
    auto gs = detail::full_line_segments(g);

    std::vector<BigRat> corners;
    for (const auto& a : fs)
        for (const auto& b : gs) {
            corners.push_back(a.lo + b.lo);
            corners.push_back(a.lo + b.hi);
            corners.push_back(a.hi + b.lo);
            corners.push_back(a.hi + b.hi);
        }
    corners.push_back(0);
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    // even result: keep x >= 0
    std::vector<BigRat> breaks;
    for (const auto& c : corners)
        if (c >= 0) breaks.push_back(c);

    std::vector<LaurentPoly> pieces;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        BigRat m = (breaks[i] + breaks[i + 1]) / 2;
        LaurentPoly acc;
        for (const auto& a : fs) {
            for (const auto& b : gs) {
                // integral over t of a.p(t) b.p(x-t), t in [max(a.lo, x-b.hi), min(a.hi, x-b.lo)]
                bool lo_const = a.lo >= m - b.hi;
                bool hi_const = a.hi <= m - b.lo;
                BigRat lo_m = lo_const ? a.lo : m - b.hi;
                BigRat hi_m = hi_const ? a.hi : m - b.lo;
                if (!(lo_m < hi_m)) continue;
                detail::Poly2 H = detail::antider_t(detail::cross_product(a.p, b.p));
                LaurentPoly upper = hi_const ? detail::subst_const(H, a.hi)
                                             : detail::subst_shift(H, b.lo);
                LaurentPoly lower = lo_const ? detail::subst_const(H, a.lo)
                                             : detail::subst_shift(H, b.hi);
                acc += upper - lower;
            }
        }
        pieces.push_back(std::move(acc));
    }
    return PiecewiseFn(std::move(breaks), std::move(pieces), Parity::even);
}

/// Apply p -> -p'/(2x) exactly m times, piecewise. The result may pick up
/// negative exponents.
inline PiecewiseFn apply_half_derivative_operator(const PiecewiseFn& f, int m) {
    if (m < 1) throw domain_error("apply_half_derivative_operator: m >= 1 required");
    PiecewiseFn r = f;
    for (int i = 0; i < m; ++i) {
        r = r.map_pieces(
            [](const LaurentPoly& p) {
                LaurentPoly d = p.derivative();
                d *= BigRat(-1, 2);
                return d.shift_exponents(-1);
            },
            f.parity());
    }
    return r;
}

}  // namespace walker
