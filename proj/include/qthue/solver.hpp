// Thue inequality solver 0 < |F(x, y)| <= h for quartic F: an exhaustive
// search over root windows for small |y|, continued-fraction convergents of
// the real roots beyond that, and a brute-force box oracle.
#pragma once

#include <qthue/errors.hpp>
#include <qthue/integer.hpp>
#include <qthue/quartic_form.hpp>
#include <qthue/roots.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qthue {

struct SolverConfig {
    Integer h = 1;
    /// Lower bound on the exhaustive phase; 0 means derive it (never below 64).
    Integer y_exhaustive = 0;
    Integer q_max = Integer("1000000000000");
    unsigned root_precision_bits = 256;
};

/// How a real root was treated by the search.
enum class RootTreatment { Convergents, ExtendedConvergents, RationalBounded, ComplexBounded };

inline std::string_view to_string(RootTreatment t) {
    switch (t) {
        case RootTreatment::Convergents: return "convergents";
        case RootTreatment::ExtendedConvergents: return "extended-convergents";
        case RootTreatment::RationalBounded: return "rational-bounded";
        case RootTreatment::ComplexBounded: return "complex-bounded";
    }
    return "?";
}

struct RootRecord {
    std::optional<RootEnclosure> enclosure;  // real roots only
    double re = 0, im = 0;
    int multiplicity = 1;
    RootTreatment treatment = RootTreatment::Convergents;
    /// Largest |y| a solution attached to this root may have (0 = unbounded).
    Integer y_limit = 0;
};

struct SearchCertificate {
    Integer Y0;
    Integer q_max;
    /// Search ran on G(x, y) = F(x, shift*x + y), which has G(1, 0) != 0.
    Integer shift;
    std::vector<RootRecord> roots;
    /// Phase-2 candidate pairs, canonical, in the coordinates of F.
    std::vector<CanonicalPair> convergent_candidates;
};

struct SolutionSet {
    std::vector<PrimitiveSolution> plus;   // values in (0, h]
    std::vector<PrimitiveSolution> minus;  // values in [-h, 0)
    SearchCertificate certificate;

    std::size_t size() const { return plus.size() + minus.size(); }
    std::vector<PrimitiveSolution> all() const {
        auto v = plus;
        v.insert(v.end(), minus.begin(), minus.end());
        std::sort(v.begin(), v.end(), solution_order);
        return v;
    }
};

namespace detail {

class SolutionCollector {
  public:
    SolutionCollector(const QuarticForm& form, const Integer& h) : form_(form), h_(h) {}

    /// Canonicalizes (x, y), checks coprimality and 0 < |F| <= h exactly.
    bool offer(const Integer& x, const Integer& y) {
        if (x == 0 && y == 0) return false;
        auto pair = normalize_solution(x, y, true);
        if (!pair) return false;
        auto key = std::make_pair(pair->x, pair->y);
        if (seen_.count(key)) return true;
        Integer v = form_(pair->x, pair->y);
        if (v == 0 || abs(v) > h_) return false;
        seen_.emplace(key, v);
        return true;
    }

    SolutionSet finish() const {
        SolutionSet s;
        for (const auto& [key, v] : seen_) {
            PrimitiveSolution sol{key.first, key.second, v};
            (v > 0 ? s.plus : s.minus).push_back(sol);
        }
        std::sort(s.plus.begin(), s.plus.end(), solution_order);
        std::sort(s.minus.begin(), s.minus.end(), solution_order);
        return s;
    }

  private:
    const QuarticForm& form_;
    Integer h_;
    std::map<std::pair<Integer, Integer>, Integer> seen_;
};

inline Integer real_floor(const Real& v) { return Integer(boost::multiprecision::floor(v)); }
inline Integer real_ceil(const Real& v) { return Integer(boost::multiprecision::ceil(v)); }

}  // namespace detail

/// All primitive solutions of 0 < |F(x,y)| <= h with max(|x|, |y|) <= box, by
/// direct evaluation of every pair.
inline SolutionSet brute_solve(const QuarticForm& form, const Integer& h, const Integer& box) {
    require(box >= 1, "box must be positive");
    require(h >= 1, "h must be positive");
    detail::SolutionCollector col(form, h);
    col.offer(1, 0);
    Integer coeff_sum = 0;
    for (const auto& c : form.coefficients()) coeff_sum += abs(c);
    Integer peak = coeff_sum * pow(box + 5, 4);
    const bool fast = peak < (Integer(1) << 62) && h < (Integer(1) << 40) && box < (Integer(1) << 30);
    if (fast) {
        const std::int64_t b = to_int64(box), hh = to_int64(h);
        std::array<int128, 5> a;
        for (int i = 0; i < 5; ++i) a[i] = to_int128(form[i]);
        auto eval = [&](int128 x, int128 y) {
            int128 acc = a[0], yp = y;
            for (int i = 1; i < 5; ++i) {
                acc = acc * x + a[i] * yp;
                yp *= y;
            }
            return acc;
        };
        for (std::int64_t y = 1; y <= b; ++y) {
            // Forward differences of x -> F(x, y) from x = -b; exact modulo 2^64,
            // and every true value fits in 62 bits.
            std::uint64_t d[5];
            int128 vals[5];
            for (int i = 0; i < 5; ++i) vals[i] = eval(-b + i, y);
            for (int order = 0; order < 5; ++order) {
                d[order] = static_cast<std::uint64_t>(vals[0]);
                for (int i = 0; i + 1 < 5 - order; ++i) vals[i] = vals[i + 1] - vals[i];
            }
            for (std::int64_t x = -b; x <= b; ++x) {
                auto v = static_cast<std::int64_t>(d[0]);
                if (v != 0 && v >= -hh && v <= hh) col.offer(x, y);
                d[0] += d[1];
                d[1] += d[2];
                d[2] += d[3];
                d[3] += d[4];
            }
        }
    } else {
        for (Integer y = 1; y <= box; ++y)
            for (Integer x = -box; x <= box; ++x) {
                Integer v = form(x, y);
                if (v != 0 && abs(v) <= h) col.offer(x, y);
            }
    }
    return col.finish();
}

/// All primitive solutions of 0 < |F(x, y)| <= h: complete for |y| <= Y0 (in the
/// shifted coordinates recorded in the certificate) and, beyond Y0, for every
/// solution whose ratio is a convergent with denominator <= q_max.
inline SolutionSet solve(const QuarticForm& form, const SolverConfig& cfg = {}) {
    if (form.is_zero()) fail(ErrorCode::DegenerateForm, "F is identically zero");
    require(cfg.h >= 1, "h must be positive");
    require(cfg.q_max >= 1, "q_max must be positive");
    const Integer& h = cfg.h;

    Integer shift = 0;
    for (int k = 0; form(1, shift) == 0; ++k) shift = (k % 2 == 0) ? Integer(k / 2 + 1) : Integer(-(k / 2 + 1));
    const QuarticForm g = act(form, Matrix2{1, 0, shift, 1});
    const Integer& lead = g[0];

    SearchCertificate cert;
    cert.shift = shift;
    cert.q_max = cfg.q_max;

    auto roots = numeric_roots(g, cfg.root_precision_bits);

    // c * (q x - p y)^4: either no solutions or infinitely many.
    if (roots.size() == 1 && roots[0].multiplicity == 4) {
        const auto& e = *roots[0].enclosure;
        Integer q = denominator(e.lo);
        Integer c = lead / pow(q, 4);
        if (abs(c) > h) {
            SolutionSet empty;
            cert.Y0 = 0;
            empty.certificate = std::move(cert);
            return empty;
        }
        fail(ErrorCode::DegenerateForm, "F is a constant times a fourth power; infinitely many solutions");
    }

    const Real hr = to_float<Real>(h);
    const Real lead_abs = abs(to_float<Real>(lead));
    const Real slack("1.000001");

    struct Work {
        const NumericRoot* root;
        Real bound;  // |z - theta|^m <= bound / y^4
        Integer y_limit;
        RootTreatment treatment;
    };
    std::vector<Work> work;
    Integer Y0 = std::max(Integer(64), cfg.y_exhaustive);
    for (const auto& r : roots) {
        Real denom = lead_abs;
        for (const auto& o : roots) {
            if (&o == &r) continue;
            Real dist = sqrt((r.re - o.re) * (r.re - o.re) + (r.im - o.im) * (r.im - o.im));
            denom *= pow(dist / 2, o.multiplicity);
        }
        Real G = hr / denom * slack;
        const int m = r.multiplicity;
        Work w{&r, G, 0, RootTreatment::Convergents};
        if (!r.is_real) {
            // |Im theta| y <= |x - theta y| <= G^(1/m) y^(1 - 4/m)
            Real lim = pow(G / pow(abs(r.im), m), Real("0.25"));
            w.y_limit = detail::real_floor(lim) + 1;
            w.treatment = RootTreatment::ComplexBounded;
        } else if (r.enclosure->exact) {
            // x/y != p/q forces |x - theta y| >= 1/q.
            Real q = to_float<Real>(denominator(r.enclosure->lo));
            Real lim = pow(q * pow(G, Real(1) / m), Real(m) / (4 - m));
            w.y_limit = detail::real_floor(lim) + 1;
            w.treatment = RootTreatment::RationalBounded;
        } else if (m == 1) {
            // Beyond sqrt(2G) the classical criterion |z - theta| < 1/(2 y^2) holds.
            w.y_limit = detail::real_floor(sqrt(2 * G)) + 1;
            w.treatment = RootTreatment::Convergents;
            Y0 = std::max(Y0, w.y_limit);
        } else {
            // Squared irreducible quadratic factor: |z - theta| <= G^(1/2) / y^2.
            w.y_limit = 0;
            w.treatment = RootTreatment::ExtendedConvergents;
        }
        if (w.treatment != RootTreatment::ExtendedConvergents && w.treatment != RootTreatment::Convergents)
            Y0 = std::max(Y0, w.y_limit);
        work.push_back(w);
    }
    cert.Y0 = Y0;

    detail::SolutionCollector col(g, h);

    // Phase 1: y = 0, then every y in [1, Y0] over the windows around each root.
    col.offer(1, 0);
    Real max_ratio = 0;
    for (int i = 1; i < 5; ++i) max_ratio = std::max(max_ratio, Real(abs(to_float<Real>(g[i])) / lead_abs));
    const Real x_radius_ratio = 2 * max_ratio + 1;
    const Real x_floor_radius = pow(2 * hr / lead_abs, Real("0.25"));

    std::array<int128, 5> gi{};
    Integer gsum = 0;
    for (int i = 0; i < 5; ++i) gsum += abs(g[i]);
    const bool small_coeffs = gsum < (Integer(1) << 40);
    if (small_coeffs)
        for (int i = 0; i < 5; ++i) gi[i] = to_int128(g[i]);
    const bool small_h = h < (Integer(1) << 60);
    const int128 h128 = small_h ? to_int128(h) : 0;

    for (const auto& w : work) {
        Integer ylim = Y0;
        if (w.treatment == RootTreatment::ComplexBounded || w.treatment == RootTreatment::RationalBounded)
            ylim = std::min(ylim, w.y_limit);
        const int m = w.root->multiplicity;
        const Real Gm = pow(w.bound, Real(1) / m);
        for (Integer y = 1; y <= ylim; ++y) {
            Real yr = to_float<Real>(y);
            Real rad = Gm * pow(yr, Real(1) - Real(4) / m);
            Real global = std::max(x_radius_ratio * yr, x_floor_radius) + 1;
            Real center = w.root->re * yr;
            Real lo_r = std::max(center - rad - 1, -global), hi_r = std::min(center + rad + 1, global);
            if (lo_r > hi_r) continue;
            Integer lo = detail::real_ceil(lo_r), hi = detail::real_floor(hi_r);
            Integer reach = std::max(abs(lo), abs(hi)) + y;
            if (small_coeffs && small_h && reach < (Integer(1) << 20)) {
                const int128 yy = to_int128(y);
                const int128 xhi = to_int128(hi);
                for (int128 x = to_int128(lo); x <= xhi; ++x) {
                    int128 acc = gi[0], yp = yy;
                    for (int i = 1; i < 5; ++i) {
                        acc = acc * x + gi[i] * yp;
                        yp *= yy;
                    }
                    if (acc != 0 && acc <= h128 && acc >= -h128) col.offer(to_integer(x), y);
                }
            } else {
                for (Integer x = lo; x <= hi; ++x) col.offer(x, y);
            }
        }
    }

    // Phase 2: convergents of the irrational real roots.
    std::vector<std::pair<Integer, Integer>> candidates;
    for (const auto& w : work) {
        if (w.treatment == RootTreatment::Convergents) {
            for (const auto& pq : convergents(*w.root->enclosure, cfg.q_max)) candidates.push_back(pq);
        } else if (w.treatment == RootTreatment::ExtendedConvergents) {
            // |theta - p/q| < k/q^2 implies p/q = (r p_{n+1} +- s p_n)/(r q_{n+1} +- s q_n)
            // with r, s >= 0 and r s < 2k.
            Real k = sqrt(w.bound);
            Integer two_k = detail::real_floor(2 * k) + 1;
            auto conv = convergents(*w.root->enclosure, cfg.q_max * (two_k + 2));
            conv.insert(conv.begin(), {Integer(1), Integer(0)});
            for (std::size_t n = 0; n + 1 < conv.size(); ++n) {
                const auto& [pn, qn] = conv[n];
                const auto& [pn1, qn1] = conv[n + 1];
                if (qn1 <= cfg.q_max) candidates.emplace_back(pn1, qn1);
                for (Integer r = 1; r <= two_k; ++r)
                    for (Integer s = 1; r * s <= two_k; ++s)
                        for (int sg : {1, -1}) {
                            Integer p = r * pn1 + sg * s * pn, q = r * qn1 + sg * s * qn;
                            if (q < 0) {
                                p = -p;
                                q = -q;
                            }
                            if (q >= 1 && q <= cfg.q_max) candidates.emplace_back(p, q);
                        }
            }
        }
    }
    for (const auto& [p, q] : candidates) {
        col.offer(p, q);
        if (auto c = normalize_solution(p, q + shift * p, false)) cert.convergent_candidates.push_back(*c);
    }
    std::sort(cert.convergent_candidates.begin(), cert.convergent_candidates.end(),
              [](const auto& a, const auto& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
    cert.convergent_candidates.erase(std::unique(cert.convergent_candidates.begin(), cert.convergent_candidates.end()),
                                     cert.convergent_candidates.end());

    for (const auto& w : work) {
        RootRecord rec;
        rec.enclosure = w.root->enclosure;
        rec.re = w.root->re.convert_to<double>();
        rec.im = w.root->im.convert_to<double>();
        rec.multiplicity = w.root->multiplicity;
        rec.treatment = w.treatment;
        rec.y_limit = w.y_limit;
        cert.roots.push_back(std::move(rec));
    }

    // Map back to F's coordinates: (x, y) -> (x, shift*x + y).
    SolutionSet shifted = col.finish();
    // c * Q^2 with Q indefinite: the automorphs of Q carry one solution to infinitely many.
    const bool square_of_quadratic = roots.size() == 2 && roots[0].multiplicity == 2 && roots[1].multiplicity == 2 &&
                                     roots[0].is_real && roots[1].is_real;
    if (square_of_quadratic && shifted.size() > 0)
        fail(ErrorCode::DegenerateForm, "F is a constant times the square of an indefinite quadratic; infinitely many solutions");
    detail::SolutionCollector back(form, h);
    for (const auto& s : shifted.all()) {
        bool ok = back.offer(s.x, shift * s.x + s.y);
        if (!ok) fail(ErrorCode::Internal, "solution lost while undoing the shift");
    }
    SolutionSet out = back.finish();
    out.certificate = std::move(cert);
    return out;
}

}  // namespace qthue
