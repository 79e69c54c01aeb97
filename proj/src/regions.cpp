#include "gpc/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gpc {

AffineExpr AffineExpr::value(const Rational& c) {
    AffineExpr e;
    e.constant = c;
    return e;
}

AffineExpr AffineExpr::var(int index) {
    AffineExpr e;
    e.coeffs.assign(static_cast<size_t>(index) + 1, Rational(0));
    e.coeffs.back() = 1;
    return e;
}

void AffineExpr::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& other) {
    constant += other.constant;
    if (coeffs.size() < other.coeffs.size()) coeffs.resize(other.coeffs.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
    trim();
    return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& other) {
    constant -= other.constant;
    if (coeffs.size() < other.coeffs.size()) coeffs.resize(other.coeffs.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs.size(); ++i) coeffs[i] -= other.coeffs[i];
    trim();
    return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& s) {
    constant *= s;
    for (auto& c : coeffs) c *= s;
    trim();
    return *this;
}

Rational AffineExpr::evaluate(std::span<const Rational> point) const {
    Rational v = constant;
    for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * point[i];
    return v;
}

double AffineExpr::evaluate(std::span<const double> point) const {
    double v = constant.get_d();
    for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i].get_d() * point[i];
    return v;
}

bool BoundChain::well_formed() const {
    if (var_count < 1 || bounds.size() != static_cast<size_t>(var_count)) return false;
    for (int i = 0; i < var_count; ++i) {
        const auto& b = bounds[static_cast<size_t>(i)];
        if (b.lower.last_referenced() >= i || b.upper.last_referenced() >= i) return false;
    }
    if (extra_slot && (*extra_slot < 0 || *extra_slot >= var_count)) return false;
    return true;
}

namespace {

Rational frac(long num, long den) { return make_rational(num, den); }

AffineExpr sum_vars(int count) {
    AffineExpr s;
    for (int j = 0; j < count; ++j) s += AffineExpr::var(j);
    return s;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Bounds of the ordered N = d + 1 systems, with k the 1-based index of the
// bounded eigenvalue (chain variable k - 1).
struct MaxNBounds {
    int d;

    // -(1/(d+2-k)) (1/(d-1) + sum_{b<k} lambda_b)
    AffineExpr low(int k) const {
        return (AffineExpr::value(frac(1, d - 1)) + sum_vars(k - 1)) * frac(-1, d + 2 - k);
    }
    // (1/(d+2-k)) (1 + d lambda_1 - sum_{b<k} lambda_b)
    AffineExpr high(int k) const {
        return (AffineExpr::value(1) + AffineExpr::var(0) * Rational(d) - sum_vars(k - 1)) * frac(1, d + 2 - k);
    }
    // (1/(d+2-k)) (1 - sum_{b<k} lambda_b)
    AffineExpr eb(int k) const { return (AffineExpr::value(1) - sum_vars(k - 1)) * frac(1, d + 2 - k); }
    AffineExpr prev(int k) const { return AffineExpr::var(k - 2); }
};

ChamberSet ordered_set(int d, ClassTag tag) {
    ChamberSet s;
    s.d = d;
    s.n_bases = d + 1;
    s.class_tag = tag;
    s.symmetry_factor = factorial(d + 1);
    s.ordering = Ordering::sorted;
    return s;
}

BoundChain new_chain(int vars, std::string label) {
    BoundChain c;
    c.var_count = vars;
    c.label = std::move(label);
    c.bounds.reserve(static_cast<size_t>(vars));
    return c;
}

constexpr std::array<const char*, 4> kSlotNames = {"min", "mid1", "mid2", "max"};

}  // namespace

ChamberSet p_box(int d, int n_bases) {
    validate_dimensions(d, n_bases);
    ChamberSet s;
    s.d = d;
    s.n_bases = n_bases;
    s.class_tag = ClassTag::p;
    s.symmetry_factor = 1;
    s.ordering = Ordering::none;
    const int vars = free_coordinates(d, n_bases);
    BoundChain c = new_chain(vars, "p:box");
    for (int i = 0; i < vars; ++i) c.bounds.push_back({AffineExpr::value(frac(-1, d - 1)), AffineExpr::value(1)});
    s.chains.push_back(std::move(c));
    return s;
}

ChamberSet cp_chambers_maxN(int d) {
    if (d < 2) throw std::invalid_argument("cp_chambers_maxN: d must be >= 2");
    const MaxNBounds b{d};
    const int vars = d + 1;
    const AffineExpr lambda1_min = AffineExpr::value(frac(-1, d - 1));
    const AffineExpr lambda1_split = AffineExpr::value(frac(-1, d * d - 1));
    ChamberSet s = ordered_set(d, ClassTag::cp);

    // lambda_1 .. lambda_d on the low branch; lambda_{d+1} spans both faces.
    {
        BoundChain c = new_chain(vars, "cp:low");
        c.bounds.push_back({lambda1_min, lambda1_split});
        for (int k = 2; k <= d; ++k) c.bounds.push_back({b.prev(k), b.low(k)});
        c.bounds.push_back({b.low(d + 1), b.high(d + 1)});
        s.chains.push_back(std::move(c));
    }
    // lambda_M crosses from the low face to the high face.
    for (int m = 2; m <= d; ++m) {
        BoundChain c = new_chain(vars, "cp:M=" + std::to_string(m));
        c.bounds.push_back({lambda1_min, lambda1_split});
        for (int k = 2; k <= d + 1; ++k) {
            if (k < m)
                c.bounds.push_back({b.prev(k), b.low(k)});
            else if (k == m)
                c.bounds.push_back({b.low(k), b.high(k)});
            else
                c.bounds.push_back({b.prev(k), b.high(k)});
        }
        s.chains.push_back(std::move(c));
    }
    {
        BoundChain c = new_chain(vars, "cp:high");
        c.bounds.push_back({lambda1_split, AffineExpr::value(1)});
        for (int k = 2; k <= d + 1; ++k) c.bounds.push_back({b.prev(k), b.high(k)});
        s.chains.push_back(std::move(c));
    }
    return s;
}

ChamberSet g_chambers_maxN(int d) {
    if (d < 2) throw std::invalid_argument("g_chambers_maxN: d must be >= 2");
    const MaxNBounds b{d};
    ChamberSet s = ordered_set(d, ClassTag::g);
    BoundChain c = new_chain(d + 1, "g");
    c.bounds.push_back({AffineExpr::value(0), AffineExpr::value(1)});
    for (int k = 2; k <= d + 1; ++k) c.bounds.push_back({b.prev(k), b.high(k)});
    s.chains.push_back(std::move(c));
    return s;
}

ChamberSet eb_chambers_maxN(int d) {
    if (d < 2) throw std::invalid_argument("eb_chambers_maxN: d must be >= 2");
    const MaxNBounds b{d};
    ChamberSet s = ordered_set(d, ClassTag::eb);
    BoundChain c = new_chain(d + 1, "eb");
    c.bounds.push_back({AffineExpr::value(0), AffineExpr::value(frac(1, d + 1))});
    for (int k = 2; k <= d + 1; ++k) c.bounds.push_back({b.prev(k), b.eb(k)});
    s.chains.push_back(std::move(c));
    return s;
}

ChamberSet chambers_n3(int d, ClassTag class_tag, Transcription t) {
    if (d < 3) throw std::invalid_argument("chambers_n3: three bases with lambda_4 need d >= 3");
    if (class_tag == ClassTag::p) throw std::invalid_argument("chambers_n3: use p_box for the positivity box");

    ChamberSet s;
    s.d = d;
    s.n_bases = 3;
    s.class_tag = class_tag;
    s.symmetry_factor = 6;
    s.ordering = Ordering::sorted_plus_extra;

    const Rational excess(d - 3);  // weight of lambda_4 beyond the unit weight
    const Rational c = frac(1, d - 1);
    const AffineExpr s0 = AffineExpr::var(0), s1 = AffineExpr::var(1), s2 = AffineExpr::var(2);
    const AffineExpr one = AffineExpr::value(1);
    const AffineExpr low_split = AffineExpr::value(frac(-1, d * d - 1));

    for (int p = 0; p < 4; ++p) {
        const int dmin = p == 0, dmid1 = p == 1, dmid2 = p == 2, dmax = p == 3;
        const AffineExpr l4 = AffineExpr::var(p);
        // Kronecker factors only survive when lambda_4 sits in an earlier slot,
        // so l4 never references the variable being bounded.
        auto l4_term = [&](int delta_sum) { return delta_sum == 0 ? AffineExpr{} : l4 * (excess * delta_sum); };

        const Rational den1 = Rational(d) - excess * dmin;
        const Rational den2 = Rational(d - 1) - excess * (dmid1 + dmin);
        const Rational den3 = 1 + excess * dmax;
        const int max_hi_deltas = t == Transcription::resolved ? 1 - dmax : dmid1 + dmid2;

        const AffineExpr head = one + s0 * Rational(d - 1);
        const AffineExpr m1_hi = (head - l4_term(dmin)) * (1 / den1);
        const AffineExpr m1_lo = (AffineExpr::value(c) + s0 + l4_term(dmin)) * (-1 / den1);
        const AffineExpr m2_hi = (head - s1 - l4_term(dmid1 + dmin)) * (1 / den2);
        const AffineExpr m2_lo = (AffineExpr::value(c) + s0 + s1 + l4_term(dmid1 + dmin)) * (-1 / den2);
        const AffineExpr max_hi = (head - s1 - s2 - l4_term(max_hi_deltas)) * (1 / den3);
        const AffineExpr max_lo = (AffineExpr::value(c) + s0 + s1 + s2 + l4_term(1 - dmax)) * (-1 / den3);

        const std::string where = std::string(":l4=") + kSlotNames[static_cast<size_t>(p)];
        auto push = [&](std::string name, std::array<Bound, 4> bounds) {
            BoundChain ch = new_chain(4, std::move(name) + where);
            ch.bounds.assign(bounds.begin(), bounds.end());
            ch.extra_slot = p;
            s.chains.push_back(std::move(ch));
        };

        switch (class_tag) {
            case ClassTag::cp: {
                const AffineExpr low_min = AffineExpr::value(-c);
                push("cp:high", {Bound{low_split, one}, Bound{s0, m1_hi}, Bound{s1, m2_hi}, Bound{s2, max_hi}});
                push("cp:low", {Bound{low_min, low_split}, Bound{s0, m1_lo}, Bound{s1, m2_lo}, Bound{max_lo, max_hi}});
                push("cp:cross-mid2",
                     {Bound{low_min, low_split}, Bound{s0, m1_lo}, Bound{m2_lo, m2_hi}, Bound{s2, max_hi}});
                push("cp:cross-mid1",
                     {Bound{low_min, low_split}, Bound{m1_lo, m1_hi}, Bound{s1, m2_hi}, Bound{s2, max_hi}});
                break;
            }
            case ClassTag::g:
                push("g", {Bound{AffineExpr::value(0), one}, Bound{s0, m1_hi}, Bound{s1, m2_hi}, Bound{s2, max_hi}});
                break;
            case ClassTag::eb: {
                const AffineExpr eb1 = (one - s0 - l4_term(dmin)) * (1 / den1);
                const AffineExpr eb2 = (one - s0 - s1 - l4_term(dmin + dmid1)) * (1 / den2);
                const AffineExpr eb3 = (one - s0 - s1 - s2 - l4_term(1 - dmax)) * (1 / den3);
                push("eb", {Bound{AffineExpr::value(0), AffineExpr::value(frac(1, d + 1))}, Bound{s0, eb1},
                            Bound{s1, eb2}, Bound{s2, eb3}});
                break;
            }
            case ClassTag::p:
                break;
        }
    }
    return s;
}

bool supported(int d, int n_bases) {
    if (d < 2 || n_bases < 3 || n_bases > d + 1) return false;
    return n_bases == d + 1 || n_bases == d || n_bases == 3;
}

ChamberSet chambers_for(int d, int n_bases, ClassTag tag) {
    if (!supported(d, n_bases))
        throw std::invalid_argument("no chamber system for d=" + std::to_string(d) + ", N=" + std::to_string(n_bases) +
                                    " (supported: N=d+1, N=d, N=3)");
    if (tag == ClassTag::p) return p_box(d, n_bases);
    ChamberSet s;
    if (n_bases == d + 1 || (n_bases == d && n_bases != 3)) {
        switch (tag) {
            case ClassTag::cp: s = cp_chambers_maxN(d); break;
            case ClassTag::g: s = g_chambers_maxN(d); break;
            default: s = eb_chambers_maxN(d); break;
        }
        s.n_bases = n_bases;
        return s;
    }
    return chambers_n3(d, tag);
}

double ChamberEvaluator::Row::eval(const std::vector<double>& x) const {
    double v = constant;
    for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * x[i];
    return v;
}

ChamberEvaluator::ChamberEvaluator(const ChamberSet& set) : ordering_(set.ordering) {
    auto to_row = [](const AffineExpr& e) {
        Row r{e.constant.get_d(), {}};
        for (const auto& c : e.coeffs) r.coeffs.push_back(c.get_d());
        return r;
    };
    for (const auto& chain : set.chains) {
        Chain c;
        for (const auto& b : chain.bounds) {
            c.lower.push_back(to_row(b.lower));
            c.upper.push_back(to_row(b.upper));
        }
        c.extra_slot = chain.extra_slot.value_or(-1);
        chains_.push_back(std::move(c));
    }
}

ChamberEvaluator::Hit ChamberEvaluator::locate(std::span<const double> lambdas) const {
    std::vector<double> x(lambdas.begin(), lambdas.end());
    int placement = -1;
    switch (ordering_) {
        case Ordering::none:
            break;
        case Ordering::sorted:
            std::sort(x.begin(), x.end());
            break;
        case Ordering::sorted_plus_extra: {
            const double extra = x.at(3);
            std::sort(x.begin(), x.begin() + 3);
            placement = static_cast<int>(std::upper_bound(x.begin(), x.begin() + 3, extra) - x.begin());
            x.pop_back();
            x.insert(x.begin() + placement, extra);
            break;
        }
    }
    Hit hit;
    hit.min_abs_slack = std::numeric_limits<double>::infinity();
    for (const auto& chain : chains_) {
        if (chain.extra_slot != placement) continue;
        double slack = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < chain.lower.size(); ++i) {
            slack = std::min(slack, x[i] - chain.lower[i].eval(x));
            slack = std::min(slack, chain.upper[i].eval(x) - x[i]);
        }
        if (slack >= 0) ++hit.chains;
        hit.min_abs_slack = std::min(hit.min_abs_slack, std::abs(slack));
    }
    return hit;
}

}  // namespace gpc
