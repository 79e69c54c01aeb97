#include "gpc/volume.hpp"

#include "gpc/polynomial.hpp"

#include <cstdlib>
#include <string>

namespace gpc {

ChamberInconsistency::ChamberInconsistency(std::string label, const Rational& value)
    : std::runtime_error("chamber '" + label + "' integrates to negative volume " + to_fraction_string(value)),
      label_(std::move(label)) {}

std::string to_string(Sufficiency s) { return s == Sufficiency::known_exact ? "known-exact" : "upper-bound"; }

Rational integrate_chain(const BoundChain& chain) {
    if (!chain.well_formed()) throw std::invalid_argument("integrate_chain: malformed chain '" + chain.label + "'");
    const int n = chain.var_count;
    MultiPoly integrand = MultiPoly::constant(n, Rational(1));
    for (int i = n - 1; i >= 0; --i) {
        const Bound& b = chain.bounds[static_cast<size_t>(i)];
        const MultiPoly primitive = integrand.antiderivative(i);
        const MultiPoly upper = MultiPoly::linear(n, b.upper.constant, b.upper.coeffs);
        const MultiPoly lower = MultiPoly::linear(n, b.lower.constant, b.lower.coeffs);
        integrand = primitive.substitute(i, upper) - primitive.substitute(i, lower);
    }
    Rational v = integrand.constant_term();
    if (v < 0) throw ChamberInconsistency(chain.label, v);
    return v;
}

int dimension_cap() {
    if (const char* env = std::getenv("PV_MAX_D")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2 && v <= 64) return static_cast<int>(v);
    }
    return 8;
}

namespace {

Sufficiency sufficiency_for(ClassTag tag, int d, int n_bases) {
    switch (tag) {
        case ClassTag::p:
            return Sufficiency::upper_bound;
        case ClassTag::eb:
            return (n_bases == d || n_bases == d + 1) ? Sufficiency::known_exact : Sufficiency::upper_bound;
        default:
            return Sufficiency::known_exact;
    }
}

}  // namespace

VolumeResult volume_of(const ChamberSet& set, Execution exec) {
    VolumeResult r;
    r.class_tag = set.class_tag;
    r.d = set.d;
    r.n_bases = set.n_bases;
    r.symmetry_factor = set.symmetry_factor;
    const auto count = static_cast<long>(set.chains.size());
    r.raw_chain_volumes.assign(set.chains.size(), Rational(0));

    if (exec == Execution::parallel) {
        // Exceptions cannot leave an OpenMP region; capture the first one.
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            try {
                r.raw_chain_volumes[static_cast<size_t>(i)] = integrate_chain(set.chains[static_cast<size_t>(i)]);
            } catch (...) {
#pragma omp critical(gpc_volume_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (long i = 0; i < count; ++i)
            r.raw_chain_volumes[static_cast<size_t>(i)] = integrate_chain(set.chains[static_cast<size_t>(i)]);
    }

    Rational sum = 0;
    for (size_t i = 0; i < set.chains.size(); ++i) {
        r.chain_labels.push_back(set.chains[i].label);
        sum += r.raw_chain_volumes[i];
    }
    r.lambda_volume = sum * set.symmetry_factor;
    r.hs_volume = volume_prefactor(set.d, set.n_bases) * SurdValue(r.lambda_volume);
    r.sufficiency = sufficiency_for(set.class_tag, set.d, set.n_bases);
    return r;
}

VolumeResult class_volume(int d, int n_bases, ClassTag tag, Execution exec) {
    if (d > dimension_cap())
        throw std::invalid_argument("d=" + std::to_string(d) + " exceeds the dimension cap " +
                                    std::to_string(dimension_cap()) + " (raise it with PV_MAX_D)");
    return volume_of(chambers_for(d, n_bases, tag), exec);
}

namespace {

Rational checked_ratio(const VolumeResult& num, const VolumeResult& den) {
    if (den.lambda_volume == 0) throw std::domain_error("volume ratio with zero denominator volume");
    Rational by_lambda = num.lambda_volume / den.lambda_volume;
    const SurdValue by_surd = num.hs_volume / den.hs_volume;
    if (!by_surd.is_rational() || by_surd.coeff() != by_lambda)
        throw std::logic_error("metric prefactor failed to cancel in volume ratio");
    return by_lambda;
}

}  // namespace

Rational volume_ratio(int d, int n_bases, ClassTag num, ClassTag den) {
    return checked_ratio(class_volume(d, n_bases, num), class_volume(d, n_bases, den));
}

std::string to_string(NMode m) {
    switch (m) {
        case NMode::max: return "max";
        case NMode::d: return "d";
        case NMode::three: return "3";
    }
    return "?";
}

NMode parse_n_mode(const std::string& text) {
    if (text == "max") return NMode::max;
    if (text == "d") return NMode::d;
    if (text == "3") return NMode::three;
    throw std::invalid_argument("unknown N mode '" + text + "' (expected max, d or 3)");
}

int n_for(int d, NMode mode) {
    switch (mode) {
        case NMode::max: return d + 1;
        case NMode::d: return d;
        case NMode::three: return 3;
    }
    return 0;
}

RatioRow ratio_row(int d, NMode mode) {
    const int n = n_for(d, mode);
    const VolumeResult p = class_volume(d, n, ClassTag::p);
    const VolumeResult cp = class_volume(d, n, ClassTag::cp);
    const VolumeResult g = class_volume(d, n, ClassTag::g);
    const VolumeResult eb = class_volume(d, n, ClassTag::eb);
    return RatioRow{d, n, checked_ratio(cp, p), checked_ratio(g, cp), checked_ratio(eb, g)};
}

Rational expected_cp_over_p(int d, NMode mode) {
    if (mode == NMode::three) return make_rational(d, 24L * (d - 2));
    Integer fact = 1;
    for (int i = 2; i <= d + 1; ++i) fact *= i;
    Rational q(Integer(d), fact);
    q.canonicalize();
    return q;
}

Rational expected_g_over_cp(int d, NMode mode) {
    const Rational dd(d);
    if (mode == NMode::three) {
        Rational q = Rational(d * d - 1) * rational_pow(Rational(d - 1), 3) / rational_pow(dd, 5);
        return q;
    }
    Rational q = Rational(d * d - 1) / (dd * dd) * rational_pow(Rational(d - 1) / dd, static_cast<unsigned>(d));
    return q;
}

Rational expected_eb_over_g(int d) { return make_rational(1, d + 1); }

bool ConjectureRow::all_hold() const {
    if (!vp_holds) return false;
    for (const auto& r : ratios)
        if (!r.holds) return false;
    return true;
}

bool ConjectureReport::all_hold() const {
    for (const auto& r : rows)
        if (!r.all_hold()) return false;
    return true;
}

ConjectureReport check_conjectures(int d_lo, int d_hi, NMode mode) {
    ConjectureReport report;
    report.mode = mode;
    for (int d = d_lo; d <= d_hi; ++d) {
        const RatioRow row = ratio_row(d, mode);
        ConjectureRow c;
        c.d = d;
        c.n_bases = row.n_bases;
        auto add = [&c](std::string name, const Rational& computed, const Rational& expected) {
            c.ratios.push_back(RatioCheck{std::move(name), computed, expected, computed == expected});
        };
        add("cp/p", row.cp_over_p, expected_cp_over_p(d, mode));
        add("g/cp", row.g_over_cp, expected_g_over_cp(d, mode));
        add("eb/g", row.eb_over_g, expected_eb_over_g(d));
        c.vp_computed = class_volume(d, row.n_bases, ClassTag::p).hs_volume;
        c.vp_expected = vp_volume(d, row.n_bases);
        c.vp_holds = c.vp_computed == c.vp_expected;
        c.extrapolated = mode != NMode::three && d > 5;
        report.rows.push_back(std::move(c));
    }
    return report;
}

}  // namespace gpc
