#pragma once

#include "gpc/channel.hpp"
#include "gpc/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gpc {

// constant + sum_j coeffs[j] * x_j over chain variables. Trailing zero
// coefficients are trimmed, so coeffs.size() - 1 is the last referenced index.
struct AffineExpr {
    Rational constant = 0;
    std::vector<Rational> coeffs;

    static AffineExpr value(const Rational& c);
    static AffineExpr var(int index);

    // -1 when the expression is constant.
    int last_referenced() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    AffineExpr& operator+=(const AffineExpr& other);
    AffineExpr& operator-=(const AffineExpr& other);
    AffineExpr& operator*=(const Rational& s);
    friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
    friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
    friend AffineExpr operator*(AffineExpr a, const Rational& s) { return a *= s; }
    friend AffineExpr operator*(const Rational& s, AffineExpr a) { return a *= s; }
    friend bool operator==(const AffineExpr& a, const AffineExpr& b) {
        return a.constant == b.constant && a.coeffs == b.coeffs;
    }

private:
    void trim();
};

struct Bound {
    AffineExpr lower;
    AffineExpr upper;
};

// Nested integration domain: variable i ranges over [lower_i, upper_i], where
// both bounds may only reference variables 0..i-1. Outermost variable first.
struct BoundChain {
    int var_count = 0;
    std::vector<Bound> bounds;
    std::string label;
    // For N = 3 chambers: the chain variable holding lambda_4.
    std::optional<int> extra_slot;

    bool well_formed() const;
};

// How a raw eigenvalue point maps onto chain coordinates.
enum class Ordering {
    none,             // chain variables are the eigenvalues as given
    sorted,           // all eigenvalues sorted ascending
    sorted_plus_extra // lambda_1..lambda_3 sorted, lambda_4 merged in (placement recorded)
};

struct ChamberSet {
    std::vector<BoundChain> chains;
    long symmetry_factor = 1;
    ClassTag class_tag = ClassTag::cp;
    int d = 0;
    int n_bases = 0;
    Ordering ordering = Ordering::none;
};

// How the N = 3 systems resolve the Kronecker deltas in the
// lambda_max upper bound. `resolved` follows the Fujiwara-Algoet inequality
// (all placements below max contribute); `literal` keeps only the mid1/mid2
// placements as printed, which breaks the closed forms for d >= 4.
enum class Transcription { resolved, literal };

ChamberSet p_box(int d, int n_bases);
ChamberSet cp_chambers_maxN(int d);
ChamberSet g_chambers_maxN(int d);
ChamberSet eb_chambers_maxN(int d);
// class_tag must be cp, g or eb; d >= 3.
ChamberSet chambers_n3(int d, ClassTag class_tag, Transcription t = Transcription::resolved);

// Chamber system used for the volume of `tag` at (d, N). Supports N = d + 1,
// N = d (shares the N = d + 1 chambers), and N = 3 for d >= 3.
ChamberSet chambers_for(int d, int n_bases, ClassTag tag);
bool supported(int d, int n_bases);

// Binary64 mirror of a ChamberSet for sampling-based audits.
class ChamberEvaluator {
public:
    explicit ChamberEvaluator(const ChamberSet& set);

    struct Hit {
        int chains = 0;           // number of chains containing the point
        double min_abs_slack = 0; // distance (in bound units) to the nearest face seen
    };
    // `lambdas` are the free eigenvalue coordinates of a channel.
    Hit locate(std::span<const double> lambdas) const;

private:
    struct Row {
        double constant;
        std::vector<double> coeffs;
        double eval(const std::vector<double>& x) const;
    };
    struct Chain {
        std::vector<Row> lower, upper;
        int extra_slot = -1;
    };
    Ordering ordering_;
    std::vector<Chain> chains_;
};

}  // namespace gpc
