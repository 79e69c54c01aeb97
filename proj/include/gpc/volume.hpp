#pragma once

#include "gpc/geometry.hpp"
#include "gpc/regions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gpc {

// A chain integrated to a negative volume: its bounds cross somewhere, which
// points at a transcription problem in the chamber system.
class ChamberInconsistency : public std::runtime_error {
public:
    ChamberInconsistency(std::string label, const Rational& value);
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

enum class Execution { serial, parallel };

enum class Sufficiency { known_exact, upper_bound };
std::string to_string(Sufficiency s);

// Exact iterated integral of 1 over the chain, innermost variable first.
// Throws ChamberInconsistency when the result is negative.
Rational integrate_chain(const BoundChain& chain);

struct VolumeResult {
    ClassTag class_tag = ClassTag::cp;
    int d = 0;
    int n_bases = 0;
    long symmetry_factor = 1;
    std::vector<std::string> chain_labels;
    std::vector<Rational> raw_chain_volumes;  // per chain, eigenvalue coordinates
    Rational lambda_volume;                   // symmetry_factor * sum of chains
    SurdValue hs_volume;                      // prefactor * lambda_volume
    Sufficiency sufficiency = Sufficiency::known_exact;
};

// Largest d accepted by class_volume and the CLI: 8, or $PV_MAX_D when set.
int dimension_cap();

VolumeResult volume_of(const ChamberSet& set, Execution exec = Execution::parallel);
VolumeResult class_volume(int d, int n_bases, ClassTag tag, Execution exec = Execution::parallel);

// V_num / V_den at fixed (d, N). The ratio is formed both from the Hilbert-
// Schmidt surds and from the eigenvalue volumes; a disagreement throws
// std::logic_error. Throws std::domain_error for a zero denominator volume.
Rational volume_ratio(int d, int n_bases, ClassTag num, ClassTag den);

enum class NMode { max, d, three };
std::string to_string(NMode m);
NMode parse_n_mode(const std::string& text);
int n_for(int d, NMode mode);

// The three headline ratios for one dimension.
struct RatioRow {
    int d = 0;
    int n_bases = 0;
    Rational cp_over_p;
    Rational g_over_cp;
    Rational eb_over_g;
};
RatioRow ratio_row(int d, NMode mode);

struct RatioCheck {
    std::string name;  // "cp/p", "g/cp", "eb/g"
    Rational computed;
    Rational expected;
    bool holds = false;
};

struct ConjectureRow {
    int d = 0;
    int n_bases = 0;
    std::vector<RatioCheck> ratios;
    SurdValue vp_computed;  // chain-engine box volume times prefactor
    SurdValue vp_expected;  // closed form
    bool vp_holds = false;
    // True when d lies outside the dimensions for which the formulas were
    // obtained by explicit calculation (N = d, d+1 with d > 5).
    bool extrapolated = false;

    bool all_hold() const;
};

struct ConjectureReport {
    NMode mode = NMode::max;
    std::vector<ConjectureRow> rows;

    bool all_hold() const;
};

// Conjectured/closed-form values of the ratios.
Rational expected_cp_over_p(int d, NMode mode);
Rational expected_g_over_cp(int d, NMode mode);
Rational expected_eb_over_g(int d);

ConjectureReport check_conjectures(int d_lo, int d_hi, NMode mode);

}  // namespace gpc
