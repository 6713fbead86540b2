#pragma once

#include "yzq/divisor_sums.hpp"
#include "yzq/identity_report.hpp"
#include "yzq/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace yzq {

/// Where a closed-form invariant family lives: a single rigid value at
/// d = 0, a divisor-sum expression for d >= 1, or all of d >= 0.
enum class FamilySupport { ZeroOnly, PositiveOnly, NonNegative };

/// One named invariant family d -> Rational of the rational elliptic
/// surface E(0) = S^2 x T^2, keyed by a fully explicit id encoding class,
/// genus, multiplicity vector and constraint list, e.g.
/// "PhiV[S+dF,1,(1)](pt;C_pt)". Ids are opaque strings; nothing parses
/// mathematical notation at runtime. Outside its support a family is 0.
struct SequenceFamily {
    std::string id;
    FamilySupport support = FamilySupport::NonNegative;
    std::function<Rational(int)> rule;
    std::string note; // the closed form, e.g. "d sigma(d)"

    Rational at(int d) const;
};

/// One weighted term of a pair-count decomposition: the invariant counting
/// pairs of maps splits as sum_{d1+d2=d} weight * left(d1) * right(d2).
/// Weights fold in the splitting combinatorics (orderings of the pair,
/// orientation of the dual-basis pairing). Only even-degree constraint
/// splittings are representable; resolutions that would separate the
/// odd H_1 classes carry signs this engine does not model and are not
/// registered.
struct ConvolutionTerm {
    std::string left;
    std::string right;
    Rational weight{1};
};

/// The registered invariant families, built once over a divisor-sum table
/// and immutable afterwards.
class FamilyCatalog {
public:
    explicit FamilyCatalog(int d_max);

    int d_max() const { return d_max_; }
    const DivisorSumTable& table() const { return *table_; }

    const SequenceFamily& family(const std::string& id) const; // throws UnknownFamily
    bool has_family(const std::string& id) const;
    std::vector<std::string> family_ids() const;

    Rational convolve(const ConvolutionTerm& term, int d) const;
    Rational convolve(const std::vector<ConvolutionTerm>& terms, int d) const;

private:
    void add(std::string id, FamilySupport support, std::function<Rational(int)> rule,
             std::string note);

    int d_max_;
    std::shared_ptr<const DivisorSumTable> table_;
    std::map<std::string, SequenceFamily> families_;
};

/// The two candidate conventions for sum_{d1+d2=d} sigma(d1) sigma(d2)
/// appearing in the genus-0 pair-count closed form: integer sigma over
/// d1, d2 >= 1, or indices from 0 with the Eisenstein constant
/// sigma(0) = -1/24.
enum class SigmaSupport { PositiveOnly, WithG2Constant };

Rational sigma_pair_convolution(const DivisorSumTable& table, int d, SigmaSupport support);

/// The three groups of disconnected-count (GPhi) closed forms that are
/// verified by re-assembling each value from the connected part plus the
/// pair-count convolution of registered families: plain point/loop
/// constraints, a single descendant tau(F), and tau(F)^2.
enum class GPhiGroup { PointAndLoop, TauF, TauSquared };

std::vector<IdentityReport> gphi_closed_form_checks(const FamilyCatalog& catalog, GPhiGroup group,
                                                    int d_max);

/// Runs the tau(F)^2 pair-count closed form under both sigma conventions.
/// Exactly one is expected to match the assembled route; that one is the
/// engine's default (PositiveOnly).
struct SigmaConventionResolution {
    IdentityReport positive_only;
    IdentityReport with_constant;
    bool decisive() const { return positive_only.passed && !with_constant.passed; }
};

SigmaConventionResolution resolve_pair_count_convention(const FamilyCatalog& catalog, int d_max);

/// The five additive derivation chains behind the descendant invariants
/// (each closed form recomputed as the weighted sum of its registered
/// constituents), e.g. 24 sigma(d) = 12 sigma(d) + 3 * 4 sigma(d).
std::vector<IdentityReport> additive_chain_checks(const FamilyCatalog& catalog, int d_max);

} // namespace yzq
