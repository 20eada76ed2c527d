#pragma once

#include "shannon/distributions.hpp"
#include "shannon/units.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace shannon {

/// A summand phi of the generalized entropy H(P) = sum phi(p_i).
///
/// The evaluator is called on (0, 1]; the value at 0 is stored separately
/// because it is a convention rather than something the formula yields.
class PhiFunction {
public:
    PhiFunction(std::string name, std::function<double(double)> evaluator,
                double value_at_zero);

    /// phi(p) = -p ln p, with phi(0) = 0.
    static PhiFunction shannon();

    double operator()(double p) const;
    const std::string& name() const noexcept { return name_; }
    double value_at_zero() const noexcept { return value_at_zero_; }

private:
    std::string name_;
    std::function<double(double)> evaluator_;
    double value_at_zero_;
};

/// Largest amount by which phi(l p + (1-l) q) falls below l phi(p) + (1-l) phi(q)
/// over `trials` random (p, q, l) in (0,1). Zero or negative means no violation.
double concavity_violation(const PhiFunction& phi, int trials, std::uint64_t seed);

/// -k sum p_i ln p_i.
EntropyValue shannon_entropy(const DiscreteDistribution& p,
                             const EntropyScale& scale = EntropyScale::nats());

/// sum phi(p_i). Throws DomainError("PhiUndefined") if phi is not finite at
/// some p_i.
double phi_entropy(const DiscreteDistribution& p, const PhiFunction& phi);

/// -k sum p_i ln(p_i / h_i). May be negative when widths are small.
EntropyValue total_entropy(const BinnedVariable& v,
                           const EntropyScale& scale = EntropyScale::nats());

/// |H(p x q) - H(p) - H(q)|, in the units of `scale`.
double additivity_defect(const DiscreteDistribution& p, const DiscreteDistribution& q,
                         const EntropyScale& scale = EntropyScale::nats());

/// True when p majorizes q: with both sorted in descending order every
/// partial sum of p is at least the matching partial sum of q (within
/// `slack`). Throws DomainError("LengthMismatch") for different lengths.
bool majorizes(const DiscreteDistribution& p, const DiscreteDistribution& q,
               double slack = 1e-12);

struct SchurReport {
    bool majorizes = false;          // p majorizes q
    bool reverse_majorizes = false;  // q majorizes p
    bool incomparable = false;       // neither direction holds
    bool entropy_ordered = false;    // H(more concentrated) <= H(other)
    double entropy_p = 0.0;
    double entropy_q = 0.0;
};

/// Checks Schur concavity of the Shannon entropy on one pair. An incomparable
/// pair is reported through `incomparable` (with entropy_ordered false), not
/// thrown.
SchurReport schur_concavity_check(const DiscreteDistribution& p,
                                  const DiscreteDistribution& q,
                                  const EntropyScale& scale = EntropyScale::nats(),
                                  double slack = 1e-12);

}  // namespace shannon
