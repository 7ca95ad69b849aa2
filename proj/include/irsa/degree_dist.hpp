#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "irsa/rng.hpp"

namespace irsa {

enum class DegreeKind { NodeLeft, NodeRight, EdgeLeft, EdgeRight };

std::string to_string(DegreeKind kind);

/// Degree distribution as a polynomial over degrees: coeffs()[d] is the
/// probability of degree d. Immutable after construction; construction
/// normalizes the coefficients when their sum is within 1e-9 of 1 and
/// rejects them otherwise.
class DegreeDistribution {
  public:
    DegreeDistribution(std::vector<double> coeffs, DegreeKind kind);

    /// Builds from sparse [degree, probability] pairs (the serialized form).
    static DegreeDistribution from_pairs(std::span<const std::pair<int, double>> pairs,
                                         DegreeKind kind);

    /// Accepts any nonnegative coefficients and scales them to sum 1.
    /// Intended for inputs that are known to be off, e.g. published tables
    /// whose rows do not quite add up.
    static DegreeDistribution renormalized(std::vector<double> coeffs, DegreeKind kind);

    /// Polynomial value at x in [0,1].
    double evaluate(double x) const;

    /// k-th derivative at x in [0,1], computed by coefficient shifting
    /// (falling factorials), never by numerical differentiation.
    double derivative(double x, int k = 1) const;

    /// Mean degree, i.e. the first derivative at 1.
    double mean_degree() const;

    /// Edge-perspective distribution: coefficient for x^(d-1) is
    /// d*p_d / mean_degree. Throws if the mean degree is zero.
    DegreeDistribution to_edge_perspective() const;

    /// Samples a degree with probability coeffs()[d].
    int sample(Rng& rng) const;

    /// Throws unless this is a node-left distribution with zero mass on
    /// degrees 0 and 1, the form required of policy distributions.
    void require_policy_left() const;

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::vector<std::pair<int, double>> to_pairs() const;
    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    DegreeKind kind() const { return kind_; }

    bool operator==(const DegreeDistribution& other) const = default;

  private:
    std::vector<double> coeffs_;
    DegreeKind kind_;
};

/// Closed-form right distribution exp(-rate*(1-x)); the Poisson limit of the
/// binomial check-node degree profile. rate equals the expected check degree.
class PoissonRight {
  public:
    explicit PoissonRight(double rate);

    double evaluate(double x) const;
    /// k-th derivative: rate^k * exp(-rate*(1-x)).
    double derivative(double x, int k = 1) const;
    double rate() const { return rate_; }

    bool operator==(const PoissonRight& other) const = default;

  private:
    double rate_;
};

/// Right distribution as either an explicit polynomial or the Poisson closed
/// form. Both variants expose evaluate/derivative with the same contract.
class RightDistribution {
  public:
    RightDistribution(DegreeDistribution dist) : form_(std::move(dist)) {}
    RightDistribution(PoissonRight poisson) : form_(poisson) {}

    double evaluate(double x) const;
    double derivative(double x, int k = 1) const;

    bool is_poisson() const { return std::holds_alternative<PoissonRight>(form_); }
    const PoissonRight& poisson() const { return std::get<PoissonRight>(form_); }
    const DegreeDistribution& polynomial() const { return std::get<DegreeDistribution>(form_); }

    /// Edge perspective of whichever form is held; Poisson is a fixed point
    /// of the node-to-edge map.
    RightDistribution to_edge_perspective() const;

  private:
    std::variant<DegreeDistribution, PoissonRight> form_;
};

}  // namespace irsa
