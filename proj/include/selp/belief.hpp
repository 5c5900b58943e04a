#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace selp {

/// Ordered frame of community labels. Fixed for a detection run.
class LabelFrame {
public:
    explicit LabelFrame(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int k) const { return labels_.at(k); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws input_error for a label not in the frame.
    int index_of(const std::string& label) const;

    bool operator==(const LabelFrame& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
};

/// Mass function restricted to singleton focal elements plus the full set.
/// This is the only family the propagation engine ever produces, and it is
/// closed under discounting and Dempster combination.
class SimpleMass {
public:
    /// Renormalizes when the total is within 1e-9 of 1; a larger deviation
    /// is an upstream bug and throws input_error.
    SimpleMass(const LabelFrame& frame, std::vector<double> singletons, double omega);

    const LabelFrame& frame() const { return *frame_; }
    double singleton(int k) const { return singletons_.at(k); }
    const std::vector<double>& singletons() const { return singletons_; }
    double omega() const { return omega_; }

    /// Largest singleton mass and its label index (lowest index on ties).
    std::pair<int, double> max_singleton() const;

    bool is_vacuous() const;

private:
    const LabelFrame* frame_;
    std::vector<double> singletons_;
    double omega_;
};

SimpleMass vacuous(const LabelFrame& frame);
SimpleMass categorical(const LabelFrame& frame, const std::string& label);
SimpleMass categorical(const LabelFrame& frame, int label_index);

/// Shafer discounting: singletons scaled by alpha, the removed mass moves
/// to the full set. Throws config_error for alpha outside [0, 1].
SimpleMass discount(const SimpleMass& m, double alpha);

/// Normalized Dempster combination, closed form over the restricted family:
///   u({w_k}) = prod_t (m_t({w_k}) + m_t(Omega)) - prod_t m_t(Omega)
///   u(Omega) = prod_t m_t(Omega)
/// Throws conflict_error when the normalizer vanishes.
SimpleMass combine(std::span<const SimpleMass> masses);

/// General power-set mass over a frame of at most 16 labels. Subsets are
/// bitmasks over frame indices. Reference representation used as the test
/// oracle for the restricted fast path.
class PowerSetMass {
public:
    PowerSetMass(const LabelFrame& frame, std::vector<double> mass_by_subset);

    static PowerSetMass from_simple(const SimpleMass& m);

    const LabelFrame& frame() const { return *frame_; }
    double mass(std::uint32_t subset) const;
    const std::vector<double>& masses() const { return mass_; }
    std::uint32_t full_set() const { return (std::uint32_t{1} << frame_->size()) - 1; }

private:
    const LabelFrame* frame_;
    std::vector<double> mass_;  // indexed by subset bitmask, size 2^c
};

/// Exhaustive Dempster combination by focal-set enumeration.
PowerSetMass combine_powerset_oracle(std::span<const PowerSetMass> masses);

/// Credibility: sum of masses of non-empty subsets of A.
double bel(const PowerSetMass& m, std::uint32_t subset);

/// Plausibility: sum of masses of subsets intersecting A.
double pl(const PowerSetMass& m, std::uint32_t subset);

}  // namespace selp
