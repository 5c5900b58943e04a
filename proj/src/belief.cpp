#include "selp/belief.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "selp/errors.hpp"

namespace selp {

namespace {
constexpr double kNormalizationTolerance = 1e-9;
constexpr double kConflictFloor = 1e-12;
}  // namespace

LabelFrame::LabelFrame(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw config_error("label frame must contain at least one label");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw config_error("duplicate label in frame: " + l);
        }
    }
}

int LabelFrame::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw input_error("label not in frame: " + label);
    }
    return static_cast<int>(it - labels_.begin());
}

SimpleMass::SimpleMass(const LabelFrame& frame, std::vector<double> singletons, double omega)
    : frame_(&frame), singletons_(std::move(singletons)), omega_(omega) {
    if (static_cast<int>(singletons_.size()) != frame.size()) {
        throw input_error("singleton vector does not match frame size");
    }
    double total = omega_;
    for (double v : singletons_) {
        if (v < -kNormalizationTolerance) {
            throw input_error("negative mass value");
        }
        total += v;
    }
    if (omega_ < -kNormalizationTolerance) {
        throw input_error("negative omega mass");
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw input_error("mass function does not sum to 1 (total " + std::to_string(total) + ")");
    }
    for (double& v : singletons_) v = std::max(v, 0.0) / total;
    omega_ = std::max(omega_, 0.0) / total;
}

std::pair<int, double> SimpleMass::max_singleton() const {
    int best = 0;
    for (int k = 1; k < frame_->size(); ++k) {
        if (singletons_[k] > singletons_[best]) best = k;
    }
    return {best, singletons_[best]};
}

bool SimpleMass::is_vacuous() const {
    return max_singleton().second == 0.0;
}

SimpleMass vacuous(const LabelFrame& frame) {
    return SimpleMass(frame, std::vector<double>(frame.size(), 0.0), 1.0);
}

SimpleMass categorical(const LabelFrame& frame, int label_index) {
    if (label_index < 0 || label_index >= frame.size()) {
        throw input_error("label index not in frame: " + std::to_string(label_index));
    }
    std::vector<double> s(frame.size(), 0.0);
    s[label_index] = 1.0;
    return SimpleMass(frame, std::move(s), 0.0);
}

SimpleMass categorical(const LabelFrame& frame, const std::string& label) {
    return categorical(frame, frame.index_of(label));
}

SimpleMass discount(const SimpleMass& m, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw config_error("discount factor must lie in [0, 1], got " + std::to_string(alpha));
    }
    std::vector<double> s = m.singletons();
    double specific = 0.0;
    for (double& v : s) {
        specific += v;
        v *= alpha;
    }
    return SimpleMass(m.frame(), std::move(s), m.omega() + (1.0 - alpha) * specific);
}

SimpleMass combine(std::span<const SimpleMass> masses) {
    if (masses.empty()) {
        throw input_error("combine requires at least one mass function");
    }
    const LabelFrame& frame = masses.front().frame();
    const int c = frame.size();
    for (const auto& m : masses) {
        if (!(m.frame() == frame)) {
            throw input_error("combine over mismatched frames");
        }
    }
    std::vector<double> prod_with_omega(c, 1.0);
    double prod_omega = 1.0;
    for (const auto& m : masses) {
        for (int k = 0; k < c; ++k) {
            prod_with_omega[k] *= m.singleton(k) + m.omega();
        }
        prod_omega *= m.omega();
    }
    std::vector<double> u(c);
    double total = prod_omega;
    for (int k = 0; k < c; ++k) {
        u[k] = prod_with_omega[k] - prod_omega;
        total += u[k];
    }
    if (total <= kConflictFloor) {
        std::string labels;
        for (const auto& m : masses) {
            auto [k, v] = m.max_singleton();
            if (v > 0.0) labels += (labels.empty() ? "" : ", ") + frame.label(k);
        }
        throw conflict_error("total conflict between categorical sources on {" + labels + "}");
    }
    for (double& v : u) v /= total;
    return SimpleMass(frame, std::move(u), prod_omega / total);
}

PowerSetMass::PowerSetMass(const LabelFrame& frame, std::vector<double> mass_by_subset)
    : frame_(&frame), mass_(std::move(mass_by_subset)) {
    if (frame.size() > 16) {
        throw config_error("power-set representation is limited to 16 labels");
    }
    if (mass_.size() != (std::size_t{1} << frame.size())) {
        throw input_error("power-set mass vector must have 2^c entries");
    }
    double total = 0.0;
    for (double v : mass_) {
        if (v < -kNormalizationTolerance) throw input_error("negative mass value");
        total += v;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw input_error("power-set mass does not sum to 1");
    }
    for (double& v : mass_) v = std::max(v, 0.0) / total;
}

PowerSetMass PowerSetMass::from_simple(const SimpleMass& m) {
    const int c = m.frame().size();
    std::vector<double> mass(std::size_t{1} << c, 0.0);
    for (int k = 0; k < c; ++k) {
        mass[std::uint32_t{1} << k] = m.singleton(k);
    }
    mass[(std::uint32_t{1} << c) - 1] += m.omega();
    return PowerSetMass(m.frame(), std::move(mass));
}

double PowerSetMass::mass(std::uint32_t subset) const {
    if (subset > full_set()) {
        throw input_error("subset outside frame");
    }
    return mass_[subset];
}

PowerSetMass combine_powerset_oracle(std::span<const PowerSetMass> masses) {
    if (masses.empty()) {
        throw input_error("combine requires at least one mass function");
    }
    const LabelFrame& frame = masses.front().frame();
    for (const auto& m : masses) {
        if (!(m.frame() == frame)) {
            throw input_error("combine over mismatched frames");
        }
    }
    std::vector<double> acc = masses.front().masses();
    const std::size_t size = acc.size();
    for (std::size_t t = 1; t < masses.size(); ++t) {
        const auto& next = masses[t].masses();
        std::vector<double> out(size, 0.0);
        for (std::uint32_t a = 0; a < size; ++a) {
            if (acc[a] == 0.0) continue;
            for (std::uint32_t b = 0; b < size; ++b) {
                if (next[b] == 0.0) continue;
                out[a & b] += acc[a] * next[b];
            }
        }
        acc = std::move(out);
    }
    double normalizer = 1.0 - acc[0];
    if (normalizer <= kConflictFloor) {
        throw conflict_error("total conflict in power-set combination");
    }
    acc[0] = 0.0;
    for (double& v : acc) v /= normalizer;
    return PowerSetMass(frame, std::move(acc));
}

double bel(const PowerSetMass& m, std::uint32_t subset) {
    if (subset > m.full_set()) throw input_error("subset outside frame");
    double total = 0.0;
    // iterate non-empty subsets B of `subset`
    for (std::uint32_t b = subset; b != 0; b = (b - 1) & subset) {
        total += m.mass(b);
    }
    return total;
}

double pl(const PowerSetMass& m, std::uint32_t subset) {
    if (subset > m.full_set()) throw input_error("subset outside frame");
    double total = 0.0;
    for (std::uint32_t b = 1; b <= m.full_set(); ++b) {
        if ((b & subset) != 0) total += m.mass(b);
    }
    return total;
}

}  // namespace selp
