#include "selp/report.hpp"

#include <ostream>

namespace selp {

std::string phase_name(const DetectionResult& result, int node) {
    int phase = result.phases.at(node);
    switch (phase) {
        case DetectionResult::kPhaseSeed: return "seed";
        case DetectionResult::kPhaseFinal: return "final";
        case DetectionResult::kPhaseOutlier: return "outlier";
        default: return "sweep-" + std::to_string(phase);
    }
}

void write_detection_csv(const Graph& g, const LabelFrame& frame,
                         const DetectionResult& result, std::ostream& out) {
    out << "node_id,label,m_best,m_omega,phase\n";
    for (int i = 0; i < g.node_count(); ++i) {
        const auto& m = result.masses[i];
        out << g.id(i) << ','
            << (result.labels[i] == kOutlier ? "OUTLIER" : frame.label(result.labels[i])) << ','
            << m.max_singleton().second << ',' << m.omega() << ','
            << phase_name(result, i) << '\n';
    }
}

void write_labels_csv(const Graph& g, const std::vector<int>& labels,
                      const std::vector<std::string>& names, std::ostream& out) {
    out << "node_id,label\n";
    for (int i = 0; i < g.node_count(); ++i) {
        out << g.id(i) << ',';
        if (labels[i] >= 0 && labels[i] < static_cast<int>(names.size())) {
            out << names[labels[i]];
        } else {
            out << labels[i];
        }
        out << '\n';
    }
}

void write_sweep_csv(const std::vector<SweepSummary>& summaries, std::ostream& out) {
    out << "group,algorithm,trials,mean_error,sd_error,mean_nmi,sd_nmi\n";
    for (const auto& s : summaries) {
        out << s.group << ',' << algorithm_name(s.algorithm) << ',' << s.trials << ','
            << s.mean_error << ',' << s.sd_error << ',' << s.mean_nmi << ',' << s.sd_nmi
            << '\n';
    }
}

void write_trials_csv(const Graph& g, const std::vector<TrialReport>& reports,
                      std::ostream& out) {
    out << "group,algorithm,trial_seed,error_rate,nmi,outliers,misclassified\n";
    auto join_ids = [&g](const std::vector<int>& nodes) {
        std::string s;
        for (int n : nodes) {
            if (!s.empty()) s += ' ';
            s += g.id(n);
        }
        return s;
    };
    for (const auto& r : reports) {
        out << r.group << ',' << algorithm_name(r.algorithm) << ',' << r.trial_seed << ','
            << r.error_rate << ',' << r.nmi << ',' << join_ids(r.outliers) << ','
            << join_ids(r.misclassified) << '\n';
    }
}

}  // namespace selp
