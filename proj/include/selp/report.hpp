#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selp/engine.hpp"
#include "selp/eval.hpp"
#include "selp/graph.hpp"

namespace selp {

std::string phase_name(const DetectionResult& result, int node);

/// node_id,label,m_best,m_omega,phase
void write_detection_csv(const Graph& g, const LabelFrame& frame,
                         const DetectionResult& result, std::ostream& out);

/// node_id,label — for the baselines (no phase column). Labels may be frame
/// names (slp) or raw block ids (lpa).
void write_labels_csv(const Graph& g, const std::vector<int>& labels,
                      const std::vector<std::string>& names, std::ostream& out);

/// group,algorithm,trials,mean_error,sd_error,mean_nmi,sd_nmi
void write_sweep_csv(const std::vector<SweepSummary>& summaries, std::ostream& out);

/// group,algorithm,trial_seed,error_rate,nmi,outliers,misclassified
void write_trials_csv(const Graph& g, const std::vector<TrialReport>& reports,
                      std::ostream& out);

}  // namespace selp
