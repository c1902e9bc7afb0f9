// Serialization of results: fixed-column CSV tables and a JSON record
// mirroring IntegralResult.  All numbers print with %.17g so identical runs
// produce byte-identical files.
#pragma once

#include <gaugeint/demos.hpp>
#include <gaugeint/integrators.hpp>

namespace gaugeint {

std::string fmt17(double x);

// Columns: iter,gauge,n_intervals,succ_diff,err_bound
std::string convergence_csv(const IntegralResult& result);

// JSON record mirroring IntegralResult (value / support values, error
// estimate, iteration log, convergence flag).
std::string result_json(const IntegralResult& result);

// Columns: a,b,tag
std::string partition_csv(const TaggedPartition& p);

// Columns: demo_id,trial,observed,threshold,pass,note
std::string demo_csv(const DemoReport& report);

std::string demo_text(const DemoReport& report);

}  // namespace gaugeint
