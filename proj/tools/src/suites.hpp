#pragma once

#include "ffq/cli/run.hpp"

namespace ffq::cli {

/// verify --suite {norms|anchors|reproducing|prop1|limits|discrepancy|bergman}
Report verify_suite(const JobSpec& job);

/// qverify --suite {split|bound|kernel|series}
Report qverify_suite(const JobSpec& job);

/// alpha |f(1/2)|^2.
double point_term_only(const CPowerSeries& f, const FFParams& p);

}  // namespace ffq::cli
