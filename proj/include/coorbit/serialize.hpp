#pragma once

#include <iosfwd>
#include <string>

#include "coorbit/cross_check.hpp"
#include "coorbit/json_writer.hpp"
#include "coorbit/orbits.hpp"

namespace coorbit {

// JSON forms. Series carry both the dense coefficient array over all
// cohomological degrees and the sparse degree:dim pairs.
JsonValue to_json(const GradedDims& series);
JsonValue to_json(const LabeledSeries& factor);
JsonValue to_json(const SplitCertificate& cert);
JsonValue to_json(const Tower& tower);
JsonValue to_json(const CrossCheckReport& report);
JsonValue to_json(const SweepResult& sweep);

// Text forms. Tables are printed in q-degree (q = t^2) with a header
// stating the convention, falling back to cohomological degree for series
// with odd support.
void render_series_text(std::ostream& os, const GradedDims& series, const std::string& label);
void render_certificate_text(std::ostream& os, const SplitCertificate& cert);
void render_tower_text(std::ostream& os, const Tower& tower);
void render_report_text(std::ostream& os, const CrossCheckReport& report);

}  // namespace coorbit
