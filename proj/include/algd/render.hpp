#ifndef ALGD_RENDER_HPP
#define ALGD_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "algd/exterior.hpp"
#include "algd/parse.hpp"
#include "algd/report.hpp"

namespace algd {

// Canonical text for graded values: components in ascending degree then
// tuple order, coefficients elided when 1, parenthesized when multi-term,
// basis factors joined with '^'. The text re-parses to the same value.
std::string render_multivector(const Multivector& m,
                               const std::vector<std::string>& basis);
std::string render_form(const Form& f);
std::string render_value(const Value& v, const std::vector<std::string>& basis);

// subject / verdict / identities header plus one line per residual.
std::string render_report(const CheckReport& rep);

nlohmann::ordered_json report_json(const CheckReport& rep);
nlohmann::ordered_json value_json(const Value& v,
                                  const std::vector<std::string>& basis);

}  // namespace algd

#endif
