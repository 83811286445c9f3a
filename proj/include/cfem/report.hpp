#ifndef CFEM_REPORT_HPP
#define CFEM_REPORT_HPP

#include "cfem/analysis.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cfem {

/// "2.2810E-05": four decimals in the mantissa, locale independent.
std::string format_scientific(double value);
/// "3.00"
std::string format_order(double value);

/// Header `N,l2_error,l2_order,h1_error,h1_order`; order cells of the first row are empty.
std::string to_csv(const RefinementReport& report);
std::string to_markdown(const RefinementReport& report);

/// Reads rows back from to_csv() output.
std::vector<RefinementRow> parse_csv(std::string_view text);

}  // namespace cfem

#endif
