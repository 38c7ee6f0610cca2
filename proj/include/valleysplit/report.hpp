#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "valleysplit/config.hpp"
#include "valleysplit/sweep.hpp"

namespace valleysplit {

inline constexpr std::string_view csv_header =
    "material,W_nm,F_V_per_m,n,E_meV,delta_meV,lower_meV,upper_meV,CV_meV,CF_meV,Cdelta_meV,bulk_meV,error";

/// 9 significant digits, '.' decimal separator, locale independent. NaN prints empty.
std::string format_number(double value);

/// RFC 4180 text (CRLF line ends), header first, rows in the given order.
std::string format_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(std::string_view text);

/// Throws IoError when the file cannot be written.
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);

/// Gnuplot program drawing the figure from the CSV at csv_path. Throws
/// InvalidArgument when the rows do not come from the matching sweep.
std::string format_gnuplot(const std::vector<ResultRow>& rows, Figure figure, const std::string& csv_path);
void emit_gnuplot(const std::vector<ResultRow>& rows, Figure figure, const std::string& csv_path,
                  const std::string& script_path);

} // namespace valleysplit
