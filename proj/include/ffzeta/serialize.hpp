#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ffzeta/character.hpp"
#include "ffzeta/scan.hpp"
#include "ffzeta/special.hpp"
#include "ffzeta/vadic.hpp"
#include "ffzeta/zeros.hpp"

namespace ffzeta {

// write-new-then-rename: readers never observe a partial file
void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);
// "YYYY-MM-DDTHH:MM:SSZ" from SOURCE_DATE_EPOCH, empty when unset; reports
// carry no wall-clock time so identical runs serialize identically
std::string iso_timestamp_from_env();

nlohmann::json special_to_json(const SpecialPolynomial<BasePolynomial>& sp);
nlohmann::json special_to_json(const SpecialPolynomial<CurveElement>& sp);
SpecialPolynomial<BasePolynomial> special_fqt_from_json(const nlohmann::json& js);
SpecialPolynomial<CurveElement> special_curve_from_json(const nlohmann::json& js);

nlohmann::json np_to_json(const NewtonPolygon& np);
NewtonPolygon np_from_json(const nlohmann::json& js);

nlohmann::json tz_report_to_json(const TrivialZeroReport& rep);
TrivialZeroReport tz_report_from_json(const nlohmann::json& js);

nlohmann::json vadic_to_json(const VadicSpecial& vs);
VadicSpecial vadic_from_json(const nlohmann::json& js);

nlohmann::json scan_to_json(const ScanReport& rep);
ScanReport scan_from_json(const nlohmann::json& js);
ScanReport load_scan_report(const std::string& path);

nlohmann::json piseries_to_json(const PiSeries& s);
PiSeries piseries_from_json(const nlohmann::json& js);

nlohmann::json profile_to_json(const std::string& ring_id,
                               const std::vector<DegreeProfileRow>& rows);
std::vector<DegreeProfileRow> profile_rows_from_json(const nlohmann::json& js);

nlohmann::json character_to_json(const DirichletCharacter& chi);
nlohmann::json continuity_to_json(const ContinuityResult& res, uint64_t j1, uint64_t j2, int N);
nlohmann::json unit_roots_to_json(const UnitRootReport& rep);
nlohmann::json hayes_to_json(const std::vector<HayesShiftRow>& rows);
nlohmann::json digit_closure_to_json(const DigitClosureAnalysis& a);

// column order is part of the format: j,l_p,l_r,v0,v1,nonclassical,np_slopes
std::string csv_column_header();
std::string tz_row_csv(const TrivialZeroReport& rep, const NewtonPolygon& np);
std::string scan_to_csv(const ScanReport& rep);
std::string profile_to_csv(const std::vector<DegreeProfileRow>& rows);

} // namespace ffzeta
