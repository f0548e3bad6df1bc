#pragma once

#include <string>

#include "pi_methods.hpp"

namespace pienc {

// One convergence-table line; lo/hi/width are outward-rounded decimal strings
// (lo down, hi up), so a printed row still encloses pi.
struct ReportRow {
    std::string method;
    unsigned long work = 0;
    std::string lo;
    std::string hi;
    std::string width;
};

// longest decimal prefix shared by the outward-rounded endpoint strings;
// empty when even the leading digit disagrees
std::string guaranteed_digits(const Interval& v);

// numerals in that prefix ("3.1415" counts as 5 digits)
int guaranteed_digit_count(const Interval& v);

// print precision: two fractional digits beyond the agreement prefix
int adaptive_frac_digits(const Interval& v);

// decimal width string at a precision that resolves the width's magnitude
std::string width_string(const Interval& v);

ReportRow make_row(const Enclosure& e, int frac_digits); // frac_digits <= 0: adaptive
std::string csv_header();
std::string csv_line(const ReportRow& r);

} // namespace pienc
