#pragma once

#include <string>

#include "interval.hpp"

namespace pienc {

// Inscribed-polyline witness that the quarter-arc length exists: chords of
// y = sqrt(1 - x^2) over a uniform x-grid. `length` encloses the true polyline
// length, which is itself a lower bound for the arc.
struct PolylineResult {
    unsigned long segments = 0;
    Interval length;
};

PolylineResult inscribed_polyline(unsigned long segments, int bits);

// The circular-definition walkthrough: sections CYCLE, PARAMETRIC-DEAD-END,
// REPAIR. The machine form is a flat key=value list, one node per line.
std::string demo_circularity_text();
std::string demo_circularity_machine();

} // namespace pienc
