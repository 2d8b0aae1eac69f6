#ifndef FATPOINTS_TEXTIO_HPP
#define FATPOINTS_TEXTIO_HPP

#include <string>

#include "fatpoints/system.hpp"

namespace fatpoints {

// Column notation "2^3,1^0" or explicit point list "[(0,3),(0,4),(1,0)]".
Diagram parse_diagram(const std::string& text);

// Column notation when the diagram is a union of contiguous columns,
// point list otherwise.
std::string format_diagram(const Diagram& d);

// "7x6,6x4,1": comma-separated m or mxk terms.
MultiplicityList parse_mults(const std::string& text);

std::string format_mults(const MultiplicityList& m);

} // namespace fatpoints

#endif
