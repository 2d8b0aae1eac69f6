#ifndef FATPOINTS_RENDER_HPP
#define FATPOINTS_RENDER_HPP

#include <string>

#include "fatpoints/certificate.hpp"

namespace fatpoints {

// Dot-grid figures in the style of the lemma illustrations: a faint lattice,
// filled diagram points, and cut lines where a certificate applies one.

std::string render_diagram_ascii(const Diagram& d);
std::string render_diagram_svg(const Diagram& d);

// One panel per cut application, depth-first.
std::string render_certificate_ascii(const CutCertificate& cert);
std::string render_certificate_svg(const CutCertificate& cert);

} // namespace fatpoints

#endif
