#ifndef MULTLAB_FUNCSPEC_HPP
#define MULTLAB_FUNCSPEC_HPP

#include <string>

#include "multlab/gallery.hpp"

namespace multlab::funcspec {

// Textual function specs, e.g.
//   moebius
//   moebius_twist:gamma=0.3
//   conv(moebius_twist:gamma=0.08,moebius_twist:gamma=0.4)
//   remark:D=2  tau:k=3  char:q=5  twist(char:q=5,gamma=0.1)
// parse(print(e)) is the identity on canonical forms; gallery labels are
// canonical.
gallery::GalleryEntry parse(const std::string& text);

std::string print(const gallery::GalleryEntry& entry);

// Caret-annotated message for a ParseError raised by parse().
std::string annotate_error(const std::string& text, const ParseError& err);

}  // namespace multlab::funcspec

#endif
