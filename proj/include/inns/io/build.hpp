#ifndef INNS_IO_BUILD_HPP
#define INNS_IO_BUILD_HPP

#include "inns/family/family.hpp"
#include "inns/io/document.hpp"

namespace inns::io {

/// Local-ordering version of the document ring.
kernel::RingPtr local_ring(const Document& doc);

std::vector<branch::Branch> make_branches(const Document& doc, const std::vector<std::string>& names,
                                          int precision = branch::kDefaultPrecision);

invariants::InnsPresentation make_presentation(const Document& doc, const PresentationDecl& decl,
                                               int precision = branch::kDefaultPrecision);

family::FamilyPresentation make_family(const Document& doc, const FamilyDecl& decl);

/// Branches of the first curve, or every declared branch without one.
std::vector<branch::Branch> curve_branches(const Document& doc, int precision = branch::kDefaultPrecision);

}  // namespace inns::io

#endif  // INNS_IO_BUILD_HPP
