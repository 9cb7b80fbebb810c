#ifndef INNS_IO_DOCUMENT_HPP
#define INNS_IO_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inns/io/lexer.hpp"
#include "inns/kernel/polynomial.hpp"

namespace inns::io {

using kernel::Polynomial;
using kernel::Rational;

struct RingDecl {
  std::string name;
  std::vector<std::string> variables;
  std::string ordering = "ds";  // "ds" or "dp"
  friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct IdealDecl {
  std::string name;
  std::vector<Polynomial> generators;
  friend bool operator==(const IdealDecl&, const IdealDecl&) = default;
};

struct PolyDecl {
  std::string name;
  Polynomial value;
  friend bool operator==(const PolyDecl&, const PolyDecl&) = default;
};

/// Components are polynomials in the branch ring with the single variable t.
struct BranchDecl {
  std::string name;
  std::vector<Polynomial> components;
  friend bool operator==(const BranchDecl&, const BranchDecl&) = default;
};

struct ComponentDecl {
  std::string name;
  std::vector<Polynomial> generators;
  std::optional<int> dimension;
  std::optional<std::int64_t> branch_count;
  std::optional<std::int64_t> delta;
  bool smooth = false;
  std::vector<std::string> branches;
  friend bool operator==(const ComponentDecl&, const ComponentDecl&) = default;
};

struct PresentationDecl {
  std::string name;
  std::vector<ComponentDecl> components;
  std::optional<std::vector<Polynomial>> embedded;
  std::optional<std::vector<Polynomial>> full;
  friend bool operator==(const PresentationDecl&, const PresentationDecl&) = default;
};

struct CurveDecl {
  std::string name;
  std::vector<std::string> branches;
  friend bool operator==(const CurveDecl&, const CurveDecl&) = default;
};

struct PointDecl {
  std::string name;
  std::vector<Polynomial> coordinates;
  friend bool operator==(const PointDecl&, const PointDecl&) = default;
};

struct FibreDataDecl {
  std::string component;
  std::optional<std::int64_t> branch_count;
  std::optional<std::int64_t> delta;
  bool smooth = false;
  friend bool operator==(const FibreDataDecl&, const FibreDataDecl&) = default;
};

struct FamilyDecl {
  std::string name;
  std::string parameter = "t";
  std::vector<ComponentDecl> components;
  std::optional<PointDecl> section;
  std::vector<PointDecl> points;
  std::vector<FibreDataDecl> central;
  std::vector<FibreDataDecl> generic;
  std::vector<Rational> samples;  // empty: defaults
  friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

/// Parsed input. Ideal and polynomial references are resolved to their
/// generators while parsing; branch names are kept.
struct Document {
  std::optional<RingDecl> ring;
  kernel::RingPtr ring_ptr;        // built from `ring`
  kernel::RingPtr branch_ring;     // local ring in t
  std::vector<IdealDecl> ideals;
  std::vector<PolyDecl> polys;
  std::vector<BranchDecl> branches;
  std::vector<PresentationDecl> presentations;
  std::vector<CurveDecl> curves;
  std::vector<FamilyDecl> families;

  const BranchDecl* find_branch(const std::string& name) const;

  // Compares the syntax tree, not the ring pointers.
  friend bool operator==(const Document& a, const Document& b);
};

/// Full document or the first error as ParseError with line and column.
Document parse_document(const std::string& text);

/// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const Document& doc);

}  // namespace inns::io

#endif  // INNS_IO_DOCUMENT_HPP
