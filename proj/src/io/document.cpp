#include "inns/io/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "inns/io/expression.hpp"
#include "inns/kernel/ring.hpp"

namespace inns::io {

const BranchDecl* Document::find_branch(const std::string& name) const {
  for (const auto& b : branches) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool operator==(const Document& a, const Document& b) {
  return a.ring == b.ring && a.ideals == b.ideals && a.polys == b.polys && a.branches == b.branches &&
         a.presentations == b.presentations && a.curves == b.curves && a.families == b.families;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : ts_(tokenize(text)) {
    doc_.branch_ring = kernel::make_local_ring({"t"});
  }

  Document run() {
    while (!ts_.at_end()) statement();
    return std::move(doc_);
  }

 private:
  TokenStream ts_;
  Document doc_;
  std::set<std::string> names_;

  void statement() {
    const Token& t = ts_.peek();
    if (t.kind != TokenKind::Identifier) ts_.fail("expected a declaration");
    if (t.text == "ring") return ring_decl();
    if (t.text == "ideal") return ideal_decl();
    if (t.text == "poly") return poly_decl();
    if (t.text == "branch") return branch_decl();
    if (t.text == "presentation") return presentation_decl();
    if (t.text == "curve") return curve_decl();
    if (t.text == "family") return family_decl();
    ts_.fail("unknown statement '" + t.text + "'");
  }

  const kernel::RingPtr& ring() {
    if (!doc_.ring_ptr) ts_.fail("no ring declared before this statement");
    return doc_.ring_ptr;
  }

  std::string new_name(const std::string& what) {
    const Token& tok = ts_.peek();
    std::string name = ts_.expect_identifier(what + " name").text;
    if (names_.count(name)) ts_.fail_at(tok, "duplicate name '" + name + "'");
    if (doc_.ring_ptr && doc_.ring_ptr->index_of(name)) {
      ts_.fail_at(tok, "name '" + name + "' clashes with a ring variable");
    }
    names_.insert(name);
    return name;
  }

  void ring_decl() {
    const Token& start = ts_.next();
    if (doc_.ring) ts_.fail_at(start, "only one ring may be declared");
    RingDecl r;
    r.name = new_name("ring");
    ts_.expect_symbol("=");
    ts_.expect_symbol("(");
    std::set<std::string> seen;
    do {
      const Token& v = ts_.expect_identifier("variable");
      if (!seen.insert(v.text).second) ts_.fail_at(v, "duplicate variable '" + v.text + "'");
      if (names_.count(v.text)) ts_.fail_at(v, "variable '" + v.text + "' clashes with a declared name");
      r.variables.push_back(v.text);
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(")");
    if (ts_.accept_symbol(",")) {
      const Token& o = ts_.expect_identifier("ordering");
      if (o.text != "ds" && o.text != "dp") ts_.fail_at(o, "unknown ordering '" + o.text + "' (use ds or dp)");
      r.ordering = o.text;
    }
    ts_.expect_symbol(";");
    doc_.ring_ptr = r.ordering == "ds" ? kernel::make_local_ring(r.variables) : kernel::make_global_ring(r.variables);
    doc_.ring = std::move(r);
  }

  bool at_list_end(std::size_t ahead) const {
    const Token& t = ts_.peek(ahead);
    return t.kind == TokenKind::End ||
           (t.kind == TokenKind::Symbol && (t.text == "," || t.text == ";" || t.text == ":" || t.text == "}"));
  }

  // One list item: a polynomial, or the name of a declared ideal or poly.
  void generator_item(std::vector<Polynomial>& out) {
    const Token& t = ts_.peek();
    if (t.kind == TokenKind::Identifier && at_list_end(1) && !ring()->index_of(t.text)) {
      for (const auto& i : doc_.ideals) {
        if (i.name == t.text) {
          ts_.next();
          out.insert(out.end(), i.generators.begin(), i.generators.end());
          return;
        }
      }
      for (const auto& p : doc_.polys) {
        if (p.name == t.text) {
          ts_.next();
          out.push_back(p.value);
          return;
        }
      }
      ts_.fail("unknown identifier '" + t.text + "'");
    }
    out.push_back(parse_polynomial(ts_, ring()));
  }

  std::vector<Polynomial> generator_list() {
    std::vector<Polynomial> gens;
    do {
      generator_item(gens);
    } while (ts_.accept_symbol(","));
    return gens;
  }

  void ideal_decl() {
    ts_.next();
    ring();
    IdealDecl d;
    d.name = new_name("ideal");
    ts_.expect_symbol("=");
    d.generators = generator_list();
    ts_.expect_symbol(";");
    doc_.ideals.push_back(std::move(d));
  }

  void poly_decl() {
    ts_.next();
    ring();
    PolyDecl d{new_name("poly"), Polynomial(doc_.ring_ptr)};
    ts_.expect_symbol("=");
    std::vector<Polynomial> one;
    generator_item(one);
    d.value = one.front();
    ts_.expect_symbol(";");
    doc_.polys.push_back(std::move(d));
  }

  std::vector<Polynomial> param_list() {
    ts_.expect_word("param");
    ts_.expect_symbol("(");
    std::vector<Polynomial> comps;
    do {
      comps.push_back(parse_polynomial(ts_, doc_.branch_ring));
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(")");
    return comps;
  }

  void branch_decl() {
    ts_.next();
    BranchDecl b;
    b.name = new_name("branch");
    ts_.expect_symbol("=");
    const Token& at = ts_.peek();
    b.components = param_list();
    if (doc_.ring_ptr && b.components.size() != doc_.ring_ptr->var_count()) {
      std::ostringstream os;
      os << "arity mismatch: branch has " << b.components.size() << " components but the ring has "
         << doc_.ring_ptr->var_count() << " variables";
      ts_.fail_at(at, os.str());
    }
    ts_.expect_symbol(";");
    doc_.branches.push_back(std::move(b));
  }

  std::string branch_ref() {
    const Token& t = ts_.expect_identifier("branch name");
    if (!doc_.find_branch(t.text)) ts_.fail_at(t, "unknown branch '" + t.text + "'");
    return t.text;
  }

  std::int64_t integer_value(const std::string& what) {
    bool neg = ts_.accept_symbol("-");
    long long v = ts_.expect_integer(what);
    return neg ? -v : v;
  }

  ComponentDecl component(std::set<std::string>& local_names) {
    ts_.expect_word("component");
    ComponentDecl c;
    const Token& nt = ts_.peek();
    c.name = ts_.expect_identifier("component name").text;
    if (!local_names.insert(c.name).second) ts_.fail_at(nt, "duplicate component '" + c.name + "'");
    ts_.expect_symbol("=");
    c.generators = generator_list();
    if (ts_.accept_symbol(":")) {
      do {
        const Token& a = ts_.expect_identifier("component attribute");
        if (a.text == "dim") {
          c.dimension = static_cast<int>(ts_.expect_integer("dimension"));
        } else if (a.text == "branches") {
          c.branch_count = ts_.expect_integer("branch count");
        } else if (a.text == "delta") {
          c.delta = integer_value("delta");
        } else if (a.text == "smooth") {
          c.smooth = true;
        } else if (a.text == "branch") {
          c.branches.push_back(branch_ref());
        } else {
          ts_.fail_at(a, "unknown component attribute '" + a.text + "'");
        }
      } while (ts_.accept_symbol(","));
    }
    ts_.expect_symbol(";");
    for (const auto& bn : c.branches) {
      const auto* b = doc_.find_branch(bn);
      if (b->components.size() != ring()->var_count()) {
        ts_.fail_at(nt, "arity mismatch: branch '" + bn + "' does not match the ring");
      }
    }
    return c;
  }

  void presentation_decl() {
    ts_.next();
    ring();
    PresentationDecl p;
    p.name = new_name("presentation");
    ts_.expect_symbol("{");
    std::set<std::string> local;
    while (!ts_.accept_symbol("}")) {
      if (ts_.is_word("component")) {
        p.components.push_back(component(local));
      } else if (ts_.accept_word("embedded")) {
        if (p.embedded) ts_.fail("embedded ideal given twice");
        ts_.expect_symbol("=");
        p.embedded = generator_list();
        ts_.expect_symbol(";");
      } else if (ts_.accept_word("full")) {
        if (p.full) ts_.fail("full ideal given twice");
        ts_.expect_symbol("=");
        p.full = generator_list();
        ts_.expect_symbol(";");
      } else {
        ts_.fail("expected component, embedded or full");
      }
    }
    doc_.presentations.push_back(std::move(p));
  }

  void curve_decl() {
    ts_.next();
    CurveDecl c;
    c.name = new_name("curve");
    ts_.expect_symbol("=");
    const Token& at = ts_.peek();
    do {
      c.branches.push_back(branch_ref());
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(";");
    std::size_t arity = doc_.find_branch(c.branches.front())->components.size();
    for (const auto& bn : c.branches) {
      if (doc_.find_branch(bn)->components.size() != arity) {
        ts_.fail_at(at, "arity mismatch between the branches of curve '" + c.name + "'");
      }
    }
    doc_.curves.push_back(std::move(c));
  }

  PointDecl point(const std::string& name) {
    PointDecl p{name, {}};
    ts_.expect_symbol("=");
    const Token& at = ts_.expect_symbol("(");
    do {
      p.coordinates.push_back(parse_polynomial(ts_, ring()));
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(")");
    ts_.expect_symbol(";");
    if (p.coordinates.size() + 1 != ring()->var_count()) {
      ts_.fail_at(at, "arity mismatch: a point needs one coordinate per non-parameter variable");
    }
    return p;
  }

  FibreDataDecl fibre_data() {
    FibreDataDecl d;
    d.component = ts_.expect_identifier("component name").text;
    ts_.expect_symbol(":");
    do {
      const Token& a = ts_.expect_identifier("fibre attribute");
      if (a.text == "branches") {
        d.branch_count = ts_.expect_integer("branch count");
      } else if (a.text == "delta") {
        d.delta = integer_value("delta");
      } else if (a.text == "smooth") {
        d.smooth = true;
      } else {
        ts_.fail_at(a, "unknown fibre attribute '" + a.text + "'");
      }
    } while (ts_.accept_symbol(","));
    ts_.expect_symbol(";");
    return d;
  }

  void family_decl() {
    ts_.next();
    ring();
    FamilyDecl f;
    f.name = new_name("family");
    ts_.expect_symbol("{");
    std::set<std::string> local;
    std::set<std::string> points;
    bool have_parameter = false;
    std::vector<std::pair<Token, std::string>> data_refs;
    while (!ts_.accept_symbol("}")) {
      if (ts_.is_word("parameter")) {
        const Token& kw = ts_.next();
        if (have_parameter) ts_.fail_at(kw, "exactly one parameter per family");
        have_parameter = true;
        const Token& v = ts_.expect_identifier("parameter variable");
        if (!ring()->index_of(v.text)) ts_.fail_at(v, "unknown variable '" + v.text + "'");
        f.parameter = v.text;
        ts_.expect_symbol(";");
      } else if (ts_.is_word("component")) {
        f.components.push_back(component(local));
      } else if (ts_.accept_word("section")) {
        if (f.section) ts_.fail("section given twice");
        const Token& n = ts_.peek();
        std::string name = ts_.expect_identifier("section name").text;
        if (!points.insert(name).second) ts_.fail_at(n, "duplicate point '" + name + "'");
        f.section = point(name);
      } else if (ts_.accept_word("point")) {
        const Token& n = ts_.peek();
        std::string name = ts_.expect_identifier("point name").text;
        if (!points.insert(name).second) ts_.fail_at(n, "duplicate point '" + name + "'");
        f.points.push_back(point(name));
      } else if (ts_.is_word("central") || ts_.is_word("generic")) {
        bool central = ts_.next().text == "central";
        Token at = ts_.peek();
        auto d = fibre_data();
        data_refs.emplace_back(at, d.component);
        (central ? f.central : f.generic).push_back(std::move(d));
      } else if (ts_.accept_word("samples")) {
        do {
          const Token& at = ts_.peek();
          Rational q = parse_rational(ts_);
          if (q == 0) ts_.fail_at(at, "samples must be nonzero");
          f.samples.push_back(q);
        } while (ts_.accept_symbol(","));
        ts_.expect_symbol(";");
      } else {
        ts_.fail("expected parameter, component, section, point, central, generic or samples");
      }
    }
    if (!have_parameter && !ring()->index_of(f.parameter)) {
      ts_.fail("family '" + f.name + "' needs a parameter declaration");
    }
    for (const auto& [tok, name] : data_refs) {
      if (!local.count(name)) ts_.fail_at(tok, "unknown component '" + name + "'");
    }
    doc_.families.push_back(std::move(f));
  }
};

void print_list(std::ostream& os, const std::vector<Polynomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].to_string();
}

void print_component(std::ostream& os, const ComponentDecl& c) {
  os << "  component " << c.name << " = ";
  print_list(os, c.generators);
  std::vector<std::string> attrs;
  if (c.dimension) attrs.push_back("dim " + std::to_string(*c.dimension));
  if (c.branch_count) attrs.push_back("branches " + std::to_string(*c.branch_count));
  if (c.delta) attrs.push_back("delta " + std::to_string(*c.delta));
  if (c.smooth) attrs.push_back("smooth");
  for (const auto& b : c.branches) attrs.push_back("branch " + b);
  for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : " : ") << attrs[i];
  os << ";\n";
}

void print_point(std::ostream& os, const char* kw, const PointDecl& p) {
  os << "  " << kw << " " << p.name << " = (";
  print_list(os, p.coordinates);
  os << ");\n";
}

void print_fibre_data(std::ostream& os, const char* kw, const FibreDataDecl& d) {
  std::vector<std::string> attrs;
  if (d.branch_count) attrs.push_back("branches " + std::to_string(*d.branch_count));
  if (d.delta) attrs.push_back("delta " + std::to_string(*d.delta));
  if (d.smooth) attrs.push_back("smooth");
  os << "  " << kw << " " << d.component << " :";
  for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : " ") << attrs[i];
  os << ";\n";
}

}  // namespace

Document parse_document(const std::string& text) { return Parser(text).run(); }

std::string print_document(const Document& doc) {
  std::ostringstream os;
  if (doc.ring) {
    os << "ring " << doc.ring->name << " = (";
    for (std::size_t i = 0; i < doc.ring->variables.size(); ++i) os << (i ? "," : "") << doc.ring->variables[i];
    os << "), " << doc.ring->ordering << ";\n";
  }
  for (const auto& i : doc.ideals) {
    os << "ideal " << i.name << " = ";
    print_list(os, i.generators);
    os << ";\n";
  }
  for (const auto& p : doc.polys) os << "poly " << p.name << " = " << p.value.to_string() << ";\n";
  for (const auto& b : doc.branches) {
    os << "branch " << b.name << " = param(";
    print_list(os, b.components);
    os << ");\n";
  }
  for (const auto& p : doc.presentations) {
    os << "presentation " << p.name << " {\n";
    for (const auto& c : p.components) print_component(os, c);
    if (p.embedded) {
      os << "  embedded = ";
      print_list(os, *p.embedded);
      os << ";\n";
    }
    if (p.full) {
      os << "  full = ";
      print_list(os, *p.full);
      os << ";\n";
    }
    os << "}\n";
  }
  for (const auto& c : doc.curves) {
    os << "curve " << c.name << " = ";
    for (std::size_t i = 0; i < c.branches.size(); ++i) os << (i ? ", " : "") << c.branches[i];
    os << ";\n";
  }
  for (const auto& f : doc.families) {
    os << "family " << f.name << " {\n";
    os << "  parameter " << f.parameter << ";\n";
    for (const auto& c : f.components) print_component(os, c);
    if (f.section) print_point(os, "section", *f.section);
    for (const auto& p : f.points) print_point(os, "point", p);
    for (const auto& d : f.central) print_fibre_data(os, "central", d);
    for (const auto& d : f.generic) print_fibre_data(os, "generic", d);
    if (!f.samples.empty()) {
      os << "  samples ";
      for (std::size_t i = 0; i < f.samples.size(); ++i) os << (i ? ", " : "") << f.samples[i].get_str();
      os << ";\n";
    }
    os << "}\n";
  }
  return os.str();
}

}  // namespace inns::io
