#ifndef HILBCAT_DSL_MODEL_HPP
#define HILBCAT_DSL_MODEL_HPP

#include <hilbcat/dsl/cursor.hpp>
#include <hilbcat/subobject.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hilbcat::dsl {

struct ObjectDecl {
  std::string name;
  std::size_t dim = 0;
};

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;
  Morphism mor;
};

struct PredicateDecl {
  std::string name;
  std::string object;
  Subobject sub;
};

/// Formula keywords; not allowed as model names.
inline constexpr std::array<std::string_view, 9> reserved_names{"EX", "TOP", "ALL", "FORALL", "FA",
                                                                "IMP", "OR", "NOT", "EXISTS"};

/// Named objects, morphisms and predicates. Declarations keep their
/// order, and all names share one namespace.
class Model {
 public:
  void add_object(const std::string& name, std::size_t dim) {
    claim(name);
    objects_.push_back({name, dim});
  }

  void add_morphism(const std::string& name, const std::string& dom, const std::string& cod, const Matrix& mat) {
    std::size_t d = object_dim(dom);
    std::size_t c = object_dim(cod);
    if (mat.rows() != c || mat.cols() != d) {
      throw model_error("dimension mismatch: morphism " + name + ": " + dom + " -> " + cod + " needs a " +
                        std::to_string(c) + "x" + std::to_string(d) + " matrix (" + dom + ": " +
                        std::to_string(d) + ", " + cod + ": " + std::to_string(c) + "), got " + mat.shape());
    }
    claim(name);
    morphisms_.push_back({name, dom, cod, Morphism(d, c, mat)});
  }

  void add_predicate(const std::string& name, const std::string& object, const Subobject& sub) {
    std::size_t d = object_dim(object);
    if (sub.ambient() != d) {
      throw model_error("dimension mismatch: predicate " + name + " on " + object + " (" + object + ": " +
                        std::to_string(d) + ") has ambient " + std::to_string(sub.ambient()));
    }
    claim(name);
    predicates_.push_back({name, object, sub});
  }

  std::size_t object_dim(const std::string& name) const {
    for (const auto& o : objects_) {
      if (o.name == name) return o.dim;
    }
    throw model_error("unknown object '" + name + "'");
  }
  bool has_object(const std::string& name) const {
    return std::any_of(objects_.begin(), objects_.end(), [&](const auto& o) { return o.name == name; });
  }
  const MorphismDecl& morphism(const std::string& name) const {
    for (const auto& m : morphisms_) {
      if (m.name == name) return m;
    }
    throw model_error("unknown morphism '" + name + "'");
  }
  const PredicateDecl& predicate(const std::string& name) const {
    for (const auto& p : predicates_) {
      if (p.name == name) return p;
    }
    throw model_error("unknown predicate '" + name + "'");
  }

  const std::vector<ObjectDecl>& objects() const { return objects_; }
  const std::vector<MorphismDecl>& morphisms() const { return morphisms_; }
  const std::vector<PredicateDecl>& predicates() const { return predicates_; }

  /// Normal form: one declaration per line, predicates as projections.
  std::string to_text() const {
    std::ostringstream out;
    for (const auto& o : objects_) out << "object " << o.name << ": " << o.dim << "\n";
    for (const auto& m : morphisms_) {
      out << "morphism " << m.name << ": " << m.dom << " -> " << m.cod << " = " << m.mor.mat() << "\n";
    }
    for (const auto& p : predicates_) {
      out << "predicate " << p.name << " on " << p.object << " = proj " << p.sub.proj() << "\n";
    }
    return out.str();
  }

  friend bool operator==(const Model& a, const Model& b) { return a.to_text() == b.to_text(); }

 private:
  void claim(const std::string& name) {
    if (std::find(reserved_names.begin(), reserved_names.end(), name) != reserved_names.end()) {
      throw model_error("'" + name + "' is a reserved word");
    }
    if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
      throw model_error("duplicate name '" + name + "'");
    }
    names_.push_back(name);
  }

  std::vector<std::string> names_;
  std::vector<ObjectDecl> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<PredicateDecl> predicates_;
};

namespace detail {

inline void parse_declaration(Model& model, Cursor& cur) {
  cur.peek();
  std::size_t start = cur.column();
  std::string keyword = cur.ident("a declaration keyword");
  // Validation failures are reported at the start of the declaration.
  auto located = [&](auto&& action) {
    try {
      action();
    } catch (const model_error& e) {
      throw model_error(std::to_string(start) + ": " + e.what());
    } catch (const usage_error& e) {
      throw model_error(std::to_string(start) + ": " + e.what());
    }
  };
  if (keyword == "object") {
    std::string name = cur.ident();
    cur.expect(":");
    std::size_t dim = cur.natural();
    if (!cur.at_end()) cur.fail("unexpected text after declaration");
    located([&] { model.add_object(name, dim); });
  } else if (keyword == "morphism") {
    std::string name = cur.ident();
    cur.expect(":");
    std::string dom = cur.ident("a domain object");
    cur.expect("->");
    std::string cod = cur.ident("a codomain object");
    cur.expect("=");
    std::size_t cols = model.has_object(dom) ? model.object_dim(dom) : 0;
    Matrix mat = cur.matrix(cols);
    if (!cur.at_end()) cur.fail("unexpected text after matrix");
    located([&] { model.add_morphism(name, dom, cod, mat); });
  } else if (keyword == "predicate") {
    std::string name = cur.ident();
    if (!cur.accept_keyword("on")) cur.fail("expected 'on'");
    std::string object = cur.ident("an object");
    cur.expect("=");
    std::size_t dim = 0;
    located([&] { dim = model.object_dim(object); });
    Subobject sub;
    if (cur.accept_keyword("span")) {
      std::vector<Matrix> vectors;
      if (!cur.at_end()) {
        do {
          std::size_t col = cur.column();
          Matrix v = cur.vector();
          if (v.rows() != dim) {
            throw model_error(std::to_string(col) + ": dimension mismatch: predicate " + name + " on " + object +
                              " (" + object + ": " + std::to_string(dim) + ") spanned by a vector of length " +
                              std::to_string(v.rows()));
          }
          vectors.push_back(std::move(v));
        } while (cur.accept(","));
      }
      if (!cur.at_end()) cur.fail("unexpected text after span");
      sub = from_span(dim, Matrix::from_columns(dim, vectors));
    } else if (cur.accept_keyword("proj")) {
      Matrix p = cur.matrix(dim);
      if (!cur.at_end()) cur.fail("unexpected text after matrix");
      located([&] { sub = Subobject::from_projection(p); });
    } else {
      cur.fail("expected 'span' or 'proj'");
    }
    located([&] { model.add_predicate(name, object, sub); });
  } else {
    cur.fail_at(start, "unknown declaration '" + keyword + "'");
  }
}

}  // namespace detail

/// Line-oriented model text; `#` starts a comment.
inline Model parse_model(std::string_view text) {
  Model model;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.at_end()) continue;
    try {
      detail::parse_declaration(model, cur);
    } catch (const model_error& e) {
      throw model_error("line " + std::to_string(line_no) + ":" + e.what());
    }
  }
  return model;
}

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_MODEL_HPP
