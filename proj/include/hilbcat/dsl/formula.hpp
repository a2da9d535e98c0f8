#ifndef HILBCAT_DSL_FORMULA_HPP
#define HILBCAT_DSL_FORMULA_HPP

#include <hilbcat/dsl/model.hpp>
#include <hilbcat/laws.hpp>

#include <memory>
#include <string>
#include <string_view>

namespace hilbcat::dsl {

/// Regular-logic formulas: TOP@X, atoms, conjunction, existential
/// quantification along a morphism and substitution along a morphism.
/// Every formula is typed by the object it lives over.
class Formula {
 public:
  enum class Kind { top, atom, conj, exists, subst };

  Kind kind() const { return node_->kind; }
  /// Object name for top, predicate for atom, morphism for exists/subst.
  const std::string& symbol() const { return node_->symbol; }
  /// The object the formula lives over.
  const std::string& object() const { return node_->object; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  const Formula& body() const { return *node_->left; }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.symbol() != b.symbol() || a.object() != b.object()) return false;
    switch (a.kind()) {
      case Kind::top:
      case Kind::atom:
        return true;
      case Kind::conj:
        return a.left() == b.left() && a.right() == b.right();
      case Kind::exists:
      case Kind::subst:
        return a.body() == b.body();
    }
    return false;
  }

  static Formula top(const Model& model, const std::string& object) {
    model.object_dim(object);
    return Formula(Kind::top, object, object, nullptr, nullptr);
  }
  static Formula atom(const Model& model, const std::string& predicate) {
    return Formula(Kind::atom, predicate, model.predicate(predicate).object, nullptr, nullptr);
  }
  static Formula conj(const Formula& lhs, const Formula& rhs) {
    if (lhs.object() != rhs.object()) {
      throw type_error("type error in '&': left side lives over " + lhs.object() + ", right side over " +
                       rhs.object());
    }
    return Formula(Kind::conj, "", lhs.object(), lhs, rhs);
  }
  /// EX f . body, with body over dom(f); lives over cod(f).
  static Formula exists(const Model& model, const std::string& f, const Formula& body) {
    const MorphismDecl& m = model.morphism(f);
    if (body.object() != m.dom) {
      throw type_error("type error in 'EX " + f + "': expected a formula over " + m.dom + " (dom of " + f +
                       "), got one over " + body.object());
    }
    return Formula(Kind::exists, f, m.cod, body, nullptr);
  }
  /// body [f], with body over cod(f); lives over dom(f).
  static Formula subst(const Model& model, const std::string& f, const Formula& body) {
    const MorphismDecl& m = model.morphism(f);
    if (body.object() != m.cod) {
      throw type_error("type error in '[" + f + "]': expected a formula over " + m.cod + " (cod of " + f +
                       "), got one over " + body.object());
    }
    return Formula(Kind::subst, f, m.dom, body, nullptr);
  }

 private:
  struct Node {
    Kind kind;
    std::string symbol;
    std::string object;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
  };

  Formula(Kind kind, std::string symbol, std::string object, std::shared_ptr<const Formula> left,
          std::shared_ptr<const Formula> right)
      : node_(std::make_shared<const Node>(
            Node{kind, std::move(symbol), std::move(object), std::move(left), std::move(right)})) {}
  Formula(Kind kind, std::string symbol, std::string object, const Formula& left, std::nullptr_t)
      : Formula(kind, std::move(symbol), std::move(object), std::make_shared<const Formula>(left), nullptr) {}
  Formula(Kind kind, std::string symbol, std::string object, const Formula& left, const Formula& right)
      : Formula(kind, std::move(symbol), std::move(object), std::make_shared<const Formula>(left),
                std::make_shared<const Formula>(right)) {}

  std::shared_ptr<const Node> node_;
};

namespace detail {

/// Grammar, loosest first:
///   formula := term ('&' term)*
///   term    := 'EX' NAME '.' formula | postfix
///   postfix := primary ('[' NAME ']')*
///   primary := 'TOP' '@' NAME | NAME | '(' formula ')'
/// The body of EX extends as far right as possible.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Model& model) : cur_(text, 1), model_(model) {}

  Formula parse() {
    Formula f = formula();
    if (!cur_.at_end()) unexpected();
    return f;
  }

 private:
  Formula formula() {
    Formula f = term();
    while (true) {
      reject_connectives();
      cur_.peek();
      std::size_t col = cur_.column();
      if (!cur_.accept("&")) break;
      Formula rhs = term();
      f = typed([&] { return Formula::conj(f, rhs); }, col);
    }
    return f;
  }

  Formula term() {
    reject_connectives();
    if (cur_.accept_keyword("EX")) {
      std::size_t col = cur_.column();
      std::string f = cur_.ident("a morphism after EX");
      cur_.expect(".");
      Formula body = formula();
      return typed([&] { return Formula::exists(model_, f, body); }, col);
    }
    return postfix();
  }

  Formula postfix() {
    Formula f = primary();
    while (cur_.accept("[")) {
      std::size_t col = cur_.column();
      std::string m = cur_.ident("a morphism to substitute along");
      cur_.expect("]");
      f = typed([&] { return Formula::subst(model_, m, f); }, col);
    }
    return f;
  }

  Formula primary() {
    reject_connectives();
    if (cur_.accept("(")) {
      Formula f = formula();
      cur_.expect(")");
      return f;
    }
    if (cur_.accept_keyword("TOP")) {
      cur_.expect("@");
      std::size_t col = cur_.column();
      std::string x = cur_.ident("an object after TOP@");
      return typed([&] { return Formula::top(model_, x); }, col);
    }
    cur_.peek();
    std::size_t col = cur_.column();
    if (cur_.at_end()) cur_.fail("unexpected end of formula");
    if (!is_ident_start(cur_.peek())) unexpected();
    std::string p = cur_.ident("a predicate");
    return typed([&] { return Formula::atom(model_, p); }, col);
  }

  template <class F>
  Formula typed(F&& build, std::size_t col = 0) {
    try {
      return build();
    } catch (const model_error& e) {
      throw parse_error(1, col ? col : cur_.column(), e.what());
    } catch (const type_error& e) {
      throw type_error("1:" + std::to_string(col ? col : cur_.column()) + ": " + e.what());
    }
  }

  void reject_connectives() {
    cur_.peek();
    std::size_t col = cur_.column();
    for (std::string_view kw : {"ALL", "FORALL", "FA"}) {
      if (cur_.accept_keyword(kw)) {
        cur_.fail_at(col,
            "there is no universal quantifier: substitution along a morphism has no right adjoint satisfying "
            "Beck-Chevalley, since closed subobjects do not form a Heyting algebra (try `search "
            "--counterexample distributivity`)");
      }
    }
    if (cur_.peek_is("=>") || cur_.peek_is("->") || cur_.accept_keyword("IMP")) {
      cur_.fail_at(col,
          "there is no implication: meet has no right adjoint on closed subobjects, which are not a Heyting "
          "algebra (try `search --counterexample distributivity`)");
    }
    if (cur_.peek_is("|") || cur_.peek_is("~") || cur_.peek_is("!") || cur_.accept_keyword("OR") ||
        cur_.accept_keyword("NOT")) {
      cur_.fail_at(col, "disjunction and negation are not formula connectives; join and orthocomplement are "
                "available through the `lattice` command");
    }
  }

  [[noreturn]] void unexpected() {
    cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
  }

  Cursor cur_;
  const Model& model_;
};

enum class Context { tail, left, right_tail, right, base };

inline std::string print(const Formula& f, Context ctx) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::top:
      return "TOP@" + f.symbol();
    case K::atom:
      return f.symbol();
    case K::subst:
      return print(f.body(), Context::base) + " [" + f.symbol() + "]";
    case K::exists: {
      std::string s = "EX " + f.symbol() + " . " + print(f.body(), Context::tail);
      return (ctx == Context::tail || ctx == Context::right_tail) ? s : "(" + s + ")";
    }
    case K::conj: {
      bool parens = ctx == Context::right || ctx == Context::right_tail || ctx == Context::base;
      Context inner = parens ? Context::tail : ctx;
      std::string s = print(f.left(), Context::left) + " & " +
                      print(f.right(), inner == Context::tail ? Context::right_tail : Context::right);
      return parens ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace detail

/// Parses and type-checks against `model`. Unknown names and syntax
/// problems raise parse_error; mismatched objects raise type_error.
inline Formula parse_formula(std::string_view text, const Model& model) {
  return detail::FormulaParser(text, model).parse();
}

/// Normal form text; parse_formula(to_string(f)) == f.
inline std::string to_string(const Formula& f) { return detail::print(f, detail::Context::tail); }

inline Subobject eval_formula(const Model& model, const Formula& phi) {
  using K = Formula::Kind;
  switch (phi.kind()) {
    case K::top:
      return Subobject::top(model.object_dim(phi.symbol()));
    case K::atom:
      return model.predicate(phi.symbol()).sub;
    case K::conj:
      return sub_meet(eval_formula(model, phi.left()), eval_formula(model, phi.right()));
    case K::exists:
      return exists_along(model.morphism(phi.symbol()).mor, eval_formula(model, phi.body()));
    case K::subst:
      return preimage(model.morphism(phi.symbol()).mor, eval_formula(model, phi.body()));
  }
  throw std::logic_error("unreachable formula kind");
}

/// phi |= psi, i.e. [[phi]] <= [[psi]].
inline bool check_entailment(const Model& model, const Formula& phi, const Formula& psi) {
  if (phi.object() != psi.object()) {
    throw type_error("entailment between formulas over different objects: " + phi.object() + " and " +
                     psi.object());
  }
  return sub_leq(eval_formula(model, phi), eval_formula(model, psi));
}

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_FORMULA_HPP
